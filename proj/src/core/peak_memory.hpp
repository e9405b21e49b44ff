#pragma once

#include <cstdint>
#include <functional>
#include <optional>

namespace ddm {

// Peak resident set size of this process (Linux VmHWM). The peak can be reset
// through /proc/self/clear_refs, which lets a single run be measured in
// isolation. Other platforms report the capability as unavailable.
bool peak_rss_supported();
bool reset_peak_rss();
std::optional<std::uint64_t> peak_rss_bytes();

// Resets the peak, runs `fn`, and returns the peak observed while it ran, or
// nullopt when unsupported (fn still runs).
std::optional<std::uint64_t> measure_peak_memory(const std::function<void()>& fn);

}  // namespace ddm
