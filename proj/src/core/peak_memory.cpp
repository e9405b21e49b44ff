#include "core/peak_memory.hpp"

#include <fstream>
#include <string>

namespace ddm {

bool reset_peak_rss() {
  std::ofstream clear("/proc/self/clear_refs");
  if (!clear) return false;
  clear << "5";
  clear.flush();
  return static_cast<bool>(clear);
}

std::optional<std::uint64_t> peak_rss_bytes() {
  std::ifstream status("/proc/self/status");
  std::string line;
  while (std::getline(status, line)) {
    if (line.rfind("VmHWM:", 0) != 0) continue;
    const auto kb = std::stoull(line.substr(6));
    return std::uint64_t{kb} * 1024;
  }
  return std::nullopt;
}

bool peak_rss_supported() {
  static const bool supported = peak_rss_bytes().has_value() && reset_peak_rss();
  return supported;
}

std::optional<std::uint64_t> measure_peak_memory(const std::function<void()>& fn) {
  if (!peak_rss_supported()) {
    fn();
    return std::nullopt;
  }
  reset_peak_rss();
  fn();
  return peak_rss_bytes();
}

}  // namespace ddm
