#include "core/csv.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <string_view>

#include "core/error.hpp"

namespace ddm {

namespace {

constexpr std::string_view kRecordHeader =
    "algorithm,N,alpha,P,rep,seed,mode,wct_seconds,K";

std::vector<std::string_view> split_commas(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = line.find(',', start);
    out.push_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

template <typename T>
T field(std::string_view text, std::size_t line_no, std::string_view name) {
  T value{};
  const char* end = text.data() + text.size();
  const auto res = std::from_chars(text.data(), end, value);
  if (res.ec != std::errc() || res.ptr != end) {
    fail(ErrorCode::kParse, "line " + std::to_string(line_no) + ": bad " +
                                std::string(name) + " '" + std::string(text) + "'");
  }
  return value;
}

void put_optional(std::ostream& os, const std::optional<double>& v) {
  os << ',';
  if (v) os << format_double(*v);
}

}  // namespace

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

void write_records_csv(std::ostream& os, const std::vector<BenchRecord>& records,
                       bool with_memory) {
  os << kRecordHeader << (with_memory ? ",peak_rss_bytes" : "") << '\n';
  for (const auto& r : records) {
    os << r.algorithm << ',' << r.n << ',' << format_double(r.alpha) << ','
       << r.workers << ',' << r.rep << ',' << r.seed << ',' << mode_name(r.mode) << ','
       << format_double(r.wct_seconds) << ',' << r.k;
    if (with_memory) {
      os << ',';
      if (r.peak_rss_bytes) os << *r.peak_rss_bytes;
    }
    os << '\n';
  }
}

std::vector<BenchRecord> read_records_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) fail(ErrorCode::kParse, "empty CSV input");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  bool with_memory = false;
  if (line == std::string(kRecordHeader) + ",peak_rss_bytes") {
    with_memory = true;
  } else if (line != kRecordHeader) {
    fail(ErrorCode::kParse, "line 1: unexpected header '" + line + "'");
  }
  const std::size_t columns = with_memory ? 10 : 9;
  std::vector<BenchRecord> records;
  std::size_t line_no = 1;
  while (std::getline(is, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto f = split_commas(line);
    if (f.size() != columns) {
      fail(ErrorCode::kParse, "line " + std::to_string(line_no) + ": expected " +
                                  std::to_string(columns) + " columns");
    }
    BenchRecord r;
    r.algorithm = std::string(f[0]);
    r.n = field<std::uint64_t>(f[1], line_no, "N");
    r.alpha = field<double>(f[2], line_no, "alpha");
    r.workers = field<std::size_t>(f[3], line_no, "P");
    r.rep = field<std::size_t>(f[4], line_no, "rep");
    r.seed = field<std::uint64_t>(f[5], line_no, "seed");
    if (f[6] == "count") {
      r.mode = ReportMode::Count;
    } else if (f[6] == "list") {
      r.mode = ReportMode::List;
    } else {
      fail(ErrorCode::kParse, "line " + std::to_string(line_no) + ": bad mode");
    }
    r.wct_seconds = field<double>(f[7], line_no, "wct_seconds");
    r.k = field<std::uint64_t>(f[8], line_no, "K");
    if (with_memory && !f[9].empty()) {
      r.peak_rss_bytes = field<std::uint64_t>(f[9], line_no, "peak_rss_bytes");
    }
    records.push_back(std::move(r));
  }
  return records;
}

void write_aggregates_csv(std::ostream& os, const std::vector<BenchAggregate>& rows) {
  os << "algorithm,N,alpha,P,seed,mode,reps,wct_mean,wct_stddev,K_mean\n";
  for (const auto& a : rows) {
    os << a.algorithm << ',' << a.n << ',' << format_double(a.alpha) << ','
       << a.workers << ',' << a.seed << ',' << mode_name(a.mode) << ',' << a.reps << ','
       << format_double(a.wct_mean) << ',' << format_double(a.wct_stddev) << ','
       << format_double(a.k_mean) << '\n';
  }
}

void write_scaling_csv(std::ostream& os, const ScalingSummary& summary) {
  os << "algorithm,N,alpha,P,wct_mean,speedup,strong_efficiency,weak_efficiency\n";
  for (const auto& r : summary.rows) {
    os << r.algorithm << ',' << r.n << ',' << format_double(r.alpha) << ','
       << r.workers << ',' << format_double(r.wct_mean);
    put_optional(os, r.speedup);
    put_optional(os, r.strong_efficiency);
    put_optional(os, r.weak_efficiency);
    os << '\n';
  }
}

}  // namespace ddm
