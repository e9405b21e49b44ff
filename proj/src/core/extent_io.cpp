#include "core/extent_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "core/error.hpp"

namespace ddm {

namespace {

void put_coord(std::ostream& os, double x) {
  char buf[512];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::fixed);
  os.write(buf, res.ptr - buf);
}

[[noreturn]] void parse_error(std::size_t line, const std::string& what) {
  fail(ErrorCode::kParse, "line " + std::to_string(line) + ": " + what);
}

std::vector<std::string_view> split_fields(std::string_view text) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < text.size() && text[i] != ' ' && text[i] != '\t' && text[i] != '\r') ++i;
    if (i > start) fields.push_back(text.substr(start, i - start));
  }
  return fields;
}

template <typename T>
bool parse_number(std::string_view field, T& out) {
  const char* end = field.data() + field.size();
  const auto res = std::from_chars(field.data(), end, out);
  return res.ec == std::errc() && res.ptr == end;
}

struct Entry {
  std::size_t id;
  std::size_t line;
  std::vector<Interval> bounds;
};

ExtentSet finish(std::vector<Entry>& entries, Kind kind, std::size_t dims) {
  std::stable_sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.id < b.id; });
  ExtentSet set(kind, dims);
  set.reserve(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const Entry& e = entries[i];
    if (i > 0 && entries[i - 1].id == e.id) {
      parse_error(e.line, std::string("duplicate ") + kind_tag(kind) + " id " +
                              std::to_string(e.id));
    }
    if (e.id != i) {
      fail(ErrorCode::kParse, std::string("missing ") + kind_tag(kind) + " id " +
                                  std::to_string(i) + "; ids must be dense");
    }
    set.push_back(e.bounds);
  }
  return set;
}

}  // namespace

void write_extents(std::ostream& os, const ExtentSet& subscriptions,
                   const ExtentSet& updates) {
  check_instance(subscriptions, updates);
  os << "# ddm extents v1 dims=" << subscriptions.dims()
     << " subscriptions=" << subscriptions.size() << " updates=" << updates.size()
     << '\n';
  for (const ExtentSet* set : {&subscriptions, &updates}) {
    for (std::size_t id = 0; id < set->size(); ++id) {
      os << kind_tag(set->kind()) << ' ' << id;
      for (std::size_t k = 0; k < set->dims(); ++k) {
        const Interval& iv = set->interval(static_cast<ExtentId>(id), k);
        os << ' ';
        put_coord(os, iv.low);
        os << ' ';
        put_coord(os, iv.high);
      }
      os << '\n';
    }
  }
}

Workload read_extents(std::istream& is) {
  std::vector<Entry> subs;
  std::vector<Entry> upds;
  std::size_t dims = 0;
  std::size_t header_dims = 0;
  std::size_t line_no = 0;
  std::string line;
  while (std::getline(is, line)) {
    ++line_no;
    const auto fields = split_fields(line);
    if (fields.empty()) continue;
    if (fields.front().front() == '#') {
      for (auto f : fields) {
        std::size_t d = 0;
        if (f.starts_with("dims=") && parse_number(f.substr(5), d) && d > 0) {
          header_dims = d;
        }
      }
      continue;
    }
    Kind kind;
    if (fields[0] == "S") {
      kind = Kind::Subscription;
    } else if (fields[0] == "U") {
      kind = Kind::Update;
    } else {
      parse_error(line_no, "invalid kind tag '" + std::string(fields[0]) +
                               "' (expected S or U)");
    }
    if (fields.size() < 4 || fields.size() % 2 != 0) {
      parse_error(line_no, "expected 'kind id low high [low high ...]'");
    }
    std::size_t id = 0;
    if (!parse_number(fields[1], id) || id >= UINT32_MAX) {
      parse_error(line_no, "invalid id '" + std::string(fields[1]) + "'");
    }
    const std::size_t line_dims = (fields.size() - 2) / 2;
    if (dims == 0) {
      dims = line_dims;
    } else if (line_dims != dims) {
      parse_error(line_no, "extent has " + std::to_string(line_dims) +
                               " dimensions, expected " + std::to_string(dims));
    }
    std::vector<Interval> bounds(line_dims);
    for (std::size_t k = 0; k < line_dims; ++k) {
      Interval& iv = bounds[k];
      if (!parse_number(fields[2 + 2 * k], iv.low) ||
          !parse_number(fields[3 + 2 * k], iv.high)) {
        parse_error(line_no, "invalid coordinate");
      }
      if (!std::isfinite(iv.low) || !std::isfinite(iv.high)) {
        parse_error(line_no, "coordinates must be finite");
      }
      if (iv.low > iv.high) parse_error(line_no, "low > high");
    }
    (kind == Kind::Subscription ? subs : upds).push_back({id, line_no, std::move(bounds)});
  }
  if (is.bad()) fail(ErrorCode::kIo, "read error");
  if (dims == 0) dims = header_dims == 0 ? 1 : header_dims;
  return {finish(subs, Kind::Subscription, dims), finish(upds, Kind::Update, dims)};
}

std::filesystem::path metadata_path(const std::filesystem::path& path) {
  std::filesystem::path meta = path;
  meta += ".meta.json";
  return meta;
}

void save_extents(const std::filesystem::path& path, const ExtentSet& subscriptions,
                  const ExtentSet& updates,
                  const std::optional<WorkloadConfig>& config) {
  {
    std::ofstream out(path);
    if (!out) fail(ErrorCode::kIo, "cannot open '" + path.string() + "' for writing");
    write_extents(out, subscriptions, updates);
    if (!out) fail(ErrorCode::kIo, "write to '" + path.string() + "' failed");
  }

  nlohmann::json meta;
  meta["format"] = "ddm-extents-v1";
  meta["dims"] = subscriptions.dims();
  meta["subscriptions"] = subscriptions.size();
  meta["updates"] = updates.size();
  if (config) {
    meta["workload"] = {
        {"N", config->total},          {"alpha", config->alpha},
        {"L", config->length},         {"extent_length", config->extent_length()},
        {"seed", config->seed},        {"dims", config->dims},
        {"placement", "uniform lower bound in [0, L - l]"},
    };
    meta["rng"] = {{"name", kRngName}, {"version", kRngVersion}};
  }
  const auto meta_file = metadata_path(path);
  std::ofstream out(meta_file);
  if (!out) fail(ErrorCode::kIo, "cannot open '" + meta_file.string() + "' for writing");
  out << meta.dump(2) << '\n';
}

Workload load_extents(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::kIo, "cannot open '" + path.string() + "'");
  return read_extents(in);
}

}  // namespace ddm
