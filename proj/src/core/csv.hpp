#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "core/bench.hpp"
#include "core/scaling.hpp"

namespace ddm {

// Shortest round-trip decimal form, independent of the global locale.
std::string format_double(double x);

// algorithm,N,alpha,P,rep,seed,mode,wct_seconds,K[,peak_rss_bytes]
void write_records_csv(std::ostream& os, const std::vector<BenchRecord>& records,
                       bool with_memory);
// Accepts files with or without the peak_rss_bytes column. Throws kParse with
// the line number on malformed rows.
std::vector<BenchRecord> read_records_csv(std::istream& is);

// algorithm,N,alpha,P,seed,mode,reps,wct_mean,wct_stddev,K_mean
void write_aggregates_csv(std::ostream& os, const std::vector<BenchAggregate>& rows);

// algorithm,N,alpha,P,wct_mean,speedup,strong_efficiency,weak_efficiency
// (empty cell where a value cannot be computed)
void write_scaling_csv(std::ostream& os, const ScalingSummary& summary);

}  // namespace ddm
