#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dsum/catalog/descriptor.hpp"

namespace dsum {

struct BenchRecord {
  std::string id;
  long n = 0;
  /// Median wall time over the repetitions; one warm-up run is discarded.
  double lhs_ms = 0.0;
  double rhs_ms = 0.0;
  double speedup = 0.0;
  std::uint64_t lhs_terms = 0;
  std::uint64_t rhs_terms = 0;
  std::uint64_t lhs_seq_calls = 0;
  std::uint64_t rhs_seq_calls = 0;
};

/// Times both sides at the entry's bench point with the scale parameter set
/// to each n. Every run starts from a fresh EvalContext.
/// Throws Error(NotBenchmarkable) for entries without a scale parameter and
/// Error(Domain) when a bench point leaves the schema.
std::vector<BenchRecord> bench(const IdentityDescriptor& entry, const std::vector<long>& n_values,
                               int repetitions = 3);

}  // namespace dsum
