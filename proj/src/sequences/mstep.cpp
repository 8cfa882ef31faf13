#include "dsum/sequences/mstep.hpp"

#include <string>

namespace dsum {

void MStepSpec::validate() const {
  if (m < 2) {
    throw Error(ErrorCode::InvalidSpec, "m-step order must be >= 2, got " + std::to_string(m));
  }
}

MStepSequence::MStepSequence(MStepSpec spec) : spec_(spec) {
  spec_.validate();
  // seeds at indices 2-m .. 1
  table_.assign(spec_.m, BigInt(0));
  table_.back() = 1;
  if (spec_.kind == MStepKind::Lucas) table_[spec_.m - 2] = spec_.m;
}

const BigInt& MStepSequence::at(long n) {
  if (n < first_index()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "m-step index " + std::to_string(n) + " below seed block start " + std::to_string(first_index()));
  }
  const auto idx = static_cast<std::size_t>(n - first_index());
  while (table_.size() <= idx) {
    // x_n needs x_{n-m}; at n = 2 that is the first seed, so the window is always full.
    BigInt next = 0;
    const std::size_t s = table_.size();
    for (int d = 1; d <= spec_.m; ++d) {
      if (s >= static_cast<std::size_t>(d)) next += table_[s - d];
    }
    table_.push_back(std::move(next));
  }
  return table_[idx];
}

BigInt mstep(const MStepSpec& spec, long n) {
  MStepSequence seq(spec);
  return seq.at(n);
}

}  // namespace dsum
