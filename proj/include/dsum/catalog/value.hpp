#pragma once

#include <string>
#include <variant>

#include "dsum/kernel/big_rational.hpp"
#include "dsum/kernel/qsurd.hpp"
#include "dsum/kernel/quotient_poly.hpp"

namespace dsum {

/// One side of an identity, evaluated. double only appears in trig mode.
using Value = std::variant<BigRational, QSurd, QuotientPoly, double>;

/// Exact fraction strings for exact values, shortest round-trip decimal
/// for doubles.
std::string value_str(const Value& value);

}  // namespace dsum
