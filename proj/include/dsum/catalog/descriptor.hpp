#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dsum/catalog/eval_context.hpp"
#include "dsum/catalog/grid.hpp"
#include "dsum/catalog/point.hpp"
#include "dsum/catalog/value.hpp"

namespace dsum {

enum class Mode { ExactRational, QSurd, QuotientPoly, FloatTrig };
std::string_view to_string(Mode mode) noexcept;

/// Cost of the nested side versus the closed side, in the scale parameter.
enum class CostClass { QuadraticVsLinear, QuadraticVsConstant, LinearVsLinear, LinearVsConstant, Constant };
std::string_view to_string(CostClass cost) noexcept;

struct Constraint {
  std::string text;
  std::function<bool(const Point&)> holds;
};

enum class Side { Lhs, Rhs };

using Evaluator = std::function<Value(const Point&, EvalContext&)>;

struct IdentityDescriptor {
  std::string id;
  std::string citation;
  std::string statement;
  std::string note;
  Mode mode = Mode::ExactRational;
  std::vector<ParamSpec> params;
  std::vector<Constraint> constraints;
  GridSpec grid;
  CostClass cost = CostClass::QuadraticVsLinear;
  /// Parameter that benchmarks scale; empty when the entry has none.
  std::string scale_param;
  /// Values of the remaining parameters during benchmarks.
  Point bench_point;
  Evaluator lhs;
  Evaluator rhs;

  /// Text of the first violated schema rule (missing or extra parameter,
  /// non-integer value for an integer parameter, failed constraint).
  std::optional<std::string> violation(const Point& point) const;
  const ParamSpec* param(std::string_view name) const;
};

}  // namespace dsum
