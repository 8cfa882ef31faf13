#include "dsum/catalog/descriptor.hpp"

namespace dsum {

std::string_view to_string(Mode mode) noexcept {
  switch (mode) {
    case Mode::ExactRational: return "exact-rational";
    case Mode::QSurd: return "qsurd";
    case Mode::QuotientPoly: return "quotient-poly";
    case Mode::FloatTrig: return "float-trig";
  }
  return "unknown";
}

std::string_view to_string(CostClass cost) noexcept {
  switch (cost) {
    case CostClass::QuadraticVsLinear: return "O(n^2) vs O(n)";
    case CostClass::QuadraticVsConstant: return "O(n^2) vs O(1)";
    case CostClass::LinearVsLinear: return "O(n) vs O(n)";
    case CostClass::LinearVsConstant: return "O(n) vs O(1)";
    case CostClass::Constant: return "O(1) vs O(1)";
  }
  return "unknown";
}

const ParamSpec* IdentityDescriptor::param(std::string_view name) const {
  for (const auto& p : params) {
    if (p.name == name) return &p;
  }
  return nullptr;
}

std::optional<std::string> IdentityDescriptor::violation(const Point& point) const {
  for (const auto& p : params) {
    if (!point.has(p.name)) return "missing parameter " + p.name;
    if (p.kind == ParamKind::Integer && !point.q(p.name).is_integer()) return p.name + " must be an integer";
  }
  for (const auto& [name, value] : point.entries()) {
    if (param(name) == nullptr) return "unknown parameter " + name;
  }
  for (const auto& c : constraints) {
    if (!c.holds(point)) return c.text;
  }
  return std::nullopt;
}

}  // namespace dsum
