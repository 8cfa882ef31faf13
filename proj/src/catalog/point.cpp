#include "dsum/catalog/point.hpp"

namespace dsum {

std::string_view to_string(ParamKind kind) noexcept {
  switch (kind) {
    case ParamKind::Integer: return "int";
    case ParamKind::Rational: return "rational";
    case ParamKind::Real: return "real";
  }
  return "unknown";
}

Point::Point(std::initializer_list<std::pair<std::string, BigRational>> values) {
  for (const auto& [name, value] : values) set(name, value);
}

void Point::set(std::string_view name, BigRational value) {
  for (auto& [n, v] : values_) {
    if (n == name) {
      v = std::move(value);
      return;
    }
  }
  values_.emplace_back(std::string(name), std::move(value));
}

bool Point::has(std::string_view name) const {
  for (const auto& entry : values_) {
    if (entry.first == name) return true;
  }
  return false;
}

const BigRational& Point::q(std::string_view name) const {
  for (const auto& [n, v] : values_) {
    if (n == name) return v;
  }
  throw Error(ErrorCode::Domain, "missing parameter " + std::string(name));
}

long Point::i(std::string_view name) const {
  const BigRational& v = q(name);
  if (!v.is_integer()) {
    throw Error(ErrorCode::Domain, std::string(name) + " must be an integer");
  }
  return v.to_long();
}

std::string Point::str() const {
  std::string s;
  for (const auto& [n, v] : values_) {
    if (!s.empty()) s += ", ";
    s += n + "=" + v.str();
  }
  return s;
}

}  // namespace dsum
