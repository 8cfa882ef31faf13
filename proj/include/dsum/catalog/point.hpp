#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dsum/kernel/big_rational.hpp"

namespace dsum {

enum class ParamKind { Integer, Rational, Real };

std::string_view to_string(ParamKind kind) noexcept;

struct ParamSpec {
  std::string name;
  ParamKind kind = ParamKind::Integer;
};

/// A parameter assignment. Order is the identity's schema order; every
/// value is exact, including samples of real parameters.
class Point {
 public:
  Point() = default;
  Point(std::initializer_list<std::pair<std::string, BigRational>> values);

  void set(std::string_view name, BigRational value);
  bool has(std::string_view name) const;

  /// Throws Error(Domain) if the name is missing.
  const BigRational& q(std::string_view name) const;
  /// Integer value; throws Error(Domain) if missing or not an integer.
  long i(std::string_view name) const;
  double d(std::string_view name) const { return q(name).to_double(); }

  const std::vector<std::pair<std::string, BigRational>>& entries() const { return values_; }
  std::size_t size() const { return values_.size(); }

  /// "n=2, x=1/2" using str() forms.
  std::string str() const;

  friend bool operator==(const Point&, const Point&) = default;

 private:
  std::vector<std::pair<std::string, BigRational>> values_;
};

}  // namespace dsum
