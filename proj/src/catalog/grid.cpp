#include "dsum/catalog/grid.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <optional>

namespace dsum {

namespace {

[[noreturn]] void malformed(std::string_view spec, std::string_view why) {
  throw Error(ErrorCode::MalformedGrid, "'" + std::string(spec) + "': " + std::string(why));
}

bool is_integer_text(std::string_view s) {
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) s.remove_prefix(1);
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

// [sign]digits[.digits] as an exact rational, or nullopt.
std::optional<BigRational> parse_decimal(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    negative = s[0] == '-';
    s.remove_prefix(1);
  }
  const auto dot = s.find('.');
  std::string_view whole = s.substr(0, dot);
  std::string_view frac = dot == std::string_view::npos ? std::string_view{} : s.substr(dot + 1);
  auto digits = [](std::string_view d) {
    return std::all_of(d.begin(), d.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  if ((whole.empty() && frac.empty()) || !digits(whole) || !digits(frac)) return std::nullopt;
  std::string all = std::string(whole) + std::string(frac);
  if (all.empty()) return std::nullopt;
  BigInt num(all, 10);
  BigInt den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
  BigRational v(num, den);
  return negative ? -v : v;
}

BigRational parse_value(std::string_view spec, std::string_view token) {
  if (token.find('/') != std::string_view::npos) return BigRational::parse(token);
  if (auto v = parse_decimal(token)) return *v;
  malformed(spec, "bad value '" + std::string(token) + "'");
}

}  // namespace

ValueList make_value_list(std::vector<BigRational> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return ValueList{std::move(values)};
}

std::string axis_str(const Axis& axis) {
  if (const auto* r = std::get_if<IntRange>(&axis)) {
    return std::to_string(r->lo) + ".." + std::to_string(r->hi);
  }
  if (const auto* l = std::get_if<ValueList>(&axis)) {
    std::string s;
    for (const auto& v : l->values) {
      if (!s.empty()) s += ",";
      s += v.str();
    }
    return s;
  }
  const auto& ri = std::get<RealInterval>(axis);
  auto fmt = [](double d) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, d);
    std::string s(buf, res.ptr);
    if (s.find_first_of(".e") == std::string::npos) s += ".0";
    return s;
  };
  return fmt(ri.lo) + ".." + fmt(ri.hi);
}

Axis parse_axis(std::string_view spec) {
  if (spec.empty()) malformed(spec, "empty range");
  const auto dots = spec.find("..");
  if (dots != std::string_view::npos) {
    const std::string_view lo = spec.substr(0, dots);
    const std::string_view hi = spec.substr(dots + 2);
    if (is_integer_text(lo) && is_integer_text(hi)) {
      IntRange r{std::strtol(std::string(lo).c_str(), nullptr, 10), std::strtol(std::string(hi).c_str(), nullptr, 10)};
      if (r.lo > r.hi) malformed(spec, "empty range");
      return r;
    }
    auto l = parse_decimal(lo);
    auto h = parse_decimal(hi);
    if (!l || !h) malformed(spec, "expected lo..hi");
    RealInterval r{l->to_double(), h->to_double()};
    if (!(r.lo <= r.hi)) malformed(spec, "empty interval");
    return r;
  }
  std::vector<BigRational> values;
  std::size_t start = 0;
  while (true) {
    const auto comma = spec.find(',', start);
    const std::string_view token = spec.substr(start, comma == std::string_view::npos ? spec.npos : comma - start);
    if (token.empty()) malformed(spec, "empty list entry");
    values.push_back(parse_value(spec, token));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return make_value_list(std::move(values));
}

const Axis* GridSpec::find(std::string_view name) const {
  for (const auto& [n, a] : axes) {
    if (n == name) return &a;
  }
  return nullptr;
}

void GridSpec::set(std::string_view name, Axis axis) {
  for (auto& [n, a] : axes) {
    if (n == name) {
      a = std::move(axis);
      return;
    }
  }
  axes.emplace_back(std::string(name), std::move(axis));
}

std::size_t GridSpec::cardinality() const {
  if (sampling.kind == Sampling::Kind::Random) return sampling.count;
  std::size_t total = 1;
  for (const auto& [name, axis] : axes) {
    if (const auto* r = std::get_if<IntRange>(&axis)) {
      total *= static_cast<std::size_t>(r->hi - r->lo + 1);
    } else if (const auto* l = std::get_if<ValueList>(&axis)) {
      total *= l->values.size();
    } else {
      return 0;  // a real interval cannot be enumerated
    }
  }
  return total;
}

std::string grid_str(const GridSpec& grid) {
  std::string s;
  for (const auto& [name, axis] : grid.axes) {
    if (!s.empty()) s += " ";
    s += name + "=" + axis_str(axis);
  }
  if (grid.sampling.kind == Sampling::Kind::Random) {
    s += " random(" + std::to_string(grid.sampling.count) + ", seed " + std::to_string(grid.sampling.seed) + ")";
  }
  return s;
}

}  // namespace dsum
