#include "dsum/catalog/value.hpp"

#include <charconv>

namespace dsum {

std::string value_str(const Value& value) {
  if (const auto* q = std::get_if<BigRational>(&value)) return q->fraction_string();
  if (const auto* s = std::get_if<QSurd>(&value)) return s->str();
  if (const auto* p = std::get_if<QuotientPoly>(&value)) return p->str();
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, std::get<double>(value));
  return std::string(buf, res.ptr);
}

}  // namespace dsum
