#include "dsum/catalog/catalog.hpp"

#include <set>
#include <sstream>

#include "registry.hpp"

namespace dsum {

namespace {

std::vector<IdentityDescriptor> build() {
  std::vector<IdentityDescriptor> all;
  detail::register_binomial(all);
  detail::register_fibonacci(all);
  detail::register_gibonacci(all);
  detail::register_mstep(all);
  detail::register_harmonic(all);
  detail::register_odd_harmonic(all);
  detail::register_stirling(all);
  detail::register_horadam(all);
  std::set<std::string> seen;
  for (const auto& e : all) {
    if (!seen.insert(e.id).second) throw Error(ErrorCode::Internal, "duplicate catalog id " + e.id);
  }
  return all;
}

}  // namespace

const std::vector<IdentityDescriptor>& catalog_list() {
  static const std::vector<IdentityDescriptor> entries = build();
  return entries;
}

const IdentityDescriptor& find_identity(std::string_view id) {
  for (const auto& e : catalog_list()) {
    if (e.id == id) return e;
  }
  throw Error(ErrorCode::NotFound, "unknown identity '" + std::string(id) + "'");
}

std::vector<const IdentityDescriptor*> select_prefix(std::string_view prefix) {
  std::vector<const IdentityDescriptor*> out;
  for (const auto& e : catalog_list()) {
    if (std::string_view(e.id).substr(0, prefix.size()) == prefix) out.push_back(&e);
  }
  return out;
}

std::string catalog_entry_doc(std::string_view id) {
  const IdentityDescriptor& e = find_identity(id);
  std::ostringstream os;
  os << e.id << "  (" << e.citation << ")\n";
  os << "  " << e.statement << "\n";
  os << "  mode:        " << to_string(e.mode) << "\n";
  os << "  parameters:  ";
  for (std::size_t i = 0; i < e.params.size(); ++i) {
    os << (i ? ", " : "") << e.params[i].name << ":" << to_string(e.params[i].kind);
  }
  os << "\n  constraints: ";
  if (e.constraints.empty()) os << "none";
  for (std::size_t i = 0; i < e.constraints.size(); ++i) os << (i ? "; " : "") << e.constraints[i].text;
  os << "\n  grid:        " << grid_str(e.grid) << "\n";
  os << "  cost:        " << to_string(e.cost) << "\n";
  os << "  scales in:   " << (e.scale_param.empty() ? std::string("-") : e.scale_param) << "\n";
  if (!e.note.empty()) os << "  note:        " << e.note << "\n";
  return os.str();
}

Value evaluate(const IdentityDescriptor& entry, const Point& point, Side side, EvalContext& ctx) {
  if (auto why = entry.violation(point)) {
    throw Error(ErrorCode::Domain, entry.id + ": " + *why);
  }
  return side == Side::Lhs ? entry.lhs(point, ctx) : entry.rhs(point, ctx);
}

Value evaluate(std::string_view id, const Point& point, Side side) {
  EvalContext ctx;
  return evaluate(find_identity(id), point, side, ctx);
}

}  // namespace dsum
