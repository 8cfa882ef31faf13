#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dsum/catalog/descriptor.hpp"

namespace dsum {

/// Every registered identity, in a fixed order (grouped by family).
/// Built once on first use; safe to read from many threads.
const std::vector<IdentityDescriptor>& catalog_list();

/// Throws Error(NotFound) for an unknown id.
const IdentityDescriptor& find_identity(std::string_view id);

/// Entries whose id starts with the prefix, in catalog order.
std::vector<const IdentityDescriptor*> select_prefix(std::string_view prefix);

/// Multi-line card: id, citation, statement, mode, parameters,
/// constraints, default grid, cost class and notes.
std::string catalog_entry_doc(std::string_view id);

/// Checks the schema, then evaluates one side.
/// Throws Error(Domain) naming the violated rule.
Value evaluate(const IdentityDescriptor& entry, const Point& point, Side side, EvalContext& ctx);
Value evaluate(std::string_view id, const Point& point, Side side);

}  // namespace dsum
