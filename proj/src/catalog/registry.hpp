#pragma once

#include <vector>

#include "dsum/catalog/descriptor.hpp"

namespace dsum::detail {

// One registration function per family group; each appends in display order.
void register_binomial(std::vector<IdentityDescriptor>& out);
void register_fibonacci(std::vector<IdentityDescriptor>& out);
void register_gibonacci(std::vector<IdentityDescriptor>& out);
void register_mstep(std::vector<IdentityDescriptor>& out);
void register_harmonic(std::vector<IdentityDescriptor>& out);
void register_odd_harmonic(std::vector<IdentityDescriptor>& out);
void register_stirling(std::vector<IdentityDescriptor>& out);
void register_horadam(std::vector<IdentityDescriptor>& out);

}  // namespace dsum::detail
