#pragma once

#include <string>
#include <string_view>

#include "planesep/cutset.hpp"

namespace planesep {

/// Report keys, in order: case, n, v, omega_size, boundary_size, bound_used,
/// ratio, curve_is_simple, paths, path_roles, doubling_constant, omega,
/// boundary, diagnostics. Pretty-printed with a trailing newline.
std::string cutset_to_json(const CutsetResult& r);

/// Inverse of cutset_to_json. The diagnostics block is optional.
CutsetResult cutset_from_json(std::string_view text);

std::string verification_to_json(const VerificationReport& report, VertexId v, int n);

}  // namespace planesep
