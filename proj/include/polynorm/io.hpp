#pragma once

#include <iosfwd>
#include <string>

#include "polynorm/polytope.hpp"

namespace polynorm {

/// Shared polytope text format:
///   polytope
///   dim <n>
///   vrep | hrep
///   <n space-separated rationals per row>
///   end
/// '#' starts a comment, blank lines are skipped. Bit-exact round trip:
/// parse_polytope(emit_polytope(P)) == P.
SymmetricPolytope parse_polytope(std::istream& in);
SymmetricPolytope parse_polytope_string(const std::string& text);
SymmetricPolytope load_polytope_file(const std::string& path);

/// Canonical emission (V-rep, vertices in canonical order).
std::string emit_polytope(const SymmetricPolytope& p);
void save_polytope_file(const SymmetricPolytope& p, const std::string& path);

}  // namespace polynorm
