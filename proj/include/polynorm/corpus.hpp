#pragma once

#include <cstdint>
#include <string>

#include "polynorm/polytope.hpp"

namespace polynorm {

/// Named reference bodies. Accepted names: square, diamond, hex_tilde,
/// hex_lambda:<rational>, oct_rational, cube3, crosspoly3, prism_hex3.
SymmetricPolytope fixture(const std::string& name);

/// Parameters for seeded random generation. Identical spec, identical output.
struct CorpusSpec {
  std::uint64_t seed = 0;
  int pairs = 3;           // antipodal vertex pairs, at most 6
  long denominator = 16;   // coordinate denominator bound
};

/// A centrally symmetric convex polygon with exactly `pairs` antipodal
/// vertex pairs. Points are drawn on a seeded rational ellipse, which keeps
/// them in strictly convex position (no collinear degeneracies possible).
/// The denominator bound applies to the curve parameters; coordinate
/// denominators stay within a small multiple of its square. Bounded
/// retries, then GeometryError.
SymmetricPolytope random_symmetric_polygon(const CorpusSpec& spec);

/// 3D counterpart; needs pairs >= 3 for full dimension.
SymmetricPolytope random_symmetric_polytope_3d(const CorpusSpec& spec);

}  // namespace polynorm
