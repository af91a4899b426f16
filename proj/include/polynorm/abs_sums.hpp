#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "polynorm/normed_space.hpp"

namespace polynorm {

/// A polyhedral absolute norm on R^n: the ball is sign-flip invariant and
/// every basis vector has norm one.
struct AbsoluteNormSpace {
  PolyhedralSpace space;
  int n = 0;
};

/// Verifies the absolute-norm axioms exactly (basis norms, flip closure,
/// monotonicity probes) and wraps the polytope. Throws NotAbsoluteError.
AbsoluteNormSpace validate_absolute(const SymmetricPolytope& p);

/// Monotone-plumpness result for one sign-reduced extreme dual point.
struct FunctionalResult {
  Vec dual;                  // d* with d* >= 0
  std::vector<int> support;  // D = { k : d_k != 0 }
  bool prefilter_pass = false;   // all d_k in {0, 1}
  bool monotone_plump = false;
  std::optional<std::pair<Vec, Vec>> counterexample;  // (a, z) with no valid b
};

/// Decides monotone plumpness of d* by vertex enumeration of the (a, z)
/// parameter polytope per facet of the ball, with an exact feasibility LP
/// for b at every vertex. The coordinate prefilter is advisory: the full
/// procedure runs regardless, so negatives always carry a concrete (a, z).
FunctionalResult is_monotone_plump(const AbsoluteNormSpace& e, const Vec& dual);

struct GlmVerdict {
  std::vector<FunctionalResult> results;  // one per sign-reduced dual vertex
  bool is_glm = false;
};

GlmVerdict is_glm(const AbsoluteNormSpace& e);

/// GL-respecting coincides with GL-monotone.
bool is_gl_respecting(const AbsoluteNormSpace& e);

/// Samples (a, z) with a on the nonnegative sphere and |z_k| <= a_k on the
/// support (signed z, beyond the defining 0 <= z_k) and reports whether the
/// b-system stays feasible on every sample.
bool extended_z_probe(const AbsoluteNormSpace& e, const Vec& dual, int samples,
                      std::uint64_t seed);

/// The E-sum of component spaces: componentwise norms fed through E.
struct SumSpace {
  AbsoluteNormSpace outer;
  std::vector<PolyhedralSpace> components;
  PolyhedralSpace space;  // ball in dimension sum of component dimensions
};

/// Builds the sum ball from composite functionals (d_1 g_1, ..., d_n g_n)
/// over nonnegative dual vertices d of E and dual vertices g_k of the
/// components, then cross-checks the sum-norm identity on random probes.
/// Limits: n <= 3, component dimension <= 2, total dimension <= 4.
SumSpace build_e_sum(const AbsoluteNormSpace& e,
                     const std::vector<PolyhedralSpace>& components);

/// Composite facet (d_1 w_1*, ..., d_n w_n*) of the sum, from one plump
/// component functional w_k* per support coordinate of a monotone plump d*.
/// The resulting facet is verified plump in the sum; failure would
/// contradict the sum construction and raises TheoremViolation.
Facet compose_sum_face(const AbsoluteNormSpace& e,
                       const std::vector<PolyhedralSpace>& components, const Vec& dual,
                       const std::vector<Vec>& component_functionals);

struct CrossValidation {
  bool glm = false;
  bool sum_gl = false;
  bool agree = false;
};

/// Runs the GLM decision on E and the direct GL check on the built sum of
/// GL components; the two verdicts must coincide. Disagreement raises
/// TheoremViolation, a non-GL component raises InputError.
CrossValidation cross_validate(const AbsoluteNormSpace& e,
                               const std::vector<PolyhedralSpace>& components);

}  // namespace polynorm
