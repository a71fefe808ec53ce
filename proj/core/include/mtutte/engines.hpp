#pragma once

#include <span>
#include <vector>

#include "mtutte/multiplicity.hpp"
#include "mtutte/poly.hpp"

namespace mtutte {

// Σ_{A⊆X} m(A) (x-1)^{rank(X)-rank(A)} (y-1)^{|A|-rank(A)}, the defining
// subset sum, accumulated by (corank, nullity) class before expansion.
BivarPoly multiplicity_tutte_definition(const MultiplicityMatroid& mm, int guard = kEnumGuard);

// The same sum with trivial multiplicity: the classical Tutte polynomial.
BivarPoly tutte_definition(const Matroid& m, int guard = kEnumGuard);

// Classical deletion-contraction recursion, memoized on the rank table.
// Base case: x^{#coloops} y^{#loops} once only loops and coloops remain.
BivarPoly tutte_deletion_contraction(const Matroid& m, int guard = kEnumGuard);

// Basis activity bookkeeping for the Crapo expansion. Activities are taken
// with respect to a total order on the ground set given as a permutation
// (order[0] is the least element).
struct ActivityRecord {
  Subset basis;
  int internal_activity = 0;
  int external_activity = 0;
};

struct ActivityExpansion {
  BivarPoly polynomial;
  std::vector<ActivityRecord> records;
  std::vector<int> order;  // the total order the activities were taken under
};

// Σ over bases of x^{internal activity} y^{external activity}. Fundamental
// circuits and cocircuits are found by rank queries:
//   C(e, B) = {e} ∪ {f ∈ B : B - f + e spans}, and dually for cocircuits.
// The polynomial is independent of the chosen order. An empty order means
// the identity order.
ActivityExpansion tutte_by_activities(const Matroid& m, std::span<const int> order = {},
                                      int guard = kEnumGuard);

enum class ConvolutionDomain {
  Flats,       // T_{M/A}(x,0) vanishes off flats, so flats suffice
  AllSubsets,  // re-verifies that vanishing claim term by term
};

// Convolution identity: 𝔐(x,y) = Σ_A 𝔐|A(0,y) · T_{M/A}(x,0).
BivarPoly convolution_tutte(const MultiplicityMatroid& mm,
                            ConvolutionDomain domain = ConvolutionDomain::Flats,
                            int guard = kConvolutionGuard);

// χ(λ) = Σ_{A⊆X} (-1)^{|A|} λ^{rank(X)-rank(A)}; identically 0 when a loop
// is present.
UniPoly char_poly(const Matroid& m, int guard = kEnumGuard);

// χ(λ) = Σ_{flats F} μ(∅,F) λ^{rank(X)-rank(F)}; requires a loopless matroid.
UniPoly char_poly_via_flats(const Matroid& m, int guard = kEnumGuard);

// T(x, 0) computed as (-1)^{rank} χ(1-x); requires a loopless matroid.
UniPoly tutte_x0(const Matroid& m, int guard = kEnumGuard);

// Number of bases, counted directly.
mpz_class count_bases(const Matroid& m, int guard = kEnumGuard);

}  // namespace mtutte
