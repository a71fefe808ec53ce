#pragma once

#include <gmpxx.h>

#include <map>
#include <vector>

#include "mtutte/matroid.hpp"

namespace mtutte {

// Möbius values μ(∅, F) over the lattice of flats of a loopless matroid,
// memoized per matroid. Built once, then shared read-only.
class MobiusTable {
 public:
  explicit MobiusTable(const Matroid& m, int guard = kEnumGuard);

  const std::vector<Subset>& flats() const { return flats_; }
  // μ(∅, f); f must be one of flats().
  const mpz_class& from_empty(Subset f) const;

 private:
  std::vector<Subset> flats_;
  std::map<Subset, mpz_class> mu_;
};

// μ(F1, F2) by the defining recursion over the interval [F1, F2] in the flat
// lattice; 0 when F1 is not contained in F2. Arguments must be flats of a
// loopless matroid.
mpz_class mobius(const Matroid& m, Subset f1, Subset f2, int guard = kEnumGuard);

// The alternating Boolean expansion over full-rank intermediate subsets:
//   μ(F1, F2) = Σ_{F1 ⊆ A ⊆ F2, rank(A) = rank(F2)} (-1)^{|A| - |F1|}.
// Independent of the recursion; the two agree on every flat pair.
mpz_class mobius_boolean_expansion(const Matroid& m, Subset f1, Subset f2);

// Closed forms for μ(∅, F) when rank(F) ≤ 2: 1, -1, and p(M|F) - 1.
mpz_class mobius_low_rank(const Matroid& m, Subset f);

}  // namespace mtutte
