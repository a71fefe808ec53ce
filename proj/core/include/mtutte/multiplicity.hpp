#pragma once

#include <gmpxx.h>

#include <array>
#include <string>
#include <vector>

#include "mtutte/matroid.hpp"

namespace mtutte {

// A matroid together with a positive integer multiplicity on every subset,
// stored as a dense table indexed by bitmask. Values are arbitrary-precision:
// gcd-of-minors multiplicities grow with matrix entries.
class MultiplicityMatroid {
 public:
  MultiplicityMatroid(Matroid m, std::vector<mpz_class> multiplicities);

  static MultiplicityMatroid trivial(Matroid m);

  const Matroid& matroid() const { return m_; }
  int size() const { return m_.size(); }
  const mpz_class& multiplicity(Subset a) const;
  const std::vector<mpz_class>& table() const { return mult_; }
  bool is_trivial() const;

  // Dual multiplicity matroid: dual rank table with m*(A) = m(X \ A).
  MultiplicityMatroid dual() const;
  // Restriction to t, re-indexed consistently with Matroid::restriction.
  MultiplicityMatroid restriction(Subset t) const;

  bool operator==(const MultiplicityMatroid&) const = default;

 private:
  Matroid m_;
  std::vector<mpz_class> mult_;
};

// One failed instance of an arithmetic-matroid axiom.
struct ArithmeticAxiomViolation {
  int axiom = 0;  // 1..4
  std::string detail;
};

// Result of the full axiom sweep. The checker reports every witness, so the
// report doubles as a diagnostic for hand-built tables.
struct AxiomReport {
  std::array<bool, 4> ok{true, true, true, true};
  std::vector<ArithmeticAxiomViolation> violations;
  // States the exact molecule condition axiom 2 was tested with.
  std::string header;

  bool all_ok() const { return ok[0] && ok[1] && ok[2] && ok[3]; }
};

// Checks the four arithmetic-matroid axioms by exhaustive sweep:
//   1. for all A and e: if rank(A∪{e}) = rank(A) then m(A∪{e}) | m(A),
//      otherwise m(A) | m(A∪{e});
//   2. for all molecules A ⊆ B (B\A = F ⊔ T with F the rank-raising
//      elements and rank(C) = rank(A) + |C∩F| for every A ⊆ C ⊆ B):
//      m(A)·m(B) = m(A∪F)·m(A∪T);
//   3. for all A ⊆ B with rank(A) = rank(B):
//      Σ_{A⊆T⊆B} (-1)^{|T|-|A|} m(T) ≥ 0;
//   4. the same with dual ranks and m(X\T).
AxiomReport check_arithmetic_axioms(const MultiplicityMatroid& mm, int guard = kAxiomSweepGuard);

}  // namespace mtutte
