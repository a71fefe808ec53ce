#pragma once

#include <array>
#include <string>
#include <vector>

#include "mtutte/engines.hpp"
#include "mtutte/mobius.hpp"

namespace mtutte {

// One labeled coefficient: the closed-form value next to the brute-force
// engine value. Entries whose index would have negative degree are marked
// not applicable instead of being reported as zero.
struct CoeffEntry {
  std::string label;
  int xdeg = 0;
  int ydeg = 0;
  bool applicable = false;
  mpz_class formula;
  mpz_class brute;
  bool match() const { return !applicable || formula == brute; }
};

struct ExtremeCoefficientReport {
  std::vector<CoeffEntry> entries;
  bool all_match() const;
};

// The three extreme coefficients of T(x, 0) for a loopless matroid:
//   [x^r] = 1
//   [x^{r-1}] = p(M) - r
//   [x^{r-2}] = C(r,2) - (r-1)p(M) + Σ_{rank-2 flats F} (p(F) - 1)
// each checked against the matching coefficient of tutte_x0.
ExtremeCoefficientReport tutte_x0_extreme(const Matroid& m);

// General coefficient of the multiplicity Tutte polynomial of a loopless
// multiplicity matroid, by the double flat sum
//   b_{i,j} = (-1)^{r+i+j} Σ_{flats F} (Σ_{flats F' of M/F} μ(∅,F') C(r - rank(F∪F'), i))
//                                    · (Σ_{A⊆F} (-1)^{|A|} C(|A|-rank(A), j) m(A)).
mpz_class b_ij_general(const MultiplicityMatroid& mm, int i, int j, int guard = kDoubleFlatGuard);

// Grid of the same values for 0 ≤ i ≤ imax, 0 ≤ j ≤ jmax, with the per-flat
// sums hoisted out of the (i, j) loops.
std::vector<std::vector<mpz_class>> b_grid_general(const MultiplicityMatroid& mm, int imax,
                                                   int jmax, int guard = kDoubleFlatGuard);

// The six top extreme coefficients b[r,0], b[r-1,0], b[r-2,0], b[r-1,1],
// b[r-2,1], b[r-2,2] of a loopless multiplicity matroid, in closed form,
// each next to the brute-force coefficient.
ExtremeCoefficientReport extreme_b_top(const MultiplicityMatroid& mm);

// Dual-family entry: the direct transcription of the dual-side closed forms
// and the top-family formula applied to the dual matroid (indices swapped)
// must both equal the engine coefficient.
struct DualCoeffEntry {
  std::string label;
  int xdeg = 0;
  int ydeg = 0;
  bool applicable = false;
  mpz_class direct;
  mpz_class via_dual;
  mpz_class brute;
  bool match() const { return !applicable || (direct == brute && via_dual == brute); }
};

struct DualExtremeReport {
  std::vector<DualCoeffEntry> entries;
  bool all_match() const;
};

// The six dual extreme coefficients b[0,n-r], b[0,n-r-1], b[0,n-r-2],
// b[1,n-r-1], b[1,n-r-2], b[2,n-r-2] of a coloop-free multiplicity matroid.
DualExtremeReport extreme_b_dual(const MultiplicityMatroid& mm);

// t-coefficient entry for the trivial-multiplicity specializations. The
// as-stated forms carry case splits that silently assume every rank-1
// cyclic flat has at least 3 elements and every rank-2 cyclic flat F has
// p(F) in {2, 3}; hypothesis_flag marks rows whose case split rests on a
// violated assumption. The generalized forms hold for every loopless input.
struct TCoeffEntry {
  std::string label;
  int xdeg = 0;
  int ydeg = 0;
  bool applicable = false;
  bool as_stated_available = true;
  bool hypothesis_flag = false;
  mpz_class as_stated;
  mpz_class generalized;
  mpz_class brute;
  bool generalized_match() const { return !applicable || generalized == brute; }
  bool as_stated_match() const {
    return !applicable || !as_stated_available || as_stated == brute;
  }
};

struct TExtremeReport {
  std::vector<TCoeffEntry> entries;
  bool rank1_hypothesis_ok = true;  // every rank-1 cyclic flat has ≥ 3 elements
  bool rank2_hypothesis_ok = true;  // every rank-2 cyclic flat F has p(F) ∈ {2, 3}
  bool hypotheses_ok() const { return rank1_hypothesis_ok && rank2_hypothesis_ok; }
  bool generalized_all_match() const;
  bool as_stated_all_match() const;
};

// Six t-coefficients t[r,0] ... t[r-2,2] of a loopless matroid, as stated
// and generalized.
TExtremeReport t_extreme(const Matroid& m);

// Six dual t-coefficients t[0,n-r] ... t[2,n-r-2] of a coloop-free matroid.
// The generalized values come from t_extreme on the dual with indices
// swapped; the as-stated transcriptions cover the first four entries only
// (the remaining two are defined through a self-referential index and are
// computed through duality alone).
TExtremeReport t_extreme_dual(const Matroid& m);

// t[r-2,2] - t[r-2,1] = |{rank-2 cyclic F : p(F)=2}| + Σ_{p(F)=3} (p'(F)-1),
// inheriting the case-split hypotheses.
struct TDifferenceReport {
  bool applicable = false;
  bool hypotheses_ok = true;
  mpz_class formula;
  mpz_class brute;
  bool match() const { return !applicable || formula == brute; }
};

TDifferenceReport t_difference(const Matroid& m);

// The four summation identities on loopless, coloop-free matroids:
//   1. rank 1:          Σ_{|A|≥2} (-1)^{|A|} (|A|-1)        = 1
//   2. rank 1, |X|≥3:   Σ_{|A|≥3} (-1)^{|A|+1} C(|A|-1, 2)  = 1
//   3. rank 2:          Σ_A (-1)^{|A|+1} (|A|-rank(A))       = p(M) - 2
//   4. rank 2:          Σ_A (-1)^{|A|} C(|A|-rank(A), 2)     = 1 if p=2, p' if p=3,
//      and in general Σ_i g(P_i) - q - 3 with g(S) = min(|S|, 3) and q the
//      number of parallel classes with ≥ 3 elements.
struct LemmaClauseCheck {
  int clause = 0;
  bool applicable = false;
  mpz_class direct;
  bool printed_applicable = false;  // the case-split form is defined here
  mpz_class printed;
  mpz_class general;  // clause 4's g-form; equals printed elsewhere
  bool ok() const;
};

struct LemmaIdentityReport {
  std::array<LemmaClauseCheck, 4> clauses;
  bool all_ok() const;
};

LemmaIdentityReport lemma_identities(const Matroid& m);

}  // namespace mtutte
