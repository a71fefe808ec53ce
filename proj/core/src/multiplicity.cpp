#include "mtutte/multiplicity.hpp"

#include <utility>

namespace mtutte {

MultiplicityMatroid::MultiplicityMatroid(Matroid m, std::vector<mpz_class> multiplicities)
    : m_(std::move(m)), mult_(std::move(multiplicities)) {
  if (mult_.size() != num_subsets(m_.size()))
    throw InputError("multiplicity: table must have exactly 2^n entries");
  for (const mpz_class& v : mult_)
    if (v < 1) throw InputError("multiplicity: values must be positive, got " + v.get_str());
}

MultiplicityMatroid MultiplicityMatroid::trivial(Matroid m) {
  std::vector<mpz_class> ones(num_subsets(m.size()), mpz_class{1});
  return MultiplicityMatroid(std::move(m), std::move(ones));
}

const mpz_class& MultiplicityMatroid::multiplicity(Subset a) const {
  if (!a.subset_of(m_.ground()))
    throw InputError("multiplicity: subset " + a.str() + " outside the ground set");
  return mult_[a.bits];
}

bool MultiplicityMatroid::is_trivial() const {
  for (const mpz_class& v : mult_)
    if (v != 1) return false;
  return true;
}

MultiplicityMatroid MultiplicityMatroid::dual() const {
  const Subset x = m_.ground();
  std::vector<mpz_class> dual_mult(mult_.size());
  for (std::uint64_t bits = 0; bits < mult_.size(); ++bits)
    dual_mult[bits] = mult_[(x - Subset{bits}).bits];
  return MultiplicityMatroid(m_.dual(), std::move(dual_mult));
}

MultiplicityMatroid MultiplicityMatroid::restriction(Subset t) const {
  Minor minor = m_.restriction(t);
  std::vector<mpz_class> sub(num_subsets(minor.matroid.size()));
  for (std::uint64_t bits = 0; bits < sub.size(); ++bits)
    sub[bits] = mult_[minor.to_parent(Subset{bits}).bits];
  return MultiplicityMatroid(std::move(minor.matroid), std::move(sub));
}

namespace {

bool divides(const mpz_class& d, const mpz_class& v) {
  return mpz_divisible_p(v.get_mpz_t(), d.get_mpz_t()) != 0;
}

}  // namespace

AxiomReport check_arithmetic_axioms(const MultiplicityMatroid& mm, int guard) {
  const Matroid& m = mm.matroid();
  const int n = m.size();
  check_size_guard("axiom sweep", n, guard);

  AxiomReport report;
  report.header =
      "axiom 2 tested on molecules [A,B]: F = rank-raising elements of B\\A, "
      "rank(C) = rank(A) + |C∩F| for all A ⊆ C ⊆ B";

  const Subset x = m.ground();
  const std::uint64_t limit = num_subsets(n);
  const Matroid dual = m.dual();

  auto fail = [&](int axiom, std::string detail) {
    report.ok[static_cast<std::size_t>(axiom - 1)] = false;
    report.violations.push_back({axiom, std::move(detail)});
  };

  // Axiom 1: divisibility along single-element steps.
  for (std::uint64_t bits = 0; bits < limit; ++bits) {
    Subset a{bits};
    for (int e = 0; e < n; ++e) {
      if (a.contains(e)) continue;
      Subset ae = a.with(e);
      const mpz_class& ma = mm.multiplicity(a);
      const mpz_class& mae = mm.multiplicity(ae);
      if (m.rank(ae) == m.rank(a)) {
        if (!divides(mae, ma))
          fail(1, "m" + ae.str() + "=" + mae.get_str() + " does not divide m" + a.str() + "=" +
                      ma.get_str());
      } else {
        if (!divides(ma, mae))
          fail(1, "m" + a.str() + "=" + ma.get_str() + " does not divide m" + ae.str() + "=" +
                      mae.get_str());
      }
    }
  }

  // Axioms 2-4 sweep pairs A ⊆ B by enumerating B and its subsets.
  for (std::uint64_t bbits = 0; bbits < limit; ++bbits) {
    Subset b{bbits};
    for_each_subset_of(b, [&](Subset a) {
      Subset diff = b - a;
      if (a != b) {
        // Axiom 2: molecule test.
        Subset f;
        for (int e : diff.elements())
          if (m.rank(a.with(e)) == m.rank(a) + 1) f = f.with(e);
        bool molecule = true;
        for_each_subset_of(diff, [&](Subset d) {
          if (!molecule) return;
          Subset c = a | d;
          if (m.rank(c) != m.rank(a) + (d & f).count()) molecule = false;
        });
        if (molecule) {
          Subset t = diff - f;
          mpz_class lhs = mm.multiplicity(a) * mm.multiplicity(b);
          mpz_class rhs = mm.multiplicity(a | f) * mm.multiplicity(a | t);
          if (lhs != rhs)
            fail(2, "molecule A=" + a.str() + " B=" + b.str() + ": m(A)m(B)=" + lhs.get_str() +
                        " but m(A∪F)m(A∪T)=" + rhs.get_str());
        }
      }

      // Axiom 3: alternating sum over [A, B] when ranks agree.
      if (m.rank(a) == m.rank(b)) {
        mpz_class sum = 0;
        for_each_subset_of(b - a, [&](Subset d) {
          Subset t = a | d;
          if (d.count() % 2 == 0)
            sum += mm.multiplicity(t);
          else
            sum -= mm.multiplicity(t);
        });
        if (sum < 0)
          fail(3, "A=" + a.str() + " B=" + b.str() + ": alternating sum " + sum.get_str() + " < 0");
      }

      // Axiom 4: the dual-rank counterpart with complemented lookups.
      if (dual.rank(a) == dual.rank(b)) {
        mpz_class sum = 0;
        for_each_subset_of(b - a, [&](Subset d) {
          Subset t = a | d;
          if (d.count() % 2 == 0)
            sum += mm.multiplicity(x - t);
          else
            sum -= mm.multiplicity(x - t);
        });
        if (sum < 0)
          fail(4, "A=" + a.str() + " B=" + b.str() + ": dual alternating sum " + sum.get_str() +
                      " < 0");
      }
    });
  }

  return report;
}

}  // namespace mtutte
