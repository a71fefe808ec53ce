#include "mtutte/verify.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace mtutte {

namespace {

IdentityCheck pass_fail(std::string name, std::string detail, bool ok, std::string witness) {
  IdentityCheck c{std::move(name), std::move(detail), CheckStatus::Pass, {}};
  if (!ok) {
    c.status = CheckStatus::Fail;
    c.witness = std::move(witness);
  }
  return c;
}

IdentityCheck not_applicable(std::string name, std::string detail, std::string reason) {
  return IdentityCheck{std::move(name), std::move(detail), CheckStatus::NotApplicable,
                       std::move(reason)};
}

std::string mismatch(const BivarPoly& a, const BivarPoly& b) {
  return "got " + a.str() + " vs " + b.str();
}

}  // namespace

VerificationReport verify_instance(const MultiplicityMatroid& mm, const VerifyOptions& opts) {
  VerificationReport report;
  const Matroid& m = mm.matroid();
  const int n = m.size();
  const bool trivial = mm.is_trivial();
  const bool loopless = m.is_loopless();
  const bool coloop_free = m.is_coloop_free();

  const BivarPoly reference = multiplicity_tutte_definition(mm, opts.enum_guard);

  // Convolution identity, over flats and over all subsets.
  {
    const char* detail = "M(x,y) = sum_A M|A(0,y) * T_{M/A}(x,0)";
    if (n > opts.convolution_guard) {
      report.checks.push_back(
          not_applicable("convolution", detail, "convolution guard exceeded"));
    } else {
      BivarPoly flats = convolution_tutte(mm, ConvolutionDomain::Flats, opts.convolution_guard);
      bool ok = flats == reference;
      // The all-subsets pass re-verifies that non-flat summands vanish; its
      // nested enumeration is only affordable on smaller instances.
      if (n <= 12) ok = ok && convolution_tutte(mm, ConvolutionDomain::AllSubsets, 12) == reference;
      report.checks.push_back(
          pass_fail("convolution", detail, ok, mismatch(flats, reference)));
    }
  }

  // Duality swap.
  {
    const char* detail = "M_MM(x,y) = M_dual(MM)(y,x)";
    BivarPoly swapped = multiplicity_tutte_definition(mm.dual(), opts.enum_guard).swapped();
    report.checks.push_back(
        pass_fail("duality", detail, swapped == reference, mismatch(swapped, reference)));
  }

  // Deletion-contraction (plain Tutte polynomials only).
  {
    const char* detail = "T(M) = T(M\\e) + T(M/e)";
    if (!trivial) {
      report.checks.push_back(
          not_applicable("deletion-contraction", detail, "nontrivial multiplicity"));
    } else {
      BivarPoly delcon = tutte_deletion_contraction(m, opts.enum_guard);
      report.checks.push_back(pass_fail("deletion-contraction", detail, delcon == reference,
                                        mismatch(delcon, reference)));
    }
  }

  // Activity expansion under random orders.
  {
    const char* detail = "T(x,y) = sum over bases of x^(internal) y^(external), any order";
    if (!trivial) {
      report.checks.push_back(
          not_applicable("activity-orders", detail, "nontrivial multiplicity"));
    } else {
      std::mt19937 rng(opts.seed);
      std::vector<int> order(static_cast<std::size_t>(n));
      std::iota(order.begin(), order.end(), 0);
      bool ok = true;
      std::string witness;
      for (int round = 0; round <= opts.random_orders && ok; ++round) {
        BivarPoly poly = tutte_by_activities(m, order, opts.enum_guard).polynomial;
        if (poly != reference) {
          ok = false;
          witness = mismatch(poly, reference);
        }
        std::shuffle(order.begin(), order.end(), rng);
      }
      report.checks.push_back(pass_fail("activity-orders", detail, ok, std::move(witness)));
    }
  }

  // T(x, 0) through the characteristic polynomial.
  {
    const char* detail = "y=0 slice of T equals (-1)^r chi(1-x); flats form of chi agrees";
    if (!trivial) {
      report.checks.push_back(not_applicable("x0-slice", detail, "nontrivial multiplicity"));
    } else if (!loopless) {
      report.checks.push_back(not_applicable("x0-slice", detail, "matroid has loops"));
    } else {
      UniPoly slice = reference.at_y_zero();
      UniPoly direct = tutte_x0(m, opts.enum_guard);
      UniPoly chi = char_poly(m, opts.enum_guard);
      UniPoly chi_flats = char_poly_via_flats(m, opts.enum_guard);
      bool ok = slice == direct && chi == chi_flats;
      report.checks.push_back(pass_fail("x0-slice", detail, ok,
                                        "slice " + slice.str() + " vs " + direct.str()));
    }
  }

  // Extreme coefficients, top family.
  {
    const char* detail = "b[r,0] .. b[r-2,2] closed forms match the engine";
    if (!loopless) {
      report.checks.push_back(not_applicable("extreme-top", detail, "matroid has loops"));
    } else {
      ExtremeCoefficientReport top = extreme_b_top(mm);
      std::string witness;
      for (const CoeffEntry& e : top.entries)
        if (!e.match())
          witness += e.label + ": formula " + e.formula.get_str() + " vs " +
                     e.brute.get_str() + "; ";
      report.checks.push_back(pass_fail("extreme-top", detail, top.all_match(), witness));
    }
  }

  // Extreme coefficients, dual family, both computation paths.
  {
    const char* detail = "b[0,n-r] .. b[2,n-r-2] direct and dual paths match the engine";
    if (!coloop_free) {
      report.checks.push_back(not_applicable("extreme-dual", detail, "matroid has coloops"));
    } else {
      DualExtremeReport dual = extreme_b_dual(mm);
      std::string witness;
      for (const DualCoeffEntry& e : dual.entries)
        if (!e.match())
          witness += e.label + ": direct " + e.direct.get_str() + ", dual path " +
                     e.via_dual.get_str() + ", engine " + e.brute.get_str() + "; ";
      report.checks.push_back(pass_fail("extreme-dual", detail, dual.all_match(), witness));
    }
  }

  // General coefficient formula over the full support grid.
  {
    const char* detail = "b_ij double flat sum equals every engine coefficient";
    if (!loopless) {
      report.checks.push_back(not_applicable("general-coefficient", detail, "matroid has loops"));
    } else if (n > opts.general_coeff_guard) {
      report.checks.push_back(
          not_applicable("general-coefficient", detail, "flat-sum guard exceeded"));
    } else {
      const int r = m.rank();
      auto grid = b_grid_general(mm, r + 1, n - r + 1, n);
      bool ok = true;
      std::string witness;
      for (int i = 0; i <= r + 1 && ok; ++i)
        for (int j = 0; j <= n - r + 1 && ok; ++j)
          if (grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] !=
              reference.coeff(i, j)) {
            ok = false;
            witness = "b[" + std::to_string(i) + "," + std::to_string(j) + "] formula " +
                      grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].get_str() +
                      " vs " + reference.coeff(i, j).get_str();
          }
      report.checks.push_back(pass_fail("general-coefficient", detail, ok, std::move(witness)));
    }
  }

  // t-coefficient rows (generalized forms) on the underlying matroid.
  {
    const char* detail = "t[r,0] .. t[r-2,2] generalized forms match (as-stated where hypotheses hold)";
    if (!loopless) {
      report.checks.push_back(not_applicable("t-extreme", detail, "matroid has loops"));
    } else {
      TExtremeReport t = t_extreme(m);
      bool ok = t.generalized_all_match();
      if (t.hypotheses_ok() && !t.as_stated_all_match()) ok = false;
      std::string witness;
      for (const TCoeffEntry& e : t.entries)
        if (!e.generalized_match())
          witness += e.label + ": generalized " + e.generalized.get_str() + " vs " +
                     e.brute.get_str() + "; ";
      report.checks.push_back(pass_fail("t-extreme", detail, ok, std::move(witness)));
    }
  }
  {
    const char* detail = "dual t rows via duality match; transcriptions agree where defined";
    if (!coloop_free) {
      report.checks.push_back(not_applicable("t-extreme-dual", detail, "matroid has coloops"));
    } else {
      TExtremeReport t = t_extreme_dual(m);
      bool ok = t.generalized_all_match();
      // The first four transcriptions are exact whenever defined.
      for (std::size_t k = 0; k < 4 && k < t.entries.size(); ++k) {
        const TCoeffEntry& e = t.entries[k];
        if (e.applicable && e.as_stated_available && e.as_stated != e.brute) ok = false;
      }
      std::string witness;
      for (const TCoeffEntry& e : t.entries)
        if (!e.generalized_match())
          witness += e.label + ": generalized " + e.generalized.get_str() + " vs " +
                     e.brute.get_str() + "; ";
      report.checks.push_back(pass_fail("t-extreme-dual", detail, ok, std::move(witness)));
    }
  }

  // Difference identity for the two lowest t rows.
  {
    const char* detail = "t[r-2,2] - t[r-2,1] equals its closed form (under the row hypotheses)";
    if (!loopless || m.rank() < 2) {
      report.checks.push_back(
          not_applicable("t-difference", detail, "needs a loopless matroid of rank >= 2"));
    } else {
      TDifferenceReport d = t_difference(m);
      if (!d.hypotheses_ok) {
        report.checks.push_back(
            not_applicable("t-difference", detail, "case-split hypotheses fail"));
      } else {
        report.checks.push_back(pass_fail("t-difference", detail, d.match(),
                                          "formula " + d.formula.get_str() + " vs " +
                                              d.brute.get_str()));
      }
    }
  }

  // Summation identities for small ranks.
  {
    const char* detail = "rank-1/rank-2 alternating-sum identities";
    if (!loopless || !coloop_free || (m.rank() != 1 && m.rank() != 2)) {
      report.checks.push_back(
          not_applicable("sum-identities", detail, "needs rank 1 or 2, no loops or coloops"));
    } else {
      LemmaIdentityReport lemma = lemma_identities(m);
      std::string witness;
      for (const LemmaClauseCheck& c : lemma.clauses)
        if (!c.ok())
          witness += "clause " + std::to_string(c.clause) + ": direct " + c.direct.get_str() +
                     "; ";
      report.checks.push_back(pass_fail("sum-identities", detail, lemma.all_ok(), witness));
    }
  }

  // Arithmetic axioms.
  {
    const char* detail = "divisibility, molecule, and positivity axioms for the multiplicity";
    if (n > opts.axiom_guard) {
      report.checks.push_back(not_applicable("arithmetic-axioms", detail, "axiom guard exceeded"));
    } else {
      AxiomReport axioms = check_arithmetic_axioms(mm, opts.axiom_guard);
      std::string witness;
      if (!axioms.violations.empty()) {
        witness = "axiom " + std::to_string(axioms.violations.front().axiom) + ": " +
                  axioms.violations.front().detail;
        if (axioms.violations.size() > 1)
          witness += " (+" + std::to_string(axioms.violations.size() - 1) + " more)";
      }
      report.checks.push_back(
          pass_fail("arithmetic-axioms", detail, axioms.all_ok(), std::move(witness)));
    }
  }

  return report;
}

}  // namespace mtutte
