#include "mtutte/extreme.hpp"

#include <algorithm>
#include <stdexcept>

namespace mtutte {

namespace {

void require_loopless(const Matroid& m, const char* where) {
  if (!m.is_loopless())
    throw InputError(std::string(where) + ": matroid has loops " + m.loops().str());
}

void require_coloop_free(const Matroid& m, const char* where) {
  if (!m.is_coloop_free())
    throw InputError(std::string(where) + ": matroid has coloops " + m.coloops().str());
}

// Σ_{A ⊆ f, |A| ≥ min_size} (-1)^{|A| + sign_offset} weight(A) m(A)
template <typename W>
mpz_class alternating_sum(const MultiplicityMatroid& mm, Subset f, int min_size, int sign_offset,
                          W&& weight) {
  mpz_class acc = 0;
  for_each_subset_of(f, [&](Subset a) {
    if (a.count() < min_size) return;
    mpz_class term = weight(a) * mm.multiplicity(a);
    if ((a.count() + sign_offset) % 2 != 0)
      acc -= term;
    else
      acc += term;
  });
  return acc;
}

int p_of_restriction(const Matroid& m, Subset f) { return p(m.restriction(f).matroid); }

int p_prime_of_restriction(const Matroid& m, Subset f) {
  return p_prime(m.restriction(f).matroid);
}

int p_of_contraction(const Matroid& m, Subset f) {
  Minor minor = m.contraction(f);
  // Contracting a loopless matroid by a flat cannot create loops.
  if (!minor.matroid.is_loopless())
    throw std::logic_error("p_of_contraction: contraction by a flat produced loops");
  return p(minor.matroid);
}

// Σ_i min(|P_i|, 3) - |{i : |P_i| ≥ 3}| - 3 over the parallel classes of m.
mpz_class g_form(const Matroid& m) {
  ClassPartition classes = parallel_classes(m);
  mpz_class acc = -3;
  for (const Subset& cls : classes.classes) {
    acc += std::min(cls.count(), 3);
    if (cls.count() >= 3) acc -= 1;
  }
  return acc;
}

}  // namespace

bool ExtremeCoefficientReport::all_match() const {
  for (const CoeffEntry& e : entries)
    if (!e.match()) return false;
  return true;
}

bool DualExtremeReport::all_match() const {
  for (const DualCoeffEntry& e : entries)
    if (!e.match()) return false;
  return true;
}

bool TExtremeReport::generalized_all_match() const {
  for (const TCoeffEntry& e : entries)
    if (!e.generalized_match()) return false;
  return true;
}

bool TExtremeReport::as_stated_all_match() const {
  for (const TCoeffEntry& e : entries)
    if (!e.as_stated_match()) return false;
  return true;
}

ExtremeCoefficientReport tutte_x0_extreme(const Matroid& m) {
  require_loopless(m, "tutte_x0_extreme");
  const int r = m.rank();
  const UniPoly slice = tutte_x0(m);
  const int pm = p(m);

  ExtremeCoefficientReport report;
  {
    CoeffEntry e{"[x^r]T(x,0)", r, 0, true, 1, slice.coeff(r)};
    report.entries.push_back(std::move(e));
  }
  {
    CoeffEntry e{"[x^(r-1)]T(x,0)", r - 1, 0, r >= 1, 0, 0};
    if (e.applicable) {
      e.formula = pm - r;
      e.brute = slice.coeff(r - 1);
    }
    report.entries.push_back(std::move(e));
  }
  {
    CoeffEntry e{"[x^(r-2)]T(x,0)", r - 2, 0, r >= 2, 0, 0};
    if (e.applicable) {
      mpz_class acc = binomial(r, 2) - mpz_class(r - 1) * pm;
      for (Subset f : m.flats_of_rank(2)) acc += p_of_restriction(m, f) - 1;
      e.formula = acc;
      e.brute = slice.coeff(r - 2);
    }
    report.entries.push_back(std::move(e));
  }
  return report;
}

mpz_class b_ij_general(const MultiplicityMatroid& mm, int i, int j, int guard) {
  const Matroid& m = mm.matroid();
  require_loopless(m, "b_ij_general");
  check_size_guard("double flat enumeration", m.size(), guard);
  if (i < 0 || j < 0) throw InputError("b_ij_general: negative degrees");

  const int r = m.rank();
  mpz_class total = 0;
  for (Subset f : m.flats()) {
    Minor contracted = m.contraction(f);
    MobiusTable mu(contracted.matroid);
    mpz_class x_side = 0;
    for (Subset fp : mu.flats())
      x_side += mu.from_empty(fp) * binomial(r - m.rank(f | contracted.to_parent(fp)), i);
    if (x_side == 0) continue;
    mpz_class y_side = alternating_sum(
        mm, f, 0, 0, [&](Subset a) { return binomial(m.nullity(a), j); });
    total += x_side * y_side;
  }
  if ((r + i + j) % 2 != 0) total = -total;
  return total;
}

std::vector<std::vector<mpz_class>> b_grid_general(const MultiplicityMatroid& mm, int imax,
                                                   int jmax, int guard) {
  const Matroid& m = mm.matroid();
  require_loopless(m, "b_grid_general");
  check_size_guard("double flat enumeration", m.size(), guard);
  if (imax < 0 || jmax < 0) throw InputError("b_grid_general: negative degrees");

  const int r = m.rank();
  const int n = m.size();
  std::vector<std::vector<mpz_class>> grid(
      static_cast<std::size_t>(imax) + 1,
      std::vector<mpz_class>(static_cast<std::size_t>(jmax) + 1));

  for (Subset f : m.flats()) {
    // x-side weights collapsed by corank c = r - rank(F ∪ F'), y-side by
    // nullity d = |A| - rank(A); both are independent of (i, j).
    Minor contracted = m.contraction(f);
    MobiusTable mu(contracted.matroid);
    std::vector<mpz_class> by_corank(static_cast<std::size_t>(r) + 1);
    for (Subset fp : mu.flats())
      by_corank[static_cast<std::size_t>(r - m.rank(f | contracted.to_parent(fp)))] +=
          mu.from_empty(fp);
    std::vector<mpz_class> by_nullity(static_cast<std::size_t>(n) + 1);
    for_each_subset_of(f, [&](Subset a) {
      if (a.count() % 2 == 0)
        by_nullity[static_cast<std::size_t>(m.nullity(a))] += mm.multiplicity(a);
      else
        by_nullity[static_cast<std::size_t>(m.nullity(a))] -= mm.multiplicity(a);
    });

    for (int i = 0; i <= imax; ++i) {
      mpz_class x_side = 0;
      for (int c = i; c <= r; ++c)
        if (by_corank[static_cast<std::size_t>(c)] != 0)
          x_side += by_corank[static_cast<std::size_t>(c)] * binomial(c, i);
      if (x_side == 0) continue;
      for (int j = 0; j <= jmax; ++j) {
        mpz_class y_side = 0;
        for (int d = j; d <= n; ++d)
          if (by_nullity[static_cast<std::size_t>(d)] != 0)
            y_side += by_nullity[static_cast<std::size_t>(d)] * binomial(d, j);
        grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] += x_side * y_side;
      }
    }
  }

  for (int i = 0; i <= imax; ++i)
    for (int j = 0; j <= jmax; ++j)
      if ((r + i + j) % 2 != 0)
        grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            -grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return grid;
}

ExtremeCoefficientReport extreme_b_top(const MultiplicityMatroid& mm) {
  const Matroid& m = mm.matroid();
  require_loopless(m, "extreme_b_top");
  const int r = m.rank();
  const BivarPoly engine = multiplicity_tutte_definition(mm);
  const mpz_class m_empty = mm.multiplicity(Subset::none());
  const int pm = p(m);

  const std::vector<Subset> flats1 = r >= 1 ? m.flats_of_rank(1) : std::vector<Subset>{};
  const std::vector<Subset> flats2 = r >= 2 ? m.flats_of_rank(2) : std::vector<Subset>{};
  std::vector<Subset> cyclic1;
  for (Subset f : flats1)
    if (m.is_cyclic_flat(f)) cyclic1.push_back(f);

  auto weight_one = [](Subset) { return mpz_class{1}; };
  auto weight_size_minus_one = [](Subset a) { return mpz_class{a.count() - 1}; };
  auto weight_nullity = [&](Subset a) { return mpz_class{m.nullity(a)}; };
  auto weight_choose_size = [](Subset a) { return binomial(a.count() - 1, 2); };
  auto weight_choose_nullity = [&](Subset a) { return binomial(m.nullity(a), 2); };

  ExtremeCoefficientReport report;

  {
    CoeffEntry e{"b[r,0]", r, 0, true, m_empty, engine.coeff(r, 0)};
    report.entries.push_back(std::move(e));
  }
  {
    CoeffEntry e{"b[r-1,0]", r - 1, 0, r >= 1, 0, 0};
    if (e.applicable) {
      mpz_class acc = mpz_class(pm - r) * m_empty;
      for (Subset f : flats1) acc += alternating_sum(mm, f, 0, 1, weight_one);
      e.formula = acc;
      e.brute = engine.coeff(r - 1, 0);
    }
    report.entries.push_back(std::move(e));
  }
  {
    CoeffEntry e{"b[r-2,0]", r - 2, 0, r >= 2, 0, 0};
    if (e.applicable) {
      mpz_class lead = binomial(r, 2) - mpz_class(r - 1) * pm;
      for (Subset f : flats2) lead += p_of_restriction(m, f) - 1;
      mpz_class acc = lead * m_empty;
      for (Subset f : flats1)
        acc += mpz_class(p_of_contraction(m, f) - r + 1) *
               alternating_sum(mm, f, 0, 1, weight_one);
      for (Subset f : flats2) acc += alternating_sum(mm, f, 0, 0, weight_one);
      e.formula = acc;
      e.brute = engine.coeff(r - 2, 0);
    }
    report.entries.push_back(std::move(e));
  }
  {
    CoeffEntry e{"b[r-1,1]", r - 1, 1, r >= 1, 0, 0};
    if (e.applicable) {
      mpz_class acc = 0;
      for (Subset f : cyclic1) acc += alternating_sum(mm, f, 2, 0, weight_size_minus_one);
      e.formula = acc;
      e.brute = engine.coeff(r - 1, 1);
    }
    report.entries.push_back(std::move(e));
  }
  {
    CoeffEntry e{"b[r-2,1]", r - 2, 1, r >= 2, 0, 0};
    if (e.applicable) {
      mpz_class acc = 0;
      for (Subset f : cyclic1)
        acc += mpz_class(p_of_contraction(m, f) - r + 1) *
               alternating_sum(mm, f, 2, 0, weight_size_minus_one);
      for (Subset f : flats2) acc += alternating_sum(mm, f, 2, 1, weight_nullity);
      e.formula = acc;
      e.brute = engine.coeff(r - 2, 1);
    }
    report.entries.push_back(std::move(e));
  }
  {
    CoeffEntry e{"b[r-2,2]", r - 2, 2, r >= 2, 0, 0};
    if (e.applicable) {
      mpz_class acc = 0;
      for (Subset f : cyclic1)
        acc += mpz_class(p_of_contraction(m, f) - r + 1) *
               alternating_sum(mm, f, 3, 1, weight_choose_size);
      for (Subset f : flats2) acc += alternating_sum(mm, f, 3, 0, weight_choose_nullity);
      e.formula = acc;
      e.brute = engine.coeff(r - 2, 2);
    }
    report.entries.push_back(std::move(e));
  }
  return report;
}

DualExtremeReport extreme_b_dual(const MultiplicityMatroid& mm) {
  const Matroid& m = mm.matroid();
  require_coloop_free(m, "extreme_b_dual");
  const int n = m.size();
  const int r = m.rank();
  const int cr = n - r;
  const Subset x = m.ground();

  const BivarPoly engine = multiplicity_tutte_definition(mm);
  const MultiplicityMatroid dual_mm = mm.dual();
  const Matroid& dual = dual_mm.matroid();
  const ExtremeCoefficientReport top_of_dual = extreme_b_top(dual_mm);

  const mpz_class m_full = mm.multiplicity(x);
  const int sm = s(m);

  const std::vector<Subset> flats1 = cr >= 1 ? dual.flats_of_rank(1) : std::vector<Subset>{};
  const std::vector<Subset> flats2 = cr >= 2 ? dual.flats_of_rank(2) : std::vector<Subset>{};
  std::vector<Subset> cyclic1;
  for (Subset f : flats1)
    if (dual.is_cyclic_flat(f)) cyclic1.push_back(f);

  // Shorthands of the dual clauses: s(F̄) = s(M|(X\F)), s(M/F̄).
  auto s_rest_complement = [&](Subset f) { return s(m.restriction(x - f).matroid); };
  auto s_cont_complement = [&](Subset f) { return s(m.contraction(x - f).matroid); };

  auto weight_one = [](Subset) { return mpz_class{1}; };
  auto weight_size_minus_one = [](Subset a) { return mpz_class{a.count() - 1}; };
  // |A| - rank*(A): the nullity in the dual, i.e. r - rank(X\A).
  auto weight_dual_nullity = [&](Subset a) { return mpz_class{dual.nullity(a)}; };
  auto weight_choose_size = [](Subset a) { return binomial(a.count() - 1, 2); };
  auto weight_choose_dual_nullity = [&](Subset a) { return binomial(dual.nullity(a), 2); };

  DualExtremeReport report;
  auto push = [&](std::string label, int i, int j, bool applicable, mpz_class direct) {
    DualCoeffEntry e;
    e.label = std::move(label);
    e.xdeg = i;
    e.ydeg = j;
    e.applicable = applicable;
    if (applicable) {
      e.direct = std::move(direct);
      e.brute = engine.coeff(i, j);
    }
    report.entries.push_back(std::move(e));
  };

  push("b[0,n-r]", 0, cr, true, m_full);

  {
    mpz_class acc = mpz_class(sm - n + r) * m_full;
    for (Subset f : flats1) acc += alternating_sum(dual_mm, f, 0, 1, weight_one);
    push("b[0,n-r-1]", 0, cr - 1, cr >= 1, std::move(acc));
  }
  {
    mpz_class acc = 0;
    if (cr >= 2) {
      mpz_class lead = binomial(cr, 2) - mpz_class(cr - 1) * sm;
      for (Subset f : flats2) lead += s_cont_complement(f) - 1;
      acc = lead * m_full;
      for (Subset f : flats1)
        acc += mpz_class(s_rest_complement(f) - n + r + 1) *
               alternating_sum(dual_mm, f, 0, 1, weight_one);
      for (Subset f : flats2) acc += alternating_sum(dual_mm, f, 0, 0, weight_one);
    }
    push("b[0,n-r-2]", 0, cr - 2, cr >= 2, std::move(acc));
  }
  {
    mpz_class acc = 0;
    for (Subset f : cyclic1) acc += alternating_sum(dual_mm, f, 2, 0, weight_size_minus_one);
    push("b[1,n-r-1]", 1, cr - 1, cr >= 1, std::move(acc));
  }
  {
    mpz_class acc = 0;
    if (cr >= 2) {
      for (Subset f : cyclic1)
        acc += mpz_class(s_rest_complement(f) - n + r + 1) *
               alternating_sum(dual_mm, f, 2, 0, weight_size_minus_one);
      for (Subset f : flats2) acc += alternating_sum(dual_mm, f, 2, 1, weight_dual_nullity);
    }
    push("b[1,n-r-2]", 1, cr - 2, cr >= 2, std::move(acc));
  }
  {
    mpz_class acc = 0;
    if (cr >= 2) {
      for (Subset f : cyclic1)
        acc += mpz_class(s_rest_complement(f) - n + r + 1) *
               alternating_sum(dual_mm, f, 3, 1, weight_choose_size);
      for (Subset f : flats2) acc += alternating_sum(dual_mm, f, 3, 0, weight_choose_dual_nullity);
    }
    push("b[2,n-r-2]", 2, cr - 2, cr >= 2, std::move(acc));
  }

  // Second path: the top-family formulas on the dual, indices swapped.
  for (std::size_t k = 0; k < report.entries.size(); ++k) {
    if (!report.entries[k].applicable) continue;
    report.entries[k].via_dual = top_of_dual.entries[k].formula;
  }
  return report;
}

namespace {

struct TContext {
  int r = 0;
  int pm = 0;
  int ppm = 0;
  std::vector<Subset> flats2;
  std::vector<Subset> cyclic1;
  std::vector<Subset> cyclic2;
  std::vector<int> p_rest2;       // p(M|F) for flats2
  std::vector<int> p_cont1;       // p(M/F) for cyclic1
};

TContext t_context(const Matroid& m) {
  TContext ctx;
  ctx.r = m.rank();
  ctx.pm = p(m);
  ctx.ppm = p_prime(m);
  if (ctx.r >= 1)
    for (Subset f : m.flats_of_rank(1))
      if (m.is_cyclic_flat(f)) ctx.cyclic1.push_back(f);
  if (ctx.r >= 2) {
    ctx.flats2 = m.flats_of_rank(2);
    for (Subset f : ctx.flats2) {
      ctx.p_rest2.push_back(p_of_restriction(m, f));
      if (m.is_cyclic_flat(f)) ctx.cyclic2.push_back(f);
    }
  }
  for (Subset f : ctx.cyclic1) ctx.p_cont1.push_back(p_of_contraction(m, f));
  return ctx;
}

}  // namespace

TExtremeReport t_extreme(const Matroid& m) {
  require_loopless(m, "t_extreme");
  const BivarPoly engine = tutte_definition(m);
  const TContext ctx = t_context(m);
  const int r = ctx.r;

  TExtremeReport report;
  for (Subset f : ctx.cyclic1)
    if (f.count() < 3) report.rank1_hypothesis_ok = false;
  for (Subset f : ctx.cyclic2) {
    int pf = p_of_restriction(m, f);
    if (pf != 2 && pf != 3) report.rank2_hypothesis_ok = false;
  }

  auto push = [&](std::string label, int i, int j, bool applicable, mpz_class as_stated,
                  mpz_class generalized, bool flagged) {
    TCoeffEntry e;
    e.label = std::move(label);
    e.xdeg = i;
    e.ydeg = j;
    e.applicable = applicable;
    e.hypothesis_flag = applicable && flagged;
    if (applicable) {
      e.as_stated = std::move(as_stated);
      e.generalized = std::move(generalized);
      e.brute = engine.coeff(i, j);
    }
    report.entries.push_back(std::move(e));
  };

  push("t[r,0]", r, 0, true, 1, 1, false);
  push("t[r-1,0]", r - 1, 0, r >= 1, ctx.pm - r, ctx.pm - r, false);
  {
    mpz_class v = binomial(r, 2) - mpz_class(r - 1) * ctx.pm;
    for (int pf : ctx.p_rest2) v += pf - 1;
    push("t[r-2,0]", r - 2, 0, r >= 2, v, v, false);
  }
  push("t[r-1,1]", r - 1, 1, r >= 1, ctx.ppm, ctx.ppm, false);
  {
    // Shared head of rows 5 and 6: (1-r)p' + Σ_{rank-1 cyclic F} p(M/F).
    mpz_class head = mpz_class(1 - r) * ctx.ppm;
    for (int pc : ctx.p_cont1) head += pc;

    mpz_class stated5 = head;
    mpz_class general5 = head;
    for (std::size_t k = 0; k < ctx.cyclic2.size(); ++k)
      if (p_of_restriction(m, ctx.cyclic2[k]) == 3) stated5 += 1;
    for (int pf : ctx.p_rest2) general5 += pf - 2;
    push("t[r-2,1]", r - 2, 1, r >= 2, std::move(stated5), std::move(general5),
         !report.rank2_hypothesis_ok);

    mpz_class stated6 = head;
    mpz_class general6 = 0;
    for (Subset f : ctx.cyclic2) {
      int pf = p_of_restriction(m, f);
      if (pf == 2) stated6 += 1;
      if (pf == 3) stated6 += p_prime_of_restriction(m, f);
      general6 += g_form(m.restriction(f).matroid);
    }
    for (std::size_t k = 0; k < ctx.cyclic1.size(); ++k)
      if (ctx.cyclic1[k].count() >= 3) general6 += ctx.p_cont1[k] - r + 1;
    push("t[r-2,2]", r - 2, 2, r >= 2, std::move(stated6), std::move(general6),
         !(report.rank1_hypothesis_ok && report.rank2_hypothesis_ok));
  }
  return report;
}

TExtremeReport t_extreme_dual(const Matroid& m) {
  require_coloop_free(m, "t_extreme_dual");
  const Matroid dual = m.dual();
  const TExtremeReport on_dual = t_extreme(dual);
  const BivarPoly engine = tutte_definition(m);
  const int n = m.size();
  const int r = m.rank();
  const int cr = n - r;

  TExtremeReport report;
  report.rank1_hypothesis_ok = on_dual.rank1_hypothesis_ok;
  report.rank2_hypothesis_ok = on_dual.rank2_hypothesis_ok;

  const char* labels[6] = {"t[0,n-r]",   "t[0,n-r-1]", "t[0,n-r-2]",
                           "t[1,n-r-1]", "t[1,n-r-2]", "t[2,n-r-2]"};
  for (std::size_t k = 0; k < 6; ++k) {
    const TCoeffEntry& src = on_dual.entries[k];
    TCoeffEntry e;
    e.label = labels[k];
    e.xdeg = src.ydeg;
    e.ydeg = src.xdeg;
    e.applicable = src.applicable;
    e.hypothesis_flag = src.hypothesis_flag;
    if (e.applicable) {
      e.generalized = src.generalized;
      e.brute = engine.coeff(e.xdeg, e.ydeg);
    }
    report.entries.push_back(std::move(e));
  }

  // Direct transcriptions exist for the first four entries.
  const int sm = s(m);
  if (report.entries[0].applicable) report.entries[0].as_stated = 1;
  if (report.entries[1].applicable) report.entries[1].as_stated = sm - n + r;
  if (report.entries[2].applicable) {
    mpz_class v = binomial(cr, 2) - mpz_class(cr - 1) * sm;
    const Subset x = m.ground();
    for (Subset f : dual.flats_of_rank(2)) v += s(m.contraction(x - f).matroid) - 1;
    report.entries[2].as_stated = std::move(v);
  }
  if (report.entries[3].applicable) report.entries[3].as_stated = s_prime(m);
  report.entries[4].as_stated_available = false;
  report.entries[5].as_stated_available = false;
  return report;
}

TDifferenceReport t_difference(const Matroid& m) {
  require_loopless(m, "t_difference");
  const int r = m.rank();
  if (r < 2) throw InputError("t_difference: rank must be at least 2");

  TDifferenceReport out;
  out.applicable = true;
  const TExtremeReport base = t_extreme(m);
  out.hypotheses_ok = base.hypotheses_ok();

  mpz_class v = 0;
  for (Subset f : m.cyclic_flats_of_rank(2)) {
    const int pf = p_of_restriction(m, f);
    if (pf == 2) v += 1;
    if (pf == 3) v += p_prime_of_restriction(m, f) - 1;
  }
  out.formula = std::move(v);
  const BivarPoly engine = tutte_definition(m);
  out.brute = engine.coeff(r - 2, 2) - engine.coeff(r - 2, 1);
  return out;
}

bool LemmaClauseCheck::ok() const {
  if (!applicable) return true;
  return printed_applicable ? direct == printed : direct == general;
}

bool LemmaIdentityReport::all_ok() const {
  for (const LemmaClauseCheck& c : clauses)
    if (!c.ok()) return false;
  return true;
}

LemmaIdentityReport lemma_identities(const Matroid& m) {
  require_loopless(m, "lemma_identities");
  require_coloop_free(m, "lemma_identities");
  const int r = m.rank();
  if (r != 1 && r != 2)
    throw InputError("lemma_identities: rank must be 1 or 2, got " + std::to_string(r));

  const MultiplicityMatroid trivial = MultiplicityMatroid::trivial(m);
  const Subset x = m.ground();
  LemmaIdentityReport report;

  auto weight_size_minus_one = [](Subset a) { return mpz_class{a.count() - 1}; };
  auto weight_choose_size = [](Subset a) { return binomial(a.count() - 1, 2); };
  auto weight_nullity = [&](Subset a) { return mpz_class{m.nullity(a)}; };
  auto weight_choose_nullity = [&](Subset a) { return binomial(m.nullity(a), 2); };

  {
    LemmaClauseCheck& c = report.clauses[0];
    c.clause = 1;
    c.applicable = (r == 1);
    if (c.applicable) {
      c.direct = alternating_sum(trivial, x, 2, 0, weight_size_minus_one);
      c.printed_applicable = true;
      c.printed = 1;
      c.general = 1;
    }
  }
  {
    LemmaClauseCheck& c = report.clauses[1];
    c.clause = 2;
    c.applicable = (r == 1 && m.size() >= 3);
    if (c.applicable) {
      c.direct = alternating_sum(trivial, x, 3, 1, weight_choose_size);
      c.printed_applicable = true;
      c.printed = 1;
      c.general = 1;
    }
  }
  {
    LemmaClauseCheck& c = report.clauses[2];
    c.clause = 3;
    c.applicable = (r == 2);
    if (c.applicable) {
      c.direct = alternating_sum(trivial, x, 0, 1, weight_nullity);
      c.printed_applicable = true;
      c.printed = p(m) - 2;
      c.general = c.printed;
    }
  }
  {
    LemmaClauseCheck& c = report.clauses[3];
    c.clause = 4;
    c.applicable = (r == 2);
    if (c.applicable) {
      c.direct = alternating_sum(trivial, x, 0, 0, weight_choose_nullity);
      const int pm = p(m);
      c.printed_applicable = (pm == 2 || pm == 3);
      if (pm == 2) c.printed = 1;
      if (pm == 3) c.printed = p_prime(m);
      c.general = g_form(m);
    }
  }
  return report;
}

}  // namespace mtutte
