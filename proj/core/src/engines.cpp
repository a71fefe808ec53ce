#include "mtutte/engines.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "mtutte/mobius.hpp"

namespace mtutte {

BivarPoly multiplicity_tutte_definition(const MultiplicityMatroid& mm, int guard) {
  const Matroid& m = mm.matroid();
  check_size_guard("subset enumeration", m.size(), guard);
  const int r = m.rank();
  const int corank_max = r;
  const int nullity_max = m.size() - r;

  // weight[a][b] = Σ m(A) over subsets with corank a and nullity b.
  std::vector<std::vector<mpz_class>> weight(
      static_cast<std::size_t>(corank_max) + 1,
      std::vector<mpz_class>(static_cast<std::size_t>(nullity_max) + 1));
  const std::uint64_t limit = num_subsets(m.size());
  for (std::uint64_t bits = 0; bits < limit; ++bits) {
    Subset a{bits};
    weight[static_cast<std::size_t>(m.corank(a))][static_cast<std::size_t>(m.nullity(a))] +=
        mm.multiplicity(a);
  }

  BivarPoly out;
  for (int a = 0; a <= corank_max; ++a) {
    for (int b = 0; b <= nullity_max; ++b) {
      const mpz_class& w = weight[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
      if (w == 0) continue;
      BivarPoly term = BivarPoly::binomial_power(-1, a, Var::x) *
                       BivarPoly::binomial_power(-1, b, Var::y);
      out += term.scaled(w);
    }
  }
  return out;
}

BivarPoly tutte_definition(const Matroid& m, int guard) {
  return multiplicity_tutte_definition(MultiplicityMatroid::trivial(m), guard);
}

namespace {

std::string memo_key(const Matroid& m) {
  const auto& table = m.raw_table();
  return std::string(reinterpret_cast<const char*>(table.data()), table.size());
}

BivarPoly delcon_recurse(const Matroid& m, std::unordered_map<std::string, BivarPoly>& memo) {
  std::string key = memo_key(m);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;

  const Subset loops = m.loops();
  const Subset coloops = m.coloops();
  BivarPoly result;
  if ((loops | coloops) == m.ground()) {
    result = BivarPoly::monomial(coloops.count(), loops.count());
  } else {
    const int e = (m.ground() - (loops | coloops)).lowest();
    Minor deleted = m.restriction(m.ground().without(e));
    Minor contracted = m.contraction(Subset::single(e));
    result = delcon_recurse(deleted.matroid, memo) + delcon_recurse(contracted.matroid, memo);
  }
  memo.emplace(std::move(key), result);
  return result;
}

}  // namespace

BivarPoly tutte_deletion_contraction(const Matroid& m, int guard) {
  check_size_guard("subset enumeration", m.size(), guard);
  std::unordered_map<std::string, BivarPoly> memo;
  return delcon_recurse(m, memo);
}

ActivityExpansion tutte_by_activities(const Matroid& m, std::span<const int> order, int guard) {
  const int n = m.size();
  check_size_guard("subset enumeration", n, guard);

  std::vector<int> position(static_cast<std::size_t>(n));
  if (order.empty()) {
    for (int e = 0; e < n; ++e) position[static_cast<std::size_t>(e)] = e;
  } else {
    if (static_cast<int>(order.size()) != n)
      throw InputError("tutte_by_activities: order must list all " + std::to_string(n) +
                       " elements");
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int pos = 0; pos < n; ++pos) {
      int e = order[static_cast<std::size_t>(pos)];
      if (e < 0 || e >= n || seen[static_cast<std::size_t>(e)])
        throw InputError("tutte_by_activities: order is not a permutation of 0.." +
                         std::to_string(n - 1));
      seen[static_cast<std::size_t>(e)] = true;
      position[static_cast<std::size_t>(e)] = pos;
    }
  }

  const int r = m.rank();
  ActivityExpansion out;
  out.order.resize(static_cast<std::size_t>(n));
  for (int e = 0; e < n; ++e)
    out.order[static_cast<std::size_t>(position[static_cast<std::size_t>(e)])] = e;
  for_each_k_subset(n, r, [&](Subset basis) {
    if (m.rank(basis) != r) return;

    ActivityRecord record;
    record.basis = basis;
    for (int e = 0; e < n; ++e) {
      if (basis.contains(e)) continue;
      // e is externally active iff it is the least element of its
      // fundamental circuit C(e, basis).
      int least = e;
      for (int f : basis.elements()) {
        if (m.rank(basis.without(f).with(e)) == r &&
            position[static_cast<std::size_t>(f)] < position[static_cast<std::size_t>(least)])
          least = f;
      }
      if (least == e) ++record.external_activity;
    }
    for (int f : basis.elements()) {
      // f is internally active iff it is the least element of its
      // fundamental cocircuit {f} ∪ {e ∉ B : B - f + e spans}.
      int least = f;
      for (int e = 0; e < n; ++e) {
        if (basis.contains(e)) continue;
        if (m.rank(basis.without(f).with(e)) == r &&
            position[static_cast<std::size_t>(e)] < position[static_cast<std::size_t>(least)])
          least = e;
      }
      if (least == f) ++record.internal_activity;
    }
    out.polynomial.add_term(record.internal_activity, record.external_activity, 1);
    out.records.push_back(record);
  });
  return out;
}

BivarPoly convolution_tutte(const MultiplicityMatroid& mm, ConvolutionDomain domain, int guard) {
  const Matroid& m = mm.matroid();
  check_size_guard("convolution enumeration", m.size(), guard);

  BivarPoly out;
  auto add_summand = [&](Subset a) {
    MultiplicityMatroid restricted = mm.restriction(a);
    UniPoly in_y = multiplicity_tutte_definition(restricted).at_x_zero();
    if (in_y.is_zero()) return;
    Minor contracted = m.contraction(a);
    UniPoly in_x = tutte_definition(contracted.matroid).at_y_zero();
    out += outer_product(in_x, in_y);
  };

  if (domain == ConvolutionDomain::Flats) {
    for (Subset f : m.flats(guard)) add_summand(f);
  } else {
    const std::uint64_t limit = num_subsets(m.size());
    for (std::uint64_t bits = 0; bits < limit; ++bits) add_summand(Subset{bits});
  }
  return out;
}

UniPoly char_poly(const Matroid& m, int guard) {
  check_size_guard("subset enumeration", m.size(), guard);
  std::vector<mpz_class> coeffs(static_cast<std::size_t>(m.rank()) + 1);
  const std::uint64_t limit = num_subsets(m.size());
  for (std::uint64_t bits = 0; bits < limit; ++bits) {
    Subset a{bits};
    if (a.count() % 2 == 0)
      coeffs[static_cast<std::size_t>(m.corank(a))] += 1;
    else
      coeffs[static_cast<std::size_t>(m.corank(a))] -= 1;
  }
  return UniPoly{std::move(coeffs)};
}

UniPoly char_poly_via_flats(const Matroid& m, int guard) {
  if (!m.is_loopless())
    throw InputError("char_poly_via_flats: matroid has loops " + m.loops().str());
  MobiusTable table(m, guard);
  std::vector<mpz_class> coeffs(static_cast<std::size_t>(m.rank()) + 1);
  for (Subset f : table.flats())
    coeffs[static_cast<std::size_t>(m.corank(f))] += table.from_empty(f);
  return UniPoly{std::move(coeffs)};
}

UniPoly tutte_x0(const Matroid& m, int guard) {
  if (!m.is_loopless()) throw InputError("tutte_x0: matroid has loops " + m.loops().str());
  return negate_by_parity(substitute_one_minus(char_poly(m, guard)), m.rank());
}

mpz_class count_bases(const Matroid& m, int guard) {
  check_size_guard("subset enumeration", m.size(), guard);
  const int r = m.rank();
  mpz_class count = 0;
  for_each_k_subset(m.size(), r, [&](Subset b) {
    if (m.rank(b) == r) count += 1;
  });
  return count;
}

}  // namespace mtutte
