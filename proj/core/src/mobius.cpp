#include "mtutte/mobius.hpp"

#include <algorithm>

namespace mtutte {

namespace {

void require_loopless(const Matroid& m, const char* where) {
  if (!m.is_loopless())
    throw InputError(std::string(where) + ": matroid has loops " + m.loops().str());
}

void require_flat(const Matroid& m, Subset f, const char* where) {
  if (!m.is_flat(f)) throw InputError(std::string(where) + ": " + f.str() + " is not a flat");
}

}  // namespace

MobiusTable::MobiusTable(const Matroid& m, int guard) {
  require_loopless(m, "MobiusTable");
  flats_ = m.flats(guard);
  // Process flats by increasing size so every proper subflat is ready.
  std::vector<Subset> order = flats_;
  std::sort(order.begin(), order.end(), [](Subset a, Subset b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return a.bits < b.bits;
  });
  for (Subset f : order) {
    if (f.empty()) {
      mu_[f] = 1;
      continue;
    }
    mpz_class acc = 0;
    for (Subset g : order) {
      if (g == f) break;  // order is by size; every proper subflat precedes f
      if (g.subset_of(f)) acc += mu_[g];
    }
    mu_[f] = -acc;
  }
}

const mpz_class& MobiusTable::from_empty(Subset f) const {
  auto it = mu_.find(f);
  if (it == mu_.end()) throw InputError("MobiusTable: " + f.str() + " is not a flat");
  return it->second;
}

mpz_class mobius(const Matroid& m, Subset f1, Subset f2, int guard) {
  require_loopless(m, "mobius");
  require_flat(m, f1, "mobius");
  require_flat(m, f2, "mobius");
  if (!f1.subset_of(f2)) return 0;

  // Flats of the interval [f1, f2], by increasing size.
  std::vector<Subset> interval;
  for (Subset g : m.flats(guard))
    if (f1.subset_of(g) && g.subset_of(f2)) interval.push_back(g);
  std::sort(interval.begin(), interval.end(), [](Subset a, Subset b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return a.bits < b.bits;
  });

  std::map<Subset, mpz_class> mu;
  for (Subset g : interval) {
    if (g == f1) {
      mu[g] = 1;
      continue;
    }
    mpz_class acc = 0;
    for (Subset h : interval) {
      if (h == g) break;
      if (h.subset_of(g)) acc += mu[h];
    }
    mu[g] = -acc;
  }
  return mu[f2];
}

mpz_class mobius_boolean_expansion(const Matroid& m, Subset f1, Subset f2) {
  require_loopless(m, "mobius_boolean_expansion");
  require_flat(m, f1, "mobius_boolean_expansion");
  require_flat(m, f2, "mobius_boolean_expansion");
  if (!f1.subset_of(f2)) return 0;

  const int target = m.rank(f2);
  mpz_class acc = 0;
  for_each_subset_of(f2 - f1, [&](Subset d) {
    if (m.rank(f1 | d) != target) return;
    if (d.count() % 2 == 0)
      acc += 1;
    else
      acc -= 1;
  });
  return acc;
}

mpz_class mobius_low_rank(const Matroid& m, Subset f) {
  require_loopless(m, "mobius_low_rank");
  require_flat(m, f, "mobius_low_rank");
  const int rf = m.rank(f);
  switch (rf) {
    case 0:
      return 1;  // the empty flat
    case 1:
      return -1;
    case 2: {
      Minor restricted = m.restriction(f);
      return p(restricted.matroid) - 1;
    }
    default:
      throw InputError("mobius_low_rank: rank(" + f.str() + ") = " + std::to_string(rf) + " > 2");
  }
}

}  // namespace mtutte
