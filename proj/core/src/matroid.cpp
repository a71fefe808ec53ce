#include "mtutte/matroid.hpp"

#include <algorithm>
#include <cassert>

namespace mtutte {

std::string RankAxiomViolation::describe() const {
  switch (axiom) {
    case 1:
      return "axiom 1: rank" + a.str() + " exceeds |" + a.str() + "|";
    case 2:
      return "axiom 2: rank not monotone between " + a.str() + " and " + b.str();
    case 3:
      return "axiom 3: rank not submodular on " + a.str() + ", " + b.str();
    default:
      return "unknown axiom";
  }
}

Matroid::Matroid(int n, const std::vector<int>& rank_table) : n_(n) {
  if (n < 0 || n > 63) throw InputError("matroid: ground-set size must be in [0, 63]");
  if (rank_table.size() != num_subsets(n))
    throw InputError("matroid: rank table must have exactly 2^n entries, got " +
                     std::to_string(rank_table.size()));
  rank_.resize(rank_table.size());
  for (std::size_t i = 0; i < rank_table.size(); ++i) {
    if (rank_table[i] < 0 || rank_table[i] > 63)
      throw InputError("matroid: rank value out of range at mask " + std::to_string(i));
    rank_[i] = static_cast<std::uint8_t>(rank_table[i]);
  }
}

int Matroid::rank(Subset a) const {
  if (!a.subset_of(ground()))
    throw InputError("rank: subset " + a.str() + " has bits outside the ground set");
  return rank_[a.bits];
}

Subset Matroid::closure(Subset a) const {
  const int ra = rank(a);
  Subset out = a;
  for (int e = 0; e < n_; ++e) {
    if (!out.contains(e) && rank_[a.with(e).bits] == ra) out = out.with(e);
  }
  return out;
}

std::vector<Subset> Matroid::flats(int guard) const {
  check_size_guard("subset enumeration", n_, guard);
  std::vector<Subset> out;
  const std::uint64_t limit = num_subsets(n_);
  for (std::uint64_t bits = 0; bits < limit; ++bits) {
    Subset a{bits};
    if (is_flat(a)) out.push_back(a);
  }
  return out;
}

std::vector<Subset> Matroid::flats_of_rank(int i, int guard) const {
  if (i < 0 || i > rank())
    throw InputError("flats_of_rank: rank " + std::to_string(i) + " outside [0, rank(M)]");
  check_size_guard("subset enumeration", n_, guard);
  std::vector<Subset> out;
  const std::uint64_t limit = num_subsets(n_);
  for (std::uint64_t bits = 0; bits < limit; ++bits) {
    Subset a{bits};
    if (rank_[bits] == i && is_flat(a)) out.push_back(a);
  }
  return out;
}

bool Matroid::is_cyclic_flat(Subset f) const {
  if (!is_flat(f)) throw InputError("is_cyclic_flat: " + f.str() + " is not a flat");
  // e is in a circuit inside f exactly when e is not a coloop of M|f.
  const int rf = rank(f);
  for (int e : f.elements()) {
    if (rank_[f.without(e).bits] == rf - 1) return false;
  }
  return true;
}

std::vector<Subset> Matroid::cyclic_flats_of_rank(int i, int guard) const {
  std::vector<Subset> out;
  for (Subset f : flats_of_rank(i, guard))
    if (is_cyclic_flat(f)) out.push_back(f);
  return out;
}

Subset Matroid::loops() const {
  Subset out;
  for (int e = 0; e < n_; ++e)
    if (rank_[Subset::single(e).bits] == 0) out = out.with(e);
  return out;
}

Subset Matroid::coloops() const {
  Subset out;
  const Subset x = ground();
  const int r = rank();
  for (int e = 0; e < n_; ++e)
    if (rank_[x.without(e).bits] == r - 1) out = out.with(e);
  return out;
}

Matroid Matroid::dual() const {
  const int r = rank();
  const std::uint64_t limit = num_subsets(n_);
  std::vector<int> table(limit);
  for (std::uint64_t bits = 0; bits < limit; ++bits) {
    Subset a{bits};
    int dual_rank = a.count() + rank_[(ground() - a).bits] - r;
    if (dual_rank < 0)
      throw InputError("dual: rank table is not a matroid rank function");
    table[bits] = dual_rank;
  }
  return Matroid(n_, table);
}

namespace {

std::vector<int> subset_elements(Subset t) { return t.elements(); }

}  // namespace

Minor Matroid::restriction(Subset t) const {
  if (!t.subset_of(ground()))
    throw InputError("restriction: " + t.str() + " has bits outside the ground set");
  std::vector<int> parents = subset_elements(t);
  const int k = static_cast<int>(parents.size());
  std::vector<int> table(num_subsets(k));
  for (std::uint64_t bits = 0; bits < num_subsets(k); ++bits) {
    Subset lifted;
    for (int e = 0; e < k; ++e)
      if ((bits >> e) & 1) lifted = lifted.with(parents[static_cast<std::size_t>(e)]);
    table[bits] = rank_[lifted.bits];
  }
  return Minor{Matroid(k, table), std::move(parents)};
}

Minor Matroid::contraction(Subset t) const {
  if (!t.subset_of(ground()))
    throw InputError("contraction: " + t.str() + " has bits outside the ground set");
  std::vector<int> parents = subset_elements(ground() - t);
  const int k = static_cast<int>(parents.size());
  const int rt = rank_[t.bits];
  std::vector<int> table(num_subsets(k));
  for (std::uint64_t bits = 0; bits < num_subsets(k); ++bits) {
    Subset lifted = t;
    for (int e = 0; e < k; ++e)
      if ((bits >> e) & 1) lifted = lifted.with(parents[static_cast<std::size_t>(e)]);
    table[bits] = rank_[lifted.bits] - rt;
  }
  return Minor{Matroid(k, table), std::move(parents)};
}

Subset Minor::to_parent(Subset a) const {
  Subset out;
  for (int e : a.elements()) out = out.with(parent_elements[static_cast<std::size_t>(e)]);
  return out;
}

Subset Minor::from_parent(Subset a) const {
  Subset out;
  for (std::size_t e = 0; e < parent_elements.size(); ++e) {
    if (a.contains(parent_elements[e])) {
      out = out.with(static_cast<int>(e));
      a = a.without(parent_elements[e]);
    }
  }
  if (!a.empty())
    throw InputError("from_parent: subset uses elements outside the minor");
  return out;
}

std::vector<RankAxiomViolation> validate_rank_axioms(int n, const std::vector<int>& rank_table) {
  if (n < 0 || n > 63 || rank_table.size() != num_subsets(n))
    throw InputError("validate_rank_axioms: table length must be 2^n");
  std::vector<RankAxiomViolation> out;
  const std::uint64_t limit = num_subsets(n);
  auto rk = [&](Subset s) { return rank_table[s.bits]; };
  for (std::uint64_t bits = 0; bits < limit; ++bits) {
    Subset a{bits};
    if (rk(a) < 0 || rk(a) > a.count()) out.push_back({1, a, Subset{}});
    for (int e = 0; e < n; ++e) {
      if (a.contains(e)) continue;
      Subset ae = a.with(e);
      // Local monotonicity: rank(A) ≤ rank(A ∪ {e}).
      if (rk(a) > rk(ae)) out.push_back({2, a, ae});
      // Local submodularity: rank(A∪e) + rank(A∪f) ≥ rank(A∪e∪f) + rank(A).
      for (int f = e + 1; f < n; ++f) {
        if (a.contains(f)) continue;
        Subset af = a.with(f);
        if (rk(ae) + rk(af) < rk(ae.with(f)) + rk(a)) out.push_back({3, ae, af});
      }
    }
  }
  return out;
}

std::vector<RankAxiomViolation> validate_rank_axioms(const Matroid& m) {
  return validate_rank_axioms(m.size(), m.rank_table());
}

int ClassPartition::nontrivial() const {
  int out = 0;
  for (const Subset& c : classes)
    if (c.count() >= 2) ++out;
  return out;
}

ClassPartition parallel_classes(const Matroid& m) {
  ClassPartition out;
  Subset remaining = m.ground() - m.loops();
  while (!remaining.empty()) {
    const int e = remaining.lowest();
    Subset cls = Subset::single(e);
    for (int f : (remaining.without(e)).elements()) {
      if (m.rank(Subset::single(e).with(f)) == 1) cls = cls.with(f);
    }
    out.classes.push_back(cls);
    remaining = remaining - cls;
  }
  return out;
}

ClassPartition series_classes(const Matroid& m) { return parallel_classes(m.dual()); }

int p(const Matroid& m) { return parallel_classes(m).size(); }
int p_prime(const Matroid& m) { return parallel_classes(m).nontrivial(); }
int s(const Matroid& m) { return series_classes(m).size(); }
int s_prime(const Matroid& m) { return series_classes(m).nontrivial(); }

}  // namespace mtutte
