#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mtutte/errors.hpp"
#include "mtutte/subset.hpp"

namespace mtutte {

struct Minor;

// A violated rank axiom together with its witness subsets.
//   axiom 1: rank(a) > |a|                               (witness: a)
//   axiom 2: a ⊆ b but rank(a) > rank(b)                 (witness: a, b)
//   axiom 3: rank(a∪b) + rank(a∩b) > rank(a) + rank(b)   (witness: a, b)
struct RankAxiomViolation {
  int axiom = 0;
  Subset a;
  Subset b;
  std::string describe() const;
};

// A matroid given by its ground-set size and a dense rank table indexed by
// bitmask. Construction checks only structure (table length, value range);
// the rank axioms themselves are validated by validate_rank_axioms, which
// treats violations as data rather than errors.
class Matroid {
 public:
  Matroid(int n, const std::vector<int>& rank_table);

  int size() const { return n_; }
  Subset ground() const { return Subset::full(n_); }
  int rank() const { return rank_.empty() ? 0 : rank_[rank_.size() - 1]; }
  int rank(Subset a) const;
  int corank(Subset a) const { return rank() - rank(a); }
  int nullity(Subset a) const { return a.count() - rank(a); }

  Subset closure(Subset a) const;
  bool is_flat(Subset a) const { return closure(a) == a; }
  // All flats, ascending by bitmask value. Guarded enumeration.
  std::vector<Subset> flats(int guard = kEnumGuard) const;
  std::vector<Subset> flats_of_rank(int i, int guard = kEnumGuard) const;
  // A flat is cyclic iff its restriction has no coloops.
  bool is_cyclic_flat(Subset f) const;
  std::vector<Subset> cyclic_flats_of_rank(int i, int guard = kEnumGuard) const;

  Subset loops() const;
  Subset coloops() const;
  bool is_loopless() const { return loops().empty(); }
  bool is_coloop_free() const { return coloops().empty(); }

  Matroid dual() const;
  Minor restriction(Subset t) const;
  Minor contraction(Subset t) const;

  std::vector<int> rank_table() const { return std::vector<int>(rank_.begin(), rank_.end()); }
  const std::vector<std::uint8_t>& raw_table() const { return rank_; }

  bool operator==(const Matroid&) const = default;

 private:
  int n_ = 0;
  std::vector<std::uint8_t> rank_;
};

// Restriction or contraction together with the map back to the parent's
// element indices. Minors re-index elements densely to 0..k-1; the map keeps
// subsets of the minor translatable to subsets of the parent.
struct Minor {
  Matroid matroid;
  // parent_elements[e] = index of the minor's element e in the parent.
  std::vector<int> parent_elements;

  Subset to_parent(Subset a) const;
  // Inverse of to_parent; a must use only elements of the minor's image.
  Subset from_parent(Subset a) const;
};

// Checks the three rank axioms over the whole table and returns every
// violation found (empty means the table is a matroid rank function).
// Monotonicity and submodularity are checked through their single-element
// local forms, which are equivalent to the quantified axioms and give
// small witnesses.
std::vector<RankAxiomViolation> validate_rank_axioms(int n, const std::vector<int>& rank_table);
std::vector<RankAxiomViolation> validate_rank_axioms(const Matroid& m);

// Partition of the non-loop elements into parallel (or series) classes.
struct ClassPartition {
  std::vector<Subset> classes;  // disjoint, nonempty, ascending by least element
  int size() const { return static_cast<int>(classes.size()); }
  int nontrivial() const;
};

ClassPartition parallel_classes(const Matroid& m);
ClassPartition series_classes(const Matroid& m);

// The classical shorthands p(M), p'(M), s(M), s'(M).
int p(const Matroid& m);
int p_prime(const Matroid& m);
int s(const Matroid& m);
int s_prime(const Matroid& m);

}  // namespace mtutte
