#pragma once

#include <gmpxx.h>

#include <utility>
#include <vector>

#include "mtutte/multiplicity.hpp"

namespace mtutte {

// Uniform matroid U_{r,n}: rank(A) = min(|A|, r).
Matroid uniform_matroid(int r, int n);

// A multigraph given by a vertex count and an edge list; loops (u == u) and
// parallel edges are allowed. Edge index = ground-set element index.
struct MultigraphSpec {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;
};

// Cycle matroid: rank(A) = |V| - (number of connected components of (V, A)).
Matroid graphic_matroid(const MultigraphSpec& g);
// Bond matroid: the dual of the cycle matroid.
Matroid bond_matroid(const MultigraphSpec& g);

// Builds a matroid from an explicit rank table after validating all three
// rank axioms; throws InputError carrying the first few witnesses otherwise.
Matroid from_rank_table(int n, const std::vector<int>& table);

// Integer matrix, row-major; column index = ground-set element index.
struct IntegerMatrixSpec {
  std::vector<std::vector<mpz_class>> rows;

  int row_count() const { return static_cast<int>(rows.size()); }
  int col_count() const { return rows.empty() ? 0 : static_cast<int>(rows.front().size()); }
};

// The realization of an integer matrix: rank(A) = rational rank of the
// column submatrix, m(A) = gcd of its rank(A) × rank(A) minors (the product
// of the invariant factors), and m(∅) = 1.
MultiplicityMatroid from_integer_matrix(const IntegerMatrixSpec& spec);

// Exact rank of the columns `cols` over the rationals, by fraction-free
// (Bareiss) elimination.
int rational_rank(const IntegerMatrixSpec& spec, Subset cols);

// gcd of all k×k minors of the selected columns, where k is their rank,
// via direct minor enumeration. Cross-check oracle for the Smith form path.
mpz_class gcd_of_maximal_minors(const IntegerMatrixSpec& spec, Subset cols);

// The invariant factors d_1 | d_2 | ... of an integer matrix (nonzero
// diagonal of its Smith normal form, in divisibility order).
std::vector<mpz_class> smith_invariant_factors(std::vector<std::vector<mpz_class>> a);

}  // namespace mtutte
