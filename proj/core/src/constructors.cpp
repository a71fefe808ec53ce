#include "mtutte/constructors.hpp"

#include <algorithm>
#include <numeric>

namespace mtutte {

Matroid uniform_matroid(int r, int n) {
  if (n < 0 || r < 0 || r > n)
    throw InputError("uniform_matroid: need 0 <= r <= n, got r=" + std::to_string(r) +
                     " n=" + std::to_string(n));
  check_size_guard("dense rank table", n, kEnumGuard);
  std::vector<int> table(num_subsets(n));
  for (std::uint64_t bits = 0; bits < table.size(); ++bits)
    table[bits] = std::min(Subset{bits}.count(), r);
  return Matroid(n, table);
}

namespace {

// Union-find over the vertices of a multigraph.
struct Dsu {
  explicit Dsu(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      parent[static_cast<std::size_t>(v)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
      v = parent[static_cast<std::size_t>(v)];
    }
    return v;
  }
  // Returns true if the edge joined two components.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[static_cast<std::size_t>(a)] = b;
    return true;
  }
  std::vector<int> parent;
};

}  // namespace

Matroid graphic_matroid(const MultigraphSpec& g) {
  const int n = static_cast<int>(g.edges.size());
  check_size_guard("dense rank table", n, kEnumGuard);
  if (g.vertices < 0) throw InputError("graphic_matroid: negative vertex count");
  for (const auto& [u, v] : g.edges)
    if (u < 0 || u >= g.vertices || v < 0 || v >= g.vertices)
      throw InputError("graphic_matroid: edge endpoint outside the vertex range");

  std::vector<int> table(num_subsets(n));
  for (std::uint64_t bits = 0; bits < table.size(); ++bits) {
    Dsu dsu(g.vertices);
    int joins = 0;
    for (int e = 0; e < n; ++e) {
      if (!((bits >> e) & 1)) continue;
      const auto& [u, v] = g.edges[static_cast<std::size_t>(e)];
      if (dsu.unite(u, v)) ++joins;
    }
    table[bits] = joins;  // |V| - components = number of joining edges
  }
  return Matroid(n, table);
}

Matroid bond_matroid(const MultigraphSpec& g) { return graphic_matroid(g).dual(); }

Matroid from_rank_table(int n, const std::vector<int>& table) {
  std::vector<RankAxiomViolation> violations = validate_rank_axioms(n, table);
  if (!violations.empty()) {
    std::string msg = "from_rank_table: " + std::to_string(violations.size()) +
                      " rank-axiom violation(s):";
    const std::size_t shown = std::min<std::size_t>(violations.size(), 5);
    for (std::size_t k = 0; k < shown; ++k) msg += "\n  " + violations[k].describe();
    if (violations.size() > shown) msg += "\n  ...";
    throw InputError(msg);
  }
  return Matroid(n, table);
}

namespace {

// Fraction-free (Bareiss) elimination on a dense mpz matrix; returns the
// rank. The matrix is consumed.
int bareiss_rank(std::vector<std::vector<mpz_class>>& a) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
  mpz_class prev = 1;
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int row = rank; row < rows; ++row) {
      if (a[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] != 0) {
        pivot = row;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(a[static_cast<std::size_t>(pivot)], a[static_cast<std::size_t>(rank)]);
    for (int row = rank + 1; row < rows; ++row) {
      for (int c = col + 1; c < cols; ++c) {
        mpz_class v = a[static_cast<std::size_t>(rank)][static_cast<std::size_t>(col)] *
                          a[static_cast<std::size_t>(row)][static_cast<std::size_t>(c)] -
                      a[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] *
                          a[static_cast<std::size_t>(rank)][static_cast<std::size_t>(c)];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a[static_cast<std::size_t>(row)][static_cast<std::size_t>(c)] = std::move(v);
      }
      a[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = 0;
    }
    prev = a[static_cast<std::size_t>(rank)][static_cast<std::size_t>(col)];
    ++rank;
  }
  return rank;
}

std::vector<std::vector<mpz_class>> select_columns(const IntegerMatrixSpec& spec, Subset cols) {
  std::vector<int> picked = cols.elements();
  std::vector<std::vector<mpz_class>> out(static_cast<std::size_t>(spec.row_count()));
  for (int r = 0; r < spec.row_count(); ++r) {
    out[static_cast<std::size_t>(r)].reserve(picked.size());
    for (int c : picked)
      out[static_cast<std::size_t>(r)].push_back(
          spec.rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
  }
  return out;
}

// Integer determinant of a square mpz matrix by Bareiss elimination.
mpz_class integer_det(std::vector<std::vector<mpz_class>> a) {
  const int n = static_cast<int>(a.size());
  if (n == 0) return 1;
  mpz_class prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] == 0) {
      int pivot = -1;
      for (int row = k + 1; row < n; ++row)
        if (a[static_cast<std::size_t>(row)][static_cast<std::size_t>(k)] != 0) {
          pivot = row;
          break;
        }
      if (pivot < 0) return 0;
      std::swap(a[static_cast<std::size_t>(k)], a[static_cast<std::size_t>(pivot)]);
      sign = -sign;
    }
    for (int row = k + 1; row < n; ++row) {
      for (int col = k + 1; col < n; ++col) {
        mpz_class v = a[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] *
                          a[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] -
                      a[static_cast<std::size_t>(row)][static_cast<std::size_t>(k)] *
                          a[static_cast<std::size_t>(k)][static_cast<std::size_t>(col)];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = std::move(v);
      }
      a[static_cast<std::size_t>(row)][static_cast<std::size_t>(k)] = 0;
    }
    prev = a[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
  }
  mpz_class det = a[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 1)];
  return sign < 0 ? mpz_class{-det} : det;
}

}  // namespace

int rational_rank(const IntegerMatrixSpec& spec, Subset cols) {
  std::vector<std::vector<mpz_class>> sub = select_columns(spec, cols);
  return bareiss_rank(sub);
}

mpz_class gcd_of_maximal_minors(const IntegerMatrixSpec& spec, Subset cols) {
  std::vector<std::vector<mpz_class>> sub = select_columns(spec, cols);
  const int d = static_cast<int>(sub.size());
  const int k = cols.count();
  std::vector<std::vector<mpz_class>> probe = sub;
  const int rank = bareiss_rank(probe);
  if (rank == 0) return 1;

  mpz_class acc = 0;
  for_each_k_subset(d, rank, [&](Subset row_pick) {
    for_each_k_subset(k, rank, [&](Subset col_pick) {
      std::vector<std::vector<mpz_class>> minor;
      minor.reserve(static_cast<std::size_t>(rank));
      for (int r : row_pick.elements()) {
        std::vector<mpz_class> row;
        row.reserve(static_cast<std::size_t>(rank));
        for (int c : col_pick.elements())
          row.push_back(sub[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
        minor.push_back(std::move(row));
      }
      mpz_class det = integer_det(std::move(minor));
      mpz_gcd(acc.get_mpz_t(), acc.get_mpz_t(), det.get_mpz_t());
    });
  });
  return acc;
}

std::vector<mpz_class> smith_invariant_factors(std::vector<std::vector<mpz_class>> a) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
  std::vector<mpz_class> factors;

  int top = 0;
  while (top < rows && top < cols) {
    // Find the nonzero entry of least absolute value in the working block.
    int pr = -1, pc = -1;
    for (int r = top; r < rows; ++r)
      for (int c = top; c < cols; ++c) {
        const mpz_class& v = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
        if (v == 0) continue;
        if (pr < 0 || cmp(abs(v), abs(a[static_cast<std::size_t>(pr)][static_cast<std::size_t>(
                                      pc)])) < 0) {
          pr = r;
          pc = c;
        }
      }
    if (pr < 0) break;
    std::swap(a[static_cast<std::size_t>(top)], a[static_cast<std::size_t>(pr)]);
    for (int r = top; r < rows; ++r)
      std::swap(a[static_cast<std::size_t>(r)][static_cast<std::size_t>(top)],
                a[static_cast<std::size_t>(r)][static_cast<std::size_t>(pc)]);

    bool clean = false;
    while (!clean) {
      clean = true;
      const mpz_class pivot = a[static_cast<std::size_t>(top)][static_cast<std::size_t>(top)];
      // Reduce the pivot column.
      for (int r = top + 1; r < rows; ++r) {
        mpz_class& v = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(top)];
        if (v == 0) continue;
        mpz_class q = v / pivot;
        if (q != 0)
          for (int c = top; c < cols; ++c)
            a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -=
                q * a[static_cast<std::size_t>(top)][static_cast<std::size_t>(c)];
        if (a[static_cast<std::size_t>(r)][static_cast<std::size_t>(top)] != 0) {
          // Remainder smaller than the pivot: swap it up and restart.
          std::swap(a[static_cast<std::size_t>(top)], a[static_cast<std::size_t>(r)]);
          clean = false;
          break;
        }
      }
      if (!clean) continue;
      // Reduce the pivot row.
      for (int c = top + 1; c < cols; ++c) {
        mpz_class& v = a[static_cast<std::size_t>(top)][static_cast<std::size_t>(c)];
        if (v == 0) continue;
        mpz_class q = v / pivot;
        if (q != 0)
          for (int r = top; r < rows; ++r)
            a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -=
                q * a[static_cast<std::size_t>(r)][static_cast<std::size_t>(top)];
        if (a[static_cast<std::size_t>(top)][static_cast<std::size_t>(c)] != 0) {
          for (int r = top; r < rows; ++r)
            std::swap(a[static_cast<std::size_t>(r)][static_cast<std::size_t>(top)],
                      a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
          clean = false;
          break;
        }
      }
      if (!clean) continue;
      // Pivot must divide every remaining entry; if not, fold the offending
      // row into the pivot row and redo the reduction.
      for (int r = top + 1; r < rows && clean; ++r)
        for (int c = top + 1; c < cols; ++c) {
          if (!mpz_divisible_p(
                  a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)].get_mpz_t(),
                  pivot.get_mpz_t())) {
            for (int cc = top; cc < cols; ++cc)
              a[static_cast<std::size_t>(top)][static_cast<std::size_t>(cc)] +=
                  a[static_cast<std::size_t>(r)][static_cast<std::size_t>(cc)];
            clean = false;
            break;
          }
        }
    }
    factors.push_back(abs(a[static_cast<std::size_t>(top)][static_cast<std::size_t>(top)]));
    ++top;
  }
  return factors;
}

MultiplicityMatroid from_integer_matrix(const IntegerMatrixSpec& spec) {
  const int n = spec.col_count();
  const int d = spec.row_count();
  check_size_guard("matrix columns", n, kConvolutionGuard);
  check_size_guard("matrix rows", d, kAxiomSweepGuard);
  for (const auto& row : spec.rows)
    if (static_cast<int>(row.size()) != n)
      throw InputError("from_integer_matrix: rows must all have the same length");

  std::vector<int> rank_table(num_subsets(n));
  std::vector<mpz_class> mult(num_subsets(n));
  for (std::uint64_t bits = 0; bits < num_subsets(n); ++bits) {
    std::vector<std::vector<mpz_class>> sub = select_columns(spec, Subset{bits});
    std::vector<mpz_class> factors = smith_invariant_factors(std::move(sub));
    rank_table[bits] = static_cast<int>(factors.size());
    mpz_class product = 1;
    for (const mpz_class& f : factors) product *= f;
    mult[bits] = std::move(product);
  }
  return MultiplicityMatroid(Matroid(n, rank_table), std::move(mult));
}

}  // namespace mtutte
