#include <doctest.h>

#include <set>

#include "corpus.hpp"
#include "mtutte/matroid.hpp"

using namespace mtutte;
using mtutte_tests::Instance;

namespace {

Matroid double_edge() { return graphic_matroid(MultigraphSpec{2, {{0, 1}, {0, 1}}}); }

std::vector<Matroid> small_corpus() {
  std::vector<Matroid> out;
  for (const Instance& inst : mtutte_tests::uniform_family(5)) out.push_back(inst.mm.matroid());
  for (const Instance& inst : mtutte_tests::graph_family())
    if (inst.mm.size() <= 6) out.push_back(inst.mm.matroid());
  return out;
}

}  // namespace

TEST_CASE("rank lookups") {
  Matroid u23 = uniform_matroid(2, 3);
  CHECK(u23.rank(Subset::none()) == 0);
  CHECK(u23.rank(Subset{0b011}) == 2);
  CHECK(u23.rank() == 2);
  CHECK(double_edge().rank(Subset{0b11}) == 1);
  CHECK_THROWS_AS(u23.rank(Subset{0b1000}), InputError);
}

TEST_CASE("structural construction errors") {
  CHECK_THROWS_AS(Matroid(2, std::vector<int>{0, 1, 1}), InputError);
  CHECK_THROWS_AS(Matroid(1, std::vector<int>{0, -1}), InputError);
  CHECK_THROWS_AS(Matroid(-1, std::vector<int>{}), InputError);
}

TEST_CASE("rank axiom validation") {
  CHECK(validate_rank_axioms(uniform_matroid(2, 3)).empty());

  // rank({0}) = 2 > 1 breaks the cardinality bound
  auto v1 = validate_rank_axioms(1, std::vector<int>{0, 2});
  REQUIRE(!v1.empty());
  CHECK(v1.front().axiom == 1);
  CHECK(v1.front().a == Subset{0b1});

  // rank({0,1}) = 0 < rank({0}) = 1 breaks monotonicity
  auto v2 = validate_rank_axioms(2, std::vector<int>{0, 1, 0, 0});
  bool has_monotone = false;
  for (const auto& v : v2) has_monotone = has_monotone || v.axiom == 2;
  CHECK(has_monotone);

  // rank(empty) = 1 breaks the cardinality bound at the empty set
  auto v3 = validate_rank_axioms(1, std::vector<int>{1, 1});
  REQUIRE(!v3.empty());
  CHECK(v3.front().axiom == 1);
  CHECK(v3.front().a == Subset::none());

  // submodularity: rank {0}+{1} < rank {0,1} + rank {}
  auto v4 = validate_rank_axioms(2, std::vector<int>{0, 0, 0, 1});
  bool has_submodular = false;
  for (const auto& v : v4) has_submodular = has_submodular || v.axiom == 3;
  CHECK(has_submodular);
}

TEST_CASE("local axiom checks agree with the quantified sweep") {
  // Oracle: check every pair (A, B) directly.
  auto quantified_ok = [](int n, const std::vector<int>& t) {
    for (std::uint64_t a = 0; a < num_subsets(n); ++a) {
      if (t[a] < 0 || t[a] > Subset{a}.count()) return false;
      for (std::uint64_t b = 0; b < num_subsets(n); ++b) {
        if ((a & b) == a && t[a] > t[b]) return false;
        if (t[a | b] + t[a & b] > t[a] + t[b]) return false;
      }
    }
    return true;
  };
  std::mt19937 rng(99u);
  std::uniform_int_distribution<int> val(0, 3);
  int disagreements = 0;
  for (int round = 0; round < 300; ++round) {
    const int n = 3;
    std::vector<int> t(num_subsets(n));
    for (auto& v : t) v = val(rng);
    t[0] = 0;
    if (validate_rank_axioms(n, t).empty() != quantified_ok(n, t)) ++disagreements;
  }
  CHECK(disagreements == 0);
}

TEST_CASE("closure") {
  Matroid u23 = uniform_matroid(2, 3);
  CHECK(u23.closure(Subset{0b001}) == Subset{0b001});
  CHECK(u23.closure(u23.ground()) == u23.ground());
  CHECK(double_edge().closure(Subset{0b01}) == Subset{0b11});
}

TEST_CASE("closure is idempotent and extensive on the corpus") {
  for (const Matroid& m : small_corpus()) {
    for (std::uint64_t bits = 0; bits < num_subsets(m.size()); ++bits) {
      Subset a{bits};
      Subset c = m.closure(a);
      CHECK(a.subset_of(c));
      CHECK(m.closure(c) == c);
      CHECK(m.rank(c) == m.rank(a));
    }
  }
}

TEST_CASE("flats of the smallest uniform matroids") {
  Matroid u23 = uniform_matroid(2, 3);
  CHECK(u23.flats() == std::vector<Subset>{Subset{0}, Subset{1}, Subset{2}, Subset{4}, Subset{7}});
  CHECK(u23.flats_of_rank(1) == std::vector<Subset>{Subset{1}, Subset{2}, Subset{4}});
  CHECK(u23.flats_of_rank(0) == std::vector<Subset>{Subset{0}});
  CHECK_THROWS_AS(u23.flats_of_rank(3), InputError);
}

TEST_CASE("flat count sanity on the corpus") {
  for (const Matroid& m : small_corpus()) {
    auto flats = m.flats();
    // X is always a flat; {} is a flat exactly when the matroid is loopless.
    CHECK(flats.back() == m.ground());
    bool empty_is_flat = flats.front() == Subset::none();
    CHECK(empty_is_flat == m.is_loopless());
  }
}

TEST_CASE("cyclic flats") {
  Matroid u23 = uniform_matroid(2, 3);
  CHECK(u23.is_cyclic_flat(u23.ground()));
  CHECK(!u23.is_cyclic_flat(Subset{0b001}));
  CHECK(u23.is_cyclic_flat(Subset::none()));
  CHECK_THROWS_AS(u23.is_cyclic_flat(Subset{0b011}), InputError);
  CHECK(u23.cyclic_flats_of_rank(1).empty());
  CHECK(double_edge().cyclic_flats_of_rank(1) == std::vector<Subset>{Subset{0b11}});
}

TEST_CASE("loops and coloops") {
  Matroid u23 = uniform_matroid(2, 3);
  CHECK(u23.loops().empty());
  CHECK(u23.coloops().empty());
  CHECK(uniform_matroid(0, 2).loops() == Subset{0b11});
  CHECK(uniform_matroid(3, 3).coloops() == Subset{0b111});
  Matroid loop_edge = graphic_matroid(MultigraphSpec{1, {{0, 0}}});
  CHECK(loop_edge.loops() == Subset{0b1});
  // a single matrix column (2) is a coloop
  CHECK(from_integer_matrix(IntegerMatrixSpec{{{mpz_class{2}}}}).matroid().coloops() ==
        Subset{0b1});
}

TEST_CASE("dual rank table") {
  CHECK(uniform_matroid(2, 3).dual() == uniform_matroid(1, 3));
  CHECK(uniform_matroid(1, 2).dual() == uniform_matroid(1, 2));
  for (const Matroid& m : small_corpus()) {
    CHECK(m.dual().rank() == m.size() - m.rank());
    CHECK(m.dual().dual() == m);
  }
}

TEST_CASE("restriction and contraction") {
  Matroid u23 = uniform_matroid(2, 3);
  Minor rest = u23.restriction(Subset{0b011});
  CHECK(rest.matroid == uniform_matroid(2, 2));
  CHECK(rest.parent_elements == std::vector<int>{0, 1});

  Minor cont = u23.contraction(Subset{0b001});
  CHECK(cont.matroid == uniform_matroid(1, 2));
  CHECK(cont.parent_elements == std::vector<int>{1, 2});
  CHECK(cont.to_parent(Subset{0b01}) == Subset{0b010});
  CHECK(cont.from_parent(Subset{0b010}) == Subset{0b01});
  CHECK_THROWS_AS(cont.from_parent(Subset{0b001}), InputError);

  CHECK(u23.contraction(Subset::none()).matroid == u23);
  CHECK(u23.restriction(u23.ground()).matroid == u23);
}

TEST_CASE("minors commute with duality on the corpus") {
  for (const Matroid& m : small_corpus()) {
    if (m.size() > 5) continue;
    for (std::uint64_t bits = 0; bits < num_subsets(m.size()); ++bits) {
      Subset t{bits};
      Matroid lhs = m.dual().restriction(t).matroid;
      Matroid rhs = m.contraction(m.ground() - t).matroid.dual();
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("parallel and series classes") {
  Matroid u23 = uniform_matroid(2, 3);
  CHECK(p(u23) == 3);
  CHECK(p_prime(u23) == 0);
  // series classes are parallel classes of the dual: the dual U_{1,3} has a
  // single class of three mutually parallel elements
  CHECK(s(u23) == 1);
  CHECK(s_prime(u23) == 1);

  Matroid de = double_edge();
  CHECK(p(de) == 1);
  CHECK(p_prime(de) == 1);

  ClassPartition classes = parallel_classes(de);
  REQUIRE(classes.size() == 1);
  CHECK(classes.classes.front() == Subset{0b11});
}

TEST_CASE("class partitions cover the non-loops disjointly") {
  for (const Matroid& m : small_corpus()) {
    for (bool use_series : {false, true}) {
      ClassPartition part = use_series ? series_classes(m) : parallel_classes(m);
      const Matroid base = use_series ? m.dual() : m;
      Subset seen;
      for (const Subset& cls : part.classes) {
        CHECK(!cls.empty());
        CHECK((seen & cls).empty());
        seen = seen | cls;
      }
      CHECK(seen == (base.ground() - base.loops()));
    }
  }
}

TEST_CASE("series classes are parallel classes of the dual, element for element") {
  for (const Matroid& m : small_corpus()) {
    CHECK(series_classes(m).classes == parallel_classes(m.dual()).classes);
  }
}
