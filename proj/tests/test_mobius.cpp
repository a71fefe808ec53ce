#include <doctest.h>

#include "corpus.hpp"
#include "mtutte/mobius.hpp"

using namespace mtutte;

TEST_CASE("mobius values on U_{2,3}") {
  Matroid u23 = uniform_matroid(2, 3);
  CHECK(mobius(u23, Subset::none(), Subset{0b001}) == -1);
  CHECK(mobius(u23, Subset::none(), u23.ground()) == 2);
  CHECK(mobius(u23, Subset{0b001}, Subset{0b001}) == 1);
  CHECK(mobius(u23, Subset{0b001}, Subset{0b010}) == 0);  // incomparable flats
  CHECK(mobius(u23, Subset{0b001}, u23.ground()) == -1);
}

TEST_CASE("mobius argument validation") {
  Matroid u23 = uniform_matroid(2, 3);
  CHECK_THROWS_AS(mobius(u23, Subset::none(), Subset{0b011}), InputError);
  CHECK_THROWS_AS(mobius(uniform_matroid(0, 1), Subset::none(), Subset::none()), InputError);
  CHECK_THROWS_AS(MobiusTable(uniform_matroid(0, 2)), InputError);
}

TEST_CASE("mobius table sums to the Kronecker delta") {
  for (const auto& inst : mtutte_tests::graph_family()) {
    const Matroid& m = inst.mm.matroid();
    if (!m.is_loopless() || m.size() > 6) continue;
    MobiusTable table(m);
    for (Subset z : table.flats()) {
      mpz_class sum = 0;
      for (Subset y : table.flats())
        if (y.subset_of(z)) sum += table.from_empty(y);
      CHECK(sum == (z.empty() ? 1 : 0));
    }
  }
}

TEST_CASE("boolean expansion on U_{2,3} by hand") {
  Matroid u23 = uniform_matroid(2, 3);
  // three pairs (+1 each) and the triple (-1)
  CHECK(mobius_boolean_expansion(u23, Subset::none(), u23.ground()) == 2);
  CHECK(mobius_boolean_expansion(u23, Subset::none(), Subset{0b001}) == -1);
  CHECK(mobius_boolean_expansion(u23, Subset{0b010}, Subset{0b010}) == 1);
}

TEST_CASE("recursion equals boolean expansion on every flat pair") {
  std::vector<Matroid> corpus;
  for (const auto& inst : mtutte_tests::uniform_family(5)) corpus.push_back(inst.mm.matroid());
  for (const auto& inst : mtutte_tests::graph_family()) corpus.push_back(inst.mm.matroid());
  for (const Matroid& m : corpus) {
    if (!m.is_loopless() || m.size() > 6) continue;
    auto flats = m.flats();
    for (Subset f1 : flats)
      for (Subset f2 : flats)
        CHECK(mobius(m, f1, f2) == mobius_boolean_expansion(m, f1, f2));
  }
}

TEST_CASE("low-rank closed forms") {
  Matroid u23 = uniform_matroid(2, 3);
  CHECK(mobius_low_rank(u23, Subset::none()) == 1);
  CHECK(mobius_low_rank(u23, Subset{0b001}) == -1);
  CHECK(mobius_low_rank(u23, u23.ground()) == 2);  // p(X) - 1 = 2
  Matroid u24 = uniform_matroid(2, 4);
  CHECK(mobius_low_rank(u24, u24.ground()) == 3);  // p = 4
  CHECK_THROWS_AS(mobius_low_rank(uniform_matroid(3, 3), Subset{0b111}), InputError);

  for (const auto& inst : mtutte_tests::graph_family()) {
    const Matroid& m = inst.mm.matroid();
    if (!m.is_loopless() || m.size() > 6) continue;
    for (int i = 0; i <= std::min(2, m.rank()); ++i)
      for (Subset f : m.flats_of_rank(i))
        CHECK(mobius_low_rank(m, f) == mobius(m, Subset::none(), f));
  }
}
