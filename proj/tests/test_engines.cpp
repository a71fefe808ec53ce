#include <doctest.h>

#include <numeric>
#include <random>

#include "corpus.hpp"
#include "mtutte/engines.hpp"

using namespace mtutte;

namespace {

BivarPoly poly_u23() {
  // x^2 + x + y
  BivarPoly p;
  p.add_term(2, 0, 1);
  p.add_term(1, 0, 1);
  p.add_term(0, 1, 1);
  return p;
}

MultiplicityMatroid columns_2_3() {
  return from_integer_matrix(IntegerMatrixSpec{{{mpz_class{2}, mpz_class{3}}}});
}

}  // namespace

TEST_CASE("defining subset sum on small uniforms") {
  CHECK(tutte_definition(uniform_matroid(2, 3)) == poly_u23());
  CHECK(tutte_definition(uniform_matroid(1, 2)).str() == "x + y");
  CHECK(tutte_definition(uniform_matroid(2, 4)).str() == "x^2 + 2*x + y^2 + 2*y");
  CHECK(tutte_definition(uniform_matroid(0, 0)).str() == "1");
  CHECK(tutte_definition(uniform_matroid(0, 1)).str() == "y");
  CHECK(tutte_definition(uniform_matroid(1, 1)).str() == "x");
}

TEST_CASE("multiplicity weighting") {
  MultiplicityMatroid m2 = from_integer_matrix(IntegerMatrixSpec{{{mpz_class{2}}}});
  CHECK(multiplicity_tutte_definition(m2).str() == "x + 1");
  CHECK(multiplicity_tutte_definition(columns_2_3()).str() == "x + y + 3");
  // trivial multiplicity reduces to the plain polynomial
  MultiplicityMatroid trivial = MultiplicityMatroid::trivial(uniform_matroid(2, 3));
  CHECK(multiplicity_tutte_definition(trivial) == tutte_definition(uniform_matroid(2, 3)));
}

TEST_CASE("classic golden value: K4") {
  BivarPoly t = tutte_definition(graphic_matroid(mtutte_tests::k4()));
  CHECK(t.str() == "x^3 + 3*x^2 + 4*x*y + 2*x + y^3 + 3*y^2 + 2*y");
}

TEST_CASE("deletion-contraction equals the definition") {
  CHECK(tutte_deletion_contraction(uniform_matroid(1, 2)).str() == "x + y");
  CHECK(tutte_deletion_contraction(uniform_matroid(2, 3)) == poly_u23());
  CHECK(tutte_deletion_contraction(uniform_matroid(0, 1)).str() == "y");
  for (const auto& inst : mtutte_tests::uniform_family(6))
    CHECK(tutte_deletion_contraction(inst.mm.matroid()) == tutte_definition(inst.mm.matroid()));
  for (const auto& inst : mtutte_tests::graph_family())
    CHECK(tutte_deletion_contraction(inst.mm.matroid()) == tutte_definition(inst.mm.matroid()));
}

TEST_CASE("activity expansion: hand trace on U_{1,2}") {
  std::vector<int> order{0, 1};
  ActivityExpansion expansion = tutte_by_activities(uniform_matroid(1, 2), order);
  CHECK(expansion.polynomial.str() == "x + y");
  REQUIRE(expansion.records.size() == 2);
  // basis {0}: 0 is the least element of its cocircuit {0,1} -> internal 1
  CHECK(expansion.records[0].basis == Subset{0b01});
  CHECK(expansion.records[0].internal_activity == 1);
  CHECK(expansion.records[0].external_activity == 0);
  // basis {1}: 0 is the least element of the circuit {0,1} -> external 1
  CHECK(expansion.records[1].basis == Subset{0b10});
  CHECK(expansion.records[1].internal_activity == 0);
  CHECK(expansion.records[1].external_activity == 1);
}

TEST_CASE("activity expansion on U_{2,3}") {
  std::vector<int> order{0, 1, 2};
  ActivityExpansion expansion = tutte_by_activities(uniform_matroid(2, 3), order);
  CHECK(expansion.polynomial == poly_u23());
  CHECK(expansion.records.size() == 3);
}

TEST_CASE("activity expansion is order independent") {
  std::mt19937 rng(0xAC717Eu);
  for (const auto& inst : mtutte_tests::graph_family()) {
    const Matroid& m = inst.mm.matroid();
    if (m.size() > 6) continue;
    BivarPoly reference = tutte_definition(m);
    std::vector<int> order(static_cast<std::size_t>(m.size()));
    std::iota(order.begin(), order.end(), 0);
    for (int round = 0; round < 10; ++round) {
      std::shuffle(order.begin(), order.end(), rng);
      CHECK(tutte_by_activities(m, order).polynomial == reference);
    }
  }
}

TEST_CASE("activity records satisfy the basis bounds") {
  Matroid k4 = graphic_matroid(mtutte_tests::k4());
  ActivityExpansion expansion = tutte_by_activities(k4);
  CHECK(expansion.records.size() == 16);
  for (const ActivityRecord& rec : expansion.records) {
    CHECK(rec.basis.count() == k4.rank());
    CHECK(k4.rank(rec.basis) == k4.rank());
    CHECK(rec.internal_activity <= k4.rank());
    CHECK(rec.external_activity <= k4.size() - k4.rank());
  }
}

TEST_CASE("order validation") {
  Matroid u23 = uniform_matroid(2, 3);
  CHECK_THROWS_AS(tutte_by_activities(u23, std::vector<int>{0, 1}), InputError);
  CHECK_THROWS_AS(tutte_by_activities(u23, std::vector<int>{0, 1, 1}), InputError);
  CHECK_THROWS_AS(tutte_by_activities(u23, std::vector<int>{0, 1, 3}), InputError);
}

TEST_CASE("convolution identity") {
  MultiplicityMatroid trivial = MultiplicityMatroid::trivial(uniform_matroid(2, 3));
  CHECK(convolution_tutte(trivial) == poly_u23());
  CHECK(convolution_tutte(columns_2_3()).str() == "x + y + 3");
  MultiplicityMatroid loop = MultiplicityMatroid::trivial(uniform_matroid(0, 1));
  CHECK(convolution_tutte(loop).str() == "y");
}

TEST_CASE("convolution over flats agrees with the all-subsets domain") {
  for (const auto& inst : mtutte_tests::random_matrix_family(10, 0xC0DEu)) {
    BivarPoly reference = multiplicity_tutte_definition(inst.mm);
    CHECK(convolution_tutte(inst.mm, ConvolutionDomain::Flats) == reference);
    CHECK(convolution_tutte(inst.mm, ConvolutionDomain::AllSubsets) == reference);
  }
}

TEST_CASE("non-flat summands vanish") {
  Matroid u23 = uniform_matroid(2, 3);
  for (std::uint64_t bits = 0; bits < 8; ++bits) {
    Subset a{bits};
    if (u23.is_flat(a)) continue;
    UniPoly slice = tutte_definition(u23.contraction(a).matroid).at_y_zero();
    CHECK(slice.is_zero());
  }
}

TEST_CASE("characteristic polynomial") {
  CHECK(char_poly(uniform_matroid(2, 3)) == UniPoly{std::vector<mpz_class>{2, -3, 1}});
  CHECK(char_poly(uniform_matroid(1, 2)) == UniPoly{std::vector<mpz_class>{-1, 1}});
  CHECK(char_poly(uniform_matroid(0, 1)).is_zero());
  CHECK(char_poly(graphic_matroid(MultigraphSpec{2, {{0, 0}, {0, 1}}})).is_zero());

  CHECK(char_poly_via_flats(uniform_matroid(2, 3)) == char_poly(uniform_matroid(2, 3)));
  CHECK_THROWS_AS(char_poly_via_flats(uniform_matroid(0, 1)), InputError);
  for (const auto& inst : mtutte_tests::graph_family()) {
    const Matroid& m = inst.mm.matroid();
    if (!m.is_loopless()) continue;
    CHECK(char_poly_via_flats(m) == char_poly(m));
  }
}

TEST_CASE("the y = 0 slice via the characteristic polynomial") {
  CHECK(tutte_x0(uniform_matroid(2, 3)) == UniPoly{std::vector<mpz_class>{0, 1, 1}});
  CHECK(tutte_x0(uniform_matroid(1, 2)) == UniPoly{std::vector<mpz_class>{0, 1}});
  CHECK(tutte_x0(uniform_matroid(0, 0)) == UniPoly::constant(1));
  CHECK_THROWS_AS(tutte_x0(uniform_matroid(0, 1)), InputError);
  for (const auto& inst : mtutte_tests::uniform_family(6)) {
    const Matroid& m = inst.mm.matroid();
    if (!m.is_loopless()) continue;
    CHECK(tutte_x0(m) == tutte_definition(m).at_y_zero());
  }
}

TEST_CASE("basis counting matches T(1,1)") {
  for (const auto& inst : mtutte_tests::graph_family()) {
    const Matroid& m = inst.mm.matroid();
    CHECK(mpq_class(count_bases(m)) == tutte_definition(m).eval(1, 1));
  }
  CHECK(count_bases(uniform_matroid(2, 3)) == 3);
  CHECK(count_bases(graphic_matroid(mtutte_tests::k4())) == 16);
}

TEST_CASE("size guards refuse oversized enumerations") {
  Matroid u23 = uniform_matroid(2, 3);
  CHECK_THROWS_AS(tutte_definition(u23, 2), SizeGuardError);
  CHECK_THROWS_AS(convolution_tutte(MultiplicityMatroid::trivial(u23),
                                    ConvolutionDomain::Flats, 2),
                  SizeGuardError);
  try {
    tutte_definition(u23, 2);
  } catch (const SizeGuardError& e) {
    CHECK(e.guard_name == "subset enumeration");
    CHECK(e.n_value == 3);
    CHECK(e.limit_value == 2);
  }
}
