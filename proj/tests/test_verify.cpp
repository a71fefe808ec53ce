#include <doctest.h>

#include "corpus.hpp"
#include "mtutte/verify.hpp"

using namespace mtutte;

namespace {

const IdentityCheck& find_check(const VerificationReport& report, const std::string& name) {
  for (const IdentityCheck& c : report.checks)
    if (c.name == name) return c;
  static IdentityCheck missing;
  REQUIRE(false);
  return missing;
}

}  // namespace

TEST_CASE("everything passes on trivial U_{2,3}") {
  VerificationReport report =
      verify_instance(MultiplicityMatroid::trivial(uniform_matroid(2, 3)));
  CHECK(report.all_pass());
  for (const IdentityCheck& c : report.checks) CHECK(c.status != CheckStatus::NotApplicable);
}

TEST_CASE("matrix instances pass the full battery") {
  IntegerMatrixSpec spec{{{mpz_class{1}, mpz_class{2}}, {mpz_class{0}, mpz_class{2}}}};
  VerificationReport report = verify_instance(from_integer_matrix(spec));
  CHECK(report.all_pass());
}

TEST_CASE("a multiplicity matroid that is not arithmetic fails exactly the axiom check") {
  MultiplicityMatroid mm(uniform_matroid(1, 2), {1, 1, 1, mpz_class{5}});
  VerificationReport report = verify_instance(mm);
  CHECK(!report.all_pass());
  CHECK(find_check(report, "arithmetic-axioms").status == CheckStatus::Fail);
  CHECK(find_check(report, "convolution").status == CheckStatus::Pass);
  CHECK(find_check(report, "duality").status == CheckStatus::Pass);
  CHECK(find_check(report, "extreme-top").status == CheckStatus::Pass);
  CHECK(find_check(report, "extreme-dual").status == CheckStatus::Pass);
  CHECK(find_check(report, "deletion-contraction").status == CheckStatus::NotApplicable);
}

TEST_CASE("loop instances mark the loopless-only identities inapplicable") {
  VerificationReport report =
      verify_instance(MultiplicityMatroid::trivial(uniform_matroid(0, 2)));
  CHECK(report.all_pass());
  CHECK(find_check(report, "x0-slice").status == CheckStatus::NotApplicable);
  CHECK(find_check(report, "extreme-top").status == CheckStatus::NotApplicable);
  CHECK(find_check(report, "convolution").status == CheckStatus::Pass);
}

TEST_CASE("random multiplicity tables keep the polynomial identities green") {
  for (const auto& inst : mtutte_tests::random_table_family(8, 0xF00Du)) {
    VerificationReport report = verify_instance(inst.mm);
    for (const IdentityCheck& c : report.checks) {
      if (c.name == "arithmetic-axioms") continue;  // random tables may fail them
      CHECK(c.status != CheckStatus::Fail);
    }
  }
}
