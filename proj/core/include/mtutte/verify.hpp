#pragma once

#include <string>
#include <vector>

#include "mtutte/extreme.hpp"
#include "mtutte/multiplicity.hpp"

namespace mtutte {

enum class CheckStatus { Pass, Fail, NotApplicable };

struct IdentityCheck {
  std::string name;    // stable identifier, e.g. "convolution"
  std::string detail;  // the identity being exercised
  CheckStatus status = CheckStatus::NotApplicable;
  std::string witness;  // filled on failure (or the reason when inapplicable)
};

struct VerificationReport {
  std::vector<IdentityCheck> checks;
  bool all_pass() const {
    for (const IdentityCheck& c : checks)
      if (c.status == CheckStatus::Fail) return false;
    return true;
  }
};

struct VerifyOptions {
  int enum_guard = kEnumGuard;
  int convolution_guard = kConvolutionGuard;
  int axiom_guard = kAxiomSweepGuard;
  int general_coeff_guard = 12;  // the grid sweep is quadratic in the flat count
  int random_orders = 10;
  unsigned seed = 0x5eedu;  // fixed: byte-identical reports across runs
};

// Runs the full identity battery on one instance: engine agreement
// (convolution, deletion-contraction, activity expansion under random
// orders), duality, the T(x,0) specialization, the extreme-coefficient
// closed forms on both sides, the general coefficient grid, the
// t-coefficient forms, the summation identities, and the arithmetic axioms.
// Checks whose preconditions fail are reported as not applicable.
VerificationReport verify_instance(const MultiplicityMatroid& mm, const VerifyOptions& opts = {});

}  // namespace mtutte
