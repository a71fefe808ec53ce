#pragma once

#include <stdexcept>
#include <string>

namespace mtutte {

// Malformed input: bad spec files, arguments outside the contract, tables
// that fail validation. The CLI maps this to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An operation refused to enumerate more subsets than its guard allows.
// The CLI maps this to exit code 3.
class SizeGuardError : public std::runtime_error {
 public:
  SizeGuardError(const std::string& guard, int n, int limit)
      : std::runtime_error("size guard '" + guard + "' exceeded: n=" + std::to_string(n) +
                           " > " + std::to_string(limit)),
        guard_name(guard),
        n_value(n),
        limit_value(limit) {}

  std::string guard_name;
  int n_value;
  int limit_value;
};

// Default ceilings for the subset-enumerating operations. 2^24 exact passes
// is the practical limit for the dense-table representation.
inline constexpr int kEnumGuard = 24;         // plain subset enumeration
inline constexpr int kConvolutionGuard = 20;  // nested enumeration per summand
inline constexpr int kDoubleFlatGuard = 16;   // double flat sums
inline constexpr int kAxiomSweepGuard = 12;   // full quantifier sweeps over subset pairs

inline void check_size_guard(const char* guard, int n, int limit) {
  if (n > limit) throw SizeGuardError(guard, n, limit);
}

}  // namespace mtutte
