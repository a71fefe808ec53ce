#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace mtutte {

// A subset of the ground set {0, ..., n-1} packed into a 64-bit mask.
// Element e occupies bit 2^e; this indexing convention is shared by every
// table in the library (rank tables, multiplicity tables, spec files).
struct Subset {
  std::uint64_t bits = 0;

  constexpr Subset() = default;
  constexpr explicit Subset(std::uint64_t b) : bits(b) {}

  static constexpr Subset none() { return Subset{0}; }
  static constexpr Subset full(int n) {
    return Subset{n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1};
  }
  static constexpr Subset single(int e) { return Subset{std::uint64_t{1} << e}; }

  constexpr int count() const { return std::popcount(bits); }
  constexpr bool empty() const { return bits == 0; }
  constexpr bool contains(int e) const { return (bits >> e) & 1; }
  constexpr bool subset_of(Subset o) const { return (bits & o.bits) == bits; }
  // Smallest element; only meaningful on nonempty sets.
  constexpr int lowest() const { return std::countr_zero(bits); }

  constexpr Subset with(int e) const { return Subset{bits | (std::uint64_t{1} << e)}; }
  constexpr Subset without(int e) const { return Subset{bits & ~(std::uint64_t{1} << e)}; }

  friend constexpr Subset operator|(Subset a, Subset b) { return Subset{a.bits | b.bits}; }
  friend constexpr Subset operator&(Subset a, Subset b) { return Subset{a.bits & b.bits}; }
  // Set difference.
  friend constexpr Subset operator-(Subset a, Subset b) { return Subset{a.bits & ~b.bits}; }

  constexpr bool operator==(const Subset&) const = default;
  constexpr auto operator<=>(const Subset&) const = default;

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for (std::uint64_t b = bits; b; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  // "{0,2,5}" rendering for diagnostics and witnesses.
  std::string str() const {
    std::string out = "{";
    bool first = true;
    for (int e : elements()) {
      if (!first) out += ",";
      out += std::to_string(e);
      first = false;
    }
    return out + "}";
  }
};

constexpr std::uint64_t num_subsets(int n) { return std::uint64_t{1} << n; }

// Visit every subset of s in ascending bitmask order, including {} and s.
template <typename F>
void for_each_subset_of(Subset s, F&& f) {
  std::uint64_t sub = 0;
  while (true) {
    f(Subset{sub});
    if (sub == s.bits) break;
    sub = (sub - s.bits) & s.bits;
  }
}

// Visit every k-element subset of {0,...,n-1} in ascending bitmask order
// (Gosper's hack).
template <typename F>
void for_each_k_subset(int n, int k, F&& f) {
  if (k < 0 || k > n) return;
  if (k == 0) {
    f(Subset::none());
    return;
  }
  std::uint64_t v = (std::uint64_t{1} << k) - 1;
  const std::uint64_t limit = std::uint64_t{1} << n;
  while (v < limit) {
    f(Subset{v});
    std::uint64_t t = v | (v - 1);
    v = (t + 1) | (((~t & -~t) - 1) >> (std::countr_zero(v) + 1));
  }
}

}  // namespace mtutte
