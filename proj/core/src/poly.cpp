#include "mtutte/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace mtutte {

mpz_class binomial(long n, long k) {
  if (k < 0 || n < 0 || n < k) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

// ---------------------------------------------------------------------------
// UniPoly

UniPoly UniPoly::constant(mpz_class c) {
  UniPoly p;
  if (c != 0) p.c_.push_back(std::move(c));
  return p;
}

UniPoly UniPoly::monomial(int k, mpz_class c) {
  if (k < 0) throw std::invalid_argument("UniPoly::monomial: negative degree");
  UniPoly p;
  if (c != 0) {
    p.c_.resize(static_cast<std::size_t>(k) + 1);
    p.c_[static_cast<std::size_t>(k)] = std::move(c);
  }
  return p;
}

mpz_class UniPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(k)];
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly{};
  std::vector<mpz_class> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return UniPoly{std::move(out)};
}

UniPoly UniPoly::scaled(const mpz_class& c) const {
  if (c == 0) return UniPoly{};
  std::vector<mpz_class> out(c_.size());
  for (std::size_t k = 0; k < c_.size(); ++k) out[k] = c_[k] * c;
  return UniPoly{std::move(out)};
}

mpq_class UniPoly::eval(const mpq_class& v) const {
  mpq_class acc = 0;
  for (std::size_t k = c_.size(); k-- > 0;) {
    acc *= v;
    acc += c_[k];
  }
  return acc;
}

std::string UniPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const mpz_class& c = c_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    if (!out.empty()) out += " + ";
    std::string mono;
    if (k == 1) {
      mono = var;
    } else if (k > 1) {
      mono = var + "^" + std::to_string(k);
    }
    if (mono.empty()) {
      out += c.get_str();
    } else if (c == 1) {
      out += mono;
    } else if (c == -1) {
      out += "-" + mono;
    } else {
      out += c.get_str() + "*" + mono;
    }
  }
  return out;
}

UniPoly negate_by_parity(const UniPoly& q, long s) {
  return (s % 2 != 0) ? q.negated() : q;
}

UniPoly substitute_one_minus(const UniPoly& q) {
  // Horner in (1 - x).
  const UniPoly one_minus_x{std::vector<mpz_class>{1, -1}};
  UniPoly acc;
  for (int k = q.degree(); k >= 0; --k) {
    acc = acc * one_minus_x;
    acc += UniPoly::constant(q.coeff(k));
  }
  return acc;
}

// ---------------------------------------------------------------------------
// BivarPoly

BivarPoly BivarPoly::constant(mpz_class c) {
  BivarPoly p;
  if (c != 0) p.terms_.emplace(Key{0, 0}, std::move(c));
  return p;
}

BivarPoly BivarPoly::monomial(int i, int j, mpz_class c) {
  if (i < 0 || j < 0) throw std::invalid_argument("BivarPoly::monomial: negative degree");
  BivarPoly p;
  if (c != 0) p.terms_.emplace(Key{i, j}, std::move(c));
  return p;
}

BivarPoly BivarPoly::binomial_power(long base_shift, int exponent, Var var) {
  if (exponent < 0) throw std::invalid_argument("BivarPoly::binomial_power: negative exponent");
  BivarPoly p;
  mpz_class shift_pow = 1;  // base_shift^(exponent - k), built from the top down
  for (int k = exponent; k >= 0; --k) {
    mpz_class c = binomial(exponent, k) * shift_pow;
    if (c != 0) {
      if (var == Var::x) {
        p.terms_.emplace(Key{k, 0}, std::move(c));
      } else {
        p.terms_.emplace(Key{0, k}, std::move(c));
      }
    }
    shift_pow *= base_shift;
  }
  return p;
}

mpz_class BivarPoly::coeff(int i, int j) const {
  auto it = terms_.find(Key{i, j});
  return it == terms_.end() ? mpz_class{0} : it->second;
}

int BivarPoly::x_degree() const {
  int d = -1;
  for (const auto& [key, c] : terms_) d = std::max(d, key.first);
  return d;
}

int BivarPoly::y_degree() const {
  int d = -1;
  for (const auto& [key, c] : terms_) d = std::max(d, key.second);
  return d;
}

void BivarPoly::add_term(int i, int j, const mpz_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(Key{i, j}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& o) {
  for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, c);
  return *this;
}

BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
  BivarPoly out;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_)
      out.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
  return out;
}

BivarPoly BivarPoly::scaled(const mpz_class& c) const {
  BivarPoly out;
  if (c == 0) return out;
  for (const auto& [key, v] : terms_) out.terms_.emplace(key, v * c);
  return out;
}

BivarPoly BivarPoly::swapped() const {
  BivarPoly out;
  for (const auto& [key, c] : terms_) out.terms_.emplace(Key{key.second, key.first}, c);
  return out;
}

UniPoly BivarPoly::at_x_zero() const {
  std::vector<mpz_class> c;
  for (const auto& [key, v] : terms_) {
    if (key.first != 0) continue;
    if (static_cast<int>(c.size()) <= key.second) c.resize(static_cast<std::size_t>(key.second) + 1);
    c[static_cast<std::size_t>(key.second)] = v;
  }
  return UniPoly{std::move(c)};
}

UniPoly BivarPoly::at_y_zero() const {
  std::vector<mpz_class> c;
  for (const auto& [key, v] : terms_) {
    if (key.second != 0) continue;
    if (static_cast<int>(c.size()) <= key.first) c.resize(static_cast<std::size_t>(key.first) + 1);
    c[static_cast<std::size_t>(key.first)] = v;
  }
  return UniPoly{std::move(c)};
}

mpq_class BivarPoly::eval(const mpq_class& x0, const mpq_class& y0) const {
  // Group by x-degree, Horner over x with inner Horner over y.
  std::map<int, UniPoly> rows;
  for (const auto& [key, c] : terms_) {
    auto& row = rows[key.first];
    row += UniPoly::monomial(key.second, c);
  }
  mpq_class acc = 0;
  int prev_deg = -1;
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
    if (prev_deg >= 0) {
      for (int k = 0; k < prev_deg - it->first; ++k) acc *= x0;
    }
    acc += it->second.eval(y0);
    prev_deg = it->first;
  }
  if (prev_deg > 0) {
    for (int k = 0; k < prev_deg; ++k) acc *= x0;
  }
  return acc;
}

std::string BivarPoly::str() const {
  if (terms_.empty()) return "0";
  // Lexicographically descending by (x-degree, y-degree).
  std::vector<std::pair<Key, const mpz_class*>> order;
  order.reserve(terms_.size());
  for (const auto& [key, c] : terms_) order.emplace_back(key, &c);
  std::sort(order.begin(), order.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });
  std::string out;
  for (const auto& [key, cp] : order) {
    if (!out.empty()) out += " + ";
    std::string mono;
    if (key.first == 1) {
      mono = "x";
    } else if (key.first > 1) {
      mono = "x^" + std::to_string(key.first);
    }
    if (key.second >= 1) {
      if (!mono.empty()) mono += "*";
      mono += (key.second == 1) ? "y" : "y^" + std::to_string(key.second);
    }
    const mpz_class& c = *cp;
    if (mono.empty()) {
      out += c.get_str();
    } else if (c == 1) {
      out += mono;
    } else if (c == -1) {
      out += "-" + mono;
    } else {
      out += c.get_str() + "*" + mono;
    }
  }
  return out;
}

BivarPoly outer_product(const UniPoly& in_x, const UniPoly& in_y) {
  BivarPoly out;
  for (int i = 0; i <= in_x.degree(); ++i) {
    mpz_class cx = in_x.coeff(i);
    if (cx == 0) continue;
    for (int j = 0; j <= in_y.degree(); ++j) {
      mpz_class cy = in_y.coeff(j);
      if (cy != 0) out.add_term(i, j, cx * cy);
    }
  }
  return out;
}

BivarPoly from_x_poly(const UniPoly& p) { return outer_product(p, UniPoly::constant(1)); }

BivarPoly from_y_poly(const UniPoly& p) { return outer_product(UniPoly::constant(1), p); }

}  // namespace mtutte
