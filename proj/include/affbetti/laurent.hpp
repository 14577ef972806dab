#pragma once

// Sparse Laurent polynomials in q with arbitrary-precision integer
// coefficients, plus the truncation calculus T^{<=z}.

#include "affbetti/numeric.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace affbetti {

class LaurentPolynomial {
 public:
  using Exponent = std::int64_t;
  using Terms = std::map<Exponent, BigInt>;

  LaurentPolynomial() = default;
  LaurentPolynomial(BigInt constant) { add_term(0, std::move(constant)); }  // NOLINT: implicit on purpose
  LaurentPolynomial(std::int64_t constant) : LaurentPolynomial(BigInt(constant)) {}  // NOLINT

  static LaurentPolynomial monomial(Exponent e, BigInt c = 1) {
    LaurentPolynomial p;
    p.add_term(e, std::move(c));
    return p;
  }

  /// sum_i coeffs[i] q^(i + shift)
  static LaurentPolynomial from_dense(const std::vector<BigInt>& coeffs, Exponent shift = 0) {
    LaurentPolynomial p;
    for (std::size_t i = 0; i < coeffs.size(); ++i) p.add_term(shift + static_cast<Exponent>(i), coeffs[i]);
    return p;
  }
  static LaurentPolynomial from_dense(const std::vector<std::int64_t>& coeffs, Exponent shift = 0) {
    LaurentPolynomial p;
    for (std::size_t i = 0; i < coeffs.size(); ++i) p.add_term(shift + static_cast<Exponent>(i), coeffs[i]);
    return p;
  }

  void add_term(Exponent e, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  BigInt coefficient(Exponent e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? BigInt(0) : it->second;
  }
  Exponent min_exponent() const { return is_zero() ? 0 : terms_.begin()->first; }
  Exponent max_exponent() const { return is_zero() ? 0 : terms_.rbegin()->first; }

  bool has_nonnegative_coefficients() const {
    for (const auto& [e, c] : terms_)
      if (c < 0) return false;
    return true;
  }

  /// Coefficients of q^0..q^max; requires min exponent >= 0.
  std::vector<BigInt> dense() const {
    if (is_zero()) return {};
    if (min_exponent() < 0) throw std::domain_error("dense(): polynomial has negative exponents");
    std::vector<BigInt> out(static_cast<std::size_t>(max_exponent()) + 1, BigInt(0));
    for (const auto& [e, c] : terms_) out[static_cast<std::size_t>(e)] = c;
    return out;
  }

  LaurentPolynomial& operator+=(const LaurentPolynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  LaurentPolynomial& operator-=(const LaurentPolynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  /// this += c * q^shift * o
  void add_shifted(const LaurentPolynomial& o, Exponent shift, const BigInt& c = 1) {
    for (const auto& [e, v] : o.terms_) add_term(e + shift, v * c);
  }

  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    LaurentPolynomial out;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
    return out;
  }
  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

 private:
  Terms terms_;
};

/// q -> q^{-1}
inline LaurentPolynomial invert_variable(const LaurentPolynomial& p) {
  LaurentPolynomial out;
  for (const auto& [e, c] : p.terms()) out.add_term(-e, c);
  return out;
}

/// T^{<=n}: keeps exponents <= n.
inline LaurentPolynomial truncate_leq(const LaurentPolynomial& p, std::int64_t n) {
  LaurentPolynomial out;
  for (const auto& [e, c] : p.terms()) {
    if (e > n) break;
    out.add_term(e, c);
  }
  return out;
}

/// T^{<=z} with z rational, i.e. T^{<=floor(z)}.
inline LaurentPolynomial truncate_leq(const LaurentPolynomial& p, const Rational& z) {
  BigInt f = floor_of(z);
  if (f > p.max_exponent()) return p;
  if (f < p.min_exponent()) return {};
  return truncate_leq(p, static_cast<std::int64_t>(f));
}

inline BigInt eval_at_one(const LaurentPolynomial& p) {
  BigInt s = 0;
  for (const auto& [e, c] : p.terms()) s += c;
  return s;
}

/// Coefficientwise p <= q on N[q^{+-1}].
inline bool leq_coefficientwise(const LaurentPolynomial& p, const LaurentPolynomial& q) {
  if (!p.has_nonnegative_coefficients() || !q.has_nonnegative_coefficients())
    throw std::invalid_argument("leq_coefficientwise: negative coefficient in input");
  for (const auto& [e, c] : p.terms())
    if (c > q.coefficient(e)) return false;
  return true;
}

/// Human-readable form, e.g. "1 + 2q^-1 + q^-3".
inline std::string to_string(const LaurentPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (const auto& [e, c] : p.terms()) {
    if (!s.empty()) s += c < 0 ? " - " : " + ";
    else if (c < 0) s += "-";
    BigInt a = c < 0 ? BigInt(-c) : c;
    if (e == 0) {
      s += a.str();
      continue;
    }
    if (a != 1) s += a.str();
    s += "q";
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

}  // namespace affbetti
