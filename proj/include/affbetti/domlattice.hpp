#pragma once

// Dominant lattice points of P^lambda and the dominant lattice formula
//
//   pi^{t_lambda}(q) = sum_{mu in P^lambda ∩ ZPhi^v} q^{2(rho|mu)} · ^{I_mu}pi_f(q^{-1}),
//
// whose coefficients are the Betti numbers b_i of [e, t_lambda]^f.

#include "affbetti/finiteweyl.hpp"
#include "affbetti/laurent.hpp"
#include "affbetti/rootsys.hpp"

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

namespace affbetti {

struct DominantPoint {
  CorootVector mu;
  std::int64_t height = 0;
  SubsetMask wall_set = 0;  // bit i set iff (mu|a_{i+1}) = 0

  friend bool operator==(const DominantPoint&, const DominantPoint&) = default;
};

enum class Provenance { formula, oracle };

inline const char* to_string(Provenance p) { return p == Provenance::formula ? "formula" : "oracle"; }

struct BettiSequence {
  CorootVector lambda;
  std::int64_t length_top = 0;
  std::vector<BigInt> coefficients;  // b_0 .. b_{length_top}
  Provenance provenance = Provenance::formula;

  BigInt interval_size() const {
    BigInt s = 0;
    for (const auto& b : coefficients) s += b;
    return s;
  }
};

inline void require_dominant(const RootSystem& rs, const CorootVector& lambda) {
  if (lambda.rank() != rs.rank)
    throw std::invalid_argument("lambda has " + std::to_string(lambda.rank()) + " coordinates, expected " +
                                std::to_string(rs.rank));
  auto d = dominance_coords(rs, lambda);
  if (std::any_of(d.begin(), d.end(), [](auto x) { return x < 0; })) {
    std::string s;
    for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
    throw std::invalid_argument("lambda " + to_string(lambda) + " is not dominant: (lambda|a_i) = (" + s + ")");
  }
}

inline SubsetMask wall_set(const RootSystem& rs, const CorootVector& mu) {
  auto d = dominance_coords(rs, mu);
  SubsetMask m = 0;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] == 0) m |= SubsetMask{1} << i;
  return m;
}

/// mu ⪯ lambda: lambda - mu is a non-negative combination of simple coroots.
inline bool dominance_leq(const RootSystem& rs, const CorootVector& mu, const CorootVector& lambda) {
  if (mu.rank() != rs.rank || lambda.rank() != rs.rank) throw std::invalid_argument("dominance_leq: rank mismatch");
  for (std::size_t i = 0; i < rs.rank; ++i)
    if (lambda[i] < mu[i]) return false;
  return true;
}

/// P^lambda ∩ ZPhi^v, sorted by (height, coordinates).
///
/// Scans mu = lambda - c with c in N^r, sum c_i <= (rho|lambda) and
/// c_i <= lambda_i (dominant points have non-negative coroot coordinates).
inline std::vector<DominantPoint> enumerate_dominant_below(const RootSystem& rs, const CorootVector& lambda) {
  require_dominant(rs, lambda);
  const std::size_t r = rs.rank;
  std::int64_t budget = 0;
  for (std::size_t i = 0; i < r; ++i) budget += lambda[i] * rs.rho_pairings[i];

  std::vector<DominantPoint> out;
  CorootVector mu = lambda;
  IntVec dom = dominance_coords(rs, lambda);
  // Depth-first over c; dominance coordinates updated incrementally.
  std::function<void(std::size_t, std::int64_t)> scan = [&](std::size_t i, std::int64_t left) {
    if (i == r) {
      if (std::all_of(dom.begin(), dom.end(), [](auto x) { return x >= 0; })) {
        DominantPoint p;
        p.mu = mu;
        p.height = height(rs, mu);
        for (std::size_t j = 0; j < r; ++j)
          if (dom[j] == 0) p.wall_set |= SubsetMask{1} << j;
        out.push_back(std::move(p));
      }
      return;
    }
    const std::int64_t max_c = std::min(left, lambda[i]);
    for (std::int64_t c = 0;; ++c) {
      scan(i + 1, left - c);
      if (c == max_c) {
        mu[i] += c;
        for (std::size_t j = 0; j < r; ++j) dom[j] += c * rs.cartan[i][j];
        break;
      }
      mu[i] -= 1;
      for (std::size_t j = 0; j < r; ++j) dom[j] -= rs.cartan[i][j];
    }
  };
  scan(0, budget);
  std::sort(out.begin(), out.end(), [](const DominantPoint& a, const DominantPoint& b) {
    return a.height != b.height ? a.height < b.height : a.mu < b.mu;
  });
  return out;
}

/// The summand q^{2(rho|mu)} · ^{I_mu}pi_f(q^{-1}) attached to one lattice point.
inline LaurentPolynomial lattice_summand(const WeylGroupTable& table, const DominantPoint& p) {
  LaurentPolynomial out;
  out.add_shifted(invert_variable(table.quotient_poincare(p.wall_set)), p.height);
  return out;
}

inline LaurentPolynomial dominant_lattice_formula(const RootSystem& rs, const WeylGroupTable& table,
                                                  const CorootVector& lambda) {
  LaurentPolynomial total;
  for (const auto& p : enumerate_dominant_below(rs, lambda)) {
    const auto& quot = table.quotient_poincare(p.wall_set);
    for (const auto& [e, c] : quot.terms()) total.add_term(p.height - e, c);
  }
  return total;
}

inline BettiSequence betti_from_polynomial(const RootSystem& rs, const CorootVector& lambda,
                                           const LaurentPolynomial& poly, Provenance provenance) {
  BettiSequence b;
  b.lambda = lambda;
  b.length_top = height(rs, lambda);
  b.provenance = provenance;
  if (!poly.is_zero() && (poly.min_exponent() < 0 || poly.max_exponent() > b.length_top))
    throw std::logic_error("Poincare polynomial has exponents outside [0, l(t_lambda)]");
  b.coefficients.assign(static_cast<std::size_t>(b.length_top) + 1, BigInt(0));
  for (const auto& [e, c] : poly.terms()) b.coefficients[static_cast<std::size_t>(e)] = c;
  return b;
}

inline BettiSequence betti_sequence(const RootSystem& rs, const WeylGroupTable& table, const CorootVector& lambda) {
  return betti_from_polynomial(rs, lambda, dominant_lattice_formula(rs, table, lambda), Provenance::formula);
}

/// pi^lambda(q) = sum_{mu} q^{2(rho|mu)}.
inline LaurentPolynomial pi_lambda(const RootSystem& rs, const CorootVector& lambda) {
  LaurentPolynomial p;
  for (const auto& pt : enumerate_dominant_below(rs, lambda)) p.add_term(pt.height, 1);
  return p;
}

/// Strongly dominant points only.
inline LaurentPolynomial pi_lambda_plus(const RootSystem& rs, const CorootVector& lambda) {
  LaurentPolynomial p;
  for (const auto& pt : enumerate_dominant_below(rs, lambda))
    if (pt.wall_set == 0) p.add_term(pt.height, 1);
  return p;
}

/// pi_+^lambda(q) pi_f(q^{-1}) <= pi^{t_lambda}(q) <= pi^lambda(q) pi_f(q^{-1}).
inline bool sandwich_check(const RootSystem& rs, const WeylGroupTable& table, const CorootVector& lambda) {
  const LaurentPolynomial pf_inv = invert_variable(table.poincare());
  const LaurentPolynomial middle = dominant_lattice_formula(rs, table, lambda);
  return leq_coefficientwise(pi_lambda_plus(rs, lambda) * pf_inv, middle) &&
         leq_coefficientwise(middle, pi_lambda(rs, lambda) * pf_inv);
}

enum class Basis { coroot, coweight };

/// Converts fundamental-coweight coordinates ((lambda|a_i))_i to coroot
/// coordinates; rejects points outside the coroot lattice.
inline CorootVector lambda_from_coweight(const RootSystem& rs, const IntVec& coweight) {
  if (coweight.size() != rs.rank)
    throw std::invalid_argument("expected " + std::to_string(rs.rank) + " coweight coordinates");
  CorootVector out = CorootVector::zero(rs.rank);
  for (std::size_t j = 0; j < rs.rank; ++j) {
    Rational s = 0;
    for (std::size_t i = 0; i < rs.rank; ++i) s += Rational(coweight[i]) * rs.fundamental_coweights[i][j];
    if (!is_integer(s)) {
      std::string c;
      for (std::size_t i = 0; i < coweight.size(); ++i) c += (i ? "," : "") + std::to_string(coweight[i]);
      throw std::invalid_argument("coweight (" + c + ") is not in the coroot lattice of " + rs.name());
    }
    out[j] = integer_value(s);
  }
  return out;
}

inline CorootVector parse_lambda(const RootSystem& rs, const IntVec& coords, Basis basis) {
  if (coords.size() != rs.rank)
    throw std::invalid_argument("lambda has " + std::to_string(coords.size()) + " coordinates, expected " +
                                std::to_string(rs.rank));
  return basis == Basis::coroot ? CorootVector(coords) : lambda_from_coweight(rs, coords);
}

}  // namespace affbetti
