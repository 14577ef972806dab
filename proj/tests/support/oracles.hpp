#pragma once

// Brute-force reference computations. These only read the Cartan matrix,
// symmetrizers and simple data from a RootSystem and never call the code
// paths they are used to check.

#include "affbetti/affbetti.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <random>
#include <set>

namespace oracle {

using affbetti::BigInt;
using affbetti::CorootVector;
using affbetti::IntVec;
using affbetti::Rational;
using affbetti::RatVec;
using affbetti::RootSystem;

/// <beta, a_i^v> for beta in root coordinates.
inline std::int64_t coroot_pairing(const affbetti::IntMatrix& a, const IntVec& beta, std::size_t i) {
  std::int64_t s = 0;
  for (std::size_t j = 0; j < beta.size(); ++j) s += a[i][j] * beta[j];
  return s;
}

/// Roots as the orbit of the simple roots under simple reflections.
inline std::set<IntVec> root_orbit(const affbetti::IntMatrix& a) {
  const std::size_t r = a.size();
  std::set<IntVec> seen;
  std::deque<IntVec> queue;
  for (std::size_t i = 0; i < r; ++i) {
    IntVec e(r, 0);
    e[i] = 1;
    if (seen.insert(e).second) queue.push_back(e);
  }
  while (!queue.empty()) {
    IntVec b = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < r; ++i) {
      IntVec c = b;
      c[i] -= coroot_pairing(a, b, i);
      if (seen.insert(c).second) queue.push_back(c);
    }
  }
  return seen;
}

inline std::set<IntVec> positive_roots(const affbetti::IntMatrix& a) {
  std::set<IntVec> out;
  for (const auto& b : root_orbit(a))
    if (std::all_of(b.begin(), b.end(), [](auto x) { return x >= 0; })) out.insert(b);
  return out;
}

/// Length-graded orbit of the regular vector 2*rho (root coordinates, via
/// sum of positive roots) under simple reflections; BFS depth is length.
inline std::vector<BigInt> weyl_length_distribution(const affbetti::IntMatrix& a) {
  const std::size_t r = a.size();
  IntVec two_rho(r, 0);
  for (const auto& b : positive_roots(a))
    for (std::size_t j = 0; j < r; ++j) two_rho[j] += b[j];
  std::map<IntVec, std::size_t> depth{{two_rho, 0}};
  std::deque<IntVec> queue{two_rho};
  std::vector<BigInt> dist{1};
  while (!queue.empty()) {
    IntVec v = queue.front();
    queue.pop_front();
    const std::size_t d = depth[v];
    for (std::size_t i = 0; i < r; ++i) {
      IntVec c = v;
      c[i] -= coroot_pairing(a, v, i);
      if (depth.emplace(c, d + 1).second) {
        queue.push_back(c);
        if (dist.size() <= d + 1) dist.resize(d + 2, 0);
        dist[d + 1] += 1;
      }
    }
  }
  return dist;
}

/// Dominance coordinates (mu|a_j) from the Cartan matrix.
inline IntVec dominance(const RootSystem& rs, const IntVec& mu) {
  IntVec out(rs.rank, 0);
  for (std::size_t j = 0; j < rs.rank; ++j)
    for (std::size_t i = 0; i < rs.rank; ++i) out[j] += mu[i] * rs.cartan[i][j];
  return out;
}

/// Dominant mu with lambda - mu >= 0, by scanning the whole box [0, lambda].
inline std::vector<IntVec> dominant_below_box(const RootSystem& rs, const IntVec& lambda) {
  std::vector<IntVec> out;
  IntVec mu(rs.rank, 0);
  while (true) {
    auto d = dominance(rs, mu);
    if (std::all_of(d.begin(), d.end(), [](auto x) { return x >= 0; })) out.push_back(mu);
    std::size_t i = 0;
    while (i < rs.rank && mu[i] == lambda[i]) mu[i++] = 0;
    if (i == rs.rank) break;
    ++mu[i];
  }
  return out;
}

inline std::int64_t two_rho_pairing(const IntVec& mu) {
  std::int64_t s = 0;
  for (auto x : mu) s += 2 * x;
  return s;
}

using Point2 = std::pair<Rational, Rational>;

/// Area of a convex polygon given in any vertex order.
inline Rational convex_area(std::vector<Point2> pts) {
  if (pts.size() < 3) return 0;
  Rational cx = 0, cy = 0;
  for (const auto& p : pts) {
    cx += p.first;
    cy += p.second;
  }
  cx /= static_cast<long>(pts.size());
  cy /= static_cast<long>(pts.size());
  // Sort by angle with exact quadrant + cross-product comparisons.
  auto half = [&](const Point2& p) {
    Rational dx = p.first - cx, dy = p.second - cy;
    return (dy > 0 || (dy == 0 && dx > 0)) ? 0 : 1;
  };
  std::sort(pts.begin(), pts.end(), [&](const Point2& p, const Point2& q) {
    int hp = half(p), hq = half(q);
    if (hp != hq) return hp < hq;
    Rational cross = (p.first - cx) * (q.second - cy) - (p.second - cy) * (q.first - cx);
    return cross > 0;
  });
  Rational twice = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const auto& p = pts[i];
    const auto& q = pts[(i + 1) % pts.size()];
    twice += p.first * q.second - p.second * q.first;
  }
  return (twice < 0 ? -twice : twice) / 2;
}

/// Keeps the part of a polygon where a*x + b*y + c >= 0.
inline std::vector<Point2> clip(const std::vector<Point2>& poly, const Rational& a, const Rational& b,
                                const Rational& c) {
  std::vector<Point2> out;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& p = poly[i];
    const auto& q = poly[(i + 1) % n];
    Rational fp = a * p.first + b * p.second + c;
    Rational fq = a * q.first + b * q.second + c;
    if (fp >= 0) out.push_back(p);
    if ((fp > 0 && fq < 0) || (fp < 0 && fq > 0)) {
      Rational t = fp / (fp - fq);
      out.push_back({p.first + t * (q.first - p.first), p.second + t * (q.second - p.second)});
    }
  }
  return out;
}

/// Rank-2 P^lambda in coroot coordinates by clipping a bounding box with the
/// four defining inequalities, then optionally with height <= z.
inline std::vector<Point2> rank2_polygon(const RootSystem& rs, const IntVec& lambda,
                                         const std::optional<Rational>& z = std::nullopt) {
  const Rational big = Rational(4 * (lambda[0] + lambda[1] + 1));
  std::vector<Point2> poly{{-big, -big}, {big, -big}, {big, big}, {-big, big}};
  // (x|a_j) >= 0
  for (std::size_t j = 0; j < 2; ++j)
    poly = clip(poly, Rational(rs.cartan[0][j]), Rational(rs.cartan[1][j]), Rational(0));
  // lambda - x in the cone of simple coroots: coordinatewise.
  poly = clip(poly, Rational(-1), Rational(0), Rational(lambda[0]));
  poly = clip(poly, Rational(0), Rational(-1), Rational(lambda[1]));
  if (z) poly = clip(poly, Rational(-2), Rational(-2), *z);
  return poly;
}

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline std::int64_t uniform(std::mt19937_64& g, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(g);
}

/// Random strongly dominant lattice point: coweight coordinates drawn from
/// [1, hi], rejected until sum c_i w_i^v lies in the coroot lattice.
inline CorootVector random_strongly_dominant(const RootSystem& rs, std::mt19937_64& g, std::int64_t hi) {
  while (true) {
    IntVec c(rs.rank);
    for (auto& x : c) x = uniform(g, 1, hi);
    CorootVector mu = CorootVector::zero(rs.rank);
    bool integral = true;
    for (std::size_t j = 0; j < rs.rank && integral; ++j) {
      Rational s = 0;
      for (std::size_t i = 0; i < rs.rank; ++i) s += Rational(c[i]) * rs.fundamental_coweights[i][j];
      integral = affbetti::is_integer(s);
      if (integral) mu[j] = affbetti::integer_value(s);
    }
    if (integral) return mu;
  }
}

}  // namespace oracle
