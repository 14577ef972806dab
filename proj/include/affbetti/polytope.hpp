#pragma once

// Exact rational geometry of P^lambda = C_+closure ∩ (lambda - cone(simple coroots)).
//
// Points are in coroot coordinates. Volumes use the alcove normalization:
// the unit parallelotope spanned by the simple coroots has volume |W_f|.

#include "affbetti/domlattice.hpp"
#include "affbetti/finiteweyl.hpp"
#include "affbetti/rootsys.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <vector>

namespace affbetti {

/// (x | normal) >= offset, with `normal` in root coordinates.
struct Halfspace {
  RatVec normal;
  Rational offset;
};

struct RationalPolytope {
  std::size_t rank = 0;
  std::vector<Halfspace> halfspaces;
  std::vector<RatVec> vertices;  // coroot coordinates, sorted
  std::size_t dim = 0;
};

/// F(z) = Vol_r(P^lambda ∩ {ht <= z}) as a piecewise polynomial.
struct VolumeFunction {
  RatVec breakpoints;          // 0 = z_0 < ... < z_m = l(t_lambda)
  std::vector<RatVec> pieces;  // pieces[j][d] = coefficient of z^d on [z_j, z_{j+1}]

  Rational top() const { return breakpoints.back(); }

  std::size_t piece_index(const Rational& z) const {
    if (z < breakpoints.front() || z > breakpoints.back())
      throw std::out_of_range("VolumeFunction: z = " + to_string(z) + " outside [0, " + to_string(top()) + "]");
    for (std::size_t j = 0; j + 1 < breakpoints.size(); ++j)
      if (z < breakpoints[j + 1]) return j;
    return pieces.size() - 1;
  }

  Rational operator()(const Rational& z) const {
    if (z <= breakpoints.front()) return 0;
    if (z >= breakpoints.back()) return evaluate(pieces.back(), breakpoints.back());
    return evaluate(pieces[piece_index(z)], z);
  }

  static Rational evaluate(const RatVec& coeffs, const Rational& z) {
    Rational v = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * z + *it;
    return v;
  }
};

struct VolumeResult {
  Rational volume;
  bool full_dimensional = true;
};

namespace detail {

// Linear functional x -> (x | normal) on coroot coordinates.
inline RatVec functional(const RootSystem& rs, const RatVec& normal) {
  RatVec f(rs.rank, Rational(0));
  for (std::size_t i = 0; i < rs.rank; ++i)
    for (std::size_t j = 0; j < rs.rank; ++j) f[i] += Rational(rs.cartan[i][j]) * normal[j];
  return f;
}

inline Rational dot(const RatVec& a, const RatVec& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline std::size_t affine_dim(const std::vector<RatVec>& pts, const std::vector<std::size_t>& idx) {
  if (idx.size() <= 1) return 0;
  RatMatrix diffs;
  for (std::size_t k = 1; k < idx.size(); ++k) {
    RatVec d = pts[idx[k]];
    for (std::size_t i = 0; i < d.size(); ++i) d[i] -= pts[idx[0]][i];
    diffs.push_back(std::move(d));
  }
  return linalg::rank(std::move(diffs));
}

inline Rational factorial(std::size_t n) {
  Rational f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= static_cast<long>(i);
  return f;
}

// Pulling triangulation: cone from the first vertex of a face over its
// facets that avoid that vertex. Returns simplices as vertex index lists.
class Triangulator {
 public:
  Triangulator(const std::vector<RatVec>& pts, const std::vector<std::vector<bool>>& tight)
      : pts_(pts), tight_(tight) {}

  std::vector<std::vector<std::size_t>> run(const std::vector<std::size_t>& face, std::size_t d) {
    if (d == 0) return {{face.front()}};
    const std::size_t apex = face.front();
    std::set<std::vector<std::size_t>> subfaces;
    const std::size_t num_h = tight_.empty() ? 0 : tight_[0].size();
    for (std::size_t h = 0; h < num_h; ++h) {
      if (tight_[apex][h]) continue;
      std::vector<std::size_t> g;
      for (auto v : face)
        if (tight_[v][h]) g.push_back(v);
      if (g.size() < d) continue;
      if (affine_dim(pts_, g) != d - 1) continue;
      subfaces.insert(std::move(g));
    }
    std::vector<std::vector<std::size_t>> out;
    for (const auto& g : subfaces)
      for (auto& s : run(g, d - 1)) {
        s.push_back(apex);
        out.push_back(std::move(s));
      }
    return out;
  }

 private:
  const std::vector<RatVec>& pts_;
  const std::vector<std::vector<bool>>& tight_;
};

}  // namespace detail

/// Vertex enumeration over all r-subsets of facet hyperplanes.
inline RationalPolytope make_polytope(const RootSystem& rs, std::vector<Halfspace> halfspaces) {
  RationalPolytope p;
  p.rank = rs.rank;
  p.halfspaces = std::move(halfspaces);
  const std::size_t r = rs.rank;
  const std::size_t n = p.halfspaces.size();
  std::vector<RatVec> fn;
  for (const auto& h : p.halfspaces) fn.push_back(detail::functional(rs, h.normal));

  std::set<RatVec> found;
  std::vector<std::size_t> pick(r);
  for (std::size_t i = 0; i < r; ++i) pick[i] = i;
  while (r <= n) {
    RatMatrix a;
    RatVec b;
    for (auto k : pick) {
      a.push_back(fn[k]);
      b.push_back(p.halfspaces[k].offset);
    }
    if (auto x = linalg::solve(a, b)) {
      bool feasible = true;
      for (std::size_t k = 0; k < n && feasible; ++k) feasible = detail::dot(fn[k], *x) >= p.halfspaces[k].offset;
      if (feasible) found.insert(*x);
    }
    // next r-combination
    std::size_t i = r;
    while (i > 0 && pick[i - 1] == n - r + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < r; ++j) pick[j] = pick[j - 1] + 1;
  }
  p.vertices.assign(found.begin(), found.end());
  std::vector<std::size_t> all(p.vertices.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  p.dim = detail::affine_dim(p.vertices, all);
  return p;
}

/// Dominance (x|a_i) >= 0 and lambda - x in the simple coroot cone,
/// i.e. (x | -omega_i) >= -(lambda | omega_i).
inline std::vector<Halfspace> h_representation(const RootSystem& rs, const CorootVector& lambda) {
  require_dominant(rs, lambda);
  std::vector<Halfspace> hs;
  for (std::size_t i = 0; i < rs.rank; ++i) {
    RatVec e(rs.rank, Rational(0));
    e[i] = 1;
    hs.push_back({e, Rational(0)});
  }
  for (std::size_t i = 0; i < rs.rank; ++i) {
    RatVec n = rs.fundamental_weights[i];
    for (auto& x : n) x = -x;
    hs.push_back({n, Rational(-lambda[i])});
  }
  return hs;
}

inline RationalPolytope dominant_polytope(const RootSystem& rs, const CorootVector& lambda) {
  return make_polytope(rs, h_representation(rs, lambda));
}

/// {x in P^lambda : 2(rho|x) <= z}.
inline RationalPolytope truncated_polytope(const RootSystem& rs, const CorootVector& lambda, const Rational& z) {
  auto hs = h_representation(rs, lambda);
  RatVec n(rs.rank);
  for (std::size_t i = 0; i < rs.rank; ++i) n[i] = -2 * rs.rho[i];
  hs.push_back({n, -z});
  return make_polytope(rs, std::move(hs));
}

inline std::vector<RatVec> vertices(const RootSystem& rs, const CorootVector& lambda) {
  return dominant_polytope(rs, lambda).vertices;
}

/// Vertices from the hypercube description for strongly dominant lambda:
/// lambda - sum_{j in J} c_j a_j^v with c_J = M_J^{-1} ((a_j|lambda))_{j in J},
/// M_{jk} = (a_k^v | a_j).
inline std::vector<RatVec> hypercube_vertices(const RootSystem& rs, const CorootVector& lambda) {
  const std::size_t r = rs.rank;
  const IntVec d = dominance_coords(rs, lambda);
  std::vector<RatVec> out;
  for (SubsetMask J = 0; J < (SubsetMask{1} << r); ++J) {
    std::vector<std::size_t> idx;
    for (std::size_t j = 0; j < r; ++j)
      if (J & (SubsetMask{1} << j)) idx.push_back(j);
    RatMatrix m(idx.size(), RatVec(idx.size()));
    RatVec rhs(idx.size());
    for (std::size_t a = 0; a < idx.size(); ++a) {
      rhs[a] = d[idx[a]];
      for (std::size_t b = 0; b < idx.size(); ++b) m[a][b] = rs.cartan[idx[b]][idx[a]];
    }
    RatVec v = to_rational(lambda.coords);
    if (!idx.empty()) {
      auto c = linalg::solve(m, rhs);
      if (!c) throw std::logic_error("singular Cartan submatrix");
      for (std::size_t a = 0; a < idx.size(); ++a) v[idx[a]] -= (*c)[a];
    }
    out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {

inline Rational simplex_volume(const std::vector<RatVec>& pts, const std::vector<std::size_t>& s) {
  const std::size_t d = s.size() - 1;
  RatMatrix m(d, RatVec(d));
  for (std::size_t k = 1; k <= d; ++k)
    for (std::size_t i = 0; i < d; ++i) m[k - 1][i] = pts[s[k]][i] - pts[s[0]][i];
  Rational det = linalg::determinant(std::move(m));
  if (det < 0) det = -det;
  return det / factorial(d);
}

}  // namespace detail

/// Volume of a full-dimensional polytope in coroot coordinates (unit cube = 1).
inline Rational coroot_volume(const RootSystem& rs, const RationalPolytope& p) {
  if (p.dim < p.rank || p.vertices.empty()) return 0;
  std::vector<std::vector<bool>> tight(p.vertices.size(), std::vector<bool>(p.halfspaces.size()));
  for (std::size_t h = 0; h < p.halfspaces.size(); ++h) {
    const RatVec f = detail::functional(rs, p.halfspaces[h].normal);
    for (std::size_t v = 0; v < p.vertices.size(); ++v) tight[v][h] = detail::dot(f, p.vertices[v]) == p.halfspaces[h].offset;
  }
  std::vector<std::size_t> all(p.vertices.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  detail::Triangulator tri(p.vertices, tight);
  Rational vol = 0;
  for (const auto& s : tri.run(all, p.rank)) vol += detail::simplex_volume(p.vertices, s);
  return vol;
}

/// Vol_r(P^lambda) with alcoves of volume 1.
inline VolumeResult volume(const RootSystem& rs, const CorootVector& lambda) {
  auto p = dominant_polytope(rs, lambda);
  if (p.dim < rs.rank) return {Rational(0), false};
  return {coroot_volume(rs, p) * Rational(weyl_group_order(rs)), true};
}

/// Vol_r(P^lambda ∩ {ht <= z}), alcove-normalized.
inline Rational truncated_volume(const RootSystem& rs, const CorootVector& lambda, const Rational& z) {
  if (z <= 0) return 0;
  auto p = truncated_polytope(rs, lambda, z);
  return coroot_volume(rs, p) * Rational(weyl_group_order(rs));
}

/// Piecewise-polynomial F(z); each piece is interpolated from r+1 exact
/// slice volumes and checked at one more height.
inline VolumeFunction truncated_volume_function(const RootSystem& rs, const CorootVector& lambda) {
  auto p = dominant_polytope(rs, lambda);
  if (p.dim < rs.rank)
    throw std::domain_error("P^lambda is not full-dimensional for lambda = " + to_string(lambda));
  const std::size_t r = rs.rank;
  std::set<Rational> heights;
  for (const auto& v : p.vertices) {
    Rational h = 0;
    for (std::size_t i = 0; i < r; ++i) h += 2 * v[i] * rs.rho_pairings[i];
    heights.insert(h);
  }
  VolumeFunction vf;
  vf.breakpoints.assign(heights.begin(), heights.end());
  for (std::size_t j = 0; j + 1 < vf.breakpoints.size(); ++j) {
    const Rational lo = vf.breakpoints[j], hi = vf.breakpoints[j + 1];
    const std::size_t n = r + 2;
    RatVec zs, fs;
    for (std::size_t t = 1; t <= n; ++t) {
      zs.push_back(lo + (hi - lo) * Rational(static_cast<long>(t)) / Rational(static_cast<long>(n + 1)));
      fs.push_back(truncated_volume(rs, lambda, zs.back()));
    }
    RatMatrix vand(r + 1, RatVec(r + 1));
    RatVec rhs(r + 1);
    for (std::size_t a = 0; a <= r; ++a) {
      Rational pw = 1;
      for (std::size_t d = 0; d <= r; ++d) {
        vand[a][d] = pw;
        pw *= zs[a];
      }
      rhs[a] = fs[a];
    }
    auto coeffs = linalg::solve(vand, rhs);
    if (!coeffs) throw std::logic_error("singular interpolation system");
    if (VolumeFunction::evaluate(*coeffs, zs.back()) != fs.back())
      throw std::logic_error("slice volume is not polynomial of degree <= r between consecutive vertex heights");
    vf.pieces.push_back(std::move(*coeffs));
  }
  return vf;
}

/// g(z) = F'(z); right derivative at interior breakpoints.
inline Rational density(const VolumeFunction& vf, const Rational& z) {
  const RatVec& c = vf.pieces[vf.piece_index(z)];
  Rational v = 0;
  for (std::size_t d = c.size(); d-- > 1;) v = v * z + c[d] * static_cast<long>(d);
  return v;
}

}  // namespace affbetti
