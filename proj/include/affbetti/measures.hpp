#pragma once

// Discrete measures built from Betti numbers and lattice-point counts of the
// dilations k·lambda, and their CDF distance to ht_* Vol_r.

#include "affbetti/domlattice.hpp"
#include "affbetti/polytope.hpp"

#include <map>
#include <optional>
#include <vector>

namespace affbetti {

struct Atom {
  Rational location;
  Rational mass;
};

struct DiscreteMeasure {
  std::vector<Atom> atoms;  // sorted by location, positive masses
  Rational total;

  /// Builds from (location -> mass); zero masses are dropped.
  static DiscreteMeasure from_map(const std::map<Rational, Rational>& masses) {
    DiscreteMeasure m;
    for (const auto& [loc, mass] : masses) {
      if (mass == 0) continue;
      if (mass < 0) throw std::invalid_argument("DiscreteMeasure: negative mass");
      m.atoms.push_back({loc, mass});
      m.total += mass;
    }
    return m;
  }
};

/// m((-inf, z]).
inline Rational cdf(const DiscreteMeasure& m, const Rational& z) {
  Rational s = 0;
  for (const auto& a : m.atoms) {
    if (a.location > z) break;
    s += a.mass;
  }
  return s;
}

namespace detail {

inline Rational k_power(std::int64_t k, std::size_t r) {
  Rational p = 1;
  for (std::size_t i = 0; i < r; ++i) p *= k;
  return p;
}

inline void require_k(std::int64_t k) {
  if (k < 1) throw std::invalid_argument("dilation factor k must be >= 1");
}

}  // namespace detail

/// m_k = k^{-r} sum_i b_i^{t_{k lambda}, f} delta_{i/k}.
inline DiscreteMeasure measure_mk(const RootSystem& rs, const WeylGroupTable& table, const CorootVector& lambda,
                                  std::int64_t k) {
  detail::require_k(k);
  const auto b = betti_sequence(rs, table, k * lambda);
  const Rational scale = detail::k_power(k, rs.rank);
  std::map<Rational, Rational> masses;
  for (std::size_t i = 0; i < b.coefficients.size(); ++i)
    masses[Rational(static_cast<long>(i)) / k] += Rational(b.coefficients[i]) / scale;
  return DiscreteMeasure::from_map(masses);
}

namespace detail {

inline DiscreteMeasure lattice_measure(const RootSystem& rs, const CorootVector& lambda, std::int64_t k,
                                       bool strongly_dominant_only) {
  require_k(k);
  const Rational scale = Rational(weyl_group_order(rs)) / k_power(k, rs.rank);
  std::map<Rational, Rational> masses;
  for (const auto& p : enumerate_dominant_below(rs, k * lambda)) {
    if (strongly_dominant_only && p.wall_set != 0) continue;
    masses[Rational(p.height) / k] += scale;
  }
  return DiscreteMeasure::from_map(masses);
}

}  // namespace detail

/// m_k^lat = |W_f| k^{-r} sum_i b_i^{k lambda} delta_{i/k}.
inline DiscreteMeasure measure_mk_lat(const RootSystem& rs, const CorootVector& lambda, std::int64_t k) {
  return detail::lattice_measure(rs, lambda, k, false);
}

/// As measure_mk_lat, counting strongly dominant points only.
inline DiscreteMeasure measure_mk_lat_plus(const RootSystem& rs, const CorootVector& lambda, std::int64_t k) {
  return detail::lattice_measure(rs, lambda, k, true);
}

/// `count` equispaced heights (2j+1)·top/(2·count), each nudged off the atom
/// grids (1/k)Z for k in `ks`.
inline RatVec default_z_grid(const Rational& top, const std::vector<std::int64_t>& ks, std::size_t count = 11) {
  RatVec zs;
  const Rational step = top / Rational(static_cast<long>(2 * count));
  for (std::size_t j = 0; j < count; ++j) {
    Rational z = step * static_cast<long>(2 * j + 1);
    for (int tries = 0; tries < 64; ++tries) {
      bool collides = false;
      for (auto k : ks)
        if (is_integer(z * k)) collides = true;
      if (!collides) break;
      z += step / 101;
    }
    zs.push_back(z);
  }
  return zs;
}

struct ConvergenceRow {
  std::int64_t k = 0;
  Rational z;
  std::optional<Rational> volume;  // F(z); absent when P^lambda is degenerate
  Rational cdf_mk, cdf_mk_lat, cdf_mk_lat_plus;
  std::optional<Rational> err_mk, err_mk_lat, err_mk_lat_plus;
  bool sandwich_ok = false;
};

inline Rational abs_diff(const Rational& a, const Rational& b) { return a > b ? a - b : b - a; }

/// m_{k,+}^lat([0,z]) <= m_k([0,z]) <= m_k^lat([0, z + l/k]) with l = |Phi^+|.
inline bool measure_sandwich(const DiscreteMeasure& mk, const DiscreteMeasure& lat, const DiscreteMeasure& lat_plus,
                             const Rational& z, std::int64_t k, std::size_t num_positive_roots) {
  const Rational mid = cdf(mk, z);
  const Rational upper = cdf(lat, z + Rational(static_cast<long>(num_positive_roots)) / k);
  return cdf(lat_plus, z) <= mid && mid <= upper;
}

/// One row per (k, z), k-major.
inline std::vector<ConvergenceRow> convergence_report(const RootSystem& rs, const WeylGroupTable& table,
                                                      const CorootVector& lambda, const std::vector<std::int64_t>& ks,
                                                      const RatVec& zs) {
  require_dominant(rs, lambda);
  std::optional<VolumeFunction> vf;
  if (dominant_polytope(rs, lambda).dim == rs.rank) vf = truncated_volume_function(rs, lambda);
  std::vector<ConvergenceRow> rows;
  for (auto k : ks) {
    const auto mk = measure_mk(rs, table, lambda, k);
    const auto lat = measure_mk_lat(rs, lambda, k);
    const auto plus = measure_mk_lat_plus(rs, lambda, k);
    for (const auto& z : zs) {
      ConvergenceRow row;
      row.k = k;
      row.z = z;
      row.cdf_mk = cdf(mk, z);
      row.cdf_mk_lat = cdf(lat, z);
      row.cdf_mk_lat_plus = cdf(plus, z);
      if (vf) {
        const Rational clamped = z < 0 ? Rational(0) : (z > vf->top() ? vf->top() : z);
        row.volume = (*vf)(clamped);
        row.err_mk = abs_diff(row.cdf_mk, *row.volume);
        row.err_mk_lat = abs_diff(row.cdf_mk_lat, *row.volume);
        row.err_mk_lat_plus = abs_diff(row.cdf_mk_lat_plus, *row.volume);
      }
      row.sandwich_ok = measure_sandwich(mk, lat, plus, z, k, rs.num_positive_roots());
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

/// Errors over doubling k: from the second term on, no term exceeds `slack`
/// times any earlier term.
inline bool decreasing_within_slack(const RatVec& errors, const Rational& slack = 2) {
  for (std::size_t i = 1; i < errors.size(); ++i)
    for (std::size_t j = i + 1; j < errors.size(); ++j)
      if (errors[j] > slack * errors[i]) return false;
  return true;
}

}  // namespace affbetti
