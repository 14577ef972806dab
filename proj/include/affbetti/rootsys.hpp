#pragma once

// Irreducible crystallographic root systems with an exact bilinear form.
//
// Lattice points live in the simple-coroot basis, roots in the simple-root
// basis. The pairing between the two is integral: (a_i^v | a_j) = cartan[i][j].

#include "affbetti/numeric.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

namespace affbetti {

enum class CartanType { A, B, C, D, E, F, G };

inline char type_letter(CartanType t) { return static_cast<char>('A' + static_cast<int>(t)); }

/// Integer point of the coroot lattice, mu = sum_i coords[i] * a_i^v.
struct CorootVector {
  IntVec coords;

  CorootVector() = default;
  explicit CorootVector(IntVec c) : coords(std::move(c)) {}
  CorootVector(std::initializer_list<std::int64_t> c) : coords(c) {}

  std::size_t rank() const { return coords.size(); }
  std::int64_t operator[](std::size_t i) const { return coords[i]; }
  std::int64_t& operator[](std::size_t i) { return coords[i]; }

  static CorootVector zero(std::size_t r) { return CorootVector(IntVec(r, 0)); }

  friend bool operator==(const CorootVector&, const CorootVector&) = default;
  friend auto operator<=>(const CorootVector&, const CorootVector&) = default;

  friend CorootVector operator+(CorootVector a, const CorootVector& b) {
    for (std::size_t i = 0; i < a.coords.size(); ++i) a.coords[i] += b.coords[i];
    return a;
  }
  friend CorootVector operator-(CorootVector a, const CorootVector& b) {
    for (std::size_t i = 0; i < a.coords.size(); ++i) a.coords[i] -= b.coords[i];
    return a;
  }
  friend CorootVector operator*(std::int64_t k, CorootVector a) {
    for (auto& x : a.coords) x *= k;
    return a;
  }
};

struct CorootVectorHash {
  std::size_t operator()(const CorootVector& v) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (auto x : v.coords) h ^= std::hash<std::int64_t>{}(x) + 0x9e3779b9 + (h << 6) + (h >> 2);
    return h;
  }
};

inline std::string to_string(const CorootVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.coords.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v.coords[i]);
  }
  return s + ")";
}

struct RootSystem {
  CartanType type{};
  std::size_t rank = 0;
  IntMatrix cartan;                  // cartan[i][j] = 2(a_i|a_j)/(a_i|a_i)
  RatVec symmetrizers;               // (a_i|a_i)/2, long roots have 1
  std::vector<IntVec> positive_roots;    // simple-root coordinates, sorted by height
  std::vector<IntVec> positive_coroots;  // coroot of positive_roots[k], coroot coordinates
  std::size_t highest_root = 0;
  RatMatrix gram_coroot;             // (a_i^v | a_j^v)
  IntVec rho_pairings;               // (rho | a_i^v)
  RatVec rho;                        // root coordinates
  RatVec rho_coroot;                 // rho^v, coroot coordinates
  RatMatrix fundamental_weights;     // row i: omega_i in root coordinates
  RatMatrix fundamental_coweights;   // row i: omega_i^v in coroot coordinates

  std::string name() const { return std::string(1, type_letter(type)) + std::to_string(rank); }
  std::size_t num_positive_roots() const { return positive_roots.size(); }
};

namespace detail {

inline IntMatrix bourbaki_cartan(CartanType type, std::size_t r) {
  IntMatrix a(r, IntVec(r, 0));
  for (std::size_t i = 0; i < r; ++i) a[i][i] = 2;
  auto link = [&](std::size_t i, std::size_t j) {  // 1-based, simply laced edge
    a[i - 1][j - 1] = -1;
    a[j - 1][i - 1] = -1;
  };
  switch (type) {
    case CartanType::A:
      for (std::size_t i = 1; i < r; ++i) link(i, i + 1);
      break;
    case CartanType::B:
      for (std::size_t i = 1; i < r; ++i) link(i, i + 1);
      a[r - 1][r - 2] = -2;  // a_r short
      break;
    case CartanType::C:
      for (std::size_t i = 1; i < r; ++i) link(i, i + 1);
      a[r - 2][r - 1] = -2;  // a_r long
      break;
    case CartanType::D:
      for (std::size_t i = 1; i + 1 < r; ++i) link(i, i + 1);
      link(r - 2, r);
      break;
    case CartanType::E:
      link(1, 3);
      link(2, 4);
      for (std::size_t i = 3; i < r; ++i) link(i, i + 1);
      break;
    case CartanType::F:
      link(1, 2);
      link(3, 4);
      a[1][2] = -1;
      a[2][1] = -2;
      break;
    case CartanType::G:
      a[0][1] = -3;
      a[1][0] = -1;
      break;
  }
  return a;
}

// Long roots normalized to (a|a) = 2.
inline RatVec bourbaki_symmetrizers(CartanType type, std::size_t r) {
  RatVec d(r, Rational(1));
  switch (type) {
    case CartanType::B: d[r - 1] = make_rational(1, 2); break;
    case CartanType::C:
      for (std::size_t i = 0; i + 1 < r; ++i) d[i] = make_rational(1, 2);
      break;
    case CartanType::F: d[2] = d[3] = make_rational(1, 2); break;
    case CartanType::G: d[0] = make_rational(1, 3); break;
    default: break;
  }
  return d;
}

inline std::int64_t sum_of(const IntVec& v) { return std::accumulate(v.begin(), v.end(), std::int64_t{0}); }

// Positive roots by alpha-string extension: beta + a_i is a root iff
// q - <beta, a_i^v> > 0, where q is the length of the downward a_i-string.
inline std::vector<IntVec> generate_positive_roots(const IntMatrix& a) {
  const std::size_t r = a.size();
  std::vector<IntVec> roots;
  for (std::size_t i = 0; i < r; ++i) {
    IntVec e(r, 0);
    e[i] = 1;
    roots.push_back(e);
  }
  auto contains = [&](const IntVec& v) { return std::find(roots.begin(), roots.end(), v) != roots.end(); };
  std::size_t level_begin = 0;
  while (level_begin < roots.size()) {
    const std::size_t level_end = roots.size();
    for (std::size_t k = level_begin; k < level_end; ++k) {
      const IntVec beta = roots[k];
      for (std::size_t i = 0; i < r; ++i) {
        std::int64_t q = 0;
        IntVec down = beta;
        while (true) {
          down[i] -= 1;
          if (down[i] < 0 || !contains(down)) break;
          ++q;
        }
        std::int64_t pairing = 0;  // <beta, a_i^v>
        for (std::size_t j = 0; j < r; ++j) pairing += beta[j] * a[i][j];
        if (q - pairing > 0) {
          IntVec up = beta;
          up[i] += 1;
          if (!contains(up)) roots.push_back(up);
        }
      }
    }
    level_begin = level_end;
  }
  std::stable_sort(roots.begin(), roots.end(), [](const IntVec& x, const IntVec& y) {
    auto hx = sum_of(x), hy = sum_of(y);
    return hx != hy ? hx < hy : y < x;  // height-1 entries come out as a_1..a_r
  });
  return roots;
}

inline void require(bool ok, const std::string& what) {
  if (!ok) throw std::logic_error("root system invariant violated: " + what);
}

}  // namespace detail

inline void check_admissible(CartanType type, std::size_t rank) {
  const std::string label = std::string(1, type_letter(type)) + std::to_string(rank);
  bool ok = false;
  switch (type) {
    case CartanType::A: ok = rank >= 1; break;
    case CartanType::B:
    case CartanType::C: ok = rank >= 2; break;
    case CartanType::D:
      if (rank == 3) throw std::invalid_argument("D3 is not supported; it is isomorphic to A3, use A3 instead");
      ok = rank >= 4;
      break;
    case CartanType::E: ok = rank >= 6 && rank <= 8; break;
    case CartanType::F: ok = rank == 4; break;
    case CartanType::G: ok = rank == 2; break;
  }
  if (!ok) throw std::invalid_argument("inadmissible Cartan type " + label);
}

/// (x | y) for x in coroot coordinates and y in root coordinates.
inline Rational pairing(const RootSystem& rs, const RatVec& x, const RatVec& y) {
  if (x.size() != rs.rank || y.size() != rs.rank)
    throw std::invalid_argument("pairing: expected vectors of length " + std::to_string(rs.rank));
  Rational s = 0;
  for (std::size_t i = 0; i < rs.rank; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < rs.rank; ++j) s += x[i] * rs.cartan[i][j] * y[j];
  }
  return s;
}

inline std::int64_t pairing(const RootSystem& rs, const IntVec& x, const IntVec& y) {
  if (x.size() != rs.rank || y.size() != rs.rank)
    throw std::invalid_argument("pairing: expected vectors of length " + std::to_string(rs.rank));
  std::int64_t s = 0;
  for (std::size_t i = 0; i < rs.rank; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < rs.rank; ++j) s += x[i] * rs.cartan[i][j] * y[j];
  }
  return s;
}

/// ((mu|a_1), ..., (mu|a_r)); mu is dominant iff every entry is >= 0.
inline IntVec dominance_coords(const RootSystem& rs, const CorootVector& mu) {
  IntVec out(rs.rank, 0);
  for (std::size_t j = 0; j < rs.rank; ++j)
    for (std::size_t i = 0; i < rs.rank; ++i) out[j] += mu.coords[i] * rs.cartan[i][j];
  return out;
}

inline bool is_dominant(const RootSystem& rs, const CorootVector& mu) {
  auto d = dominance_coords(rs, mu);
  return std::all_of(d.begin(), d.end(), [](auto x) { return x >= 0; });
}

inline bool is_strongly_dominant(const RootSystem& rs, const CorootVector& mu) {
  auto d = dominance_coords(rs, mu);
  return std::all_of(d.begin(), d.end(), [](auto x) { return x > 0; });
}

/// 2(rho|mu); equals the length of t_mu when mu is dominant.
inline std::int64_t height(const RootSystem& rs, const CorootVector& mu) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < rs.rank; ++i) s += mu.coords[i] * rs.rho_pairings[i];
  return 2 * s;
}

inline RootSystem build_root_system(CartanType type, std::size_t rank) {
  check_admissible(type, rank);
  RootSystem rs;
  rs.type = type;
  rs.rank = rank;
  rs.cartan = detail::bourbaki_cartan(type, rank);
  rs.symmetrizers = detail::bourbaki_symmetrizers(type, rank);
  const std::size_t r = rank;
  const auto& a = rs.cartan;
  const auto& d = rs.symmetrizers;

  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      detail::require(d[i] * a[i][j] == d[j] * a[j][i], "symmetrizers do not symmetrize the Cartan matrix");

  rs.positive_roots = detail::generate_positive_roots(a);
  // Closure under simple reflections: s_i(beta) = beta - <beta, a_i^v> a_i.
  for (const auto& beta : rs.positive_roots) {
    for (std::size_t i = 0; i < r; ++i) {
      IntVec img = beta;
      std::int64_t p = 0;
      for (std::size_t j = 0; j < r; ++j) p += beta[j] * a[i][j];
      img[i] -= p;
      IntVec e(r, 0);
      e[i] = 1;
      if (beta == e) continue;
      detail::require(std::find(rs.positive_roots.begin(), rs.positive_roots.end(), img) != rs.positive_roots.end(),
                      "positive roots not closed under simple reflections");
    }
  }
  rs.highest_root = rs.positive_roots.size() - 1;
  for (std::size_t k = 0; k + 1 < rs.positive_roots.size(); ++k)
    detail::require(detail::sum_of(rs.positive_roots[k]) < detail::sum_of(rs.positive_roots.back()),
                    "highest root is not unique");

  // Coroots: a^v = sum_j c_j d_j / d_a  a_j^v with d_a = (a|a)/2.
  for (const auto& beta : rs.positive_roots) {
    Rational norm = 0;  // (beta|beta)/2
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) norm += Rational(beta[i] * beta[j]) * d[i] * a[i][j];
    norm /= 2;
    IntVec co(r);
    for (std::size_t j = 0; j < r; ++j) {
      Rational c = Rational(beta[j]) * d[j] / norm;
      detail::require(is_integer(c), "non-integral coroot");
      co[j] = integer_value(c);
    }
    rs.positive_coroots.push_back(co);
  }

  rs.gram_coroot.assign(r, RatVec(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) rs.gram_coroot[i][j] = Rational(a[i][j]) / d[j];

  rs.rho.assign(r, Rational(0));
  rs.rho_coroot.assign(r, Rational(0));
  for (std::size_t k = 0; k < rs.positive_roots.size(); ++k)
    for (std::size_t j = 0; j < r; ++j) {
      rs.rho[j] += Rational(rs.positive_roots[k][j]) / 2;
      rs.rho_coroot[j] += Rational(rs.positive_coroots[k][j]) / 2;
    }

  rs.rho_pairings.assign(r, 0);
  for (std::size_t i = 0; i < r; ++i) {
    RatVec e(r, Rational(0));
    e[i] = 1;
    Rational rp = pairing(rs, e, rs.rho);
    Rational rvp = pairing(rs, rs.rho_coroot, RatVec(e));
    detail::require(rp == 1, "(rho|a_i^v) != 1");
    detail::require(rvp == 1, "(rho^v|a_i) != 1");
    rs.rho_pairings[i] = 1;
  }

  // omega_i = A^{-1} e_i in root coordinates; omega_i^v = row i of A^{-1}.
  RatMatrix inv = linalg::inverse(to_rational(a));
  rs.fundamental_weights.assign(r, RatVec(r));
  rs.fundamental_coweights.assign(r, RatVec(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      rs.fundamental_weights[i][j] = inv[j][i];
      rs.fundamental_coweights[i][j] = inv[i][j];
    }

  // Positive definiteness via leading principal minors.
  for (std::size_t n = 1; n <= r; ++n) {
    RatMatrix minor(n, RatVec(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) minor[i][j] = rs.gram_coroot[i][j];
    detail::require(linalg::determinant(minor) > 0, "coroot Gram matrix not positive definite");
  }
  return rs;
}

/// Parses labels such as "A4", "c3", "G2".
inline std::pair<CartanType, std::size_t> parse_cartan_label(std::string_view label) {
  auto fail = [&] { return std::invalid_argument("cannot parse Cartan type '" + std::string(label) + "'"); };
  if (label.size() < 2) throw fail();
  char c = static_cast<char>(std::toupper(static_cast<unsigned char>(label[0])));
  if (c < 'A' || c > 'G') throw fail();
  std::size_t rank = 0;
  for (std::size_t i = 1; i < label.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(label[i]))) throw fail();
    rank = rank * 10 + static_cast<std::size_t>(label[i] - '0');
    if (rank > 1000) throw fail();
  }
  return {static_cast<CartanType>(c - 'A'), rank};
}

inline RootSystem build_root_system(std::string_view label) {
  auto [t, r] = parse_cartan_label(label);
  return build_root_system(t, r);
}

}  // namespace affbetti
