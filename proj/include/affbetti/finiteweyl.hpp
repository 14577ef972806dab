#pragma once

// The finite Weyl group W_f: full enumeration with lengths and left descent
// sets, and the Poincare polynomials of its parabolic quotients ^I W_f.

#include "affbetti/laurent.hpp"
#include "affbetti/rootsys.hpp"

#include <algorithm>
#include <cstdint>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

namespace affbetti {

using SubsetMask = std::uint32_t;

struct FiniteWeylElement {
  IntMatrix matrix;  // action on coroot coordinates; column j is w(a_j^v)
  std::int64_t length = 0;
};

/// Simple reflection s_i acting on coroot coordinates:
/// s_i(a_j^v) = a_j^v - (a_j^v | a_i) a_i^v.
inline IntMatrix simple_reflection_matrix(const RootSystem& rs, std::size_t i) {
  IntMatrix s(rs.rank, IntVec(rs.rank, 0));
  for (std::size_t k = 0; k < rs.rank; ++k) s[k][k] = 1;
  for (std::size_t j = 0; j < rs.rank; ++j) s[i][j] -= rs.cartan[j][i];
  return s;
}

namespace detail {

struct IntVecHash {
  std::size_t operator()(const IntVec& v) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto x : v) h = (h ^ static_cast<std::size_t>(x)) * 0x100000001b3ULL;
    return h;
  }
};

inline IntVec two_rho_vee(const RootSystem& rs) {
  IntVec v(rs.rank);
  for (std::size_t i = 0; i < rs.rank; ++i)
    v[i] = integer_value(Rational(rs.rho_coroot[i] * 2));
  return v;
}

}  // namespace detail

class WeylGroupTable {
 public:
  static constexpr std::size_t kDefaultCap = 10'000'000;

  WeylGroupTable(const RootSystem& rs, std::size_t cap = kDefaultCap);

  std::size_t rank() const { return rank_; }
  std::size_t size() const { return lengths_.size(); }
  std::int64_t longest_length() const { return longest_length_; }
  const LaurentPolynomial& poincare() const { return poincare_; }

  std::int64_t length(std::size_t w) const { return lengths_[w]; }
  /// Bit i set iff s_{i+1} w < w.
  SubsetMask left_descents(std::size_t w) const { return left_descents_[w]; }
  /// Index of s_{i+1} w.
  std::size_t left_multiply(std::size_t i, std::size_t w) const { return left_mult_[i * size() + w]; }

  FiniteWeylElement element(std::size_t w) const {
    FiniteWeylElement e;
    e.length = lengths_[w];
    e.matrix.assign(rank_, IntVec(rank_));
    const std::int8_t* m = &matrices_[w * rank_ * rank_];
    for (std::size_t i = 0; i < rank_; ++i)
      for (std::size_t j = 0; j < rank_; ++j) e.matrix[i][j] = m[i * rank_ + j];
    return e;
  }

  /// (w x) for x in coroot coordinates.
  IntVec apply(std::size_t w, const IntVec& x) const {
    IntVec out(rank_, 0);
    const std::int8_t* m = &matrices_[w * rank_ * rank_];
    for (std::size_t i = 0; i < rank_; ++i)
      for (std::size_t j = 0; j < rank_; ++j) out[i] += m[i * rank_ + j] * x[j];
    return out;
  }

  /// Index of the element mapping 2 rho^v to `image`; npos if none.
  std::size_t index_of_regular_image(const IntVec& image) const {
    auto it = index_.find(image);
    return it == index_.end() ? npos : it->second;
  }
  std::size_t index_of(const IntMatrix& matrix) const {
    IntVec img(rank_, 0);
    for (std::size_t i = 0; i < rank_; ++i)
      for (std::size_t j = 0; j < rank_; ++j) img[i] += matrix[i][j] * two_rho_vee_[j];
    std::size_t k = index_of_regular_image(img);
    if (k != npos && element(k).matrix != matrix) return npos;
    return k;
  }

  /// ^I pi_f(q) = sum over w with s_i w > w for all i in I of q^{l(w)}.
  /// Bit i of `subset` stands for simple reflection s_{i+1}. Cached, thread safe.
  const LaurentPolynomial& quotient_poincare(SubsetMask subset) const {
    if (subset >= (SubsetMask{1} << rank_))
      throw std::invalid_argument("quotient_poincare: subset references an index beyond rank " + std::to_string(rank_));
    auto& slot = cache_->slots[subset];
    std::call_once(slot.once, [&] {
      std::vector<BigInt> counts(static_cast<std::size_t>(longest_length_) + 1, BigInt(0));
      for (std::size_t w = 0; w < size(); ++w)
        if ((left_descents_[w] & subset) == 0) counts[static_cast<std::size_t>(lengths_[w])] += 1;
      slot.value = LaurentPolynomial::from_dense(counts);
    });
    return slot.value;
  }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  struct Slot {
    std::once_flag once;
    LaurentPolynomial value;
  };
  struct Cache {
    explicit Cache(std::size_t n) : slots(n) {}
    std::vector<Slot> slots;
  };

  std::size_t rank_ = 0;
  IntVec two_rho_vee_;
  std::vector<std::int8_t> matrices_;
  std::vector<std::int64_t> lengths_;
  std::vector<SubsetMask> left_descents_;
  std::vector<std::uint32_t> left_mult_;
  std::unordered_map<IntVec, std::uint32_t, detail::IntVecHash> index_;
  std::int64_t longest_length_ = 0;
  LaurentPolynomial poincare_;
  std::shared_ptr<Cache> cache_;
};

/// Exponents of W_f read off from root heights: the partition of heights of
/// positive roots is dual to the exponent partition.
inline std::vector<std::int64_t> weyl_exponents(const RootSystem& rs) {
  std::int64_t max_h = 0;
  std::vector<std::int64_t> count_at_height(1, 0);
  for (const auto& beta : rs.positive_roots) {
    std::int64_t h = detail::sum_of(beta);
    if (h > max_h) {
      max_h = h;
      count_at_height.resize(static_cast<std::size_t>(h) + 1, 0);
    }
    ++count_at_height[static_cast<std::size_t>(h)];
  }
  std::vector<std::int64_t> exps;
  for (std::size_t j = 0; j < rs.rank; ++j) {
    // number of heights k with count_at_height[k] > j
    std::int64_t e = 0;
    for (std::size_t k = 1; k < count_at_height.size(); ++k)
      if (count_at_height[k] > static_cast<std::int64_t>(j)) ++e;
    exps.push_back(e);
  }
  std::sort(exps.begin(), exps.end());
  return exps;
}

inline BigInt weyl_group_order(const RootSystem& rs) {
  BigInt order = 1;
  for (auto e : weyl_exponents(rs)) order *= (e + 1);
  return order;
}

/// pi_f(q) = prod_i (1 + q + ... + q^{e_i}).
inline LaurentPolynomial poincare_from_exponents(const RootSystem& rs) {
  LaurentPolynomial p(1);
  for (auto e : weyl_exponents(rs)) p = p * LaurentPolynomial::from_dense(std::vector<std::int64_t>(e + 1, 1));
  return p;
}

inline WeylGroupTable::WeylGroupTable(const RootSystem& rs, std::size_t cap) : rank_(rs.rank) {
  const BigInt expected = weyl_group_order(rs);
  if (expected > cap)
    throw BudgetExceeded("Weyl group " + rs.name() + " has order " + expected.str() + ", above the enumeration cap " +
                         std::to_string(cap));
  const std::size_t r = rank_;
  two_rho_vee_ = detail::two_rho_vee(rs);
  std::vector<IntMatrix> gens;
  for (std::size_t i = 0; i < r; ++i) gens.push_back(simple_reflection_matrix(rs, i));

  auto push = [&](const IntMatrix& m, std::int64_t len) {
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) matrices_.push_back(static_cast<std::int8_t>(m[i][j]));
    lengths_.push_back(len);
  };
  auto image_of = [&](const IntMatrix& m) {
    IntVec v(r, 0);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) v[i] += m[i][j] * two_rho_vee_[j];
    return v;
  };
  auto load = [&](std::size_t w) {
    IntMatrix m(r, IntVec(r));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) m[i][j] = matrices_[w * r * r + i * r + j];
    return m;
  };

  IntMatrix id(r, IntVec(r, 0));
  for (std::size_t i = 0; i < r; ++i) id[i][i] = 1;
  push(id, 0);
  index_.emplace(image_of(id), 0);
  std::vector<std::vector<std::uint32_t>> mult(r);
  for (std::size_t w = 0; w < lengths_.size(); ++w) {
    const IntMatrix m = load(w);
    for (std::size_t i = 0; i < r; ++i) {
      IntMatrix sm(r, IntVec(r, 0));
      for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < r; ++b)
          for (std::size_t c = 0; c < r; ++c) sm[a][b] += gens[i][a][c] * m[c][b];
      IntVec key = image_of(sm);
      auto [it, inserted] = index_.try_emplace(std::move(key), static_cast<std::uint32_t>(lengths_.size()));
      if (inserted) push(sm, lengths_[w] + 1);
      mult[i].push_back(it->second);
    }
  }
  if (BigInt(lengths_.size()) != expected) throw std::logic_error("Weyl group enumeration disagrees with the order formula");

  left_mult_.reserve(r * size());
  for (std::size_t i = 0; i < r; ++i) left_mult_.insert(left_mult_.end(), mult[i].begin(), mult[i].end());

  left_descents_.assign(size(), 0);
  for (std::size_t w = 0; w < size(); ++w)
    for (std::size_t i = 0; i < r; ++i)
      if (lengths_[left_multiply(i, w)] < lengths_[w]) left_descents_[w] |= SubsetMask{1} << i;

  longest_length_ = *std::max_element(lengths_.begin(), lengths_.end());
  std::vector<BigInt> counts(static_cast<std::size_t>(longest_length_) + 1, BigInt(0));
  for (auto l : lengths_) counts[static_cast<std::size_t>(l)] += 1;
  poincare_ = LaurentPolynomial::from_dense(counts);
  cache_ = std::make_shared<Cache>(std::size_t{1} << r);
}

/// Converts 1-based simple-reflection indices to a subset mask.
inline SubsetMask subset_mask(std::size_t rank, const std::vector<std::size_t>& indices) {
  SubsetMask m = 0;
  for (auto i : indices) {
    if (i < 1 || i > rank) throw std::invalid_argument("simple reflection index " + std::to_string(i) + " out of range");
    m |= SubsetMask{1} << (i - 1);
  }
  return m;
}

inline WeylGroupTable enumerate_weyl_group(const RootSystem& rs, std::size_t cap = WeylGroupTable::kDefaultCap) {
  return WeylGroupTable(rs, cap);
}

inline const LaurentPolynomial& quotient_poincare(const WeylGroupTable& table, SubsetMask subset) {
  return table.quotient_poincare(subset);
}

}  // namespace affbetti
