#pragma once

// Brute-force Bruhat intervals [e, t_lambda] in the affine Weyl group,
// computed from alcove geometry alone:
//
//  * l(w) is the number of hyperplanes H_{a,k} separating A_+ and A_w,
//  * s_{a,k} w < w iff H_{a,k} separates A_+ and A_w,
//  * w is a minimal W_f-coset representative iff A_w lies in C_+.
//
// Alcoves are tracked through one interior sample point u_0 = eps·rho^v of
// A_+, so every comparison is an exact integer comparison.

#include "affbetti/domlattice.hpp"
#include "affbetti/finiteweyl.hpp"
#include "affbetti/rootsys.hpp"

#include <map>
#include <thread>
#include <unordered_set>
#include <vector>

namespace affbetti {

/// t_mu · w, acting by x -> w(x) + mu. `finite` indexes a WeylGroupTable.
struct AffineElement {
  CorootVector translation;
  std::size_t finite = 0;

  friend bool operator==(const AffineElement&, const AffineElement&) = default;
  friend auto operator<=>(const AffineElement&, const AffineElement&) = default;
};

struct AffineElementHash {
  std::size_t operator()(const AffineElement& e) const noexcept {
    return CorootVectorHash{}(e.translation) * 31 + e.finite;
  }
};

/// A separating hyperplane H_{a,k}; `root` indexes RootSystem::positive_roots.
struct Hyperplane {
  std::size_t root = 0;
  std::int64_t level = 0;
  friend bool operator==(const Hyperplane&, const Hyperplane&) = default;
};

class AffineOracle {
 public:
  static constexpr std::int64_t kDefaultBudget = 40;

  /// Uses eps = 1/(2((rho^v|a_0) + 1)).
  AffineOracle(const RootSystem& rs, const WeylGroupTable& table)
      : AffineOracle(rs, table, 1, 2 * (detail::sum_of(rs.positive_roots[rs.highest_root]) + 1)) {}

  /// Sample point eps·rho^v with eps = eps_num / eps_den.
  AffineOracle(const RootSystem& rs, const WeylGroupTable& table, std::int64_t eps_num, std::int64_t eps_den);

  const RootSystem& root_system() const { return *rs_; }
  const WeylGroupTable& table() const { return *table_; }

  AffineElement identity() const { return {CorootVector::zero(rs_->rank), 0}; }
  AffineElement translation(const CorootVector& mu) const { return {mu, 0}; }
  /// The affine reflection s_{a,k} = t_{k a^v} s_a.
  AffineElement reflection(std::size_t root, std::int64_t level) const {
    return apply_reflection(root, level, identity());
  }
  /// s_0 = s_{a_0, 1}.
  AffineElement affine_simple_reflection() const { return reflection(rs_->highest_root, 1); }
  /// Finite simple reflection s_{i+1}.
  AffineElement simple_reflection(std::size_t i) const { return {CorootVector::zero(rs_->rank), table_->left_multiply(i, 0)}; }

  /// s_{a,k} · e.
  AffineElement apply_reflection(std::size_t root, std::int64_t level, const AffineElement& e) const {
    const auto& co = rs_->positive_coroots[root];
    const std::int64_t m = translation_pairing(e.translation, root);
    AffineElement out;
    out.translation = e.translation;
    for (std::size_t i = 0; i < rs_->rank; ++i) out.translation[i] += (level - m) * co[i];
    out.finite = reflection_mult_[root * table_->size() + e.finite];
    return out;
  }

  /// (u_e | a) as numerator over denominator(); u_e = w(u_0) + mu.
  std::int64_t sample_pairing(const AffineElement& e, std::size_t root) const {
    return eps_num_ * rho_pairing_[e.finite * num_roots_ + root] + denom_ * translation_pairing(e.translation, root);
  }
  std::int64_t denominator() const { return denom_; }

  std::vector<Hyperplane> separating_hyperplanes(const AffineElement& e) const {
    std::vector<Hyperplane> out;
    for (std::size_t k = 0; k < num_roots_; ++k) {
      const std::int64_t a = floor_div(base_[k], denom_);
      const std::int64_t b = floor_div(sample_pairing(e, k), denom_);
      for (std::int64_t lvl = std::min(a, b) + 1; lvl <= std::max(a, b); ++lvl) out.push_back({k, lvl});
    }
    return out;
  }

  std::int64_t length(const AffineElement& e) const {
    std::int64_t len = 0;
    for (std::size_t k = 0; k < num_roots_; ++k) {
      const std::int64_t a = floor_div(base_[k], denom_);
      const std::int64_t b = floor_div(sample_pairing(e, k), denom_);
      len += a > b ? a - b : b - a;
    }
    return len;
  }

  /// All s_{a,k} e with H_{a,k} separating and length one less.
  std::vector<AffineElement> coatoms(const AffineElement& e) const {
    const std::int64_t len = length(e);
    std::vector<AffineElement> out;
    for (const auto& h : separating_hyperplanes(e)) {
      AffineElement c = apply_reflection(h.root, h.level, e);
      if (length(c) == len - 1) out.push_back(std::move(c));
    }
    return out;
  }

  /// A_e ⊂ C_+: (u_e|a_i) > 0 for every simple root.
  bool is_minimal_coset_rep(const AffineElement& e) const {
    for (std::size_t i = 0; i < rs_->rank; ++i)
      if (sample_pairing(e, i) <= 0) return false;
    return true;
  }

  /// [e, t_lambda] in the full affine Weyl group, grouped by length
  /// (levels[i] holds the elements of length i).
  std::vector<std::vector<AffineElement>> lower_interval(const CorootVector& lambda, std::int64_t budget = kDefaultBudget,
                                                         unsigned jobs = 1) const;

  /// Elements of [e, t_lambda]^f, sorted.
  std::vector<AffineElement> parabolic_interval(const CorootVector& lambda, std::int64_t budget = kDefaultBudget,
                                                unsigned jobs = 1) const {
    std::vector<AffineElement> out;
    for (const auto& level : lower_interval(lambda, budget, jobs))
      for (const auto& e : level)
        if (is_minimal_coset_rep(e)) out.push_back(e);
    std::sort(out.begin(), out.end());
    return out;
  }

  BettiSequence betti_oracle(const CorootVector& lambda, std::int64_t budget = kDefaultBudget, unsigned jobs = 1) const {
    require_dominant(*rs_, lambda);
    BettiSequence b;
    b.lambda = lambda;
    b.length_top = height(*rs_, lambda);
    b.provenance = Provenance::oracle;
    b.coefficients.assign(static_cast<std::size_t>(b.length_top) + 1, BigInt(0));
    auto levels = lower_interval(lambda, budget, jobs);
    for (std::size_t l = 0; l < levels.size(); ++l)
      for (const auto& e : levels[l])
        if (is_minimal_coset_rep(e)) b.coefficients[l] += 1;
    return b;
  }

 private:
  static std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
  }

  std::int64_t translation_pairing(const CorootVector& mu, std::size_t root) const {
    std::int64_t s = 0;
    const std::int64_t* col = &root_columns_[root * rs_->rank];
    for (std::size_t i = 0; i < rs_->rank; ++i) s += mu.coords[i] * col[i];
    return s;
  }

  const RootSystem* rs_;
  const WeylGroupTable* table_;
  std::size_t num_roots_ = 0;
  std::int64_t eps_num_ = 1;
  std::int64_t denom_ = 1;                  // 2 * eps_den
  std::vector<std::int64_t> root_columns_;  // (a_i^v | beta_k)
  std::vector<std::int64_t> rho_pairing_;   // (w(2 rho^v) | beta_k)
  std::vector<std::int64_t> base_;          // numerator of (u_0 | beta_k)
  std::vector<std::uint32_t> reflection_mult_;  // index of s_{beta_k} w
};

inline AffineOracle::AffineOracle(const RootSystem& rs, const WeylGroupTable& table, std::int64_t eps_num,
                                  std::int64_t eps_den)
    : rs_(&rs), table_(&table), num_roots_(rs.positive_roots.size()), eps_num_(eps_num), denom_(2 * eps_den) {
  if (table.rank() != rs.rank) throw std::invalid_argument("AffineOracle: Weyl group table rank mismatch");
  if (eps_num <= 0 || eps_den <= 0) throw std::invalid_argument("AffineOracle: eps must be positive");
  const std::size_t r = rs.rank;
  root_columns_.resize(num_roots_ * r);
  for (std::size_t k = 0; k < num_roots_; ++k)
    for (std::size_t i = 0; i < r; ++i) {
      std::int64_t s = 0;
      for (std::size_t j = 0; j < r; ++j) s += rs.cartan[i][j] * rs.positive_roots[k][j];
      root_columns_[k * r + i] = s;
    }

  const IntVec two_rho_v = detail::two_rho_vee(rs);
  rho_pairing_.resize(table.size() * num_roots_);
  for (std::size_t w = 0; w < table.size(); ++w) {
    const IntVec img = table.apply(w, two_rho_v);
    for (std::size_t k = 0; k < num_roots_; ++k) rho_pairing_[w * num_roots_ + k] = translation_pairing(CorootVector(img), k);
  }

  base_.resize(num_roots_);
  for (std::size_t k = 0; k < num_roots_; ++k) {
    base_[k] = eps_num_ * rho_pairing_[k];
    if (base_[k] <= 0 || base_[k] >= denom_)
      throw std::invalid_argument("AffineOracle: eps·rho^v is not inside the fundamental alcove");
  }

  // Left multiplication by every reflection s_beta, as index permutations.
  reflection_mult_.resize(num_roots_ * table.size());
  for (std::size_t k = 0; k < num_roots_; ++k) {
    const auto& co = rs.positive_coroots[k];
    IntMatrix s(r, IntVec(r, 0));  // s_beta(x) = x - (x|beta) beta^v
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) s[i][j] = (i == j ? 1 : 0) - co[i] * root_columns_[k * r + j];
    for (std::size_t w = 0; w < table.size(); ++w) {
      IntVec img(r, 0);
      const IntVec wv = table.apply(w, two_rho_v);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) img[i] += s[i][j] * wv[j];
      const std::size_t idx = table.index_of_regular_image(img);
      if (idx == WeylGroupTable::npos) throw std::logic_error("AffineOracle: reflection image not in W_f");
      reflection_mult_[k * table.size() + w] = static_cast<std::uint32_t>(idx);
    }
  }
}

inline std::vector<std::vector<AffineElement>> AffineOracle::lower_interval(const CorootVector& lambda,
                                                                            std::int64_t budget, unsigned jobs) const {
  require_dominant(*rs_, lambda);
  const std::int64_t top = height(*rs_, lambda);
  if (top > budget)
    throw BudgetExceeded("oracle budget exceeded: l(t_lambda) = " + std::to_string(top) + " > " + std::to_string(budget));
  std::vector<std::vector<AffineElement>> levels(static_cast<std::size_t>(top) + 1);
  levels[static_cast<std::size_t>(top)].push_back(translation(lambda));

  for (std::int64_t l = top; l > 0; --l) {
    const auto& cur = levels[static_cast<std::size_t>(l)];
    std::unordered_set<AffineElement, AffineElementHash> next;
    if (jobs <= 1 || cur.size() < 64) {
      for (const auto& e : cur)
        for (auto& c : coatoms(e)) next.insert(std::move(c));
    } else {
      std::vector<std::vector<AffineElement>> partial(jobs);
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < jobs; ++t)
        pool.emplace_back([&, t] {
          for (std::size_t i = t; i < cur.size(); i += jobs)
            for (auto& c : coatoms(cur[i])) partial[t].push_back(std::move(c));
        });
      for (auto& th : pool) th.join();
      for (auto& part : partial)
        for (auto& c : part) next.insert(std::move(c));
    }
    auto& dst = levels[static_cast<std::size_t>(l - 1)];
    dst.assign(next.begin(), next.end());
    std::sort(dst.begin(), dst.end());
  }
  return levels;
}

}  // namespace affbetti
