#pragma once

// Unimodality / log-concavity predicates and the sweep over all dominant
// coroot-lattice lambda below a bound v (fundamental coweight coordinates).

#include "affbetti/domlattice.hpp"

#include <algorithm>
#include <atomic>
#include <span>
#include <thread>
#include <vector>

namespace affbetti {

/// True iff no strict descent is followed by a strict ascent.
template <typename T>
bool is_unimodal(std::span<const T> seq) {
  bool descended = false;
  for (std::size_t i = 1; i < seq.size(); ++i) {
    if (seq[i] < seq[i - 1]) descended = true;
    else if (seq[i] > seq[i - 1] && descended) return false;
  }
  return true;
}

/// a_{i-1} a_{i+1} <= a_i^2 at every interior index. Entries must be >= 0.
template <typename T>
bool is_log_concave(std::span<const T> seq) {
  for (const auto& x : seq)
    if (x < 0) throw std::invalid_argument("is_log_concave: negative entry");
  for (std::size_t i = 1; i + 1 < seq.size(); ++i) {
    BigInt lhs = BigInt(seq[i - 1]) * BigInt(seq[i + 1]);
    BigInt rhs = BigInt(seq[i]) * BigInt(seq[i]);
    if (lhs > rhs) return false;
  }
  return true;
}

template <typename T>
bool is_unimodal(const std::vector<T>& seq) { return is_unimodal(std::span<const T>(seq)); }
template <typename T>
bool is_log_concave(const std::vector<T>& seq) { return is_log_concave(std::span<const T>(seq)); }

/// Dominant coroot-lattice points with (lambda|a_i) <= v_i, in lexicographic
/// order of their coweight coordinates.
inline std::vector<CorootVector> enumerate_lambda_below(const RootSystem& rs, const IntVec& v) {
  if (v.size() != rs.rank) throw std::invalid_argument("bound vector has wrong length");
  for (auto x : v)
    if (x < 0) throw std::invalid_argument("bound vector must be non-negative");
  std::vector<CorootVector> out;
  IntVec c(rs.rank, 0);
  while (true) {
    bool integral = true;
    CorootVector lambda = CorootVector::zero(rs.rank);
    for (std::size_t j = 0; j < rs.rank && integral; ++j) {
      Rational x = 0;
      for (std::size_t i = 0; i < rs.rank; ++i) x += Rational(c[i]) * rs.fundamental_coweights[i][j];
      integral = is_integer(x);
      if (integral) lambda[j] = integer_value(x);
    }
    if (integral) out.push_back(std::move(lambda));
    std::size_t i = rs.rank;
    while (i > 0 && c[i - 1] == v[i - 1]) c[--i] = 0;
    if (i == 0) break;
    ++c[i - 1];
  }
  return out;
}

struct SweepRecord {
  CorootVector lambda;
  IntVec coweight;
  std::int64_t length_top = 0;
  bool unimodal = false;
  bool log_concave = false;
  BigInt interval_size;
  std::vector<BigInt> betti;
  std::string error;  // non-empty if this lambda failed
};

struct SweepReport {
  std::string type;
  IntVec bound;
  std::vector<SweepRecord> records;

  std::size_t count_all() const { return records.size(); }
  /// Excludes lambda = 0.
  std::size_t count_nonzero() const {
    std::size_t n = 0;
    for (const auto& r : records)
      if (std::any_of(r.lambda.coords.begin(), r.lambda.coords.end(), [](auto x) { return x != 0; })) ++n;
    return n;
  }
  /// Excludes every lambda on a wall of the dominant chamber.
  std::size_t count_strongly_dominant() const {
    std::size_t n = 0;
    for (const auto& r : records)
      if (std::all_of(r.coweight.begin(), r.coweight.end(), [](auto x) { return x > 0; })) ++n;
    return n;
  }
  std::size_t count_unimodal() const {
    return static_cast<std::size_t>(std::count_if(records.begin(), records.end(), [](const auto& r) { return r.error.empty() && r.unimodal; }));
  }
  std::size_t count_log_concave() const {
    return static_cast<std::size_t>(std::count_if(records.begin(), records.end(), [](const auto& r) { return r.error.empty() && r.log_concave; }));
  }
  std::size_t count_failed() const {
    return static_cast<std::size_t>(std::count_if(records.begin(), records.end(), [](const auto& r) { return !r.error.empty(); }));
  }
  bool all_unimodal() const { return count_failed() == 0 && count_unimodal() == records.size(); }
};

inline SweepRecord evaluate_lambda(const RootSystem& rs, const WeylGroupTable& table, const CorootVector& lambda) {
  SweepRecord rec;
  rec.lambda = lambda;
  rec.coweight = dominance_coords(rs, lambda);
  rec.length_top = height(rs, lambda);
  try {
    auto b = betti_sequence(rs, table, lambda);
    rec.betti = b.coefficients;
    rec.interval_size = b.interval_size();
    rec.unimodal = is_unimodal(rec.betti);
    rec.log_concave = is_log_concave(rec.betti);
  } catch (const std::exception& e) {
    rec.error = e.what();
  }
  return rec;
}

/// Per-lambda work is spread over `jobs` threads; the report order is fixed.
inline SweepReport sweep(const RootSystem& rs, const WeylGroupTable& table, const IntVec& v, unsigned jobs = 1) {
  SweepReport rep;
  rep.type = rs.name();
  rep.bound = v;
  const auto lambdas = enumerate_lambda_below(rs, v);
  rep.records.resize(lambdas.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < lambdas.size(); i = next++) rep.records[i] = evaluate_lambda(rs, table, lambdas[i]);
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return rep;
}

}  // namespace affbetti
