#pragma once

// Test-only reference computations. Nothing here calls into the code paths
// it is used to check: counts come from enumeration, linear systems are
// solved over the rationals, and the accumulator recurrence is unrolled into
// an explicit (stage, time) table.

#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include <gmpxx.h>

#include "tipsum/exact_int.hpp"

namespace tipsum::testing {

/// Number of k-subsets of an n-set, by walking all 2^n bitmasks.
inline std::int64_t count_subsets(int n, int k) {
  std::int64_t count = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) == k) ++count;
  }
  return count;
}

/// Number of partitions of {1..n} into exactly k nonempty blocks, by
/// enumerating restricted growth strings.
inline std::int64_t count_set_partitions(int n, int k) {
  if (n == 0) return k == 0 ? 1 : 0;
  std::int64_t count = 0;
  std::vector<int> block(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> assign = [&](int i, int used) {
    if (i == n) {
      if (used == k) ++count;
      return;
    }
    for (int b = 0; b <= used && b < k; ++b) {
      block[static_cast<std::size_t>(i)] = b;
      assign(i + 1, std::max(used, b + 1));
    }
  };
  block[0] = 0;
  assign(1, 1);
  return count;
}

/// A[k][t] for k = 0..stages, t = 0..N-1, straight from
/// A_k[t] = A_k[t-1] + A_{k-1}[t], A_0[t] = v[t], A_k[-1] = 0.
inline std::vector<std::vector<ExactInt>> accumulator_table(const std::vector<ExactInt>& v, int stages) {
  const std::size_t n = v.size();
  std::vector<std::vector<ExactInt>> a(static_cast<std::size_t>(stages) + 1, std::vector<ExactInt>(n, ExactInt(0)));
  for (std::size_t t = 0; t < n; ++t) a[0][t] = v[t];
  for (std::size_t k = 1; k <= static_cast<std::size_t>(stages); ++k) {
    for (std::size_t t = 0; t < n; ++t) {
      const ExactInt prev = t == 0 ? ExactInt(0) : a[k][t - 1];
      a[k][t] = prev + a[k - 1][t];
    }
  }
  return a;
}

/// Exact solve of M x = b over Q by Gaussian elimination. Returns nullopt
/// when M is singular.
inline std::optional<std::vector<mpq_class>> solve_rational(std::vector<std::vector<mpq_class>> m,
                                                            std::vector<mpq_class> b) {
  const std::size_t n = m.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(m[pivot], m[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || m[row][col] == 0) continue;
      const mpq_class f = m[row][col] / m[col][col];
      for (std::size_t j = col; j < n; ++j) m[row][j] -= f * m[col][j];
      b[row] -= f * b[col];
    }
  }
  std::vector<mpq_class> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / m[i][i];
  return x;
}

/// n^k by repeated multiplication in machine integers (small arguments only).
inline std::int64_t small_pow(std::int64_t base, int exponent) {
  std::int64_t r = 1;
  for (int i = 0; i < exponent; ++i) r *= base;
  return r;
}

/// Minimal addition-chain length for every target reachable within
/// `max_depth` steps, by exhaustive enumeration of all chains (any pair of
/// earlier elements, repeats allowed, no ordering constraint).
inline std::map<std::int64_t, int> brute_force_chain_lengths(int max_depth, std::int64_t cap) {
  std::map<std::int64_t, int> best{{1, 0}};
  std::vector<std::int64_t> chain{1};
  std::function<void(int)> extend = [&](int depth) {
    if (depth == max_depth) return;
    const std::size_t size = chain.size();
    for (std::size_t a = 0; a < size; ++a) {
      for (std::size_t b = a; b < size; ++b) {
        const std::int64_t next = chain[a] + chain[b];
        if (next > cap) continue;
        auto it = best.find(next);
        if (it == best.end() || it->second > depth + 1) best[next] = depth + 1;
        chain.push_back(next);
        extend(depth + 1);
        chain.pop_back();
      }
    }
  };
  extend(0);
  return best;
}

inline std::vector<ExactInt> random_sequence(std::mt19937_64& rng, std::size_t length,
                                             std::int64_t bound = 1'000'000) {
  std::uniform_int_distribution<std::int64_t> dist(-bound, bound);
  std::vector<ExactInt> v;
  v.reserve(length);
  for (std::size_t i = 0; i < length; ++i) v.emplace_back(dist(rng));
  return v;
}

inline std::vector<ExactInt> to_exact(std::initializer_list<std::int64_t> values) {
  std::vector<ExactInt> v;
  for (auto x : values) v.emplace_back(x);
  return v;
}

}  // namespace tipsum::testing
