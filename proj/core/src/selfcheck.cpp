#include "tipsum/selfcheck.hpp"

#include <algorithm>
#include <random>

#include "tipsum/cascade.hpp"
#include "tipsum/combinatorics.hpp"
#include "tipsum/cost_model.hpp"
#include "tipsum/oracle.hpp"

namespace tipsum::selfcheck {
namespace {

using exactmath::binomial;
using exactmath::ipow;

std::vector<ExactInt> random_samples(std::mt19937_64& rng, std::int64_t length) {
  std::uniform_int_distribution<std::int64_t> dist(-1'000'000, 1'000'000);
  std::vector<ExactInt> v;
  v.reserve(static_cast<std::size_t>(length));
  for (std::int64_t i = 0; i < length; ++i) v.emplace_back(dist(rng));
  return v;
}

std::vector<ExactInt> impulse(std::int64_t length, std::int64_t at) {
  std::vector<ExactInt> v(static_cast<std::size_t>(length), ExactInt(0));
  v[static_cast<std::size_t>(at)] = ExactInt(1);
  return v;
}

CheckResult oracle_equivalence(const Options& opt, std::mt19937_64& rng) {
  CheckResult r{"oracle_equivalence", 0, std::nullopt};
  for (int k = 0; k <= 8; ++k) {
    for (std::int64_t n = 1; n <= 64; ++n) {
      for (int t = 0; t < opt.trials_per_case; ++t) {
        const auto v = random_samples(rng, n);
        Cascade cascade(k);
        for (const auto& s : v) cascade.push(s);
        const ExactInt got = cascade.finalize(opt.coefficients(k, n));
        const ExactInt want = oracle::direct_sum(v, k);
        ++r.cases;
        if (got != want) {
          r.failure = Counterexample{k, n, v, "cascade=" + got.to_string() + " direct_sum=" + want.to_string()};
          return r;
        }
      }
    }
  }
  return r;
}

CheckResult coefficient_cross_path(const Options& opt) {
  CheckResult r{"coefficient_cross_path", 0, std::nullopt};
  for (int k = 0; k <= 10; ++k) {
    for (std::int64_t n = 1; n <= 50; ++n) {
      ++r.cases;
      if (opt.coefficients(k, n) != coefficients_stirling(k, n)) {
        r.failure = Counterexample{k, n, {}, "closed-form and Stirling-form coefficients differ"};
        return r;
      }
    }
  }
  return r;
}

CheckResult basis_identity(const Options& opt) {
  CheckResult r{"basis_identity", 0, std::nullopt};
  for (int k = 0; k <= 8; ++k) {
    for (std::int64_t n = std::max<std::int64_t>(1, k + 1); n <= 40; ++n) {
      const CoefficientSet c = opt.coefficients(k, n);
      for (std::int64_t i = 0; i < n; ++i) {
        ExactInt rhs(0);
        for (int j = 1; j <= k + 1; ++j) rhs += c.c(j) * binomial(n - i + j - 2, j - 1);
        ++r.cases;
        if (rhs != ipow(i, k)) {
          r.failure = Counterexample{k, n, impulse(n, i),
                                     "n=" + std::to_string(i) + ": combination gives " + rhs.to_string()};
          return r;
        }
      }
    }
  }
  return r;
}

CheckResult appendix_identity() {
  CheckResult r{"appendix_identity", 0, std::nullopt};
  for (std::int64_t m = 0; m <= 12; ++m) {
    for (std::int64_t k = 1; k <= 13; ++k) {
      ++r.cases;
      if (exactmath::appendix_identity_lhs(m, k) != exactmath::appendix_identity_rhs(m, k)) {
        r.failure = Counterexample{static_cast<int>(k), 0, {}, "m=" + std::to_string(m)};
        return r;
      }
    }
  }
  return r;
}

CheckResult monomial_expansion() {
  CheckResult r{"monomial_expansion", 0, std::nullopt};
  for (std::int64_t m = 0; m <= 12; ++m) {
    for (std::int64_t x = 0; x <= 12; ++x) {
      ExactInt sum(0);
      for (std::int64_t j = 0; j <= m; ++j) {
        const ExactInt sign = ((m - j) % 2 == 0) ? ExactInt(1) : ExactInt(-1);
        sum += exactmath::stirling2(m, j) * sign * exactmath::rising_factorial(x, j);
      }
      ++r.cases;
      if (sum != ipow(x, m)) {
        r.failure = Counterexample{static_cast<int>(m), 0, {}, "x=" + std::to_string(x)};
        return r;
      }
    }
  }
  return r;
}

CheckResult operation_counts(std::mt19937_64& rng) {
  CheckResult r{"operation_counts", 0, std::nullopt};
  for (int k = 0; k <= 8; ++k) {
    for (const std::int64_t n : {1, 2, 3, 17, 64, 200}) {
      const auto v = random_samples(rng, n);
      ++r.cases;
      const OpCount proposed = costmodel::measure_proposed(v, k);
      const costmodel::BaselineMeasurement baseline = costmodel::measure_baseline(v, k);
      if (proposed != costmodel::predict_proposed(k, n) || baseline.ops != costmodel::predict_baseline(k, n) ||
          baseline.chain_mults != costmodel::predict_baseline_chain_mults(k, n)) {
        r.failure = Counterexample{k, n, v, "measured operation counts differ from prediction"};
        return r;
      }
    }
  }
  return r;
}

}  // namespace

bool Report::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed(); });
}

Report run(const Options& options) {
  std::mt19937_64 rng(options.seed);
  Report report;
  report.seed = options.seed;
  report.checks.push_back(oracle_equivalence(options, rng));
  report.checks.push_back(coefficient_cross_path(options));
  report.checks.push_back(basis_identity(options));
  report.checks.push_back(appendix_identity());
  report.checks.push_back(monomial_expansion());
  report.checks.push_back(operation_counts(rng));
  return report;
}

}  // namespace tipsum::selfcheck
