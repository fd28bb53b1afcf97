#include "tipsum/cost_model.hpp"

#include <ostream>
#include <stdexcept>
#include <string>

#include "tipsum/addition_chain.hpp"
#include "tipsum/cascade.hpp"
#include "tipsum/coefficients.hpp"
#include "tipsum/oracle.hpp"

namespace tipsum::costmodel {
namespace {

void validate(int power, std::int64_t length) {
  if (power < 0) throw std::domain_error("cost model: power K must be >= 0, got " + std::to_string(power));
  if (length < 1) throw std::domain_error("cost model: length N must be >= 1, got " + std::to_string(length));
}

std::uint64_t chain_length(int power) { return power == 0 ? 0 : optimal_chain(power).length(); }

}  // namespace

OpCount predict_proposed(int power, std::int64_t length) {
  validate(power, length);
  const auto stages = static_cast<std::uint64_t>(power) + 1;
  return OpCount{0, stages, stages * static_cast<std::uint64_t>(length) - 1};
}

OpCount predict_baseline(int power, std::int64_t length) {
  validate(power, length);
  const auto n = static_cast<std::uint64_t>(length);
  const std::uint64_t general = power == 0 ? 0 : n * (chain_length(power) + 1);
  return OpCount{general, 0, n - 1};
}

std::uint64_t predict_baseline_chain_mults(int power, std::int64_t length) {
  validate(power, length);
  return static_cast<std::uint64_t>(length) * chain_length(power);
}

OpCount measure_proposed(std::span<const ExactInt> v, int power) {
  Cascade cascade(power);
  for (const ExactInt& sample : v) cascade.push(sample);
  OpCount ops = cascade.push_ops();
  if (cascade.samples_seen() > 0) {
    cascade.finalize(coefficients_closed(power, cascade.samples_seen()), &ops);
  }
  return ops;
}

BaselineMeasurement measure_baseline(std::span<const ExactInt> v, int power) {
  const oracle::BaselineResult r = oracle::baseline_sum(v, power);
  return {r.ops, r.chain_mults};
}

std::vector<ComplexityReport> complexity_table(std::span<const int> powers, std::span<const std::int64_t> lengths) {
  std::vector<ComplexityReport> out;
  out.reserve(powers.size() * lengths.size());
  for (const int k : powers) {
    for (const std::int64_t n : lengths) {
      out.push_back({k, n, predict_proposed(k, n), predict_baseline(k, n), predict_baseline_chain_mults(k, n)});
    }
  }
  return out;
}

void write_csv(std::ostream& os, std::span<const ComplexityReport> reports) {
  os << "K,N,method,general_mults,constant_mults,additions\n";
  const auto row = [&os](const ComplexityReport& r, const char* method, const OpCount& ops) {
    os << r.power << ',' << r.length << ',' << method << ',' << ops.general_mults << ',' << ops.constant_mults << ','
       << ops.additions << '\n';
  };
  for (const ComplexityReport& r : reports) {
    row(r, "proposed", r.proposed);
    row(r, "baseline", r.baseline);
    OpCount chain_only = r.baseline;
    chain_only.general_mults = r.baseline_chain_only_mults;
    row(r, "baseline_chain", chain_only);
  }
}

}  // namespace tipsum::costmodel
