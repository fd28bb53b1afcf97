#include "tipsum/cascade.hpp"

#include <string>

namespace tipsum {
namespace {

void check_power(int power) {
  if (power < 0) throw std::domain_error("cascade: power K must be >= 0, got " + std::to_string(power));
}

void check_finalize_contract(int power, std::int64_t samples_seen, const CoefficientSet& coeffs) {
  if (samples_seen < 1) throw ContractViolation("finalize: no samples have been pushed");
  if (coeffs.power != power || coeffs.size() != static_cast<std::size_t>(power) + 1) {
    throw ContractViolation("finalize: coefficients are for K=" + std::to_string(coeffs.power) +
                            " but the cascade has K=" + std::to_string(power));
  }
  if (coeffs.length != samples_seen) {
    throw ContractViolation("finalize: coefficients are for N=" + std::to_string(coeffs.length) +
                            " but " + std::to_string(samples_seen) + " samples were pushed");
  }
}

void check_served_power(int requested, int power, std::int64_t samples_seen) {
  if (requested < 0 || requested > power) {
    throw ContractViolation("multi_moment_finalize: power " + std::to_string(requested) + " not served by a K=" +
                            std::to_string(power) + " cascade");
  }
  if (samples_seen < 1) throw ContractViolation("multi_moment_finalize: no samples have been pushed");
}

}  // namespace

Cascade::Cascade(int power) : power_(power) {
  check_power(power);
  registers_.assign(static_cast<std::size_t>(power) + 1, ExactInt(0));
  stage_additions_.assign(registers_.size(), 0);
}

void Cascade::push(const ExactInt& sample) {
  const bool count = samples_seen_ > 0;
  // Stage k reads stage k-1's value from this same step.
  const ExactInt* carry = &sample;
  for (std::size_t k = 0; k < registers_.size(); ++k) {
    registers_[k] += *carry;
    if (count) ++stage_additions_[k];
    carry = &registers_[k];
  }
  ++samples_seen_;
}

ExactInt Cascade::finalize(const CoefficientSet& coeffs, OpCount* ops) const {
  check_finalize_contract(power_, samples_seen_, coeffs);
  ExactInt sum = coeffs.values[0] * registers_[0];
  for (std::size_t k = 1; k < registers_.size(); ++k) sum += coeffs.values[k] * registers_[k];
  if (ops != nullptr) {
    ops->constant_mults += registers_.size();
    ops->additions += registers_.size() - 1;
  }
  return sum;
}

std::vector<ExactInt> Cascade::multi_moment_finalize(std::span<const int> powers,
                                                     std::vector<OpCount>* ops) const {
  std::vector<ExactInt> out;
  out.reserve(powers.size());
  if (ops != nullptr) ops->clear();
  for (const int p : powers) {
    check_served_power(p, power_, samples_seen_);
    const CoefficientSet coeffs = coefficients_closed(p, samples_seen_);
    ExactInt sum = coeffs.values[0] * registers_[0];
    for (std::size_t k = 1; k < coeffs.size(); ++k) sum += coeffs.values[k] * registers_[k];
    out.push_back(std::move(sum));
    if (ops != nullptr) {
      OpCount o = push_ops(coeffs.size());
      o.constant_mults += coeffs.size();
      o.additions += coeffs.size() - 1;
      ops->push_back(o);
    }
  }
  return out;
}

OpCount Cascade::push_ops(std::size_t stage_count) const {
  if (stage_count > stages()) throw ContractViolation("push_ops: stage_count exceeds cascade size");
  OpCount ops;
  for (std::size_t k = 0; k < stage_count; ++k) ops.additions += stage_additions_[k];
  return ops;
}

FloatCascade::FloatCascade(int power) : power_(power) {
  check_power(power);
  registers_.assign(static_cast<std::size_t>(power) + 1, 0.0);
}

void FloatCascade::push(double sample) {
  double carry = sample;
  for (double& r : registers_) {
    r += carry;
    carry = r;
  }
  ++samples_seen_;
}

double FloatCascade::finalize(const CoefficientSet& coeffs) const {
  check_finalize_contract(power_, samples_seen_, coeffs);
  double sum = 0.0;
  for (std::size_t k = 0; k < registers_.size(); ++k) sum += coeffs.values[k].to_double() * registers_[k];
  return sum;
}

std::vector<double> FloatCascade::multi_moment_finalize(std::span<const int> powers) const {
  std::vector<double> out;
  out.reserve(powers.size());
  for (const int p : powers) {
    check_served_power(p, power_, samples_seen_);
    const CoefficientSet coeffs = coefficients_closed(p, samples_seen_);
    double sum = 0.0;
    for (std::size_t k = 0; k < coeffs.size(); ++k) sum += coeffs.values[k].to_double() * registers_[k];
    out.push_back(sum);
  }
  return out;
}

}  // namespace tipsum
