#include "eprsim/statistics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "eprsim/errors.hpp"

namespace eprsim::statistics {
namespace {

constexpr double kBoundSlack = 1e-12;

struct Moments {
  double a = 0.0, b = 0.0, ab = 0.0, aa = 0.0, bb = 0.0;
};

Moments moments(std::span<const double> a, std::span<const double> b) {
  Moments m;
  for (std::size_t i = 0; i < a.size(); ++i) {
    m.a += a[i];
    m.b += b[i];
    m.ab += a[i] * b[i];
    m.aa += a[i] * a[i];
    m.bb += b[i] * b[i];
  }
  const double n = static_cast<double>(a.size());
  m.a /= n;
  m.b /= n;
  m.ab /= n;
  m.aa /= n;
  m.bb /= n;
  return m;
}

double normalized_from(const Moments& m) {
  const double denom = std::sqrt(m.aa * m.bb);
  if (!(denom > 0.0)) throw DegenerateInputError("normalized correlation: vanishing second moment");
  return (m.ab - m.a * m.b) / denom;
}

std::int64_t product_sum(const DichotomicSequence& x, const DichotomicSequence& y) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

void require_same_length(std::size_t n, std::initializer_list<std::size_t> others) {
  for (const auto m : others) {
    if (m != n) throw InputError("sequence lengths differ");
  }
}

}  // namespace

DichotomicSequence::DichotomicSequence(std::vector<int> values, std::string label)
    : values_(std::move(values)), label_(std::move(label)) {
  if (values_.empty()) throw InputError("dichotomic sequence must not be empty");
  for (const int v : values_) {
    if (v != 1 && v != -1) throw InputError("dichotomic sequence values must be +1 or -1");
  }
}

CorrelationEstimate eventwise_correlation(const DichotomicSequence& x, const DichotomicSequence& y) {
  require_same_length(x.size(), {y.size()});
  const auto n = x.size();
  const double mean = static_cast<double>(product_sum(x, y)) / static_cast<double>(n);
  CorrelationEstimate est{mean, n, 0.0};
  if (n > 1) {
    // Products are +-1, so the sample variance is n (1 - mean^2) / (n - 1).
    const double var = std::max(0.0, (1.0 - mean * mean) * static_cast<double>(n) / static_cast<double>(n - 1));
    est.std_err = std::sqrt(var / static_cast<double>(n));
  }
  return est;
}

double normalized_correlation(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw InputError("sample lengths differ");
  if (a.size() < 2) throw InputError("normalized correlation needs at least two samples");
  return normalized_from(moments(a, b));
}

CorrelationEstimate normalized_correlation_estimate(std::span<const double> a, std::span<const double> b,
                                                    std::size_t n_batches) {
  CorrelationEstimate est{normalized_correlation(a, b), a.size(), 0.0};
  const std::size_t batch = n_batches > 1 ? a.size() / n_batches : 0;
  if (batch < 2) return est;
  double sum = 0.0, sum2 = 0.0;
  for (std::size_t k = 0; k < n_batches; ++k) {
    const double v = normalized_from(moments(a.subspan(k * batch, batch), b.subspan(k * batch, batch)));
    sum += v;
    sum2 += v * v;
  }
  const double kb = static_cast<double>(n_batches);
  const double var = std::max(0.0, (sum2 - sum * sum / kb) / (kb - 1.0));
  est.std_err = std::sqrt(var / kb);
  return est;
}

CorrelationEstimate four_channel_correlation(const detection::CoincidenceCounts& counts) {
  const auto total = counts.total();
  if (total == 0) throw DegenerateInputError("no coincidences recorded");
  const auto same = static_cast<std::int64_t>(counts.n_pp + counts.n_mm);
  const auto crossed = static_cast<std::int64_t>(counts.n_pm + counts.n_mp);
  const double value = static_cast<double>(same - crossed) / static_cast<double>(total);
  return {value, static_cast<std::size_t>(total),
          std::sqrt(std::max(0.0, 1.0 - value * value) / static_cast<double>(total))};
}

double coherence_correlation(std::span<const double> coincidence, std::span<const double> a,
                             std::span<const double> b, bool double_measurement) {
  if (coincidence.size() != a.size() || a.size() != b.size()) throw InputError("sample lengths differ");
  if (a.empty()) throw InputError("no samples");
  double mean_c = 0.0;
  for (const double c : coincidence) mean_c += c;
  mean_c /= static_cast<double>(coincidence.size());
  const auto m = moments(a, b);
  const double denom = std::sqrt(m.aa * m.bb);
  if (!(denom > 0.0)) throw DegenerateInputError("coherence correlation: vanishing second moment");
  return ((double_measurement ? 2.0 : 1.0) * mean_c - m.a * m.b) / denom;
}

double chsh(double p_ab, double p_ab_prime, double p_a_prime_b_prime, double p_a_prime_b) {
  for (const double p : {p_ab, p_ab_prime, p_a_prime_b_prime, p_a_prime_b}) {
    if (!(std::abs(p) <= 1.0 + kBoundSlack)) throw InputError("correlation outside [-1, 1]");
  }
  return std::abs(p_ab - p_ab_prime) + std::abs(p_a_prime_b_prime + p_a_prime_b);
}

double amended_bound(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw InputError("sample lengths differ");
  if (a.empty()) throw InputError("no samples");
  const auto m = moments(a, b);
  const double denom = std::sqrt(m.aa * m.bb);
  if (!(denom > 0.0)) throw DegenerateInputError("amended bound: vanishing second moment");
  return 2.0 + 2.0 * m.a * m.b / denom;
}

BoundCheck sica_check(const DichotomicSequence& a, const DichotomicSequence& a_prime, const DichotomicSequence& b,
                      const DichotomicSequence& b_prime) {
  const auto n = a.size();
  require_same_length(n, {a_prime.size(), b.size(), b_prime.size()});
  const std::int64_t numerator = std::llabs(product_sum(a, b) + product_sum(a, b_prime)) +
                                 std::llabs(product_sum(a_prime, b) - product_sum(a_prime, b_prime));
  const double lhs = static_cast<double>(numerator) / static_cast<double>(n);
  return {lhs, 2.0, numerator <= 2 * static_cast<std::int64_t>(n) && lhs <= 2.0 + kBoundSlack};
}

BoundCheck eight_sequence_check(const PairedRun& ab, const PairedRun& ab_prime, const PairedRun& a_prime_b_prime,
                                const PairedRun& a_prime_b) {
  const auto n = ab.x.size();
  require_same_length(n, {ab.y.size(), ab_prime.x.size(), ab_prime.y.size(), a_prime_b_prime.x.size(),
                          a_prime_b_prime.y.size(), a_prime_b.x.size(), a_prime_b.y.size()});
  const std::int64_t numerator = std::llabs(product_sum(ab.x, ab.y) - product_sum(ab_prime.x, ab_prime.y)) +
                                 std::llabs(product_sum(a_prime_b_prime.x, a_prime_b_prime.y) +
                                            product_sum(a_prime_b.x, a_prime_b.y));
  const double lhs = static_cast<double>(numerator) / static_cast<double>(n);
  return {lhs, 4.0, numerator <= 4 * static_cast<std::int64_t>(n) && lhs <= 4.0 + kBoundSlack};
}

BoundCheck trivial_bound(double p_ab, double p_ab_prime) {
  const double lhs = std::abs(p_ab - p_ab_prime);
  return {lhs, 2.0, lhs <= 2.0 + kBoundSlack};
}

}  // namespace eprsim::statistics
