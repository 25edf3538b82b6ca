#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "eprsim/detection.hpp"

namespace eprsim::statistics {

/// Finite sequence of +1/-1 outcomes for one setting.
class DichotomicSequence {
 public:
  /// Throws InputError if empty or if any element is not +1 or -1.
  explicit DichotomicSequence(std::vector<int> values, std::string label = {});
  DichotomicSequence(std::initializer_list<int> values) : DichotomicSequence(std::vector<int>(values)) {}

  [[nodiscard]] std::span<const int> values() const { return values_; }
  [[nodiscard]] std::size_t size() const { return values_.size(); }
  [[nodiscard]] const std::string& label() const { return label_; }
  [[nodiscard]] int operator[](std::size_t i) const { return values_[i]; }

 private:
  std::vector<int> values_;
  std::string label_;
};

struct SettingPair {
  double a = 0.0;
  double b = 0.0;
};

struct CorrelationEstimate {
  double value = 0.0;
  std::size_t n = 0;
  double std_err = 0.0;
};

/// (1/N) sum x_i y_i, with std_err = sample std of x_i y_i / sqrt(N).
CorrelationEstimate eventwise_correlation(const DichotomicSequence& x, const DichotomicSequence& y);

/// (<AB> - <A><B>) / sqrt(<A^2><B^2>). Throws InputError for unequal or short
/// inputs, DegenerateInputError when the denominator vanishes.
double normalized_correlation(std::span<const double> a, std::span<const double> b);

/// normalized_correlation on the full sample plus a batch-means standard error
/// (sample std of the estimator over `n_batches` contiguous batches / sqrt(n_batches)).
CorrelationEstimate normalized_correlation_estimate(std::span<const double> a, std::span<const double> b,
                                                    std::size_t n_batches = 100);

/// (n_pp + n_mm - n_pm - n_mp) / total with binomial std_err sqrt((1 - v^2) / total).
/// Throws DegenerateInputError on an empty tally.
CorrelationEstimate four_channel_correlation(const detection::CoincidenceCounts& counts);

/// Intensity-based correlation with the coincidence term supplied per pair:
///   (k <coincidence> - <A><B>) / sqrt(<A^2><B^2>)
/// where k = 2 counts both analyzer modes of each arm and k = 1 is the
/// single-mode variant whose values lie in [-1, 0].
double coherence_correlation(std::span<const double> coincidence, std::span<const double> a,
                             std::span<const double> b, bool double_measurement = true);

/// |P(a,b) - P(a,b')| + |P(a',b') + P(a',b)|. Throws InputError if any |P| > 1.
double chsh(double p_ab, double p_ab_prime, double p_a_prime_b_prime, double p_a_prime_b);

/// 2 + 2 <A><B> / sqrt(<A^2><B^2>). Throws DegenerateInputError for a zero second moment.
double amended_bound(std::span<const double> a, std::span<const double> b);

struct BoundCheck {
  double lhs = 0.0;
  double bound = 2.0;
  bool holds = true;
};

/// |(1/N) sum a b + (1/N) sum a b'| + |(1/N) sum a' b - (1/N) sum a' b'| <= 2.
/// Sums are taken in exact integer arithmetic.
BoundCheck sica_check(const DichotomicSequence& a, const DichotomicSequence& a_prime, const DichotomicSequence& b,
                      const DichotomicSequence& b_prime);

/// Paired outcomes of one run at a single setting pair.
struct PairedRun {
  DichotomicSequence x;
  DichotomicSequence y;
};

/// Four separately generated runs, one per setting pair, combined with the
/// CHSH grouping |m(a,b) - m(a,b')| + |m(a',b') + m(a',b)|; the bound is 4.
BoundCheck eight_sequence_check(const PairedRun& ab, const PairedRun& ab_prime, const PairedRun& a_prime_b_prime,
                                const PairedRun& a_prime_b);

/// |P(a,b) - P(a,b')| <= 2.
BoundCheck trivial_bound(double p_ab, double p_ab_prime);

}  // namespace eprsim::statistics
