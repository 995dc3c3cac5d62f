#pragma once

#include <cmath>
#include <cstdint>
#include <limits>

namespace ising {

// Streaming ln(sum_i exp(x_i)) with a running maximum. Merging is associative,
// so partial sums from separate workers can be combined in a fixed order.
class LogSumExp {
 public:
  void add(double x) {
    if (x == kNegInf) return;
    if (x <= max_) {
      sum_ += std::exp(x - max_);
    } else {
      sum_ = sum_ * std::exp(max_ - x) + 1.0;
      max_ = x;
    }
  }

  void merge(const LogSumExp& other) {
    if (other.max_ == kNegInf) return;
    if (max_ == kNegInf) {
      *this = other;
    } else if (other.max_ <= max_) {
      sum_ += other.sum_ * std::exp(other.max_ - max_);
    } else {
      sum_ = sum_ * std::exp(max_ - other.max_) + other.sum_;
      max_ = other.max_;
    }
  }

  double value() const { return max_ == kNegInf ? kNegInf : max_ + std::log(sum_); }

 private:
  static constexpr double kNegInf = -std::numeric_limits<double>::infinity();
  double max_ = kNegInf;
  double sum_ = 0.0;
};

// Mean and variance of importance weights supplied as logarithms.
//
// Weights are held relative to the running maximum m as w_i = exp(x_i - m) and
// accumulated with Welford updates; merging uses the pairwise (Chan) update
// after rescaling both sides to the larger maximum.
class WeightAccumulator {
 public:
  void add(double log_weight) {
    if (log_weight > max_) rescale_to(log_weight);
    const double w = log_weight == kNegInf ? 0.0 : std::exp(log_weight - max_);
    ++count_;
    const double delta = w - mean_;
    mean_ += delta / static_cast<double>(count_);
    m2_ += delta * (w - mean_);
  }

  void merge(WeightAccumulator other) {
    if (other.count_ == 0) return;
    if (count_ == 0) {
      *this = other;
      return;
    }
    if (other.max_ > max_) {
      rescale_to(other.max_);
    } else {
      other.rescale_to(max_);
    }
    const double n_a = static_cast<double>(count_);
    const double n_b = static_cast<double>(other.count_);
    const double n = n_a + n_b;
    const double delta = other.mean_ - mean_;
    mean_ += delta * (n_b / n);
    m2_ += other.m2_ + delta * delta * (n_a * n_b / n);
    count_ += other.count_;
  }

  std::uint64_t count() const noexcept { return count_; }
  double log_mean() const { return mean_ > 0 ? max_ + std::log(mean_) : kNegInf; }

  // Unbiased sample variance divided by the squared mean: L Var[Z_hat] / Z_hat^2.
  double relative_variance() const {
    if (count_ < 2) return 0.0;
    if (mean_ <= 0) return std::numeric_limits<double>::infinity();
    const double var = m2_ > 0 ? m2_ / static_cast<double>(count_ - 1) : 0.0;
    return var / (mean_ * mean_);
  }

  // Delta-method standard error of ln(mean).
  double std_error_log() const {
    if (count_ == 0) return std::numeric_limits<double>::infinity();
    return std::sqrt(relative_variance() / static_cast<double>(count_));
  }

 private:
  static constexpr double kNegInf = -std::numeric_limits<double>::infinity();

  void rescale_to(double new_max) {
    const double scale = max_ == kNegInf ? 0.0 : std::exp(max_ - new_max);
    mean_ *= scale;
    m2_ *= scale * scale;
    max_ = new_max;
  }

  std::uint64_t count_ = 0;
  double max_ = kNegInf;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

}  // namespace ising
