#include "latpimc/statistics.hpp"

#include <algorithm>
#include <cmath>

#include "latpimc/errors.hpp"

namespace latpimc {

BlockAccumulator::BlockAccumulator(std::size_t width, long block_size)
    : width_(width), block_size_(block_size), partial_(width, 0.0) {
  if (block_size < 1) throw StatisticsError("block size must be >= 1");
}

void BlockAccumulator::add(const std::vector<double>& sample) {
  if (sample.size() != width_) throw StatisticsError("sample width mismatch");
  add(sample.data());
}

void BlockAccumulator::add(const double* sample) {
  for (std::size_t k = 0; k < width_; ++k) partial_[k] += sample[k];
  ++n_samples_;
  if (++in_block_ == block_size_) {
    for (std::size_t k = 0; k < width_; ++k) {
      block_means_.push_back(partial_[k] / static_cast<double>(block_size_));
      partial_[k] = 0.0;
    }
    in_block_ = 0;
  }
}

void BlockAccumulator::merge(const BlockAccumulator& other) {
  if (other.width_ != width_ || other.block_size_ != block_size_) {
    throw StatisticsError("cannot merge accumulators with different shapes");
  }
  block_means_.insert(block_means_.end(), other.block_means_.begin(), other.block_means_.end());
  n_samples_ += other.n_samples_;
}

RunStats aggregate(const BlockAccumulator& acc) {
  const std::size_t nb = acc.n_blocks();
  if (nb < 2) {
    throw StatisticsError("need at least 2 full blocks, have " + std::to_string(nb) + " (block size " +
                          std::to_string(acc.block_size()) + ")");
  }
  RunStats out;
  out.n_blocks = nb;
  out.block_size = acc.block_size();
  out.mean.assign(acc.width(), 0.0);
  out.std_error.assign(acc.width(), 0.0);
  for (std::size_t k = 0; k < acc.width(); ++k) {
    double sum = 0.0;
    for (std::size_t b = 0; b < nb; ++b) sum += acc.block_mean(b, k);
    const double mean = sum / static_cast<double>(nb);
    double ss = 0.0;
    for (std::size_t b = 0; b < nb; ++b) {
      const double d = acc.block_mean(b, k) - mean;
      ss += d * d;
    }
    const double stddev = std::sqrt(ss / static_cast<double>(nb - 1));
    out.mean[k] = mean;
    out.std_error[k] = stddev / std::sqrt(static_cast<double>(nb));
  }
  return out;
}

RunStats aggregate(const std::vector<std::vector<double>>& samples, long block_size) {
  if (samples.empty()) throw StatisticsError("no samples");
  BlockAccumulator acc(samples.front().size(), block_size);
  for (const auto& s : samples) acc.add(s);
  return aggregate(acc);
}

JackknifeEstimate jackknife_variance(const BlockAccumulator& acc, std::size_t col, std::size_t col_sq) {
  const std::size_t nb = acc.n_blocks();
  if (nb < 2) throw StatisticsError("jackknife needs at least 2 full blocks");
  if (col >= acc.width() || col_sq >= acc.width()) throw StatisticsError("jackknife column out of range");
  double sum = 0.0;
  double sum_sq = 0.0;
  for (std::size_t b = 0; b < nb; ++b) {
    sum += acc.block_mean(b, col);
    sum_sq += acc.block_mean(b, col_sq);
  }
  const double n = static_cast<double>(nb);
  JackknifeEstimate out;
  out.value = sum_sq / n - (sum / n) * (sum / n);
  std::vector<double> loo(nb);
  double loo_mean = 0.0;
  for (std::size_t b = 0; b < nb; ++b) {
    const double m = (sum - acc.block_mean(b, col)) / (n - 1.0);
    const double m2 = (sum_sq - acc.block_mean(b, col_sq)) / (n - 1.0);
    loo[b] = m2 - m * m;
    loo_mean += loo[b];
  }
  loo_mean /= n;
  double ss = 0.0;
  for (double x : loo) ss += (x - loo_mean) * (x - loo_mean);
  out.std_error = std::sqrt((n - 1.0) / n * ss);
  return out;
}

long default_block_size(long n_samples) { return std::max(50L, n_samples / 100); }

}  // namespace latpimc
