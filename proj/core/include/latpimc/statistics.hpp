#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace latpimc {

/// Folds a stream of fixed-width sample vectors into block means. Trailing
/// samples that do not fill a block are kept aside and never enter a mean.
class BlockAccumulator {
 public:
  BlockAccumulator(std::size_t width, long block_size);

  std::size_t width() const noexcept { return width_; }
  long block_size() const noexcept { return block_size_; }
  std::size_t n_blocks() const noexcept { return block_means_.size() / (width_ == 0 ? 1 : width_); }
  long n_samples() const noexcept { return n_samples_; }

  void add(const std::vector<double>& sample);
  void add(const double* sample);

  /// Appends other's full blocks after this one's (partial blocks are dropped).
  void merge(const BlockAccumulator& other);

  /// Mean of column k in block b.
  double block_mean(std::size_t b, std::size_t k) const { return block_means_[b * width_ + k]; }

 private:
  std::size_t width_;
  long block_size_;
  long n_samples_ = 0;
  long in_block_ = 0;
  std::vector<double> partial_;
  std::vector<double> block_means_;  // row-major, n_blocks x width
};

struct RunStats {
  std::vector<double> mean;       // mean of block means, per column
  std::vector<double> std_error;  // stddev(block means) / sqrt(n_blocks)
  std::size_t n_blocks = 0;
  long block_size = 0;
  double acceptance_rate = 1.0;
};

/// Throws StatisticsError when fewer than two full blocks are available.
RunStats aggregate(const BlockAccumulator& acc);
RunStats aggregate(const std::vector<std::vector<double>>& samples, long block_size);

struct JackknifeEstimate {
  double value = 0.0;
  double std_error = 0.0;
};

/// Jackknife over blocks of the derived quantity <col_sq> - <col>^2.
JackknifeEstimate jackknife_variance(const BlockAccumulator& acc, std::size_t col, std::size_t col_sq);

/// Default block size: max(50, n_samples / 100).
long default_block_size(long n_samples);

}  // namespace latpimc
