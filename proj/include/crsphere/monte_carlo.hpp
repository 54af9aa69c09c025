#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "crsphere/parallel.hpp"

namespace crs {

/// Seed, sample count and number of independent substreams. Item i always
/// receives the same random points whatever the stream count; streams only
/// fix how items are grouped for the reduction.
struct SampleSpec {
  std::uint64_t seed = 20240101;
  std::uint64_t count = 100000;
  unsigned streams = 8;

  void validate() const;
  /// Spec for an independent estimate: same count and streams, seed mixed with `tag`.
  SampleSpec derive(std::uint64_t tag) const;
};

template <class T>
struct McEstimate {
  T value{};
  double std_error = 0.0;
  std::uint64_t count = 0;
};

/// Running means and co-moments of K real components (Welford / Chan).
template <std::size_t K>
class Moments {
public:
  void add(const std::array<double, K>& x) {
    ++count_;
    const double inv = 1.0 / static_cast<double>(count_);
    std::array<double, K> delta{};
    for (std::size_t a = 0; a < K; ++a) {
      delta[a] = x[a] - mean_[a];
      mean_[a] += delta[a] * inv;
    }
    for (std::size_t a = 0; a < K; ++a) {
      for (std::size_t b = 0; b < K; ++b) co_[a][b] += delta[a] * (x[b] - mean_[b]);
    }
  }

  void merge(const Moments& o) {
    if (o.count_ == 0) return;
    if (count_ == 0) {
      *this = o;
      return;
    }
    const double na = static_cast<double>(count_);
    const double nb = static_cast<double>(o.count_);
    const double n = na + nb;
    std::array<double, K> delta{};
    for (std::size_t a = 0; a < K; ++a) delta[a] = o.mean_[a] - mean_[a];
    for (std::size_t a = 0; a < K; ++a) {
      for (std::size_t b = 0; b < K; ++b) {
        co_[a][b] += o.co_[a][b] + delta[a] * delta[b] * na * nb / n;
      }
    }
    for (std::size_t a = 0; a < K; ++a) mean_[a] += delta[a] * nb / n;
    count_ += o.count_;
  }

  std::uint64_t count() const noexcept { return count_; }
  double mean(std::size_t a) const { return mean_[a]; }
  /// Sample covariance (n − 1 denominator); zero for fewer than two samples.
  double covariance(std::size_t a, std::size_t b) const {
    return count_ < 2 ? 0.0 : co_[a][b] / static_cast<double>(count_ - 1);
  }
  double variance(std::size_t a) const { return std::max(0.0, covariance(a, a)); }
  /// Standard error of the mean of component a.
  double stderr_of_mean(std::size_t a) const {
    return count_ == 0 ? 0.0 : std::sqrt(variance(a) / static_cast<double>(count_));
  }
  /// Standard error of Σ_a grad[a]·mean(a) (delta method).
  double stderr_of_linear(const std::array<double, K>& grad) const {
    if (count_ == 0) return 0.0;
    double v = 0.0;
    for (std::size_t a = 0; a < K; ++a) {
      for (std::size_t b = 0; b < K; ++b) v += grad[a] * grad[b] * covariance(a, b);
    }
    return std::sqrt(std::max(0.0, v) / static_cast<double>(count_));
  }

private:
  std::uint64_t count_ = 0;
  std::array<double, K> mean_{};
  std::array<std::array<double, K>, K> co_{};
};

/// Accumulates item(i) for i in [0, spec.count). Streams are reduced in
/// parallel and merged in stream order, so the result is bit-identical for a
/// given spec regardless of thread count.
template <std::size_t K, class F>
Moments<K> accumulate(const SampleSpec& spec, F&& item) {
  spec.validate();
  std::vector<Moments<K>> partial(spec.streams);
  parallel::for_each_index(spec.streams, [&](std::size_t s) {
    const std::uint64_t begin = spec.count * s / spec.streams;
    const std::uint64_t end = spec.count * (s + 1) / spec.streams;
    Moments<K> m;
    for (std::uint64_t i = begin; i < end; ++i) m.add(item(i));
    partial[s] = m;
  });
  Moments<K> total;
  for (const auto& m : partial) total.merge(m);
  return total;
}

}  // namespace crs
