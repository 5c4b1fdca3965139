#ifndef PACLOGIC_RNG_HPP
#define PACLOGIC_RNG_HPP

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace paclogic {

/// SplitMix64: a 64-bit counter-based generator (Steele, Lea & Flood).
/// The state advances by a fixed odd constant and each output is a bijective
/// mix of the counter, so streams are reproducible on every platform. All
/// randomized components of the library draw from this generator only;
/// nothing uses <random> distributions, whose output is implementation
/// defined.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform integer in [0, bound), unbiased via rejection.
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) throw std::domain_error("SplitMix64::below: zero bound");
    std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

/// Derives an independent child seed for stream `index` of a master seed.
/// Used to give each trial / subsystem its own stream so that parallel
/// execution reproduces sequential results.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t z = master ^ (0x9E3779B97F4A7C15ULL * (index + 0x632BE59BD9B4E019ULL));
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Draws uniformly random size-k subsets of {0, .., m-1} by partial
/// Fisher-Yates shuffle. The scratch permutation is restored after every
/// draw, so repeated sampling from a large ground set costs O(k) per draw.
class SubsetSampler {
 public:
  explicit SubsetSampler(std::uint32_t m) : idx_(m) {
    for (std::uint32_t i = 0; i < m; ++i) idx_[i] = i;
  }

  std::uint32_t size() const { return static_cast<std::uint32_t>(idx_.size()); }

  /// Fills `out` with k distinct indices, sorted ascending.
  void sample_sorted(SplitMix64& rng, std::uint32_t k, std::vector<std::uint32_t>& out) {
    sample_sequence(rng, k, out);
    std::sort(out.begin(), out.end());
  }

  /// Fills `out` with a uniformly random ordered k-permutation of {0..m-1}.
  void sample_sequence(SplitMix64& rng, std::uint32_t k, std::vector<std::uint32_t>& out) {
    const std::uint32_t m = size();
    if (k > m) throw std::domain_error("SubsetSampler: k exceeds ground set size");
    out.clear();
    swaps_.clear();
    for (std::uint32_t i = 0; i < k; ++i) {
      std::uint32_t j = i + static_cast<std::uint32_t>(rng.below(m - i));
      std::swap(idx_[i], idx_[j]);
      swaps_.push_back(j);
      out.push_back(idx_[i]);
    }
    for (std::uint32_t i = k; i-- > 0;) std::swap(idx_[i], idx_[swaps_[i]]);
  }

 private:
  std::vector<std::uint32_t> idx_;
  std::vector<std::uint32_t> swaps_;
};

}  // namespace paclogic

#endif  // PACLOGIC_RNG_HPP
