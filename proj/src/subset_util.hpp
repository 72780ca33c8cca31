#pragma once

#include <cstdint>
#include <vector>

#include "snc/error.hpp"

namespace snc::detail {

inline constexpr uint64_t kCombSaturated = uint64_t{1} << 62;

// C(n, k) saturating at 2^62.
inline uint64_t comb64(uint64_t n, uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  uint64_t result = 1;
  for (uint64_t i = 1; i <= k; ++i) {
    // result * (n - k + i) / i stays integral at every step
    uint64_t num = n - k + i;
    if (result > kCombSaturated / num) return kCombSaturated;
    result = result * num / i;
  }
  return result < kCombSaturated ? result : kCombSaturated;
}

// Lexicographic iteration over k-subsets of {0..m-1}, with rank-based
// positioning so ranges can be split across workers deterministically.
class SubsetIter {
public:
  SubsetIter(int m, int k, uint64_t rank) : m_(m), pos_(k) {
    int from = 0;
    for (int i = 0; i < k; ++i) {
      for (int c = from; c < m; ++c) {
        uint64_t block = comb64(m - c - 1, k - i - 1);
        if (rank < block) {
          pos_[i] = c;
          from = c + 1;
          break;
        }
        rank -= block;
      }
    }
  }

  const std::vector<int>& positions() const { return pos_; }

  bool advance() {
    int k = static_cast<int>(pos_.size());
    int i = k - 1;
    while (i >= 0 && pos_[i] == m_ - (k - i)) --i;
    if (i < 0) return false;
    ++pos_[i];
    for (int j = i + 1; j < k; ++j) pos_[j] = pos_[j - 1] + 1;
    return true;
  }

private:
  int m_;
  std::vector<int> pos_;
};

}  // namespace snc::detail
