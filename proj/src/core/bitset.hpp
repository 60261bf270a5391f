/** Copyright 2026 The gossipnet Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * 	http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef GOSSIPNET_CORE_BITSET_HPP
#define GOSSIPNET_CORE_BITSET_HPP

#include <bit>
#include <cstdint>
#include <vector>

namespace gossip {

/// Fixed-width bitset sized at runtime.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int bits) : bits_(bits), words_((static_cast<std::size_t>(bits) + 63) / 64, 0) {}

  int bits() const { return bits_; }
  void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }

  bool none() const {
    for (auto w : words_) {
      if (w != 0) return false;
    }
    return true;
  }
  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  /// Lowest set bit, or -1.
  int first() const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if (words_[w] != 0) return static_cast<int>(w * 64) + std::countr_zero(words_[w]);
    }
    return -1;
  }
  /// Lowest set bit strictly above i, or -1.
  int next(int i) const {
    ++i;
    if (i >= bits_) return -1;
    std::size_t w = static_cast<std::size_t>(i >> 6);
    std::uint64_t cur = words_[w] & (~std::uint64_t{0} << (i & 63));
    while (true) {
      if (cur != 0) return static_cast<int>(w * 64) + std::countr_zero(cur);
      if (++w == words_.size()) return -1;
      cur = words_[w];
    }
  }

  Bitset& operator&=(const Bitset& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= o.words_[w];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= o.words_[w];
    return *this;
  }
  /// this &= ~o
  Bitset& subtract(const Bitset& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~o.words_[w];
    return *this;
  }
  bool intersects(const Bitset& o) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if ((words_[w] & o.words_[w]) != 0) return true;
    }
    return false;
  }

  friend bool operator==(const Bitset&, const Bitset&) = default;

 private:
  int bits_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace gossip

#endif  // GOSSIPNET_CORE_BITSET_HPP
