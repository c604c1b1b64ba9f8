// Copyright 2026 The colorful-radii Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace sumradii {

// Fixed-size bit set over point ids. Unused high bits of the last word are
// kept at zero so popcounts and equality work on raw words.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int size) : size_(size), words_((size + 63) / 64, 0) {}

  static Bitset all(int size) {
    Bitset b(size);
    for (int i = 0; i < size; ++i) b.set(i);
    return b;
  }

  int size() const { return size_; }

  void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

  void clear() {
    for (auto& w : words_) w = 0;
  }

  Bitset& operator|=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }

  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  bool none() const {
    for (auto w : words_) {
      if (w != 0) return false;
    }
    return true;
  }

  // Smallest set id, or -1 if empty.
  int first_set() const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] != 0) return static_cast<int>(i) * 64 + std::countr_zero(words_[i]);
    }
    return -1;
  }

  // Smallest id in [0, size) whose bit is unset, or -1 if all set.
  int first_unset() const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t inv = ~words_[i];
      if (inv != 0) {
        int bit = std::countr_zero(inv);
        int id = static_cast<int>(i) * 64 + bit;
        return id < size_ ? id : -1;
      }
    }
    return -1;
  }

  template <typename Fn>
  void for_each_set(Fn&& fn) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w != 0) {
        int bit = std::countr_zero(w);
        fn(static_cast<int>(i) * 64 + bit);
        w &= w - 1;
      }
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(count());
    for_each_set([&](int i) { out.push_back(i); });
    return out;
  }

  const std::vector<std::uint64_t>& words() const { return words_; }

  friend bool operator==(const Bitset& a, const Bitset& b) {
    return a.size_ == b.size_ && a.words_ == b.words_;
  }

 private:
  int size_ = 0;
  std::vector<std::uint64_t> words_;
};

// |a & b|
inline int count_and(const Bitset& a, const Bitset& b) {
  int c = 0;
  const auto& wa = a.words();
  const auto& wb = b.words();
  for (std::size_t i = 0; i < wa.size(); ++i) c += std::popcount(wa[i] & wb[i]);
  return c;
}

inline std::uint64_t hash_words(const std::vector<std::uint64_t>& words, std::uint64_t seed = 0) {
  std::uint64_t h = 14695981039346656037ull ^ seed;
  for (auto w : words) {
    h ^= w;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace sumradii
