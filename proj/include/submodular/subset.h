// Copyright 2026 The Authors.
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

#ifndef SUBMODULAR_SUBSET_H_
#define SUBMODULAR_SUBSET_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace submodular {

using ElementId = std::size_t;

// A finite ground set {0, ..., n-1}. Element order is the index order.
class GroundSet {
 public:
  explicit GroundSet(std::size_t n);

  std::size_t size() const { return n_; }
  bool Contains(ElementId p) const { return p < n_; }

  friend bool operator==(const GroundSet&, const GroundSet&) = default;

 private:
  std::size_t n_;
};

// Fixed-width bit vector over a ground set. Widths up to 64 live in a single
// inline word; wider sets chain additional words on the heap.
class Subset {
 public:
  Subset() = default;
  explicit Subset(std::size_t width);
  Subset(std::size_t width, std::initializer_list<ElementId> elements);

  static Subset FromElements(std::size_t width,
                             const std::vector<ElementId>& elements);
  // Low 64 bits only; requires width <= 64.
  static Subset FromMask(std::size_t width, std::uint64_t mask);
  static Subset Full(std::size_t width);

  std::size_t width() const { return width_; }
  bool Contains(ElementId p) const;
  void Insert(ElementId p);
  void Erase(ElementId p);
  Subset With(ElementId p) const;
  Subset Without(ElementId p) const;

  std::size_t Count() const;
  bool Empty() const;
  bool IsSubsetOf(const Subset& other) const;

  Subset& operator|=(const Subset& other);
  Subset& operator&=(const Subset& other);
  // Set difference.
  Subset& operator-=(const Subset& other);
  friend Subset operator|(Subset a, const Subset& b) { return a |= b; }
  friend Subset operator&(Subset a, const Subset& b) { return a &= b; }
  friend Subset operator-(Subset a, const Subset& b) { return a -= b; }
  friend bool operator==(const Subset& a, const Subset& b);

  // Requires width <= 64.
  std::uint64_t Mask() const;

  // Ascending element indices.
  std::vector<ElementId> Elements() const;
  template <typename Fn>
  void ForEach(Fn&& fn) const {
    for (std::size_t w = 0; w < WordCount(); ++w) {
      std::uint64_t bits = Word(w);
      while (bits != 0) {
        const int bit = __builtin_ctzll(bits);
        fn(static_cast<ElementId>(w * 64 + bit));
        bits &= bits - 1;
      }
    }
  }

  // Lexicographic comparison of the ascending element lists.
  bool LexLess(const Subset& other) const;

  // "{0,2,5}".
  std::string ToString() const;

  std::size_t Hash() const;

 private:
  std::size_t WordCount() const { return (width_ + 63) / 64; }
  std::uint64_t Word(std::size_t w) const {
    return w == 0 ? first_ : extra_[w - 1];
  }
  std::uint64_t& MutableWord(std::size_t w) {
    return w == 0 ? first_ : extra_[w - 1];
  }
  void CheckElement(ElementId p) const;
  void CheckWidth(const Subset& other) const;

  std::size_t width_ = 0;
  std::uint64_t first_ = 0;
  std::vector<std::uint64_t> extra_;
};

struct SubsetHash {
  std::size_t operator()(const Subset& s) const { return s.Hash(); }
};

}  // namespace submodular

#endif  // SUBMODULAR_SUBSET_H_
