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

#include "submodular/subset.h"

#include <algorithm>
#include <stdexcept>

namespace submodular {

GroundSet::GroundSet(std::size_t n) : n_(n) {
  if (n == 0) throw std::invalid_argument("ground set must be nonempty");
}

Subset::Subset(std::size_t width) : width_(width) {
  if (width > 64) extra_.assign(WordCount() - 1, 0);
}

Subset::Subset(std::size_t width, std::initializer_list<ElementId> elements)
    : Subset(width) {
  for (ElementId p : elements) Insert(p);
}

Subset Subset::FromElements(std::size_t width,
                            const std::vector<ElementId>& elements) {
  Subset s(width);
  for (ElementId p : elements) s.Insert(p);
  return s;
}

Subset Subset::FromMask(std::size_t width, std::uint64_t mask) {
  if (width > 64) throw std::invalid_argument("FromMask requires width <= 64");
  if (width < 64 && (mask >> width) != 0) {
    throw std::out_of_range("mask has bits beyond subset width");
  }
  Subset s(width);
  s.first_ = mask;
  return s;
}

Subset Subset::Full(std::size_t width) {
  Subset s(width);
  for (std::size_t w = 0; w < s.WordCount(); ++w) {
    const std::size_t bits = std::min<std::size_t>(64, width - w * 64);
    s.MutableWord(w) =
        bits == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << bits) - 1);
  }
  return s;
}

void Subset::CheckElement(ElementId p) const {
  if (p >= width_) {
    throw std::out_of_range("element " + std::to_string(p) +
                            " outside ground set of size " +
                            std::to_string(width_));
  }
}

void Subset::CheckWidth(const Subset& other) const {
  if (width_ != other.width_) {
    throw std::invalid_argument("subset width mismatch");
  }
}

bool Subset::Contains(ElementId p) const {
  CheckElement(p);
  return (Word(p / 64) >> (p % 64)) & 1u;
}

void Subset::Insert(ElementId p) {
  CheckElement(p);
  MutableWord(p / 64) |= std::uint64_t{1} << (p % 64);
}

void Subset::Erase(ElementId p) {
  CheckElement(p);
  MutableWord(p / 64) &= ~(std::uint64_t{1} << (p % 64));
}

Subset Subset::With(ElementId p) const {
  Subset s = *this;
  s.Insert(p);
  return s;
}

Subset Subset::Without(ElementId p) const {
  Subset s = *this;
  s.Erase(p);
  return s;
}

std::size_t Subset::Count() const {
  std::size_t count = 0;
  for (std::size_t w = 0; w < WordCount(); ++w) {
    count += __builtin_popcountll(Word(w));
  }
  return count;
}

bool Subset::Empty() const {
  for (std::size_t w = 0; w < WordCount(); ++w) {
    if (Word(w) != 0) return false;
  }
  return true;
}

bool Subset::IsSubsetOf(const Subset& other) const {
  CheckWidth(other);
  for (std::size_t w = 0; w < WordCount(); ++w) {
    if ((Word(w) & ~other.Word(w)) != 0) return false;
  }
  return true;
}

Subset& Subset::operator|=(const Subset& other) {
  CheckWidth(other);
  for (std::size_t w = 0; w < WordCount(); ++w) MutableWord(w) |= other.Word(w);
  return *this;
}

Subset& Subset::operator&=(const Subset& other) {
  CheckWidth(other);
  for (std::size_t w = 0; w < WordCount(); ++w) MutableWord(w) &= other.Word(w);
  return *this;
}

Subset& Subset::operator-=(const Subset& other) {
  CheckWidth(other);
  for (std::size_t w = 0; w < WordCount(); ++w) {
    MutableWord(w) &= ~other.Word(w);
  }
  return *this;
}

bool operator==(const Subset& a, const Subset& b) {
  return a.width_ == b.width_ && a.first_ == b.first_ && a.extra_ == b.extra_;
}

std::uint64_t Subset::Mask() const {
  if (width_ > 64) throw std::logic_error("Mask requires width <= 64");
  return first_;
}

std::vector<ElementId> Subset::Elements() const {
  std::vector<ElementId> out;
  out.reserve(Count());
  ForEach([&](ElementId p) { out.push_back(p); });
  return out;
}

bool Subset::LexLess(const Subset& other) const {
  const std::vector<ElementId> a = Elements();
  const std::vector<ElementId> b = other.Elements();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::string Subset::ToString() const {
  std::string out = "{";
  bool first = true;
  ForEach([&](ElementId p) {
    if (!first) out += ",";
    out += std::to_string(p);
    first = false;
  });
  return out + "}";
}

std::size_t Subset::Hash() const {
  std::size_t h = std::hash<std::uint64_t>{}(first_) ^ width_;
  for (std::uint64_t w : extra_) {
    h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) +
         (h >> 2);
  }
  return h;
}

}  // namespace submodular
