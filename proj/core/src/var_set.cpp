#include "dichotomy/var_set.hpp"

#include <algorithm>
#include <bit>

namespace dichotomy {

VarSet::VarSet(std::initializer_list<std::size_t> indices) {
  for (auto i : indices) insert(i);
}

VarSet VarSet::from_indices(const std::vector<std::size_t>& indices) {
  VarSet s;
  for (auto i : indices) s.insert(i);
  return s;
}

VarSet VarSet::from_mask(std::uint64_t mask) {
  VarSet s;
  if (mask) s.words_.push_back(mask);
  return s;
}

bool VarSet::contains(std::size_t i) const {
  std::size_t w = i / 64;
  return w < words_.size() && ((words_[w] >> (i % 64)) & 1u);
}

void VarSet::insert(std::size_t i) {
  std::size_t w = i / 64;
  if (w >= words_.size()) words_.resize(w + 1, 0);
  words_[w] |= std::uint64_t{1} << (i % 64);
}

void VarSet::erase(std::size_t i) {
  std::size_t w = i / 64;
  if (w >= words_.size()) return;
  words_[w] &= ~(std::uint64_t{1} << (i % 64));
  trim();
}

std::size_t VarSet::size() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::size_t VarSet::bound() const {
  if (words_.empty()) return 0;
  return (words_.size() - 1) * 64 + (64 - static_cast<std::size_t>(std::countl_zero(words_.back())));
}

std::vector<std::size_t> VarSet::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    auto bits = words_[w];
    while (bits) {
      out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

bool VarSet::intersects(const VarSet& other) const {
  auto n = std::min(words_.size(), other.words_.size());
  for (std::size_t i = 0; i < n; ++i)
    if (words_[i] & other.words_[i]) return true;
  return false;
}

VarSet VarSet::operator|(const VarSet& other) const {
  VarSet out = words_.size() >= other.words_.size() ? *this : other;
  const VarSet& small = words_.size() >= other.words_.size() ? other : *this;
  for (std::size_t i = 0; i < small.words_.size(); ++i) out.words_[i] |= small.words_[i];
  return out;
}

VarSet VarSet::operator&(const VarSet& other) const {
  VarSet out;
  auto n = std::min(words_.size(), other.words_.size());
  out.words_.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.words_[i] = words_[i] & other.words_[i];
  out.trim();
  return out;
}

VarSet VarSet::operator-(const VarSet& other) const {
  VarSet out = *this;
  auto n = std::min(words_.size(), other.words_.size());
  for (std::size_t i = 0; i < n; ++i) out.words_[i] &= ~other.words_[i];
  out.trim();
  return out;
}

// With equal cardinalities, the set holding the lowest differing index
// comes first in lexicographic order of sorted index lists.
std::strong_ordering VarSet::operator<=>(const VarSet& other) const {
  auto a = size(), b = other.size();
  if (a != b) return a <=> b;
  auto n = std::max(words_.size(), other.words_.size());
  for (std::size_t i = 0; i < n; ++i) {
    auto x = i < words_.size() ? words_[i] : 0;
    auto y = i < other.words_.size() ? other.words_[i] : 0;
    if (x == y) continue;
    auto low = (x ^ y) & ~((x ^ y) - 1);
    return (x & low) ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

void VarSet::trim() {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

}  // namespace dichotomy
