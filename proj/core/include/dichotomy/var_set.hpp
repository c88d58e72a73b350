#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace dichotomy {

/// Growable bitset over variable indices. Trailing zero words are never
/// stored, so equal sets have equal representations.
class VarSet {
 public:
  VarSet() = default;
  VarSet(std::initializer_list<std::size_t> indices);
  static VarSet from_indices(const std::vector<std::size_t>& indices);
  static VarSet from_mask(std::uint64_t mask);

  bool contains(std::size_t i) const;
  void insert(std::size_t i);
  void erase(std::size_t i);

  bool empty() const { return words_.empty(); }
  std::size_t size() const;
  /// One past the highest member, 0 for the empty set.
  std::size_t bound() const;
  std::vector<std::size_t> indices() const;

  bool intersects(const VarSet& other) const;
  VarSet operator|(const VarSet& other) const;
  VarSet operator&(const VarSet& other) const;
  VarSet operator-(const VarSet& other) const;

  bool operator==(const VarSet& other) const = default;

  /// Graded lexicographic order: smaller sets first, then lexicographic on
  /// the sorted index lists.
  std::strong_ordering operator<=>(const VarSet& other) const;

  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  void trim();
  std::vector<std::uint64_t> words_;
};

}  // namespace dichotomy

template <>
struct std::hash<dichotomy::VarSet> {
  std::size_t operator()(const dichotomy::VarSet& s) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (auto w : s.words()) h = (h ^ std::hash<std::uint64_t>{}(w)) * 0x100000001b3ull;
    return h;
  }
};
