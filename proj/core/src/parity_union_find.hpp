#pragma once

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <vector>

namespace dichotomy::detail {

/// Union-find over GF(2) offsets: value(v) = value(find(v)) ^ parity(v).
/// Additionally tracks a forced value per root (-1 when free). Any
/// contradiction clears `consistent`.
class ParityUnionFind {
 public:
  explicit ParityUnionFind(std::size_t n)
      : parent_(n), offset_(n, 0), size_(n, 1), forced_(n, -1) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  /// Root of v; `parity` receives value(v) ^ value(root). Iterative with
  /// full path compression.
  std::size_t find(std::size_t v, std::uint8_t& parity) {
    std::size_t root = v;
    std::uint8_t p = 0;
    while (parent_[root] != root) {
      p ^= offset_[root];
      root = parent_[root];
    }
    std::uint8_t rest = p;
    while (parent_[v] != root) {
      std::size_t next = parent_[v];
      std::uint8_t o = offset_[v];
      parent_[v] = root;
      offset_[v] = rest;
      rest ^= o;
      v = next;
    }
    parity = p;
    return root;
  }

  std::size_t find(std::size_t v) {
    std::uint8_t p;
    return find(v, p);
  }

  /// Records value(u) ^ value(v) = diff.
  void relate(std::size_t u, std::size_t v, std::uint8_t diff) {
    std::uint8_t pu, pv;
    auto ru = find(u, pu), rv = find(v, pv);
    if (ru == rv) {
      if ((pu ^ pv) != diff) consistent = false;
      return;
    }
    if (size_[ru] < size_[rv]) {
      std::swap(ru, rv);
      std::swap(pu, pv);
    }
    // value(rv) = value(ru) ^ pu ^ pv ^ diff
    std::uint8_t link = pu ^ pv ^ diff;
    parent_[rv] = ru;
    offset_[rv] = link;
    size_[ru] += size_[rv];
    if (forced_[rv] >= 0) force_root(ru, static_cast<std::uint8_t>(forced_[rv] ^ link));
  }

  /// Records value(v) = value.
  void force(std::size_t v, std::uint8_t value) {
    std::uint8_t p;
    auto r = find(v, p);
    force_root(r, value ^ p);
  }

  /// Forced value of v's root, or -1.
  int forced_root_value(std::size_t root) const { return forced_[root]; }

  bool consistent = true;

 private:
  void force_root(std::size_t root, std::uint8_t value) {
    if (forced_[root] >= 0 && forced_[root] != value) consistent = false;
    forced_[root] = value;
  }

  std::vector<std::size_t> parent_;
  std::vector<std::uint8_t> offset_;
  std::vector<std::size_t> size_;
  std::vector<int> forced_;
};

}  // namespace dichotomy::detail
