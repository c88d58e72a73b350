#include "dichotomy/relations.hpp"

#include <algorithm>
#include <bit>
#include <charconv>

#include "dichotomy/errors.hpp"
#include "parity_union_find.hpp"

namespace dichotomy {

Relation::Relation(std::string name, int rank, std::vector<Tuple> accepted)
    : name_(std::move(name)), rank_(rank), accepted_(std::move(accepted)) {
  if (rank_ < 1 || rank_ > kMaxRank)
    throw PreconditionError("relation '" + name_ + "': rank must lie in [1, 16]");
  std::sort(accepted_.begin(), accepted_.end());
  if (std::adjacent_find(accepted_.begin(), accepted_.end()) != accepted_.end())
    throw PreconditionError("relation '" + name_ + "': duplicate tuple");
  table_.assign(std::size_t{1} << rank_, 0);
  for (auto t : accepted_) {
    if (t >> rank_) throw PreconditionError("relation '" + name_ + "': tuple wider than rank");
    table_[t] = 1;
  }
}

std::string tuple_to_bits(Relation::Tuple t, int rank) {
  std::string s(static_cast<std::size_t>(rank), '0');
  for (int i = 0; i < rank; ++i)
    if ((t >> i) & 1u) s[static_cast<std::size_t>(i)] = '1';
  return s;
}

std::string to_string(const Width2Constraint& c) {
  auto x = [](std::size_t i) { return "x" + std::to_string(i + 1); };
  switch (c.kind) {
    case Width2Kind::Zero: return x(c.first) + "=0";
    case Width2Kind::One: return x(c.first) + "=1";
    case Width2Kind::Equal: return x(c.first) + "=" + x(c.second);
    case Width2Kind::NotEqual: return x(c.first) + "!=" + x(c.second);
  }
  return {};
}

// Affine iff |accepted| equals the size of the affine span of accepted,
// i.e. 2^dim of the linear span of {a ^ a0}.
bool is_affine(const Relation& r) {
  const auto& acc = r.accepted();
  if (acc.empty()) return true;
  std::vector<Relation::Tuple> basis(static_cast<std::size_t>(r.rank()), 0);
  std::size_t dim = 0;
  for (auto a : acc) {
    auto v = a ^ acc.front();
    for (int bit = r.rank() - 1; bit >= 0 && v; --bit) {
      if (!((v >> bit) & 1u)) continue;
      auto& slot = basis[static_cast<std::size_t>(bit)];
      if (!slot) {
        slot = v;
        ++dim;
        break;
      }
      v ^= slot;
    }
  }
  return acc.size() == (std::size_t{1} << dim);
}

std::vector<Width2Constraint> implied_width2_constraints(const Relation& r) {
  const auto& acc = r.accepted();
  const auto k = static_cast<std::size_t>(r.rank());
  auto bit = [](Relation::Tuple t, std::size_t i) { return (t >> i) & 1u; };
  std::vector<Width2Constraint> out;
  for (std::size_t i = 0; i < k; ++i) {
    if (std::all_of(acc.begin(), acc.end(), [&](auto t) { return bit(t, i) == 0; }))
      out.push_back({Width2Kind::Zero, i});
    if (std::all_of(acc.begin(), acc.end(), [&](auto t) { return bit(t, i) == 1; }))
      out.push_back({Width2Kind::One, i});
  }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      if (std::all_of(acc.begin(), acc.end(), [&](auto t) { return bit(t, i) == bit(t, j); }))
        out.push_back({Width2Kind::Equal, i, j});
      if (std::all_of(acc.begin(), acc.end(), [&](auto t) { return bit(t, i) != bit(t, j); }))
        out.push_back({Width2Kind::NotEqual, i, j});
    }
  return out;
}

// The implied constraints always contain `accepted`, so comparing the
// solution count of their conjunction with |accepted| decides equality.
bool is_width2_expressible(const Relation& r) {
  const auto k = static_cast<std::size_t>(r.rank());
  detail::ParityUnionFind uf(k);
  for (const auto& c : implied_width2_constraints(r)) {
    switch (c.kind) {
      case Width2Kind::Zero: uf.force(c.first, 0); break;
      case Width2Kind::One: uf.force(c.first, 1); break;
      case Width2Kind::Equal: uf.relate(c.first, c.second, 0); break;
      case Width2Kind::NotEqual: uf.relate(c.first, c.second, 1); break;
    }
  }
  if (!uf.consistent) return r.accepted().empty();
  std::size_t free_components = 0;
  for (std::size_t v = 0; v < k; ++v)
    if (uf.find(v) == v && uf.forced_root_value(v) < 0) ++free_components;
  return r.accepted().size() == (std::size_t{1} << free_components);
}

Classification classify(std::span<const Relation> relations) {
  if (relations.empty()) throw PreconditionError("classify needs a nonempty relation set");
  Classification out{Verdict::Easy, std::nullopt, {}};
  for (const auto& r : relations)
    if (!is_affine(r)) {
      out.verdict = Verdict::Hard;
      out.witness = Witness{WitnessKind::NonAffine, r.name()};
      return out;
    }
  for (const auto& r : relations)
    if (!is_width2_expressible(r)) {
      out.verdict = Verdict::Hard;
      out.witness = Witness{WitnessKind::WideAffine, r.name()};
      return out;
    }
  for (const auto& r : relations) out.easy_decomposition.emplace_back(r.name(), implied_width2_constraints(r));
  return out;
}

namespace rel {

namespace {
bool bit(Relation::Tuple t, int i) { return (t >> i) & 1u; }
}  // namespace

Relation or0() { return Relation::from_predicate("OR0", 2, [](auto t) { return bit(t, 0) || bit(t, 1); }); }
Relation or1() { return Relation::from_predicate("OR1", 2, [](auto t) { return !bit(t, 0) || bit(t, 1); }); }
Relation or2() { return Relation::from_predicate("OR2", 2, [](auto t) { return !bit(t, 0) || !bit(t, 1); }); }
Relation clause3() { return Relation::from_predicate("CLAUSE3", 3, [](auto t) { return t != 0; }); }
Relation never() { return Relation("F", 1, {0}); }
Relation equal() { return Relation::from_predicate("EQ", 2, [](auto t) { return bit(t, 0) == bit(t, 1); }); }
Relation not_equal() { return Relation::from_predicate("NEQ", 2, [](auto t) { return bit(t, 0) != bit(t, 1); }); }
Relation zero() { return Relation("ZERO", 1, {0}); }
Relation one() { return Relation("ONE", 1, {1}); }

Relation parity(int k, bool constant) {
  return Relation::from_predicate("xor" + std::to_string(k) + "_" + (constant ? "1" : "0"), k,
                                  [constant](auto t) { return (std::popcount(t) % 2 == 1) == constant; });
}

std::optional<Relation> builtin(std::string_view name) {
  if (name == "OR0") return or0();
  if (name == "OR1") return or1();
  if (name == "OR2") return or2();
  if (name == "CLAUSE3") return clause3();
  if (name == "F") return never();
  if (name == "EQ") return equal();
  if (name == "NEQ") return not_equal();
  if (name == "ZERO") return zero();
  if (name == "ONE") return one();
  if (name.starts_with("xor")) {
    auto us = name.find('_');
    if (us == std::string_view::npos || us + 2 != name.size()) return std::nullopt;
    int k = 0;
    auto digits = name.substr(3, us - 3);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || k < 1 || k > kMaxRank) return std::nullopt;
    char c = name[us + 1];
    if (c != '0' && c != '1') return std::nullopt;
    return parity(k, c == '1');
  }
  return std::nullopt;
}

}  // namespace rel

}  // namespace dichotomy
