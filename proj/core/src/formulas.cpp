#include "dichotomy/formulas.hpp"

#include <algorithm>

#include "dichotomy/errors.hpp"

namespace dichotomy {

std::size_t Formula::add_relation(const Relation& r) {
  if (auto idx = find_relation(r.name())) {
    if (!relations_[*idx].same_tuples(r))
      throw PreconditionError("relation '" + r.name() + "' already defined with other tuples");
    return *idx;
  }
  relations_.push_back(r);
  return relations_.size() - 1;
}

std::optional<std::size_t> Formula::find_relation(std::string_view name) const {
  for (std::size_t i = 0; i < relations_.size(); ++i)
    if (relations_[i].name() == name) return i;
  return std::nullopt;
}

void Formula::add_constraint(std::size_t relation, std::vector<std::size_t> args) {
  if (relation >= relations_.size()) throw PreconditionError("unknown relation index");
  if (args.size() != static_cast<std::size_t>(relations_[relation].rank()))
    throw PreconditionError("relation '" + relations_[relation].name() + "' expects " +
                            std::to_string(relations_[relation].rank()) + " arguments");
  for (auto a : args)
    if (a >= num_vars_) throw PreconditionError("constraint argument out of range");
  constraints_.push_back({relation, std::move(args)});
}

std::size_t Formula::add_variables(std::size_t count) {
  auto first = num_vars_;
  num_vars_ += count;
  return first;
}

std::vector<Relation> Formula::used_relations() const {
  std::vector<bool> used(relations_.size(), false);
  for (const auto& c : constraints_) used[c.relation] = true;
  std::vector<Relation> out;
  for (std::size_t i = 0; i < relations_.size(); ++i)
    if (used[i]) out.push_back(relations_[i]);
  return out;
}

bool Formula::satisfies(const Constraint& c, std::uint64_t assignment) const {
  Relation::Tuple t = 0;
  for (std::size_t i = 0; i < c.args.size(); ++i)
    t |= static_cast<Relation::Tuple>((assignment >> c.args[i]) & 1u) << i;
  return relations_[c.relation].accepts(t);
}

bool Formula::operator==(const Formula& other) const {
  if (num_vars_ != other.num_vars_ || constraints_.size() != other.constraints_.size()) return false;
  for (std::size_t i = 0; i < constraints_.size(); ++i) {
    const auto& a = constraints_[i];
    const auto& b = other.constraints_[i];
    if (a.args != b.args || relations_[a.relation].name() != other.relations_[b.relation].name() ||
        !relations_[a.relation].same_tuples(other.relations_[b.relation]))
      return false;
  }
  return true;
}

namespace {

template <class Bits>
bool eval_impl(const Formula& f, const Bits& assignment) {
  if (assignment.size() != f.num_vars()) throw PreconditionError("assignment length mismatch");
  for (const auto& c : f.constraints()) {
    Relation::Tuple t = 0;
    for (std::size_t i = 0; i < c.args.size(); ++i)
      if (assignment[c.args[i]]) t |= Relation::Tuple{1} << i;
    if (!f.relation_of(c).accepts(t)) return false;
  }
  return true;
}

}  // namespace

bool eval_assignment(const Formula& f, std::span<const bool> assignment) { return eval_impl(f, assignment); }

bool eval_assignment(const Formula& f, const std::vector<bool>& assignment) {
  return eval_impl(f, assignment);
}

namespace {

// Depth-first enumeration over the constrained variables in index order. A
// constraint is checked as soon as its largest argument is assigned.
// Variables occurring in no constraint are left to the caller.
class Enumerator {
 public:
  explicit Enumerator(const Formula& f) : f_(f) {
    if (f.num_vars() > kMaxEnumVars)
      throw BoundExceeded("enumeration is limited to " + std::to_string(kMaxEnumVars) + " variables");
    std::vector<bool> used(f.num_vars(), false);
    for (const auto& c : f.constraints())
      for (auto a : c.args) used[a] = true;
    for (std::size_t v = 0; v < f.num_vars(); ++v) (used[v] ? active_ : free_).push_back(v);
    std::vector<std::size_t> pos(f.num_vars(), 0);
    for (std::size_t k = 0; k < active_.size(); ++k) pos[active_[k]] = k;
    checks_.resize(active_.size());
    for (const auto& c : f.constraints()) {
      auto last = *std::max_element(c.args.begin(), c.args.end());
      checks_[pos[last]].push_back(&c);
    }
  }

  const std::vector<std::size_t>& free_vars() const { return free_; }

  /// visit(mask) at each satisfying assignment of the active variables;
  /// enter/leave(var) bracket the subtree where var is set to 1.
  template <class Leaf, class Enter, class Leave>
  void run(Leaf&& leaf, Enter&& enter, Leave&& leave) const {
    dfs(0, 0, leaf, enter, leave);
  }

 private:
  template <class Leaf, class Enter, class Leave>
  void dfs(std::size_t depth, std::uint64_t mask, Leaf& leaf, Enter& enter, Leave& leave) const {
    if (depth == active_.size()) {
      leaf(mask);
      return;
    }
    auto v = active_[depth];
    for (int value = 0; value < 2; ++value) {
      std::uint64_t m = value ? (mask | (std::uint64_t{1} << v)) : mask;
      bool ok = true;
      for (const auto* c : checks_[depth])
        if (!f_.satisfies(*c, m)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      if (value) enter(v);
      dfs(depth + 1, m, leaf, enter, leave);
      if (value) leave(v);
    }
  }

  const Formula& f_;
  std::vector<std::size_t> active_, free_;
  std::vector<std::vector<const Constraint*>> checks_;
};

}  // namespace

void for_each_satisfying(const Formula& f, const std::function<void(std::uint64_t)>& visit) {
  Enumerator e(f);
  std::vector<std::uint64_t> masks;
  const auto& free = e.free_vars();
  e.run(
      [&](std::uint64_t mask) {
        for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << free.size()); ++sub) {
          std::uint64_t m = mask;
          for (std::size_t k = 0; k < free.size(); ++k)
            if ((sub >> k) & 1u) m |= std::uint64_t{1} << free[k];
          masks.push_back(m);
        }
      },
      [](std::size_t) {}, [](std::size_t) {});
  std::sort(masks.begin(), masks.end());
  for (auto m : masks) visit(m);
}

BigInt count_sat(const Formula& f) {
  Enumerator e(f);
  BigInt n = 0;
  e.run([&](std::uint64_t) { ++n; }, [](std::size_t) {}, [](std::size_t) {});
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 2, e.free_vars().size());
  return n * scale;
}

MultilinearPoly poly_of_formula(const Formula& f) {
  MultilinearPoly p(f.num_vars());
  for_each_satisfying(f, [&](std::uint64_t mask) { p.add_term(VarSet::from_mask(mask), 1); });
  return p;
}

Rational eval_formula_poly(const Formula& f, std::span<const Rational> point) {
  if (point.size() != f.num_vars()) throw PreconditionError("point length does not match num_vars");
  Enumerator e(f);
  Rational sum = 0;
  std::vector<Rational> products{Rational(1)};
  e.run([&](std::uint64_t) { sum += products.back(); },
        [&](std::size_t v) { products.push_back(products.back() * point[v]); },
        [&](std::size_t) { products.pop_back(); });
  for (auto v : e.free_vars()) sum *= 1 + point[v];
  return sum;
}

}  // namespace dichotomy
