#include "dichotomy/implement.hpp"

#include <algorithm>
#include <set>

#include "dichotomy/errors.hpp"

namespace dichotomy {

Implementation Implementation::identity(const Relation& target) {
  Formula f(static_cast<std::size_t>(target.rank()));
  std::vector<std::size_t> args(f.num_vars());
  for (std::size_t i = 0; i < args.size(); ++i) args[i] = i;
  f.add_constraint(target, args);
  return {target, std::move(f)};
}

Certificate certify(const Implementation& impl) {
  const auto k = impl.num_function_vars();
  const auto m = impl.num_aux();
  if (k + m > kMaxImplementationVars)
    throw BoundExceeded("implementation check is limited to " + std::to_string(kMaxImplementationVars) + " variables");
  const auto& f = impl.constraints;
  const auto alpha = impl.alpha();
  Certificate cert{true, {}};
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << k); ++x) {
    CertificateRow row{static_cast<Relation::Tuple>(x), impl.target.accepts(static_cast<Relation::Tuple>(x)), 0, 0,
                       false};
    for (std::uint64_t y = 0; y < (std::uint64_t{1} << m); ++y) {
      auto mask = x | (y << k);
      std::size_t sat = 0;
      for (const auto& c : f.constraints()) sat += f.satisfies(c, mask) ? 1 : 0;
      if (sat == alpha) ++row.full_extensions;
      row.max_satisfied = std::max(row.max_satisfied, sat);
    }
    row.ok = row.target_accepts ? row.full_extensions == 1 : row.max_satisfied + 1 <= alpha;
    cert.perfect_faithful = cert.perfect_faithful && row.ok;
    cert.rows.push_back(row);
  }
  return cert;
}

bool check_perfect_faithful(const Implementation& impl) { return certify(impl).perfect_faithful; }

namespace {

struct Atom {
  std::size_t relation;
  std::vector<std::size_t> args;
  std::vector<std::uint64_t> sat;  // bitmap over all 2^v assignments
};

bool test_bit(const std::vector<std::uint64_t>& bits, std::size_t i) { return (bits[i / 64] >> (i % 64)) & 1u; }

class Search {
 public:
  Search(const Relation& target, const std::vector<Relation>& available, std::size_t num_aux, std::size_t alpha)
      : target_(target), available_(available), k_(static_cast<std::size_t>(target.rank())), m_(num_aux),
        v_(k_ + num_aux), alpha_(alpha), words_(((std::size_t{1} << v_) + 63) / 64) {
    Formula probe(v_);
    for (std::size_t r = 0; r < available.size(); ++r) {
      auto rel = probe.add_relation(available[r]);
      auto rank = static_cast<std::size_t>(available[r].rank());
      std::vector<std::size_t> args(rank, 0);
      // Argument tuples in lexicographic order (first argument most significant).
      while (true) {
        Atom a{r, args, std::vector<std::uint64_t>(words_, 0)};
        Constraint c{rel, args};
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << v_); ++mask)
          if (probe.satisfies(c, mask)) a.sat[mask / 64] |= std::uint64_t{1} << (mask % 64);
        atoms_.push_back(std::move(a));
        std::size_t pos = rank;
        while (pos > 0 && args[pos - 1] + 1 == v_) args[--pos] = 0;
        if (pos == 0) break;
        ++args[pos - 1];
      }
    }
  }

  std::optional<Implementation> run() {
    chosen_.clear();
    std::vector<std::uint64_t> all(words_, ~std::uint64_t{0});
    if (rec(0, all)) return build();
    return std::nullopt;
  }

 private:
  // Every accepted x keeps at least one extension satisfying the constraints
  // chosen so far; adding constraints can only remove extensions.
  bool extensions_survive(const std::vector<std::uint64_t>& conj) const {
    for (auto x : target_.accepted()) {
      bool any = false;
      for (std::uint64_t y = 0; y < (std::uint64_t{1} << m_) && !any; ++y)
        any = test_bit(conj, x | (y << k_));
      if (!any) return false;
    }
    return true;
  }

  bool rec(std::size_t first, const std::vector<std::uint64_t>& conj) {
    if (chosen_.size() == alpha_) return accept();
    for (std::size_t a = first; a < atoms_.size(); ++a) {
      std::vector<std::uint64_t> next(words_);
      for (std::size_t w = 0; w < words_; ++w) next[w] = conj[w] & atoms_[a].sat[w];
      if (!extensions_survive(next)) continue;
      chosen_.push_back(a);
      if (rec(a, next)) return true;
      chosen_.pop_back();
    }
    return false;
  }

  bool accept() const {
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << k_); ++x) {
      bool accepted = target_.accepts(static_cast<Relation::Tuple>(x));
      std::size_t full = 0;
      std::size_t best = 0;
      for (std::uint64_t y = 0; y < (std::uint64_t{1} << m_); ++y) {
        auto mask = x | (y << k_);
        std::size_t sat = 0;
        for (auto a : chosen_) sat += test_bit(atoms_[a].sat, mask) ? 1 : 0;
        if (sat == alpha_) ++full;
        best = std::max(best, sat);
      }
      if (accepted ? full != 1 : best + 1 > alpha_) return false;
    }
    return true;
  }

  Implementation build() const {
    Formula f(v_);
    for (auto a : chosen_) f.add_constraint(available_[atoms_[a].relation], atoms_[a].args);
    return {target_, std::move(f)};
  }

  const Relation& target_;
  const std::vector<Relation>& available_;
  std::size_t k_, m_, v_, alpha_, words_;
  std::vector<Atom> atoms_;
  std::vector<std::size_t> chosen_;
};

}  // namespace

std::optional<Implementation> search_implementation(const Relation& target, const std::vector<Relation>& available,
                                                    const SearchBounds& bounds) {
  const auto k = static_cast<std::size_t>(target.rank());
  for (std::size_t aux = 0; aux <= bounds.max_aux && k + aux <= bounds.max_vars; ++aux)
    for (std::size_t alpha = 1; alpha <= bounds.max_constraints; ++alpha) {
      Search s(target, available, aux, alpha);
      if (auto found = s.run()) return found;
    }
  return std::nullopt;
}

Formula substitute(const Formula& f, const ImplementationTable& table) {
  Formula out(f.num_vars());
  for (const auto& c : f.constraints()) {
    const auto& r = f.relation_of(c);
    auto it = table.find(r.name());
    if (it == table.end()) throw PreconditionError("no implementation for relation '" + r.name() + "'");
    const auto& impl = it->second;
    if (!impl.target.same_tuples(r))
      throw PreconditionError("implementation target does not match relation '" + r.name() + "'");
    const auto k = impl.num_function_vars();
    const auto first_aux = out.add_variables(impl.num_aux());
    for (const auto& ic : impl.constraints.constraints()) {
      std::vector<std::size_t> args;
      for (auto a : ic.args) args.push_back(a < k ? c.args[a] : first_aux + (a - k));
      out.add_constraint(impl.constraints.relation_of(ic), std::move(args));
    }
  }
  return out;
}

FalseElimination eliminate_false(const Formula& f) {
  const Relation never = rel::never();
  FalseElimination out{Formula(f.num_vars()), {}};
  std::set<std::size_t> zeros;
  for (const auto& c : f.constraints()) {
    const auto& r = f.relation_of(c);
    if (r.same_tuples(never))
      zeros.insert(c.args[0]);
    else
      out.formula.add_constraint(r, c.args);
  }
  out.zero_set.assign(zeros.begin(), zeros.end());
  return out;
}

}  // namespace dichotomy
