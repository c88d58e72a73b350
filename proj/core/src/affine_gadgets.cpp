#include "dichotomy/affine_gadgets.hpp"

#include <algorithm>

#include "dichotomy/errors.hpp"

namespace dichotomy {

Formula to_formula(const AffineFormula& f) {
  Formula out(f.num_vars);
  for (const auto& c : f.constraints) {
    if (c.vars.empty()) throw PreconditionError("affine constraint without variables");
    out.add_constraint(rel::parity(static_cast<int>(c.vars.size()), c.constant), c.vars);
  }
  return out;
}

AffineFormula build_phi_n(std::size_t n) {
  if (n < 1) throw PreconditionError("phi_n needs n >= 1");
  AffineFormula f{n * n, {}};
  for (std::size_t i = 0; i < n; ++i) {
    AffineConstraint row{{}, true};
    for (std::size_t j = 0; j < n; ++j) row.vars.push_back(i * n + j);
    f.constraints.push_back(std::move(row));
  }
  for (std::size_t j = 0; j < n; ++j) {
    AffineConstraint col{{}, true};
    for (std::size_t i = 0; i < n; ++i) col.vars.push_back(i * n + j);
    f.constraints.push_back(std::move(col));
  }
  return f;
}

Rational permanent_via_hom(const RationalMatrix& m) {
  const auto n = m.size();
  if (n < 1 || n > 3) throw BoundExceeded("permanent_via_hom is limited to 1 <= n <= 3");
  auto phi = to_formula(build_phi_n(n));
  Evaluator p = [phi](std::span<const Rational> x) { return eval_formula_poly(phi, x); };
  auto hom = homogeneous_component(p, n * n, n * n, n);
  return hom(m.data());
}

std::vector<Rational> GadgetResult::extend(std::span<const Rational> point) const {
  if (point.size() != old_num_vars) throw PreconditionError("point length does not match the original formula");
  std::vector<Rational> out(point.begin(), point.end());
  for (auto v : aux_values) out.emplace_back(v);
  return out;
}

ShiftResult shift_constants(const AffineFormula& f) {
  ShiftResult out{f, f.num_vars};
  out.formula.num_vars += 1;
  for (auto& c : out.formula.constraints)
    if (c.constant) {
      c.vars.push_back(out.a);
      c.constant = false;
    }
  return out;
}

GadgetResult chain_decompose(const AffineFormula& f) {
  GadgetResult out{{f.num_vars, {}}, f.num_vars, {}};
  for (const auto& c : f.constraints) {
    if (c.constant) throw PreconditionError("chain decomposition needs constant-0 equations");
    const auto k = c.vars.size();
    if (k <= 3) {
      out.formula.constraints.push_back(c);
      continue;
    }
    // (x1 ^ x2 ^ a1), (a1 ^ x3 ^ a2), ..., (a_{k-3} ^ x_{k-1} ^ x_k)
    std::size_t prev = out.formula.num_vars++;
    out.aux_values.push_back(1);
    out.formula.constraints.push_back({{c.vars[0], c.vars[1], prev}, false});
    for (std::size_t i = 2; i + 2 < k; ++i) {
      std::size_t next = out.formula.num_vars++;
      out.aux_values.push_back(1);
      out.formula.constraints.push_back({{prev, c.vars[i], next}, false});
      prev = next;
    }
    out.formula.constraints.push_back({{prev, c.vars[k - 2], c.vars[k - 1]}, false});
  }
  return out;
}

GadgetResult ternary0_to_ternary1(const AffineFormula& f) {
  GadgetResult out{{f.num_vars, {}}, f.num_vars, {}};
  for (const auto& c : f.constraints) {
    if (c.vars.size() != 3 || c.constant) throw PreconditionError("expected x ^ y ^ z = 0 equations");
    std::size_t a = out.formula.num_vars++;
    std::size_t b = out.formula.num_vars++;
    out.aux_values.push_back(1);
    out.aux_values.push_back(0);
    out.formula.constraints.push_back({{c.vars[0], c.vars[1], a}, true});
    out.formula.constraints.push_back({{a, c.vars[2], b}, true});
  }
  return out;
}

GadgetResult pad_to_relation(const AffineFormula& f, std::size_t k, bool constant) {
  if (k < 3) throw PreconditionError("target arity must be at least 3");
  GadgetResult out{{f.num_vars, {}}, f.num_vars, {}};
  for (const auto& c : f.constraints) {
    if (c.vars.size() != 3) throw PreconditionError("padding expects ternary equations");
    if (c.constant != constant) throw PreconditionError("equation constant does not match the target");
    AffineConstraint padded = c;
    for (std::size_t i = 3; i < k; ++i) {
      padded.vars.push_back(out.formula.num_vars++);
      out.aux_values.push_back(0);
    }
    out.formula.constraints.push_back(std::move(padded));
  }
  return out;
}

}  // namespace dichotomy
