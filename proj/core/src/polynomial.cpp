#include "dichotomy/polynomial.hpp"

#include <sstream>

#include "dichotomy/errors.hpp"

namespace dichotomy {

MultilinearPoly MultilinearPoly::constant(std::size_t num_vars, const Rational& c) {
  return monomial(num_vars, VarSet{}, c);
}

MultilinearPoly MultilinearPoly::variable(std::size_t num_vars, std::size_t index) {
  return monomial(num_vars, VarSet{index});
}

MultilinearPoly MultilinearPoly::monomial(std::size_t num_vars, VarSet vars, const Rational& c) {
  MultilinearPoly p(num_vars);
  p.add_term(vars, c);
  return p;
}

std::size_t MultilinearPoly::degree() const {
  // Graded order: the last term has the largest cardinality.
  return terms_.empty() ? 0 : terms_.rbegin()->first.size();
}

Rational MultilinearPoly::coefficient(const VarSet& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultilinearPoly::add_term(const VarSet& m, const Rational& c) {
  if (m.bound() > num_vars_)
    throw PreconditionError("monomial refers to a variable beyond num_vars");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultilinearPoly MultilinearPoly::widened(std::size_t num_vars) const {
  if (num_vars < num_vars_) throw PreconditionError("cannot narrow a polynomial");
  MultilinearPoly p = *this;
  p.num_vars_ = num_vars;
  return p;
}

Rational MultilinearPoly::evaluate(std::span<const Rational> point) const {
  if (point.size() != num_vars_) throw PreconditionError("point length does not match num_vars");
  Rational sum = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (auto i : m.indices()) t *= point[i];
    sum += t;
  }
  return sum;
}

MultilinearPoly MultilinearPoly::operator+(const MultilinearPoly& other) const {
  if (num_vars_ != other.num_vars_) throw PreconditionError("num_vars mismatch in add");
  MultilinearPoly p = *this;
  for (const auto& [m, c] : other.terms_) p.add_term(m, c);
  return p;
}

MultilinearPoly MultilinearPoly::operator-(const MultilinearPoly& other) const {
  return *this + other.scaled(-1);
}

MultilinearPoly MultilinearPoly::operator*(const MultilinearPoly& other) const {
  MultilinearPoly p(std::max(num_vars_, other.num_vars_));
  for (const auto& [a, ca] : terms_)
    for (const auto& [b, cb] : other.terms_) {
      if (a.intersects(b)) throw PreconditionError("product would square a variable");
      p.add_term(a | b, ca * cb);
    }
  return p;
}

MultilinearPoly MultilinearPoly::scaled(const Rational& c) const {
  MultilinearPoly p(num_vars_);
  if (c == 0) return p;
  for (const auto& [m, coeff] : terms_) p.terms_.emplace(m, coeff * c);
  return p;
}

Evaluator as_evaluator(MultilinearPoly p) {
  return [p = std::move(p)](std::span<const Rational> x) { return p.evaluate(x); };
}

namespace {

// Row `delta` of the inverse of V[t][k] = t^k, t, k = 0..d, by Gauss-Jordan.
std::vector<Rational> vandermonde_inverse_row(std::size_t d, std::size_t delta) {
  const std::size_t n = d + 1;
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n, Rational(0)));
  for (std::size_t t = 0; t < n; ++t) {
    Rational power = 1;
    for (std::size_t k = 0; k < n; ++k) {
      a[t][k] = power;
      power *= static_cast<long>(t);
    }
    a[t][n + t] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (a[pivot][col] == 0) ++pivot;
    std::swap(a[pivot], a[col]);
    Rational inv = 1 / a[col][col];
    for (auto& v : a[col]) v *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational factor = a[r][col];
      for (std::size_t k = 0; k < 2 * n; ++k) a[r][k] -= factor * a[col][k];
    }
  }
  return {a[delta].begin() + static_cast<long>(n), a[delta].end()};
}

}  // namespace

Evaluator homogeneous_component(Evaluator f, std::size_t num_vars, std::size_t degree_bound,
                                std::size_t delta) {
  if (delta > degree_bound) throw PreconditionError("delta exceeds the degree bound");
  auto weights = vandermonde_inverse_row(degree_bound, delta);
  return [f = std::move(f), weights = std::move(weights), num_vars](std::span<const Rational> x) {
    if (x.size() != num_vars) throw PreconditionError("point length does not match num_vars");
    Rational sum = 0;
    std::vector<Rational> scaled(x.size());
    for (std::size_t t = 0; t < weights.size(); ++t) {
      if (weights[t] == 0) continue;
      for (std::size_t i = 0; i < x.size(); ++i) scaled[i] = x[i] * static_cast<long>(t);
      sum += weights[t] * f(scaled);
    }
    return sum;
  };
}

Evaluator linear_coefficient(Evaluator f, std::size_t var) {
  return [f = std::move(f), var](std::span<const Rational> x) -> Rational {
    if (var >= x.size()) throw PreconditionError("variable index beyond the point");
    std::vector<Rational> y(x.begin(), x.end());
    y[var] = 1;
    Rational with = f(y);
    y[var] = 0;
    return with - f(y);
  };
}

std::string serialize(const MultilinearPoly& p) {
  std::ostringstream out;
  for (const auto& [m, c] : p.terms()) {
    out << to_string(c) << " :";
    for (auto i : m.indices()) out << ' ' << i + 1;
    out << '\n';
  }
  return out.str();
}

MultilinearPoly parse_polynomial(std::string_view text, std::size_t num_vars) {
  MultilinearPoly p(num_vars);
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) throw ParseError("expected '<coeff> : <indices>'", lineno);
    std::istringstream coeff_in(line.substr(0, colon));
    std::string coeff;
    coeff_in >> coeff;
    Rational c;
    try {
      c = parse_rational(coeff);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), lineno);
    }
    std::istringstream idx_in(line.substr(colon + 1));
    VarSet m;
    long idx;
    while (idx_in >> idx) {
      if (idx < 1 || static_cast<std::size_t>(idx) > num_vars)
        throw ParseError("variable index out of range", lineno);
      if (m.contains(static_cast<std::size_t>(idx - 1)))
        throw ParseError("repeated variable in monomial", lineno);
      m.insert(static_cast<std::size_t>(idx - 1));
    }
    if (!idx_in.eof()) throw ParseError("malformed index list", lineno);
    if (p.terms().count(m)) throw ParseError("duplicate monomial", lineno);
    p.add_term(m, c);
  }
  return p;
}

std::string to_display(const MultilinearPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Rational mag = abs(c);
    if (!first) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << '-';
    first = false;
    auto idx = m.indices();
    bool show_coeff = idx.empty() || mag != 1;
    if (show_coeff) out << to_string(mag);
    for (std::size_t k = 0; k < idx.size(); ++k)
      out << ((k == 0 && !show_coeff) ? "" : "*") << 'X' << idx[k] + 1;
  }
  return out.str();
}

}  // namespace dichotomy
