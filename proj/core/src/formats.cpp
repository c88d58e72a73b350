#include "dichotomy/formats.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include <json.hpp>

#include "dichotomy/errors.hpp"

namespace dichotomy {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  while (!text.empty()) {
    auto nl = text.find('\n');
    auto raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::istringstream in{std::string(raw)};
    Line line{number, {}};
    for (std::string tok; in >> tok;) line.tokens.push_back(tok);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

std::size_t parse_count(const std::string& tok, std::size_t line) {
  if (tok.empty() || tok.size() > 18 || tok.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError("expected a non-negative integer, got '" + tok + "'", line);
  return std::stoull(tok);
}

std::size_t parse_index(const std::string& tok, std::size_t n, std::size_t line) {
  auto i = parse_count(tok, line);
  if (i < 1 || i > n) throw ParseError("index " + tok + " out of range 1.." + std::to_string(n), line);
  return i - 1;
}

void expect_arity(const Line& l, std::size_t count) {
  if (l.tokens.size() != count)
    throw ParseError("expected " + std::to_string(count) + " fields on '" + l.tokens[0] + "' line", l.number);
}

std::size_t expect_header(const std::vector<Line>& lines, const std::string& kind, std::size_t fields) {
  if (lines.empty() || lines[0].tokens[0] != "p" || lines[0].tokens.size() < 2 || lines[0].tokens[1] != kind)
    throw ParseError("missing 'p " + kind + "' header", lines.empty() ? 0 : lines[0].number);
  expect_arity(lines[0], fields);
  return 1;
}

Weight weight_at(const std::string& tok, std::size_t line) {
  try {
    return parse_weight(tok);
  } catch (const ParseError& e) {
    throw ParseError(e.what(), line);
  }
}

// Parses the graph body and hands unknown lines to `extra`.
template <class Extra>
WeightedGraph parse_graph_lines(const std::vector<Line>& lines, Extra extra) {
  expect_header(lines, "graph", 4);
  const auto n = parse_count(lines[0].tokens[2], lines[0].number);
  const auto m = parse_count(lines[0].tokens[3], lines[0].number);
  WeightedGraph g(n);
  std::vector<char> seen(n, 0);
  std::size_t edges = 0;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto& l = lines[k];
    const auto& head = l.tokens[0];
    if (head == "v") {
      expect_arity(l, 3);
      auto v = parse_index(l.tokens[1], n, l.number);
      if (seen[v]) throw ParseError("vertex " + l.tokens[1] + " listed twice", l.number);
      seen[v] = 1;
      g.set_weight(v, weight_at(l.tokens[2], l.number));
    } else if (head == "e") {
      expect_arity(l, 3);
      g.add_edge(parse_index(l.tokens[1], n, l.number), parse_index(l.tokens[2], n, l.number));
      ++edges;
    } else if (!extra(l)) {
      throw ParseError("unexpected line starting with '" + head + "'", l.number);
    }
  }
  if (edges != m)
    throw ParseError("header announces " + std::to_string(m) + " edges, found " + std::to_string(edges),
                     lines[0].number);
  return g;
}

nlohmann::json provenance_to_json(const Provenance& p) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < p.source.size(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < p.source.size(); ++j) row.push_back(to_string(p.source(i, j)));
    rows.push_back(std::move(row));
  }
  return {{"source", rows}, {"steps", p.steps}};
}

Provenance provenance_from_json(const std::string& text, std::size_t line) {
  try {
    auto j = nlohmann::json::parse(text);
    Provenance p;
    const auto& rows = j.at("source");
    const auto n = rows.size();
    p.source = RationalMatrix(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
      if (rows[i].size() != n) throw ParseError("provenance source is not square", line);
      for (std::size_t k = 0; k < n; ++k) p.source(i, k) = parse_rational(rows[i][k].get<std::string>());
    }
    p.steps = j.at("steps").get<std::vector<std::string>>();
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad provenance: ") + e.what(), line);
  } catch (const ParseError& e) {
    throw ParseError(e.what(), line);
  }
}

}  // namespace

std::string weight_to_string(const Weight& w) {
  if (is_symbol(w)) return "X" + std::to_string(std::get<Symbol>(w).var + 1);
  return to_string(std::get<Rational>(w));
}

Weight parse_weight(std::string_view text) {
  if (!text.empty() && text[0] == 'X') {
    auto digits = std::string(text.substr(1));
    auto k = parse_count(digits, 0);
    if (k == 0) throw ParseError("symbols are numbered from X1");
    return Symbol{k - 1};
  }
  return parse_rational(text);
}

std::vector<Relation> parse_relations(std::string_view text) {
  std::vector<Relation> out;
  auto lines = tokenize(text);
  for (std::size_t k = 0; k < lines.size();) {
    const auto& head = lines[k];
    if (head.tokens[0] != "relation") throw ParseError("expected 'relation <name> <rank>'", head.number);
    expect_arity(head, 3);
    const auto& name = head.tokens[1];
    auto rank = parse_count(head.tokens[2], head.number);
    if (rank < 1 || rank > static_cast<std::size_t>(kMaxRank))
      throw ParseError("rank out of range", head.number);
    for (const auto& r : out)
      if (r.name() == name) throw ParseError("relation '" + name + "' defined twice", head.number);
    std::vector<Relation::Tuple> tuples;
    ++k;
    bool closed = false;
    for (; k < lines.size(); ++k) {
      const auto& l = lines[k];
      if (l.tokens[0] == "end") {
        expect_arity(l, 1);
        closed = true;
        ++k;
        break;
      }
      expect_arity(l, 1);
      const auto& bits = l.tokens[0];
      if (bits.size() != rank || bits.find_first_not_of("01") != std::string::npos)
        throw ParseError("tuple '" + bits + "' is not a bitstring of length " + std::to_string(rank), l.number);
      Relation::Tuple t = 0;
      for (std::size_t i = 0; i < rank; ++i)
        if (bits[i] == '1') t |= Relation::Tuple{1} << i;
      tuples.push_back(t);
    }
    if (!closed) throw ParseError("relation '" + name + "' lacks 'end'", head.number);
    try {
      out.emplace_back(name, static_cast<int>(rank), std::move(tuples));
    } catch (const PreconditionError& e) {
      throw ParseError(e.what(), head.number);
    }
  }
  return out;
}

std::string serialize_relations(std::span<const Relation> relations) {
  std::string s;
  for (const auto& r : relations) {
    s += "relation " + r.name() + " " + std::to_string(r.rank()) + "\n";
    for (auto t : r.accepted()) s += tuple_to_bits(t, r.rank()) + "\n";
    s += "end\n";
  }
  return s;
}

Formula parse_formula(std::string_view text, std::span<const Relation> table) {
  auto lines = tokenize(text);
  expect_header(lines, "csp", 4);
  const auto n = parse_count(lines[0].tokens[2], lines[0].number);
  const auto m = parse_count(lines[0].tokens[3], lines[0].number);
  Formula f(n);
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto& l = lines[k];
    const auto& name = l.tokens[0];
    std::optional<Relation> r;
    for (const auto& t : table)
      if (t.name() == name) r = t;
    if (!r) r = rel::builtin(name);
    if (!r) throw ParseError("unknown relation '" + name + "'", l.number);
    if (l.tokens.size() != static_cast<std::size_t>(r->rank()) + 1)
      throw ParseError("relation '" + name + "' takes " + std::to_string(r->rank()) + " arguments", l.number);
    std::vector<std::size_t> args;
    for (std::size_t i = 1; i < l.tokens.size(); ++i) args.push_back(parse_index(l.tokens[i], n, l.number));
    try {
      f.add_constraint(*r, std::move(args));
    } catch (const PreconditionError& e) {
      throw ParseError(e.what(), l.number);
    }
  }
  if (f.constraints().size() != m)
    throw ParseError("header announces " + std::to_string(m) + " constraints, found " +
                         std::to_string(f.constraints().size()),
                     lines[0].number);
  return f;
}

std::string serialize_formula(const Formula& f) {
  std::string s = "p csp " + std::to_string(f.num_vars()) + " " + std::to_string(f.constraints().size()) + "\n";
  for (const auto& c : f.constraints()) {
    s += f.relation_of(c).name();
    for (auto a : c.args) s += " " + std::to_string(a + 1);
    s += "\n";
  }
  return s;
}

WeightedGraph parse_graph(std::string_view text) {
  auto lines = tokenize(text);
  return parse_graph_lines(lines, [](const Line& l) {
    const auto& h = l.tokens[0];
    return h == "modulus" || h == "sign" || h == "core" || h == "provenance";
  });
}

std::string serialize_graph(const WeightedGraph& g) {
  std::string s = "p graph " + std::to_string(g.num_vertices()) + " " + std::to_string(g.num_edges()) + "\n";
  for (std::size_t v = 0; v < g.num_vertices(); ++v)
    s += "v " + std::to_string(v + 1) + " " + weight_to_string(g.weight(v)) + "\n";
  for (const auto& [u, v] : g.edges()) s += "e " + std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
  return s;
}

Poset parse_poset(std::string_view text) {
  auto lines = tokenize(text);
  expect_header(lines, "poset", 3);
  const auto n = parse_count(lines[0].tokens[2], lines[0].number);
  std::vector<Weight> weights(n, Rational(1));
  std::vector<char> seen(n, 0);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto& l = lines[k];
    expect_arity(l, 3);
    if (l.tokens[0] == "v") {
      auto v = parse_index(l.tokens[1], n, l.number);
      if (seen[v]) throw ParseError("element " + l.tokens[1] + " listed twice", l.number);
      seen[v] = 1;
      weights[v] = weight_at(l.tokens[2], l.number);
    } else if (l.tokens[0] == "r") {
      pairs.emplace_back(parse_index(l.tokens[1], n, l.number), parse_index(l.tokens[2], n, l.number));
    } else {
      throw ParseError("unexpected line starting with '" + l.tokens[0] + "'", l.number);
    }
  }
  try {
    return Poset(std::move(weights), pairs);
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

std::string serialize_poset(const Poset& p) {
  std::string s = "p poset " + std::to_string(p.size()) + "\n";
  for (std::size_t v = 0; v < p.size(); ++v)
    s += "v " + std::to_string(v + 1) + " " + weight_to_string(p.weight(v)) + "\n";
  for (const auto& [a, b] : p.strict_pairs()) s += "r " + std::to_string(a + 1) + " " + std::to_string(b + 1) + "\n";
  return s;
}

RationalMatrix parse_matrix(std::string_view text) {
  auto lines = tokenize(text);
  std::size_t start = 0;
  std::optional<std::size_t> n;
  if (!lines.empty() && lines[0].tokens[0] == "p") {
    expect_header(lines, "matrix", 3);
    n = parse_count(lines[0].tokens[2], lines[0].number);
    start = 1;
  }
  const auto rows = lines.size() - start;
  if (!n) n = rows;
  if (rows != *n) throw ParseError("expected " + std::to_string(*n) + " rows, found " + std::to_string(rows));
  RationalMatrix m(*n, Rational(0));
  for (std::size_t i = 0; i < *n; ++i) {
    const auto& l = lines[start + i];
    if (l.tokens.size() != *n) throw ParseError("row has " + std::to_string(l.tokens.size()) + " entries", l.number);
    for (std::size_t j = 0; j < *n; ++j) {
      try {
        m(i, j) = parse_rational(l.tokens[j]);
      } catch (const ParseError& e) {
        throw ParseError(e.what(), l.number);
      }
    }
  }
  return m;
}

std::string serialize_matrix(const RationalMatrix& m) {
  std::string s = "p matrix " + std::to_string(m.size()) + "\n";
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) s += (j ? " " : "") + to_string(m(i, j));
    s += "\n";
  }
  return s;
}

ReductionInstance parse_instance(std::string_view text) {
  auto lines = tokenize(text);
  ReductionInstance inst;
  bool have_modulus = false;
  // The provenance trailer is read from the raw line, not the tokens.
  std::map<std::size_t, std::string> raw;
  {
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      auto nl = text.find('\n', pos);
      auto len = (nl == std::string_view::npos ? text.size() : nl) - pos;
      raw[++number] = std::string(text.substr(pos, len));
      if (nl == std::string_view::npos) break;
      pos = nl + 1;
    }
  }
  inst.graph = parse_graph_lines(lines, [&](const Line& l) {
    const auto& h = l.tokens[0];
    if (h == "modulus") {
      expect_arity(l, 2);
      try {
        inst.modulus = BigInt(l.tokens[1]);
      } catch (const std::invalid_argument&) {
        throw ParseError("bad modulus", l.number);
      }
      if (inst.modulus <= 0) throw ParseError("modulus must be positive", l.number);
      have_modulus = true;
    } else if (h == "sign") {
      expect_arity(l, 2);
      if (l.tokens[1] != "1" && l.tokens[1] != "-1") throw ParseError("sign must be 1 or -1", l.number);
      inst.sign = l.tokens[1] == "1" ? 1 : -1;
    } else if (h == "core") {
      expect_arity(l, 2);
      inst.core_vertices = parse_count(l.tokens[1], l.number);
    } else if (h == "provenance") {
      const auto& line = raw[l.number];
      auto at = line.find("provenance") + std::string("provenance").size();
      inst.provenance = provenance_from_json(line.substr(at), l.number);
    } else {
      return false;
    }
    return true;
  });
  if (!have_modulus) throw ParseError("instance lacks a 'modulus' line");
  if (auto sides = two_coloring(inst.graph)) inst.graph.set_bipartition(std::move(*sides));
  return inst;
}

std::string serialize_instance(const ReductionInstance& inst) {
  std::string s = serialize_graph(inst.graph);
  s += "modulus " + to_string(inst.modulus) + "\n";
  s += "sign " + std::to_string(inst.sign) + "\n";
  s += "core " + std::to_string(inst.core_vertices) + "\n";
  s += "provenance " + provenance_to_json(inst.provenance).dump() + "\n";
  return s;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace dichotomy
