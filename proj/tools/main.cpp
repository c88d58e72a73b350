// dichotomy: command-line front end. Every command prints one JSON document.
#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "dichotomy/affine_gadgets.hpp"
#include "dichotomy/easy_eval.hpp"
#include "dichotomy/errors.hpp"
#include "dichotomy/formats.hpp"
#include "verify.hpp"

using namespace dichotomy;
using json = nlohmann::ordered_json;

namespace {

class InvariantFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  json report;
};

json envelope() { return json{{"format", 1}}; }

std::vector<Relation> load_relations(const std::string& path) {
  return path.empty() ? std::vector<Relation>{} : parse_relations(read_file(path));
}

Formula load_formula(const std::string& path, const std::string& relations) {
  auto table = load_relations(relations);
  return parse_formula(read_file(path), table);
}

std::vector<Rational> parse_point(const std::string& text, std::size_t n) {
  std::vector<Rational> x;
  std::string tok;
  for (char ch : text + ",") {
    if (ch == ',' || std::isspace(static_cast<unsigned char>(ch))) {
      if (!tok.empty()) x.push_back(parse_rational(tok));
      tok.clear();
    } else {
      tok += ch;
    }
  }
  if (x.size() != n)
    throw ParseError("point has " + std::to_string(x.size()) + " coordinates, formula has " + std::to_string(n));
  return x;
}

json poly_json(const MultilinearPoly& p) {
  json terms = json::array();
  for (const auto& [m, c] : p.terms()) {
    json vars = json::array();
    for (auto i : m.indices()) vars.push_back(i + 1);
    terms.push_back({{"coeff", to_string(c)}, {"vars", vars}});
  }
  return terms;
}

json monomial_json(const Monomial& m) {
  json out = json::array();
  for (auto i : m) out.push_back(i + 1);
  return out;
}

json classification_json(const Classification& c) {
  json out = envelope();
  out["verdict"] = c.verdict == Verdict::Easy ? "easy" : "hard";
  if (c.witness)
    out["witness"] = {{c.witness->kind == WitnessKind::NonAffine ? "nonAffine" : "wideAffine", c.witness->relation}};
  if (c.verdict == Verdict::Easy) {
    json dec = json::object();
    for (const auto& [name, cs] : c.easy_decomposition) {
      json list = json::array();
      for (const auto& w : cs) list.push_back(to_string(w));
      dec[name] = list;
    }
    out["decomposition"] = dec;
  }
  return out;
}

// Which path evaluates f: "easy" when its relations classify as easy.
std::string choose_path(const Formula& f, bool force_easy, bool force_enum) {
  if (force_easy) return "easy";
  if (force_enum) return "enum";
  auto used = f.used_relations();
  if (used.empty() || classify(used).verdict == Verdict::Easy) return "easy";
  if (f.num_vars() > kMaxEnumVars)
    throw BoundExceeded("hard formula with " + std::to_string(f.num_vars()) + " variables exceeds the enumeration bound");
  return "enum";
}

AffineFormula affine_of(const Formula& f) {
  AffineFormula a{f.num_vars(), {}};
  for (const auto& c : f.constraints()) {
    const auto& r = f.relation_of(c);
    auto parity = rel::parity(r.rank(), true);
    auto even = rel::parity(r.rank(), false);
    if (!r.same_tuples(parity) && !r.same_tuples(even))
      throw PreconditionError("relation '" + r.name() + "' is not a parity constraint");
    a.constraints.push_back({c.args, r.same_tuples(parity)});
  }
  return a;
}

void write_or_embed(json& out, const std::string& key, const std::string& text, const std::string& path) {
  if (path.empty()) {
    out[key] = text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ParseError("cannot write '" + path + "'");
  f << text;
  out["output"] = path;
}

json certificate_json(const Certificate& cert, int rank) {
  json rows = json::array();
  for (const auto& r : cert.rows)
    rows.push_back({{"x", tuple_to_bits(r.x, rank)},
                    {"accepts", r.target_accepts},
                    {"extensions", r.full_extensions},
                    {"max_satisfied", r.max_satisfied},
                    {"ok", r.ok}});
  return rows;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polynomial evaluation and counting for Boolean constraint satisfaction"};
  app.require_subcommand(1, 1);
  bool json_flag = true;
  app.add_flag("--json", json_flag, "JSON output (the only mode)");

  std::string relations_path, formula_path, graph_path, poset_path, matrix_path, output_path, point_text;
  bool force_easy = false, force_enum = false, bipartite = false;

  auto* classify_cmd = app.add_subcommand("classify", "Classify a relation set as easy or hard");
  std::string classify_path;
  classify_cmd->add_option("relations", classify_path, "Relation file")->required()->check(CLI::ExistingFile);

  auto* poly_cmd = app.add_subcommand("poly", "Print P(formula)");
  poly_cmd->add_option("formula", formula_path, "Formula file")->required()->check(CLI::ExistingFile);
  poly_cmd->add_option("--relations", relations_path, "Relation file for non-built-in names")
      ->check(CLI::ExistingFile);
  auto* poly_easy = poly_cmd->add_flag("--easy", force_easy, "Force the factored path");
  poly_cmd->add_flag("--enum", force_enum, "Force enumeration")->excludes(poly_easy);

  auto* eval_cmd = app.add_subcommand("eval", "Evaluate P(formula) at a point");
  eval_cmd->add_option("formula", formula_path, "Formula file")->required()->check(CLI::ExistingFile);
  eval_cmd->add_option("--relations", relations_path, "Relation file")->check(CLI::ExistingFile);
  eval_cmd->add_option("--point", point_text, "Comma-separated rationals (default: all ones)");
  std::string point_file;
  eval_cmd->add_option("--point-file", point_file, "File of rationals")->check(CLI::ExistingFile);
  bool show_factored = false;
  eval_cmd->add_flag("--factored", show_factored, "Include the factored form on the easy path");
  auto* eval_easy = eval_cmd->add_flag("--easy", force_easy, "Force the factored path");
  eval_cmd->add_flag("--enum", force_enum, "Force enumeration")->excludes(eval_easy);

  auto* count_cmd = app.add_subcommand("count", "Exact counting");
  count_cmd->require_subcommand(1, 1);
  auto* count_sat_cmd = count_cmd->add_subcommand("sat", "#SAT of a formula");
  count_sat_cmd->add_option("formula", formula_path)->required()->check(CLI::ExistingFile);
  count_sat_cmd->add_option("--relations", relations_path)->check(CLI::ExistingFile);
  auto* count_vc_cmd = count_cmd->add_subcommand("vc", "#vertex covers (graph or reduction instance)");
  count_vc_cmd->add_option("graph", graph_path)->required()->check(CLI::ExistingFile);
  auto* count_is_cmd = count_cmd->add_subcommand("is", "#independent sets");
  count_is_cmd->add_option("graph", graph_path)->required()->check(CLI::ExistingFile);
  auto* count_ac_cmd = count_cmd->add_subcommand("antichains", "#antichains of a poset");
  count_ac_cmd->add_option("poset", poset_path)->required()->check(CLI::ExistingFile);
  auto* count_id_cmd = count_cmd->add_subcommand("ideals", "#ideals of a poset");
  count_id_cmd->add_option("poset", poset_path)->required()->check(CLI::ExistingFile);

  auto* reduce_cmd = app.add_subcommand("reduce", "Emit reduction instances or gadget-transformed formulas");
  reduce_cmd->require_subcommand(1, 1);
  auto* r_perm = reduce_cmd->add_subcommand("perm-to-vc", "0/1 permanent to unweighted #VC");
  r_perm->add_option("--matrix", matrix_path)->required()->check(CLI::ExistingFile);
  r_perm->add_flag("--bipartite", bipartite, "Loop-free bipartite variant");
  auto* r_bip = reduce_cmd->add_subcommand("to-bipartite-vc", "{0,1,-1}-weighted graph to bipartite #VC");
  r_bip->add_option("--graph", graph_path)->required()->check(CLI::ExistingFile);
  auto* r_vc = reduce_cmd->add_subcommand("vc-to-2sat", "Graph to positive 2-SAT");
  r_vc->add_option("--graph", graph_path)->required()->check(CLI::ExistingFile);
  auto* r_is = reduce_cmd->add_subcommand("is-to-2sat", "Graph to negative 2-SAT");
  r_is->add_option("--graph", graph_path)->required()->check(CLI::ExistingFile);
  auto* r_ideal = reduce_cmd->add_subcommand("ideal-to-2sat", "Poset to implicative 2-SAT");
  r_ideal->add_option("--poset", poset_path)->required()->check(CLI::ExistingFile);
  std::size_t phi_n = 2;
  auto* r_phi = reduce_cmd->add_subcommand("phi", "The odd row/column parity formula");
  r_phi->add_option("--n", phi_n)->check(CLI::Range(1, 64));
  std::size_t pad_arity = 4;
  bool pad_constant = false;
  std::vector<CLI::App*> gadget_cmds;
  for (const auto* name : {"shift-constants", "chain-decompose", "ternary0-to-ternary1", "pad"}) {
    auto* cmd = reduce_cmd->add_subcommand(name, std::string("Affine gadget: ") + name);
    cmd->add_option("--formula", formula_path)->required()->check(CLI::ExistingFile);
    gadget_cmds.push_back(cmd);
  }
  gadget_cmds.back()->add_option("--arity", pad_arity)->check(CLI::Range(3, 16));
  gadget_cmds.back()->add_option("--constant", pad_constant);
  for (auto* cmd : reduce_cmd->get_subcommands({})) cmd->add_option("--output", output_path, "Write the result here");

  auto* impl_cmd = app.add_subcommand("implement", "Bounded search for a perfect and faithful implementation");
  std::string target_name, targets_path;
  impl_cmd->add_option("--target", target_name, "Target relation name")->required();
  impl_cmd->add_option("--using", relations_path, "Available relations")->required()->check(CLI::ExistingFile);
  impl_cmd->add_option("--targets", targets_path, "Relation file defining the target")->check(CLI::ExistingFile);
  SearchBounds bounds;
  impl_cmd->add_option("--max-aux", bounds.max_aux);
  impl_cmd->add_option("--max-constraints", bounds.max_constraints);
  impl_cmd->add_option("--max-vars", bounds.max_vars);

  auto* verify_cmd = app.add_subcommand("verify", "Run the invariant suites");
  std::uint64_t seed = verify::kDefaultSeed;
  std::vector<std::string> suites;
  verify_cmd->add_option("--seed", seed, "Random seed");
  verify_cmd->add_option("--suite", suites, "Run only these suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    json err = envelope();
    err["error"] = {{"kind", "usage"}, {"message", e.what()}};
    std::cout << err.dump() << "\n";
    return 2;
  }

  json out = envelope();
  try {
    if (*classify_cmd) {
      auto rs = parse_relations(read_file(classify_path));
      out = classification_json(classify(rs));
    } else if (*poly_cmd) {
      auto f = load_formula(formula_path, relations_path);
      auto path = choose_path(f, force_easy, force_enum);
      auto p = path == "easy" ? expand(easy_factor(f), f.num_vars()) : poly_of_formula(f);
      out["path"] = path;
      out["num_vars"] = f.num_vars();
      out["terms"] = poly_json(p);
      out["display"] = to_display(p);
    } else if (*eval_cmd) {
      auto f = load_formula(formula_path, relations_path);
      std::vector<Rational> x(f.num_vars(), Rational(1));
      if (!point_file.empty())
        x = parse_point(read_file(point_file), f.num_vars());
      else if (!point_text.empty())
        x = parse_point(point_text, f.num_vars());
      auto path = choose_path(f, force_easy, force_enum);
      out["path"] = path;
      if (path == "easy") {
        auto fp = easy_factor(f);
        out["value"] = to_string(evaluate(fp, x));
        if (show_factored) {
          json comps = json::array();
          for (const auto& c : fp.components)
            comps.push_back({{"representative", c.representative + 1},
                             {"zero", monomial_json(c.zero_branch)},
                             {"one", monomial_json(c.one_branch)}});
          out["factored"] = {{"consistent", fp.consistent}, {"forced", monomial_json(fp.forced)}, {"components", comps}};
        }
      } else {
        out["value"] = to_string(eval_formula_poly(f, x));
      }
    } else if (*count_cmd) {
      if (*count_sat_cmd) {
        out["kind"] = "sat";
        out["count"] = to_string(count_sat(load_formula(formula_path, relations_path)));
      } else if (*count_vc_cmd || *count_is_cmd) {
        auto text = read_file(graph_path);
        auto g = parse_graph(text);
        bool vc = count_vc_cmd->parsed();
        out["kind"] = vc ? "vc" : "is";
        auto n = vc ? count_vertex_covers(g) : count_independent_sets(g);
        out["count"] = to_string(n);
        if (vc && text.find("\nmodulus ") != std::string::npos) {
          auto inst = parse_instance(text);
          out["modulus"] = to_string(inst.modulus);
          out["sign"] = inst.sign;
          out["recovered"] = to_string(inst.recover(n));
        }
      } else {
        auto p = parse_poset(read_file(poset_path));
        bool ideals = count_id_cmd->parsed();
        out["kind"] = ideals ? "ideals" : "antichains";
        out["count"] = to_string(ideals ? count_ideals(p) : count_antichains(p));
      }
    } else if (*reduce_cmd) {
      auto emit_inst = [&](const ReductionInstance& inst, const char* name) {
        out["reduction"] = name;
        out["vertices"] = inst.graph.num_vertices();
        out["edges"] = inst.graph.num_edges();
        out["core_vertices"] = inst.core_vertices;
        out["modulus"] = to_string(inst.modulus);
        out["sign"] = inst.sign;
        out["bipartite"] = inst.graph.bipartition().has_value();
        write_or_embed(out, "instance", serialize_instance(inst), output_path);
      };
      auto emit_formula = [&](const Formula& f, const char* name) {
        out["reduction"] = name;
        out["num_vars"] = f.num_vars();
        out["num_constraints"] = f.constraints().size();
        write_or_embed(out, "formula", serialize_formula(f), output_path);
      };
      auto emit_gadget = [&](const GadgetResult& g, const char* name) {
        out["aux_start"] = g.old_num_vars + 1;
        out["aux_values"] = g.aux_values;
        emit_formula(to_formula(g.formula), name);
      };
      if (*r_perm) {
        auto a = parse_matrix(read_file(matrix_path));
        emit_inst(emit_instance(a, bipartite), "perm-to-vc");
      } else if (*r_bip) {
        emit_inst(to_bipartite_vc(parse_graph(read_file(graph_path))), "to-bipartite-vc");
      } else if (*r_vc) {
        emit_formula(vc_to_positive2sat(parse_graph(read_file(graph_path))), "vc-to-2sat");
      } else if (*r_is) {
        emit_formula(is_to_negative2sat(parse_graph(read_file(graph_path))), "is-to-2sat");
      } else if (*r_ideal) {
        emit_formula(ideal_to_implicative2sat(parse_poset(read_file(poset_path))), "ideal-to-2sat");
      } else if (*r_phi) {
        emit_formula(to_formula(build_phi_n(phi_n)), "phi");
      } else {
        auto f = affine_of(load_formula(formula_path, ""));
        if (*gadget_cmds[0]) {
          auto s = shift_constants(f);
          out["shift_var"] = s.a + 1;
          emit_formula(to_formula(s.formula), "shift-constants");
        } else if (*gadget_cmds[1]) {
          emit_gadget(chain_decompose(f), "chain-decompose");
        } else if (*gadget_cmds[2]) {
          emit_gadget(ternary0_to_ternary1(f), "ternary0-to-ternary1");
        } else {
          emit_gadget(pad_to_relation(f, pad_arity, pad_constant), "pad");
        }
      }
    } else if (*impl_cmd) {
      auto available = parse_relations(read_file(relations_path));
      std::optional<Relation> target;
      for (const auto& r : load_relations(targets_path))
        if (r.name() == target_name) target = r;
      if (!target)
        for (const auto& r : available)
          if (r.name() == target_name) target = r;
      if (!target) target = rel::builtin(target_name);
      if (!target) throw ParseError("unknown target relation '" + target_name + "'");
      auto found = search_implementation(*target, available, bounds);
      out["target"] = target_name;
      out["found"] = found.has_value();
      if (found) {
        auto cert = certify(*found);
        out["aux"] = found->num_aux();
        out["alpha"] = found->alpha();
        out["implementation"] = serialize_formula(found->constraints);
        out["perfect_faithful"] = cert.perfect_faithful;
        out["certificate"] = certificate_json(cert, target->rank());
        if (!cert.perfect_faithful) {
          InvariantFailure fail("search returned an implementation that fails certification");
          fail.report = out;
          throw fail;
        }
      } else {
        out["note"] = "no implementation within the search bounds";
      }
    } else if (*verify_cmd) {
      auto results = verify::run_suites(seed, suites);
      bool all = true;
      json list = json::array();
      for (const auto& r : results) {
        all = all && r.passed();
        list.push_back({{"name", r.name}, {"passed", r.passed()}, {"checks", r.checks}, {"failures", r.failures}});
      }
      out["seed"] = seed;
      out["passed"] = all;
      out["suites"] = list;
      if (!all) {
        InvariantFailure fail("invariant suites failed");
        fail.report = out;
        throw fail;
      }
    }
  } catch (const InvariantFailure& e) {
    auto rep = e.report;
    rep["error"] = {{"kind", "invariant"}, {"message", e.what()}};
    std::cout << rep.dump() << "\n";
    return 4;
  } catch (const ParseError& e) {
    json err = envelope();
    err["error"] = {{"kind", "parse"}, {"message", e.what()}};
    std::cout << err.dump() << "\n";
    return 2;
  } catch (const BoundExceeded& e) {
    json err = envelope();
    err["error"] = {{"kind", "bound"}, {"message", e.what()}};
    std::cout << err.dump() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    json err = envelope();
    err["error"] = {{"kind", "precondition"}, {"message", e.what()}};
    std::cout << err.dump() << "\n";
    return 2;
  } catch (const std::exception& e) {
    json err = envelope();
    err["error"] = {{"kind", "internal"}, {"message", e.what()}};
    std::cout << err.dump() << "\n";
    return 4;
  }
  std::cout << out.dump() << "\n";
  return 0;
}
