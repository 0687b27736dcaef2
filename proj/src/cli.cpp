#include "holant/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <ostream>
#include <sstream>

#include "holant/catalog.hpp"
#include "holant/classify.hpp"
#include "holant/errors.hpp"
#include "holant/gadget.hpp"
#include "holant/grid.hpp"
#include "holant/interpolation.hpp"
#include "holant/planar.hpp"
#include "holant/transform.hpp"

namespace holant::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

struct Options {
  std::string sigs;
  int max_edges = kDefaultEdgeLimit;
  int max_tutte_edges = kDefaultTutteEdgeLimit;
  int max_eo_edges = kDefaultOrientationEdgeLimit;

  SignatureTable table() const { return sigs.empty() ? SignatureTable{} : parse_signature_table(read_file(sigs)); }
  SignatureGrid grid(const std::string& path) const {
    const SignatureTable t = table();
    return parse_grid(read_file(path), &t);
  }
};

PlaneMultigraph embedded_graph(const std::string& path) {
  PlaneMultigraph g = parse_graph(read_file(path));
  if (g.has_rotation()) return g;
  auto e = is_planar(g);
  if (!e) throw DomainError("graph '" + g.name + "' is not planar");
  return *e;
}

void print_witness(std::ostream& out, const char* key, const std::optional<FamilyWitness>& w) {
  out << key << ": ";
  if (w)
    out << "yes " << describe(*w) << '\n';
  else
    out << "no\n";
}

int print_verdict(std::ostream& out, const Verdict& v) {
  out << (v.tractable() ? "TRACTABLE" : "HARD") << ' ' << v.label << '\n';
  out << "outcome: " << (v.tractable() ? "tractable" : "hard") << '\n';
  out << "label: " << v.label << '\n';
  if (!v.rule.empty()) out << "rule: " << v.rule << '\n';
  for (const auto& [k, val] : v.details) out << k << ": " << val << '\n';
  for (const auto& w : v.witnesses) out << "witness: " << to_string(w) << '\n';
  return v.tractable() ? kOk : kHard;
}

std::set<int> parse_arities(const std::string& text) {
  std::set<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("bad arity '" + item + "' in --arities");
    out.insert(std::stoi(item));
  }
  if (out.empty()) throw ParseError("--arities is empty");
  return out;
}

std::vector<SymmetricSignature> signature_set(const std::string& path) {
  const SignatureTable t = parse_signature_table(read_file(path));
  std::vector<SymmetricSignature> set;
  for (const auto& [name, e] : t.entries()) {
    if (!e.symmetric) throw DomainError("signature '" + name + "' is not symmetric");
    set.push_back(*e.symmetric);
  }
  if (set.empty()) throw DomainError("no signatures in '" + path + "'");
  return set;
}

Verdict classify_with(const std::string& framework, const std::vector<SymmetricSignature>& set,
                      const std::string& arities) {
  auto single = [&]() -> const SymmetricSignature& {
    if (set.size() != 1) throw DomainError("framework '" + framework + "' takes a single signature");
    return set.front();
  };
  if (framework == "plcsp") return classify_plcsp(set);
  if (framework == "plcsp-hat") return classify_plcsp_hat(set);
  if (framework == "binary-gh") return classify_binary_gh(single());
  if (framework == "plholant4") return classify_arity4(single());
  if (framework == "degree-prescribed") {
    if (arities.empty()) throw ParseError("degree-prescribed needs --arities");
    return classify_degree_prescribed(single(), parse_arities(arities));
  }
  throw ParseError("unknown framework '" + framework + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& final_out, std::ostream& err) {
  // Assembled here and printed only on success.
  std::ostringstream out;
  CLI::App app{"Exact Holant, signature and planar-graph toolkit", "holant"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--sigs", opt.sigs, "signature table file");
  app.add_option("--max-edges", opt.max_edges, "edge limit for grid contraction")->check(CLI::PositiveNumber);
  app.add_option("--max-tutte-edges", opt.max_tutte_edges, "edge limit for Tutte polynomials")->check(CLI::PositiveNumber);
  app.add_option("--max-eo-edges", opt.max_eo_edges, "edge limit for orientation enumeration")->check(CLI::PositiveNumber);

  std::function<int()> action;
  std::string file, literal, matrix_text, start_text, framework, arities, x_text, y_text, grid_file;
  bool weighted = false, row = false, all = false;
  int order_bound = 120;

  auto* eval = app.add_subcommand("eval", "Holant value of a closed grid");
  eval->add_option("file", file)->required();
  eval->callback([&] {
    action = [&] {
      out << "holant: " << to_string(holant(opt.grid(file), opt.max_edges)) << '\n';
      return int(kOk);
    };
  });

  auto* gadget = app.add_subcommand("gadget", "signature of a grid with dangling edges");
  gadget->add_option("file", file)->required();
  gadget->callback([&] {
    action = [&] {
      const FullTensor t = gate_signature(opt.grid(file), opt.max_edges);
      out << "arity: " << t.arity() << '\n';
      out << "tensor: " << to_string(t) << '\n';
      if (is_symmetric(t)) out << "symmetric: " << to_string(symmetrize(t)) << '\n';
      if (t.arity() == 4) out << "matrix: " << to_string(signature_matrix(t)) << '\n';
      return int(kOk);
    };
  });

  auto* classify = app.add_subcommand("classify", "tractability verdict");
  classify->require_subcommand(1);
  auto* classify_sig = classify->add_subcommand("sig", "classify one signature");
  classify_sig->add_option("signature", literal)->required();
  classify_sig->add_option("--framework", framework)->required();
  classify_sig->add_option("--arities", arities, "vertex degrees, comma separated");
  classify_sig->callback([&] {
    action = [&] { return print_verdict(out, classify_with(framework, {parse_signature(literal)}, arities)); };
  });
  auto* classify_set = classify->add_subcommand("set", "classify a signature set");
  classify_set->add_option("file", file)->required();
  classify_set->add_option("--framework", framework)->required()->check(CLI::IsMember({"plcsp", "plcsp-hat"}));
  classify_set->callback([&] {
    action = [&] { return print_verdict(out, classify_with(framework, signature_set(file), "")); };
  });

  auto* membership = app.add_subcommand("membership", "family membership with witnesses");
  membership->require_subcommand(1);
  auto* membership_sig = membership->add_subcommand("sig", "membership of one signature");
  membership_sig->add_option("signature", literal)->required();
  membership_sig->callback([&] {
    action = [&] {
      const SymmetricSignature f = parse_signature(literal);
      const VennFlags v = venn_flags(f);
      out << "signature: " << to_string(f) << '\n';
      print_witness(out, "A", v.A);
      print_witness(out, "P", v.P);
      print_witness(out, "M", v.M);
      print_witness(out, "P-hat", v.Phat);
      print_witness(out, "M-hat", v.Mhat);
      return int(kOk);
    };
  });

  auto* transform = app.add_subcommand("transform", "holographic transformation of a signature or grid");
  transform->add_option("signature", literal);
  transform->add_option("--matrix", matrix_text, "H, Z, X or [a,b;c,d]")->required();
  transform->add_flag("--row", row, "apply as a row tensor, f T^n");
  auto* grid_opt = transform->add_option("--grid", grid_file, "transform every signature of a grid");
  transform->add_flag("--all", all, "same matrix on every vertex (needs T T^t = lambda I)")->needs(grid_opt);
  transform->callback([&] {
    action = [&] {
      const Matrix t = parse_transform(matrix_text);
      if (!grid_file.empty()) {
        if (!literal.empty()) throw ParseError("give either a signature or --grid");
        const SignatureGrid g = opt.grid(grid_file);
        const TransformedGrid r = all ? transform_all(g, t) : transform_grid(g, t);
        out << "factor: " << to_string(r.factor) << '\n';
        out << serialize_grid(r.grid);
        return int(kOk);
      }
      if (literal.empty()) throw ParseError("missing signature");
      const SymmetricSignature f = parse_signature(literal);
      out << to_string(row ? apply_row(f, t) : apply(t, f)) << '\n';
      return int(kOk);
    };
  });

  auto* interpolate = app.add_subcommand("interpolate", "interpolation conditions");
  interpolate->require_subcommand(1);
  auto* check = interpolate->add_subcommand("check", "check the conditions for M and s");
  check->add_option("--matrix", matrix_text)->required();
  check->add_option("--start", start_text)->required();
  check->add_option("--order-bound", order_bound)->check(CLI::PositiveNumber);
  check->callback([&] {
    action = [&] {
      RecursiveSpec spec{parse_matrix(matrix_text), parse_signature(start_text).as_vector()};
      if (spec.m.rows() != spec.m.cols() || spec.m.rows() != spec.s.size())
        throw DomainError("matrix and start vector sizes disagree");
      const InterpolationVerdict v = check_conditions(spec, order_bound);
      out << (v.passes ? "PASSES" : "FAILS") << '\n';
      out << "det: " << to_string(v.det_m) << '\n';
      out << "krylov-det: " << to_string(v.krylov_det) << '\n';
      out << "finite-order: " << (v.finite_order ? std::to_string(*v.finite_order) : "none") << '\n';
      out << "order-bound: " << v.order_bound << '\n';
      out << "order-test: " << (v.order_test_complete ? "complete" : "incomplete") << '\n';
      return int(kOk);
    };
  });

  auto* medial_cmd = app.add_subcommand("medial", "medial graph of a plane graph");
  medial_cmd->add_option("file", file)->required();
  medial_cmd->callback([&] {
    action = [&] {
      out << serialize_graph(medial(embedded_graph(file)));
      return int(kOk);
    };
  });

  auto* eo = app.add_subcommand("eo", "Eulerian orientations");
  eo->add_option("file", file)->required();
  eo->add_flag("--weighted", weighted, "sum of 2^saddles over a 4-regular plane graph");
  eo->callback([&] {
    action = [&] {
      if (weighted)
        out << "weighted: " << to_string(weighted_eo_sum(embedded_graph(file), opt.max_eo_edges)) << '\n';
      else
        out << "orientations: " << count_eulerian_orientations(parse_graph(read_file(file)), opt.max_eo_edges) << '\n';
      return int(kOk);
    };
  });

  auto* tutte_cmd = app.add_subcommand("tutte", "Tutte polynomial");
  tutte_cmd->add_option("file", file)->required();
  auto* xo = tutte_cmd->add_option("--x", x_text);
  tutte_cmd->add_option("--y", y_text)->needs(xo);
  xo->needs(tutte_cmd->get_option("--y"));
  tutte_cmd->callback([&] {
    action = [&] {
      const TuttePoly t = tutte(parse_graph(read_file(file)), opt.max_tutte_edges);
      out << "tutte: " << to_string(t) << '\n';
      if (!x_text.empty()) out << "value: " << to_string(t.evaluate(parse_scalar(x_text), parse_scalar(y_text))) << '\n';
      return int(kOk);
    };
  });

  auto* verify = app.add_subcommand("verify", "exact identity checks");
  verify->require_subcommand(1);
  auto* lv = verify->add_subcommand("las-vergnas", "2 T(G;3,3) against the weighted orientations of the medial graph");
  lv->add_option("file", file)->required();
  lv->callback([&] {
    action = [&] {
      const LasVergnas r = verify_las_vergnas(embedded_graph(file), opt.max_tutte_edges, opt.max_eo_edges);
      out << (r.holds ? "PASS" : "FAIL") << " las-vergnas\n";
      out << "tutte-side: " << to_string(r.tutte_side) << '\n';
      out << "orientation-side: " << to_string(r.orientation_side) << '\n';
      return r.holds ? int(kOk) : int(kVerificationFailed);
    };
  });
  auto* cat = verify->add_subcommand("catalog", "recompute the gadget catalog");
  cat->add_option("file", file, "catalog file (default: shipped catalog)");
  cat->callback([&] {
    action = [&] {
      const auto results = verify_catalog(parse_catalog(read_file(file.empty() ? default_catalog_path() : file)), opt.max_edges);
      int failed = 0;
      for (const auto& r : results) {
        out << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.instances << " instances, " << r.comparisons
            << " checks)";
        if (!r.passed) {
          out << ": " << r.message;
          ++failed;
        }
        out << '\n';
      }
      out << "summary: " << results.size() - static_cast<std::size_t>(failed) << '/' << results.size() << " passed\n";
      return failed ? int(kVerificationFailed) : int(kOk);
    };
  });

  auto* pairing = app.add_subcommand("pairing", "planar pairing of a planar cubic graph");
  pairing->add_option("file", file)->required();
  pairing->callback([&] {
    action = [&] {
      const PlaneMultigraph g = parse_graph(read_file(file));
      for (const auto& [a, b] : planar_pairing(g))
        out << "pair " << g.vertices[static_cast<std::size_t>(a)] << ' ' << g.vertices[static_cast<std::size_t>(b)] << '\n';
      return int(kOk);
    };
  });

  std::vector<std::string> rev(args.rbegin(), args.rend());
  if (!rev.empty()) rev.pop_back();
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    final_out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    final_out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  try {
    const int code = action();
    final_out << out.str();
    return code;
  } catch (const ResourceLimit& e) {
    err << "error: resource limit: " << e.what() << '\n';
    return kResourceLimit;
  } catch (const Undecidable& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace holant::cli
