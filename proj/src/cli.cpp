#include "ptg/cli.hpp"

#include "ptg/catalog.hpp"
#include "ptg/error.hpp"
#include "ptg/io.hpp"
#include "ptg/recognize.hpp"
#include "ptg/transforms.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace ptg::cli {

namespace {

using io::Json;

// One input file: JSON when it starts with '{', otherwise an edge list.
struct Document {
  std::string path;
  std::string text;
  std::optional<Json> json;
};

Document load(const std::string& path, std::istream& in) {
  Document doc{path, {}, std::nullopt};
  if (path == "-") {
    std::ostringstream ss;
    ss << in.rdbuf();
    doc.text = ss.str();
  } else {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw InvalidInput("cannot read " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    doc.text = ss.str();
  }
  auto first = doc.text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (doc.text[first] == '{' || doc.text[first] == '[')) doc.json = io::parse_json(doc.text);
  return doc;
}

std::string name_of(const Document& d) { return d.path == "-" ? "<stdin>" : d.path; }

Structure structure_of(const Document& d, bool directed) {
  if (!d.json) {
    try {
      return io::parse_edgelist(d.text, directed);
    } catch (const InvalidInput& e) {
      throw InvalidInput(name_of(d) + ": " + e.what());
    }
  }
  const Json& j = *d.json;
  if (io::looks_like_structure(j)) return io::structure_from_json(j, name_of(d));
  if (j.is_object() && j.contains("structure")) return io::structure_from_json(j["structure"], name_of(d) + ".structure");
  throw InvalidInput(name_of(d) + ": expected a graph, a digraph or an instance");
}

Representation rep_of(const Document& d) {
  if (!d.json) throw InvalidInput(name_of(d) + ": expected a representation in JSON");
  const Json& j = *d.json;
  if (io::looks_like_rep(j)) return io::rep_from_json(j, name_of(d));
  if (j.is_object() && j.contains("rep")) return io::rep_from_json(j["rep"], name_of(d) + ".rep");
  if (j.is_object() && j.contains("certificate") && j["certificate"].contains("representation"))
    return io::rep_from_json(j["certificate"]["representation"], name_of(d) + ".certificate.representation");
  throw InvalidInput(name_of(d) + ": no representation found (expected \"kind\"/\"items\", \"rep\" or a certificate)");
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

int verdict_code(Verdict v) {
  switch (v) {
    case Verdict::yes: return ok;
    case Verdict::no: return negative;
    case Verdict::unknown: return unknown;
  }
  return unknown;
}

struct LimitFlags {
  int max_n = 0;
  long max_branches = 0;
  long budget_ms = 0;
  CLI::Option* max_n_opt = nullptr;
  CLI::Option* branches_opt = nullptr;
  CLI::Option* budget_opt = nullptr;

  void attach(CLI::App* app) {
    max_n_opt = app->add_option("--max-n", max_n, "Largest vertex count for exhaustive search")->check(CLI::PositiveNumber);
    branches_opt = app->add_option("--max-branches", max_branches, "Work budget in search branches")->check(CLI::PositiveNumber);
    budget_opt = app->add_option("--budget-ms", budget_ms, "Wall-clock budget in milliseconds")->check(CLI::PositiveNumber);
  }

  SearchLimits apply(SearchLimits lim) const {
    if (max_n_opt->count()) lim.max_n = max_n;
    if (branches_opt->count()) lim.max_branches = max_branches;
    if (budget_opt->count()) lim.budget_ms = budget_ms;
    return lim;
  }
};

Json verify_json(const VerifyResult& r) {
  Json j;
  j["ok"] = r.ok;
  if (!r.ok) {
    Json missing = Json::array(), extra = Json::array();
    for (auto [u, v] : r.missing) missing.push_back(Json::array({u, v}));
    for (auto [u, v] : r.extra) extra.push_back(Json::array({u, v}));
    j["missing"] = std::move(missing);
    j["extra"] = std::move(extra);
  }
  return j;
}

Labeling labels_from_flag(const std::string& text, int n) {
  Labeling f{io::parse_rat_list(text, "--labels")};
  if (f.size() != n) throw InvalidInput("--labels: expected " + std::to_string(n) + " labels, got " + std::to_string(f.size()));
  return f;
}

Ordering ordering_from_flag(const std::string& text, int n) {
  Ordering ord{io::parse_int_list(text, "--ordering")};
  if (ord.size() != n) throw InvalidInput("--ordering: expected " + std::to_string(n) + " vertices, got " + std::to_string(ord.size()));
  ord.validate(n);
  return ord;
}

int dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err,
             std::string& output_path) {
  CLI::App app{"Interval representations, pointed and tolerance graph classes, and their certificates"};
  app.name("ptg");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("-o,--output", output_path, "Write the result here instead of standard output");

  std::string input, target, cls_name, to, condition, labels, ordering, cert_path, format = "json", catalog_name, alpha;
  bool directed = false, list = false, c4p4 = false, block_form = false;
  int n_param = 0;

  auto* classify_cmd = app.add_subcommand("classify", "Decide class membership and print a certificate");
  classify_cmd->add_option("input", input, "Graph, digraph or instance (\"-\" for stdin)")->required();
  classify_cmd->add_option("--class", cls_name, "icd, cicd, mptg, cmptg, fifty_mtg or proper_interval")->required();
  classify_cmd->add_flag("--directed", directed, "Read an edge list as arcs");
  LimitFlags classify_limits;
  classify_limits.attach(classify_cmd);

  auto* realize_cmd = app.add_subcommand("realize", "Print the graph or digraph a representation realizes");
  realize_cmd->add_option("input", input, "Representation, instance or certificate")->required();
  realize_cmd->add_option("--format", format, "json or edgelist")->check(CLI::IsMember({"json", "edgelist"}));

  auto* verify_cmd = app.add_subcommand("verify", "Compare a realized representation with a target");
  verify_cmd->add_option("input", input, "Representation, instance or certificate")->required();
  verify_cmd->add_option("target", target, "Target graph or digraph (defaults to the instance's own)");
  verify_cmd->add_flag("--directed", directed, "Read an edge list as arcs");

  auto* convert_cmd = app.add_subcommand("convert", "Transform a representation, or build one from a graph");
  convert_cmd->add_option("input", input, "Representation, graph, digraph or instance")->required();
  convert_cmd->add_option("--to", to, "umtg, cmptg, ucmptg, fifty_mtg, cicd, icd or labeling")->required();
  convert_cmd->add_option("--labels", labels, "Labels in vertex order (cicd) or along --ordering (cmptg)");
  convert_cmd->add_option("--ordering", ordering, "Vertex ordering for labeled input");
  convert_cmd->add_flag("--directed", directed, "Read an edge list as arcs");

  auto* check_cmd = app.add_subcommand("check", "Check a condition, a labeling or a certificate");
  check_cmd->add_option("input", input, "Graph, digraph, instance or representation")->required();
  check_cmd->add_option("--condition", condition, "mptg_4point, cmptg_necessary, icd_order or cicd_necessary");
  check_cmd->add_option("--ordering", ordering, "Vertex ordering, e.g. 0,1,2,3");
  check_cmd->add_option("--labels", labels, "Labels in vertex order for the optimized condition");
  check_cmd->add_option("--certificate", cert_path, "Certificate or classify output to re-check");
  check_cmd->add_flag("--c4p4", c4p4, "Check induced C4/P4 placement on a central representation");
  check_cmd->add_flag("--directed", directed, "Read an edge list as arcs");
  LimitFlags check_limits;
  check_limits.attach(check_cmd);

  auto* catalog_cmd = app.add_subcommand("catalog", "Emit a named instance");
  catalog_cmd->add_option("name", catalog_name, "Instance name");
  catalog_cmd->add_option("--n", n_param, "Size parameter");
  catalog_cmd->add_option("--alpha", alpha, "Spacing parameter as p/q");
  catalog_cmd->add_flag("--list", list, "List instance names");

  auto* matrix_cmd = app.add_subcommand("matrix", "Augmented adjacency matrix and its patterns");
  matrix_cmd->add_option("input", input, "Graph, digraph or instance")->required();
  matrix_cmd->add_option("--ordering", ordering, "Vertex ordering (default: identity)");
  matrix_cmd->add_option("--labels", labels, "Order vertices by these labels");
  matrix_cmd->add_flag("--block-form", block_form, "Search a tournament block form");
  matrix_cmd->add_flag("--directed", directed, "Read an edge list as arcs");
  LimitFlags matrix_limits;
  matrix_limits.attach(matrix_cmd);

  std::vector<std::string> argv_store{"ptg"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? ok : input_error;
  }

  try {
    if (classify_cmd->parsed()) {
      GraphClass cls = parse_graph_class(cls_name);
      Structure s = structure_of(load(input, in), directed);
      Certificate c = classify(s, cls, classify_limits.apply(default_limits(cls)));
      emit(out, io::to_json(c));
      return verdict_code(c.verdict);
    }

    if (realize_cmd->parsed()) {
      Structure s = realize(rep_of(load(input, in)));
      if (format == "edgelist")
        out << io::to_edgelist(s);
      else
        emit(out, io::to_json(s));
      return ok;
    }

    if (verify_cmd->parsed()) {
      Document doc = load(input, in);
      Representation rep = rep_of(doc);
      Structure t;
      if (!target.empty()) {
        t = structure_of(load(target, in), directed);
      } else if (doc.json && doc.json->contains("structure")) {
        t = io::instance_from_json(*doc.json).rep_target();
      } else {
        throw InvalidInput("verify needs a target unless the input is an instance");
      }
      auto r = verify(rep, t);
      emit(out, verify_json(r));
      return r.ok ? ok : negative;
    }

    if (convert_cmd->parsed()) {
      Document doc = load(input, in);
      const bool has_rep = doc.json && (io::looks_like_rep(*doc.json) || doc.json->contains("rep") || doc.json->contains("certificate"));
      if (to == "ucmptg" && !has_rep) {
        auto s = structure_of(doc, directed);
        if (!std::holds_alternative<Graph>(s)) throw InvalidInput("--to ucmptg needs a graph");
        emit(out, io::to_json(proper_to_ucmptg(std::get<Graph>(s))));
        return ok;
      }
      if (to == "cicd" && !labels.empty()) {
        auto s = structure_of(doc, true);
        if (!std::holds_alternative<Digraph>(s)) throw InvalidInput("--to cicd with --labels needs a digraph");
        const auto& d = std::get<Digraph>(s);
        emit(out, io::to_json(optimized_to_cicd(d, labels_from_flag(labels, d.size()))));
        return ok;
      }
      if (to == "cmptg" && !labels.empty()) {
        auto s = structure_of(doc, directed);
        if (!std::holds_alternative<Graph>(s)) throw InvalidInput("--to cmptg with --labels needs a graph");
        const auto& g = std::get<Graph>(s);
        Ordering ord = ordering.empty() ? Ordering::identity(g.size()) : ordering_from_flag(ordering, g.size());
        LabeledGraph lg{g, ord, io::parse_rat_list(labels, "--labels")};
        emit(out, io::to_json(labeled_to_cmptg(lg)));
        return ok;
      }
      Representation rep = rep_of(doc);
      if (to == "umtg") {
        emit(out, io::to_json(cmptg_to_umtg(rep)));
      } else if (to == "cmptg") {
        emit(out, io::to_json(umtg_to_cmptg(rep)));
      } else if (to == "ucmptg") {
        emit(out, io::to_json(pcmptg_to_ucmptg(rep)));
      } else if (to == "fifty_mtg" || to == "50mtg") {
        emit(out, io::to_json(pcmptg_to_50mtg(rep)));
      } else if (to == "icd") {
        emit(out, io::to_json(rep_to_icd_digraph(rep)));
      } else if (to == "labeling") {
        emit(out, Json{{"labeling", io::to_json(cicd_to_labeling(rep))}});
      } else {
        throw InvalidInput("--to: unknown target \"" + to + "\"");
      }
      return ok;
    }

    if (check_cmd->parsed()) {
      Document doc = load(input, in);
      if (c4p4) {
        auto r = verify_c4_p4_conditions(rep_of(doc));
        Json j{{"holds", r.holds}};
        if (!r.holds) {
          j["shape"] = r.shape;
          j["witness"] = r.witness;
        }
        emit(out, j);
        return r.holds ? ok : negative;
      }
      Structure s = structure_of(doc, directed);
      const int n = structure_size(s);
      if (!cert_path.empty()) {
        Document cd = load(cert_path, in);
        if (!cd.json) throw InvalidInput(name_of(cd) + ": expected a certificate in JSON");
        Certificate c = io::certificate_from_json(*cd.json);
        auto r = recheck_certificate(s, c);
        emit(out, Json{{"ok", r.ok}, {"message", r.message}});
        return r.ok ? ok : negative;
      }
      if (!condition.empty()) {
        ConditionKind kind = parse_condition_kind(condition);
        if (ordering.empty()) {
          Certificate c = find_ordering(s, kind, check_limits.apply(SearchLimits{}));
          emit(out, io::to_json(c));
          return verdict_code(c.verdict);
        }
        auto r = check_condition(s, ordering_from_flag(ordering, n), kind);
        Json j{{"condition", condition}};
        j.update(io::to_json(r));
        emit(out, j);
        return r.holds ? ok : negative;
      }
      if (!labels.empty()) {
        auto r = check_optimized(s, labels_from_flag(labels, n));
        Json j{{"optimized", r.holds}};
        if (!r.holds) j["violation"] = r.violation;
        emit(out, j);
        return r.holds ? ok : negative;
      }
      throw InvalidInput("check needs --condition, --labels, --certificate or --c4p4");
    }

    if (catalog_cmd->parsed()) {
      if (list) {
        Json names = Json::array();
        for (const auto& e : catalog_entries()) {
          Json params = Json::array();
          if (e.takes_n) params.push_back("n");
          if (e.takes_alpha) params.push_back("alpha");
          names.push_back(Json{{"name", e.name}, {"summary", e.summary}, {"params", params}});
        }
        emit(out, Json{{"instances", names}});
        return ok;
      }
      if (catalog_name.empty()) throw InvalidInput("catalog needs an instance name or --list");
      CatalogParams p;
      if (catalog_cmd->get_option("--n")->count()) p.n = n_param;
      if (!alpha.empty()) p.alpha = parse_rat(alpha);
      emit(out, io::to_json(instance(catalog_name, p)));
      return ok;
    }

    if (matrix_cmd->parsed()) {
      Structure s = structure_of(load(input, in), directed);
      const int n = structure_size(s);
      if (block_form) {
        if (!std::holds_alternative<Digraph>(s)) throw InvalidInput("--block-form needs a digraph");
        Certificate c = tournament_block_form(std::get<Digraph>(s), matrix_limits.apply(SearchLimits{}));
        emit(out, io::to_json(c));
        return verdict_code(c.verdict);
      }
      Ordering ord = Ordering::identity(n);
      if (!ordering.empty() && !labels.empty()) throw InvalidInput("give --ordering or --labels, not both");
      if (!ordering.empty()) ord = ordering_from_flag(ordering, n);
      if (!labels.empty()) {
        Labeling f = labels_from_flag(labels, n);
        f.validate();
        ord = f.order();
      }
      Json j{{"ordering", io::to_json(ord)}};
      bool verdict;
      if (const auto* g = std::get_if<Graph>(&s)) {
        BinaryMatrix a = augmented_adjacency(*g, ord);
        verdict = check_mptg_matrix_pattern(a);
        j["rows"] = io::to_json(a);
        j["consecutive_rows"] = check_c1p_rows(a);
        j["mptg_pattern"] = verdict;
      } else {
        const auto& d = std::get<Digraph>(s);
        BinaryMatrix a = augmented_adjacency(d, ord);
        verdict = check_c1p_rows(a);
        j["rows"] = io::to_json(a);
        j["consecutive_rows"] = verdict;
        j["symmetric_part_rows"] = io::to_json(wedge(a, a.transpose()));
      }
      emit(out, j);
      return verdict ? ok : negative;
    }
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return input_error;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return input_error;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return input_error;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return input_error;
  }
  return input_error;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  std::ostringstream buffer;
  std::string output_path;
  const int code = dispatch(args, in, buffer, err, output_path);
  if (output_path.empty() || output_path == "-") {
    out << buffer.str();
    return code;
  }
  std::ofstream f(output_path, std::ios::binary);
  if (!(f << buffer.str())) {
    err << "error: cannot write " << output_path << '\n';
    return input_error;
  }
  return code;
}

}  // namespace ptg::cli
