#include "ptg/io.hpp"

#include "ptg/error.hpp"

#include <charconv>
#include <sstream>

namespace ptg::io {

namespace {

// Builds a DOM like the default parser, but floats keep their source text.
class ExactSax {
 public:
  using string_t = Json::string_t;

  bool null() { return put(Json(nullptr)); }
  bool boolean(bool b) { return put(Json(b)); }
  bool number_integer(Json::number_integer_t v) { return put(Json(v)); }
  bool number_unsigned(Json::number_unsigned_t v) { return put(Json(v)); }
  bool number_float(Json::number_float_t, const string_t& text) { return put(Json(text)); }
  bool string(string_t& s) { return put(Json(s)); }
  bool binary(Json::binary_t&) { return put(Json(nullptr)); }

  bool start_object(std::size_t) {
    Json* slot = place(Json::object());
    stack_.push_back(slot);
    return true;
  }
  bool key(string_t& k) {
    key_ = k;
    return true;
  }
  bool end_object() {
    stack_.pop_back();
    return true;
  }
  bool start_array(std::size_t) {
    Json* slot = place(Json::array());
    stack_.push_back(slot);
    return true;
  }
  bool end_array() {
    stack_.pop_back();
    return true;
  }
  bool parse_error(std::size_t position, const std::string&, const nlohmann::detail::exception& ex) {
    throw InvalidInput("JSON syntax error at byte " + std::to_string(position) + ": " + ex.what());
  }

  Json result() { return std::move(root_); }

 private:
  Json* place(Json value) {
    if (stack_.empty()) {
      root_ = std::move(value);
      return &root_;
    }
    Json& top = *stack_.back();
    if (top.is_array()) {
      top.push_back(std::move(value));
      return &top.back();
    }
    top[key_] = std::move(value);
    return &top[key_];
  }
  bool put(Json value) {
    place(std::move(value));
    return true;
  }

  Json root_;
  std::vector<Json*> stack_;
  string_t key_;
};

[[noreturn]] void fail(const std::string& where, const std::string& what) { throw InvalidInput(where + ": " + what); }

const Json& field(const Json& j, const char* name, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(name);
  if (it == j.end()) fail(where, std::string("missing field \"") + name + "\"");
  return *it;
}

int int_from_json(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  auto v = j.get<long long>();
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) fail(where, "integer out of range");
  return static_cast<int>(v);
}

std::vector<Edge> pairs_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of pairs");
  std::vector<Edge> out;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const std::string w = where + "[" + std::to_string(k) + "]";
    if (!j[k].is_array() || j[k].size() != 2) fail(w, "expected a pair [i, j]");
    out.emplace_back(int_from_json(j[k][0], w + "[0]"), int_from_json(j[k][1], w + "[1]"));
  }
  return out;
}

Json pairs_to_json(const std::vector<Edge>& es) {
  Json a = Json::array();
  for (auto [u, v] : es) a.push_back(Json::array({u, v}));
  return a;
}

std::vector<int> ints_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of integers");
  std::vector<int> out;
  for (std::size_t k = 0; k < j.size(); ++k) out.push_back(int_from_json(j[k], where + "[" + std::to_string(k) + "]"));
  return out;
}

// Runs a constructor that may throw InvalidInput and prefixes the location.
template <class F>
auto located(const std::string& where, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const InvalidInput& e) {
    throw InvalidInput(where + ": " + e.what(), e.witness());
  } catch (const std::invalid_argument& e) {
    throw InvalidInput(where + ": " + e.what());
  }
}

}  // namespace

Json parse_json(std::string_view text) {
  ExactSax sax;
  Json::sax_parse(text.begin(), text.end(), &sax);
  return sax.result();
}

Json to_json(const Rat& value) { return Json(to_string(value)); }

Rat rat_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rat(BigInt(j.dump()));
  if (j.is_string()) return located(where, [&] { return parse_rat(j.get<std::string>()); });
  fail(where, "expected a number or a fraction string");
}

Json to_json(const Graph& g) {
  Json j;
  j["n"] = g.size();
  j["edges"] = pairs_to_json(g.edges());
  return j;
}

Json to_json(const Digraph& d) {
  Json j;
  j["n"] = d.size();
  j["arcs"] = pairs_to_json(d.arcs());
  return j;
}

Json to_json(const Structure& s) {
  return std::visit([](const auto& x) { return to_json(x); }, s);
}

bool looks_like_structure(const Json& j) {
  return j.is_object() && j.contains("n") && (j.contains("edges") || j.contains("arcs"));
}

Structure structure_from_json(const Json& j, const std::string& where) {
  const int n = int_from_json(field(j, "n", where), where + ".n");
  if (n < 0) fail(where + ".n", "vertex count must be non-negative");
  const bool has_edges = j.contains("edges"), has_arcs = j.contains("arcs");
  if (has_edges == has_arcs) fail(where, "expected exactly one of \"edges\" or \"arcs\"");
  if (has_edges) {
    auto es = pairs_from_json(j["edges"], where + ".edges");
    return located(where + ".edges", [&] {
      Graph g(n);
      for (auto [u, v] : es) g.add_edge(u, v);
      return Structure(g);
    });
  }
  auto as = pairs_from_json(j["arcs"], where + ".arcs");
  return located(where + ".arcs", [&] {
    Digraph d(n);
    for (auto [u, v] : as) d.add_arc(u, v);
    return Structure(d);
  });
}

Json to_json(const Representation& rep) {
  Json j;
  j["kind"] = to_string(rep.kind);
  Json items = Json::array();
  for (const auto& item : rep.items) {
    Json it;
    it["lo"] = to_json(item.interval.lo());
    it["hi"] = to_json(item.interval.hi());
    if (item.point) it["point"] = to_json(*item.point);
    if (item.tolerance) it["tolerance"] = to_json(*item.tolerance);
    items.push_back(std::move(it));
  }
  j["items"] = std::move(items);
  return j;
}

bool looks_like_rep(const Json& j) { return j.is_object() && j.contains("kind") && j.contains("items"); }

Representation rep_from_json(const Json& j, const std::string& where) {
  const Json& kind = field(j, "kind", where);
  if (!kind.is_string()) fail(where + ".kind", "expected a string");
  Representation rep;
  rep.kind = located(where + ".kind", [&] { return parse_rep_kind(kind.get<std::string>()); });
  const Json& items = field(j, "items", where);
  if (!items.is_array()) fail(where + ".items", "expected an array");
  for (std::size_t k = 0; k < items.size(); ++k) {
    const std::string w = where + ".items[" + std::to_string(k) + "]";
    const Json& it = items[k];
    Rat lo = rat_from_json(field(it, "lo", w), w + ".lo");
    Rat hi = rat_from_json(field(it, "hi", w), w + ".hi");
    RepItem item{located(w, [&] { return Interval(lo, hi); }), std::nullopt, std::nullopt};
    if (it.contains("point")) item.point = rat_from_json(it["point"], w + ".point");
    if (it.contains("tolerance")) item.tolerance = rat_from_json(it["tolerance"], w + ".tolerance");
    rep.items.push_back(std::move(item));
  }
  return located(where, [&] { return normalized(std::move(rep)); });
}

Json to_json(const Ordering& ord) { return Json(ord.perm); }

Ordering ordering_from_json(const Json& j, const std::string& where) { return Ordering{ints_from_json(j, where)}; }

Json to_json(const Labeling& f) {
  Json a = Json::array();
  for (const auto& v : f.values) a.push_back(to_json(v));
  return a;
}

Labeling labeling_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of labels");
  Labeling f;
  for (std::size_t k = 0; k < j.size(); ++k) f.values.push_back(rat_from_json(j[k], where + "[" + std::to_string(k) + "]"));
  return f;
}

Json to_json(const BinaryMatrix& m) { return Json(m.to_rows()); }

Json to_json(const ConditionResult& r) {
  Json j;
  j["holds"] = r.holds;
  if (!r.holds) {
    j["violation"] = r.violation;
    j["clause"] = r.clause;
  }
  return j;
}

namespace {

Json payload_json(const Certificate& c) {
  Json p;
  p["kind"] = to_string(c.kind());
  if (const auto* ord = std::get_if<Ordering>(&c.payload)) {
    p["ordering"] = to_json(*ord);
  } else if (const auto* rep = std::get_if<Representation>(&c.payload)) {
    p["representation"] = to_json(*rep);
  } else if (const auto* f = std::get_if<Labeling>(&c.payload)) {
    p["labeling"] = to_json(*f);
  } else if (const auto* ob = std::get_if<ObstructionPair>(&c.payload)) {
    p["pair"] = Json::array({ob->u, ob->v});
    p["common"] = ob->common.vertices;
    if (ob->claw) p["claw"] = Json(std::vector<int>(ob->claw->begin(), ob->claw->end()));
  } else if (const auto* form = std::get_if<BlockForm>(&c.payload)) {
    p["ordering"] = to_json(form->ordering);
    if (form->split)
      p["split"] = *form->split;
    else
      p["split"] = "pure_N";
  }
  return p;
}

}  // namespace

Json to_json(const Certificate& c) {
  Json j;
  j["verdict"] = to_string(c.verdict);
  j["claim"] = c.claim;
  if (c.condition) j["condition"] = to_string(*c.condition);
  j["certificate"] = payload_json(c);
  if (!c.refutations.empty()) {
    Json refs = Json::array();
    for (const auto& r : c.refutations) {
      Json o;
      o["ordering"] = to_json(r.ordering);
      o["reason"] = r.reason;
      if (!r.witness.empty()) o["witness"] = r.witness;
      if (!r.constraints.empty()) o["constraints"] = r.constraints;
      refs.push_back(std::move(o));
    }
    j["refutations"] = std::move(refs);
  }
  j["stats"] = Json{{"orderings", c.stats.orderings}, {"branches", c.stats.branches}};
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

Certificate certificate_from_json(const Json& j) {
  const std::string where = "certificate";
  if (!j.is_object()) fail(where, "expected an object");
  Certificate c;
  const Json* body = &j;
  if (j.contains("certificate")) {
    body = &j["certificate"];
    if (j.contains("verdict")) {
      const auto v = j["verdict"].get<std::string>();
      c.verdict = v == "yes" ? Verdict::yes : v == "no" ? Verdict::no : Verdict::unknown;
    }
    if (j.contains("claim")) c.claim = j["claim"].get<std::string>();
    if (j.contains("condition"))
      c.condition = located("condition", [&] { return parse_condition_kind(j["condition"].get<std::string>()); });
  }
  const Json& kind = field(*body, "kind", where);
  if (!kind.is_string()) fail(where + ".kind", "expected a string");
  const std::string k = kind.get<std::string>();
  if (k == "ordering") {
    c.payload = ordering_from_json(field(*body, "ordering", where), where + ".ordering");
  } else if (k == "representation") {
    c.payload = rep_from_json(field(*body, "representation", where), where + ".representation");
  } else if (k == "labeling") {
    c.payload = labeling_from_json(field(*body, "labeling", where), where + ".labeling");
  } else if (k == "obstruction_pair") {
    auto pair = ints_from_json(field(*body, "pair", where), where + ".pair");
    if (pair.size() != 2) fail(where + ".pair", "expected two vertices");
    ObstructionPair ob{pair[0], pair[1], {}, std::nullopt};
    if (body->contains("claw")) {
      auto claw = ints_from_json((*body)["claw"], where + ".claw");
      if (claw.size() != 4) fail(where + ".claw", "expected four vertices");
      ob.claw = std::array<int, 4>{claw[0], claw[1], claw[2], claw[3]};
    }
    c.payload = std::move(ob);
  } else if (k == "block_form") {
    BlockForm form{ordering_from_json(field(*body, "ordering", where), where + ".ordering"), std::nullopt};
    const Json& split = field(*body, "split", where);
    if (!split.is_string()) form.split = int_from_json(split, where + ".split");
    c.payload = std::move(form);
  } else if (k != "none") {
    fail(where + ".kind", "unknown certificate kind \"" + k + "\"");
  }
  if (j.contains("refutations")) {
    const Json& refs = j["refutations"];
    if (!refs.is_array()) fail("refutations", "expected an array");
    for (std::size_t i = 0; i < refs.size(); ++i) {
      const std::string at = "refutations[" + std::to_string(i) + "]";
      Refutation r;
      r.ordering = ordering_from_json(field(refs[i], "ordering", at), at + ".ordering");
      const Json& reason = field(refs[i], "reason", at);
      if (!reason.is_string()) fail(at + ".reason", "expected a string");
      r.reason = reason.get<std::string>();
      if (refs[i].contains("witness")) r.witness = ints_from_json(refs[i]["witness"], at + ".witness");
      if (refs[i].contains("constraints")) r.constraints = refs[i]["constraints"].get<std::vector<std::string>>();
      c.refutations.push_back(std::move(r));
    }
  }
  return c;
}

Json to_json(const Instance& in) {
  Json j;
  j["name"] = in.name;
  j["description"] = in.description;
  j["structure"] = to_json(in.structure);
  if (!in.vertex_names.empty()) j["vertex_names"] = in.vertex_names;
  if (in.rep) j["rep"] = to_json(*in.rep);
  if (in.rep_structure) {
    j["rep_structure"] = to_json(*in.rep_structure);
    j["rep_vertices"] = in.rep_vertices;
  }
  if (in.labeling) j["labeling"] = to_json(*in.labeling);
  Json exp = Json::array();
  for (const auto& e : in.expected) exp.push_back(Json{{"class", e.cls}, {"member", e.member}});
  j["expected"] = std::move(exp);
  return j;
}

Instance instance_from_json(const Json& j) {
  Instance in;
  if (j.contains("name")) in.name = j["name"].get<std::string>();
  if (j.contains("description")) in.description = j["description"].get<std::string>();
  in.structure = structure_from_json(field(j, "structure", "instance"), "instance.structure");
  if (j.contains("rep")) in.rep = rep_from_json(j["rep"], "instance.rep");
  if (j.contains("rep_structure")) in.rep_structure = structure_from_json(j["rep_structure"], "instance.rep_structure");
  if (j.contains("rep_vertices")) in.rep_vertices = ints_from_json(j["rep_vertices"], "instance.rep_vertices");
  if (j.contains("labeling")) in.labeling = labeling_from_json(j["labeling"], "instance.labeling");
  if (j.contains("vertex_names")) in.vertex_names = j["vertex_names"].get<std::vector<std::string>>();
  if (j.contains("expected"))
    for (const auto& e : j["expected"]) in.expected.push_back({e.at("class").get<std::string>(), e.at("member").get<bool>()});
  return in;
}

std::string to_edgelist(const Structure& s) {
  auto es = std::visit(
      [](const auto& x) {
        if constexpr (std::is_same_v<std::decay_t<decltype(x)>, Graph>)
          return x.edges();
        else
          return x.arcs();
      },
      s);
  std::ostringstream out;
  out << structure_size(s) << ' ' << es.size() << '\n';
  for (auto [u, v] : es) out << u << ' ' << v << '\n';
  return out.str();
}

namespace {

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r' || line[i] == ',')) ++i;
    std::size_t start = i;
    while (i < line.size() && !(line[i] == ' ' || line[i] == '\t' || line[i] == '\r' || line[i] == ',')) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

int to_int(std::string_view tok, const std::string& where) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) fail(where, "expected an integer, got \"" + std::string(tok) + "\"");
  return v;
}

}  // namespace

Structure parse_edgelist(std::string_view text, bool directed) {
  std::vector<std::vector<std::string_view>> lines;
  std::vector<int> line_no;
  int no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++no;
    auto line = text.substr(pos, end - pos);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto toks = tokens(line);
    if (!toks.empty()) {
      lines.push_back(toks);
      line_no.push_back(no);
    }
    pos = end + 1;
  }
  if (lines.empty()) fail("line 1", "empty edge list");
  const std::string head = "line " + std::to_string(line_no[0]);
  if (lines[0].size() != 2) fail(head, "expected \"n m\"");
  const int n = to_int(lines[0][0], head);
  const int m = to_int(lines[0][1], head);
  if (n < 0 || m < 0) fail(head, "counts must be non-negative");
  if (static_cast<int>(lines.size()) - 1 != m)
    fail(head, "header announces " + std::to_string(m) + " edges but " + std::to_string(lines.size() - 1) + " follow");
  Graph g(directed ? 0 : n);
  Digraph d(directed ? n : 0);
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const std::string w = "line " + std::to_string(line_no[k]);
    if (lines[k].size() != 2) fail(w, "expected \"i j\"");
    int u = to_int(lines[k][0], w), v = to_int(lines[k][1], w);
    located(w, [&] {
      if (directed)
        d.add_arc(u, v);
      else
        g.add_edge(u, v);
      return 0;
    });
  }
  if (directed) return d;
  return g;
}

std::vector<int> parse_int_list(std::string_view text, const std::string& what) {
  std::vector<int> out;
  for (auto tok : tokens(text)) out.push_back(to_int(tok, what));
  return out;
}

std::vector<Rat> parse_rat_list(std::string_view text, const std::string& what) {
  std::vector<Rat> out;
  for (auto tok : tokens(text)) out.push_back(located(what, [&] { return parse_rat(tok); }));
  return out;
}

}  // namespace ptg::io
