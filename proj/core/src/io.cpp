#include "vgit/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "vgit/errors.hpp"

namespace vgit {

namespace {

using nlohmann::json;

json parse(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string(what) + ": JSON parse error at byte " +
                          std::to_string(e.byte) + ": " + e.what());
  }
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Rational rat(const json& j, const std::string& field) {
  if (!j.is_string())
    throw ValidationError(field + " must be a \"p/q\" string (decimals are not accepted)");
  return Rational::parse(j.get<std::string>());
}

int integer(const json& j, const std::string& field) {
  if (!j.is_number_integer()) throw ValidationError(field + " must be an integer");
  return j.get<int>();
}

const json& member(const json& j, const char* key, const char* what) {
  auto it = j.find(key);
  if (it == j.end())
    throw ValidationError(std::string(what) + ": missing field \"" + key + "\"");
  return *it;
}

}  // namespace

std::string to_json(const Linearization& L) {
  json j;
  j["d"] = L.d();
  j["n"] = L.n();
  j["gamma"] = L.gamma().str();
  json w = json::array();
  for (const Rational& c : L.weights()) w.push_back(c.str());
  j["weights"] = std::move(w);
  return j.dump(2);
}

Linearization linearization_from_json(const std::string& text) {
  json j = parse(text, "linearization");
  int d = integer(member(j, "d", "linearization"), "d");
  int n = integer(member(j, "n", "linearization"), "n");
  Rational gamma = rat(member(j, "gamma", "linearization"), "gamma");
  const json& jw = member(j, "weights", "linearization");
  if (!jw.is_array()) throw ValidationError("weights must be an array of \"p/q\" strings");
  std::vector<Rational> w;
  for (size_t i = 0; i < jw.size(); ++i) w.push_back(rat(jw[i], "weights[" + std::to_string(i) + "]"));
  return Linearization(d, n, std::move(gamma), std::move(w));
}

Linearization load_linearization(const std::string& path) {
  return linearization_from_json(slurp(path));
}

void save_linearization(const Linearization& L, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write " + path);
  out << to_json(L) << "\n";
}

std::string to_json(const DualTree& T) {
  json j;
  j["n"] = T.n;
  j["vertices"] = T.num_vertices;
  json e = json::array();
  for (const auto& [a, b] : T.edges) e.push_back(json::array({a, b}));
  j["edges"] = std::move(e);
  json legs = json::array();
  for (int v : T.leg_vertex) legs.push_back(v);
  j["legs"] = std::move(legs);
  return j.dump(2);
}

DualTree tree_from_json(const std::string& text) {
  json j = parse(text, "tree");
  DualTree t;
  t.n = integer(member(j, "n", "tree"), "n");
  t.num_vertices = integer(member(j, "vertices", "tree"), "vertices");
  const json& je = member(j, "edges", "tree");
  if (!je.is_array()) throw ValidationError("tree edges must be an array of [a, b] pairs");
  for (size_t e = 0; e < je.size(); ++e) {
    if (!je[e].is_array() || je[e].size() != 2)
      throw ValidationError("edge " + std::to_string(e) + " must be a pair [a, b]");
    t.edges.emplace_back(integer(je[e][0], "edge endpoint"), integer(je[e][1], "edge endpoint"));
  }
  const json& jl = member(j, "legs", "tree");
  if (!jl.is_array() || static_cast<int>(jl.size()) != t.n)
    throw ValidationError("tree legs must be an array of " + std::to_string(t.n) +
                          " vertex indices (entry i holds mark i+1)");
  for (size_t i = 0; i < jl.size(); ++i)
    t.leg_vertex.push_back(integer(jl[i], "legs[" + std::to_string(i) + "]"));
  t.validate();
  return t;
}

DualTree load_tree(const std::string& path) { return tree_from_json(slurp(path)); }

std::string to_json(const CurveType& C) {
  json j;
  j["n"] = C.n;
  json comps = json::array();
  for (int d : C.component_degree) comps.push_back(json{{"degree", d}});
  j["components"] = std::move(comps);
  json sing = json::array();
  for (const auto& sp : C.singular_points)
    sing.push_back(json{{"components", sp.components}, {"marks", sp.marks}});
  j["singular_points"] = std::move(sing);
  json smooth = json::array();
  for (const auto& loc : C.smooth_locations)
    smooth.push_back(json{{"component", loc.component}, {"marks", loc.marks}});
  j["smooth_marks"] = std::move(smooth);
  return j.dump(2);
}

CurveType curve_from_json(const std::string& text) {
  json j = parse(text, "curve");
  CurveType c;
  c.n = integer(member(j, "n", "curve"), "n");
  const json& jc = member(j, "components", "curve");
  if (!jc.is_array() || jc.empty())
    throw ValidationError("curve components must be a nonempty array");
  for (size_t i = 0; i < jc.size(); ++i)
    c.component_degree.push_back(
        integer(member(jc[i], "degree", "component"), "component degree"));
  for (const json& js : member(j, "singular_points", "curve")) {
    CurveType::SingularPoint sp;
    for (const json& comp : member(js, "components", "singular point"))
      sp.components.push_back(integer(comp, "singular point component"));
    for (const json& m : member(js, "marks", "singular point"))
      sp.marks.push_back(integer(m, "singular point mark"));
    c.singular_points.push_back(std::move(sp));
  }
  for (const json& jl : member(j, "smooth_marks", "curve")) {
    CurveType::SmoothLocation loc;
    loc.component = integer(member(jl, "component", "smooth location"), "component");
    for (const json& m : member(jl, "marks", "smooth location"))
      loc.marks.push_back(integer(m, "smooth location mark"));
    c.smooth_locations.push_back(std::move(loc));
  }
  c.validate();
  return c;
}

CurveType load_curve(const std::string& path) { return curve_from_json(slurp(path)); }

ExtremalAssignment assignment_from_json(const std::string& text) {
  json j = parse(text, "assignment");
  std::string rule = member(j, "rule", "assignment").get<std::string>();
  if (rule == "empty") return ExtremalAssignment::empty();
  if (rule == "unmarked") return ExtremalAssignment::unmarked();
  if (rule == "tails-within") {
    int n = integer(member(j, "n", "assignment"), "n");
    std::vector<MarkedSubset> groups;
    for (const json& jg : member(j, "groups", "assignment")) {
      std::vector<int> marks;
      for (const json& m : jg) marks.push_back(integer(m, "group mark"));
      groups.push_back(MarkedSubset::of_marks(marks, n));
    }
    return ExtremalAssignment::tails_within(std::move(groups));
  }
  if (rule == "git")
    return ExtremalAssignment::git(
        linearization_from_json(member(j, "linearization", "assignment").dump()));
  if (rule == "explicit") {
    int n = integer(member(j, "n", "assignment"), "n");
    std::vector<std::pair<DualTree, std::vector<int>>> entries;
    for (const json& je : member(j, "entries", "assignment")) {
      DualTree t = tree_from_json(member(je, "tree", "assignment entry").dump());
      std::vector<int> assigned;
      for (const json& v : member(je, "assigned", "assignment entry"))
        assigned.push_back(integer(v, "assigned vertex"));
      entries.emplace_back(std::move(t), std::move(assigned));
    }
    return ExtremalAssignment::explicit_table(n, entries);
  }
  throw ValidationError("unknown assignment rule \"" + rule +
                        "\" (expected empty, unmarked, tails-within, git, explicit)");
}

ExtremalAssignment load_assignment(const std::string& path) {
  return assignment_from_json(slurp(path));
}

namespace records {

std::string wall(const Wall& w, const Rational& witness_gamma) {
  json j;
  j["record"] = "wall";
  j["schema"] = kSchemaVersion;
  j["subset"] = w.subset.marks();
  j["k"] = w.k;
  j["d"] = w.d;
  j["n"] = w.n();
  j["witness_gamma"] = witness_gamma.str();
  return j.dump();
}

std::string scan_event(const ScanEvent& ev) {
  json j;
  j["record"] = "crossing";
  j["schema"] = kSchemaVersion;
  j["t"] = ev.t.str();
  j["gamma"] = ev.gamma.str();
  json walls = json::array();
  for (size_t i = 0; i < ev.walls.size(); ++i) {
    json w;
    if (ev.symmetric_classes) {
      w["class_size"] = ev.class_sizes[i];
      w["card"] = ev.walls[i].subset.card();
    } else {
      w["subset"] = ev.walls[i].subset.marks();
    }
    w["k"] = ev.walls[i].k;
    walls.push_back(std::move(w));
  }
  j["walls"] = std::move(walls);
  return j.dump();
}

std::string sigma_value(int card_or_minus1, const std::string& subset, int value) {
  json j;
  j["record"] = "sigma";
  j["schema"] = kSchemaVersion;
  if (card_or_minus1 >= 0)
    j["card"] = card_or_minus1;
  else
    j["subset"] = subset;
  j["sigma"] = value;
  return j.dump();
}

}  // namespace records

}  // namespace vgit
