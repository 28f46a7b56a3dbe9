#include "vgit/curves.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <sstream>

#include "vgit/errors.hpp"

namespace vgit {

CurveType CurveType::smooth(int d, int n) {
  CurveType c;
  c.n = n;
  c.component_degree = {d};
  for (int i = 1; i <= n; ++i) c.smooth_locations.push_back({0, {i}});
  return c;
}

int CurveType::total_degree() const {
  return std::accumulate(component_degree.begin(), component_degree.end(), 0);
}

namespace {

// Bipartite incidence graph: component nodes 0..C-1, singular nodes C..C+S-1.
std::vector<std::vector<int>> incidence(const CurveType& c) {
  const int C = static_cast<int>(c.component_degree.size());
  const int S = static_cast<int>(c.singular_points.size());
  std::vector<std::vector<int>> adj(C + S);
  for (int s = 0; s < S; ++s)
    for (int comp : c.singular_points[s].components) {
      adj[C + s].push_back(comp);
      adj[comp].push_back(C + s);
    }
  return adj;
}

CurveFragment collect_fragment(const CurveType& c, const std::vector<std::vector<int>>& adj,
                               int blocked, int start) {
  const int C = static_cast<int>(c.component_degree.size());
  std::vector<int> seen(adj.size(), 0);
  seen[blocked] = 1;
  seen[start] = 1;
  std::vector<int> stack{start};
  CurveFragment frag;
  std::uint64_t marks = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    if (v < C) {
      frag.components.push_back(v);
      frag.degree += c.component_degree[v];
    } else {
      for (int m : c.singular_points[v - C].marks) marks |= std::uint64_t{1} << (m - 1);
    }
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
  }
  for (const auto& loc : c.smooth_locations)
    if (std::find(frag.components.begin(), frag.components.end(), loc.component) !=
        frag.components.end())
      for (int m : loc.marks) marks |= std::uint64_t{1} << (m - 1);
  std::sort(frag.components.begin(), frag.components.end());
  frag.marks = MarkedSubset(marks, c.n);
  return frag;
}

}  // namespace

std::vector<CurveFragment> fragments_minus_component(const CurveType& C, int c) {
  auto adj = incidence(C);
  const int base = static_cast<int>(C.component_degree.size());
  std::vector<CurveFragment> out;
  for (int s = 0; s < static_cast<int>(C.singular_points.size()); ++s) {
    const auto& sp = C.singular_points[s];
    if (std::find(sp.components.begin(), sp.components.end(), c) == sp.components.end()) continue;
    CurveFragment frag = collect_fragment(C, adj, c, base + s);
    frag.via_singular = s;
    out.push_back(std::move(frag));
  }
  return out;
}

std::vector<CurveFragment> fragments_minus_singular(const CurveType& C, int s) {
  auto adj = incidence(C);
  const int base = static_cast<int>(C.component_degree.size());
  std::vector<CurveFragment> out;
  for (int comp : C.singular_points[s].components) {
    CurveFragment frag = collect_fragment(C, adj, base + s, comp);
    frag.via_singular = s;
    out.push_back(std::move(frag));
  }
  return out;
}

MarkedSubset CurveType::marks_on_component(int c) const {
  std::uint64_t m = 0;
  for (const auto& loc : smooth_locations)
    if (loc.component == c)
      for (int mk : loc.marks) m |= std::uint64_t{1} << (mk - 1);
  for (const auto& sp : singular_points)
    if (std::find(sp.components.begin(), sp.components.end(), c) != sp.components.end())
      for (int mk : sp.marks) m |= std::uint64_t{1} << (mk - 1);
  return {m, n};
}

void CurveType::validate() const {
  if (n < 1) throw ValidationError("curve needs marks");
  const int C = static_cast<int>(component_degree.size());
  if (C < 1) throw ValidationError("curve needs at least one component");
  for (int c = 0; c < C; ++c)
    if (component_degree[c] < 1)
      throw ValidationError("component " + std::to_string(c) + " has degree " +
                            std::to_string(component_degree[c]) + " < 1");
  int hyper = 0;
  for (size_t s = 0; s < singular_points.size(); ++s) {
    const auto& sp = singular_points[s];
    if (sp.multiplicity() < 2)
      throw ValidationError("singular point " + std::to_string(s) + " has multiplicity " +
                            std::to_string(sp.multiplicity()) + " < 2");
    std::vector<int> comps = sp.components;
    std::sort(comps.begin(), comps.end());
    if (std::adjacent_find(comps.begin(), comps.end()) != comps.end())
      throw ValidationError("singular point " + std::to_string(s) +
                            " lists a component twice");
    for (int c : comps)
      if (c < 0 || c >= C)
        throw ValidationError("singular point " + std::to_string(s) +
                              " references missing component " + std::to_string(c));
    hyper += sp.multiplicity() - 1;
  }
  if (C - hyper != 1)
    throw ValidationError("incidence structure is not a hypertree: #components - sum(m-1) = " +
                          std::to_string(C - hyper) + " != 1");
  // connectivity of the bipartite graph
  auto adj = incidence(*this);
  std::vector<int> seen(adj.size(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
  }
  for (int c = 0; c < C; ++c)
    if (!seen[c]) throw ValidationError("component " + std::to_string(c) + " is disconnected");
  // marks form a total map
  std::vector<int> where(n, 0);
  auto account = [&](const std::vector<int>& marks, const std::string& what) {
    for (int m : marks) {
      if (m < 1 || m > n)
        throw ValidationError("mark " + std::to_string(m) + " out of range at " + what);
      if (where[m - 1]++)
        throw ValidationError("mark " + std::to_string(m) + " placed twice (" + what + ")");
    }
  };
  for (size_t s = 0; s < singular_points.size(); ++s)
    account(singular_points[s].marks, "singular point " + std::to_string(s));
  for (size_t l = 0; l < smooth_locations.size(); ++l) {
    const auto& loc = smooth_locations[l];
    if (loc.component < 0 || loc.component >= C)
      throw ValidationError("smooth location " + std::to_string(l) +
                            " references missing component");
    if (loc.marks.empty())
      throw ValidationError("smooth location " + std::to_string(l) + " carries no marks");
    account(loc.marks, "smooth location " + std::to_string(l));
  }
  for (int m = 1; m <= n; ++m)
    if (!where[m - 1]) throw ValidationError("mark " + std::to_string(m) + " is unplaced");
}

namespace {

std::string encode_marks(const std::vector<int>& marks) {
  std::vector<int> s = marks;
  std::sort(s.begin(), s.end());
  std::string out;
  for (int m : s) out += std::to_string(m) + ",";
  return out;
}

// AHU canonical encoding of the bipartite incidence tree.
std::string ahu(const CurveType& c, const std::vector<std::vector<int>>& adj, int v, int parent) {
  const int C = static_cast<int>(c.component_degree.size());
  std::string label;
  if (v < C) {
    std::vector<std::string> groups;
    for (const auto& loc : c.smooth_locations)
      if (loc.component == v) groups.push_back(encode_marks(loc.marks));
    std::sort(groups.begin(), groups.end());
    label = "C" + std::to_string(c.component_degree[v]) + "[";
    for (const auto& g : groups) label += g + ";";
    label += "]";
  } else {
    const auto& sp = c.singular_points[v - C];
    label = "S" + std::to_string(sp.multiplicity()) + "[" + encode_marks(sp.marks) + "]";
  }
  std::vector<std::string> kids;
  for (int w : adj[v])
    if (w != parent) kids.push_back(ahu(c, adj, w, v));
  std::sort(kids.begin(), kids.end());
  std::string out = label + "(";
  for (const auto& k : kids) out += k;
  return out + ")";
}

}  // namespace

std::string CurveType::canonical_key() const {
  auto adj = incidence(*this);
  const int C = static_cast<int>(component_degree.size());
  // root at the node holding mark 1
  int root = -1;
  for (size_t s = 0; s < singular_points.size(); ++s)
    for (int m : singular_points[s].marks)
      if (m == 1) root = C + static_cast<int>(s);
  if (root < 0)
    for (const auto& loc : smooth_locations)
      for (int m : loc.marks)
        if (m == 1) root = loc.component;
  if (root < 0) throw ValidationError("mark 1 is unplaced");
  return std::to_string(n) + "#" + ahu(*this, adj, root, -1);
}

std::string CurveType::str() const {
  std::ostringstream os;
  os << "curve(n=" << n << ", degrees=[";
  for (size_t c = 0; c < component_degree.size(); ++c) {
    if (c) os << ",";
    os << component_degree[c];
  }
  os << "]";
  for (const auto& sp : singular_points) {
    os << ", sing(m=" << sp.multiplicity() << " at {";
    for (size_t i = 0; i < sp.components.size(); ++i) {
      if (i) os << ",";
      os << sp.components[i];
    }
    os << "} marks=" << encode_marks(sp.marks) << ")";
  }
  for (const auto& loc : smooth_locations)
    os << ", loc(c" << loc.component << " marks=" << encode_marks(loc.marks) << ")";
  os << ")";
  return os.str();
}

std::vector<int> degree_assignment(const DualTree& T, SigmaOracle& sig) {
  const Linearization& L = sig.lin();
  if (T.n != L.n())
    throw ValidationError("tree has " + std::to_string(T.n) + " legs but linearization has n=" +
                          std::to_string(L.n()));
  // reject on-wall evaluation of any involved hyperplane
  std::vector<std::pair<std::uint64_t, int>> violated;
  std::vector<int> deg(T.num_vertices, 0);
  for (int v = 0; v < T.num_vertices; ++v) {
    int s = 0;
    for (const auto& part : T.complement_leg_components(v)) {
      int k = 0;
      if (on_wall_of(part, L, &k)) {
        auto c = part.canonical();
        violated.emplace_back(c.mask(), part.is_canonical() ? k : L.d() - 1 - k);
      } else {
        s += sig.sigma(part);
      }
    }
    deg[v] = L.d() - s;
  }
  if (!violated.empty()) {
    std::sort(violated.begin(), violated.end());
    violated.erase(std::unique(violated.begin(), violated.end()), violated.end());
    throw OnWallError("degree_assignment at an on-wall linearization " + L.str(),
                      std::move(violated));
  }
  int total = 0;
  for (int v = 0; v < T.num_vertices; ++v) {
    assert(deg[v] >= 0);
    total += deg[v];
  }
  assert(total == L.d());
  (void)total;
  return deg;
}

std::vector<int> degree_assignment(const DualTree& T, const Linearization& L) {
  SigmaOracle sig(L);
  return degree_assignment(T, sig);
}

std::vector<int> z_assignment(const DualTree& T, const Linearization& L) {
  auto deg = degree_assignment(T, L);
  std::vector<int> out;
  for (int v = 0; v < T.num_vertices; ++v)
    if (deg[v] == 0) out.push_back(v);
  return out;
}

namespace {

void sort_curve(CurveType& c) {
  for (auto& sp : c.singular_points) {
    std::sort(sp.components.begin(), sp.components.end());
    std::sort(sp.marks.begin(), sp.marks.end());
  }
  for (auto& loc : c.smooth_locations) std::sort(loc.marks.begin(), loc.marks.end());
  std::sort(c.singular_points.begin(), c.singular_points.end(),
            [](const auto& a, const auto& b) {
              return std::tie(a.components, a.marks) < std::tie(b.components, b.marks);
            });
  std::sort(c.smooth_locations.begin(), c.smooth_locations.end(),
            [](const auto& a, const auto& b) {
              return std::tie(a.component, a.marks) < std::tie(b.component, b.marks);
            });
}

CurveType contract_with_degrees(const DualTree& T, const std::vector<int>& deg) {
  const int V = T.num_vertices;
  std::vector<int> comp_of(V, -1);
  CurveType out;
  out.n = T.n;
  for (int v = 0; v < V; ++v)
    if (deg[v] > 0) {
      comp_of[v] = static_cast<int>(out.component_degree.size());
      out.component_degree.push_back(deg[v]);
    }
  if (out.component_degree.empty())
    throw Error("internal: every vertex assigned; extremal assignments are proper");

  auto adj = T.neighbors();
  // maximal connected assigned blobs
  std::vector<int> blob(V, -1);
  int nblobs = 0;
  for (int v = 0; v < V; ++v) {
    if (deg[v] != 0 || blob[v] >= 0) continue;
    int id = nblobs++;
    std::vector<int> stack{v};
    blob[v] = id;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : adj[u])
        if (deg[w] == 0 && blob[w] < 0) {
          blob[w] = id;
          stack.push_back(w);
        }
    }
  }
  std::vector<std::vector<int>> blob_boundary(nblobs);  // adjacent surviving components
  std::vector<std::uint64_t> blob_legs(nblobs, 0);
  for (int v = 0; v < V; ++v)
    if (blob[v] >= 0) blob_legs[blob[v]] |= T.legs_at(v).mask();
  for (const auto& [a, b] : T.edges) {
    bool aa = deg[a] == 0, bb = deg[b] == 0;
    if (!aa && !bb) {
      out.singular_points.push_back({{comp_of[a], comp_of[b]}, {}});
    } else if (aa != bb) {
      int bl = blob[aa ? a : b];
      blob_boundary[bl].push_back(comp_of[aa ? b : a]);
    }
  }
  for (int bl = 0; bl < nblobs; ++bl) {
    std::vector<int> marks;
    for (int i = 1; i <= T.n; ++i)
      if ((blob_legs[bl] >> (i - 1)) & 1) marks.push_back(i);
    auto& bd = blob_boundary[bl];
    if (bd.size() == 1) {
      assert(!marks.empty());
      out.smooth_locations.push_back({bd[0], marks});
    } else {
      assert(bd.size() >= 2);
      out.singular_points.push_back({bd, marks});
    }
  }
  // surviving legs stay distinct smooth points
  for (int i = 1; i <= T.n; ++i) {
    int v = T.leg_vertex[i - 1];
    if (deg[v] > 0) out.smooth_locations.push_back({comp_of[v], {i}});
  }
  sort_curve(out);
  out.validate();
  return out;
}

}  // namespace

CurveType z_contract(const DualTree& T, SigmaOracle& sig) {
  return contract_with_degrees(T, degree_assignment(T, sig));
}

CurveType z_contract(const DualTree& T, const Linearization& L) {
  SigmaOracle sig(L);
  return z_contract(T, sig);
}

DualTree resolve(const CurveType& C) {
  C.validate();
  DualTree t;
  t.n = C.n;
  t.num_vertices = static_cast<int>(C.component_degree.size());
  t.leg_vertex.assign(C.n, -1);
  for (const auto& sp : C.singular_points) {
    if (sp.multiplicity() == 2 && sp.marks.empty()) {
      t.edges.emplace_back(sp.components[0], sp.components[1]);
    } else {
      int v = t.num_vertices++;
      for (int c : sp.components) t.edges.emplace_back(c, v);
      for (int m : sp.marks) t.leg_vertex[m - 1] = v;
    }
  }
  for (const auto& loc : C.smooth_locations) {
    if (loc.marks.size() == 1) {
      t.leg_vertex[loc.marks[0] - 1] = loc.component;
    } else {
      int v = t.num_vertices++;
      t.edges.emplace_back(loc.component, v);
      for (int m : loc.marks) t.leg_vertex[m - 1] = v;
    }
  }
  try {
    t.validate();
  } catch (const ValidationError& e) {
    throw ValidationError(std::string("curve has no DM-stable resolution: ") + e.what());
  }
  return t;
}

StabilityReport is_git_stable(const CurveType& C, const Linearization& L,
                              const EnumLimits& lim) {
  require_generic(L, "is_git_stable", lim);
  C.validate();
  StabilityReport rep;
  const Rational one(1);
  for (size_t l = 0; l < C.smooth_locations.size(); ++l) {
    Rational w(0);
    for (int m : C.smooth_locations[l].marks) w += L.weight(m);
    if (w > one)
      rep.violations.push_back("smooth-point weight " + w.str() + " exceeds 1 at location " +
                               encode_marks(C.smooth_locations[l].marks));
  }
  for (size_t s = 0; s < C.singular_points.size(); ++s) {
    const auto& sp = C.singular_points[s];
    int m = sp.multiplicity();
    Rational bound = one - Rational(m - 1) * L.gamma();
    Rational w(0);
    for (int mk : sp.marks) w += L.weight(mk);
    if (w >= bound)
      rep.violations.push_back("weight " + w.str() + " at multiplicity-" + std::to_string(m) +
                               " point reaches the bound 1-(m-1)gamma = " + bound.str());
    if (L.gamma() >= Rational(1, m - 1))
      rep.violations.push_back("multiplicity " + std::to_string(m) +
                               " singularity needs gamma < 1/" + std::to_string(m - 1) +
                               ", but gamma = " + L.gamma().str());
  }
  // tail degrees: every subcurve hanging off one singular point
  for (int s = 0; s < static_cast<int>(C.singular_points.size()); ++s) {
    auto parts = fragments_minus_singular(C, s);
    std::uint64_t point_marks = 0;
    for (int mk : C.singular_points[s].marks) point_marks |= std::uint64_t{1} << (mk - 1);
    const int P = static_cast<int>(parts.size());
    for (std::uint64_t sel = 1; sel + 1 < (std::uint64_t{1} << P); ++sel) {
      std::uint64_t marks = point_marks;
      int degree = 0;
      for (int j = 0; j < P; ++j)
        if ((sel >> j) & 1) {
          marks |= parts[j].marks.mask();
          degree += parts[j].degree;
        }
      MarkedSubset tail_marks(marks, C.n);
      int expected = sigma(tail_marks, L);
      if (degree != expected) {
        rep.violations.push_back("tail marked by " + tail_marks.str() + " has degree " +
                                 std::to_string(degree) + " but sigma = " +
                                 std::to_string(expected));
        break;  // one witness per singular point keeps the report readable
      }
    }
  }
  DualTree resolved;
  try {
    resolved = resolve(C);
  } catch (const ValidationError& e) {
    rep.stable = false;
    rep.note = e.what();
    return rep;
  }
  CurveType model = z_contract(resolved, L);
  rep.stable = model.marked_isomorphic(C);
  if (!rep.stable && rep.violations.empty() && !rep.note)
    rep.note = "stable model of the resolution is " + model.str();
  return rep;
}

int sigma_signed(const MarkedSubset& J, const Wall& W, const Linearization& L_wall,
                 bool plus_side) {
  const int d = W.d, k = W.k;
  if (J == W.subset) return plus_side ? k + 1 : k;
  if (J == W.subset.complement()) return plus_side ? d - 1 - k : d - k;
  if (on_wall_of(J, L_wall))
    throw OnWallError("sigma ambiguous at the wall point for subset " + J.str() +
                          " (the point lies on that wall too)",
                      {{J.canonical().mask(), 0}});
  return sigma(J, L_wall);
}

namespace {

// Checks that L sits inside the chamber adjacent to W on the requested side:
// phi(I) strictly between the wall level and the next one, every other subset
// on the same side of every integer as at the wall point.
bool adjacent_chamber_point(const Wall& W, const Linearization& L_wall, const Linearization& L,
                            bool plus_side, const EnumLimits& lim) {
  if (!L.is_interior()) return false;
  Rational p = phi(W.subset, L);
  if (plus_side && !(p > Rational(W.k) && p < Rational(W.k + 1))) return false;
  if (!plus_side && !(p < Rational(W.k) && p > Rational(W.k) - Rational(1))) return false;
  const int n = L.n();
  bool ok = true;
  if (L_wall.is_symmetric() && L.is_symmetric()) {
    for (int m = 1; m <= n - 1 && ok; ++m) {
      if (m == W.subset.card() || m == n - W.subset.card()) continue;  // the wall's own class
      MarkedSubset rep = MarkedSubset::prefix(m, n);
      Rational a = phi(rep, L_wall), b = phi(rep, L);
      if (b.is_integer() || a.floor() != b.floor()) ok = false;
    }
    return ok;
  }
  require_subset_cap(n, lim, "perturb_across verification");
  for_each_canonical_subset2(L_wall, L, [&](std::uint64_t mask, const Rational& cw,
                                            const Rational& cl) {
    if (!ok) return;
    if (mask == W.subset.mask()) return;
    Rational a = phi_of_weight(cw, L_wall), b = phi_of_weight(cl, L);
    if (a.is_integer()) {
      ok = false;  // wall point lies on another wall; cannot verify adjacency
      return;
    }
    if (b.is_integer() || a.floor() != b.floor()) ok = false;
  });
  return ok;
}

}  // namespace

std::pair<Linearization, Linearization> perturb_across(const Wall& W,
                                                       const Linearization& L_wall,
                                                       const EnumLimits& lim) {
  {
    int k = 0;
    if (!on_wall_of(W.subset, L_wall, &k) || k != W.k)
      throw ValidationError("linearization does not lie on the wall " + W.str());
  }
  const int n = L_wall.n();
  std::optional<Linearization> plus, minus;

  auto consider = [&](const Linearization& cand) {
    if (!plus && adjacent_chamber_point(W, L_wall, cand, true, lim)) plus = cand;
    if (!minus && adjacent_chamber_point(W, L_wall, cand, false, lim)) minus = cand;
  };

  Rational delta(1, 1024);
  for (int attempt = 0; attempt < 64 && (!plus || !minus); ++attempt, delta /= Rational(2)) {
    if (L_wall.is_symmetric()) {
      for (int dir : {+1, -1}) {
        Rational g = L_wall.gamma() + Rational(dir) * delta;
        if (g <= Rational(0) || g >= Rational(1)) continue;
        consider(Linearization::symmetric(L_wall.d(), n, g));
      }
    }
    // split the weights across the wall subset, cross-section untouched
    for (int dir : {+1, -1}) {
      const int m = W.subset.card();
      std::vector<Rational> w = L_wall.weights();
      for (int i = 1; i <= n; ++i) {
        if (W.subset.contains(i))
          w[i - 1] += Rational(dir) * delta / Rational(m);
        else
          w[i - 1] -= Rational(dir) * delta / Rational(n - m);
      }
      consider(Linearization(L_wall.d(), n, L_wall.gamma(), std::move(w)));
    }
  }
  if (!plus || !minus)
    throw Error("perturb_across failed to find adjacent chamber points for " + W.str() +
                " (the point may lie on several walls; pass explicit side points)");
  return {*plus, *minus};
}

IkBridge bridge_curve(const DualTree& T, const Wall& W, const Linearization& L_wall) {
  const int d = W.d, k = W.k;
  if (k < 1 || k > d - 2)
    throw ValidationError("no (I,k)-bridge exists at k = 0 or k = d-1 walls (got k=" +
                          std::to_string(k) + ")");
  T.validate();
  // locate the edge realizing the split I | I^c
  int split_edge = -1;
  bool first_is_I = false;
  for (size_t e = 0; e < T.edges.size(); ++e) {
    auto [a, b] = T.edge_split(static_cast<int>(e));
    if (a == W.subset) {
      split_edge = static_cast<int>(e);
      first_is_I = true;
    } else if (b == W.subset) {
      split_edge = static_cast<int>(e);
      first_is_I = false;
    }
  }
  if (split_edge < 0)
    throw ValidationError("tree has no edge splitting the marks as " + W.subset.str() + " | " +
                          W.subset.complement().str());

  // insert the bridge vertex D on the split edge
  DualTree t = T;
  int D = t.num_vertices++;
  auto [va, vb] = t.edges[split_edge];
  int v_I = first_is_I ? va : vb;
  int v_Ic = first_is_I ? vb : va;
  t.edges[split_edge] = {v_I, D};
  t.edges.emplace_back(D, v_Ic);

  // side of every vertex
  std::vector<int> side(t.num_vertices, 0);  // 1 = I side, -1 = I^c side, 0 = D
  {
    auto adj = t.neighbors();
    std::vector<int> stack{v_I};
    side[v_I] = 1;
    side[D] = 0;
    std::vector<int> seen(t.num_vertices, 0);
    seen[v_I] = seen[D] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[v])
        if (!seen[w]) {
          seen[w] = 1;
          side[w] = 1;
          stack.push_back(w);
        }
    }
    for (int v = 0; v < t.num_vertices; ++v)
      if (!seen[v]) side[v] = -1;
  }

  // signed degrees: the I side reads sigma on the minus side of the wall,
  // the I^c side on the plus side; D gets the remaining degree 1.
  std::vector<int> deg(t.num_vertices, 0);
  for (int v = 0; v < t.num_vertices; ++v) {
    if (v == D) {
      deg[v] = 1;
      continue;
    }
    int s = 0;
    for (const auto& part : t.complement_leg_components(v))
      s += sigma_signed(part, W, L_wall, side[v] < 0);
    deg[v] = d - s;
    if (deg[v] < 0)
      throw Error("internal: negative signed degree while building the bridge curve");
  }
  IkBridge out{W, contract_with_degrees(t, deg), 0, {}, {}};

  // locate D and the sides in the contracted curve
  std::vector<int> comp_of(t.num_vertices, -1);
  {
    int idx = 0;
    for (int v = 0; v < t.num_vertices; ++v)
      if (deg[v] > 0) comp_of[v] = idx++;
  }
  out.bridge_component = comp_of[D];
  for (int v = 0; v < t.num_vertices; ++v) {
    if (deg[v] == 0 || v == D) continue;
    (side[v] > 0 ? out.side_I : out.side_Ic).push_back(comp_of[v]);
  }
  int deg_I = 0, deg_Ic = 0;
  for (int c : out.side_I) deg_I += out.curve.component_degree[c];
  for (int c : out.side_Ic) deg_Ic += out.curve.component_degree[c];
  assert(deg_I == k && deg_Ic == d - (k + 1));
  return out;
}

bool is_ik_bridge(const CurveType& C, const Wall& W, const Linearization& L_wall) {
  const int d = W.d, k = W.k;
  if (k < 1 || k > d - 2) return false;
  if (C.total_degree() != d || C.n != W.n()) return false;
  for (int D = 0; D < static_cast<int>(C.component_degree.size()); ++D) {
    if (C.component_degree[D] != 1) continue;
    auto frags = fragments_minus_component(C, D);
    if (frags.size() != 2) continue;
    bool smooth_marked = false;
    for (const auto& loc : C.smooth_locations)
      if (loc.component == D) smooth_marked = true;
    if (smooth_marked) continue;  // marks interior to D are in neither side
    int iI, iIc;
    if (frags[0].marks == W.subset)
      iI = 0, iIc = 1;
    else if (frags[1].marks == W.subset)
      iI = 1, iIc = 0;
    else
      continue;
    if (frags[iIc].marks != W.subset.complement()) continue;
    if (frags[iI].degree != k || frags[iIc].degree != d - (k + 1)) continue;
    // signed degree conditions, component by component
    bool ok = true;
    for (int pass = 0; pass < 2 && ok; ++pass) {
      const auto& side = pass == 0 ? frags[iI] : frags[iIc];
      bool plus = pass == 1;
      for (int c : side.components) {
        int s = 0;
        for (const auto& piece : fragments_minus_component(C, c))
          s += sigma_signed(piece.marks, W, L_wall, plus);
        if (C.component_degree[c] != d - s) {
          ok = false;
          break;
        }
      }
    }
    if (ok) return true;
  }
  return false;
}

namespace {

std::vector<MarkedSubset> all_tail_marksets(const CurveType& C) {
  std::vector<MarkedSubset> out;
  for (int s = 0; s < static_cast<int>(C.singular_points.size()); ++s) {
    auto parts = fragments_minus_singular(C, s);
    std::uint64_t point_marks = 0;
    for (int mk : C.singular_points[s].marks) point_marks |= std::uint64_t{1} << (mk - 1);
    const int P = static_cast<int>(parts.size());
    for (std::uint64_t sel = 1; sel + 1 < (std::uint64_t{1} << P); ++sel) {
      std::uint64_t marks = point_marks;
      for (int j = 0; j < P; ++j)
        if ((sel >> j) & 1) marks |= parts[j].marks.mask();
      out.emplace_back(marks, C.n);
    }
  }
  return out;
}

}  // namespace

WallStabilityReport wall_stability(const CurveType& C, const Wall& W,
                                   const Linearization& L_wall,
                                   const std::optional<Linearization>& plus_side,
                                   const std::optional<Linearization>& minus_side,
                                   const EnumLimits& lim) {
  C.validate();
  {
    int k = 0;
    if (!on_wall_of(W.subset, L_wall, &k) || k != W.k)
      throw ValidationError("linearization does not lie on the wall " + W.str());
  }
  std::optional<Linearization> lp, lm;
  if (plus_side.has_value() != minus_side.has_value())
    throw ValidationError("wall_stability takes both side points or neither");
  if (plus_side && minus_side) {
    if (!adjacent_chamber_point(W, L_wall, *plus_side, true, lim) ||
        !adjacent_chamber_point(W, L_wall, *minus_side, false, lim))
      throw ValidationError(
          "supplied side points do not lie in the chambers adjacent to " + W.str());
    lp = plus_side;
    lm = minus_side;
  } else {
    auto violated = violated_walls(L_wall, lim);
    if (violated.size() != 1)
      throw OnWallError("wall_stability requires a point on exactly one wall; " + L_wall.str() +
                            " lies on " + std::to_string(violated.size()) +
                            " (pass explicit side points to override)",
                        std::move(violated));
    auto sides = perturb_across(W, L_wall, lim);
    lp = sides.first;
    lm = sides.second;
  }

  WallStabilityReport rep;
  const MarkedSubset I = W.subset, Ic = W.subset.complement();
  for (const auto& tail : all_tail_marksets(C))
    if (tail == I || tail == Ic) rep.has_IIc_tail = true;
  rep.stable_plus = is_git_stable(C, *lp, lim).stable;
  rep.stable_minus = is_git_stable(C, *lm, lim).stable;
  rep.bridge = is_ik_bridge(C, W, L_wall);
  if (!rep.has_IIc_tail)
    rep.cls = rep.stable_plus && rep.stable_minus ? WallStability::Stable : WallStability::Unstable;
  else if (rep.bridge)
    rep.cls = WallStability::StrictlySSBridgeClosedOrbit;
  else if (rep.stable_plus || rep.stable_minus)
    rep.cls = WallStability::StrictlySS;
  else
    rep.cls = WallStability::Unstable;
  return rep;
}

}  // namespace vgit
