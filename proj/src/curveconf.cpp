#include "rspin/curveconf.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "rspin/text.hpp"

namespace rspin::curveconf {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

CurveSystem::CurveSystem(std::vector<std::string> curves, std::vector<IntersectionPoint> points,
                         std::map<std::string, std::vector<std::string>> ribbon,
                         std::optional<Surface> ambient)
    : names_(std::move(curves)), points_(std::move(points)), ambient_(ambient) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!index_.emplace(names_[i], static_cast<int>(i)).second)
      fail(ErrorKind::InconsistentInput, "duplicate curve name '" + names_[i] + "'");
  }
  std::map<std::string, int> point_index;
  for (std::size_t k = 0; k < points_.size(); ++k) {
    const auto& p = points_[k];
    if (!point_index.emplace(p.id, static_cast<int>(k)).second)
      fail(ErrorKind::InconsistentInput, "duplicate point id '" + p.id + "'");
    if (p.first < 0 || p.second < 0 || p.first >= size() || p.second >= size())
      fail(ErrorKind::UnknownCurve, "point '" + p.id + "' references an unknown curve");
    if (p.first == p.second)
      fail(ErrorKind::InconsistentInput, "point '" + p.id + "' joins a curve to itself");
    if (p.sign != 1 && p.sign != -1)
      fail(ErrorKind::InconsistentInput, "point '" + p.id + "' has sign other than +1/-1");
  }

  ribbon_.assign(names_.size(), {});
  for (std::size_t k = 0; k < points_.size(); ++k) {
    ribbon_[points_[k].first].push_back(static_cast<int>(k));
    ribbon_[points_[k].second].push_back(static_cast<int>(k));
  }
  for (const auto& [curve, order] : ribbon) {
    auto it = index_.find(curve);
    if (it == index_.end()) fail(ErrorKind::UnknownCurve, "ribbon order for unknown curve '" + curve + "'");
    std::vector<int> given;
    for (const auto& id : order) {
      auto pt = point_index.find(id);
      if (pt == point_index.end())
        fail(ErrorKind::InconsistentInput, "ribbon of '" + curve + "' lists unknown point '" + id + "'");
      given.push_back(pt->second);
    }
    std::vector<int> a = given, b = ribbon_[it->second];
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b)
      fail(ErrorKind::InconsistentInput,
           "ribbon of '" + curve + "' must list each of its points exactly once");
    ribbon_[it->second] = std::move(given);
  }
}

CurveSystem CurveSystem::from_tree(std::vector<std::string> curves,
                                   const std::vector<std::pair<std::string, std::string>>& edges,
                                   std::optional<Surface> ambient) {
  std::map<std::string, int> idx;
  for (std::size_t i = 0; i < curves.size(); ++i) idx[curves[i]] = static_cast<int>(i);
  std::vector<IntersectionPoint> pts;
  UnionFind uf(static_cast<int>(curves.size()));
  for (std::size_t k = 0; k < edges.size(); ++k) {
    auto a = idx.find(edges[k].first);
    auto b = idx.find(edges[k].second);
    if (a == idx.end() || b == idx.end())
      fail(ErrorKind::UnknownCurve, "edge " + edges[k].first + " " + edges[k].second + " names an unknown curve");
    if (uf.find(a->second) == uf.find(b->second))
      fail(ErrorKind::InconsistentInput,
           "graph-only configurations must be trees; ribbon data is required otherwise");
    uf.unite(a->second, b->second);
    pts.push_back({"p" + std::to_string(k + 1), a->second, b->second, 1});
  }
  if (!curves.empty() && edges.size() + 1 != curves.size())
    fail(ErrorKind::Disconnected, "graph-only configuration is not connected");
  return CurveSystem(std::move(curves), std::move(pts), {}, ambient);
}

int CurveSystem::index_of(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) fail(ErrorKind::UnknownCurve, "unknown curve '" + name + "'");
  return it->second;
}

int CurveSystem::count_between(int i, int j) const {
  int n = 0;
  for (const auto& p : points_)
    if ((p.first == i && p.second == j) || (p.first == j && p.second == i)) ++n;
  return n;
}

int CurveSystem::algebraic_between(int i, int j) const {
  int n = 0;
  for (const auto& p : points_) {
    if (p.first == i && p.second == j) n += p.sign;
    if (p.first == j && p.second == i) n -= p.sign;
  }
  return n;
}

CurveSystem CurveSystem::relabeled(const std::vector<std::string>& new_names, int rotate_by) const {
  if (new_names.size() != names_.size())
    fail(ErrorKind::InconsistentInput, "relabeling must name every curve");
  std::map<std::string, std::vector<std::string>> order;
  for (std::size_t c = 0; c < ribbon_.size(); ++c) {
    std::vector<int> r = ribbon_[c];
    if (!r.empty()) {
      int shift = ((rotate_by % static_cast<int>(r.size())) + static_cast<int>(r.size())) % static_cast<int>(r.size());
      std::rotate(r.begin(), r.begin() + shift, r.end());
    }
    std::vector<std::string> ids;
    for (int k : r) ids.push_back(points_[k].id);
    order[new_names[c]] = std::move(ids);
  }
  return CurveSystem(new_names, points_, order, ambient_);
}

std::vector<std::vector<int>> IntersectionGraph::adjacency() const {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(vertices));
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  return adj;
}

IntersectionGraph intersection_graph(const CurveSystem& sys) {
  std::map<std::pair<int, int>, int> counts;
  for (const auto& p : sys.points()) ++counts[std::minmax(p.first, p.second)];
  IntersectionGraph g;
  g.vertices = sys.size();
  for (const auto& [pair, n] : counts) {
    if (n > 1)
      fail(ErrorKind::NotSimple, "curves " + sys.names()[pair.first] + " and " + sys.names()[pair.second] +
                                     " meet " + std::to_string(n) + " times");
    g.edges.push_back(pair);
  }
  return g;
}

bool is_connected(const IntersectionGraph& g) {
  if (g.vertices == 0) return false;
  UnionFind uf(g.vertices);
  for (auto [a, b] : g.edges) uf.unite(a, b);
  for (int v = 1; v < g.vertices; ++v)
    if (uf.find(v) != uf.find(0)) return false;
  return true;
}

bool is_tree(const IntersectionGraph& g) {
  return is_connected(g) && static_cast<int>(g.edges.size()) == g.vertices - 1;
}

bool induces_e6(const std::vector<std::vector<int>>& adj, const std::vector<int>& six) {
  if (six.size() != 6) return false;
  auto inside = [&](int v) { return std::find(six.begin(), six.end(), v) != six.end(); };
  std::vector<std::vector<int>> local(6);
  int edges = 0;
  for (int i = 0; i < 6; ++i)
    for (int w : adj[six[i]])
      if (inside(w)) {
        local[i].push_back(static_cast<int>(std::find(six.begin(), six.end(), w) - six.begin()));
        ++edges;
      }
  if (edges != 10) return false;
  int branch = -1;
  for (int i = 0; i < 6; ++i) {
    if (local[i].size() > 3) return false;
    if (local[i].size() == 3) {
      if (branch >= 0) return false;
      branch = i;
    }
  }
  if (branch < 0) return false;
  std::vector<int> arms;
  for (int start : local[branch]) {
    int prev = branch, cur = start, len = 1;
    while (local[cur].size() == 2) {
      int nxt = local[cur][0] == prev ? local[cur][1] : local[cur][0];
      if (nxt == branch) return false;
      prev = cur;
      cur = nxt;
      ++len;
      if (len > 5) return false;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  return arms == std::vector<int>{1, 2, 2};
}

std::optional<std::vector<int>> find_induced_e6(const IntersectionGraph& g) {
  const int n = g.vertices;
  if (n < 6) return std::nullopt;
  auto adj = g.adjacency();
  std::vector<int> pick(6);
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    if (induces_e6(adj, pick)) return pick;
    int i = 5;
    while (i >= 0 && pick[i] == n - 6 + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < 6; ++j) pick[j] = pick[j - 1] + 1;
  }
  return std::nullopt;
}

bool is_arboreal(const CurveSystem& sys) { return is_tree(intersection_graph(sys)); }

bool is_E_arboreal(const CurveSystem& sys) {
  auto g = intersection_graph(sys);
  return is_tree(g) && find_induced_e6(g).has_value();
}

// Half-edge 4k+s at point k: s = 0/2 leave along the first curve forwards/backwards,
// s = 1/3 the same for the second curve. Positive crossings rotate 0,1,2,3;
// negative crossings rotate 0,3,2,1.
std::vector<std::vector<int>> trace_faces(const CurveSystem& sys) {
  const auto& pts = sys.points();
  const int h = static_cast<int>(pts.size()) * 4;
  std::vector<int> alpha(h, -1), sigma(h);
  for (std::size_t k = 0; k < pts.size(); ++k) {
    int base = static_cast<int>(k) * 4;
    static const int pos[4] = {1, 2, 3, 0};
    static const int neg[4] = {3, 0, 1, 2};
    for (int s = 0; s < 4; ++s) sigma[base + s] = base + (pts[k].sign > 0 ? pos[s] : neg[s]);
  }
  auto slot = [&](int point, int curve, bool forward) {
    int s = pts[point].first == curve ? 0 : 1;
    return point * 4 + s + (forward ? 0 : 2);
  };
  for (int c = 0; c < sys.size(); ++c) {
    const auto& r = sys.ribbon()[c];
    for (std::size_t i = 0; i < r.size(); ++i) {
      int out = slot(r[i], c, true);
      int in = slot(r[(i + 1) % r.size()], c, false);
      alpha[out] = in;
      alpha[in] = out;
    }
  }
  std::vector<std::vector<int>> faces;
  std::vector<char> seen(h, 0);
  for (int start = 0; start < h; ++start) {
    if (seen[start]) continue;
    std::vector<int> face;
    int cur = start;
    while (!seen[cur]) {
      seen[cur] = 1;
      face.push_back(cur);
      cur = sigma[alpha[cur]];
    }
    faces.push_back(std::move(face));
  }
  return faces;
}

std::vector<NeighborhoodInvariants> component_invariants(const CurveSystem& sys) {
  UnionFind uf(sys.size());
  for (const auto& p : sys.points()) uf.unite(p.first, p.second);
  std::map<int, NeighborhoodInvariants> comp;
  std::vector<int> roots;
  for (int c = 0; c < sys.size(); ++c) {
    int root = uf.find(c);
    if (!comp.count(root)) roots.push_back(root);
    comp[root];
  }
  for (const auto& p : sys.points()) comp[uf.find(p.first)].euler -= 1;
  for (const auto& face : trace_faces(sys)) comp[uf.find(sys.points()[face[0] / 4].first)].boundary += 1;
  std::vector<NeighborhoodInvariants> out;
  for (int root : roots) {
    auto inv = comp[root];
    if (inv.euler == 0) inv.boundary = 2;  // an isolated curve has an annulus neighbourhood
    Int twice = 2 - inv.euler - inv.boundary;
    if (twice < 0 || twice % 2 != 0)
      fail(ErrorKind::Internal, "face tracing produced inconsistent Euler data");
    inv.genus = twice / 2;
    out.push_back(inv);
  }
  return out;
}

NeighborhoodInvariants neighborhood_invariants(const CurveSystem& sys) {
  if (sys.size() == 0) fail(ErrorKind::Disconnected, "empty curve system");
  auto parts = component_invariants(sys);
  if (parts.size() != 1)
    fail(ErrorKind::Disconnected,
         "curve system has " + std::to_string(parts.size()) + " connected components");
  return parts.front();
}

bool is_spanning(const CurveSystem& sys, Surface ambient) {
  auto inv = neighborhood_invariants(sys);
  return inv.genus == ambient.genus && inv.boundary == ambient.boundary;
}

CurveSystem chain(int n) {
  if (n < 1) fail(ErrorKind::UnsupportedType, "chain length must be at least 1");
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 1; i <= n; ++i) {
    names.push_back("a" + std::to_string(i));
    if (i > 1) edges.emplace_back(names[i - 2], names[i - 1]);
  }
  return CurveSystem::from_tree(names, edges);
}

CurveSystem dynkin(const std::string& type) {
  if (type == "E6")
    return CurveSystem::from_tree({"b1", "b2", "b3", "b4", "b5", "b6"},
                                  {{"b1", "b2"}, {"b2", "b3"}, {"b3", "b4"}, {"b4", "b5"}, {"b3", "b6"}});
  if (type.size() >= 2 && type[0] == 'A' &&
      std::all_of(type.begin() + 1, type.end(), [](char c) { return c >= '0' && c <= '9'; }) &&
      type.size() <= 4)
    return chain(std::stoi(type.substr(1)));
  fail(ErrorKind::UnsupportedType, "unsupported Dynkin type '" + type + "'");
}

CurveSystem core13() {
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 1; i <= 7; ++i) names.push_back("a" + std::to_string(i));
  for (int i = 1; i <= 6; ++i) names.push_back("b" + std::to_string(i));
  for (int i = 1; i < 7; ++i) edges.emplace_back("a" + std::to_string(i), "a" + std::to_string(i + 1));
  for (int i = 1; i < 5; ++i) edges.emplace_back("b" + std::to_string(i), "b" + std::to_string(i + 1));
  edges.emplace_back("b3", "b6");
  edges.emplace_back("b6", "a4");
  return CurveSystem::from_tree(names, edges, Surface{6, 2});
}

CurveSystem parse_config(const std::string& src) {
  text::Cursor cur(text::tokenize(src));
  std::vector<std::string> curves;
  std::map<std::string, int> idx;
  std::vector<IntersectionPoint> points;
  std::map<std::string, std::vector<std::string>> order;
  std::vector<std::pair<std::string, std::string>> edges;
  std::optional<Surface> ambient;
  auto curve_index = [&](const std::string& name) {
    auto it = idx.find(name);
    if (it == idx.end()) cur.error("unknown curve '" + name + "'");
    return it->second;
  };
  while (!cur.at_end()) {
    std::string kw = cur.word();
    if (kw == "curves") {
      while (!cur.accept(";")) {
        std::string name = cur.word();
        if (!idx.emplace(name, static_cast<int>(curves.size())).second) cur.error("duplicate curve '" + name + "'");
        curves.push_back(name);
        cur.accept(",");
      }
      continue;
    }
    if (kw == "point") {
      IntersectionPoint p;
      p.id = cur.word();
      cur.expect("(");
      p.first = curve_index(cur.word());
      cur.expect(",");
      p.second = curve_index(cur.word());
      p.sign = 1;
      if (cur.accept(",")) {
        Int s = cur.integer();
        if (s != 1 && s != -1) cur.error("sign must be +1 or -1");
        p.sign = static_cast<int>(s);
      }
      cur.expect(")");
      points.push_back(p);
    } else if (kw == "order") {
      std::string c = cur.word();
      curve_index(c);
      cur.expect(":");
      std::vector<std::string> ids;
      while (cur.peek().kind == text::TokKind::Word) ids.push_back(cur.word());
      order[c] = std::move(ids);
    } else if (kw == "edge") {
      std::string a = cur.word();
      std::string b = cur.word();
      curve_index(a);
      curve_index(b);
      edges.emplace_back(a, b);
    } else if (kw == "ambient") {
      Int g = cur.integer();
      Int b = cur.integer();
      if (g < 0 || b < 0) cur.error("ambient genus and boundary count must be nonnegative");
      ambient = Surface{g, b};
    } else {
      cur.error("unknown statement '" + kw + "'");
    }
    cur.expect(";");
  }
  if (!edges.empty()) {
    if (!points.empty() || !order.empty())
      fail(ErrorKind::Parse, "'edge' statements cannot be mixed with explicit points");
    return CurveSystem::from_tree(curves, edges, ambient);
  }
  return CurveSystem(curves, points, order, ambient);
}

}  // namespace rspin::curveconf
