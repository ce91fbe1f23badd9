#include <gsub/error.hpp>
#include <gsub/graph.hpp>

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>

namespace gsub {

WeightedGraph::WeightedGraph(std::vector<std::string> labels, std::vector<Edge> edges)
    : labels_(std::move(labels)), edges_(std::move(edges)) {
  const std::size_t n = labels_.size();
  incident_.assign(n, {});
  m_.assign(n, Rational(0));
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const Edge& ed = edges_[e];
    if (ed.u >= n || ed.v >= n) throw Error(ErrorCode::InvalidGraph, "edge " + std::to_string(e) + " has a bad endpoint");
    if (ed.u == ed.v) throw Error(ErrorCode::InvalidGraph, "loop at vertex " + labels_[ed.u]);
    if (ed.conductance <= 0)
      throw Error(ErrorCode::InvalidGraph, "non-positive conductance on edge " + std::to_string(e));
    incident_[ed.u].push_back(e);
    incident_[ed.v].push_back(e);
    m_[ed.u] += ed.conductance;
    m_[ed.v] += ed.conductance;
  }
}

std::size_t WeightedGraph::other(std::size_t e, std::size_t x) const {
  const Edge& ed = edges_.at(e);
  return ed.u == x ? ed.v : ed.u;
}

Rational WeightedGraph::conductance(std::size_t x, std::size_t y) const {
  Rational s = 0;
  for (std::size_t e : incident_.at(x))
    if (other(e, x) == y) s += edges_[e].conductance;
  return s;
}

std::optional<std::size_t> WeightedGraph::find_vertex(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

bool WeightedGraph::connected() const { return connected_on(std::vector<bool>(vertex_count(), true)); }

bool WeightedGraph::connected_on(const std::vector<bool>& keep) const {
  const std::size_t n = vertex_count();
  std::size_t start = n, want = 0;
  for (std::size_t x = 0; x < n; ++x) {
    if (!keep[x]) continue;
    ++want;
    if (start == n) start = x;
  }
  if (start == n) return false;
  std::vector<bool> seen(n, false);
  std::deque<std::size_t> queue{start};
  seen[start] = true;
  std::size_t reached = 1;
  while (!queue.empty()) {
    std::size_t x = queue.front();
    queue.pop_front();
    for (std::size_t e : incident_[x]) {
      std::size_t y = other(e, x);
      if (keep[y] && !seen[y]) {
        seen[y] = true;
        ++reached;
        queue.push_back(y);
      }
    }
  }
  return reached == want;
}

void require_connected(const WeightedGraph& g, const std::string& what) {
  if (g.vertex_count() == 0) throw Error(ErrorCode::InvalidGraph, what + " has no vertices");
  if (!g.connected()) throw Error(ErrorCode::InvalidGraph, what + " is not connected");
}

std::vector<std::size_t> Substituent::interior() const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < graph.vertex_count(); ++v)
    if (v != a && v != b) out.push_back(v);
  return out;
}

std::size_t Substituent::gamma_order() const {
  const std::size_t n = gamma.size();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  for (std::size_t r = 1; r <= 10000; ++r) {
    for (auto& x : p) x = gamma[x];
    bool id = true;
    for (std::size_t i = 0; i < n && id; ++i) id = p[i] == i;
    if (id) return r;
  }
  return 0;
}

bool ValidationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const ValidationCheck& c) { return c.passed; });
}

namespace {

bool is_permutation_of(const std::vector<std::size_t>& p, std::size_t n) {
  if (p.size() != n) return false;
  std::vector<bool> hit(n, false);
  for (std::size_t x : p) {
    if (x >= n || hit[x]) return false;
    hit[x] = true;
  }
  return true;
}

std::string automorphism_failure(const WeightedGraph& g, const std::vector<std::size_t>& p) {
  const std::size_t n = g.vertex_count();
  if (!is_permutation_of(p, n)) return "gamma is not a permutation of the vertices";
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      if (g.conductance(x, y) != g.conductance(p[x], p[y]))
        return "a(" + g.label(x) + "," + g.label(y) + ") != a(gamma " + g.label(x) + ",gamma " + g.label(y) + ")";
  return {};
}

}  // namespace

ValidationReport check_substituent(const Substituent& s) {
  ValidationReport r;
  const WeightedGraph& g = s.graph;
  const std::size_t n = g.vertex_count();
  auto add = [&](std::string name, bool ok, std::string detail = {}) {
    r.checks.push_back({std::move(name), ok, std::move(detail)});
  };

  const bool ab_ok = s.a < n && s.b < n && s.a != s.b;
  add("a,b distinct vertices", ab_ok);
  add("V connected", n > 0 && g.connected());

  std::string why = automorphism_failure(g, s.gamma);
  add("gamma automorphism", why.empty(), why);
  const bool perm = is_permutation_of(s.gamma, n);
  add("gamma swaps a,b", ab_ok && perm && s.gamma[s.a] == s.b && s.gamma[s.b] == s.a);
  const std::size_t r_order = perm ? s.gamma_order() : 0;
  add("gamma order even", r_order != 0 && r_order % 2 == 0, "order " + std::to_string(r_order));

  if (ab_ok) {
    std::vector<bool> keep(n, true);
    keep[s.b] = false;
    add("V-b connected", g.connected_on(keep));
  } else {
    add("V-b connected", false);
  }
  add("interior nonempty", n > 2);
  return r;
}

ValidationReport validate_substituent(const Substituent& s) {
  ValidationReport r = check_substituent(s);
  for (const auto& c : r.checks) {
    if (c.passed) continue;
    ErrorCode code = ErrorCode::InvalidGraph;
    if (c.name == "gamma automorphism") code = ErrorCode::GammaNotAutomorphism;
    if (c.name == "gamma swaps a,b" || c.name == "gamma order even") code = ErrorCode::GammaDoesNotSwapAB;
    if (c.name == "V-b connected") code = ErrorCode::VMinusBDisconnected;
    if (c.name == "interior nonempty") code = ErrorCode::EmptyInterior;
    throw Error(code, c.name + (c.detail.empty() ? "" : ": " + c.detail));
  }
  return r;
}

std::optional<std::vector<std::size_t>> find_gamma(const WeightedGraph& g, std::size_t a, std::size_t b) {
  const std::size_t n = g.vertex_count();
  if (n > 10) throw Error(ErrorCode::TooLarge, "gamma search limited to 10 vertices");
  if (a >= n || b >= n || a == b) return std::nullopt;

  std::vector<std::vector<Rational>> A(n, std::vector<Rational>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) A[x][y] = g.conductance(x, y);

  for (bool involution : {true, false}) {
    std::vector<std::size_t> p(n, n);
    std::vector<bool> used(n, false);
    p[a] = b;
    p[b] = a;
    used[a] = used[b] = true;
    std::vector<std::size_t> order;
    for (std::size_t x = 0; x < n; ++x)
      if (x != a && x != b) order.push_back(x);

    std::function<bool(std::size_t)> place = [&](std::size_t k) -> bool {
      if (k == order.size()) return automorphism_failure(g, p).empty();
      const std::size_t x = order[k];
      if (p[x] != n) return place(k + 1);  // fixed by an earlier involutive choice
      for (std::size_t y = 0; y < n; ++y) {
        if (used[y] || g.total_conductance(x) != g.total_conductance(y)) continue;
        if (involution && y != x && p[y] != n) continue;
        p[x] = y;
        used[y] = true;
        if (involution && y != x) {
          p[y] = x;
          used[x] = true;
        }
        bool ok = true;
        for (std::size_t w = 0; w < n && ok; ++w)
          if (p[w] != n) ok = A[x][w] == A[y][p[w]] && (!involution || A[y][w] == A[x][p[w]]);
        if (ok && place(k + 1)) return true;
        if (involution && y != x) {
          p[y] = n;
          used[x] = false;
        }
        p[x] = n;
        used[y] = false;
      }
      return false;
    };
    if (place(0)) return p;
  }
  return std::nullopt;
}

Orientation Orientation::standard(const WeightedGraph& g) {
  Orientation o;
  for (const Edge& e : g.edges()) {
    o.tail.push_back(std::min(e.u, e.v));
    o.head.push_back(std::max(e.u, e.v));
  }
  return o;
}

Orientation Orientation::random(const WeightedGraph& g, std::mt19937_64& rng) {
  Orientation o = standard(g);
  std::bernoulli_distribution flip(0.5);
  for (std::size_t e = 0; e < g.edge_count(); ++e)
    if (flip(rng)) std::swap(o.tail[e], o.head[e]);
  return o;
}

std::optional<std::vector<int>> bipartition(const WeightedGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<int> colour(n, -1);
  for (std::size_t s = 0; s < n; ++s) {
    if (colour[s] != -1) continue;
    colour[s] = 0;
    std::deque<std::size_t> queue{s};
    while (!queue.empty()) {
      std::size_t x = queue.front();
      queue.pop_front();
      for (std::size_t e : g.incident(x)) {
        std::size_t y = g.other(e, x);
        if (colour[y] == -1) {
          colour[y] = 1 - colour[x];
          queue.push_back(y);
        } else if (colour[y] == colour[x]) {
          return std::nullopt;
        }
      }
    }
  }
  return colour;
}

CycleBase fundamental_cycle_base(const WeightedGraph& g) {
  const std::size_t n = g.vertex_count();
  CycleBase cb;
  cb.in_tree.assign(g.edge_count(), false);
  cb.parent.assign(n, n);
  cb.parent_edge.assign(n, g.edge_count());
  cb.depth.assign(n, 0);
  if (n == 0) return cb;

  cb.parent[0] = 0;
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    std::size_t x = queue.front();
    queue.pop_front();
    for (std::size_t e : g.incident(x)) {
      std::size_t y = g.other(e, x);
      if (cb.parent[y] != n) continue;
      cb.parent[y] = x;
      cb.parent_edge[y] = e;
      cb.depth[y] = cb.depth[x] + 1;
      cb.in_tree[e] = true;
      queue.push_back(y);
    }
  }

  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (cb.in_tree[e]) continue;
    const std::size_t u = g.edge(e).u, v = g.edge(e).v;
    // u -> lca along parents, then lca -> v, then e back to u.
    std::vector<std::size_t> up_v, up_e, down_v, down_e;
    std::size_t x = u, y = v;
    while (cb.depth[x] > cb.depth[y]) {
      up_v.push_back(x);
      up_e.push_back(cb.parent_edge[x]);
      x = cb.parent[x];
    }
    while (cb.depth[y] > cb.depth[x]) {
      down_v.push_back(y);
      down_e.push_back(cb.parent_edge[y]);
      y = cb.parent[y];
    }
    while (x != y) {
      up_v.push_back(x);
      up_e.push_back(cb.parent_edge[x]);
      x = cb.parent[x];
      down_v.push_back(y);
      down_e.push_back(cb.parent_edge[y]);
      y = cb.parent[y];
    }
    Cycle c;
    c.non_tree_edge = e;
    c.vertices = up_v;
    c.vertices.push_back(x);
    c.edges = up_e;
    for (auto it = down_v.rbegin(); it != down_v.rend(); ++it) c.vertices.push_back(*it);
    for (auto it = down_e.rbegin(); it != down_e.rend(); ++it) c.edges.push_back(*it);
    c.edges.push_back(e);
    c.vertices.push_back(u);
    cb.cycles.push_back(std::move(c));
  }
  return cb;
}

NonBacktrackingPath make_closed_walk(const WeightedGraph& g, std::vector<std::size_t> vertices,
                                     std::vector<std::size_t> edges) {
  NonBacktrackingPath w;
  w.vertices = std::move(vertices);
  w.edges = std::move(edges);
  w.defect.assign(g.edge_count(), 0);
  const std::size_t k = w.edges.size();
  w.non_backtracking = k > 0;
  for (std::size_t j = 0; j < k; ++j) {
    w.defect[w.edges[j]] += (j % 2 == 0) ? 1 : -1;
    if (w.edges[j] == w.edges[(j + 1) % k]) w.non_backtracking = false;
  }
  return w;
}

namespace {

// Cycle traversal starting and ending at vertex `start`, in either direction.
void traverse(const Cycle& c, std::size_t start, bool forward, std::vector<std::size_t>& vs,
              std::vector<std::size_t>& es) {
  const std::size_t k = c.length();
  std::size_t s = 0;
  while (c.vertices[s] != start) ++s;
  for (std::size_t t = 0; t < k; ++t) {
    if (forward) {
      es.push_back(c.edges[(s + t) % k]);
      vs.push_back(c.vertices[(s + t + 1) % k]);
    } else {
      es.push_back(c.edges[(s + k - t - 1) % k]);
      vs.push_back(c.vertices[(s + k - t - 1) % k]);
    }
  }
}

}  // namespace

NonBacktrackingPath even_joined_path(const WeightedGraph& g, const CycleBase& base, std::size_t i, std::size_t l) {
  const Cycle& ci = base.cycles.at(i);
  const Cycle& cl = base.cycles.at(l);
  if (!ci.odd() || !cl.odd()) throw Error(ErrorCode::CyclesNotOdd, "joined path needs two odd cycles");
  const std::size_t n = g.vertex_count();

  // Shortest tree path from the vertex set of C_i to that of C_l.
  std::vector<bool> in_l(n, false);
  for (std::size_t v : cl.vertices) in_l[v] = true;
  std::vector<std::size_t> from(n, n), via(n, g.edge_count());
  std::deque<std::size_t> queue;
  for (std::size_t v : ci.vertices) {
    if (from[v] != n) continue;
    from[v] = v;
    queue.push_back(v);
  }
  std::size_t q = n;
  while (!queue.empty() && q == n) {
    std::size_t x = queue.front();
    queue.pop_front();
    if (in_l[x]) {
      q = x;
      break;
    }
    for (std::size_t e : g.incident(x)) {
      if (!base.in_tree[e]) continue;
      std::size_t y = g.other(e, x);
      if (from[y] != n) continue;
      from[y] = x;
      via[y] = e;
      queue.push_back(y);
    }
  }
  std::vector<std::size_t> path_v{q}, path_e;  // built from q back to p
  for (std::size_t x = q; from[x] != x; x = from[x]) {
    path_e.push_back(via[x]);
    path_v.push_back(from[x]);
  }
  std::reverse(path_v.begin(), path_v.end());
  std::reverse(path_e.begin(), path_e.end());
  const std::size_t p = path_v.front();

  NonBacktrackingPath best;
  for (int combo = 0; combo < 4; ++combo) {
    std::vector<std::size_t> vs{p}, es;
    traverse(ci, p, combo & 1, vs, es);
    for (std::size_t t = 0; t < path_e.size(); ++t) {
      es.push_back(path_e[t]);
      vs.push_back(path_v[t + 1]);
    }
    traverse(cl, q, combo & 2, vs, es);
    for (std::size_t t = path_e.size(); t-- > 0;) {
      es.push_back(path_e[t]);
      vs.push_back(path_v[t]);
    }
    best = make_closed_walk(g, std::move(vs), std::move(es));
    if (best.non_backtracking) break;
  }
  return best;
}

}  // namespace gsub
