#include "homind/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

namespace homind {

void Graph::add_edge(int u, int v) {
  if (u > v) std::swap(u, v);
  if (u < 0 || v >= n) throw domain_error("edge endpoint out of range");
  if (u == v && !allow_loops) throw domain_error("loop on a loop-free graph");
  auto e = std::make_pair(u, v);
  auto it = std::lower_bound(edges.begin(), edges.end(), e);
  if (it == edges.end() || *it != e) edges.insert(it, e);
}

bool Graph::has_edge(int u, int v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
}

bool Graph::has_loop() const {
  return std::any_of(edges.begin(), edges.end(),
                     [](auto& e) { return e.first == e.second; });
}

std::vector<std::vector<char>> Graph::adjacency() const {
  std::vector<std::vector<char>> a(n, std::vector<char>(n, 0));
  for (auto& [u, v] : edges) a[u][v] = a[v][u] = 1;
  return a;
}

std::vector<std::vector<int>> Graph::adjacency_lists() const {
  std::vector<std::vector<int>> a(n);
  for (auto& [u, v] : edges) {
    a[u].push_back(v);
    if (u != v) a[v].push_back(u);
  }
  return a;
}

void Graph::validate() const {
  for (auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n || u > v)
      throw domain_error("malformed edge list");
    if (u == v && !allow_loops) throw domain_error("unexpected loop");
  }
  for (size_t i = 1; i < edges.size(); ++i)
    if (edges[i - 1] >= edges[i]) throw domain_error("edge list not sorted/unique");
}

// ---------------------------------------------------------------------------
// graph6

Graph parse_graph6(const std::string& text) {
  if (text.empty()) throw format_error("empty graph6 input");
  for (unsigned char c : text)
    if (c < 63 || c > 126) throw format_error("graph6: byte outside printable range");
  int n = text[0] - 63;
  if (n < 0 || n >= 63) throw format_error("graph6: unsupported order");
  size_t need = (static_cast<size_t>(n) * (n - 1) / 2 + 5) / 6;
  if (text.size() != 1 + need) throw format_error("graph6: malformed length");
  Graph g(n);
  size_t bit = 0;
  auto get_bit = [&](size_t k) {
    return (text[1 + k / 6] - 63) >> (5 - k % 6) & 1;
  };
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++bit)
      if (get_bit(bit)) g.add_edge(u, v);
  for (size_t k = bit; k < need * 6; ++k)
    if (get_bit(k)) throw format_error("graph6: nonzero trailing bits");
  return g;
}

std::string write_graph6(const Graph& g) {
  if (g.n >= 63) throw domain_error("graph6 short form requires n < 63");
  if (g.has_loop()) throw domain_error("graph6 cannot encode loops");
  std::string out(1, static_cast<char>(g.n + 63));
  auto a = g.adjacency();
  int acc = 0, nb = 0;
  for (int v = 1; v < g.n; ++v)
    for (int u = 0; u < v; ++u) {
      acc = acc << 1 | a[u][v];
      if (++nb == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = nb = 0;
      }
    }
  if (nb) out.push_back(static_cast<char>((acc << (6 - nb)) + 63));
  return out;
}

// ---------------------------------------------------------------------------
// Families

Graph cycle_graph(int n) {
  if (n < 1) throw domain_error("cycle: n >= 1 required");
  Graph g(n);
  if (n == 2) g.add_edge(0, 1);
  if (n >= 3)
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph path_graph(int n) {
  if (n < 1) throw domain_error("path: n >= 1 required");
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph complete_graph(int n) {
  if (n < 1) throw domain_error("complete: n >= 1 required");
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph complete_bipartite_graph(int m, int n) {
  if (m < 1 || n < 1) throw domain_error("complete_bipartite: parts >= 1 required");
  Graph g(m + n);
  for (int u = 0; u < m; ++u)
    for (int v = 0; v < n; ++v) g.add_edge(u, m + v);
  return g;
}

Graph star_graph(int d) {
  if (d < 0) throw domain_error("star: d >= 0 required");
  Graph g(d + 1);
  for (int i = 1; i <= d; ++i) g.add_edge(0, i);
  return g;
}

Graph shrikhande_graph() {
  // Cayley graph on Z4 x Z4 with connection set {+-(1,0), +-(0,1), +-(1,1)}.
  Graph g(16);
  const int con[][2] = {{1, 0}, {3, 0}, {0, 1}, {0, 3}, {1, 1}, {3, 3}};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (auto& c : con) {
        int u = a * 4 + b, v = ((a + c[0]) % 4) * 4 + (b + c[1]) % 4;
        if (u < v) g.add_edge(u, v);
      }
  return g;
}

Graph rook4_graph() {
  Graph g(16);
  for (int u = 0; u < 16; ++u)
    for (int v = u + 1; v < 16; ++v)
      if (u / 4 == v / 4 || u % 4 == v % 4) g.add_edge(u, v);
  return g;
}

// ---------------------------------------------------------------------------
// Structural operations

Graph disjoint_union(const Graph& g, const Graph& h) {
  Graph r(g.n + h.n, g.allow_loops || h.allow_loops);
  r.edges = g.edges;
  for (auto& [u, v] : h.edges) r.edges.emplace_back(u + g.n, v + g.n);
  std::sort(r.edges.begin(), r.edges.end());
  return r;
}

Graph subdivide(const Graph& g, std::pair<int, int> edge) {
  if (edge.first > edge.second) std::swap(edge.first, edge.second);
  if (!g.has_edge(edge.first, edge.second)) throw domain_error("subdivide: edge absent");
  Graph r(g.n + 1, g.allow_loops);
  for (auto& e : g.edges)
    if (e != edge) r.add_edge(e.first, e.second);
  r.add_edge(edge.first, g.n);
  r.add_edge(edge.second, g.n);
  return r;
}

Graph contract(const Graph& g, std::pair<int, int> edge) {
  if (edge.first > edge.second) std::swap(edge.first, edge.second);
  if (!g.has_edge(edge.first, edge.second)) throw domain_error("contract: edge absent");
  auto [a, b] = edge;
  // b is merged into a; vertices above b shift down by one.
  auto img = [&](int v) { return v == b ? a : v > b ? v - 1 : v; };
  Graph r(g.n - (a == b ? 0 : 1), g.allow_loops);
  for (auto& [u, v] : g.edges) {
    int x = img(u), y = img(v);
    if (x == y) continue;  // contracting a loopless edge never creates a loop
    r.add_edge(x, y);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Planarity (Boyer-Myrvold via Boost)

bool is_planar(const Graph& g) {
  if (g.n <= 4) return true;
  using BG = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  BG bg(g.n);
  for (auto& [u, v] : g.edges)
    if (u != v) boost::add_edge(u, v, bg);
  return boost::boyer_myrvold_planarity_test(bg);
}

// ---------------------------------------------------------------------------
// Canonical labelling

namespace {

using Cells = std::vector<std::vector<int>>;

void refine(const std::vector<std::vector<char>>& adj, Cells& cells) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t t = 0; t < cells.size() && !changed; ++t) {
      for (size_t c = 0; c < cells.size(); ++c) {
        if (cells[c].size() < 2) continue;
        std::map<int, std::vector<int>> groups;
        for (int v : cells[c]) {
          int cnt = 0;
          for (int w : cells[t]) cnt += adj[v][w];
          groups[cnt].push_back(v);
        }
        if (groups.size() > 1) {
          Cells next(cells.begin(), cells.begin() + c);
          for (auto& [k, vs] : groups) next.push_back(vs);
          next.insert(next.end(), cells.begin() + c + 1, cells.end());
          cells.swap(next);
          changed = true;
          break;
        }
      }
    }
  }
}

struct CanonSearch {
  const std::vector<std::vector<char>>& adj;
  int n;
  std::string best;
  std::vector<int> best_perm;

  void leaf(const Cells& cells) {
    std::vector<int> perm(n);  // perm[v] = new label of v
    for (int i = 0; i < n; ++i) perm[cells[i][0]] = i;
    std::vector<int> inv(n);
    for (int v = 0; v < n; ++v) inv[perm[v]] = v;
    std::string enc;
    enc.reserve(n * (n + 1) / 2);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j)
        enc.push_back(static_cast<char>('0' + adj[inv[i]][inv[j]]));
    if (best.empty() || enc < best) {
      best = std::move(enc);
      best_perm = std::move(perm);
    }
  }

  void search(Cells cells) {
    refine(adj, cells);
    size_t target = cells.size();
    for (size_t c = 0; c < cells.size(); ++c)
      if (cells[c].size() > 1 &&
          (target == cells.size() || cells[c].size() < cells[target].size()))
        target = c;
    if (target == cells.size()) {
      leaf(cells);
      return;
    }
    for (int v : cells[target]) {
      Cells child(cells.begin(), cells.begin() + target);
      child.push_back({v});
      std::vector<int> rest;
      for (int w : cells[target])
        if (w != v) rest.push_back(w);
      child.push_back(rest);
      child.insert(child.end(), cells.begin() + target + 1, cells.end());
      search(std::move(child));
    }
  }
};

}  // namespace

std::vector<int> canonical_labeling(const Graph& g) {
  if (g.n == 0) return {};
  auto adj = g.adjacency();
  std::vector<int> all(g.n);
  std::iota(all.begin(), all.end(), 0);
  CanonSearch cs{adj, g.n, {}, {}};
  cs.search({all});
  return cs.best_perm;
}

Graph relabel(const Graph& g, const std::vector<int>& p) {
  Graph r(g.n, g.allow_loops);
  for (auto& [u, v] : g.edges) r.add_edge(p[u], p[v]);
  return r;
}

std::string canonical_form(const Graph& g) {
  Graph c = relabel(g, canonical_labeling(g));
  std::string s = std::to_string(g.n) + ":";
  for (auto& [u, v] : c.edges) s += std::to_string(u) + "," + std::to_string(v) + ";";
  return s;
}

bool are_isomorphic(const Graph& g, const Graph& h) {
  if (g.n != h.n || g.edges.size() != h.edges.size()) return false;
  return canonical_form(g) == canonical_form(h);
}

bool is_connected(const Graph& g) {
  if (g.n <= 1) return true;
  auto adj = g.adjacency_lists();
  std::vector<char> seen(g.n, 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int cnt = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++cnt;
        q.push(w);
      }
  }
  return cnt == g.n;
}

std::vector<Graph> enumerate_graphs(int max_n,
                                    const std::function<bool(const Graph&)>& predicate) {
  if (max_n < 1 || max_n > 7) throw domain_error("enumerate_graphs: max_n in 1..7 required");
  // Representatives are grown one vertex at a time: every n-vertex graph minus
  // its last vertex is an (n-1)-vertex graph, so extending each representative
  // by a new vertex with every possible neighbourhood covers all classes.
  std::vector<Graph> level{Graph(1)};
  std::vector<Graph> result;
  auto emit = [&](const std::vector<Graph>& graphs) {
    for (auto& g : graphs)
      if (predicate(g)) result.push_back(g);
  };
  emit(level);
  for (int n = 2; n <= max_n; ++n) {
    std::set<std::string> seen;
    std::vector<Graph> next;
    for (auto& base : level) {
      for (int mask = 0; mask < 1 << (n - 1); ++mask) {
        Graph g(n);
        g.edges = base.edges;
        for (int v = 0; v < n - 1; ++v)
          if (mask >> v & 1) g.add_edge(v, n - 1);
        Graph canon = relabel(g, canonical_labeling(g));
        std::string key = canonical_form(canon);
        if (seen.insert(key).second) next.push_back(canon);
      }
    }
    level.swap(next);
    emit(level);
  }
  std::stable_sort(result.begin(), result.end(), [](const Graph& a, const Graph& b) {
    return std::make_tuple(a.n, a.edges.size(), canonical_form(a)) <
           std::make_tuple(b.n, b.edges.size(), canonical_form(b));
  });
  return result;
}

}  // namespace homind
