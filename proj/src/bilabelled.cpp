#include "homind/bilabelled.hpp"

#include <algorithm>
#include <numeric>

namespace homind {

void BilabelledGraph::validate() const {
  graph.validate();
  for (int v : out)
    if (v < 0 || v >= graph.n) throw domain_error("out label out of range");
  for (int v : in)
    if (v < 0 || v >= graph.n) throw domain_error("in label out of range");
}

BilabelledGraph b_tensor(const BilabelledGraph& k, const BilabelledGraph& k2) {
  BilabelledGraph r;
  r.graph = disjoint_union(k.graph, k2.graph);
  r.graph.allow_loops = true;
  int shift = k.graph.n;
  r.out = k.out;
  for (int v : k2.out) r.out.push_back(v + shift);
  r.in = k.in;
  for (int v : k2.in) r.in.push_back(v + shift);
  return r;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

BilabelledGraph b_compose(const BilabelledGraph& k, const BilabelledGraph& k2) {
  if (k.in_arity() != k2.out_arity())
    throw domain_error("b_compose: arity mismatch");
  int n1 = k.graph.n, n2 = k2.graph.n;
  UnionFind uf(n1 + n2);
  for (int j = 0; j < k.in_arity(); ++j) uf.unite(k.in[j], n1 + k2.out[j]);

  // Compress representatives to 0..m-1 preserving first-appearance order.
  std::vector<int> id(n1 + n2, -1);
  int m = 0;
  for (int v = 0; v < n1 + n2; ++v) {
    int r = uf.find(v);
    if (id[r] < 0) id[r] = m++;
    id[v] = id[r];
  }

  BilabelledGraph r;
  r.graph = Graph(m, true);
  for (auto& [u, v] : k.graph.edges) r.graph.add_edge(id[u], id[v]);
  for (auto& [u, v] : k2.graph.edges) r.graph.add_edge(id[n1 + u], id[n1 + v]);
  for (int v : k.out) r.out.push_back(id[v]);
  for (int v : k2.in) r.in.push_back(id[n1 + v]);
  return r;
}

BilabelledGraph b_adjoint(const BilabelledGraph& k) {
  return BilabelledGraph{k.graph, k.in, k.out};
}

BilabelledGraph quotient(const BilabelledGraph& k,
                         const std::vector<std::vector<int>>& pi) {
  int n = k.graph.n;
  std::vector<char> labelled(n, 0);
  for (int v : k.out) labelled[v] = 1;
  for (int v : k.in) labelled[v] = 1;
  std::vector<int> block_of(n, -1);
  for (auto& block : pi) {
    if (block.empty()) throw domain_error("quotient: empty block");
    for (int v : block) {
      if (v < 0 || v >= n || block_of[v] >= 0)
        throw domain_error("quotient: not a partition of the vertex set");
      if (!labelled[v] && block.size() > 1)
        throw domain_error("quotient: unlabelled vertex in a non-singleton block");
    }
    for (int v : block) block_of[v] = block[0];
  }
  for (int v = 0; v < n; ++v)
    if (block_of[v] < 0) throw domain_error("quotient: vertex missing from partition");

  UnionFind uf(n);
  for (int v = 0; v < n; ++v) uf.unite(v, block_of[v]);
  std::vector<int> id(n, -1);
  int m = 0;
  for (int v = 0; v < n; ++v) {
    int r = uf.find(v);
    if (id[r] < 0) id[r] = m++;
    id[v] = id[r];
  }
  BilabelledGraph r;
  r.graph = Graph(m, true);
  for (auto& [u, v] : k.graph.edges) r.graph.add_edge(id[u], id[v]);
  for (int v : k.out) r.out.push_back(id[v]);
  for (int v : k.in) r.in.push_back(id[v]);
  return r;
}

Graph envelope(const BilabelledGraph& k, bool* two_cycle) {
  if (two_cycle) *two_cycle = false;
  int p = k.out_arity(), q = k.in_arity();
  if (p + q == 0) return k.graph;
  Graph g(k.graph.n + p + q, true);
  for (auto& [u, v] : k.graph.edges) g.add_edge(u, v);
  // Wire vertices: alpha_i = n + i (i < p), beta_j = n + p + j (j < q).
  auto alpha = [&](int i) { return k.graph.n + i; };
  auto beta = [&](int j) { return k.graph.n + p + j; };
  for (int i = 0; i < p; ++i) g.add_edge(k.out[i], alpha(i));
  for (int j = 0; j < q; ++j) g.add_edge(k.in[j], beta(j));
  // Cycle alpha_1..alpha_p, beta_q..beta_1.
  std::vector<int> cyc;
  for (int i = 0; i < p; ++i) cyc.push_back(alpha(i));
  for (int j = q - 1; j >= 0; --j) cyc.push_back(beta(j));
  if (cyc.size() >= 3) {
    for (size_t i = 0; i < cyc.size(); ++i)
      g.add_edge(cyc[i], cyc[(i + 1) % cyc.size()]);
  } else if (cyc.size() == 2) {
    // The doubled 2-cycle degenerates to a single edge; record the fact so
    // the planarity test can treat it as neutral.
    g.add_edge(cyc[0], cyc[1]);
    if (two_cycle) *two_cycle = true;
  }
  return g;
}

Graph envelope_apex(const BilabelledGraph& k) {
  int p = k.out_arity(), q = k.in_arity();
  Graph env = envelope(k);
  if (p + q == 0) return env;
  Graph g(env.n + 1, true);
  for (auto& [u, v] : env.edges) g.add_edge(u, v);
  for (int w = k.graph.n; w < k.graph.n + p + q; ++w) g.add_edge(w, env.n);
  return g;
}

bool is_planar_bilabelled(const BilabelledGraph& k) {
  return is_planar(envelope_apex(k));
}

bool is_doubled(const BilabelledGraph& k) {
  auto doubled = [](const std::vector<int>& v) {
    if (v.size() % 2) return false;
    for (size_t i = 0; i + 1 < v.size(); i += 2)
      if (v[i] != v[i + 1]) return false;
    return true;
  };
  return doubled(k.out) && doubled(k.in);
}

BilabelledGraph bg_identity() { return bg_m(1, 1); }

BilabelledGraph bg_m(int p, int q) {
  if (p < 0 || q < 0) throw domain_error("bg_m: negative arity");
  BilabelledGraph r;
  r.graph = Graph(1, true);
  r.out.assign(p, 0);
  r.in.assign(q, 0);
  return r;
}

BilabelledGraph bg_edge() {
  BilabelledGraph r;
  r.graph = Graph(2, true);
  r.graph.add_edge(0, 1);
  r.out = {0};
  r.in = {1};
  return r;
}

BilabelledGraph bg_swap() {
  BilabelledGraph r;
  r.graph = Graph(2, true);
  r.out = {0, 1};
  r.in = {1, 0};
  return r;
}

BilabelledGraph bg_swap_bar() {
  BilabelledGraph r;
  r.graph = Graph(3, true);
  r.out = {0, 1, 2};
  r.in = {2, 1, 0};
  return r;
}

BilabelledGraph bg_pi2() {
  BilabelledGraph r;
  r.graph = Graph(2, true);
  r.out = {0, 1, 1, 0, 0, 1, 1, 0};
  r.in = {};
  return r;
}

}  // namespace homind
