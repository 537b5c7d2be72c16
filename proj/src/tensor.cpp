#include "homind/tensor.hpp"

#include <algorithm>
#include <queue>

#include <nlohmann/json.hpp>

namespace homind {

using nlohmann::json;

Big big_pow(Big base, unsigned exp) {
  Big r = 1;
  while (exp--) r *= base;
  return r;
}

static size_t checked_size(int n, int arity_sum) {
  Big s = big_pow(n, arity_sum);
  if (s > 1'000'000'000) throw domain_error("tensor too large");
  return static_cast<size_t>(s);
}

HomTensor::HomTensor(int n_, int p, int q) : n(n_), out_arity(p), in_arity(q) {
  if (n < 1 || p < 0 || q < 0) throw domain_error("bad tensor shape");
  entries.assign(checked_size(n, p + q), Big(0));
}

static size_t flat_index(int n, const std::vector<int>& u, const std::vector<int>& v) {
  size_t idx = 0;
  for (int x : u) idx = idx * n + x;
  for (int x : v) idx = idx * n + x;
  return idx;
}

Big& HomTensor::at(const std::vector<int>& u, const std::vector<int>& v) {
  return entries[flat_index(n, u, v)];
}
const Big& HomTensor::at(const std::vector<int>& u, const std::vector<int>& v) const {
  return entries[flat_index(n, u, v)];
}

HomTensor HomTensor::identity(int n, int arity) {
  HomTensor t(n, arity, arity);
  size_t rows = 1;
  for (int i = 0; i < arity; ++i) rows *= n;
  for (size_t r = 0; r < rows; ++r) t.entries[r * rows + r] = 1;
  return t;
}

Big soe(const HomTensor& t) {
  Big s = 0;
  for (auto& e : t.entries) s += e;
  return s;
}

HomTensor matmul(const HomTensor& a, const HomTensor& b) {
  if (a.n != b.n) throw domain_error("matmul: target order mismatch");
  if (a.in_arity != b.out_arity) throw domain_error("matmul: shape mismatch");
  HomTensor r(a.n, a.out_arity, b.in_arity);
  size_t rows = 1, mid = 1, cols = 1;
  for (int i = 0; i < a.out_arity; ++i) rows *= a.n;
  for (int i = 0; i < a.in_arity; ++i) mid *= a.n;
  for (int i = 0; i < b.in_arity; ++i) cols *= a.n;
  for (size_t i = 0; i < rows; ++i)
    for (size_t k = 0; k < mid; ++k) {
      const Big& aik = a.entries[i * mid + k];
      if (aik == 0) continue;
      for (size_t j = 0; j < cols; ++j) {
        const Big& bkj = b.entries[k * cols + j];
        if (bkj != 0) r.entries[i * cols + j] += aik * bkj;
      }
    }
  return r;
}

HomTensor kron(const HomTensor& a, const HomTensor& b) {
  if (a.n != b.n) throw domain_error("kron: target order mismatch");
  HomTensor r(a.n, a.out_arity + b.out_arity, a.in_arity + b.in_arity);
  size_t ar = 1, ac = 1, br = 1, bc = 1;
  for (int i = 0; i < a.out_arity; ++i) ar *= a.n;
  for (int i = 0; i < a.in_arity; ++i) ac *= a.n;
  for (int i = 0; i < b.out_arity; ++i) br *= a.n;
  for (int i = 0; i < b.in_arity; ++i) bc *= a.n;
  for (size_t i1 = 0; i1 < ar; ++i1)
    for (size_t i2 = 0; i2 < br; ++i2)
      for (size_t j1 = 0; j1 < ac; ++j1) {
        const Big& av = a.entries[i1 * ac + j1];
        if (av == 0) continue;
        for (size_t j2 = 0; j2 < bc; ++j2) {
          const Big& bv = b.entries[i2 * bc + j2];
          if (bv != 0)
            r.entries[((i1 * br + i2) * ac + j1) * bc + j2] = av * bv;
        }
      }
  return r;
}

HomTensor transpose(const HomTensor& t) {
  HomTensor r(t.n, t.in_arity, t.out_arity);
  size_t rows = 1, cols = 1;
  for (int i = 0; i < t.out_arity; ++i) rows *= t.n;
  for (int i = 0; i < t.in_arity; ++i) cols *= t.n;
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) r.entries[j * rows + i] = t.entries[i * cols + j];
  return r;
}

// ---------------------------------------------------------------------------
// Hom counting

namespace {

// Connected components of a graph's vertex set.
std::vector<std::vector<int>> components(const Graph& g) {
  auto adj = g.adjacency_lists();
  std::vector<int> comp(g.n, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < g.n; ++s) {
    if (comp[s] >= 0) continue;
    int id = static_cast<int>(out.size());
    out.emplace_back();
    std::queue<int> q;
    q.push(s);
    comp[s] = id;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      out[id].push_back(v);
      for (int w : adj[v])
        if (comp[w] < 0) {
          comp[w] = id;
          q.push(w);
        }
    }
  }
  return out;
}

// BFS order of the vertices in comp (pruning-friendly assignment order).
std::vector<int> bfs_order(const std::vector<std::vector<int>>& adj,
                           const std::vector<int>& comp) {
  std::vector<int> order;
  std::vector<char> seen(adj.size(), 0);
  std::queue<int> q;
  q.push(comp[0]);
  seen[comp[0]] = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    order.push_back(v);
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        q.push(w);
      }
  }
  return order;
}

// Enumerates homomorphisms of one component via backtracking; for each hom,
// calls sink with the vertex images.
template <typename Sink>
void enumerate_component_homs(const Graph& f, const std::vector<int>& comp,
                              const std::vector<std::vector<char>>& gadj, int n,
                              Sink&& sink) {
  auto fadj = f.adjacency_lists();
  auto order = bfs_order(fadj, comp);
  int m = static_cast<int>(order.size());
  std::vector<int> pos_in_order(f.n, -1);
  for (int i = 0; i < m; ++i) pos_in_order[order[i]] = i;
  // For each vertex, the neighbours (incl. loops) already placed when it is assigned.
  std::vector<std::vector<int>> earlier(m);
  for (int i = 0; i < m; ++i) {
    int v = order[i];
    for (int w : fadj[v])
      if (w == v || pos_in_order[w] < i) earlier[i].push_back(w);
    if (f.has_edge(v, v)) earlier[i].push_back(v);  // loop: needs gadj[x][x]
  }
  std::vector<int> img(f.n, -1);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == m) {
      sink(img);
      return;
    }
    int v = order[i];
    for (int x = 0; x < n; ++x) {
      img[v] = x;
      bool ok = true;
      for (int w : earlier[i])
        if (!gadj[x][w == v ? x : img[w]]) {
          ok = false;
          break;
        }
      if (ok) self(self, i + 1);
    }
    img[v] = -1;
  };
  rec(rec, 0);
}

}  // namespace

Big hom_count(const Graph& f, const Graph& g) {
  if (g.has_loop()) throw domain_error("hom_count: target must be simple");
  if (f.n == 0) return 1;
  if (g.n == 0) return 0;
  auto gadj = g.adjacency();
  Big total = 1;
  for (auto& comp : components(f)) {
    if (comp.size() == 1 && !f.has_edge(comp[0], comp[0])) {
      total *= g.n;  // isolated vertices contribute a factor n analytically
      continue;
    }
    Big cnt = 0;
    enumerate_component_homs(f, comp, gadj, g.n, [&](const std::vector<int>&) { ++cnt; });
    total *= cnt;
    if (total == 0) return 0;
  }
  return total;
}

HomTensor hom_tensor(const BilabelledGraph& k, const Graph& g) {
  if (g.has_loop()) throw domain_error("hom_tensor: target must be simple");
  k.validate();
  int p = k.out_arity(), q = k.in_arity(), n = g.n;
  if (n == 0) throw domain_error("hom_tensor: empty target");
  HomTensor result(n, p, q);
  auto gadj = g.adjacency();

  // Label positions 0..p-1 are outputs, p..p+q-1 inputs.
  std::vector<int> label_vertex(p + q);
  for (int i = 0; i < p; ++i) label_vertex[i] = k.out[i];
  for (int j = 0; j < q; ++j) label_vertex[p + j] = k.in[j];

  auto comps = components(k.graph);
  std::vector<int> comp_of(k.graph.n, -1);
  for (size_t c = 0; c < comps.size(); ++c)
    for (int v : comps[c]) comp_of[v] = static_cast<int>(c);

  // The tensor factors over connected components: each component is counted
  // once over its own label positions, then the factors are multiplied.
  struct CompTensor {
    std::vector<int> positions;       // global label positions of this component
    std::vector<Big> table;           // indexed by images at those positions
  };
  std::vector<CompTensor> tables;
  Big scalar = 1;  // product of counts of label-free components
  for (size_t c = 0; c < comps.size(); ++c) {
    std::vector<int> positions;
    for (int t = 0; t < p + q; ++t)
      if (comp_of[label_vertex[t]] == static_cast<int>(c)) positions.push_back(t);
    if (positions.empty()) {
      if (comps[c].size() == 1 && !k.graph.has_edge(comps[c][0], comps[c][0])) {
        scalar *= n;
      } else {
        Big cnt = 0;
        enumerate_component_homs(k.graph, comps[c], gadj, n,
                                 [&](const std::vector<int>&) { ++cnt; });
        scalar *= cnt;
      }
      continue;
    }
    CompTensor ct;
    ct.positions = positions;
    size_t sz = 1;
    for (size_t i = 0; i < positions.size(); ++i) sz *= n;
    ct.table.assign(sz, Big(0));
    enumerate_component_homs(k.graph, comps[c], gadj, n, [&](const std::vector<int>& img) {
      size_t idx = 0;
      for (int t : positions) idx = idx * n + img[label_vertex[t]];
      ct.table[idx] += 1;
    });
    tables.push_back(std::move(ct));
  }
  if (scalar == 0) return result;

  std::vector<int> multi(p + q, 0);
  size_t total = result.entries.size();
  for (size_t flat = 0; flat < total; ++flat) {
    Big val = scalar;
    for (auto& ct : tables) {
      size_t idx = 0;
      for (int t : ct.positions) idx = idx * n + multi[t];
      val *= ct.table[idx];
      if (val == 0) break;
    }
    result.entries[flat] = val;
    for (int t = p + q - 1; t >= 0; --t) {
      if (++multi[t] < n) break;
      multi[t] = 0;
    }
  }
  return result;
}

// ---------------------------------------------------------------------------
// JSON

std::string tensor_to_json(const HomTensor& t) {
  json j;
  j["n"] = t.n;
  j["out_arity"] = t.out_arity;
  j["in_arity"] = t.in_arity;
  std::vector<std::string> es;
  es.reserve(t.entries.size());
  for (auto& e : t.entries) es.push_back(e.str());
  j["entries"] = es;
  return j.dump();
}

HomTensor tensor_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw format_error(std::string("tensor JSON: ") + e.what());
  }
  try {
    HomTensor t(j.at("n").get<int>(), j.at("out_arity").get<int>(),
                j.at("in_arity").get<int>());
    auto es = j.at("entries").get<std::vector<std::string>>();
    if (es.size() != t.entries.size()) throw format_error("tensor JSON: wrong entry count");
    for (size_t i = 0; i < es.size(); ++i) t.entries[i] = Big(es[i]);
    return t;
  } catch (const json::exception& e) {
    throw format_error(std::string("tensor JSON: ") + e.what());
  }
}

std::string bilabelled_to_json(const BilabelledGraph& k) {
  json j;
  j["n"] = k.graph.n;
  std::vector<std::vector<int>> es;
  for (auto& [u, v] : k.graph.edges) es.push_back({u, v});
  j["edges"] = es;
  j["out"] = k.out;
  j["in"] = k.in;
  return j.dump();
}

BilabelledGraph bilabelled_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw format_error(std::string("bilabelled JSON: ") + e.what());
  }
  try {
    BilabelledGraph k;
    k.graph = Graph(j.at("n").get<int>(), true);
    for (auto& e : j.at("edges")) {
      if (e.size() != 2) throw format_error("bilabelled JSON: bad edge");
      k.graph.add_edge(e[0].get<int>(), e[1].get<int>());
    }
    k.out = j.at("out").get<std::vector<int>>();
    k.in = j.at("in").get<std::vector<int>>();
    k.validate();
    return k;
  } catch (const json::exception& e) {
    throw format_error(std::string("bilabelled JSON: ") + e.what());
  }
}

}  // namespace homind
