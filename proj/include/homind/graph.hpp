#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace homind {

// Thrown when an argument is outside an operation's documented domain.
struct domain_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown on malformed serialized input (graph6, JSON, s-expressions).
struct format_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A finite graph on vertices 0..n-1. Edges are stored as unordered pairs
// {u,v} with u <= v, sorted and deduplicated. Loops (u == v) are only legal
// when allow_loops is set; they arise from bilabelled composition and are
// never accepted by parsers.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  bool allow_loops = false;

  Graph() = default;
  explicit Graph(int n_, bool loops = false) : n(n_), allow_loops(loops) {}

  void add_edge(int u, int v);
  bool has_edge(int u, int v) const;
  bool has_loop() const;
  int edge_count() const { return static_cast<int>(edges.size()); }

  // 0/1 adjacency matrix (symmetric; diagonal nonzero only for loops).
  std::vector<std::vector<char>> adjacency() const;
  std::vector<std::vector<int>> adjacency_lists() const;

  void validate() const;
  bool operator==(const Graph&) const = default;
};

// graph6 I/O (short form, n < 63; simple graphs only).
Graph parse_graph6(const std::string& text);
std::string write_graph6(const Graph& g);

// Families.
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite_graph(int m, int n);
Graph star_graph(int d);  // K_{1,d}: centre 0, d leaves
Graph shrikhande_graph();
Graph rook4_graph();

// Structural operations.
Graph disjoint_union(const Graph& g, const Graph& h);
Graph subdivide(const Graph& g, std::pair<int, int> edge);
Graph contract(const Graph& g, std::pair<int, int> edge);

// Planarity (loops are ignored).
bool is_planar(const Graph& g);

// Canonical labelling via equitable refinement + backtracking.
// canonical_form strings are equal iff the graphs are isomorphic.
std::string canonical_form(const Graph& g);
// Permutation p with p[v] = canonical position of v.
std::vector<int> canonical_labeling(const Graph& g);
Graph relabel(const Graph& g, const std::vector<int>& p);
bool are_isomorphic(const Graph& g, const Graph& h);

bool is_connected(const Graph& g);

// One representative per isomorphism class of graphs with 1..max_n vertices
// (max_n <= 7) satisfying the predicate, ordered by (n, |E|, canonical form).
std::vector<Graph> enumerate_graphs(int max_n,
                                    const std::function<bool(const Graph&)>& predicate);

}  // namespace homind
