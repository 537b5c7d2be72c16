#pragma once

#include <vector>

#include "homind/graph.hpp"

namespace homind {

// A bilabelled graph (K, a, b): a graph together with an ordered vector of
// output labels and input labels (vertex ids, repetitions allowed). Its hom
// tensor over a target G is the n^p x n^q matrix indexed by label images.
struct BilabelledGraph {
  Graph graph;
  std::vector<int> out;  // a, length p
  std::vector<int> in;   // b, length q

  int out_arity() const { return static_cast<int>(out.size()); }
  int in_arity() const { return static_cast<int>(in.size()); }
  void validate() const;
  bool operator==(const BilabelledGraph&) const = default;
};

BilabelledGraph b_tensor(const BilabelledGraph& k, const BilabelledGraph& k2);
// Glues K's input wires to K2's output wires (matrix order: tensor of the
// result equals hom_tensor(K) * hom_tensor(K2)).
BilabelledGraph b_compose(const BilabelledGraph& k, const BilabelledGraph& k2);
BilabelledGraph b_adjoint(const BilabelledGraph& k);

// Identify the blocks of pi (a partition of V(K) given as block lists).
// Unlabelled vertices must lie in singletons.
BilabelledGraph quotient(const BilabelledGraph& k, const std::vector<std::vector<int>>& pi);

// K with the enveloping cycle of wire vertices attached (order a1..ap, bq..b1).
// For p+q = 0 this is K itself; for p+q = 2 the 2-cycle degenerates to a
// single edge (recorded by two_cycle if given), which the planarity test
// treats as neutral.
Graph envelope(const BilabelledGraph& k, bool* two_cycle = nullptr);
// Envelope plus an apex adjacent to every wire vertex.
Graph envelope_apex(const BilabelledGraph& k);

bool is_planar_bilabelled(const BilabelledGraph& k);
// True iff both label vectors consist of consecutive duplicated pairs.
bool is_doubled(const BilabelledGraph& k);

// Named generator graphs.
BilabelledGraph bg_identity();                   // M^{1,1}
BilabelledGraph bg_m(int p, int q);              // single vertex, p out / q in labels
BilabelledGraph bg_edge();                       // A
BilabelledGraph bg_swap();                       // S
BilabelledGraph bg_swap_bar();                   // S-bar, the (3,3) wire reversal
BilabelledGraph bg_pi2();                        // the (8,0) two-vertex generator

}  // namespace homind
