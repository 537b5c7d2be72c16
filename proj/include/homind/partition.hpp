#pragma once

#include <string>
#include <vector>

#include "homind/tensor.hpp"

namespace homind {

// A two-row set partition with `lower` points on the bottom row and `upper`
// points on the top row. Points are encoded as integers: 0..lower-1 are the
// lower points L1..Ll, lower..lower+upper-1 the upper points U1..Uk.
// empty_blocks counts loops produced by past compositions; each one scales
// the associated linear map by n.
struct Partition {
  int lower = 0;
  int upper = 0;
  std::vector<std::vector<int>> blocks;
  int empty_blocks = 0;

  int points() const { return lower + upper; }
  void normalize();  // sort points within blocks, blocks by first point
  void validate() const;
  bool operator==(const Partition&) const = default;
};

Partition make_partition(int lower, int upper,
                         std::vector<std::vector<int>> blocks,
                         int empty_blocks = 0);

Partition p_tensor(const Partition& p, const Partition& p2);
// Glues the upper row of p to the lower row of p2; the linear map of the
// result is partition_map(p) * partition_map(p2).
Partition p_compose(const Partition& p, const Partition& p2);
Partition p_adjoint(const Partition& p);

bool is_noncrossing(const Partition& p);

// The linear map T_P over targets of order n: shape n^lower x n^upper,
// entry n^{e(P)} on block-constant assignments, 0 elsewhere.
HomTensor partition_map(const Partition& p, int n);

// Bijection with edgeless bilabelled graphs (blocks become vertices,
// empty blocks become unlabelled isolated vertices).
BilabelledGraph gamma(const Partition& p);
Partition gamma_inv(const BilabelledGraph& k);

// Names of every classification category the partition belongs to. The
// residue classes E_h^s are evaluated for each s in s_values and reported
// as "E_h^3", "E_h^4", ...
std::vector<std::string> classify(const Partition& p,
                                  const std::vector<int>& s_values = {3, 4, 5, 6});

// Fixpoint of tensor/compose/adjoint over generators plus {identity, xi},
// keeping partitions with at most max_points + slack points as
// intermediates and reporting those with at most max_points, deduplicated
// canonically with empty_blocks normalized to zero.
std::vector<Partition> closure(const std::vector<Partition>& generators,
                               int max_points, int slack);

// Named partitions.
Partition p_identity();          // {{1_L, 1_U}}
Partition p_xi();                // {{1_L, 2_L}}
Partition p_cross();             // {{1_L, 2_U}, {2_L, 1_U}}
Partition p_h(int s);            // {{1,3,..,2s-1},{2,4,..,2s}} on 2s lower points
Partition p_pi2();               // the (8,0) partition {{1,4,5,8},{2,3,6,7}}
Partition p_ph();                // {{1_L,2_L,1_U,2_U},{3_L,3_U}}

// JSON: {lower, upper, blocks: [["L1","U2"],...], empty_blocks}.
std::string partition_to_json(const Partition& p);
Partition partition_from_json(const std::string& text);

}  // namespace homind
