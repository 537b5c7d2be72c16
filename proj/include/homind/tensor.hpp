#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "homind/bilabelled.hpp"
#include "homind/graph.hpp"

namespace homind {

using Big = boost::multiprecision::cpp_int;

Big big_pow(Big base, unsigned exp);

// Dense exact-integer tensor of shape n^p x n^q, row-major over the
// multi-index (u_1..u_p, v_1..v_q), each index in 0..n-1.
struct HomTensor {
  int n = 1;
  int out_arity = 0;
  int in_arity = 0;
  std::vector<Big> entries;

  HomTensor() = default;
  HomTensor(int n_, int p, int q);
  size_t size() const { return entries.size(); }
  Big& at(const std::vector<int>& u, const std::vector<int>& v);
  const Big& at(const std::vector<int>& u, const std::vector<int>& v) const;
  bool operator==(const HomTensor&) const = default;

  static HomTensor identity(int n, int arity);
};

Big soe(const HomTensor& t);
HomTensor matmul(const HomTensor& a, const HomTensor& b);
HomTensor kron(const HomTensor& a, const HomTensor& b);
HomTensor transpose(const HomTensor& t);

// Exact number of adjacency-preserving maps V(F) -> V(G). G must be simple.
Big hom_count(const Graph& f, const Graph& g);

// Hom tensor of a bilabelled graph over a simple target.
HomTensor hom_tensor(const BilabelledGraph& k, const Graph& g);

// JSON (de)serialization; entries as decimal strings.
std::string tensor_to_json(const HomTensor& t);
HomTensor tensor_from_json(const std::string& text);

std::string bilabelled_to_json(const BilabelledGraph& k);
BilabelledGraph bilabelled_from_json(const std::string& text);

}  // namespace homind
