#ifndef EXTELL_HOMOLOGY_HPP
#define EXTELL_HOMOLOGY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "extell/algebra.hpp"
#include "extell/sparse.hpp"

namespace extell {

// Reduced Hochschild cochain complex over R:
//   C^n_(m)(B, M) = Hom_R(B_+^(x)n, M), internal degree m,
// with basis (word, target): target degree = word degree + m, endpoints equal.
// The differential is
//   (delta phi)(a_0,...,a_n) = a_0 phi(a_1,...,a_n)
//                            + sum_{i=1..n} (-1)^i phi(..., a_{i-1} a_i, ...)
//                            + (-1)^{n+1} phi(a_0,...,a_{n-1}) a_n,
// with no further sign conventions.

struct CochainBasisElement {
  Word word;
  int target;  // index into the module basis
};

std::vector<CochainBasisElement> cochain_basis(const CoefficientBimodule& M, int n,
                                               int m);

// C^0_(m)(M) = Hom_{R-bimod}(R, M): basis elements with equal endpoints and
// degree m (used by the n = 0 matrix; the dimension computations below start
// the complex at C^1).
std::vector<int> cochain_basis_c0(const CoefficientBimodule& M, int m);

// Matrix of delta : C^n_(m) -> C^{n+1}_(m); n >= 0.
SparseMatrix hochschild_delta_matrix(const CoefficientBimodule& M, int n, int m);

// Dual bar-type chain complexes: C_n(label) = e_l (x) B_+^(x)n (x) e_r with
//   d(a_1 (x) ... (x) a_n) = sum_{i=1..n-1} (-1)^i a_1 (x) .. a_i a_{i+1} .. (x) a_n.
enum class ChainLabel { L, O, eta, theta };

ChainLabel chain_label_from_name(std::string_view name);
std::string_view chain_label_name(ChainLabel label);
Vertex chain_left_vertex(ChainLabel label);
Vertex chain_right_vertex(ChainLabel label);

std::vector<Word> chain_basis(ChainLabel label, int n, int m);

// Matrix of d : C_n^(m) -> C_{n-1}^(m); n >= 1.
SparseMatrix chain_boundary_matrix(ChainLabel label, int n, int m);

struct HomologyResult {
  int n = 0;
  int m = 0;
  int dim = 0;
  int space_dim = 0;      // dim of the (co)chain space at position n
  int rank_out = 0;       // rank of the outgoing differential
  int rank_in = 0;        // rank of the incoming differential
  std::vector<std::uint64_t> prime_witnesses;
  bool exact = false;
};

// dim HH^n_(m)(B, M) = dim ker(delta_n) - rank(delta_{n-1}).  The complex
// starts at C^1: HH^1 = ker(delta_1).
HomologyResult hh_dim(const CoefficientBimodule& M, int n, int m,
                      const RankOptions& opts = {});

// dim H_n(C_*^(m)(label)).
HomologyResult chain_homology_dim(ChainLabel label, int n, int m,
                                  const RankOptions& opts = {});

struct ClassCheck {
  bool is_cycle = false;
  bool is_nonzero_class = false;
};

// v is a signed combination of words in C_n^(m)(label).  All words must lie
// in that chain space (else std::invalid_argument).
ClassCheck verify_chain_class(ChainLabel label, int n, int m,
                              const std::vector<std::pair<Word, std::int64_t>>& v,
                              const RankOptions& opts = {});

}  // namespace extell

#endif  // EXTELL_HOMOLOGY_HPP
