#ifndef EXTELL_SIMPLICIAL_HPP
#define EXTELL_SIMPLICIAL_HPP

#include <cstdint>
#include <vector>

#include "extell/sparse.hpp"

namespace extell {

// The gap-2 complex on [n]: faces are the subsets {i_1 < ... < i_m} with
// i_{j+1} - i_j >= 2.  Its homotopy type cycles point / S^k / S^k with
// n = 3k+1, 3k+2, 3k+3.
class GapComplex {
 public:
  using Simplex = std::vector<int>;

  static GapComplex build(int n);

  int vertex_count() const { return n_; }
  int top_dimension() const { return static_cast<int>(faces_.size()) - 1; }
  // Faces of dimension d (d = 0 are vertices), each sorted ascending;
  // faces are listed in lexicographic order.
  const std::vector<Simplex>& faces(int d) const;
  int face_count(int d) const;
  bool contains(const Simplex& s) const;

  // boundary_d : C_d -> C_{d-1} (d >= 1); d = 0 gives the augmentation row.
  SparseMatrix boundary_matrix(int d) const;

 private:
  int n_ = 0;
  std::vector<std::vector<Simplex>> faces_;
};

// Reduced homology dimensions (index d = 0 .. top dimension).  Exact
// elimination by default; the spaces are tiny.
std::vector<int> reduced_homology_dims(const GapComplex& K,
                                       const RankOptions& opts = {RankMode::exact, 1, 3});

// True iff some choice of signs (the first simplex fixed at +1) makes the
// given simplex list a cycle representing a nonzero reduced homology class.
// Throws std::invalid_argument if a simplex is not a face of Delta[n].
bool verify_sphere_class(int n, const std::vector<GapComplex::Simplex>& simplices,
                         const RankOptions& opts = {RankMode::exact, 1, 3});

}  // namespace extell

#endif  // EXTELL_SIMPLICIAL_HPP
