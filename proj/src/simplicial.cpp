#include "extell/simplicial.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace extell {

GapComplex GapComplex::build(int n) {
  if (n < 1) throw std::invalid_argument("GapComplex: n >= 1 required");
  GapComplex K;
  K.n_ = n;
  std::vector<Simplex> cur;
  for (int i = 1; i <= n; ++i) cur.push_back({i});
  while (!cur.empty()) {
    K.faces_.push_back(cur);
    std::vector<Simplex> next;
    for (const Simplex& f : cur)
      for (int j = f.back() + 2; j <= n; ++j) {
        Simplex g = f;
        g.push_back(j);
        next.push_back(std::move(g));
      }
    cur = std::move(next);
  }
  return K;
}

const std::vector<GapComplex::Simplex>& GapComplex::faces(int d) const {
  static const std::vector<Simplex> empty;
  if (d < 0 || d >= static_cast<int>(faces_.size())) return empty;
  return faces_[d];
}

int GapComplex::face_count(int d) const { return static_cast<int>(faces(d).size()); }

bool GapComplex::contains(const Simplex& s) const {
  int d = static_cast<int>(s.size()) - 1;
  const auto& fs = faces(d);
  return std::binary_search(fs.begin(), fs.end(), s);
}

SparseMatrix GapComplex::boundary_matrix(int d) const {
  SparseMatrix A;
  if (d == 0) {
    // augmentation C_0 -> k
    A.rows = 1;
    A.cols = face_count(0);
    for (int c = 0; c < A.cols; ++c) A.add(0, c, 1);
    return A;
  }
  const auto& cb = faces(d);
  const auto& rb = faces(d - 1);
  std::map<Simplex, int> ridx;
  for (int i = 0; i < static_cast<int>(rb.size()); ++i) ridx.emplace(rb[i], i);
  A.rows = static_cast<int>(rb.size());
  A.cols = static_cast<int>(cb.size());
  for (int c = 0; c < A.cols; ++c) {
    const Simplex& f = cb[c];
    for (int k = 0; k < static_cast<int>(f.size()); ++k) {
      Simplex sub;
      sub.reserve(f.size() - 1);
      for (int i = 0; i < static_cast<int>(f.size()); ++i)
        if (i != k) sub.push_back(f[i]);
      auto it = ridx.find(sub);
      if (it != ridx.end()) A.add(it->second, c, (k % 2) ? -1 : +1);
    }
  }
  return A;
}

std::vector<int> reduced_homology_dims(const GapComplex& K, const RankOptions& opts) {
  int top = K.top_dimension();
  std::vector<int> ranks(top + 2, 0);
  for (int d = 0; d <= top; ++d) ranks[d] = rank(K.boundary_matrix(d), opts).rank;
  std::vector<int> dims(top + 1, 0);
  for (int d = 0; d <= top; ++d)
    dims[d] = K.face_count(d) - ranks[d] - ranks[d + 1];
  return dims;
}

bool verify_sphere_class(int n, const std::vector<GapComplex::Simplex>& simplices,
                         const RankOptions& opts) {
  if (simplices.empty()) return false;
  GapComplex K = GapComplex::build(n);
  int d = static_cast<int>(simplices.front().size()) - 1;
  for (const auto& s : simplices) {
    if (static_cast<int>(s.size()) - 1 != d)
      throw std::invalid_argument("verify_sphere_class: mixed dimensions");
    if (!K.contains(s))
      throw std::invalid_argument("verify_sphere_class: simplex not in the complex");
  }
  const auto& fs = K.faces(d);
  std::map<GapComplex::Simplex, int> fidx;
  for (int i = 0; i < static_cast<int>(fs.size()); ++i) fidx.emplace(fs[i], i);

  SparseMatrix bd = K.boundary_matrix(d);
  SparseMatrix din = K.boundary_matrix(d + 1);
  int k = static_cast<int>(simplices.size());
  if (k > 16) throw std::invalid_argument("verify_sphere_class: too many simplices");
  for (std::uint32_t mask = 0; mask < (1u << (k - 1)); ++mask) {
    std::vector<std::int64_t> vec(fs.size(), 0);
    vec[fidx.at(simplices[0])] += 1;
    for (int i = 1; i < k; ++i)
      vec[fidx.at(simplices[i])] += (mask >> (i - 1)) & 1 ? -1 : +1;
    std::vector<std::int64_t> img(bd.rows, 0);
    for (const auto& e : bd.entries) img[e.row] += e.value * vec[e.col];
    bool cycle = std::all_of(img.begin(), img.end(), [](auto x) { return x == 0; });
    if (!cycle) continue;
    std::vector<std::pair<int, std::int64_t>> sv;
    for (int i = 0; i < static_cast<int>(vec.size()); ++i)
      if (vec[i]) sv.push_back({i, vec[i]});
    if (sv.empty()) continue;
    if (extends_rank(din, sv, opts)) return true;
  }
  return false;
}

}  // namespace extell
