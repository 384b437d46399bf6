#include "extell/homology.hpp"

#include <map>
#include <stdexcept>
#include <unordered_map>

namespace extell {

std::vector<CochainBasisElement> cochain_basis(const CoefficientBimodule& M, int n,
                                               int m) {
  std::vector<CochainBasisElement> out;
  if (n < 1) return out;
  for (const Word& w : enumerate_all_words(n)) {
    int d = w.internal_degree() + m;
    for (int y = 0; y < M.dim(); ++y) {
      Gen s = M.symbol(y);
      if (degree(s) == d && left_vertex(s) == w.left() && right_vertex(s) == w.right())
        out.push_back({w, y});
    }
  }
  return out;
}

std::vector<int> cochain_basis_c0(const CoefficientBimodule& M, int m) {
  std::vector<int> out;
  for (int y = 0; y < M.dim(); ++y) {
    Gen s = M.symbol(y);
    if (degree(s) == m && left_vertex(s) == right_vertex(s)) out.push_back(y);
  }
  return out;
}

namespace {

struct CbeKey {
  Word w;
  int y;
  bool operator==(const CbeKey& o) const { return y == o.y && w == o.w; }
};
struct CbeHash {
  std::size_t operator()(const CbeKey& k) const { return k.w.hash() * 7 + k.y; }
};

}  // namespace

SparseMatrix hochschild_delta_matrix(const CoefficientBimodule& M, int n, int m) {
  if (n < 0) throw std::invalid_argument("hochschild_delta_matrix: n < 0");
  SparseMatrix A;
  if (n == 0) {
    // delta(y)(a) = a y - y a on the diagonal part of M
    auto c0 = cochain_basis_c0(M, m);
    auto rb = cochain_basis(M, 1, m);
    A.rows = static_cast<int>(rb.size());
    A.cols = static_cast<int>(c0.size());
    for (int r = 0; r < A.rows; ++r) {
      Gen a = rb[r].word[0];
      for (int c = 0; c < A.cols; ++c) {
        int y = c0[c];
        std::int64_t v = 0;
        if (auto act = M.action(CoefficientBimodule::Side::left, a, y);
            act && act.index == rb[r].target)
          v += act.sign;
        if (auto act = M.action(CoefficientBimodule::Side::right, a, y);
            act && act.index == rb[r].target)
          v -= act.sign;
        A.add(r, c, v);
      }
    }
    return A;
  }

  auto cb = cochain_basis(M, n, m);
  auto rb = cochain_basis(M, n + 1, m);
  std::unordered_map<CbeKey, int, CbeHash> cidx;
  cidx.reserve(cb.size());
  for (int i = 0; i < static_cast<int>(cb.size()); ++i)
    cidx.emplace(CbeKey{cb[i].word, cb[i].target}, i);
  A.rows = static_cast<int>(rb.size());
  A.cols = static_cast<int>(cb.size());

  std::map<std::pair<int, int>, std::int64_t> acc;
  for (int r = 0; r < A.rows; ++r) {
    const Word& wp = rb[r].word;
    int yp = rb[r].target;
    // first term: a_0 phi(a_1..a_n); phi's value y must satisfy a_0 . y = yp
    {
      Word rest = wp.subword(1, n);
      for (int y = 0; y < M.dim(); ++y) {
        auto act = M.action(CoefficientBimodule::Side::left, wp[0], y);
        if (act && act.index == yp) {
          auto it = cidx.find(CbeKey{rest, y});
          if (it != cidx.end()) acc[{r, it->second}] += act.sign;
        }
      }
    }
    // inner merges
    for (int i = 1; i <= n; ++i) {
      auto p = multiply(wp[i - 1], wp[i]);
      if (!p || is_unit(*p)) continue;
      Word merged = wp.spliced(i - 1, 2, *p);
      auto it = cidx.find(CbeKey{merged, yp});
      if (it != cidx.end()) acc[{r, it->second}] += (i % 2) ? -1 : +1;
    }
    // last term: (-1)^{n+1} phi(a_0..a_{n-1}) a_n
    {
      Word front = wp.subword(0, n);
      int sgn = ((n + 1) % 2) ? -1 : +1;
      for (int y = 0; y < M.dim(); ++y) {
        auto act = M.action(CoefficientBimodule::Side::right, wp[n], y);
        if (act && act.index == yp) {
          auto it = cidx.find(CbeKey{front, y});
          if (it != cidx.end()) acc[{r, it->second}] += sgn * act.sign;
        }
      }
    }
  }
  for (auto& [rc, v] : acc) A.add(rc.first, rc.second, v);
  return A;
}

ChainLabel chain_label_from_name(std::string_view name) {
  if (name == "L") return ChainLabel::L;
  if (name == "O") return ChainLabel::O;
  if (name == "eta") return ChainLabel::eta;
  if (name == "theta") return ChainLabel::theta;
  throw std::invalid_argument("unknown chain label: " + std::string(name));
}

std::string_view chain_label_name(ChainLabel label) {
  switch (label) {
    case ChainLabel::L: return "L";
    case ChainLabel::O: return "O";
    case ChainLabel::eta: return "eta";
    case ChainLabel::theta: return "theta";
  }
  return "?";
}

Vertex chain_left_vertex(ChainLabel label) {
  switch (label) {
    case ChainLabel::L: return Vertex::L;
    case ChainLabel::O: return Vertex::O;
    case ChainLabel::eta: return Vertex::L;
    case ChainLabel::theta: return Vertex::O;
  }
  return Vertex::O;
}

Vertex chain_right_vertex(ChainLabel label) {
  switch (label) {
    case ChainLabel::L: return Vertex::L;
    case ChainLabel::O: return Vertex::O;
    case ChainLabel::eta: return Vertex::O;
    case ChainLabel::theta: return Vertex::L;
  }
  return Vertex::O;
}

std::vector<Word> chain_basis(ChainLabel label, int n, int m) {
  if (n < 1) return {};
  return enumerate_words(n, m, chain_left_vertex(label), chain_right_vertex(label));
}

SparseMatrix chain_boundary_matrix(ChainLabel label, int n, int m) {
  if (n < 1) throw std::invalid_argument("chain_boundary_matrix: n < 1");
  auto cb = chain_basis(label, n, m);
  auto rb = chain_basis(label, n - 1, m);
  std::unordered_map<Word, int, WordHash> ridx;
  ridx.reserve(rb.size());
  for (int i = 0; i < static_cast<int>(rb.size()); ++i) ridx.emplace(rb[i], i);
  SparseMatrix A;
  A.rows = static_cast<int>(rb.size());
  A.cols = static_cast<int>(cb.size());
  std::map<std::pair<int, int>, std::int64_t> acc;
  for (int c = 0; c < A.cols; ++c) {
    const Word& w = cb[c];
    for (int i = 1; i <= n - 1; ++i) {
      auto p = multiply(w[i - 1], w[i]);
      if (!p || is_unit(*p)) continue;
      Word merged = w.spliced(i - 1, 2, *p);
      auto it = ridx.find(merged);
      if (it != ridx.end()) acc[{it->second, c}] += (i % 2) ? -1 : +1;
    }
  }
  for (auto& [rc, v] : acc) A.add(rc.first, rc.second, v);
  return A;
}

HomologyResult hh_dim(const CoefficientBimodule& M, int n, int m,
                      const RankOptions& opts) {
  if (n < 1) throw std::invalid_argument("hh_dim: n < 1");
  HomologyResult out;
  out.n = n;
  out.m = m;
  SparseMatrix dn = hochschild_delta_matrix(M, n, m);
  out.space_dim = dn.cols;
  RankResult rn = rank(dn, opts);
  out.rank_out = rn.rank;
  out.prime_witnesses = rn.primes;
  out.exact = rn.exact;
  int rank_prev = 0;
  if (n >= 2) {
    // the reduced complex here starts at C^1, so HH^1 = ker(delta_1)
    SparseMatrix dp = hochschild_delta_matrix(M, n - 1, m);
    RankResult rp = rank(dp, opts);
    rank_prev = rp.rank;
    out.exact = out.exact || rp.exact;
    for (auto p : rp.primes) out.prime_witnesses.push_back(p);
  }
  out.rank_in = rank_prev;
  out.dim = out.space_dim - out.rank_out - rank_prev;
  return out;
}

HomologyResult chain_homology_dim(ChainLabel label, int n, int m,
                                  const RankOptions& opts) {
  if (n < 1) throw std::invalid_argument("chain_homology_dim: n < 1");
  HomologyResult out;
  out.n = n;
  out.m = m;
  SparseMatrix dn = chain_boundary_matrix(label, n, m);
  out.space_dim = dn.cols;
  RankResult rn = rank(dn, opts);
  out.rank_out = rn.rank;
  out.prime_witnesses = rn.primes;
  out.exact = rn.exact;
  SparseMatrix dn1 = chain_boundary_matrix(label, n + 1, m);
  RankResult rin = rank(dn1, opts);
  out.rank_in = rin.rank;
  out.exact = out.exact || rin.exact;
  for (auto p : rin.primes) out.prime_witnesses.push_back(p);
  out.dim = out.space_dim - out.rank_out - out.rank_in;
  return out;
}

ClassCheck verify_chain_class(ChainLabel label, int n, int m,
                              const std::vector<std::pair<Word, std::int64_t>>& v,
                              const RankOptions& opts) {
  auto cb = chain_basis(label, n, m);
  std::unordered_map<Word, int, WordHash> cidx;
  for (int i = 0; i < static_cast<int>(cb.size()); ++i) cidx.emplace(cb[i], i);
  std::vector<std::int64_t> vec(cb.size(), 0);
  for (const auto& [w, c] : v) {
    auto it = cidx.find(w);
    if (it == cidx.end())
      throw std::invalid_argument("verify_chain_class: word " + w.str() +
                                  " is not in C_" + std::to_string(n) + "^(" +
                                  std::to_string(m) + ")");
    vec[it->second] += c;
  }
  ClassCheck out;
  // cycle: d_n v = 0
  SparseMatrix dn = chain_boundary_matrix(label, n, m);
  std::vector<std::int64_t> img(dn.rows, 0);
  for (const auto& e : dn.entries) img[e.row] += e.value * vec[e.col];
  out.is_cycle = true;
  for (auto x : img)
    if (x != 0) out.is_cycle = false;
  if (!out.is_cycle) return out;
  // nonzero: rank([d_{n+1} | v]) = rank(d_{n+1}) + 1
  SparseMatrix din = chain_boundary_matrix(label, n + 1, m);
  std::vector<std::pair<int, std::int64_t>> sv;
  for (int i = 0; i < static_cast<int>(vec.size()); ++i)
    if (vec[i] != 0) sv.push_back({i, vec[i]});
  if (sv.empty()) {
    out.is_nonzero_class = false;
    return out;
  }
  out.is_nonzero_class = extends_rank(din, sv, opts);
  return out;
}

}  // namespace extell
