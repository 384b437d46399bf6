#include "extell/sparse.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace extell {

using boost::multiprecision::cpp_int;

SparseMatrix SparseMatrix::transposed() const {
  SparseMatrix t;
  t.rows = cols;
  t.cols = rows;
  t.entries.reserve(entries.size());
  for (const Entry& e : entries) t.entries.push_back({e.col, e.row, e.value});
  return t;
}

SparseMatrix SparseMatrix::product(const SparseMatrix& a, const SparseMatrix& b) {
  // rows of b indexed by columns of a
  std::vector<std::vector<std::pair<int, std::int64_t>>> brows(b.rows);
  for (const Entry& e : b.entries) brows[e.row].push_back({e.col, e.value});
  std::map<std::pair<int, int>, std::int64_t> acc;
  for (const Entry& e : a.entries) {
    if (e.col >= b.rows) continue;
    for (auto [c2, v2] : brows[e.col]) acc[{e.row, c2}] += e.value * v2;
  }
  SparseMatrix out;
  out.rows = a.rows;
  out.cols = b.cols;
  for (auto& [rc, v] : acc)
    if (v != 0) out.entries.push_back({rc.first, rc.second, v});
  return out;
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull})
    if (n % q == 0) return n == q;
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  // deterministic for n < 3.3e24
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                          29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a % n, d, n);
    if (x <= 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 0; i < s - 1; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Row of a matrix in echelon bookkeeping: sorted (col, value) pairs.
using PackedRow = std::vector<std::pair<int, std::uint64_t>>;

}  // namespace

std::uint64_t random_prime31(std::uint64_t& state) {
  for (;;) {
    std::uint64_t cand = (splitmix64(state) % (1ull << 31)) + (1ull << 31);
    cand |= 1;
    if (is_prime(cand)) return cand;
  }
}

int rank_mod_p(const SparseMatrix& a, std::uint64_t p) {
  // Gather rows, reduce in order of leading column; pivot rows are kept
  // normalized with leading value 1.
  std::vector<PackedRow> rows(a.rows);
  for (const auto& e : a.entries) {
    std::int64_t v = e.value % static_cast<std::int64_t>(p);
    if (v < 0) v += static_cast<std::int64_t>(p);
    if (v) rows[e.row].push_back({e.col, static_cast<std::uint64_t>(v)});
  }
  for (auto& r : rows) {
    std::sort(r.begin(), r.end());
    // merge duplicate columns
    PackedRow merged;
    for (auto& [c, v] : r) {
      if (!merged.empty() && merged.back().first == c)
        merged.back().second = (merged.back().second + v) % p;
      else
        merged.push_back({c, v});
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(),
                                [](auto& cv) { return cv.second == 0; }),
                 merged.end());
    r = std::move(merged);
  }
  std::stable_sort(rows.begin(), rows.end(), [](const PackedRow& x, const PackedRow& y) {
    if (x.empty() != y.empty()) return y.empty();
    if (x.empty()) return false;
    return x[0].first < y[0].first;
  });

  std::unordered_map<int, PackedRow> pivots;
  pivots.reserve(a.rows);
  PackedRow work, tmp;
  int rank = 0;
  for (auto& row : rows) {
    work = std::move(row);
    while (!work.empty()) {
      int lead = work[0].first;
      auto it = pivots.find(lead);
      if (it == pivots.end()) {
        // normalize leading value to 1
        std::uint64_t inv = powmod(work[0].second, p - 2, p);
        for (auto& [c, v] : work) v = mulmod(v, inv, p);
        pivots.emplace(lead, std::move(work));
        ++rank;
        break;
      }
      const PackedRow& pr = it->second;
      std::uint64_t f = work[0].second;  // pr has leading 1
      // work -= f * pr   (merged walk)
      tmp.clear();
      std::size_t i = 0, j = 0;
      while (i < work.size() || j < pr.size()) {
        if (j == pr.size() || (i < work.size() && work[i].first < pr[j].first)) {
          tmp.push_back(work[i++]);
        } else if (i == work.size() || pr[j].first < work[i].first) {
          std::uint64_t nv = p - mulmod(f, pr[j].second, p);
          if (nv != p) tmp.push_back({pr[j].first, nv});
          ++j;
        } else {
          std::uint64_t nv = (work[i].second + p - mulmod(f, pr[j].second, p)) % p;
          if (nv) tmp.push_back({work[i].first, nv});
          ++i, ++j;
        }
      }
      work.swap(tmp);
    }
  }
  return rank;
}

int rank_exact(const SparseMatrix& a) {
  // Sparse elimination over Q with cpp_int numerators: each pivot step does
  // row_new = row * piv_val - row[lead] * piv_row, then divides the row by the
  // gcd to keep growth in check (fraction-free with content reduction).
  using Row = std::vector<std::pair<int, cpp_int>>;
  std::vector<Row> rows(a.rows);
  for (const auto& e : a.entries) rows[e.row].push_back({e.col, cpp_int(e.value)});
  for (auto& r : rows) {
    std::sort(r.begin(), r.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    Row merged;
    for (auto& [c, v] : r) {
      if (!merged.empty() && merged.back().first == c)
        merged.back().second += v;
      else
        merged.push_back({c, v});
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(),
                                [](auto& cv) { return cv.second == 0; }),
                 merged.end());
    r = std::move(merged);
  }
  std::stable_sort(rows.begin(), rows.end(), [](const Row& x, const Row& y) {
    if (x.empty() != y.empty()) return y.empty();
    if (x.empty()) return false;
    return x[0].first < y[0].first;
  });

  std::map<int, Row> pivots;
  int rank = 0;
  for (auto& row : rows) {
    Row work = std::move(row);
    while (!work.empty()) {
      int lead = work[0].first;
      auto it = pivots.find(lead);
      if (it == pivots.end()) {
        pivots.emplace(lead, std::move(work));
        ++rank;
        break;
      }
      const Row& pr = it->second;
      cpp_int pv = pr[0].second;
      cpp_int f = work[0].second;
      Row tmp;
      std::size_t i = 0, j = 0;
      cpp_int content = 0;
      while (i < work.size() || j < pr.size()) {
        cpp_int nv;
        int col;
        if (j == pr.size() || (i < work.size() && work[i].first < pr[j].first)) {
          col = work[i].first;
          nv = work[i].second * pv;
          ++i;
        } else if (i == work.size() || pr[j].first < work[i].first) {
          col = pr[j].first;
          nv = -f * pr[j].second;
          ++j;
        } else {
          col = work[i].first;
          nv = work[i].second * pv - f * pr[j].second;
          ++i, ++j;
        }
        if (nv != 0) {
          tmp.push_back({col, nv});
          if (content == 0)
            content = abs(nv);
          else
            content = gcd(content, abs(nv));
        }
      }
      if (content > 1)
        for (auto& [c, v] : tmp) v /= content;
      work.swap(tmp);
    }
  }
  return rank;
}

RankResult rank(const SparseMatrix& a, const RankOptions& opts) {
  RankResult out;
  if (a.entries.empty()) return out;
  if (opts.mode == RankMode::exact) {
    out.rank = rank_exact(a);
    out.exact = true;
    return out;
  }
  std::uint64_t state = opts.seed ^ 0xabcdef12345678ULL;
  std::uint64_t p1 = random_prime31(state);
  std::uint64_t p2 = random_prime31(state);
  while (p2 == p1) p2 = random_prime31(state);
  int r1 = rank_mod_p(a, p1);
  int r2 = rank_mod_p(a, p2);
  out.primes = {p1, p2};
  if (r1 == r2) {
    out.rank = r1;
    return out;
  }
  // ranks mod p never exceed the true rank; escalate
  int best = std::max(r1, r2);
  for (int i = 0; i < opts.escalation_primes; ++i) {
    std::uint64_t p = random_prime31(state);
    out.primes.push_back(p);
    best = std::max(best, rank_mod_p(a, p));
  }
  int exact = rank_exact(a);
  out.exact = true;
  if (exact < best)
    throw std::runtime_error("rank: modular ranks exceed the exact rank");
  out.rank = exact;
  return out;
}

bool extends_rank(const SparseMatrix& a,
                  const std::vector<std::pair<int, std::int64_t>>& v,
                  const RankOptions& opts) {
  SparseMatrix aug = a;
  aug.cols = a.cols + 1;
  for (auto [r, val] : v) aug.add(r, a.cols, val);
  RankOptions o = opts;
  int ra = rank(a, o).rank;
  int rb = rank(aug, o).rank;
  return rb == ra + 1;
}

}  // namespace extell
