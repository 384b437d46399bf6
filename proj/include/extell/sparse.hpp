#ifndef EXTELL_SPARSE_HPP
#define EXTELL_SPARSE_HPP

#include <cstdint>
#include <vector>

namespace extell {

// Integer-entry sparse matrix in triplet form.  Stored values are nonzero;
// Hochschild differentials only ever produce entries in {-1, 0, +1} before
// cancellation.
struct SparseMatrix {
  struct Entry {
    int row;
    int col;
    std::int64_t value;
  };

  int rows = 0;
  int cols = 0;
  std::vector<Entry> entries;

  void add(int r, int c, std::int64_t v) {
    if (v != 0) entries.push_back({r, c, v});
  }
  std::size_t nnz() const { return entries.size(); }
  bool is_zero() const { return entries.empty(); }
  SparseMatrix transposed() const;

  // A * B (used by the delta^2 = 0 and d^2 = 0 checks).
  static SparseMatrix product(const SparseMatrix& a, const SparseMatrix& b);
};

enum class RankMode { modular, exact };

struct RankOptions {
  RankMode mode = RankMode::modular;
  std::uint64_t seed = 1;
  int escalation_primes = 3;  // extra primes tried when the first two disagree
};

struct RankResult {
  int rank = 0;
  std::vector<std::uint64_t> primes;  // prime witnesses (empty in exact mode)
  bool exact = false;                 // true when fraction-free elimination ran
};

// Rank over Z_p (p an odd prime < 2^32).
int rank_mod_p(const SparseMatrix& a, std::uint64_t p);

// Exact rank over Q via sparse fraction-free (Bareiss-style) elimination.
int rank_exact(const SparseMatrix& a);

// Modular mode: two independent random 31/32-bit primes drawn from `seed`;
// on disagreement more primes are tried, then exact elimination.  Throws
// std::runtime_error if the escalation ladder cannot reconcile (never
// observed; a guard against silent wrong answers).
RankResult rank(const SparseMatrix& a, const RankOptions& opts = {});

// Random prime in [2^31, 2^32) from the given engine state (Miller-Rabin).
std::uint64_t random_prime31(std::uint64_t& state);

// rank([A | v]) == rank(A) + 1 ?  v given as sparse (row, value) pairs.
bool extends_rank(const SparseMatrix& a,
                  const std::vector<std::pair<int, std::int64_t>>& v,
                  const RankOptions& opts = {});

}  // namespace extell

#endif  // EXTELL_SPARSE_HPP
