#ifndef EXTELL_EXPECTED_HPP
#define EXTELL_EXPECTED_HPP

#include <string>
#include <vector>

#include "extell/algebra.hpp"
#include "extell/homology.hpp"

namespace extell::expected {

// Reference dimension tables for the cohomology of B and its coefficient
// modules, and the representative tables certified by the chain checks.

struct HHCell {
  const char* module;
  int n;
  int m;
  int dim;
};

// HH^n_{(off-n)}(B) for off = 1, 2, 3 and n = 1..14.
std::vector<HHCell> hh_B_diagonal(int off, int nmax = 14);

// The ten items (a)-(j) for B0/B1.
const std::vector<HHCell>& hh_B0B1_items();

// Diagonal tables for the small modules: "ideal", "ids", "eta", "theta".
// Returns cells for HH^n_{(off-n)}, n = 1..nmax.
std::vector<HHCell> hh_small_module_diagonal(const std::string& module, int off,
                                             int nmax = 14);
std::vector<int> small_module_offsets(const std::string& module);

struct ChainCell {
  ChainLabel label;
  int n;
  int m;
  int dim;
};

// H_n(C^{(n-off)}(label)) tables.
std::vector<ChainCell> chain_diagonal(ChainLabel label, int off, int nmax = 14);
std::vector<int> chain_offsets(ChainLabel label);

struct ChainRep {
  ChainLabel label;
  int n;
  int m;
  const char* word;  // dot-separated; single representative word
};

// Every representative listed in the four representative tables
// (including the stated alternates).
const std::vector<ChainRep>& chain_representatives();

}  // namespace extell::expected

#endif  // EXTELL_EXPECTED_HPP
