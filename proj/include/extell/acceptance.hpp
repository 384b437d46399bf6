#ifndef EXTELL_ACCEPTANCE_HPP
#define EXTELL_ACCEPTANCE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "extell/sparse.hpp"

namespace extell::acceptance {

struct Options {
  RankOptions rank;
  int threads = 1;
  std::uint64_t seed = 1;
  int nmax = 14;  // table depth for the cohomology criteria
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::vector<std::string> details;  // per-check lines, failures first
  double wall_ms = 0.0;
};

// Run one of the ten acceptance criteria (1..10).
CriterionResult run_criterion(int id, const Options& opts);

// All ten, in order.
std::vector<CriterionResult> run_all(const Options& opts);

std::string criterion_name(int id);

}  // namespace extell::acceptance

#endif  // EXTELL_ACCEPTANCE_HPP
