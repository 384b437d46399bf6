#include "extell/expected.hpp"

#include <map>
#include <stdexcept>

namespace extell::expected {

namespace {

int hot_dim(const std::map<int, int>& hot, int n) {
  auto it = hot.find(n);
  return it == hot.end() ? 0 : it->second;
}

}  // namespace

std::vector<HHCell> hh_B_diagonal(int off, int nmax) {
  std::map<int, int> hot;
  switch (off) {
    case 1: hot = {{1, 2}, {2, 1}, {4, 1}}; break;
    case 2: hot = {{3, 1}, {5, 1}, {6, 1}, {8, 1}}; break;
    case 3: hot = {{7, 1}, {9, 1}, {10, 1}, {12, 1}}; break;
    default: throw std::invalid_argument("hh_B_diagonal: off must be 1, 2 or 3");
  }
  std::vector<HHCell> out;
  for (int n = 1; n <= nmax; ++n) out.push_back({"B", n, off - n, hot_dim(hot, n)});
  return out;
}

const std::vector<HHCell>& hh_B0B1_items() {
  static const std::vector<HHCell> items = {
      {"B1", 1, 0, 1},   {"B0", 1, 0, 1},                      // a
      {"B1", 2, -1, 0},  {"B1", 3, -1, 1},                     // b
      {"B0", 2, -1, 1},  {"B0", 3, -2, 2},  {"B1", 4, -2, 2},  // c
      {"B1", 5, -3, 1},
      {"B0", 4, -3, 1},  {"B0", 5, -3, 0},                     // d
      {"B1", 6, -4, 0},  {"B1", 7, -4, 1},                     // e
      {"B0", 6, -4, 1},  {"B0", 7, -5, 2},  {"B1", 8, -5, 2},  // f
      {"B1", 9, -6, 1},
      {"B0", 8, -6, 1},  {"B0", 9, -6, 0},                     // g
      {"B1", 10, -7, 0}, {"B1", 11, -7, 1},                    // h
      {"B0", 10, -7, 1}, {"B0", 11, -8, 2}, {"B1", 12, -8, 2},  // i
      {"B1", 13, -9, 1},
      {"B0", 12, -9, 1}, {"B0", 13, -9, 0},                    // j
  };
  return items;
}

std::vector<HHCell> hh_small_module_diagonal(const std::string& module, int off,
                                             int nmax) {
  std::map<int, int> hot;
  if (module == "ideal") {
    if (off == 2) hot = {{3, 2}, {4, 2}};
    else if (off == 3) hot = {{7, 2}, {8, 2}};
    else if (off == 4) hot = {{11, 2}, {12, 2}};
    else if (off != 1) throw std::invalid_argument("ideal: offset out of table");
  } else if (module == "ids") {
    if (off == 1) hot = {{3, 2}, {4, 2}};
    else if (off == 2) hot = {{7, 2}, {8, 2}};
    else if (off == 3) hot = {{11, 2}, {12, 2}};
    else throw std::invalid_argument("ids: offset out of table");
  } else if (module == "eta" || module == "theta") {
    if (off == 1) hot = {{1, 1}, {2, 1}};
    else if (off == 2) hot = {{5, 1}, {6, 1}};
    else if (off == 3) hot = {{9, 1}, {10, 1}};
    else if (off == 4) hot = {{13, 1}, {14, 1}};
    else throw std::invalid_argument(module + ": offset out of table");
  } else {
    throw std::invalid_argument("hh_small_module_diagonal: unknown module " + module);
  }
  const char* mod = module == "ideal"   ? "ideal"
                    : module == "ids"   ? "ids"
                    : module == "eta"   ? "eta"
                                        : "theta";
  std::vector<HHCell> out;
  for (int n = 1; n <= nmax; ++n) out.push_back({mod, n, off - n, hot_dim(hot, n)});
  return out;
}

std::vector<int> small_module_offsets(const std::string& module) {
  if (module == "ideal") return {1, 2, 3, 4};
  if (module == "ids") return {1, 2, 3};
  if (module == "eta" || module == "theta") return {1, 2, 3, 4};
  throw std::invalid_argument("small_module_offsets: unknown module " + module);
}

std::vector<ChainCell> chain_diagonal(ChainLabel label, int off, int nmax) {
  std::map<int, int> hot;
  bool lo = (label == ChainLabel::L || label == ChainLabel::O);
  if (lo) {
    if (off == 0) hot = {};
    else if (off == 1) hot = {{3, 1}, {4, 1}};
    else if (off == 2) hot = {{7, 1}, {8, 1}};
    else if (off == 3) hot = {{11, 1}, {12, 1}};
    else throw std::invalid_argument("chain_diagonal: offset out of table");
  } else if (label == ChainLabel::eta) {
    if (off == 0) hot = {{1, 1}, {2, 1}};
    else if (off == 1) hot = {{5, 1}, {6, 1}};
    else if (off == 2) hot = {{9, 1}, {10, 1}};
    else if (off == 3) hot = {{13, 1}, {14, 1}};
    else throw std::invalid_argument("chain_diagonal: offset out of table");
  } else {  // theta
    if (off == 1) hot = {{1, 1}, {2, 1}};
    else if (off == 2) hot = {{5, 1}, {6, 1}};
    else if (off == 3) hot = {{9, 1}, {10, 1}};
    else if (off == 4) hot = {{13, 1}, {14, 1}};
    else throw std::invalid_argument("chain_diagonal: offset out of table");
  }
  std::vector<ChainCell> out;
  for (int n = 1; n <= nmax; ++n) {
    int m = n - off;
    if (m < 0) continue;
    out.push_back({label, n, m, hot_dim(hot, n)});
  }
  return out;
}

std::vector<int> chain_offsets(ChainLabel label) {
  switch (label) {
    case ChainLabel::L:
    case ChainLabel::O: return {0, 1, 2, 3};
    case ChainLabel::eta: return {0, 1, 2, 3};
    case ChainLabel::theta: return {1, 2, 3, 4};
  }
  return {};
}

const std::vector<ChainRep>& chain_representatives() {
  using CL = ChainLabel;
  static const std::vector<ChainRep> reps = {
      {CL::L, 3, 2, "eta.xi.theta"},
      {CL::L, 4, 3, "eta.xi.theta.xi_L"},
      {CL::L, 4, 3, "xi_L.eta.xi.theta"},
      {CL::L, 7, 5, "eta.xi.theta.xi_L.eta.xi.theta"},
      {CL::L, 8, 6, "eta.xi.theta.xi_L.eta.xi.theta.xi_L"},
      {CL::L, 8, 6, "xi_L.eta.xi.theta.xi_L.eta.xi.theta"},
      {CL::L, 11, 8, "eta.xi.theta.xi_L.eta.xi.theta.xi_L.eta.xi.theta"},
      {CL::L, 12, 9, "eta.xi.theta.xi_L.eta.xi.theta.xi_L.eta.xi.theta.xi_L"},
      {CL::L, 12, 9, "xi_L.eta.xi.theta.xi_L.eta.xi.theta.xi_L.eta.xi.theta"},

      {CL::O, 3, 2, "theta.xi_L.eta"},
      {CL::O, 4, 3, "theta.xi_L.eta.xi"},
      {CL::O, 4, 3, "xi.theta.xi_L.eta"},
      {CL::O, 7, 5, "theta.xi_L.eta.xi.theta.xi_L.eta"},
      {CL::O, 8, 6, "theta.xi_L.eta.xi.theta.xi_L.eta.xi"},
      {CL::O, 8, 6, "xi.theta.xi_L.eta.xi.theta.xi_L.eta"},
      {CL::O, 11, 8, "theta.xi_L.eta.xi.theta.xi_L.eta.xi.theta.xi_L.eta"},
      {CL::O, 12, 9, "theta.xi_L.eta.xi.theta.xi_L.eta.xi.theta.xi_L.eta.xi"},
      {CL::O, 12, 9, "xi.theta.xi_L.eta.xi.theta.xi_L.eta.xi.theta.xi_L.eta"},

      {CL::eta, 1, 1, "eta"},
      {CL::eta, 2, 2, "xi_L.eta"},
      {CL::eta, 2, 2, "eta.xi"},
      {CL::eta, 5, 4, "eta.xi.theta.xi_L.eta"},
      {CL::eta, 6, 5, "eta.xi.theta.xi_L.xi_L.eta"},
      {CL::eta, 6, 5, "eta.xi.theta.xi_L.eta.xi"},
      {CL::eta, 6, 5, "xi_L.eta.xi.theta.xi_L.eta"},
      {CL::eta, 9, 7, "eta.xi.theta.xi_L.eta.xi.theta.xi_L.eta"},
      {CL::eta, 10, 8, "eta.xi.theta.xi_L.eta.xi.theta.xi_L.xi_L.eta"},
      {CL::eta, 10, 8, "eta.xi.theta.xi_L.eta.xi.theta.xi_L.eta.xi"},
      {CL::eta, 10, 8, "xi_L.eta.xi.theta.xi_L.eta.xi.theta.xi_L.eta"},
      {CL::eta, 13, 10, "eta.xi.theta.xi_L.eta.xi.theta.xi_L.eta.xi.theta.xi_L.eta"},
      {CL::eta, 14, 11, "eta.xi.theta.xi_L.eta.xi.theta.xi_L.eta.xi.theta.xi_L.xi_L.eta"},
      {CL::eta, 14, 11, "eta.xi.theta.xi_L.eta.xi.theta.xi_L.eta.xi.theta.xi_L.eta.xi"},
      {CL::eta, 14, 11, "xi_L.eta.xi.theta.xi_L.eta.xi.theta.xi_L.eta.xi.theta.xi_L.eta"},

      {CL::theta, 1, 0, "theta"},
      {CL::theta, 2, 1, "xi.theta"},
      {CL::theta, 2, 1, "theta.xi_L"},
      {CL::theta, 5, 3, "theta.xi_L.eta.xi.theta"},
      {CL::theta, 6, 4, "theta.xi_L.eta.xi.theta.xi_L"},
      {CL::theta, 6, 4, "theta.xi_L.eta.xi.xi.theta"},
      {CL::theta, 6, 4, "xi.theta.xi_L.eta.xi.theta"},
      {CL::theta, 9, 6, "theta.xi_L.eta.xi.theta.xi_L.eta.xi.theta"},
      {CL::theta, 10, 7, "theta.xi_L.eta.xi.theta.xi_L.eta.xi.theta.xi_L"},
      {CL::theta, 10, 7, "theta.xi_L.eta.xi.theta.xi_L.eta.xi.xi.theta"},
      {CL::theta, 10, 7, "xi.theta.xi_L.eta.xi.theta.xi_L.eta.xi.theta"},
      {CL::theta, 13, 9, "theta.xi_L.eta.xi.theta.xi_L.eta.xi.theta.xi_L.eta.xi.theta"},
      {CL::theta, 14, 10, "theta.xi_L.eta.xi.theta.xi_L.eta.xi.theta.xi_L.eta.xi.theta.xi_L"},
      {CL::theta, 14, 10, "theta.xi_L.eta.xi.theta.xi_L.eta.xi.theta.xi_L.eta.xi.xi.theta"},
      {CL::theta, 14, 10, "xi.theta.xi_L.eta.xi.theta.xi_L.eta.xi.theta.xi_L.eta.xi.theta"},
  };
  return reps;
}

}  // namespace extell::expected
