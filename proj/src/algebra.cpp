#include "extell/algebra.hpp"

#include <map>
#include <stdexcept>

namespace extell {

std::string_view gen_name(Gen g) {
  switch (g) {
    case Gen::theta: return "theta";
    case Gen::eta: return "eta";
    case Gen::xi: return "xi";
    case Gen::xi_L: return "xi_L";
    case Gen::id_O: return "id_O";
    case Gen::id_L: return "id_L";
  }
  return "?";
}

std::optional<Gen> gen_from_name(std::string_view s) {
  if (s == "theta" || s == "th") return Gen::theta;
  if (s == "eta" || s == "et") return Gen::eta;
  if (s == "xi") return Gen::xi;
  if (s == "xi_L" || s == "xiL" || s == "xil") return Gen::xi_L;
  if (s == "id_O" || s == "idO") return Gen::id_O;
  if (s == "id_L" || s == "idL") return Gen::id_L;
  return std::nullopt;
}

std::string Word::str() const {
  std::string out;
  for (int i = 0; i < size(); ++i) {
    if (i) out.push_back('.');
    out += gen_name((*this)[i]);
  }
  return out;
}

std::optional<Word> word_from_string(std::string_view s) {
  Word w;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t dot = s.find('.', pos);
    std::string_view tok = s.substr(pos, dot == std::string_view::npos ? s.size() - pos : dot - pos);
    auto g = gen_from_name(tok);
    if (!g || w.size() >= Word::kMaxLen) return std::nullopt;
    w.push_back(*g);
    if (dot == std::string_view::npos) break;
    pos = dot + 1;
  }
  if (w.empty() || !w.composable()) return std::nullopt;
  return w;
}

namespace {

void enumerate_rec(Word& w, int n, std::vector<Word>& out) {
  if (w.size() == n) {
    out.push_back(w);
    return;
  }
  Vertex v = w.right();
  // canonical order theta < eta < xi < xi_L
  for (Gen g : kGenerators) {
    if (left_vertex(g) != v) continue;
    w.push_back(g);
    enumerate_rec(w, n, out);
    w.pop_back();
  }
}

}  // namespace

std::vector<Word> enumerate_all_words(int n) {
  std::vector<Word> out;
  if (n < 1 || n > Word::kMaxLen) return out;
  Word w;
  for (Gen g : kGenerators) {
    w.push_back(g);
    enumerate_rec(w, n, out);
    w.pop_back();
  }
  return out;
}

std::vector<Word> enumerate_words(int n, int m, std::optional<Vertex> left,
                                  std::optional<Vertex> right) {
  std::vector<Word> out;
  for (const Word& w : enumerate_all_words(n)) {
    if (w.internal_degree() != m) continue;
    if (left && w.left() != *left) continue;
    if (right && w.right() != *right) continue;
    out.push_back(w);
  }
  return out;
}

CoefficientBimodule::CoefficientBimodule(
    std::string name, std::vector<Gen> basis,
    std::function<std::optional<Gen>(Gen, Gen)> left,
    std::function<std::optional<Gen>(Gen, Gen)> right)
    : name_(std::move(name)), basis_(std::move(basis)) {
  for (int gi = 0; gi < 4; ++gi) {
    Gen g = kGenerators[gi];
    left_[gi].assign(basis_.size(), -1);
    right_[gi].assign(basis_.size(), -1);
    for (int y = 0; y < static_cast<int>(basis_.size()); ++y) {
      if (auto r = left(g, basis_[y])) left_[gi][y] = index_of(*r);
      if (auto r = right(basis_[y], g)) right_[gi][y] = index_of(*r);
    }
  }
}

int CoefficientBimodule::index_of(Gen y) const {
  for (int i = 0; i < dim(); ++i)
    if (basis_[i] == y) return i;
  return -1;
}

ModuleAction CoefficientBimodule::action(Side side, Gen g, int y) const {
  int gi = static_cast<int>(g);
  if (gi >= 4 || y < 0 || y >= dim()) return {};
  int idx = (side == Side::left) ? left_[gi][y] : right_[gi][y];
  if (idx < 0) return {};
  return {idx, +1};
}

namespace {

std::optional<Gen> full_left(Gen g, Gen y) { return multiply(g, y); }
std::optional<Gen> full_right(Gen y, Gen g) { return multiply(y, g); }

bool in_B0(Gen g) { return g == Gen::id_O || g == Gen::id_L || g == Gen::theta; }

std::optional<Gen> b0_left(Gen g, Gen y) {
  auto p = multiply(g, y);
  if (p && in_B0(*p)) return p;
  return std::nullopt;
}
std::optional<Gen> b0_right(Gen y, Gen g) {
  auto p = multiply(y, g);
  if (p && in_B0(*p)) return p;
  return std::nullopt;
}

std::optional<Gen> zero2(Gen, Gen) { return std::nullopt; }

std::map<std::string, CoefficientBimodule, std::less<>> make_modules() {
  std::map<std::string, CoefficientBimodule, std::less<>> m;
  auto add = [&m](CoefficientBimodule mod) { m.emplace(mod.name(), std::move(mod)); };
  add(CoefficientBimodule("B",
                          {Gen::id_O, Gen::id_L, Gen::theta, Gen::eta, Gen::xi, Gen::xi_L},
                          full_left, full_right));
  add(CoefficientBimodule("B1", {Gen::eta, Gen::xi, Gen::xi_L}, full_left, full_right));
  add(CoefficientBimodule("B0", {Gen::id_O, Gen::id_L, Gen::theta}, b0_left, b0_right));
  // (xi_L, xi): every B_+ action lands in degree >= 2, hence zero.
  add(CoefficientBimodule("ideal", {Gen::xi, Gen::xi_L}, zero2, zero2));
  add(CoefficientBimodule("eta", {Gen::eta}, zero2, zero2));       // B1/(xi_L, xi)
  add(CoefficientBimodule("theta", {Gen::theta}, zero2, zero2));   // B+/B1
  add(CoefficientBimodule("ids", {Gen::id_O, Gen::id_L}, zero2, zero2));  // B/B+
  return m;
}

const std::map<std::string, CoefficientBimodule, std::less<>>& modules() {
  static const auto m = make_modules();
  return m;
}

}  // namespace

const CoefficientBimodule& CoefficientBimodule::named(std::string_view name) {
  auto it = modules().find(name);
  if (it == modules().end())
    throw std::invalid_argument("unknown coefficient bimodule: " + std::string(name));
  return it->second;
}

const std::vector<std::string>& CoefficientBimodule::known_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [k, _] : modules()) v.push_back(k);
    return v;
  }();
  return names;
}

}  // namespace extell
