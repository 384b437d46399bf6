#ifndef EXTELL_ALGEBRA_HPP
#define EXTELL_ALGEBRA_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace extell {

// The graded algebra B = R + B_+ over R = <id_O, id_L>, with
//   B_0 = <id_L, id_O, theta>,  B_1 = <eta, xi, xi_L>,
// and nontrivial products theta*eta = xi, eta*theta = xi_L besides the
// unit actions.  B_+ is the span of the four generators below; every
// other product of B_+ elements is zero.

enum class Vertex : std::uint8_t { O = 0, L = 1 };

enum class Gen : std::uint8_t {
  theta = 0,  // O -> L, degree 0
  eta = 1,    // L -> O, degree 1
  xi = 2,     // O -> O, degree 1
  xi_L = 3,   // L -> L, degree 1
  id_O = 4,
  id_L = 5,
};

inline constexpr int kBasisSize = 6;
inline constexpr std::array<Gen, 4> kGenerators = {Gen::theta, Gen::eta, Gen::xi,
                                                   Gen::xi_L};

constexpr Vertex left_vertex(Gen g) {
  switch (g) {
    case Gen::theta: return Vertex::O;
    case Gen::eta: return Vertex::L;
    case Gen::xi: return Vertex::O;
    case Gen::xi_L: return Vertex::L;
    case Gen::id_O: return Vertex::O;
    case Gen::id_L: return Vertex::L;
  }
  return Vertex::O;
}

constexpr Vertex right_vertex(Gen g) {
  switch (g) {
    case Gen::theta: return Vertex::L;
    case Gen::eta: return Vertex::O;
    case Gen::xi: return Vertex::O;
    case Gen::xi_L: return Vertex::L;
    case Gen::id_O: return Vertex::O;
    case Gen::id_L: return Vertex::L;
  }
  return Vertex::O;
}

constexpr int degree(Gen g) {
  return (g == Gen::theta || g == Gen::id_O || g == Gen::id_L) ? 0 : 1;
}

constexpr bool is_unit(Gen g) { return g == Gen::id_O || g == Gen::id_L; }

std::string_view gen_name(Gen g);
std::optional<Gen> gen_from_name(std::string_view s);

// Product of two basis elements of B; nullopt means zero.
constexpr std::optional<Gen> multiply(Gen a, Gen b) {
  if (right_vertex(a) != left_vertex(b)) return std::nullopt;
  if (is_unit(a)) return b;
  if (is_unit(b)) return a;
  if (a == Gen::theta && b == Gen::eta) return Gen::xi;
  if (a == Gen::eta && b == Gen::theta) return Gen::xi_L;
  return std::nullopt;
}

// A composable word of basis letters; the basis of B_+^(x)n over R when all
// letters are generators.  Unit letters are allowed transiently (they arise
// when an A-infinity operation is spliced into a word).
class Word {
 public:
  static constexpr int kMaxLen = 24;

  Word() : len_(0) {}
  explicit Word(std::initializer_list<Gen> ls) : len_(0) {
    for (Gen g : ls) push_back(g);
  }
  static Word from_letters(const std::vector<Gen>& ls) {
    Word w;
    for (Gen g : ls) w.push_back(g);
    return w;
  }

  int size() const { return len_; }
  bool empty() const { return len_ == 0; }
  Gen operator[](int i) const { return static_cast<Gen>(letters_[i]); }

  void push_back(Gen g) { letters_[len_++] = static_cast<std::uint8_t>(g); }
  void pop_back() { --len_; }

  Vertex left() const { return left_vertex((*this)[0]); }
  Vertex right() const { return right_vertex((*this)[len_ - 1]); }

  int internal_degree() const {
    int d = 0;
    for (int i = 0; i < len_; ++i) d += degree((*this)[i]);
    return d;
  }

  bool composable() const {
    for (int i = 0; i + 1 < len_; ++i)
      if (right_vertex((*this)[i]) != left_vertex((*this)[i + 1])) return false;
    return true;
  }

  bool has_unit_letter() const {
    for (int i = 0; i < len_; ++i)
      if (is_unit((*this)[i])) return true;
    return false;
  }

  Word subword(int pos, int count) const {
    Word w;
    for (int i = 0; i < count; ++i) w.push_back((*this)[pos + i]);
    return w;
  }

  // Replace letters [pos, pos+count) by the single letter g.
  Word spliced(int pos, int count, Gen g) const {
    Word w;
    for (int i = 0; i < pos; ++i) w.push_back((*this)[i]);
    w.push_back(g);
    for (int i = pos + count; i < len_; ++i) w.push_back((*this)[i]);
    return w;
  }

  Word concat(const Word& o) const {
    Word w = *this;
    for (int i = 0; i < o.size(); ++i) w.push_back(o[i]);
    return w;
  }

  friend bool operator==(const Word& a, const Word& b) {
    if (a.len_ != b.len_) return false;
    for (int i = 0; i < a.len_; ++i)
      if (a.letters_[i] != b.letters_[i]) return false;
    return true;
  }
  friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }
  friend bool operator<(const Word& a, const Word& b) {
    if (a.len_ != b.len_) return a.len_ < b.len_;
    for (int i = 0; i < a.len_; ++i)
      if (a.letters_[i] != b.letters_[i]) return a.letters_[i] < b.letters_[i];
    return false;
  }

  std::size_t hash() const {
    std::size_t h = static_cast<std::size_t>(len_) * 0x9e3779b97f4a7c15ULL;
    for (int i = 0; i < len_; ++i) h = h * 131 + letters_[i];
    return h;
  }

  std::string str() const;  // e.g. "eta.xi.theta"

 private:
  std::array<std::uint8_t, kMaxLen> letters_{};
  std::uint8_t len_;
};

struct WordHash {
  std::size_t operator()(const Word& w) const { return w.hash(); }
};

// Parse "eta.xi.theta" (also accepts xiL / xi_L / idO / id_L spellings).
std::optional<Word> word_from_string(std::string_view s);

// All composable words of length n and internal degree m, optionally with
// prescribed endpoints, in canonical lexicographic order
// (theta < eta < xi < xi_L).
std::vector<Word> enumerate_words(int n, int m,
                                  std::optional<Vertex> left = std::nullopt,
                                  std::optional<Vertex> right = std::nullopt);

// All composable words of length n in canonical order.
std::vector<Word> enumerate_all_words(int n);

// ---------------------------------------------------------------------------
// Coefficient bimodules: named finite-basis B-bimodules with explicit action
// tables.  Action coefficients in all of these modules are 0 or +1, but the
// interface carries a sign so callers can stay generic.

struct ModuleAction {
  int index = -1;  // -1 means the action is zero
  int sign = 0;
  explicit operator bool() const { return index >= 0; }
};

class CoefficientBimodule {
 public:
  enum class Side { left, right };

  const std::string& name() const { return name_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  Gen symbol(int i) const { return basis_[i]; }
  int index_of(Gen y) const;  // -1 if y is not a basis symbol

  // Action of a generator g in B_+ on the basis element with index y.
  ModuleAction action(Side side, Gen g, int y) const;

  // Known modules: "B", "B0", "B1", "ideal" ((xi_L, xi)), "eta", "theta",
  // "ids".  Throws std::invalid_argument for unknown names.
  static const CoefficientBimodule& named(std::string_view name);
  static const std::vector<std::string>& known_names();

  CoefficientBimodule(std::string name, std::vector<Gen> basis,
                      std::function<std::optional<Gen>(Gen, Gen)> left,
                      std::function<std::optional<Gen>(Gen, Gen)> right);

 private:
  std::string name_;
  std::vector<Gen> basis_;
  // left_[g][y], right_[g][y]: resulting basis index or -1.
  std::array<std::vector<int>, 4> left_, right_;
};

}  // namespace extell

#endif  // EXTELL_ALGEBRA_HPP
