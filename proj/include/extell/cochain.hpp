#ifndef EXTELL_COCHAIN_HPP
#define EXTELL_COCHAIN_HPP

#include <array>
#include <complex>
#include <unordered_map>

#include "extell/algebra.hpp"

namespace extell {

using Complex = std::complex<double>;

// An element of B with complex coefficients.
struct BValue {
  std::array<Complex, kBasisSize> c{};

  Complex& operator[](Gen g) { return c[static_cast<int>(g)]; }
  Complex operator[](Gen g) const { return c[static_cast<int>(g)]; }
  bool is_zero(double tol = 0.0) const {
    for (const auto& v : c)
      if (std::abs(v) > tol) return false;
    return true;
  }
  double norm_inf() const {
    double m = 0;
    for (const auto& v : c) m = std::max(m, std::abs(v));
    return m;
  }
  BValue& operator+=(const BValue& o) {
    for (int i = 0; i < kBasisSize; ++i) c[i] += o.c[i];
    return *this;
  }
  BValue& operator-=(const BValue& o) {
    for (int i = 0; i < kBasisSize; ++i) c[i] -= o.c[i];
    return *this;
  }
  BValue& operator*=(Complex s) {
    for (auto& v : c) v *= s;
    return *this;
  }
  static BValue unit(Gen g, Complex s = 1.0) {
    BValue v;
    v[g] = s;
    return v;
  }
};

// A reduced Hochschild cochain of fixed arity with values in B, stored as a
// sparse table over B_+ words.  Evaluation at a word containing a unit letter
// is zero, except for the distinguished product cochain m2.
class Cochain {
 public:
  Cochain() : arity_(0) {}
  explicit Cochain(int arity) : arity_(arity) {}

  // The multiplication of B as a 2-cochain (not reduced: units multiply).
  static Cochain product2();

  int arity() const { return arity_; }
  bool is_product() const { return is_product_; }

  void add(const Word& w, Gen target, Complex coeff);
  void add(const Word& w, const BValue& v);
  BValue eval(const Word& w) const;

  const std::unordered_map<Word, BValue, WordHash>& table() const { return table_; }
  double norm_inf() const;
  void prune(double tol = 1e-15);

  Cochain& operator+=(const Cochain& o);
  Cochain& operator-=(const Cochain& o);
  Cochain& operator*=(Complex s);

 private:
  int arity_;
  bool is_product_ = false;
  std::unordered_map<Word, BValue, WordHash> table_;
};

// Hochschild differential with coefficients in B (no extra signs).
Cochain hochschild_delta(const Cochain& phi);

// Circle product, right-counted:
//   (f o g)(a_1..a_{m+n-1}) = sum_{i=1..m} (-1)^{(n-1)(m-i)} f(.., g(a_i..), ..)
// With this convention [m2, f] = delta f on the nose.
Cochain circle(const Cochain& f, const Cochain& g);

// [f, g] = f o g - (-1)^{(m-1)(n-1)} g o f.
Cochain gerstenhaber_bracket(const Cochain& f, const Cochain& g);

// max_w ||f(w) - g(w)||_inf over B_+ words of the common arity.
double cochain_distance(const Cochain& f, const Cochain& g);

// A dense random cochain of the given arity and internal degree with complex
// coefficients in [-1,1]^2, deterministic in the seed.
Cochain random_cochain(int arity, int internal_degree, std::uint64_t seed);

}  // namespace extell

#endif  // EXTELL_COCHAIN_HPP
