#include "extell/cochain.hpp"

#include <stdexcept>

namespace extell {

Cochain Cochain::product2() {
  Cochain m2(2);
  m2.is_product_ = true;
  return m2;
}

void Cochain::add(const Word& w, Gen target, Complex coeff) {
  if (w.size() != arity_) throw std::invalid_argument("Cochain::add: arity mismatch");
  table_[w][target] += coeff;
}

void Cochain::add(const Word& w, const BValue& v) {
  if (w.size() != arity_) throw std::invalid_argument("Cochain::add: arity mismatch");
  table_[w] += v;
}

BValue Cochain::eval(const Word& w) const {
  if (is_product_) {
    BValue out;
    if (w.size() == 2) {
      if (auto p = multiply(w[0], w[1])) out[*p] = 1.0;
    }
    return out;
  }
  auto it = table_.find(w);
  return it == table_.end() ? BValue{} : it->second;
}

double Cochain::norm_inf() const {
  double m = 0;
  for (const auto& [w, v] : table_) m = std::max(m, v.norm_inf());
  return m;
}

void Cochain::prune(double tol) {
  for (auto it = table_.begin(); it != table_.end();) {
    if (it->second.is_zero(tol))
      it = table_.erase(it);
    else
      ++it;
  }
}

Cochain& Cochain::operator+=(const Cochain& o) {
  if (arity_ != o.arity_) throw std::invalid_argument("Cochain: arity mismatch");
  for (const auto& [w, v] : o.table_) table_[w] += v;
  return *this;
}

Cochain& Cochain::operator-=(const Cochain& o) {
  if (arity_ != o.arity_) throw std::invalid_argument("Cochain: arity mismatch");
  for (const auto& [w, v] : o.table_) table_[w] -= v;
  return *this;
}

Cochain& Cochain::operator*=(Complex s) {
  for (auto& [w, v] : table_) v *= s;
  return *this;
}

Cochain hochschild_delta(const Cochain& phi) {
  int n = phi.arity();
  Cochain out(n + 1);
  for (const Word& wp : enumerate_all_words(n + 1)) {
    BValue acc;
    // a_0 phi(a_1..a_n)
    BValue v = phi.eval(wp.subword(1, n));
    for (int y = 0; y < kBasisSize; ++y) {
      Gen g = static_cast<Gen>(y);
      if (v[g] == Complex{}) continue;
      if (auto p = multiply(wp[0], g)) acc[*p] += v[g];
    }
    // inner merges (unit-valued merges cannot occur in B_+)
    for (int i = 1; i <= n; ++i) {
      auto p = multiply(wp[i - 1], wp[i]);
      if (!p) continue;
      BValue mv = phi.eval(wp.spliced(i - 1, 2, *p));
      double sgn = (i % 2) ? -1.0 : 1.0;
      for (int y = 0; y < kBasisSize; ++y) acc.c[y] += sgn * mv.c[y];
    }
    // (-1)^{n+1} phi(a_0..a_{n-1}) a_n
    BValue fv = phi.eval(wp.subword(0, n));
    double sgn = ((n + 1) % 2) ? -1.0 : 1.0;
    for (int y = 0; y < kBasisSize; ++y) {
      Gen g = static_cast<Gen>(y);
      if (fv[g] == Complex{}) continue;
      if (auto p = multiply(g, wp[n])) acc[*p] += sgn * fv[g];
    }
    if (!acc.is_zero()) out.add(wp, acc);
  }
  out.prune();
  return out;
}

Cochain circle(const Cochain& f, const Cochain& g) {
  int m = f.arity(), n = g.arity();
  Cochain out(m + n - 1);
  for (const Word& w : enumerate_all_words(m + n - 1)) {
    BValue acc;
    for (int i = 1; i <= m; ++i) {
      int r = i - 1;
      BValue gv = g.eval(w.subword(r, n));
      if (gv.is_zero()) continue;
      double sgn = (((n - 1) * (m - i)) % 2) ? -1.0 : 1.0;
      for (int y = 0; y < kBasisSize; ++y) {
        Gen letter = static_cast<Gen>(y);
        if (gv[letter] == Complex{}) continue;
        Word spliced = w.spliced(r, n, letter);
        BValue fv = f.eval(spliced);
        for (int z = 0; z < kBasisSize; ++z) acc.c[z] += sgn * gv[letter] * fv.c[z];
      }
    }
    if (!acc.is_zero()) out.add(w, acc);
  }
  out.prune();
  return out;
}

Cochain gerstenhaber_bracket(const Cochain& f, const Cochain& g) {
  Cochain out = circle(f, g);
  Cochain gf = circle(g, f);
  double sgn = (((f.arity() - 1) * (g.arity() - 1)) % 2) ? -1.0 : 1.0;
  gf *= -sgn;
  out += gf;
  out.prune();
  return out;
}

Cochain random_cochain(int arity, int internal_degree, std::uint64_t seed) {
  auto next = [&seed]() {
    std::uint64_t z = (seed += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    z ^= z >> 31;
    return 2.0 * (static_cast<double>(z >> 11) * 0x1.0p-53) - 1.0;
  };
  Cochain out(arity);
  for (const Word& w : enumerate_all_words(arity)) {
    int d = w.internal_degree() + internal_degree;
    for (int y = 0; y < kBasisSize; ++y) {
      Gen g = static_cast<Gen>(y);
      if (degree(g) != d || left_vertex(g) != w.left() || right_vertex(g) != w.right())
        continue;
      out.add(w, g, Complex{next(), next()});
    }
  }
  return out;
}

double cochain_distance(const Cochain& f, const Cochain& g) {
  if (f.arity() != g.arity())
    throw std::invalid_argument("cochain_distance: arity mismatch");
  double mx = 0;
  for (const auto& [w, v] : f.table()) {
    BValue d = v;
    d -= g.eval(w);
    mx = std::max(mx, d.norm_inf());
  }
  for (const auto& [w, v] : g.table()) {
    BValue d = v;
    d -= f.eval(w);
    mx = std::max(mx, d.norm_inf());
  }
  return mx;
}

}  // namespace extell
