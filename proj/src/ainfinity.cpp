#include "extell/ainfinity.hpp"

#include <cmath>
#include <stdexcept>

namespace extell {

namespace {

double factorial(int n) {
  double r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

struct Skeleton {
  std::vector<Gen> letters;  // the theta/eta subsequence
  std::vector<int> runs;     // filler run lengths, letters.size() + 1 of them
};

Skeleton skeleton_of(const Word& w) {
  Skeleton s;
  int run = 0;
  for (int i = 0; i < w.size(); ++i) {
    Gen g = w[i];
    if (g == Gen::theta || g == Gen::eta) {
      s.letters.push_back(g);
      s.runs.push_back(run);
      run = 0;
    } else {
      ++run;
    }
  }
  s.runs.push_back(run);
  return s;
}

}  // namespace

AInfinity::AInfinity(const EisensteinContext& ctx, KoszulPolicy policy)
    : ctx_(ctx), policy_(policy), f3_extra_(3) {}

Complex AInfinity::m_coeff(int a, int b, int c, int d) const {
  if (a < 0 || b < 0 || c < 0 || d < 0)
    throw std::invalid_argument("m_coeff: indices must be nonnegative");
  int n = a + b + c + d + 1;
  double sign = ((n * (n - 1) / 2) % 2) ? -1.0 : 1.0;
  Complex g = ctx_.g_ab(a + c, b + d);
  if (g == Complex{}) return {};
  return sign / (factorial(a) * factorial(b) * factorial(c) * factorial(d)) *
         std::pow(ctx_.t(), n) * g;
}

std::optional<std::pair<Complex, Gen>> AInfinity::m_apply(const Word& w) const {
  int n = w.size();
  if (n == 2) {
    if (auto p = multiply(w[0], w[1])) return std::make_pair(Complex{1.0, 0.0}, *p);
    return std::nullopt;
  }
  if (w.has_unit_letter() || !w.composable()) return std::nullopt;
  if (n < 2 || n % 2) return std::nullopt;
  Skeleton s = skeleton_of(w);
  auto is = [&s](std::initializer_list<Gen> pat) {
    if (s.letters.size() != pat.size()) return false;
    int i = 0;
    for (Gen g : pat)
      if (s.letters[i++] != g) return false;
    return true;
  };
  using G = Gen;
  Complex coef;
  Gen out;
  if (is({G::theta, G::eta, G::theta})) {
    coef = m_coeff(s.runs[0], s.runs[1], s.runs[2], s.runs[3]);
    out = G::theta;
  } else if (is({G::eta, G::theta, G::eta})) {
    coef = m_coeff(s.runs[0], s.runs[1], s.runs[2], s.runs[3]);
    out = G::eta;
  } else if (is({G::theta, G::eta, G::theta, G::eta})) {
    coef = m_coeff(s.runs[0] + s.runs[4] + 1, s.runs[1], s.runs[2], s.runs[3]);
    out = G::id_O;
  } else if (is({G::eta, G::theta, G::eta, G::theta})) {
    coef = m_coeff(s.runs[0] + s.runs[4] + 1, s.runs[1], s.runs[2], s.runs[3]);
    out = G::id_L;
  } else {
    return std::nullopt;
  }
  if (coef == Complex{}) return std::nullopt;
  return std::make_pair(coef, out);
}

namespace {

struct F3Entry {
  Gen a, b, c;
  int sign;
  Gen target;
};

// f3 = M(1,0,0,0) [ (+[et xi xi]* - [xL xL et]* - [xL et xi]*) (x) eta
//                 + (+[th xL xL]* - [xi xi th]* - [xi th xL]*) (x) theta
//                 + (+[xi th et]* + [th xL et]* - [th et xi]*) (x) id_O
//                 + (+[xL et th]* + [et xi th]* - [et th xL]*) (x) id_L ]
constexpr F3Entry kF3Table[] = {
    {Gen::eta, Gen::xi, Gen::xi, +1, Gen::eta},
    {Gen::xi_L, Gen::xi_L, Gen::eta, -1, Gen::eta},
    {Gen::xi_L, Gen::eta, Gen::xi, -1, Gen::eta},
    {Gen::theta, Gen::xi_L, Gen::xi_L, +1, Gen::theta},
    {Gen::xi, Gen::xi, Gen::theta, -1, Gen::theta},
    {Gen::xi, Gen::theta, Gen::xi_L, -1, Gen::theta},
    {Gen::xi, Gen::theta, Gen::eta, +1, Gen::id_O},
    {Gen::theta, Gen::xi_L, Gen::eta, +1, Gen::id_O},
    {Gen::theta, Gen::eta, Gen::xi, -1, Gen::id_O},
    {Gen::xi_L, Gen::eta, Gen::theta, +1, Gen::id_L},
    {Gen::eta, Gen::xi, Gen::theta, +1, Gen::id_L},
    {Gen::eta, Gen::theta, Gen::xi_L, -1, Gen::id_L},
};

}  // namespace

std::optional<std::pair<Complex, Gen>> AInfinity::f3_apply(const Word& w) const {
  if (w.size() != 3 || w.has_unit_letter()) return std::nullopt;
  BValue acc;
  for (const F3Entry& e : kF3Table) {
    if (w[0] == e.a && w[1] == e.b && w[2] == e.c) {
      acc[e.target] += static_cast<double>(e.sign) * m_coeff(1, 0, 0, 0);
      break;  // entries are distinct words
    }
  }
  if (has_extra_) acc += f3_extra_.eval(w);
  for (int y = 0; y < kBasisSize; ++y)
    if (acc.c[y] != Complex{}) {
      // a single basis component by construction of the table and of delta h
      return std::make_pair(acc.c[y], static_cast<Gen>(y));
    }
  return std::nullopt;
}

BValue AInfinity::m_eval(const Word& w) const {
  BValue out;
  if (auto r = m_apply(w)) out[r->second] = r->first;
  return out;
}

double AInfinity::koszul_sign(const Word& w, int r) const {
  if (policy_ == KoszulPolicy::none) return 1.0;
  int s = 0;
  for (int i = 0; i < r; ++i) s += degree(w[i]) - 1;
  return (s % 2) ? -1.0 : 1.0;
}

BValue AInfinity::gauge_m6(const Word& w) const {
  BValue out = m_eval(w);
  // f3 ( m4 x 1^2 - 1 x m4 x 1 + 1^2 x m4 )
  for (int r = 0; r <= 2; ++r) {
    auto inner = m_apply(w.subword(r, 4));
    if (!inner) continue;
    auto outer = f3_apply(w.spliced(r, 4, inner->second));
    if (!outer) continue;
    double sgn = (r % 2) ? -1.0 : 1.0;
    out[outer->second] += sgn * koszul_sign(w, r) * inner->first * outer->first;
  }
  // - m2 (f3 x f3)
  auto l = f3_apply(w.subword(0, 3));
  auto rr = f3_apply(w.subword(3, 3));
  if (l && rr) {
    if (auto p = multiply(l->second, rr->second))
      out[*p] -= l->first * rr->first;
  }
  return out;
}

BValue AInfinity::gauge_m8(const Word& w) const {
  BValue out = m_eval(w);
  // f3 ( m6 x 1^2 - 1 x m6 x 1 + 1^2 x m6 )
  for (int r = 0; r <= 2; ++r) {
    auto inner = m_apply(w.subword(r, 6));
    if (!inner) continue;
    auto outer = f3_apply(w.spliced(r, 6, inner->second));
    if (!outer) continue;
    double sgn = (r % 2) ? -1.0 : 1.0;
    out[outer->second] += sgn * koszul_sign(w, r) * inner->first * outer->first;
  }
  // - m'_6 ( sum_{r+1+t=6} 1^r x f3 x 1^t ); f3 has even shifted degree, the
  // insertion sum is unsigned.
  for (int r = 0; r <= 5; ++r) {
    auto inner = f3_apply(w.subword(r, 3));
    if (!inner) continue;
    Word spliced = w.spliced(r, 3, inner->second);
    if (spliced.has_unit_letter()) continue;  // m'_6 is reduced
    BValue v = m_prime_eval(spliced);
    for (int y = 0; y < kBasisSize; ++y) out.c[y] -= inner->first * v.c[y];
  }
  return out;
}

BValue AInfinity::gauge_m_prime(const Word& w, int order) const {
  if (w.size() != order)
    throw std::invalid_argument("gauge_m_prime: word length must equal order");
  switch (order) {
    case 4: {
      // morphism relation at k = 4:
      //   m'_4 = m_4 + sum_{r+2+t=4} (-1)^{r+2t} f3(1^r x m2 x 1^t)
      //        - m2(f3 x 1) - m2(1 x f3);
      // the terms cancel exactly.
      BValue out = m_eval(w);
      for (int r = 0; r <= 2; ++r) {
        auto p = multiply(w[r], w[r + 1]);
        if (!p) continue;
        auto outer = f3_apply(w.spliced(r, 2, *p));
        if (!outer) continue;
        double sgn = (r % 2) ? -1.0 : 1.0;  // (-1)^{r + 2t}
        out[outer->second] += sgn * koszul_sign(w, r) * outer->first;
      }
      if (auto l = f3_apply(w.subword(0, 3)))
        if (auto p = multiply(l->second, w[3])) out[*p] -= l->first;
      if (auto rr = f3_apply(w.subword(1, 3)))
        if (auto p = multiply(w[0], rr->second)) out[*p] -= rr->first;
      return out;
    }
    case 6: return gauge_m6(w);
    case 8: return gauge_m8(w);
    default: throw std::invalid_argument("gauge_m_prime: order must be 4, 6 or 8");
  }
}

BValue AInfinity::m_prime_eval(const Word& w) const {
  int n = w.size();
  if (n == 2) return m_eval(w);
  if (w.has_unit_letter()) return {};
  if (n == 6) {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = m6p_cache_.find(w);
    if (it != m6p_cache_.end()) return it->second;
    BValue v = gauge_m6(w);
    m6p_cache_.emplace(w, v);
    return v;
  }
  if (n == 8) {
    {
      std::lock_guard<std::mutex> lk(mu_);
      auto it = m8p_cache_.find(w);
      if (it != m8p_cache_.end()) return it->second;
    }
    BValue v = gauge_m8(w);
    std::lock_guard<std::mutex> lk(mu_);
    m8p_cache_.emplace(w, v);
    return v;
  }
  return {};
}

Complex AInfinity::coeff_extract(const CochainFn& phi,
                                 const std::vector<SignedWord>& x, Gen y) const {
  if (x.empty()) return {};
  int len = x.front().word.size();
  int deg = x.front().word.internal_degree();
  for (const auto& sw : x) {
    if (sw.word.size() != len)
      throw std::invalid_argument("coeff_extract: mixed word lengths");
    if (sw.word.internal_degree() != deg)
      throw std::invalid_argument("coeff_extract: mixed word degrees");
  }
  Complex acc{};
  for (const auto& sw : x) acc += sw.coeff * phi(sw.word)[y];
  return acc;
}

const std::vector<SignedWord>& special_x() {
  using G = Gen;
  static const std::vector<SignedWord> x = {
      {-1.0, Word({G::eta, G::theta, G::eta, G::xi, G::theta, G::xi_L})},
      {-1.0, Word({G::xi_L, G::eta, G::xi, G::theta, G::eta, G::theta})},
      {+1.0, Word({G::xi_L, G::eta, G::theta, G::eta, G::theta, G::xi_L})},
      {+1.0, Word({G::eta, G::theta, G::eta, G::theta, G::xi_L, G::xi_L})},
      {-1.0, Word({G::eta, G::theta, G::xi_L, G::xi_L, G::eta, G::theta})},
      {+1.0, Word({G::xi_L, G::xi_L, G::eta, G::theta, G::eta, G::theta})},
      {-1.0, Word({G::eta, G::xi, G::theta, G::eta, G::theta, G::xi_L})},
      {-1.0, Word({G::xi_L, G::eta, G::theta, G::eta, G::xi, G::theta})},
  };
  return x;
}

const Word& beta_word() {
  using G = Gen;
  static const Word w({G::theta, G::xi_L, G::eta, G::xi, G::theta, G::xi_L});
  return w;
}

const Word& gamma_word() {
  using G = Gen;
  static const Word w({G::eta, G::xi, G::theta, G::xi_L, G::xi_L, G::eta, G::xi, G::theta});
  return w;
}

Complex AInfinity::beta(const CochainFn& phi) const {
  Complex tx = coeff_extract(phi, special_x(), Gen::id_L);
  Complex tw = phi(beta_word())[Gen::theta];
  return tx - tw;
}

Complex AInfinity::gamma_eval(const CochainFn& phi) const {
  return phi(gamma_word())[Gen::id_L];
}

Complex AInfinity::beta_m6prime() const {
  return beta([this](const Word& w) { return m_prime_eval(w); });
}

Complex AInfinity::gamma_m8prime() const {
  return gamma_eval([this](const Word& w) { return m_prime_eval(w); });
}

Complex AInfinity::recover_j() const {
  Complex alpha = beta_m6prime() / kBetaNormalizer;
  Complex gamma = gamma_m8prime() / kGammaNormalizer;
  Complex a = 60.0 * alpha, g = 140.0 * gamma;
  Complex num = a * a * a;
  Complex disc = num - 27.0 * g * g;
  if (std::abs(disc) < 1e-12 * (std::abs(num) + std::abs(27.0 * g * g) + 1e-30))
    throw std::domain_error("recover_j: discriminant is numerically zero");
  return 1728.0 * num / disc;
}

double AInfinity::delta_f3_vs_m4(int* eps_out) const {
  Cochain f3 = f3_cochain();
  Cochain df3 = hochschild_delta(f3);
  int eps = 0;
  double maxres = 0;
  for (const Word& w : enumerate_all_words(4)) {
    BValue lhs = df3.eval(w);
    BValue rhs = m_eval(w);
    if (eps == 0) {
      for (int y = 0; y < kBasisSize && eps == 0; ++y) {
        if (std::abs(lhs.c[y]) > 1e-12 && std::abs(rhs.c[y]) > 1e-12)
          eps = (std::real(lhs.c[y] / rhs.c[y]) > 0) ? +1 : -1;
      }
    }
    double e = static_cast<double>(eps == 0 ? 1 : eps);
    for (int y = 0; y < kBasisSize; ++y)
      maxres = std::max(maxres, std::abs(lhs.c[y] - e * rhs.c[y]));
  }
  if (eps_out) *eps_out = (eps == 0 ? 1 : eps);
  return maxres;
}

double AInfinity::stasheff_residual(bool primed, int k, int degree_cap) const {
  auto eval = [&](const Word& w) -> BValue {
    return primed ? m_prime_eval(w) : m_eval(w);
  };
  double maxres = 0;
  for (const Word& w : enumerate_all_words(k)) {
    if (degree_cap >= 0 && w.internal_degree() > degree_cap) continue;
    BValue acc;
    for (int s = 1; s <= k; ++s) {
      for (int r = 0; r + s <= k; ++r) {
        int t = k - s - r;
        BValue inner = eval(w.subword(r, s));
        if (inner.is_zero()) continue;
        double sgn = ((r + s * t) % 2) ? -1.0 : 1.0;
        sgn *= koszul_sign(w, r);
        for (int y = 0; y < kBasisSize; ++y) {
          if (inner.c[y] == Complex{}) continue;
          BValue outer = eval(w.spliced(r, s, static_cast<Gen>(y)));
          for (int z = 0; z < kBasisSize; ++z)
            acc.c[z] += sgn * inner.c[y] * outer.c[z];
        }
      }
    }
    maxres = std::max(maxres, acc.norm_inf());
  }
  return maxres;
}

double AInfinity::morphism_residual(int k) const {
  // LHS: sum_{r+s+t=k} (-1)^{r+st} f_{r+1+t}(1^r x m_s x 1^t)
  // RHS: sum over decompositions k = i_1 + ... + i_r into parts 1 and 3 of
  //      (-1)^s m'_r (f_{i_1} x ... x f_{i_r}),
  //      s = sum_{j=1}^{r-1} (r-j)(i_j - 1).
  auto f_eval = [&](const Word& w) -> BValue {
    if (w.size() == 1) return BValue::unit(w[0]);
    BValue out;
    if (w.size() == 3 && !w.has_unit_letter())
      if (auto r = f3_apply(w)) out[r->second] = r->first;
    return out;
  };
  std::vector<std::vector<int>> decomps;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int rem) {
    if (rem == 0) {
      decomps.push_back(cur);
      return;
    }
    for (int p : {1, 3})
      if (p <= rem) {
        cur.push_back(p);
        rec(rem - p);
        cur.pop_back();
      }
  };
  rec(k);

  double maxres = 0;
  for (const Word& w : enumerate_all_words(k)) {
    BValue acc;
    for (int s = 1; s <= k; ++s) {
      for (int r = 0; r + s <= k; ++r) {
        int t = k - s - r;
        BValue inner = m_eval(w.subword(r, s));
        if (inner.is_zero()) continue;
        double sgn = ((r + s * t) % 2) ? -1.0 : 1.0;
        sgn *= koszul_sign(w, r);
        for (int y = 0; y < kBasisSize; ++y) {
          if (inner.c[y] == Complex{}) continue;
          BValue fv = f_eval(w.spliced(r, s, static_cast<Gen>(y)));
          for (int z = 0; z < kBasisSize; ++z)
            acc.c[z] += sgn * inner.c[y] * fv.c[z];
        }
      }
    }
    for (const auto& dec : decomps) {
      int r = static_cast<int>(dec.size());
      int sexp = 0;
      for (int j = 0; j + 1 < r; ++j) sexp += (r - 1 - j) * (dec[j] - 1);
      double sgn = (sexp % 2) ? -1.0 : 1.0;
      // tensor the f-factors; each factor value is one basis letter
      std::vector<std::pair<Complex, Word>> states = {{1.0, Word{}}};
      int pos = 0;
      for (int part : dec) {
        BValue fv = f_eval(w.subword(pos, part));
        pos += part;
        std::vector<std::pair<Complex, Word>> next;
        for (auto& [c, pre] : states)
          for (int y = 0; y < kBasisSize; ++y) {
            if (fv.c[y] == Complex{}) continue;
            Word nw = pre;
            nw.push_back(static_cast<Gen>(y));
            next.push_back({c * fv.c[y], nw});
          }
        states = std::move(next);
        if (states.empty()) break;
      }
      for (auto& [c, tup] : states) {
        BValue mv = m_prime_eval(tup);
        for (int z = 0; z < kBasisSize; ++z) acc.c[z] -= sgn * c * mv.c[z];
      }
    }
    maxres = std::max(maxres, acc.norm_inf());
  }
  return maxres;
}

Cochain AInfinity::m_cochain(int n) const {
  if (n == 2) return Cochain::product2();
  Cochain out(n);
  for (const Word& w : enumerate_all_words(n))
    if (auto r = m_apply(w)) out.add(w, r->second, r->first);
  return out;
}

Cochain AInfinity::m_prime_cochain(int n) const {
  if (n == 2) return Cochain::product2();
  Cochain out(n);
  for (const Word& w : enumerate_all_words(n)) {
    BValue v = m_prime_eval(w);
    if (!v.is_zero()) out.add(w, v);
  }
  return out;
}

Cochain AInfinity::f3_cochain() const {
  Cochain out(3);
  for (const Word& w : enumerate_all_words(3))
    if (auto r = f3_apply(w)) out.add(w, r->second, r->first);
  return out;
}

AInfinity AInfinity::with_f3_perturbation(const Cochain& h) const {
  if (h.arity() != 3)
    throw std::invalid_argument("with_f3_perturbation: arity-3 cochain required");
  AInfinity out(ctx_, policy_);
  out.f3_extra_ = f3_extra_;
  for (const auto& [w, v] : h.table()) out.f3_extra_.add(w, v);
  out.has_extra_ = true;
  return out;
}

std::pair<Cochain, double> AInfinity::obstruction_phi(bool primed, int k) const {
  if (k < 3) throw std::invalid_argument("obstruction_phi: k >= 3 required");
  auto table = [&](int n) { return primed ? m_prime_cochain(n) : m_cochain(n); };
  Cochain phi(k + 1);
  // phi_k = -( [m_3, m_{k-1}] + [m_4, m_{k-2}] + ... ), the self-pair of even
  // k weighted by 1/2.
  for (int i = 3; 2 * i <= k + 2; ++i) {
    int j = k + 2 - i;
    Cochain br = gerstenhaber_bracket(table(i), table(j));
    br *= (i == j) ? Complex{-0.5, 0.0} : Complex{-1.0, 0.0};
    phi += br;
  }
  phi.prune();
  Cochain dphi = hochschild_delta(phi);
  return {std::move(phi), dphi.norm_inf()};
}

double AInfinity::m_prime_cocycle_residual(int order) const {
  Cochain mp = m_prime_cochain(order);
  Cochain d = hochschild_delta(mp);
  return d.norm_inf();
}

}  // namespace extell
