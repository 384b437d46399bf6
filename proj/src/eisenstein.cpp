#include "extell/eisenstein.hpp"

#include <cmath>
#include <stdexcept>

namespace extell {

namespace {

constexpr double kPi = 3.14159265358979323846;
// zeta(2), zeta(4), zeta(6), zeta(8)
constexpr double kZeta2 = kPi * kPi / 6.0;
constexpr double kZeta4 = kPi * kPi * kPi * kPi / 90.0;
constexpr double kZeta6 = kPi * kPi * kPi * kPi * kPi * kPi / 945.0;
constexpr double kZeta8 = kPi * kPi * kPi * kPi * kPi * kPi * kPi * kPi / 9450.0;
constexpr double kZeta10 =
    kPi * kPi * kPi * kPi * kPi * kPi * kPi * kPi * kPi * kPi / 93555.0;

double zeta_even(int two_k) {
  switch (two_k) {
    case 2: return kZeta2;
    case 4: return kZeta4;
    case 6: return kZeta6;
    case 8: return kZeta8;
    case 10: return kZeta10;
    default: throw std::invalid_argument("zeta_even: unsupported weight");
  }
}

double binom(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double r = 1.0;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

Complex ipow(Complex z, int e) {
  Complex r = 1.0;
  for (int i = 0; i < e; ++i) r *= z;
  return r;
}

}  // namespace

EisensteinContext::EisensteinContext(Complex tau, double tol)
    : tau_(tau), tol_(tol) {
  if (!(tau.imag() > 0))
    throw std::invalid_argument("EisensteinContext: Im(tau) must be positive");
  if (!(tol > 0)) throw std::invalid_argument("EisensteinContext: tol must be positive");
  area_ = tau.imag();
  t_ = area_ / kPi;
  // Gaussian tail: exp(-pi R^2 / a) with polynomial prefactor margin.
  rcut_ = std::sqrt(area_ / kPi * (std::log(1.0 / tol_) + 30.0));
}

Complex EisensteinContext::f_mn_with_radius(int m, int n, double rcut) const {
  if ((m - n) % 2 != 0) return Complex{0.0, 0.0};
  const double r2 = rcut * rcut;
  const double x = tau_.real(), y = tau_.imag();
  Complex s{0.0, 0.0};
  int qmax = static_cast<int>(std::floor(rcut / y)) + 1;
  for (int q = -qmax; q <= qmax; ++q) {
    double c = -q * x;
    double h2 = r2 - (q * y) * (q * y);
    if (h2 < 0) continue;
    double h = std::sqrt(h2);
    int pmin = static_cast<int>(std::floor(c - h));
    int pmax = static_cast<int>(std::ceil(c + h));
    for (int p = pmin; p <= pmax; ++p) {
      if (p == 0 && q == 0) continue;
      Complex w{p + q * x, q * y};
      double a2 = std::norm(w);
      if (a2 > r2) continue;
      Complex term = ipow(std::conj(w), m) / ipow(w, n) * std::exp(-kPi * a2 / area_);
      s += term;
    }
  }
  return std::pow(Complex{kPi / area_, 0.0}, m) * s;
}

Complex EisensteinContext::f_mn(int m, int n) const {
  if ((m - n) % 2 != 0) return Complex{0.0, 0.0};
  std::lock_guard<std::mutex> lk(mu_);
  auto key = std::make_pair(m, n);
  auto it = f_cache_.find(key);
  if (it != f_cache_.end()) return it->second;
  Complex v = f_mn_with_radius(m, n, rcut_);
  f_cache_.emplace(key, v);
  return v;
}

Complex EisensteinContext::g_ab(int a, int b) const {
  if ((a - b) % 2 == 0) return Complex{0.0, 0.0};
  Complex s{0.0, 0.0};
  double kfact = 1.0;
  for (int k = 0; k <= std::max(a, b); ++k) {
    if (k > 0) kfact *= k;
    double coef = kfact * (binom(a, k) + binom(b, k));
    if (coef != 0.0) s += coef * f_mn(a + b - k, k + 1);
  }
  return s;
}

namespace {

// Inner sum sum_{n in Z} 1/(z+n)^K, paired n <-> -n.  Terms up to
// n0 ~ 2|z| are summed as they stand; past n0 the asymptotic pieces
// 2/n^K + c2 z^2/n^{K+2} are subtracted termwise and added back through the
// zeta tails, so the correction series decays like z^4/n^{K+4}.
Complex inner_power_sum(Complex z, int K, double tol) {
  const double c2 = K * (K + 1);
  int n0 = static_cast<int>(2.0 * std::abs(z)) + 4;
  Complex acc = 1.0 / ipow(z, K);
  double partK = 0.0, partK2 = 0.0;
  for (int n = 1; n <= n0; ++n) {
    double dn = n;
    acc += 1.0 / ipow(z + dn, K) + 1.0 / ipow(z - dn, K);
    partK += 1.0 / std::pow(dn, K);
    partK2 += 1.0 / std::pow(dn, K + 2);
  }
  acc += 2.0 * (zeta_even(K) - partK) + c2 * z * z * (zeta_even(K + 2) - partK2);
  for (int n = n0 + 1; n < 4000000; ++n) {
    double dn = n;
    Complex t = 1.0 / ipow(z + dn, K) + 1.0 / ipow(z - dn, K) -
                2.0 / std::pow(dn, K) - c2 * z * z / std::pow(dn, K + 2);
    acc += t;
    if (std::abs(t) * n < tol) break;
  }
  return acc;
}

// Rows decay like exp(-K pi y m); past this index they are below tol.
int outer_row_limit(double y, int K, double tol) {
  return static_cast<int>(std::log(1.0 / tol) / (K * kPi * y)) + 5;
}

}  // namespace

Complex EisensteinContext::e2() const {
  std::lock_guard<std::mutex> lk(mu_);
  auto it = misc_cache_.find(2);
  if (it != misc_cache_.end()) return it->second;
  // Iterated order: outer sum over m, inner sum over n (n != 0 when m = 0).
  const double tol = std::min(tol_ * 1e-3, 1e-12);
  Complex total = 2.0 * kZeta2;  // m = 0 row
  int quiet = 0;
  int mmax = outer_row_limit(tau_.imag(), 2, tol);
  for (int m = 1; quiet < 3 && m <= mmax; ++m) {
    Complex row = inner_power_sum(static_cast<double>(m) * tau_, 2, tol);
    total += 2.0 * row;  // rows at m and -m agree
    quiet = (std::abs(row) < tol) ? quiet + 1 : 0;
  }
  misc_cache_.emplace(2, total);
  return total;
}

Complex EisensteinContext::e2star() const { return e2() - kPi / area_; }

Complex EisensteinContext::q_sum(int weight) const {
  Complex q = std::exp(Complex{0.0, 2.0 * kPi} * tau_);
  Complex acc{0.0, 0.0};
  Complex qn = 1.0;
  for (int n = 1; n < 4000; ++n) {
    qn *= q;
    double nw = std::pow(static_cast<double>(n), weight);
    Complex term = nw * qn / (1.0 - qn);
    acc += term;
    if (std::abs(term) < 1e-19 && n > 4) break;
  }
  return acc;
}

Complex EisensteinContext::eisenstein_E(int two_k) const {
  switch (two_k) {
    case 2: return 1.0 - 24.0 * q_sum(1);
    case 4: return 1.0 + 240.0 * q_sum(3);
    case 6: return 1.0 - 504.0 * q_sum(5);
    case 8: return 1.0 + 480.0 * q_sum(7);
    default: throw std::invalid_argument("eisenstein_E: unsupported weight");
  }
}

Complex EisensteinContext::e4() const {
  std::lock_guard<std::mutex> lk(mu_);
  auto it = misc_cache_.find(4);
  if (it != misc_cache_.end()) return it->second;
  Complex v = 2.0 * kZeta4 * eisenstein_E(4);
  misc_cache_.emplace(4, v);
  return v;
}

Complex EisensteinContext::e6() const {
  std::lock_guard<std::mutex> lk(mu_);
  auto it = misc_cache_.find(6);
  if (it != misc_cache_.end()) return it->second;
  Complex v = 2.0 * kZeta6 * eisenstein_E(6);
  misc_cache_.emplace(6, v);
  return v;
}

Complex EisensteinContext::e_series(const std::string& which) const {
  if (which == "e2star") return e2star();
  if (which == "e2") return e2();
  if (which == "e4") return e4();
  if (which == "e6") return e6();
  if (which == "e8") return 2.0 * kZeta8 * eisenstein_E(8);
  throw std::invalid_argument("e_series: unknown series " + which);
}

Complex EisensteinContext::e_lattice(int two_k) const {
  if (two_k < 4 || two_k % 2 != 0 || two_k > 8)
    throw std::invalid_argument("e_lattice: weight must be 4, 6 or 8");
  // iterated evaluation of the (absolutely convergent) plain lattice sum
  const double tol = std::min(tol_ * 1e-4, 1e-13);
  const int K = two_k;
  Complex total = 2.0 * zeta_even(K);
  int quiet = 0;
  int mmax = outer_row_limit(tau_.imag(), K, tol);
  for (int m = 1; quiet < 3 && m <= mmax; ++m) {
    Complex row = inner_power_sum(static_cast<double>(m) * tau_, K, tol);
    total += 2.0 * row;
    quiet = (std::abs(row) < tol) ? quiet + 1 : 0;
  }
  return total;
}

Complex EisensteinContext::j_direct() const {
  Complex g2 = 60.0 * e4();
  Complex g3 = 140.0 * e6();
  Complex num = g2 * g2 * g2;
  Complex disc = num - 27.0 * g3 * g3;
  if (std::abs(disc) < 1e-12 * (std::abs(num) + std::abs(27.0 * g3 * g3) + 1.0))
    throw std::domain_error("j_direct: discriminant is numerically zero");
  return 1728.0 * num / disc;
}

std::vector<EisensteinContext::RelationReport> EisensteinContext::check_relations() const {
  std::vector<RelationReport> out;
  Complex es = e2star(), v4 = e4(), v6 = e6();
  Complex g10 = g_ab(1, 0), g30 = g_ab(3, 0), g50 = g_ab(5, 0);
  Complex g21 = g_ab(2, 1), g41 = g_ab(4, 1), g32 = g_ab(3, 2);
  auto push = [&out](std::string name, Complex lhs, Complex rhs) {
    out.push_back({std::move(name), lhs, rhs, std::abs(lhs - rhs)});
  };
  push("g30 = 6 e4", g30, 6.0 * v4);
  push("g21 = -(e2*)^2 + 5 e4", g21, -es * es + 5.0 * v4);
  push("g50 = 120 e6", g50, 120.0 * v6);
  push("g41 = -4 g30 g10 + (7/10) g50", g41, -4.0 * g30 * g10 + 0.7 * g50);
  push("g32 = -2 g21 g10 + (5/6) g41", g32, -2.0 * g21 * g10 + (5.0 / 6.0) * g41);
  return out;
}

}  // namespace extell
