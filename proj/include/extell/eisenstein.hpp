#ifndef EXTELL_EISENSTEIN_HPP
#define EXTELL_EISENSTEIN_HPP

#include <complex>
#include <map>
#include <mutex>
#include <string>
#include <vector>

namespace extell {

using Complex = std::complex<double>;

// Evaluation context for the lattice Z + tau Z (omega_1 = 1, omega_2 = tau):
//  - f_mn: Gaussian-regularized lattice sums
//      f_{m,n} = (pi/a)^m sum_{w != 0} conj(w)^m / w^n * exp(-pi |w|^2 / a),
//    a = Im(tau) the area of the fundamental domain;
//  - g_ab  = sum_k k! (C(a,k) + C(b,k)) f_{a+b-k, k+1};
//  - e_2 in the iterated order (inner sum over n for fixed m, n != 0 when
//    m = 0), e_2^* = e_2 - pi/a;
//  - e_4, e_6 from the q-series, with a lattice-sum audit path.
// All values cached; caches are mutex-guarded and write-once.
class EisensteinContext {
 public:
  explicit EisensteinContext(Complex tau, double tol = 1e-9);

  Complex tau() const { return tau_; }
  double tol() const { return tol_; }
  double area() const { return area_; }
  double t() const { return t_; }        // Im(tau) / pi
  double radius_cut() const { return rcut_; }

  // Exact 0 when m, n have different parity.
  Complex f_mn(int m, int n) const;
  Complex f_mn_with_radius(int m, int n, double rcut) const;  // truncation studies
  // Exact 0 when a, b have the same parity.
  Complex g_ab(int a, int b) const;

  Complex e2() const;
  Complex e2star() const;
  Complex e4() const;
  Complex e6() const;
  Complex e_series(const std::string& which) const;  // "e2star", "e4", "e6", "e8"

  // Audit path: plain lattice sum of 1/w^{2k}, iterated with zeta-tail
  // acceleration (absolutely convergent for 2k >= 4).
  Complex e_lattice(int two_k) const;

  // Normalized E_{2k}(q) for 2k = 2, 4, 6, 8.
  Complex eisenstein_E(int two_k) const;

  // Classical j: 1728 g2^3 / (g2^3 - 27 g3^2) with g2 = 60 e4, g3 = 140 e6.
  // Throws std::domain_error when the discriminant is ~0.
  Complex j_direct() const;

  struct RelationReport {
    std::string name;
    Complex lhs;
    Complex rhs;
    double residual;
  };
  // The five g-identities.  Identity 4 is checked with coefficient -4 on
  // g30*g10 (with -5 the residual equals g30*g10 exactly; see README).
  std::vector<RelationReport> check_relations() const;

 private:
  Complex q_sum(int weight) const;  // Lambert series sum_{n} n^{weight} q^n/(1-q^n)

  Complex tau_;
  double tol_;
  double area_;
  double t_;
  double rcut_;

  mutable std::mutex mu_;
  mutable std::map<std::pair<int, int>, Complex> f_cache_;
  mutable std::map<int, Complex> misc_cache_;  // keyed constants
};

}  // namespace extell

#endif  // EXTELL_EISENSTEIN_HPP
