#ifndef EXTELL_AINFINITY_HPP
#define EXTELL_AINFINITY_HPP

#include <functional>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "extell/cochain.hpp"
#include "extell/eisenstein.hpp"

namespace extell {

// Koszul policy for passing a graded operation across word letters when it is
// inserted as 1^r (x) op (x) 1^t.  The calibrated policy for this structure is
// `none`; `shifted` weights the crossing by (-1)^{sum of (deg - 1)}.
enum class KoszulPolicy { none, shifted };

struct SignedWord {
  Complex coeff;
  Word word;
};

// The A-infinity products on B:
//   m_n((xi)^a  th (xL)^b et (xi)^c th (xL)^d)          = M(a,b,c,d) theta
//   m_n((xL)^a  et (xi)^b th (xL)^c et (xi)^d)          = M(a,b,c,d) eta
//   m_n((xi)^a  th (xL)^b et (xi)^c th (xL)^d et (xi)^e) = M(a+e+1,b,c,d) id_O
//   m_n((xL)^a  et (xi)^b th (xL)^c et (xi)^d th (xL)^e) = M(a+e+1,b,c,d) id_L
// with m_2 the associative product, m_1 = 0, and all odd products zero,
// where M(a,b,c,d) = (-1)^C(a+b+c+d+1,2) / (a!b!c!d!) * t^{a+b+c+d+1} * g_{a+c,b+d}.
//
// The gauge f_1 = id, f_3 (12-entry table, coefficients +-M(1,0,0,0)) carries
// (m_n) to (m'_n) with m'_4 = 0 and
//   m'_6 = m_6 + f_3(m_4 x 1^2 - 1 x m_4 x 1 + 1^2 x m_4) - m_2(f_3 x f_3),
//   m'_8 = m_8 + f_3(m_6 x 1^2 - 1 x m_6 x 1 + 1^2 x m_6)
//        - m'_6(sum_{r+1+t=6} 1^r x f_3 x 1^t).
class AInfinity {
 public:
  explicit AInfinity(const EisensteinContext& ctx,
                     KoszulPolicy policy = KoszulPolicy::none);
  AInfinity(AInfinity&& o) noexcept
      : ctx_(o.ctx_),
        policy_(o.policy_),
        f3_extra_(std::move(o.f3_extra_)),
        has_extra_(o.has_extra_),
        m6p_cache_(std::move(o.m6p_cache_)),
        m8p_cache_(std::move(o.m8p_cache_)) {}

  const EisensteinContext& ctx() const { return ctx_; }

  Complex m_coeff(int a, int b, int c, int d) const;

  // Full m_n on a word (m_2 on unit letters multiplies; higher products are
  // reduced).  nullopt = zero.
  std::optional<std::pair<Complex, Gen>> m_apply(const Word& w) const;
  std::optional<std::pair<Complex, Gen>> f3_apply(const Word& w) const;

  BValue m_eval(const Word& w) const;

  // Gauge-transformed product of the given order (4, 6 or 8) on a length-order
  // word.  Order 4 returns the explicitly cancelled (exactly zero) value.
  BValue gauge_m_prime(const Word& w, int order) const;
  BValue m_prime_eval(const Word& w) const;  // m'_n for any arity (0 off 2,6,8)

  // ---- functionals -------------------------------------------------------
  using CochainFn = std::function<BValue(const Word&)>;

  // Coefficient of y in phi(x); all words of x must share length and degree.
  Complex coeff_extract(const CochainFn& phi, const std::vector<SignedWord>& x,
                        Gen y) const;

  Complex beta(const CochainFn& phi) const;        // t_x^{id_L} - t_{w_beta}^{theta}
  Complex gamma_eval(const CochainFn& phi) const;  // t_{w_gamma}^{id_L}

  Complex beta_m6prime() const;
  Complex gamma_m8prime() const;

  // j from the gauge-transformed products alone: alpha = beta(m'_6)/beta_norm,
  // gamma = gamma_eval(m'_8)/gamma_norm, then the classical
  //   j = 1728 (60 alpha)^3 / ((60 alpha)^3 - 27 (140 gamma)^2).
  // beta(m'_6) = -15 t^4 e4 (t_x contributes -10 t^4 e4, t_w contributes
  // +5 t^4 e4) and gamma(m'_8) = -35 t^6 e6, so these normalizers make
  // alpha = t^4 e4 and gamma = t^6 e6; see README, verification notes.
  Complex recover_j() const;
  static constexpr double kBetaNormalizer = -15.0;
  static constexpr double kGammaNormalizer = -35.0;

  // ---- relation checkers -------------------------------------------------

  // max | delta f3 - eps * m_4 | over length-4 words; eps calibrated on the
  // first word where both sides are nonzero and reported through eps_out.
  double delta_f3_vs_m4(int* eps_out = nullptr) const;

  // max residual of sum_{r+s+t=k} (-1)^{r+st} m_{r+1+t}(1^r x m_s x 1^t)
  // over words of length k (degree_cap <= 0 means no cap).
  double stasheff_residual(bool primed, int k, int degree_cap = -1) const;

  // strict-morphism relation between (m_n) and (m'_n) at k inputs.
  double morphism_residual(int k) const;

  // phi_k = -( [m_3, m_{k-1}] + ... ) from the Gerstenhaber bracket;
  // returns phi_k and ||delta phi_k||_inf.
  std::pair<Cochain, double> obstruction_phi(bool primed, int k) const;

  // ||delta m'_order||_inf (cocycle residual), order 6 or 8.
  double m_prime_cocycle_residual(int order) const;

  // m_n / m'_n assembled as cochain tables of the given arity.
  Cochain m_cochain(int n) const;
  Cochain m_prime_cochain(int n) const;
  Cochain f3_cochain() const;

  // Make a copy whose f_3 is replaced by f_3 + h (h an arity-3 cochain).
  AInfinity with_f3_perturbation(const Cochain& h) const;

 private:
  BValue gauge_m6(const Word& w) const;
  BValue gauge_m8(const Word& w) const;
  double koszul_sign(const Word& w, int r) const;

  const EisensteinContext& ctx_;
  KoszulPolicy policy_;
  Cochain f3_extra_;  // arity-3 perturbation added to the f3 table (may be empty)
  bool has_extra_ = false;

  mutable std::mutex mu_;
  mutable std::unordered_map<Word, BValue, WordHash> m6p_cache_, m8p_cache_;
};

// The signed 8-word tensor x, and the evaluation words of beta and gamma.
const std::vector<SignedWord>& special_x();
const Word& beta_word();    // th.xL.et.xi.th.xL
const Word& gamma_word();   // et.xi.th.xL.xL.et.xi.th

}  // namespace extell

#endif  // EXTELL_AINFINITY_HPP
