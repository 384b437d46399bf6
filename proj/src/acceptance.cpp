#include "extell/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <complex>
#include <sstream>
#include <stdexcept>

#include "extell/ainfinity.hpp"
#include "extell/cochain.hpp"
#include "extell/eisenstein.hpp"
#include "extell/expected.hpp"
#include "extell/homology.hpp"
#include "extell/parallel.hpp"
#include "extell/simplicial.hpp"

namespace extell::acceptance {

namespace {

constexpr double kRelTol = 1e-9;       // Eisenstein relation residuals
constexpr double kLatticeTol = 1e-8;   // lattice vs q-series
constexpr double kGaugeTol = 1e-9;     // delta f3 = eps m4
constexpr double kScalarTol = 1e-8;    // beta / gamma values
constexpr double kJRelTol = 1e-6;      // recover_j vs j_direct
constexpr double kJAbsTol = 1e-4;      // recover_j at i and rho
constexpr double kPropTol = 1e-8;      // cocycle / stasheff residuals

const Complex kTauI{0.0, 1.0};
const Complex kTau2I{0.0, 2.0};
const Complex kTauGen{0.3, 1.2};
const Complex kTauHalf{0.5, 1.3};
const Complex kTauRho{0.5, 0.8660254037844386};

std::string fmt_tau(Complex tau) {
  std::ostringstream os;
  os << tau.real() << "+" << tau.imag() << "i";
  return os.str();
}

struct Check {
  std::string line;
  bool ok;
};

class Runner {
 public:
  explicit Runner(const Options& opts) : opts_(opts) {}

  CriterionResult finish(int id) {
    CriterionResult r;
    r.id = id;
    r.name = criterion_name(id);
    r.pass = true;
    for (auto& c : checks_)
      if (!c.ok) {
        r.pass = false;
        r.details.push_back("FAIL " + c.line);
      }
    for (auto& c : checks_)
      if (c.ok) r.details.push_back("ok   " + c.line);
    return r;
  }

  void expect(bool ok, const std::string& line) { checks_.push_back({line, ok}); }

  void expect_near(double value, double bound, const std::string& what) {
    std::ostringstream os;
    os << what << " = " << value << " (bound " << bound << ")";
    expect(std::abs(value) < bound, os.str());
  }

  const Options& opts_;
  std::vector<Check> checks_;
};

// ---- criterion 1: the three diagonal tables of HH(B) -----------------------
CriterionResult criterion1(const Options& opts) {
  Runner r(opts);
  const auto& B = CoefficientBimodule::named("B");
  std::vector<expected::HHCell> cells;
  for (int off : {1, 2, 3})
    for (auto& c : expected::hh_B_diagonal(off, opts.nmax)) cells.push_back(c);
  std::vector<Check> results(cells.size());
  parallel_for(static_cast<int>(cells.size()), opts.threads, [&](int i) {
    const auto& c = cells[i];
    HomologyResult h = hh_dim(B, c.n, c.m, opts.rank);
    std::ostringstream os;
    os << "HH^" << c.n << "_(" << c.m << ")(B) = " << h.dim << " expected " << c.dim;
    results[i] = {os.str(), h.dim == c.dim};
  });
  r.checks_ = std::move(results);
  return r.finish(1);
}

// ---- criterion 2: B0/B1 items and the small-module corollaries -------------
CriterionResult criterion2(const Options& opts) {
  Runner r(opts);
  std::vector<expected::HHCell> cells = expected::hh_B0B1_items();
  for (const char* mod : {"ideal", "ids", "eta", "theta"})
    for (int off : expected::small_module_offsets(mod))
      for (auto& c : expected::hh_small_module_diagonal(mod, off, opts.nmax))
        cells.push_back(c);
  std::vector<Check> results(cells.size());
  parallel_for(static_cast<int>(cells.size()), opts.threads, [&](int i) {
    const auto& c = cells[i];
    HomologyResult h = hh_dim(CoefficientBimodule::named(c.module), c.n, c.m, opts.rank);
    std::ostringstream os;
    os << "HH^" << c.n << "_(" << c.m << ")(" << c.module << ") = " << h.dim
       << " expected " << c.dim;
    results[i] = {os.str(), h.dim == c.dim};
  });
  r.checks_ = std::move(results);
  return r.finish(2);
}

// ---- criterion 3: chain tables and representative certificates -------------
CriterionResult criterion3(const Options& opts) {
  Runner r(opts);
  std::vector<expected::ChainCell> cells;
  for (ChainLabel lab : {ChainLabel::L, ChainLabel::O, ChainLabel::eta, ChainLabel::theta})
    for (int off : expected::chain_offsets(lab))
      for (auto& c : expected::chain_diagonal(lab, off, opts.nmax)) cells.push_back(c);
  std::vector<Check> results(cells.size());
  parallel_for(static_cast<int>(cells.size()), opts.threads, [&](int i) {
    const auto& c = cells[i];
    HomologyResult h = chain_homology_dim(c.label, c.n, c.m, opts.rank);
    std::ostringstream os;
    os << "H_" << c.n << "(C^(" << c.m << ")(" << chain_label_name(c.label)
       << ")) = " << h.dim << " expected " << c.dim;
    results[i] = {os.str(), h.dim == c.dim};
  });
  r.checks_ = std::move(results);
  const auto& reps = expected::chain_representatives();
  std::vector<Check> repchecks(reps.size());
  parallel_for(static_cast<int>(reps.size()), opts.threads, [&](int i) {
    const auto& rep = reps[i];
    Word w = *word_from_string(rep.word);
    ClassCheck cc = verify_chain_class(rep.label, rep.n, rep.m, {{w, 1}}, opts.rank);
    std::ostringstream os;
    os << "representative " << rep.word << " in H_" << rep.n << "^(" << rep.m << ")("
       << chain_label_name(rep.label) << "): cycle=" << cc.is_cycle
       << " nonzero=" << cc.is_nonzero_class;
    repchecks[i] = {os.str(), cc.is_cycle && cc.is_nonzero_class};
  });
  for (auto& c : repchecks) r.checks_.push_back(std::move(c));
  return r.finish(3);
}

// ---- criterion 4: the gap-2 complexes ---------------------------------------
CriterionResult criterion4(const Options& opts) {
  Runner r(opts);
  for (int n = 1; n <= 12; ++n) {
    GapComplex K = GapComplex::build(n);
    std::vector<int> dims = reduced_homology_dims(K);
    std::vector<int> want(dims.size(), 0);
    if (n % 3 != 1) {
      int k = (n % 3 == 2) ? (n - 2) / 3 : (n - 3) / 3;
      if (k < static_cast<int>(want.size())) want[k] = 1;
    }
    bool ok = dims == want;
    std::ostringstream os;
    os << "Delta[" << n << "] reduced homology (";
    for (std::size_t i = 0; i < dims.size(); ++i) os << (i ? "," : "") << dims[i];
    os << ") matches " << (n % 3 == 1 ? "point" : "sphere");
    r.expect(ok, os.str());
  }
  r.expect(verify_sphere_class(2, {{1}, {2}}), "Delta[2]: {1}-{2} generates");
  r.expect(verify_sphere_class(5, {{1, 5}, {1, 4}, {2, 5}, {2, 4}}),
           "Delta[5]: the 4-edge loop generates (some signs)");
  r.expect(verify_sphere_class(8, {{1, 5, 7}, {1, 4, 7}, {2, 5, 7}, {2, 4, 7},
                                   {1, 5, 8}, {1, 4, 8}, {2, 5, 8}, {2, 4, 8}}),
           "Delta[8]: the 8-triangle cone generates (some signs)");
  return r.finish(4);
}

// ---- criterion 5: Eisenstein identities -------------------------------------
CriterionResult criterion5(const Options& opts) {
  Runner r(opts);
  for (Complex tau : {kTauI, kTau2I, kTauGen}) {
    EisensteinContext ctx(tau, 1e-9);
    for (auto& rel : ctx.check_relations())
      r.expect_near(rel.residual, kRelTol, "tau=" + fmt_tau(tau) + "  " + rel.name);
    double d4 = std::abs(ctx.e4() - ctx.e_lattice(4));
    double d6 = std::abs(ctx.e6() - ctx.e_lattice(6));
    r.expect_near(d4, kLatticeTol, "tau=" + fmt_tau(tau) + "  |e4 lattice - q-series|");
    r.expect_near(d6, kLatticeTol, "tau=" + fmt_tau(tau) + "  |e6 lattice - q-series|");
  }
  return r.finish(5);
}

// ---- criterion 6: delta f3 = eps m4 -----------------------------------------
CriterionResult criterion6(const Options& opts) {
  Runner r(opts);
  int eps0 = 0;
  for (Complex tau : {kTau2I, kTauGen}) {
    EisensteinContext ctx(tau, 1e-9);
    AInfinity ai(ctx);
    int eps = 0;
    double res = ai.delta_f3_vs_m4(&eps);
    if (eps0 == 0) eps0 = eps;
    std::ostringstream os;
    os << "tau=" << fmt_tau(tau) << "  |delta f3 - (" << eps << ")*m4| = " << res;
    r.expect(res < kGaugeTol && eps == eps0, os.str());
  }
  return r.finish(6);
}

// ---- criterion 7: the beta/gamma scalars --------------------------------------
CriterionResult criterion7(const Options& opts) {
  Runner r(opts);
  for (Complex tau : {kTauI, kTau2I, kTauGen}) {
    EisensteinContext ctx(tau, 1e-9);
    AInfinity ai(ctx);
    double t4 = std::pow(ctx.t(), 4), t6 = std::pow(ctx.t(), 6);
    Complex beta = ai.beta_m6prime();
    Complex gamma = ai.gamma_m8prime();
    double rb = std::abs(beta + 5.0 * t4 * ctx.e4());
    double rg = std::abs(gamma + 35.0 * t6 * ctx.e6());
    {
      std::ostringstream os;
      os << "tau=" << fmt_tau(tau) << "  |beta(m6') + 5 t^4 e4| = " << rb
         << "  [measured beta = -15 t^4 e4, residual "
         << std::abs(beta + 15.0 * t4 * ctx.e4())
         << "; see README, verification notes]";
      r.expect(rb < kScalarTol, os.str());
    }
    r.expect_near(rg, kScalarTol, "tau=" + fmt_tau(tau) + "  |gamma(m8') + 35 t^6 e6|");
    double m4max = 0;
    for (const Word& w : enumerate_all_words(4))
      m4max = std::max(m4max, ai.gauge_m_prime(w, 4).norm_inf());
    std::ostringstream os;
    os << "tau=" << fmt_tau(tau) << "  m4' == 0 exactly (max |entry| = " << m4max << ")";
    r.expect(m4max == 0.0, os.str());
  }
  return r.finish(7);
}

// ---- criterion 8: j recovery -------------------------------------------------
CriterionResult criterion8(const Options& opts) {
  Runner r(opts);
  for (Complex tau : {kTau2I, kTauHalf}) {
    EisensteinContext ctx(tau, 1e-9);
    AInfinity ai(ctx);
    Complex jr = ai.recover_j();
    Complex jd = ctx.j_direct();
    double rel = std::abs(jr / jd - 1.0);
    std::ostringstream os;
    os << "tau=" << fmt_tau(tau) << "  |recover_j/j_direct - 1| = " << rel
       << " (j = " << jd.real() << (jd.imag() < 0 ? "" : "+") << jd.imag() << "i)";
    r.expect(rel < kJRelTol, os.str());
  }
  {
    EisensteinContext ctx(kTauI, 1e-9);
    AInfinity ai(ctx);
    r.expect_near(std::abs(ai.recover_j() - 1728.0), kJAbsTol, "|recover_j(i) - 1728|");
  }
  {
    EisensteinContext ctx(kTauRho, 1e-9);
    AInfinity ai(ctx);
    r.expect_near(std::abs(ai.recover_j()), kJAbsTol, "|recover_j(rho)|");
  }
  return r.finish(8);
}

// ---- criterion 9: property suites -------------------------------------------
CriterionResult criterion9(const Options& opts) {
  Runner r(opts);
  // delta^2 = 0 over every module and the covered diagonals
  {
    double bound = 0;
    for (const auto& name : CoefficientBimodule::known_names()) {
      const auto& M = CoefficientBimodule::named(name);
      for (int off = 0; off <= 4; ++off) {
        std::vector<int> ns;
        for (int n = 1; n + 1 <= 12; ++n) ns.push_back(n);
        std::vector<double> worst(ns.size(), 0.0);
        parallel_for(static_cast<int>(ns.size()), opts.threads, [&](int i) {
          int n = ns[i];
          int m = off - n;
          SparseMatrix a = hochschild_delta_matrix(M, n, m);
          SparseMatrix b = hochschild_delta_matrix(M, n + 1, m);
          SparseMatrix p = SparseMatrix::product(b, a);
          worst[i] = p.is_zero() ? 0.0 : 1.0;
        });
        for (double w : worst) bound = std::max(bound, w);
      }
    }
    r.expect(bound == 0.0, "delta^2 = 0 for all modules, offsets 0..4, n <= 12");
  }
  {
    bool ok = true;
    for (ChainLabel lab : {ChainLabel::L, ChainLabel::O, ChainLabel::eta, ChainLabel::theta})
      for (int off = 0; off <= 4; ++off)
        for (int n = 2; n <= 15; ++n) {
          int m = n - off;
          if (m < 0) continue;
          SparseMatrix a = chain_boundary_matrix(lab, n, m);
          SparseMatrix b = chain_boundary_matrix(lab, n - 1, m);
          if (!SparseMatrix::product(b, a).is_zero()) ok = false;
        }
    r.expect(ok, "d^2 = 0 for all labels, offsets 0..4, n <= 15");
  }
  // cocycle residuals, coboundary functionals, gauge invariance, bracket law
  for (Complex tau : {kTau2I, kTauGen}) {
    EisensteinContext ctx(tau, 1e-9);
    AInfinity ai(ctx);
    r.expect_near(ai.m_prime_cocycle_residual(6), kPropTol,
                  "tau=" + fmt_tau(tau) + "  ||delta m6'||");
    r.expect_near(ai.m_prime_cocycle_residual(8), kPropTol,
                  "tau=" + fmt_tau(tau) + "  ||delta m8'||");
    double worstb = 0, worstg = 0;
    for (int trial = 0; trial < 20; ++trial) {
      Cochain psi5 = random_cochain(5, -4, opts.seed * 977 + trial);
      Cochain d5 = hochschild_delta(psi5);
      worstb = std::max(worstb, std::abs(ai.beta([&](const Word& w) { return d5.eval(w); })));
      Cochain psi7 = random_cochain(7, -6, opts.seed * 1409 + trial);
      Cochain d7 = hochschild_delta(psi7);
      worstg = std::max(worstg,
                        std::abs(ai.gamma_eval([&](const Word& w) { return d7.eval(w); })));
    }
    r.expect_near(worstb, kPropTol,
                  "tau=" + fmt_tau(tau) + "  max |beta(delta psi)| over 20 random psi");
    r.expect_near(worstg, kPropTol,
                  "tau=" + fmt_tau(tau) + "  max |gamma(delta psi)| over 20 random psi");
    Complex j0 = ai.recover_j();
    double worstj = 0;
    for (int trial = 0; trial < 5; ++trial) {
      Cochain h = random_cochain(2, -2, opts.seed * 31 + trial);
      AInfinity perturbed = ai.with_f3_perturbation(hochschild_delta(h));
      worstj = std::max(worstj, std::abs(perturbed.recover_j() / j0 - 1.0));
    }
    r.expect_near(worstj, kPropTol,
                  "tau=" + fmt_tau(tau) + "  recover_j drift under f3 -> f3 + delta h (5 h)");
  }
  {
    EisensteinContext ctx(kTauGen, 1e-9);
    Cochain m2 = Cochain::product2();
    double worst = 0;
    int count = 0;
    for (int arity = 2; arity <= 5 && count < 50; ++arity)
      for (int deg = -3; deg <= 1 && count < 50; ++deg)
        for (int trial = 0; trial < 6 && count < 50; ++trial) {
          Cochain f = random_cochain(arity, deg, opts.seed * 131 + count);
          if (f.table().empty()) continue;
          ++count;
          Cochain br = gerstenhaber_bracket(m2, f);
          Cochain df = hochschild_delta(f);
          worst = std::max(worst, cochain_distance(br, df));
        }
    std::ostringstream os;
    os << "[m2, f] = delta f on " << count << " random cochains (eps' = +1), max dev "
       << worst;
    r.expect(worst < kPropTol && count >= 50, os.str());
  }
  return r.finish(9);
}

// ---- criterion 10: Stasheff residuals ----------------------------------------
CriterionResult criterion10(const Options& opts) {
  Runner r(opts);
  for (Complex tau : {kTau2I, kTauGen}) {
    EisensteinContext ctx(tau, 1e-9);
    AInfinity ai(ctx);
    for (int k = 3; k <= 8; ++k) {
      double rm = ai.stasheff_residual(false, k);
      double rp = ai.stasheff_residual(true, k);
      r.expect_near(rm, kPropTol,
                    "tau=" + fmt_tau(tau) + "  stasheff(m) k=" + std::to_string(k));
      r.expect_near(rp, kPropTol,
                    "tau=" + fmt_tau(tau) + "  stasheff(m') k=" + std::to_string(k));
    }
    for (int k = 1; k <= 8; ++k)
      r.expect_near(ai.morphism_residual(k), kPropTol,
                    "tau=" + fmt_tau(tau) + "  morphism relation k=" + std::to_string(k));
  }
  return r.finish(10);
}

}  // namespace

std::string criterion_name(int id) {
  switch (id) {
    case 1: return "HH tables of B (three diagonals, n = 1..14)";
    case 2: return "intermediate tables: B0/B1 items (a)-(j) and the small-module corollaries";
    case 3: return "chain-homology tables and representative certificates";
    case 4: return "gap-2 complexes Delta[1..12] and the explicit sphere classes";
    case 5: return "Eisenstein identities and lattice/q-series agreement";
    case 6: return "gauge identity delta f3 = eps * m4";
    case 7: return "scalar functionals beta(m6'), gamma(m8'), m4' = 0";
    case 8: return "j recovery from the gauge-transformed products";
    case 9: return "property suites (differentials, cocycles, functionals, gauge)";
    case 10: return "Stasheff and morphism residuals up to k = 8";
  }
  return "?";
}

CriterionResult run_criterion(int id, const Options& opts) {
  auto start = std::chrono::steady_clock::now();
  CriterionResult out;
  switch (id) {
    case 1: out = criterion1(opts); break;
    case 2: out = criterion2(opts); break;
    case 3: out = criterion3(opts); break;
    case 4: out = criterion4(opts); break;
    case 5: out = criterion5(opts); break;
    case 6: out = criterion6(opts); break;
    case 7: out = criterion7(opts); break;
    case 8: out = criterion8(opts); break;
    case 9: out = criterion9(opts); break;
    case 10: out = criterion10(opts); break;
    default: throw std::invalid_argument("criterion id must be 1..10");
  }
  out.wall_ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  return out;
}

std::vector<CriterionResult> run_all(const Options& opts) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= 10; ++id) out.push_back(run_criterion(id, opts));
  return out;
}

}  // namespace extell::acceptance
