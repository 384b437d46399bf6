// Command-line driver: every computation as a subcommand with text/json/csv
// output, plus the one-shot `reproduce` suite.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <complex>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "extell/acceptance.hpp"
#include "extell/ainfinity.hpp"
#include "extell/cochain.hpp"
#include "extell/eisenstein.hpp"
#include "extell/expected.hpp"
#include "extell/homology.hpp"
#include "extell/parallel.hpp"
#include "extell/simplicial.hpp"

using json = nlohmann::ordered_json;
using namespace extell;

namespace {

struct RunConfig {
  std::string tau_str = "0+1i";
  double tol = 1e-9;
  int nmax = 14;
  std::string mode = "modular";
  std::string output = "text";
  std::uint64_t seed = 1;
  int threads = 0;  // 0: use EXTELL_THREADS or 1

  Complex tau() const;
  RankOptions rank() const {
    RankOptions o;
    o.mode = (mode == "exact") ? RankMode::exact : RankMode::modular;
    o.seed = seed;
    return o;
  }
  int thread_count() const {
    if (threads > 0) return threads;
    if (const char* env = std::getenv("EXTELL_THREADS")) {
      int t = std::atoi(env);
      if (t > 0) return t;
    }
    return 1;
  }
};

// "a+bi" with decimal components; also accepts "bi" and "a".
Complex parse_tau(const std::string& s) {
  std::string t = s;
  t.erase(std::remove(t.begin(), t.end(), ' '), t.end());
  if (t.empty()) throw CLI::ValidationError("tau", "empty value");
  double re = 0, im = 0;
  auto ipos = t.find('i');
  if (ipos == std::string::npos) {
    re = std::stod(t);
  } else {
    // split at the last sign that is not part of an exponent
    std::size_t split = std::string::npos;
    for (std::size_t k = 1; k < t.size(); ++k) {
      if ((t[k] == '+' || t[k] == '-') && t[k - 1] != 'e' && t[k - 1] != 'E')
        split = k;
    }
    std::string imstr;
    if (split == std::string::npos) {
      imstr = t.substr(0, t.size() - 1);
    } else {
      re = std::stod(t.substr(0, split));
      imstr = t.substr(split, t.size() - split - 1);
    }
    if (imstr.empty() || imstr == "+") imstr = "1";
    if (imstr == "-") imstr = "-1";
    im = std::stod(imstr);
  }
  return {re, im};
}

Complex RunConfig::tau() const { return parse_tau(tau_str); }

std::string fmt(double x) {
  std::ostringstream os;
  os << std::setprecision(12) << x;
  return os.str();
}

std::string fmt(Complex z) {
  std::ostringstream os;
  os << std::setprecision(12) << z.real() << (z.imag() < 0 ? "-" : "+")
     << std::abs(z.imag()) << "i";
  return os.str();
}

json config_json(const RunConfig& cfg) {
  return json{{"tau", cfg.tau_str}, {"tol", cfg.tol}, {"nmax", cfg.nmax},
              {"mode", cfg.mode},   {"seed", cfg.seed}, {"threads", cfg.thread_count()}};
}

int emit(const RunConfig& cfg, const std::string& command, const json& rows, bool pass,
         double wall_ms) {
  if (cfg.output == "json") {
    json out{{"command", command},
             {"config", config_json(cfg)},
             {"rows", rows},
             {"pass", pass},
             {"wall_ms", wall_ms}};
    std::cout << out.dump(2) << "\n";
  } else if (cfg.output == "csv") {
    if (!rows.empty()) {
      bool first = true;
      for (auto& [k, v] : rows.front().items()) {
        std::cout << (first ? "" : ",") << k;
        first = false;
      }
      std::cout << "\n";
      for (auto& row : rows) {
        first = true;
        for (auto& [k, v] : row.items()) {
          std::cout << (first ? "" : ",");
          if (v.is_string())
            std::cout << v.get<std::string>();
          else
            std::cout << v.dump();
          first = false;
        }
        std::cout << "\n";
      }
    }
  } else {
    for (auto& row : rows) {
      bool first = true;
      for (auto& [k, v] : row.items()) {
        std::cout << (first ? "" : "  ") << k << "=";
        if (v.is_string())
          std::cout << v.get<std::string>();
        else
          std::cout << v.dump();
        first = false;
      }
      std::cout << "\n";
    }
    std::cout << (pass ? "PASS" : "FAIL") << " (" << fmt(wall_ms) << " ms)\n";
  }
  return pass ? 0 : 1;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
      .count();
}

std::string primes_str(const std::vector<std::uint64_t>& ps) {
  std::ostringstream os;
  for (std::size_t i = 0; i < ps.size(); ++i) os << (i ? " " : "") << ps[i];
  return os.str();
}

// ---------------------------------------------------------------------------

int cmd_hh(const RunConfig& cfg, const std::string& coeff, int diag) {
  auto t0 = std::chrono::steady_clock::now();
  const auto& M = CoefficientBimodule::named(coeff);
  std::vector<json> slot(cfg.nmax);
  parallel_for(cfg.nmax, cfg.thread_count(), [&](int i) {
    int n = i + 1;
    HomologyResult h = hh_dim(M, n, diag - n, cfg.rank());
    slot[i] = json{{"n", n},
                   {"m", diag - n},
                   {"dim", h.dim},
                   {"space_dim", h.space_dim},
                   {"rank_out", h.rank_out},
                   {"rank_in", h.rank_in},
                   {"primes", primes_str(h.prime_witnesses)},
                   {"exact", h.exact}};
  });
  json rows = json::array();
  for (auto& s : slot) rows.push_back(std::move(s));
  return emit(cfg, "hh", rows, true, ms_since(t0));
}

int cmd_chain(const RunConfig& cfg, const std::string& label_name, int diag, bool certify,
              const std::string& rep, int rep_n, int rep_m) {
  auto t0 = std::chrono::steady_clock::now();
  ChainLabel label = chain_label_from_name(label_name);
  json rows = json::array();
  bool pass = true;
  if (!rep.empty()) {
    // signed word list: terms separated by ';', each an optional sign and a
    // word in dot notation, e.g. "+eta.xi.theta;-xi_L.eta.theta"
    std::vector<std::pair<Word, std::int64_t>> chain;
    std::stringstream ss(rep);
    std::string tok;
    while (std::getline(ss, tok, ';')) {
      std::int64_t sign = 1;
      if (!tok.empty() && (tok[0] == '+' || tok[0] == '-')) {
        sign = tok[0] == '-' ? -1 : 1;
        tok = tok.substr(1);
      }
      auto w = word_from_string(tok);
      if (!w) throw std::invalid_argument("bad word in --rep: " + tok);
      chain.push_back({*w, sign});
    }
    ClassCheck cc = verify_chain_class(label, rep_n, rep_m, chain, cfg.rank());
    rows.push_back(json{{"rep", rep},
                        {"n", rep_n},
                        {"m", rep_m},
                        {"is_cycle", cc.is_cycle},
                        {"is_nonzero_class", cc.is_nonzero_class}});
    pass = cc.is_cycle && cc.is_nonzero_class;
    return emit(cfg, "chain", rows, pass, ms_since(t0));
  }
  std::vector<json> slot(cfg.nmax);
  parallel_for(cfg.nmax, cfg.thread_count(), [&](int i) {
    int n = i + 1;
    int m = n - diag;
    if (m < 0) {
      slot[i] = json{{"n", n}, {"m", m}, {"dim", 0}, {"space_dim", 0},
                     {"rank_out", 0}, {"rank_in", 0}, {"primes", ""}, {"exact", false}};
      return;
    }
    HomologyResult h = chain_homology_dim(label, n, m, cfg.rank());
    slot[i] = json{{"n", n},
                   {"m", m},
                   {"dim", h.dim},
                   {"space_dim", h.space_dim},
                   {"rank_out", h.rank_out},
                   {"rank_in", h.rank_in},
                   {"primes", primes_str(h.prime_witnesses)},
                   {"exact", h.exact}};
  });
  for (auto& s : slot) rows.push_back(std::move(s));
  if (certify) {
    for (const auto& r : expected::chain_representatives()) {
      if (r.label != label || r.n - r.m != diag) continue;
      Word w = *word_from_string(r.word);
      ClassCheck cc = verify_chain_class(label, r.n, r.m, {{w, 1}}, cfg.rank());
      rows.push_back(json{{"rep", r.word},
                          {"n", r.n},
                          {"m", r.m},
                          {"is_cycle", cc.is_cycle},
                          {"is_nonzero_class", cc.is_nonzero_class}});
      pass = pass && cc.is_cycle && cc.is_nonzero_class;
    }
  }
  return emit(cfg, "chain", rows, pass, ms_since(t0));
}

int cmd_simplicial(const RunConfig& cfg, int n) {
  auto t0 = std::chrono::steady_clock::now();
  json rows = json::array();
  GapComplex K = GapComplex::build(n);
  auto dims = reduced_homology_dims(K, cfg.rank());
  for (int d = 0; d <= K.top_dimension(); ++d)
    rows.push_back(
        json{{"dim", d}, {"faces", K.face_count(d)}, {"reduced_homology", dims[d]}});
  return emit(cfg, "simplicial", rows, true, ms_since(t0));
}

int cmd_eisenstein_values(const RunConfig& cfg) {
  auto t0 = std::chrono::steady_clock::now();
  EisensteinContext ctx(cfg.tau(), cfg.tol);
  json rows = json::array();
  auto add = [&rows](const std::string& name, Complex v, double err) {
    rows.push_back(json{{"name", name}, {"value", fmt(v)}, {"abs_error_est", err}});
  };
  add("t", Complex{ctx.t(), 0}, 0.0);
  add("e2*", ctx.e2star(), cfg.tol * 1e-2);
  add("e4", ctx.e4(), 1e-14 * std::abs(ctx.e4()));
  add("e6", ctx.e6(), 1e-14 * std::abs(ctx.e6()));
  add("e4_lattice", ctx.e_lattice(4), cfg.tol * 1e-2);
  add("e6_lattice", ctx.e_lattice(6), cfg.tol * 1e-2);
  add("g10", ctx.g_ab(1, 0), cfg.tol * 1e-2);
  add("g21", ctx.g_ab(2, 1), cfg.tol * 1e-2);
  add("g30", ctx.g_ab(3, 0), cfg.tol * 1e-2);
  add("j", ctx.j_direct(), 1e-9 * std::abs(ctx.j_direct()));
  return emit(cfg, "eisenstein values", rows, true, ms_since(t0));
}

int cmd_eisenstein_relations(const RunConfig& cfg) {
  auto t0 = std::chrono::steady_clock::now();
  EisensteinContext ctx(cfg.tau(), cfg.tol);
  json rows = json::array();
  bool pass = true;
  for (auto& r : ctx.check_relations()) {
    bool ok = r.residual < cfg.tol;
    pass = pass && ok;
    rows.push_back(json{{"relation", r.name},
                        {"lhs", fmt(r.lhs)},
                        {"rhs", fmt(r.rhs)},
                        {"residual", r.residual},
                        {"pass", ok}});
  }
  return emit(cfg, "eisenstein relations", rows, pass, ms_since(t0));
}

int cmd_ainfty(const RunConfig& cfg, const std::string& what, int kmax) {
  auto t0 = std::chrono::steady_clock::now();
  EisensteinContext ctx(cfg.tau(), cfg.tol);
  AInfinity ai(ctx);
  json rows = json::array();
  bool pass = true;
  double t = ctx.t();
  if (what == "check-f3") {
    int eps = 0;
    double res = ai.delta_f3_vs_m4(&eps);
    pass = res < cfg.tol;
    rows.push_back(json{{"check", "delta f3 = eps * m4"},
                        {"eps", eps},
                        {"max_residual", res},
                        {"pass", pass}});
  } else if (what == "m6") {
    Complex beta = ai.beta_m6prime();
    Complex pred = -15.0 * std::pow(t, 4) * ctx.e4();
    rows.push_back(json{{"scalar", "beta(m6')"},
                        {"value", fmt(beta)},
                        {"prediction", "-15*t^4*e4 = " + fmt(pred)},
                        {"residual", std::abs(beta - pred)}});
    double coc = ai.m_prime_cocycle_residual(6);
    rows.push_back(json{{"scalar", "||delta m6'||"},
                        {"value", fmt(Complex{coc, 0})},
                        {"prediction", "0"},
                        {"residual", coc}});
    pass = std::abs(beta - pred) < 1e-8 && coc < 1e-8;
  } else if (what == "m8") {
    Complex gamma = ai.gamma_m8prime();
    Complex pred = -35.0 * std::pow(t, 6) * ctx.e6();
    rows.push_back(json{{"scalar", "gamma(m8')"},
                        {"value", fmt(gamma)},
                        {"prediction", "-35*t^6*e6 = " + fmt(pred)},
                        {"residual", std::abs(gamma - pred)}});
    double coc = ai.m_prime_cocycle_residual(8);
    rows.push_back(json{{"scalar", "||delta m8'||"},
                        {"value", fmt(Complex{coc, 0})},
                        {"prediction", "0"},
                        {"residual", coc}});
    pass = std::abs(gamma - pred) < 1e-8 && coc < 1e-8;
  } else if (what == "j") {
    Complex jr = ai.recover_j();
    Complex jd = ctx.j_direct();
    double rel = std::abs(jr / jd - 1.0);
    rows.push_back(json{{"scalar", "recover_j"},
                        {"value", fmt(jr)},
                        {"prediction", "j_direct = " + fmt(jd)},
                        {"residual", rel}});
    pass = rel < 1e-6;
  } else if (what == "stasheff") {
    for (int k = 3; k <= kmax; ++k) {
      double rm = ai.stasheff_residual(false, k);
      double rp = ai.stasheff_residual(true, k);
      bool ok = rm < 1e-8 && rp < 1e-8;
      pass = pass && ok;
      rows.push_back(json{{"k", k},
                          {"residual_m", rm},
                          {"residual_m_prime", rp},
                          {"pass", ok}});
    }
  } else {
    throw std::invalid_argument("ainfty: unknown check " + what);
  }
  return emit(cfg, "ainfty " + what, rows, pass, ms_since(t0));
}

int cmd_reproduce(const RunConfig& cfg) {
  auto t0 = std::chrono::steady_clock::now();
  acceptance::Options opts;
  opts.rank = cfg.rank();
  opts.threads = cfg.thread_count();
  opts.seed = cfg.seed;
  opts.nmax = cfg.nmax;
  json rows = json::array();
  bool pass = true;
  for (int id = 1; id <= 10; ++id) {
    auto res = acceptance::run_criterion(id, opts);
    pass = pass && res.pass;
    int fails = 0;
    json failing = json::array();
    for (auto& d : res.details)
      if (d.rfind("FAIL", 0) == 0) {
        ++fails;
        failing.push_back(d);
      }
    rows.push_back(json{{"criterion", id},
                        {"name", res.name},
                        {"pass", res.pass},
                        {"checks", res.details.size()},
                        {"failures", fails},
                        {"failing", failing},
                        {"wall_ms", res.wall_ms}});
    if (cfg.output == "text") {
      std::cout << "criterion " << std::setw(2) << id << ": "
                << (res.pass ? "PASS" : "FAIL") << "  " << res.name << "  ["
                << res.details.size() << " checks, " << fmt(res.wall_ms) << " ms]\n";
      for (auto& d : res.details)
        if (d.rfind("FAIL", 0) == 0) std::cout << "    " << d << "\n";
    }
  }
  if (cfg.output == "text") {
    std::cout << (pass ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL") << " ("
              << fmt(ms_since(t0)) << " ms)\n";
    return pass ? 0 : 1;
  }
  return emit(cfg, "reproduce", rows, pass, ms_since(t0));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hochschild cohomology, A-infinity products and the j-invariant of the "
               "Ext-algebra of an elliptic curve"};
  app.require_subcommand(1);

  RunConfig cfg;
  app.add_option("--tau", cfg.tau_str, "lattice parameter, \"a+bi\" with Im > 0");
  app.add_option("--tol", cfg.tol, "numerical tolerance");
  app.add_option("--nmax", cfg.nmax, "table depth")->check(CLI::Range(1, 20));
  app.add_option("--mode", cfg.mode, "rank mode: modular|exact")
      ->check(CLI::IsMember({"modular", "exact"}));
  app.add_option("--output", cfg.output, "output format: text|json|csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--seed", cfg.seed, "seed for randomized property checks");
  app.add_option("--threads", cfg.threads, "worker threads (or EXTELL_THREADS)");
  app.set_config("--config", "", "config file (key=value lines; flags override)");

  std::string coeff = "B", label = "L", eis_sub, ainfty_sub, rep;
  int diag = 1, simp_n = 5, rep_n = 0, rep_m = 0, kmax = 8;
  bool certify = false;

  auto* hh = app.add_subcommand("hh", "Hochschild cohomology table on a diagonal");
  hh->fallthrough();
  hh->add_option("--coeff", coeff, "coefficient module: B|B0|B1|ideal|eta|theta|ids");
  hh->add_option("--diag", diag, "internal degree offset: m = diag - n");

  auto* chain = app.add_subcommand("chain", "bar-type chain homology table");
  chain->fallthrough();
  chain->add_option("--label", label, "complex label: L|O|eta|theta");
  chain->add_option("--diag", diag, "degree offset: m = n - diag");
  chain->add_flag("--certify", certify, "also certify the built-in representatives");
  chain->add_option("--rep", rep, "verify a signed word list, e.g. \"+eta.xi.theta\"");
  chain->add_option("--n", rep_n, "length for --rep");
  chain->add_option("--m", rep_m, "internal degree for --rep");

  auto* simp = app.add_subcommand("simplicial", "reduced homology of the gap-2 complex");
  simp->fallthrough();
  simp->add_option("--n", simp_n, "vertex count")->check(CLI::Range(1, 20));

  auto* eis = app.add_subcommand("eisenstein", "Eisenstein-series evaluations");
  eis->fallthrough();
  eis->add_option("what", eis_sub, "values|relations")
      ->required()
      ->check(CLI::IsMember({"values", "relations"}));

  auto* ain = app.add_subcommand("ainfty", "A-infinity structure checks");
  ain->fallthrough();
  ain->add_option("what", ainfty_sub, "check-f3|m6|m8|j|stasheff")
      ->required()
      ->check(CLI::IsMember({"check-f3", "m6", "m8", "j", "stasheff"}));
  ain->add_option("--kmax", kmax, "largest relation index")->check(CLI::Range(3, 10));

  app.add_subcommand("reproduce", "run the full verification suite")->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand("hh")) return cmd_hh(cfg, coeff, diag);
    if (app.got_subcommand("chain"))
      return cmd_chain(cfg, label, diag, certify, rep, rep_n, rep_m);
    if (app.got_subcommand("simplicial")) return cmd_simplicial(cfg, simp_n);
    if (app.got_subcommand("eisenstein"))
      return eis_sub == "values" ? cmd_eisenstein_values(cfg)
                                 : cmd_eisenstein_relations(cfg);
    if (app.got_subcommand("ainfty")) return cmd_ainfty(cfg, ainfty_sub, kmax);
    if (app.got_subcommand("reproduce")) return cmd_reproduce(cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
