#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "extell/eisenstein.hpp"

using namespace extell;

namespace {
const Complex kI{0.0, 1.0};
const Complex k2I{0.0, 2.0};
const Complex kGen{0.3, 1.2};
const Complex kRho{0.5, 0.8660254037844386};
}  // namespace

TEST_CASE("context validates its arguments") {
  CHECK_THROWS_AS(EisensteinContext(Complex{1.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(EisensteinContext(Complex{0.0, -1.0}), std::invalid_argument);
  CHECK_THROWS_AS(EisensteinContext(k2I, -1.0), std::invalid_argument);
  EisensteinContext ctx(k2I);
  CHECK(ctx.area() == 2.0);
  CHECK(ctx.t() == doctest::Approx(2.0 / M_PI));
}

TEST_CASE("parity vanishing is exact") {
  EisensteinContext ctx(kGen);
  CHECK(ctx.f_mn(1, 2) == Complex{0.0, 0.0});
  CHECK(ctx.f_mn(0, 3) == Complex{0.0, 0.0});
  CHECK(ctx.g_ab(1, 1) == Complex{0.0, 0.0});
  CHECK(ctx.g_ab(2, 0) == Complex{0.0, 0.0});
  CHECK(ctx.f_mn(1, 1) != Complex{0.0, 0.0});
}

TEST_CASE("truncation stability of the f-sums") {
  for (Complex tau : {kI, k2I, kGen}) {
    EisensteinContext ctx(tau, 1e-9);
    double rc = ctx.radius_cut();
    for (auto [m, n] : {std::pair{1, 1}, {0, 2}, {3, 1}, {5, 1}, {2, 4}}) {
      Complex v = ctx.f_mn_with_radius(m, n, rc);
      Complex w = ctx.f_mn_with_radius(m, n, rc * 1.5);
      CHECK(std::abs(v - w) < 1e-9);
    }
  }
}

TEST_CASE("frozen reference values at tau = 2i") {
  EisensteinContext ctx(k2I, 1e-9);
  CHECK(std::abs(ctx.e2star() - Complex{1.7187964545050932, 0.0}) < 1e-10);
  CHECK(std::abs(ctx.e4() - Complex{2.1664582514808046, 0.0}) < 1e-12);
  CHECK(std::abs(ctx.e6() - Complex{2.0311095062610057, 0.0}) < 1e-12);
  CHECK(std::abs(ctx.g_ab(1, 0) - Complex{1.7187964545050932, 0.0}) < 1e-12);
  CHECK(std::abs(ctx.g_ab(2, 1) - Complex{7.8780300053847438, 0.0}) < 1e-11);
  CHECK(std::abs(ctx.g_ab(3, 2) - Complex{40.622190125220114, 0.0}) < 1e-10);
}

TEST_CASE("frozen reference values at tau = 0.3 + 1.2i") {
  EisensteinContext ctx(kGen, 1e-9);
  CHECK(std::abs(ctx.e2star() - Complex{0.68489622627903397, -0.039871660547689542}) < 1e-10);
  CHECK(std::abs(ctx.e4() - Complex{2.0782544888764935, 0.26182635209628597}) < 1e-12);
  CHECK(std::abs(ctx.e6() - Complex{2.2108147079913037, -0.51271853358132507}) < 1e-12);
  CHECK(std::abs(ctx.g_ab(4, 1) - Complex{151.29656087657680, -45.383406972326258}) < 1e-9);
}

TEST_CASE("e2 in the iterated order matches the q-series completion") {
  for (Complex tau : {kI, k2I, kGen, kRho}) {
    EisensteinContext ctx(tau, 1e-9);
    Complex via_q = M_PI * M_PI / 3.0 * ctx.eisenstein_E(2);
    CHECK(std::abs(ctx.e2() - via_q) < 1e-10);
  }
}

TEST_CASE("lattice-sum audit path agrees with the q-series") {
  for (Complex tau : {kI, k2I, kGen, kRho}) {
    EisensteinContext ctx(tau, 1e-9);
    CHECK(std::abs(ctx.e_lattice(4) - ctx.e4()) < 1e-8);
    CHECK(std::abs(ctx.e_lattice(6) - ctx.e6()) < 1e-8);
  }
}

TEST_CASE("g10 equals +e2* (measured sign)") {
  for (Complex tau : {k2I, kGen, Complex{0.5, 1.3}}) {
    EisensteinContext ctx(tau, 1e-9);
    CHECK(std::abs(ctx.g_ab(1, 0) - ctx.e2star()) < 1e-10);
  }
}

TEST_CASE("special values at the CM points") {
  EisensteinContext at_i(kI, 1e-9);
  CHECK(std::abs(at_i.e6()) < 1e-12);          // e6(i) = 0
  CHECK(at_i.e4().real() > 3.0);               // e4(i) real and positive
  CHECK(std::abs(at_i.e4().imag()) < 1e-12);
  CHECK(std::abs(at_i.e2star()) < 1e-10);      // weight-2 form vanishes at i
  EisensteinContext at_rho(kRho, 1e-9);
  CHECK(std::abs(at_rho.e4()) < 1e-12);        // e4(rho) = 0
}

TEST_CASE("the five g-identities") {
  for (Complex tau : {kI, k2I, kGen}) {
    EisensteinContext ctx(tau, 1e-9);
    auto rep = ctx.check_relations();
    REQUIRE(rep.size() == 5);
    for (auto& r : rep) CHECK(r.residual < 1e-9);
  }
}

TEST_CASE("g is symmetric in its indices") {
  EisensteinContext ctx(kGen, 1e-9);
  CHECK(ctx.g_ab(2, 1) == ctx.g_ab(1, 2));
  CHECK(ctx.g_ab(4, 1) == ctx.g_ab(1, 4));
  CHECK(ctx.g_ab(3, 2) == ctx.g_ab(2, 3));
}

TEST_CASE("j values") {
  EisensteinContext at_i(kI, 1e-9);
  CHECK(std::abs(at_i.j_direct() - 1728.0) < 1e-6);
  EisensteinContext at_2i(k2I, 1e-9);
  CHECK(std::abs(at_2i.j_direct() / 287496.0 - 1.0) < 1e-6);
  EisensteinContext at_rho(kRho, 1e-9);
  CHECK(std::abs(at_rho.j_direct()) < 1e-9);
  EisensteinContext at_half(Complex{0.5, 1.3}, 1e-9);
  CHECK(std::abs(at_half.j_direct() - Complex{-2836.8981579461210, 0.0}) < 1e-6);
}

TEST_CASE("e_series dispatch") {
  EisensteinContext ctx(k2I, 1e-9);
  CHECK(ctx.e_series("e4") == ctx.e4());
  CHECK(ctx.e_series("e2star") == ctx.e2star());
  CHECK(std::abs(ctx.e_series("e8") - ctx.e_lattice(8)) < 1e-8);
  CHECK_THROWS_AS(ctx.e_series("e3"), std::invalid_argument);
}
