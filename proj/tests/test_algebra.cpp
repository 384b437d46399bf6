#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "extell/algebra.hpp"

using namespace extell;

TEST_CASE("generator data") {
  CHECK(left_vertex(Gen::theta) == Vertex::O);
  CHECK(right_vertex(Gen::theta) == Vertex::L);
  CHECK(degree(Gen::theta) == 0);
  CHECK(left_vertex(Gen::eta) == Vertex::L);
  CHECK(right_vertex(Gen::eta) == Vertex::O);
  CHECK(degree(Gen::eta) == 1);
  CHECK(degree(Gen::xi) == 1);
  CHECK(degree(Gen::xi_L) == 1);
  // each vertex has exactly two outgoing and two incoming generators
  for (Vertex v : {Vertex::O, Vertex::L}) {
    int out = 0, in = 0;
    for (Gen g : kGenerators) {
      if (left_vertex(g) == v) ++out;
      if (right_vertex(g) == v) ++in;
    }
    CHECK(out == 2);
    CHECK(in == 2);
  }
}

TEST_CASE("product table") {
  CHECK(multiply(Gen::theta, Gen::eta) == Gen::xi);
  CHECK(multiply(Gen::eta, Gen::theta) == Gen::xi_L);
  CHECK(multiply(Gen::id_O, Gen::theta) == Gen::theta);
  CHECK(multiply(Gen::theta, Gen::id_L) == Gen::theta);
  CHECK(multiply(Gen::id_L, Gen::eta) == Gen::eta);
  CHECK(!multiply(Gen::xi, Gen::xi));
  CHECK(!multiply(Gen::eta, Gen::eta));  // vertex mismatch
  CHECK(!multiply(Gen::theta, Gen::xi_L));
  CHECK(!multiply(Gen::xi, Gen::theta));
}

TEST_CASE("product is associative and degree-additive") {
  auto all = {Gen::theta, Gen::eta, Gen::xi, Gen::xi_L, Gen::id_O, Gen::id_L};
  for (Gen a : all)
    for (Gen b : all) {
      if (auto ab = multiply(a, b)) CHECK(degree(*ab) == degree(a) + degree(b));
      for (Gen c : all) {
        auto ab = multiply(a, b);
        auto bc = multiply(b, c);
        auto lhs = ab ? multiply(*ab, c) : std::nullopt;
        auto rhs = bc ? multiply(a, *bc) : std::nullopt;
        CHECK(lhs == rhs);
      }
    }
}

TEST_CASE("word basics") {
  Word w({Gen::eta, Gen::xi, Gen::theta});
  CHECK(w.composable());
  CHECK(w.internal_degree() == 2);
  CHECK(w.left() == Vertex::L);
  CHECK(w.right() == Vertex::L);
  CHECK(w.str() == "eta.xi.theta");
  CHECK(word_from_string("eta.xi.theta") == w);
  CHECK(word_from_string("xiL.eta") == Word({Gen::xi_L, Gen::eta}));
}

TEST_CASE("word parsing rejects garbage") {
  CHECK(!word_from_string(""));
  CHECK(!word_from_string("zeta"));
  CHECK(!word_from_string("theta.theta"));  // not composable
}

TEST_CASE("enumerate_words canonical order and examples") {
  auto ws = enumerate_words(1, 0);
  REQUIRE(ws.size() == 1);
  CHECK(ws[0] == Word({Gen::theta}));

  // exhaustive oracle over letter pairs
  auto brute = [](int m) {
    std::set<std::string> out;
    for (Gen a : kGenerators)
      for (Gen b : kGenerators) {
        Word w({a, b});
        if (w.composable() && w.internal_degree() == m) out.insert(w.str());
      }
    return out;
  };
  for (int m = 0; m <= 2; ++m) {
    std::set<std::string> got;
    for (auto& w : enumerate_words(2, m)) got.insert(w.str());
    CHECK(got == brute(m));
  }
  CHECK(enumerate_words(2, 2).size() == 4);  // xi.xi, xi_L.xi_L, xi_L.eta, eta.xi
  CHECK(enumerate_words(2, 1).size() == 4);  // theta.eta, theta.xi_L, eta.theta, xi.theta

  // canonical order is lexicographic with theta < eta < xi < xi_L
  auto all2 = enumerate_words(2, 1);
  CHECK(all2[0] == Word({Gen::theta, Gen::eta}));
  CHECK(all2[1] == Word({Gen::theta, Gen::xi_L}));
  CHECK(all2[2] == Word({Gen::eta, Gen::theta}));
  CHECK(all2[3] == Word({Gen::xi, Gen::theta}));
}

TEST_CASE("word counts: sum over degrees is 2^(n+1)") {
  for (int n = 1; n <= 10; ++n) {
    std::size_t total = 0;
    for (int m = 0; m <= n; ++m) total += enumerate_words(n, m).size();
    CHECK(total == (std::size_t{1} << (n + 1)));
    CHECK(enumerate_all_words(n).size() == (std::size_t{1} << (n + 1)));
  }
}

TEST_CASE("coefficient bimodules") {
  const auto& B = CoefficientBimodule::named("B");
  CHECK(B.dim() == 6);
  // left action of theta on eta is xi
  int eta_idx = B.index_of(Gen::eta);
  auto act = B.action(CoefficientBimodule::Side::left, Gen::theta, eta_idx);
  REQUIRE(act);
  CHECK(B.symbol(act.index) == Gen::xi);

  const auto& ideal = CoefficientBimodule::named("ideal");
  // every B_+ action on (xi_L, xi) is zero
  for (Gen g : kGenerators)
    for (int y = 0; y < ideal.dim(); ++y) {
      CHECK(!ideal.action(CoefficientBimodule::Side::left, g, y));
      CHECK(!ideal.action(CoefficientBimodule::Side::right, g, y));
    }

  // in B0 = B/B1 the image of theta*eta = xi dies
  const auto& B0 = CoefficientBimodule::named("B0");
  CHECK(B0.dim() == 3);
  CHECK(B0.index_of(Gen::eta) == -1);
  int ido = B0.index_of(Gen::id_O);
  CHECK(!B0.action(CoefficientBimodule::Side::left, Gen::eta, ido));
  // but id_O . theta = theta survives as a right action
  auto r = B0.action(CoefficientBimodule::Side::right, Gen::theta, ido);
  REQUIRE(r);
  CHECK(B0.symbol(r.index) == Gen::theta);

  CHECK_THROWS_AS(CoefficientBimodule::named("nope"), std::invalid_argument);
}

TEST_CASE("bimodule actions are associative") {
  for (const auto& name : CoefficientBimodule::known_names()) {
    const auto& M = CoefficientBimodule::named(name);
    for (Gen g1 : kGenerators)
      for (Gen g2 : kGenerators)
        for (int y = 0; y < M.dim(); ++y) {
          // (g1 g2) . y == g1 . (g2 . y); products of generators never hit R
          auto p = multiply(g1, g2);
          int lhs = -1;
          if (p) {
            auto a = M.action(CoefficientBimodule::Side::left, *p, y);
            lhs = a ? a.index : -1;
          }
          int rhs = -1;
          if (auto a2 = M.action(CoefficientBimodule::Side::left, g2, y)) {
            auto a1 = M.action(CoefficientBimodule::Side::left, g1, a2.index);
            rhs = a1 ? a1.index : -1;
          }
          CHECK(lhs == rhs);
          // (g1 . y) . g2 == g1 . (y . g2)
          int mixed1 = -1, mixed2 = -1;
          if (auto a = M.action(CoefficientBimodule::Side::left, g1, y))
            if (auto b = M.action(CoefficientBimodule::Side::right, g2, a.index))
              mixed1 = b.index;
          if (auto a = M.action(CoefficientBimodule::Side::right, g2, y))
            if (auto b = M.action(CoefficientBimodule::Side::left, g1, a.index))
              mixed2 = b.index;
          CHECK(mixed1 == mixed2);
        }
  }
}
