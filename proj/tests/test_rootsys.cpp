#include "doctest.h"

#include <set>

#include "glie/rootsys.hpp"

using namespace glie;

namespace {

// Closure of the simple roots under simple reflections, computed straight from
// the Cartan matrix: s_i(b) = b - <b, alpha_i^vee> alpha_i.
std::set<std::vector<int>> reflection_closure(const RootSystem& rs) {
  const auto& c = rs.cartan_matrix();
  const int n = rs.rank();
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> stack;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    seen.insert(e);
    stack.push_back(e);
  }
  while (!stack.empty()) {
    auto b = stack.back();
    stack.pop_back();
    for (int i = 0; i < n; ++i) {
      int k = 0;
      for (int j = 0; j < n; ++j) k += b[j] * c[j][i];
      auto r = b;
      r[i] -= k;
      if (seen.insert(r).second) stack.push_back(r);
    }
  }
  return seen;
}

std::size_t classical_count(CartanType t, int n) {
  switch (t) {
    case CartanType::A: return static_cast<std::size_t>(n * (n + 1));
    case CartanType::B:
    case CartanType::C: return static_cast<std::size_t>(2 * n * n);
    case CartanType::D: return static_cast<std::size_t>(2 * n * (n - 1));
    case CartanType::E: return n == 6 ? 72 : n == 7 ? 126 : 240;
    case CartanType::F: return 48;
    case CartanType::G: return 12;
  }
  return 0;
}

const std::vector<std::pair<CartanType, int>> kTypes = {
    {CartanType::A, 1}, {CartanType::A, 4}, {CartanType::B, 2}, {CartanType::B, 3}, {CartanType::B, 5},
    {CartanType::C, 3}, {CartanType::C, 4}, {CartanType::D, 4}, {CartanType::D, 6}, {CartanType::E, 6},
    {CartanType::E, 7}, {CartanType::E, 8}, {CartanType::F, 4}, {CartanType::G, 2}};

}  // namespace

TEST_CASE("root counts and closure under simple reflections") {
  for (auto [t, n] : kTypes) {
    const auto rs = RootSystem::build(t, n);
    CAPTURE(rs.name());
    CHECK(rs.roots().size() == classical_count(t, n));
    std::set<std::vector<int>> mine;
    for (const auto& r : rs.roots()) mine.insert(r.coords);
    CHECK(mine == reflection_closure(rs));
    for (const auto& r : rs.roots()) CHECK(rs.is_root(-r));
  }
}

TEST_CASE("build examples") {
  CHECK(RootSystem::build(CartanType::E, 8).roots().size() == 240);
  const auto a1 = RootSystem::build(CartanType::A, 1);
  REQUIRE(a1.roots().size() == 2);
  CHECK(a1.roots()[0].coords == std::vector<int>{1});
  CHECK(a1.roots()[1].coords == std::vector<int>{-1});
  CHECK(RootSystem::build(CartanType::G, 2).roots().size() == 12);
  CHECK_THROWS_AS(RootSystem::build(CartanType::E, 9), std::invalid_argument);
  CHECK_THROWS_AS(RootSystem::build(CartanType::D, 3), std::invalid_argument);
  CHECK_THROWS_AS(RootSystem::build(CartanType::G, 3), std::invalid_argument);
}

TEST_CASE("Weyl invariance of the form and long-root normalization") {
  for (auto [t, n] : kTypes) {
    const auto rs = RootSystem::build(t, n);
    CAPTURE(rs.name());
    Rational longest = 0;
    for (const auto& r : rs.roots()) longest = std::max(longest, rs.inner(r, r));
    CHECK(longest == 2);
    for (int i = 0; i < n; ++i) {
      const Root s = rs.simple_root(i);
      for (const auto& b : rs.roots()) {
        const Root sb = rs.reflect(b, s);
        CHECK(rs.is_root(sb));
        CHECK(rs.reflect(sb, s) == b);
        for (std::size_t k = 0; k < rs.roots().size(); k += 7) {
          const Root& g = rs.roots()[k];
          CHECK(rs.inner(sb, rs.reflect(g, s)) == rs.inner(b, g));
        }
      }
    }
  }
}

TEST_CASE("beta - 2 alpha is never a root for a long root alpha") {
  for (auto [t, n] : kTypes) {
    const auto rs = RootSystem::build(t, n);
    CAPTURE(rs.name());
    for (const auto& a : rs.roots()) {
      if (!rs.is_long(a)) continue;
      for (const auto& b : rs.roots()) {
        if (b == a || b == -a) continue;
        CHECK_FALSE(rs.is_root(b - a.scaled(2)));
      }
    }
  }
}

TEST_CASE("pairing with coroots") {
  const auto e8 = RootSystem::build(CartanType::E, 8);
  const Weight w8 = e8.fundamental_weight(7);
  CHECK(e8.coroot_pairing(w8, e8.simple_root(7)) == 1);
  for (int i = 0; i < 7; ++i) CHECK(e8.coroot_pairing(w8, e8.simple_root(i)) == 0);
  for (const auto& r : e8.roots()) CHECK(e8.coroot_pairing(r, r) == 2);
  // the highest root of E8 is omega_8
  CHECK(e8.to_weight(e8.highest_root()) == w8);
  CHECK(e8.pairing(w8, w8) == 2);
  const auto g2 = RootSystem::build(CartanType::G, 2);
  CHECK(g2.coroot_pairing(g2.to_weight(g2.simple_root(0)), g2.simple_root(0)) == 2);
  CHECK(g2.cartan_matrix() == std::vector<std::vector<int>>{{2, -1}, {-3, 2}});
}

TEST_CASE("reflections") {
  const auto e8 = RootSystem::build(CartanType::E, 8);
  const Root a8 = e8.simple_root(7);
  CHECK(e8.reflect(a8, a8) == -a8);
  const Weight w = e8.fundamental_weight(7);
  Weight expected = w;
  const Weight a8w = e8.to_weight(a8);
  for (int i = 0; i < 8; ++i) expected.coords[i] -= a8w.coords[i];
  CHECK(e8.reflect(w, a8) == expected);

  const auto g2 = RootSystem::build(CartanType::G, 2);
  CHECK(g2.reflect(g2.simple_root(1), g2.simple_root(0)) == (Root{{3, 1}}));
  CHECK(g2.is_long(g2.simple_root(1)));
  CHECK_FALSE(g2.is_long(g2.simple_root(0)));
  for (const auto& r : e8.roots()) CHECK(e8.is_long(r));
}

TEST_CASE("json export shape") {
  const auto g2 = RootSystem::build(CartanType::G, 2);
  const auto j = g2.to_json();
  CHECK(j["type"] == "G");
  CHECK(j["rank"] == 2);
  CHECK(j["roots"].size() == 12);
  CHECK(j["simple_roots"].size() == 2);
  CHECK(j["cartan_matrix"][1][0] == -3);
}
