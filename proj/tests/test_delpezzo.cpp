#include <doctest.h>

#include <map>

#include "glie/delpezzo.hpp"

using namespace glie;

namespace {

const Dp1Lattice& dp1() {
  static const Dp1Lattice lat;
  return lat;
}

const CharacterLattice& chars() {
  static const CharacterLattice tl;
  return tl;
}

// (beta, gamma) straight from the E8 Cartan matrix, simply laced so C is the Gram matrix
int cartan_form(const Root& a, const Root& b) {
  const auto& c = dp1().e8().cartan_matrix();
  int s = 0;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) s += a.coords[i] * c[i][j] * b.coords[j];
  return s;
}

}  // namespace

TEST_CASE("degree one lines and their intersection numbers") {
  const auto lines = dp1_lines(dp1());
  REQUIRE(lines.size() == 240);
  std::map<int, std::size_t> oracle;
  for (const auto& a : lines) {
    CHECK(dp1().pairing(a.cls, a.cls) == -1);
    CHECK(dp1().degree(a.cls) == 1);
    for (const auto& b : lines) ++oracle[1 - cartan_form(a.root, b.root)];
  }
  CHECK(dp1_intersection_histogram(dp1()) == oracle);
  // each line: itself, and 56, 126, 56, 1 others with intersection 0, 1, 2, 3
  const std::map<int, std::size_t> per_line{{-1, 1}, {0, 56}, {1, 126}, {2, 56}, {3, 1}};
  for (const auto& [v, n] : per_line) CHECK(oracle[v] == 240 * n);

  const auto rep = check_dp1_lines(dp1());
  CHECK_MESSAGE(rep.pass, rep.to_json().dump());
}

TEST_CASE("character lattice basis, parity and form") {
  const auto& tl = chars();
  REQUIRE(tl.basis().size() == 8);
  CHECK(tl.contains(tl.chi0()));
  Dp2Class odd{std::vector<int>(7, 0), 0};
  odd.lambda[6] = 1;
  CHECK_FALSE(tl.contains(odd));
  CHECK_THROWS_AS(tl.coordinates(odd), std::invalid_argument);
  CHECK_THROWS_AS(pullback(dp1(), tl, odd), std::invalid_argument);
  // the index two sublattice of P(E7) + Z is odd unimodular of signature (1, 7)
  const auto g = tl.gram();
  RationalMatrix m(8, 8);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) m(i, j) = g[i][j];
  CHECK(determinant(m) == -1);
  CHECK(tl.pairing(tl.chi0(), tl.chi0()) == 2);
  for (int i = 0; i < 7; ++i) CHECK(tl.pairing(tl.chi0(), tl.basis()[i]) == 0);
  const auto coords = tl.coordinates(tl.chi0());
  CHECK(coords.back() == 2);
}

TEST_CASE("degree two lines, bitangent pairs and conics") {
  const auto& tl = chars();
  const auto lines = dp2_lines(dp1(), tl);
  REQUIRE(lines.size() == 56);
  for (const auto& mu : lines) {
    std::map<Rational, std::size_t> row;
    for (const auto& nu : lines) ++row[tl.pairing(mu.cls, nu.cls)];
    CHECK(row[-1] == 1);
    CHECK(row[0] == 27);
    CHECK(row[1] == 27);
    CHECK(row[2] == 1);
    const Dp2Class partner = tl.add(tl.chi0(), tl.scaled(mu.cls, -1));
    CHECK(tl.pairing(mu.cls, partner) == 2);
  }
  const auto conics = dp2_conics(dp1(), tl);
  REQUIRE(conics.size() == 126);
  // a conic bundle on a surface with Euler number 10 has 10 - 4 singular fibres
  for (const auto& c : conics) CHECK(c.splittings.size() == 6);

  const auto rep = check_dp2_lines(dp1(), tl);
  CHECK_MESSAGE(rep.pass, rep.to_json().dump());
  CHECK(rep.details["bitangent_pairs"] == 28);
}

TEST_CASE("blow-down dictionary") {
  const auto& tl = chars();
  const auto dict = blowdown_dictionary(dp1(), tl);
  REQUIRE(dict.size() == 240);
  std::map<std::string, std::size_t> kinds;
  for (const auto& d : dict) ++kinds[d.kind];
  CHECK(kinds == std::map<std::string, std::size_t>{
                     {"exceptional", 1}, {"line", 56}, {"conic", 126}, {"cubic", 56}, {"quartic", 1}});

  // the exceptional curve is the zero set of the coordinate on v = e_theta
  CHECK(dict.front().kind == "exceptional");
  CHECK(dict.front().coordinate == dp1().e8().highest_root());
  CHECK(dict.front().dp1 == dp1().exceptional());

  for (const auto& d : dict) {
    if (d.kind != "cubic") continue;
    CHECK(tl.pairing(d.dp2, tl.chi0()) == 3);
    CHECK(tl.pairing(d.dp2, d.dp2) == 3);
    CHECK(d.multiplicity == 2);
  }
  const auto rep = check_blowdown_dictionary(dp1(), tl);
  CHECK_MESSAGE(rep.pass, rep.to_json().dump());
  CHECK(rep.details["total"] == 240);
}

TEST_CASE("pullback, exact sequences and the orthogonal root determinant") {
  const auto& tl = chars();
  const auto rep = type_map_check(dp1(), tl);
  CHECK_MESSAGE(rep.pass, rep.to_json().dump());
  CHECK(rep.details["rank"] == 8);
  CHECK(rep.details["det_orthogonal_set"] == "-128");
  CHECK(rep.details["orthogonal_set_unimodular"] == false);

  // sigma^* of a line of X' is the line of X with the same label
  for (const auto& mu : dp2_lines(dp1(), tl)) CHECK(pullback(dp1(), tl, mu.cls) == dp1().line(mu.root));
}

TEST_CASE("strict transform of a tangent line has degree zero") {
  const auto rep = tangent_line_degree_check(dp1(), chars());
  CHECK_MESSAGE(rep.pass, rep.to_json().dump());
  CHECK(rep.details["C.-K"] == 0);
  CHECK(rep.details["C^2"] == -2);
}

TEST_CASE("Weyl words act as automorphisms of the line graph") {
  const RootSystem& rs = dp1().e8();
  for (const Root& r : rs.roots()) CHECK(weyl_apply(rs, word_to_highest(rs, r), r) == rs.highest_root());
  const auto rep = weyl_transitivity_check(dp1(), 10, 7);
  CHECK_MESSAGE(rep.pass, rep.to_json().dump());
}

TEST_CASE("GraphViz export") {
  const auto lines = dp1_lines(dp1());
  std::vector<std::string> labels;
  std::vector<std::vector<int>> inter(lines.size(), std::vector<int>(lines.size()));
  for (std::size_t i = 0; i < lines.size(); ++i) {
    labels.push_back(root_label(lines[i].root));
    for (std::size_t j = 0; j < lines.size(); ++j) inter[i][j] = dp1().pairing(lines[i].cls, lines[j].cls);
  }
  const std::string dot = intersection_graph_dot("dp1", labels, inter, 3);
  CHECK(dot.rfind("graph \"dp1\" {", 0) == 0);
  // l_beta meets only l_{-beta} three times
  std::size_t edges = 0;
  for (std::size_t pos = dot.find(" -- "); pos != std::string::npos; pos = dot.find(" -- ", pos + 1)) ++edges;
  CHECK(edges == 120);
  CHECK(root_label(dp1().e8().highest_root()) == "23465432");
  CHECK(root_label(-dp1().e8().highest_root()) == "-23465432");
}
