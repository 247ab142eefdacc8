#include "glie/delpezzo.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace glie {

namespace {

constexpr int kMarked = 7;  // alpha_8, 0-based

int to_int(const Rational& r) {
  if (r.get_den() != 1) throw std::logic_error("expected an integer, got " + r.get_str());
  return static_cast<int>(r.get_num().get_si());
}

int grade(const Root& r) { return r.coords[kMarked]; }

}  // namespace

std::string root_label(const Root& r) {
  std::string s = r.is_positive() ? "" : "-";
  for (int c : r.coords) s += std::to_string(c < 0 ? -c : c);
  return s;
}

// ---------------------------------------------------------------------------
// degree 1

Dp1Lattice::Dp1Lattice() : e8_(RootSystem::build(CartanType::E, 8)) {}

int Dp1Lattice::pairing(const Dp1Class& a, const Dp1Class& b) const {
  return a.k * b.k - to_int(e8_.inner(a.q, b.q));
}

Dp1Class Dp1Lattice::add(const Dp1Class& a, const Dp1Class& b) const { return {a.k + b.k, a.q + b.q}; }

Dp1Class Dp1Lattice::scaled(const Dp1Class& a, int s) const { return {a.k * s, a.q.scaled(s)}; }

nlohmann::json Dp1Lattice::to_json(const Dp1Class& c) const { return {{"K", c.k}, {"q", c.q.coords}}; }

std::vector<Dp1Line> dp1_lines(const Dp1Lattice& lat) {
  std::vector<Dp1Line> out;
  for (const Root& b : lat.e8().roots()) out.push_back({b, lat.line(b)});
  return out;
}

std::map<int, std::size_t> dp1_intersection_histogram(const Dp1Lattice& lat) {
  const auto lines = dp1_lines(lat);
  std::map<int, std::size_t> h;
  for (const auto& a : lines)
    for (const auto& b : lines) ++h[lat.pairing(a.cls, b.cls)];
  return h;
}

// ---------------------------------------------------------------------------
// degree 2

CharacterLattice::CharacterLattice() : e7_(RootSystem::build(CartanType::E, 7)) {
  for (int i = 0; i < 7; ++i) {
    Dp2Class b{std::vector<int>(7), 0};
    const Weight w = e7_.to_weight(e7_.simple_root(i));
    for (int j = 0; j < 7; ++j) b.lambda[j] = to_int(w.coords[j]);
    basis_.push_back(b);
  }
  Dp2Class top{std::vector<int>(7, 0), 1};
  top.lambda[6] = 1;
  basis_.push_back(top);
}

namespace {

Weight as_weight(const Dp2Class& c) {
  Weight w{std::vector<Rational>(c.lambda.size())};
  for (std::size_t i = 0; i < c.lambda.size(); ++i) w.coords[i] = c.lambda[i];
  return w;
}

// root coordinates of lambda - n omega_7
std::vector<Rational> reduced_root_coords(const RootSystem& e7, const Dp2Class& c) {
  if (c.lambda.size() != 7) throw std::invalid_argument("character: expected 7 weight coordinates");
  Weight w = as_weight(c);
  w.coords[6] -= c.n;
  return e7.weight_in_root_basis(w);
}

}  // namespace

bool CharacterLattice::contains(const Dp2Class& c) const {
  const auto r = reduced_root_coords(e7_, c);
  return std::all_of(r.begin(), r.end(), [](const Rational& x) { return x.get_den() == 1; });
}

std::vector<Integer> CharacterLattice::coordinates(const Dp2Class& c) const {
  const auto r = reduced_root_coords(e7_, c);
  std::vector<Integer> out;
  for (const Rational& x : r) {
    if (x.get_den() != 1) throw std::invalid_argument("character violates the parity condition");
    out.push_back(x.get_num());
  }
  out.push_back(c.n);
  return out;
}

Rational CharacterLattice::pairing(const Dp2Class& a, const Dp2Class& b) const {
  Rational half(a.n * b.n, 2);
  half.canonicalize();
  return half - e7_.pairing(as_weight(a), as_weight(b));
}

Dp2Class CharacterLattice::add(const Dp2Class& a, const Dp2Class& b) const {
  Dp2Class c = a;
  for (std::size_t i = 0; i < c.lambda.size(); ++i) c.lambda[i] += b.lambda[i];
  c.n += b.n;
  return c;
}

Dp2Class CharacterLattice::scaled(const Dp2Class& a, int s) const {
  Dp2Class c = a;
  for (int& x : c.lambda) x *= s;
  c.n *= s;
  return c;
}

Dp2Class CharacterLattice::weight_of(const RootSystem& e8, const Root& beta) const {
  Dp2Class c{std::vector<int>(7), grade(beta) + 2};
  for (int i = 0; i < 7; ++i) c.lambda[i] = e8.coroot_pairing(beta, e8.simple_root(i));
  return c;
}

IntegerMatrix CharacterLattice::root_inclusion() const {
  IntegerMatrix m(8, std::vector<Integer>(7));
  for (int i = 0; i < 7; ++i) m[i][i] = 1;
  return m;
}

IntegerMatrix CharacterLattice::scalar_degree() const {
  IntegerMatrix m(1, std::vector<Integer>(8));
  for (int j = 0; j < 8; ++j) m[0][j] = basis_[j].n;
  return m;
}

IntegerMatrix CharacterLattice::chi0_inclusion() const {
  const auto c = coordinates(chi0());
  IntegerMatrix m(8, std::vector<Integer>(1));
  for (int i = 0; i < 8; ++i) m[i][0] = c[i];
  return m;
}

IntegerMatrix CharacterLattice::weight_restriction() const {
  IntegerMatrix m(7, std::vector<Integer>(8));
  for (int j = 0; j < 8; ++j)
    for (int i = 0; i < 7; ++i) m[i][j] = basis_[j].lambda[i];
  return m;
}

IntegerMatrix CharacterLattice::gram() const {
  IntegerMatrix m(8, std::vector<Integer>(8));
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) m[i][j] = to_int(pairing(basis_[i], basis_[j]));
  return m;
}

nlohmann::json CharacterLattice::to_json(const Dp2Class& c) const { return {{"lambda", c.lambda}, {"n", c.n}}; }

std::vector<Dp2Line> dp2_lines(const Dp1Lattice& lat, const CharacterLattice& tl) {
  std::vector<Dp2Line> out;
  for (const Root& b : lat.e8().roots())
    if (grade(b) == -1) out.push_back({b, tl.weight_of(lat.e8(), b)});
  return out;
}

std::vector<ConicClass> dp2_conics(const Dp1Lattice& lat, const CharacterLattice& tl) {
  const auto lines = dp2_lines(lat, tl);
  std::vector<ConicClass> out;
  for (const Root& b : lat.e8().roots()) {
    if (grade(b) != 0) continue;
    ConicClass c{b, tl.weight_of(lat.e8(), b), {}};
    for (std::size_t i = 0; i < lines.size(); ++i)
      for (std::size_t j = i + 1; j < lines.size(); ++j)
        if (tl.add(lines[i].cls, lines[j].cls) == c.cls && tl.pairing(lines[i].cls, lines[j].cls) == 1)
          c.splittings.emplace_back(i, j);
    out.push_back(std::move(c));
  }
  return out;
}

Dp1Class pullback(const Dp1Lattice& lat, const CharacterLattice& tl, const Dp2Class& c) {
  if (!tl.contains(c)) throw std::invalid_argument("pullback: not a character of T'");
  // gamma in Q(E8) with alpha_8-coefficient -n and the given restriction to
  // the E7 coroots; then sigma^* c = -n K + gamma
  const auto& cm = lat.e8().cartan_matrix();
  RationalMatrix a(7, 7);
  RationalVector rhs(7);
  for (int i = 0; i < 7; ++i) {
    for (int j = 0; j < 7; ++j) a(i, j) = cm[j][i];
    rhs[i] = c.lambda[i] + c.n * cm[kMarked][i];
  }
  const auto sol = solve(a, rhs);
  if (!sol) throw std::logic_error("pullback: singular E7 Cartan matrix");
  Root gamma{std::vector<int>(8)};
  for (int j = 0; j < 7; ++j) gamma.coords[j] = to_int((*sol)[j]);
  gamma.coords[kMarked] = -c.n;
  return {-c.n, gamma};
}

// ---------------------------------------------------------------------------
// blow-down dictionary

std::vector<DictionaryEntry> blowdown_dictionary(const Dp1Lattice& lat, const CharacterLattice& tl) {
  static const char* kinds[] = {"exceptional", "line", "conic", "cubic", "quartic"};
  const Dp1Class e = lat.exceptional();
  std::vector<DictionaryEntry> out;
  for (const Root& b : lat.e8().roots()) {
    DictionaryEntry d;
    d.coordinate = b;
    d.degree = 2 - grade(b);
    d.label = -b;
    d.dp1 = lat.line(d.label);
    d.dp2 = tl.weight_of(lat.e8(), d.label);
    d.multiplicity = lat.pairing(d.dp1, e);
    d.kind = kinds[d.degree];
    out.push_back(std::move(d));
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const DictionaryEntry& x, const DictionaryEntry& y) { return x.degree < y.degree; });
  return out;
}

nlohmann::json dictionary_json(const Dp1Lattice& lat, const CharacterLattice& tl,
                               const std::vector<DictionaryEntry>& dict) {
  nlohmann::json entries = nlohmann::json::array();
  std::map<std::string, std::size_t> counts;
  for (const auto& d : dict) {
    ++counts[d.kind];
    entries.push_back({{"coordinate", root_label(d.coordinate)},
                       {"degree", d.degree},
                       {"label", root_label(d.label)},
                       {"kind", d.kind},
                       {"multiplicity", d.multiplicity},
                       {"dp1", lat.to_json(d.dp1)},
                       {"dp2", tl.to_json(d.dp2)}});
  }
  return {{"entries", entries}, {"counts", counts}, {"exceptional", lat.to_json(lat.exceptional())}};
}

// ---------------------------------------------------------------------------
// checks

CheckReport check_dp1_lines(const Dp1Lattice& lat) {
  CheckReport rep{"dp1_lines", "E8"};
  const auto lines = dp1_lines(lat);
  const RootSystem& rs = lat.e8();
  std::set<std::vector<int>> seen;
  std::size_t integral = 0;
  for (const auto& a : lines) {
    if (!seen.insert(a.cls.q.coords).second) rep.fail({{"stage", "distinct"}, {"root", root_label(a.root)}});
    if (lat.pairing(a.cls, a.cls) != -1 || lat.degree(a.cls) != 1)
      rep.fail({{"stage", "exceptional class"}, {"root", root_label(a.root)}});
    for (const auto& b : lines) {
      const Rational expected = 1 - rs.inner(a.root, b.root);
      if (expected.get_den() == 1) ++integral;
      if (Rational(lat.pairing(a.cls, b.cls)) != expected)
        rep.fail({{"stage", "1 - (beta, gamma)"}, {"beta", root_label(a.root)}, {"gamma", root_label(b.root)}});
    }
  }
  if (lines.size() != 240) rep.fail({{"stage", "count"}, {"got", lines.size()}});
  if (integral != lines.size() * lines.size()) rep.fail({{"stage", "integrality"}});
  rep.details["lines"] = lines.size();
  rep.details["pairs"] = lines.size() * lines.size();
  nlohmann::json hist = nlohmann::json::object();
  for (const auto& [v, n] : dp1_intersection_histogram(lat)) hist[std::to_string(v)] = n;
  rep.details["histogram"] = hist;
  return rep;
}

CheckReport check_dp2_lines(const Dp1Lattice& lat, const CharacterLattice& tl) {
  CheckReport rep{"dp2_lines", "E7"};
  const RootSystem& e8 = lat.e8();
  const Root theta = e8.highest_root();
  const auto lines = dp2_lines(lat, tl);
  const Dp2Class chi0 = tl.chi0();
  std::set<Dp2Class> classes;
  for (const auto& l : lines) classes.insert(l.cls);
  if (lines.size() != 56 || classes.size() != 56) rep.fail({{"stage", "count"}, {"got", classes.size()}});

  std::map<std::string, std::size_t> hist;
  std::size_t bitangent_pairs = 0;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto& mu = lines[i];
    const std::string name = root_label(mu.root);
    if (!tl.contains(mu.cls)) rep.fail({{"stage", "character"}, {"mu", name}});
    if (tl.pairing(mu.cls, mu.cls) != -1 || tl.pairing(mu.cls, chi0) != 1)
      rep.fail({{"stage", "exceptional class"}, {"mu", name}});
    const Dp2Class partner = tl.add(chi0, tl.scaled(mu.cls, -1));
    if (!classes.count(partner)) rep.fail({{"stage", "chi0 - mu is a weight"}, {"mu", name}});
    if (tl.pairing(mu.cls, partner) != 2) rep.fail({{"stage", "(l_mu . l_{chi0-mu}) = 2"}, {"mu", name}});
    std::size_t meeting_twice = 0;
    for (std::size_t j = 0; j < lines.size(); ++j) {
      const auto& nu = lines[j];
      // (mu, nu) on E7 from E8: drop the theta component of both roots
      const Rational mn = e8.inner(mu.root, nu.root) - e8.inner(mu.root, theta) * e8.inner(nu.root, theta) / 2;
      const Rational got = tl.pairing(mu.cls, nu.cls);
      if (got != Rational(1, 2) - mn) rep.fail({{"stage", "1/2 - (mu, nu)"}, {"mu", name}, {"nu", root_label(nu.root)}});
      if (got.get_den() != 1) rep.fail({{"stage", "integrality"}, {"mu", name}, {"nu", root_label(nu.root)}});
      // same number upstairs, since these lines miss the blown-up point
      if (got != lat.pairing(pullback(lat, tl, mu.cls), pullback(lat, tl, nu.cls)))
        rep.fail({{"stage", "pullback"}, {"mu", name}, {"nu", root_label(nu.root)}});
      ++hist[got.get_str()];
      if (got == 2) {
        ++meeting_twice;
        if (!(nu.cls == partner)) rep.fail({{"stage", "only partner meets twice"}, {"mu", name}});
        if (i < j) ++bitangent_pairs;
      }
    }
    if (meeting_twice != 1) rep.fail({{"stage", "only partner meets twice"}, {"mu", name}});
  }
  if (bitangent_pairs != 28) rep.fail({{"stage", "28 bitangent pairs"}, {"got", bitangent_pairs}});

  if (tl.pairing(chi0, chi0) != 2) rep.fail({{"stage", "chi0^2 = 2"}});
  for (int i = 0; i < 7; ++i)
    if (tl.pairing(chi0, tl.basis()[i]) != 0) rep.fail({{"stage", "chi0 orthogonal to Q(E7)"}, {"i", i + 1}});

  const auto conics = dp2_conics(lat, tl);
  std::set<std::size_t> splitting_counts;
  for (const auto& c : conics) {
    if (tl.pairing(c.cls, c.cls) != 0 || tl.pairing(c.cls, chi0) != 2)
      rep.fail({{"stage", "conic class"}, {"xi", root_label(c.root)}});
    if (c.splittings.empty()) rep.fail({{"stage", "conic splits into two lines"}, {"xi", root_label(c.root)}});
    splitting_counts.insert(c.splittings.size());
  }
  if (conics.size() != 126) rep.fail({{"stage", "conic count"}, {"got", conics.size()}});

  rep.details["lines"] = lines.size();
  rep.details["histogram"] = hist;
  rep.details["bitangent_pairs"] = bitangent_pairs;
  rep.details["conics"] = conics.size();
  rep.details["splittings_per_conic"] = splitting_counts;
  rep.details["chi0_square"] = tl.pairing(chi0, chi0).get_str();
  return rep;
}

CheckReport check_blowdown_dictionary(const Dp1Lattice& lat, const CharacterLattice& tl) {
  CheckReport rep{"blowdown_dictionary", "E8/E7"};
  const auto dict = blowdown_dictionary(lat, tl);
  const Dp1Class e = lat.exceptional();
  const Dp2Class chi0 = tl.chi0();
  std::set<Dp2Class> line_classes;
  for (const auto& l : dp2_lines(lat, tl)) line_classes.insert(l.cls);
  std::set<Dp2Class> conic_classes;
  for (const auto& c : dp2_conics(lat, tl)) conic_classes.insert(c.cls);

  std::vector<std::size_t> by_degree(5);
  for (const auto& d : dict) {
    ++by_degree[d.degree];
    const std::string name = root_label(d.coordinate);
    if (lat.pairing(d.dp1, d.dp1) != -1 || lat.degree(d.dp1) != 1) rep.fail({{"stage", "line on X"}, {"coordinate", name}});
    if (tl.degree(d.dp2) != d.degree || tl.pairing(d.dp2, chi0) != d.degree)
      rep.fail({{"stage", "degree on X'"}, {"coordinate", name}});
    if (d.multiplicity != d.degree - 1) rep.fail({{"stage", "multiplicity"}, {"coordinate", name}});
    if (pullback(lat, tl, d.dp2) != lat.add(d.dp1, lat.scaled(e, d.multiplicity)))
      rep.fail({{"stage", "sigma^* C = l + m E"}, {"coordinate", name}});
    if (tl.pairing(d.dp2, d.dp2) != d.multiplicity * d.multiplicity - 1)
      rep.fail({{"stage", "self-intersection"}, {"coordinate", name}});
    bool shape = true;
    switch (d.degree) {
      case 0: shape = d.dp1 == e && d.dp2 == tl.scaled(chi0, 0); break;
      case 1: shape = line_classes.count(d.dp2) > 0; break;
      case 2: shape = conic_classes.count(d.dp2) > 0; break;
      case 3: shape = line_classes.count(tl.add(d.dp2, tl.scaled(chi0, -1))) > 0; break;
      case 4: shape = d.dp2 == tl.scaled(chi0, 2); break;
    }
    if (!shape) rep.fail({{"stage", "class shape"}, {"coordinate", name}, {"kind", d.kind}});
  }
  const std::vector<std::size_t> expected{1, 56, 126, 56, 1};
  if (by_degree != expected) rep.fail({{"stage", "graded count"}, {"got", by_degree}});
  std::size_t total = 0;
  for (std::size_t n : by_degree) total += n;
  if (total != 240) rep.fail({{"stage", "total"}, {"got", total}});
  rep.details["counts_by_degree"] = by_degree;
  rep.details["total"] = total;
  return rep;
}

namespace {

// Greedy set of k mutually orthogonal roots.
std::vector<Root> orthogonal_roots(const RootSystem& rs, std::size_t k) {
  std::vector<Root> out;
  for (std::size_t i = rs.num_positive(); i-- > 0 && out.size() < k;) {
    const Root& r = rs.roots()[i];
    if (std::all_of(out.begin(), out.end(), [&](const Root& s) { return rs.inner(r, s) == 0; })) out.push_back(r);
  }
  return out;
}

Rational gram_det(const Dp1Lattice& lat, const std::vector<Dp1Class>& cs) {
  RationalMatrix m(cs.size(), cs.size());
  for (std::size_t i = 0; i < cs.size(); ++i)
    for (std::size_t j = 0; j < cs.size(); ++j) m(i, j) = lat.pairing(cs[i], cs[j]);
  return determinant(m);
}

IntegerMatrix product(const IntegerMatrix& a, const IntegerMatrix& b) {
  IntegerMatrix c(a.size(), std::vector<Integer>(b.front().size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < b.front().size(); ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

bool is_zero(const IntegerMatrix& m) {
  for (const auto& row : m)
    for (const auto& x : row)
      if (x != 0) return false;
  return true;
}

// all invariant factors equal to one, and as many as the smaller dimension
bool saturated(const IntegerMatrix& m) {
  const auto inv = smith_invariants(m);
  return inv.size() == std::min(m.size(), m.front().size()) &&
         std::all_of(inv.begin(), inv.end(), [](const Integer& d) { return d == 1; });
}

RationalMatrix to_rational(const IntegerMatrix& m) {
  RationalMatrix r(m.size(), m.front().size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) r(i, j) = m[i][j];
  return r;
}

}  // namespace

CheckReport type_map_check(const Dp1Lattice& lat, const CharacterLattice& tl) {
  CheckReport rep{"type_map", "E8/E7"};
  const RootSystem& e8 = lat.e8();

  // the character lattice and its exact sequences
  const IntegerMatrix gram = tl.gram();
  const Rational det = determinant(to_rational(gram));
  if (rank(to_rational(gram)) != 8) rep.fail({{"stage", "rank 8"}});
  if (det != 1 && det != -1) rep.fail({{"stage", "unimodular"}, {"det", det.get_str()}});
  const auto i1 = tl.root_inclusion(), p1 = tl.scalar_degree();
  const auto i2 = tl.chi0_inclusion(), p2 = tl.weight_restriction();
  if (!is_zero(product(p1, i1))) rep.fail({{"stage", "Q(E7) -> T' -> Z composes to zero"}});
  if (!is_zero(product(p2, i2))) rep.fail({{"stage", "Z chi0 -> T' -> P(E7) composes to zero"}});
  // injective with saturated image, surjective, and kernel rank = image rank
  const std::size_t r1 = rank(to_rational(i1)), r2 = rank(to_rational(i2));
  if (!saturated(i1) || !saturated(i2)) rep.fail({{"stage", "saturated inclusions"}});
  if (!saturated(p1) || !saturated(p2)) rep.fail({{"stage", "surjective projections"}});
  if (kernel(to_rational(p1)).size() != r1 || kernel(to_rational(p2)).size() != r2)
    rep.fail({{"stage", "exact in the middle"}});
  if (r1 + rank(to_rational(p1)) != 8 || r2 + rank(to_rational(p2)) != 8) rep.fail({{"stage", "ranks 7 + 1"}});
  rep.details["rank"] = rank(to_rational(gram));
  rep.details["ranks"] = {{"Q(E7)", r1}, {"Z", rank(to_rational(p1))}, {"Z chi0", r2}, {"P(E7)", rank(to_rational(p2))}};
  rep.details["det"] = det.get_str();

  // beta -> -K + beta: injective, and minus the root form on differences with -K
  std::set<std::vector<int>> images;
  for (const Root& b : e8.roots()) {
    images.insert(lat.line(b).q.coords);
    for (const Root& c : e8.roots()) {
      const Dp1Class x = lat.add(lat.line(b), lat.canonical()), y = lat.add(lat.line(c), lat.canonical());
      if (Rational(lat.pairing(x, y)) != -e8.inner(b, c))
        rep.fail({{"stage", "isometry up to sign"}, {"beta", root_label(b)}, {"gamma", root_label(c)}});
    }
  }
  if (images.size() != e8.roots().size()) rep.fail({{"stage", "injective on roots"}});

  // sigma^*: an isometry onto the complement of E, completing to a basis
  const Dp1Class e = lat.exceptional();
  std::vector<Dp1Class> pulled;
  for (const auto& b : tl.basis()) {
    const Dp1Class p = pullback(lat, tl, b);
    if (lat.pairing(p, e) != 0) rep.fail({{"stage", "orthogonal to E"}, {"basis", tl.to_json(b)}});
    if (lat.degree(p) != tl.degree(b)) rep.fail({{"stage", "degree preserved"}, {"basis", tl.to_json(b)}});
    pulled.push_back(p);
  }
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j)
      if (gram[i][j] != lat.pairing(pulled[i], pulled[j])) rep.fail({{"stage", "pullback isometry"}, {"i", i}, {"j", j}});
  pulled.push_back(e);
  const Rational full = gram_det(lat, pulled);
  std::vector<Dp1Class> standard{lat.canonical()};
  for (int i = 0; i < 8; ++i) standard.push_back(lat.line(e8.simple_root(i)));
  const Rational pic = gram_det(lat, standard);
  if (pic != 1 && pic != -1) rep.fail({{"stage", "Pic X unimodular"}, {"det", pic.get_str()}});
  if (full != pic) rep.fail({{"stage", "pullback plus E is a basis"}, {"det", full.get_str()}});
  rep.details["det_pic_x"] = pic.get_str();

  // -K with the lines of 7 orthogonal roots has Gram matrix 1 1^T - 2 diag(0, 1, ..., 1);
  // subtracting the first row from the others leaves det = (-2)^7
  const auto orth = orthogonal_roots(e8, 7);
  std::vector<Dp1Class> eight{lat.anticanonical()};
  for (const Root& r : orth) eight.push_back(lat.line(r));
  const Rational d8 = gram_det(lat, eight);
  const Rational expected_d8 = -128;
  if (orth.size() != 7 || d8 != expected_d8) rep.fail({{"stage", "orthogonal root determinant"}, {"det", d8.get_str()}});
  rep.details["orthogonal_roots"] = nlohmann::json::array();
  for (const Root& r : orth) rep.details["orthogonal_roots"].push_back(root_label(r));
  rep.details["det_orthogonal_set"] = d8.get_str();
  rep.details["orthogonal_set_unimodular"] = d8 == 1 || d8 == -1;
  return rep;
}

CheckReport tangent_line_degree_check(const Dp1Lattice& lat, const CharacterLattice& tl) {
  CheckReport rep{"tangent_line_degree", "E8/E7"};
  const Dp1Class e = lat.exceptional();
  const Dp1Class pulled = pullback(lat, tl, tl.chi0());
  if (pulled != lat.add(lat.anticanonical(), e)) rep.fail({{"stage", "sigma^*(-K_X') = -K_X + E"}});
  const Dp1Class c = lat.add(pulled, lat.scaled(e, -2));
  if (c != lat.add(lat.anticanonical(), lat.scaled(e, -1))) rep.fail({{"stage", "[C] = -K_X - E"}});
  rep.details["C"] = lat.to_json(c);
  rep.details["C.-K"] = lat.degree(c);
  rep.details["C.E"] = lat.pairing(c, e);
  rep.details["C^2"] = lat.pairing(c, c);
  if (lat.degree(c) != 0) rep.fail({{"stage", "(C . -K_X) = 0"}, {"got", lat.degree(c)}});
  if (lat.pairing(c, e) != 2) rep.fail({{"stage", "(C . E) = 2"}});
  return rep;
}

// ---------------------------------------------------------------------------
// Weyl group

Root weyl_apply(const RootSystem& rs, const std::vector<int>& word, const Root& r) {
  Root out = r;
  for (int i : word) out = rs.reflect(out, rs.simple_root(i));
  return out;
}

std::vector<int> word_to_highest(const RootSystem& rs, const Root& beta) {
  if (!rs.is_root(beta)) throw std::invalid_argument("word_to_highest: not a root");
  std::vector<int> word;
  Root r = beta;
  const Root theta = rs.highest_root();
  while (r != theta) {
    int step = -1;
    for (int i = 0; i < rs.rank() && step < 0; ++i)
      if (rs.coroot_pairing(r, rs.simple_root(i)) < 0) step = i;
    if (step < 0) throw std::logic_error("word_to_highest: dominant root other than theta");
    r = rs.reflect(r, rs.simple_root(step));
    word.push_back(step);
  }
  return word;
}

CheckReport weyl_transitivity_check(const Dp1Lattice& lat, std::size_t samples, std::uint64_t seed) {
  CheckReport rep{"weyl_transitivity", "E8"};
  const RootSystem& rs = lat.e8();
  const auto& roots = rs.roots();
  const std::size_t n = roots.size();
  std::vector<std::vector<int>> inter(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inter[i][j] = lat.pairing(lat.line(roots[i]), lat.line(roots[j]));

  auto is_automorphism = [&](const std::vector<int>& word) {
    std::vector<std::size_t> image(n);
    for (std::size_t i = 0; i < n; ++i) {
      const auto k = rs.index_of(weyl_apply(rs, word, roots[i]));
      if (!k) return false;
      image[i] = *k;
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (inter[image[i]][image[j]] != inter[i][j]) return false;
    return true;
  };

  RandomRationals rng(seed);
  auto pick = [&] { return static_cast<std::size_t>(rng.integer(0, static_cast<long>(n) - 1)); };
  auto letter = [&] { return static_cast<int>(rng.integer(0, rs.rank() - 1)); };
  std::size_t max_len = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    std::vector<int> random_word(30);
    for (int& l : random_word) l = letter();
    if (!is_automorphism(random_word)) rep.fail({{"stage", "random word"}, {"sample", s}});

    const Root& from = roots[pick()];
    const Root& to = roots[pick()];
    std::vector<int> w = word_to_highest(rs, from);
    const std::vector<int> back = word_to_highest(rs, to);
    w.insert(w.end(), back.rbegin(), back.rend());
    max_len = std::max(max_len, w.size());
    if (weyl_apply(rs, w, from) != to)
      rep.fail({{"stage", "carries line to line"}, {"from", root_label(from)}, {"to", root_label(to)}});
    if (!is_automorphism(w)) rep.fail({{"stage", "transporting word"}, {"from", root_label(from)}});
  }
  rep.details["samples"] = samples;
  rep.details["seed"] = seed;
  rep.details["longest_transport_word"] = max_len;
  return rep;
}

std::string intersection_graph_dot(const std::string& name, const std::vector<std::string>& labels,
                                   const std::vector<std::vector<int>>& intersections, int min_intersection) {
  std::ostringstream out;
  out << "graph \"" << name << "\" {\n";
  out << "  node [shape=point];\n";
  for (std::size_t i = 0; i < labels.size(); ++i) out << "  n" << i << " [label=\"" << labels[i] << "\"];\n";
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = i + 1; j < labels.size(); ++j)
      if (intersections[i][j] >= min_intersection)
        out << "  n" << i << " -- n" << j << " [weight=" << intersections[i][j] << "];\n";
  out << "}\n";
  return out.str();
}

}  // namespace glie
