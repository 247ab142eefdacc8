#include "glie/chevalley.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "glie/linalg.hpp"

namespace glie {

// ---------------------------------------------------------------- elements

AlgebraElement AlgebraElement::basis(std::size_t i, const Rational& c) {
  AlgebraElement e;
  e.add(i, c);
  return e;
}

Rational AlgebraElement::coefficient(std::size_t i) const {
  auto it = coords_.find(i);
  return it == coords_.end() ? Rational(0) : it->second;
}

void AlgebraElement::add(std::size_t i, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = coords_.try_emplace(i, c);
  if (inserted) return;
  it->second += c;
  if (sgn(it->second) == 0) coords_.erase(it);
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  for (const auto& [i, c] : o.coords_) add(i, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  for (const auto& [i, c] : o.coords_) add(i, -c);
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    coords_.clear();
    return *this;
  }
  for (auto& kv : coords_) kv.second *= c;
  return *this;
}

// ---------------------------------------------------------------- cases

std::string CaseId::to_string() const {
  return std::string(1, type_letter(type)) + std::to_string(rank) + ":a" + std::to_string(node + 1);
}

CaseId CaseId::parse(const std::string& s) {
  const auto colon = s.find(':');
  if (colon == std::string::npos || colon < 2 || colon + 2 >= s.size() + 1)
    throw std::invalid_argument("case must look like TYPE:node, e.g. E8:a8");
  CaseId c;
  c.type = parse_type_letter(s[0]);
  try {
    c.rank = std::stoi(s.substr(1, colon - 1));
    std::string node = s.substr(colon + 1);
    if (!node.empty() && (node[0] == 'a' || node[0] == 'A')) node = node.substr(1);
    c.node = std::stoi(node) - 1;
  } catch (const std::logic_error&) {
    throw std::invalid_argument("malformed case '" + s + "'");
  }
  if (c.node < 0 || c.node >= c.rank) throw std::invalid_argument("node out of range in '" + s + "'");
  return c;
}

// ---------------------------------------------------------------- construction

namespace {

class ConstantSolver {
 public:
  ConstantSolver(const RootSystem& rs, SignConvention sc) : rs_(rs), sc_(sc) {}

  std::map<std::pair<std::size_t, std::size_t>, int> run() {
    const auto& roots = rs_.roots();
    const std::size_t npos = rs_.num_positive();
    for (std::size_t xi = 0; xi < npos; ++xi) {
      if (roots[xi].height() < 2) continue;
      std::vector<std::size_t> firsts;
      for (std::size_t a = 0; a < npos; ++a) {
        auto b = rs_.index_of(roots[xi] - roots[a]);
        if (b && *b < npos && a < *b) firsts.push_back(a);
      }
      // firsts is sorted, so front() is the extraspecial pair
      const std::size_t ea = firsts.front();
      const std::size_t eb = *rs_.index_of(roots[xi] - roots[ea]);
      int p = 0;
      while (rs_.is_root(roots[eb] - roots[ea].scaled(p + 1))) ++p;
      int sign = 1;
      if (sc_ == SignConvention::Alternate && roots[xi].height() % 2 == 0) sign = -1;
      set(ea, eb, sign * (p + 1));

      const Root gamma = -roots[ea];
      const Root delta = -roots[eb];
      const Rational xixi = rs_.inner(roots[xi], roots[xi]);
      const int ngd = n(gamma, delta);
      for (std::size_t k = 1; k < firsts.size(); ++k) {
        const Root& al = roots[firsts[k]];
        const Root be = roots[xi] - al;
        Rational acc;
        const Root bg = be + gamma;
        if (rs_.is_root(bg)) acc -= Rational(n(be, gamma) * n(al, delta)) / rs_.inner(bg, bg);
        const Root ga = gamma + al;
        if (rs_.is_root(ga)) acc -= Rational(n(gamma, al) * n(be, delta)) / rs_.inner(ga, ga);
        Rational v = xixi * acc / ngd;
        if (v.get_den() != 1) throw std::logic_error("non-integral structure constant");
        set(firsts[k], *rs_.index_of(be), static_cast<int>(v.get_num().get_si()));
      }
    }
    return table_;
  }

  /// N_{a,b} for arbitrary roots a, b with a + b a root.
  int n(const Root& a, const Root& b) const {
    const bool pa = a.is_positive();
    const bool pb = b.is_positive();
    if (pa && pb) return table_.at({*rs_.index_of(a), *rs_.index_of(b)});
    if (!pa && !pb) return -n(-a, -b);
    const Root c = -(a + b);
    Rational v;
    if (c.is_positive() == pa)
      v = rs_.inner(c, c) * n(c, a) / rs_.inner(b, b);
    else
      v = rs_.inner(c, c) * n(b, c) / rs_.inner(a, a);
    if (v.get_den() != 1) throw std::logic_error("non-integral structure constant");
    return static_cast<int>(v.get_num().get_si());
  }

 private:
  void set(std::size_t a, std::size_t b, int v) {
    table_[{a, b}] = v;
    table_[{b, a}] = -v;
  }

  const RootSystem& rs_;
  SignConvention sc_;
  std::map<std::pair<std::size_t, std::size_t>, int> table_;
};

}  // namespace

GradedAlgebra GradedAlgebra::build(const RootSystem& rs, SignConvention sc) {
  auto d = std::make_shared<Data>(Data{rs, sc, 0, {}, {}});
  const std::size_t nr = rs.roots().size();
  const int rank = rs.rank();
  d->dim = nr + static_cast<std::size_t>(rank);
  ConstantSolver solver(rs, sc);
  d->positive_constants = solver.run();

  d->table.assign(d->dim * d->dim, {});
  const auto& roots = rs.roots();
  for (std::size_t i = 0; i < nr; ++i) {
    for (std::size_t j = 0; j < nr; ++j) {
      const Root s = roots[i] + roots[j];
      auto& cell = d->table[i * d->dim + j];
      if (s.is_zero()) {
        const auto h = rs.coroot_coords(roots[i]);
        for (int k = 0; k < rank; ++k)
          if (h[k] != 0) cell.push_back({nr + static_cast<std::size_t>(k), h[k]});
      } else if (auto k = rs.index_of(s)) {
        cell.push_back({*k, solver.n(roots[i], roots[j])});
      }
    }
    for (int k = 0; k < rank; ++k) {
      const int v = rs.coroot_pairing(roots[i], rs.simple_root(k));
      if (v == 0) continue;
      const std::size_t hk = nr + static_cast<std::size_t>(k);
      d->table[hk * d->dim + i].push_back({i, v});
      d->table[i * d->dim + hk].push_back({i, -v});
    }
  }
  return GradedAlgebra(std::move(d));
}

GradedAlgebra GradedAlgebra::graded_by(int node) const {
  if (node < 0 || node >= root_system().rank()) throw std::out_of_range("grading node out of range");
  GradedAlgebra g(data_);
  g.marked_ = node;
  return g;
}

std::size_t GradedAlgebra::index_of(const Root& r) const {
  auto k = root_system().index_of(r);
  if (!k) throw std::invalid_argument("not a root");
  return *k;
}

std::string GradedAlgebra::basis_label(std::size_t i) const {
  if (is_cartan(i)) return "h" + std::to_string(i - num_roots() + 1);
  std::string s = "e[";
  const auto& c = root_of(i).coords;
  for (std::size_t k = 0; k < c.size(); ++k) s += (k ? "," : "") + std::to_string(c[k]);
  return s + "]";
}

int GradedAlgebra::structure_constant(const Root& a, const Root& b) const {
  const std::size_t i = index_of(a);
  const std::size_t j = index_of(b);
  const Root s = a + b;
  if (s.is_zero() || !root_system().is_root(s)) return 0;
  const auto& cell = bracket_basis(i, j);
  return cell.empty() ? 0 : cell.front().coeff;
}

AlgebraElement GradedAlgebra::bracket(const AlgebraElement& x, const AlgebraElement& y) const {
  AlgebraElement out;
  for (const auto& [i, a] : x)
    for (const auto& [j, b] : y) {
      const auto& cell = bracket_basis(i, j);
      if (cell.empty()) continue;
      const Rational ab = a * b;
      for (const Term& t : cell) out.add(t.index, ab * t.coeff);
    }
  return out;
}

int GradedAlgebra::grade(std::size_t i) const {
  if (!marked_ || is_cartan(i)) return 0;
  return root_of(i).coords[static_cast<std::size_t>(*marked_)];
}

std::vector<std::size_t> GradedAlgebra::basis_of_grade(int n) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < dim(); ++i)
    if (grade(i) == n) out.push_back(i);
  return out;
}

std::map<int, std::size_t> GradedAlgebra::grade_dimensions() const {
  std::map<int, std::size_t> dims;
  for (std::size_t i = 0; i < dim(); ++i) ++dims[grade(i)];
  return dims;
}

AlgebraElement GradedAlgebra::component(const AlgebraElement& x, int n) const {
  AlgebraElement out;
  for (const auto& [i, c] : x)
    if (grade(i) == n) out.add(i, c);
  return out;
}

bool GradedAlgebra::is_homogeneous(const AlgebraElement& x, int n) const {
  return std::all_of(x.begin(), x.end(), [&](const auto& kv) { return grade(kv.first) == n; });
}

AlgebraElement GradedAlgebra::grading_element() const {
  if (!marked_) throw std::logic_error("grading_element on an ungraded algebra");
  // h = omega_node^vee = sum_j c_j h_j with <alpha_i, h> = delta_{i,node}
  const auto& rs = root_system();
  const int r = rs.rank();
  RationalMatrix m(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) m(i, j) = rs.cartan_matrix()[i][j];
  RationalVector rhs(r);
  rhs[*marked_] = 1;
  auto c = solve(m, rhs);
  if (!c) throw std::logic_error("singular Cartan matrix");
  AlgebraElement z;
  for (int j = 0; j < r; ++j) z.add(cartan_index(j), (*c)[j]);
  return z;
}

LinearOperator GradedAlgebra::ad(const AlgebraElement& x) const {
  std::vector<AlgebraElement> cols;
  cols.reserve(dim());
  for (std::size_t j = 0; j < dim(); ++j) cols.push_back(bracket(x, AlgebraElement::basis(j)));
  return LinearOperator(std::move(cols));
}

AlgebraElement GradedAlgebra::exp_apply(const AlgebraElement& x, const AlgebraElement& y) const {
  AlgebraElement sum = y;
  AlgebraElement term = y;
  for (std::size_t k = 1; k <= dim() + 1; ++k) {
    term = bracket(x, term);
    if (term.is_zero()) return sum;
    term *= Rational(1, static_cast<unsigned long>(k));
    sum += term;
  }
  throw std::invalid_argument("exp: element is not ad-nilpotent");
}

LinearOperator GradedAlgebra::exp_nilpotent(const AlgebraElement& x) const {
  std::vector<AlgebraElement> cols;
  cols.reserve(dim());
  for (std::size_t j = 0; j < dim(); ++j) cols.push_back(exp_apply(x, AlgebraElement::basis(j)));
  return LinearOperator(std::move(cols));
}

AlgebraElement GradedAlgebra::grade_scale(const AlgebraElement& x, const Rational& t) const {
  AlgebraElement out;
  for (const auto& [i, c] : x) {
    const int n = grade(i);
    Rational f = 1;
    for (int k = 0; k < std::abs(n); ++k) f *= t;
    out.add(i, n >= 0 ? Rational(c * f) : Rational(c / f));
  }
  return out;
}

nlohmann::json GradedAlgebra::to_json() const {
  nlohmann::json j;
  j["type"] = root_system().name();
  if (marked_) j["grade_node"] = *marked_ + 1;
  nlohmann::json basis = nlohmann::json::array();
  for (std::size_t i = 0; i < dim(); ++i) {
    if (is_cartan(i))
      basis.push_back({{"kind", "coroot"}, {"node", i - num_roots() + 1}});
    else
      basis.push_back({{"kind", "root"}, {"root", root_of(i).coords}});
  }
  j["basis"] = basis;
  nlohmann::json constants = nlohmann::json::array();
  for (std::size_t a = 0; a < dim(); ++a)
    for (std::size_t b = 0; b < dim(); ++b)
      for (const Term& t : bracket_basis(a, b)) constants.push_back({a, b, t.index, t.coeff});
  j["constants"] = constants;
  std::vector<int> grading;
  for (std::size_t i = 0; i < dim(); ++i) grading.push_back(grade(i));
  j["grading"] = grading;
  return j;
}

// ---------------------------------------------------------------- operators

LinearOperator LinearOperator::identity(std::size_t dim) {
  std::vector<AlgebraElement> cols;
  for (std::size_t j = 0; j < dim; ++j) cols.push_back(AlgebraElement::basis(j));
  return LinearOperator(std::move(cols));
}

AlgebraElement LinearOperator::apply(const AlgebraElement& x) const {
  AlgebraElement out;
  for (const auto& [j, c] : x) out += c * columns_.at(j);
  return out;
}

LinearOperator LinearOperator::compose(const LinearOperator& rhs) const {
  std::vector<AlgebraElement> cols;
  cols.reserve(rhs.dim());
  for (std::size_t j = 0; j < rhs.dim(); ++j) cols.push_back(apply(rhs.column(j)));
  return LinearOperator(std::move(cols));
}

// ---------------------------------------------------------------- classification

std::vector<std::pair<CartanType, int>> enumerate_simple_types(int max_rank) {
  std::vector<std::pair<CartanType, int>> out;
  for (int n = 1; n <= max_rank; ++n) out.emplace_back(CartanType::A, n);
  for (int n = 2; n <= max_rank; ++n) out.emplace_back(CartanType::B, n);
  for (int n = 2; n <= max_rank; ++n) out.emplace_back(CartanType::C, n);
  for (int n = 4; n <= max_rank; ++n) out.emplace_back(CartanType::D, n);
  for (int n = 6; n <= std::min(8, max_rank); ++n) out.emplace_back(CartanType::E, n);
  if (max_rank >= 4) out.emplace_back(CartanType::F, 4);
  if (max_rank >= 2) out.emplace_back(CartanType::G, 2);
  return out;
}

std::vector<CaseId> classify_grading_length_5(int max_rank) {
  std::vector<CaseId> out;
  for (auto [t, n] : enumerate_simple_types(max_rank)) {
    const RootSystem rs = RootSystem::build(t, n);
    const Root theta = rs.highest_root();
    // g_n is nonzero exactly for |n| <= coefficient of the node in theta
    for (int i = 0; i < n; ++i)
      if (theta.coords[i] == 2) out.push_back({t, n, i});
  }
  return out;
}

bool is_adjoint_fundamental(const RootSystem& rs, int node) {
  const Weight w = rs.to_weight(rs.highest_root());
  for (int i = 0; i < rs.rank(); ++i)
    if (w.coords[i] != (i == node ? 1 : 0)) return false;
  return true;
}

std::vector<CaseId> classify_adjoint_fundamental(int max_rank) {
  std::vector<CaseId> out;
  for (auto [t, n] : enumerate_simple_types(max_rank)) {
    const RootSystem rs = RootSystem::build(t, n);
    for (int i = 0; i < n; ++i) {
      if (!is_adjoint_fundamental(rs, i)) continue;
      if (rs.highest_root().coords[i] != 2)
        throw std::logic_error("adjoint-fundamental node without coefficient 2 in " + rs.name());
      out.push_back({t, n, i});
    }
  }
  return out;
}

nlohmann::json element_json(const GradedAlgebra& g, const AlgebraElement& x) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [i, c] : x) j[g.basis_label(i)] = to_string(c);
  return j;
}

}  // namespace glie
