#include "glie/rootsys.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

#include "glie/linalg.hpp"

namespace glie {

char type_letter(CartanType t) { return static_cast<char>('A' + static_cast<int>(t)); }

CartanType parse_type_letter(char c) {
  if (c >= 'a' && c <= 'g') c = static_cast<char>(c - 'a' + 'A');
  if (c < 'A' || c > 'G') throw std::invalid_argument(std::string("unknown Cartan type '") + c + "'");
  return static_cast<CartanType>(c - 'A');
}

int Root::height() const { return std::accumulate(coords.begin(), coords.end(), 0); }

bool Root::is_positive() const {
  for (int c : coords)
    if (c != 0) return c > 0;
  return false;
}

Root Root::operator-() const { return scaled(-1); }

Root Root::operator+(const Root& o) const {
  Root r = *this;
  for (std::size_t i = 0; i < coords.size(); ++i) r.coords[i] += o.coords[i];
  return r;
}

Root Root::operator-(const Root& o) const { return *this + (-o); }

Root Root::scaled(int k) const {
  Root r = *this;
  for (int& c : r.coords) c *= k;
  return r;
}

bool Root::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](int c) { return c == 0; });
}

namespace {

struct DynkinData {
  std::vector<Rational> lengths;
  std::vector<std::pair<int, int>> edges;  // 0-based
};

DynkinData dynkin(CartanType type, int n) {
  DynkinData d;
  auto chain = [&](int from, int to) {
    for (int i = from; i < to; ++i) d.edges.emplace_back(i, i + 1);
  };
  switch (type) {
    case CartanType::A:
      if (n < 1) break;
      d.lengths.assign(n, Rational(2));
      chain(0, n - 1);
      return d;
    case CartanType::B:
      if (n < 2) break;
      d.lengths.assign(n, Rational(2));
      d.lengths[n - 1] = 1;
      chain(0, n - 1);
      return d;
    case CartanType::C:
      if (n < 2) break;
      d.lengths.assign(n, Rational(1));
      d.lengths[n - 1] = 2;
      chain(0, n - 1);
      return d;
    case CartanType::D:
      if (n < 4) break;
      d.lengths.assign(n, Rational(2));
      chain(0, n - 2);
      d.edges.emplace_back(n - 3, n - 1);
      return d;
    case CartanType::E:
      if (n < 6 || n > 8) break;
      d.lengths.assign(n, Rational(2));
      d.edges.emplace_back(0, 2);
      d.edges.emplace_back(1, 3);
      chain(2, n - 1);
      return d;
    case CartanType::F:
      if (n != 4) break;
      d.lengths = {2, 2, 1, 1};
      chain(0, 3);
      return d;
    case CartanType::G:
      if (n != 2) break;
      d.lengths = {Rational(2, 3), Rational(2)};
      d.edges.emplace_back(0, 1);
      return d;
  }
  throw std::invalid_argument(std::string("invalid simple type ") + type_letter(type) + std::to_string(n));
}

}  // namespace

RootSystem RootSystem::build(CartanType type, int rank) {
  DynkinData d = dynkin(type, rank);
  RootSystem rs;
  rs.type_ = type;
  rs.rank_ = rank;
  rs.lengths_ = d.lengths;
  rs.gram_.assign(rank, std::vector<Rational>(rank));
  for (int i = 0; i < rank; ++i) rs.gram_[i][i] = d.lengths[i];
  // a bond contributes minus half the longer of the two lengths
  for (auto [i, j] : d.edges) {
    const Rational b = -std::max(d.lengths[i], d.lengths[j]) / 2;
    rs.gram_[i][j] = b;
    rs.gram_[j][i] = b;
  }
  rs.cartan_.assign(rank, std::vector<int>(rank));
  RationalMatrix c(rank, rank);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) {
      Rational v = 2 * rs.gram_[i][j] / d.lengths[j];
      if (v.get_den() != 1) throw std::logic_error("non-integral Cartan entry");
      rs.cartan_[i][j] = static_cast<int>(v.get_num().get_si());
      c(i, j) = v;
    }
  rs.inverse_cartan_.assign(rank, std::vector<Rational>(rank));
  for (int i = 0; i < rank; ++i) {
    RationalVector e(rank);
    e[i] = 1;
    // column i of C^{-1}
    auto col = solve(c, e);
    if (!col) throw std::logic_error("singular Cartan matrix");
    for (int j = 0; j < rank; ++j) rs.inverse_cartan_[j][i] = (*col)[j];
  }
  rs.generate_roots();
  return rs;
}

void RootSystem::generate_roots() {
  std::set<std::vector<int>> positive;
  std::vector<Root> frontier;
  for (int i = 0; i < rank_; ++i) {
    frontier.push_back(simple_root(i));
    positive.insert(frontier.back().coords);
  }
  // root strings: beta + alpha_i is a root iff q > 0, q = p - <beta, alpha_i^vee>
  while (!frontier.empty()) {
    std::vector<Root> next;
    for (const Root& beta : frontier) {
      for (int i = 0; i < rank_; ++i) {
        const Root ai = simple_root(i);
        int p = 0;
        Root down = beta - ai;
        while (!down.is_zero() && positive.count(down.coords)) {
          ++p;
          down = down - ai;
        }
        const int q = p - coroot_pairing(beta, ai);
        if (q > 0) {
          Root up = beta + ai;
          if (positive.insert(up.coords).second) next.push_back(up);
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<Root> pos;
  for (const auto& c : positive) pos.push_back(Root{c});
  std::sort(pos.begin(), pos.end(), [](const Root& a, const Root& b) {
    if (a.height() != b.height()) return a.height() < b.height();
    return a.coords > b.coords;
  });
  num_positive_ = pos.size();
  roots_ = pos;
  for (const Root& r : pos) roots_.push_back(-r);
  for (std::size_t k = 0; k < roots_.size(); ++k) index_[roots_[k].coords] = k;
}

std::string RootSystem::name() const { return std::string(1, type_letter(type_)) + std::to_string(rank_); }

Root RootSystem::simple_root(int i) const {
  if (i < 0 || i >= rank_) throw std::out_of_range("simple root index");
  Root r{std::vector<int>(rank_, 0)};
  r.coords[i] = 1;
  return r;
}

Root RootSystem::highest_root() const { return roots_[num_positive_ - 1]; }

std::optional<std::size_t> RootSystem::index_of(const Root& r) const {
  if (r.coords.size() != static_cast<std::size_t>(rank_)) return std::nullopt;
  auto it = index_.find(r.coords);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Rational RootSystem::inner(const Root& a, const Root& b) const {
  if (a.coords.size() != b.coords.size() || a.coords.size() != static_cast<std::size_t>(rank_))
    throw std::invalid_argument("inner: dimension mismatch");
  Rational s;
  for (int i = 0; i < rank_; ++i) {
    if (a.coords[i] == 0) continue;
    for (int j = 0; j < rank_; ++j)
      if (b.coords[j] != 0) s += a.coords[i] * b.coords[j] * gram_[i][j];
  }
  return s;
}

int RootSystem::coroot_pairing(const Root& a, const Root& b) const {
  Rational v = 2 * inner(a, b) / inner(b, b);
  if (v.get_den() != 1) throw std::logic_error("non-integral root pairing");
  return static_cast<int>(v.get_num().get_si());
}

bool RootSystem::is_long(const Root& r) const { return inner(r, r) == 2; }

std::vector<int> RootSystem::coroot_coords(const Root& b) const {
  // b^vee = 2 b / (b, b) = sum_i b_i (alpha_i, alpha_i)/(b, b) alpha_i^vee
  const Rational bb = inner(b, b);
  std::vector<int> out(rank_);
  for (int i = 0; i < rank_; ++i) {
    Rational v = b.coords[i] * lengths_[i] / bb;
    if (v.get_den() != 1) throw std::logic_error("non-integral coroot");
    out[i] = static_cast<int>(v.get_num().get_si());
  }
  return out;
}

Weight RootSystem::to_weight(const Root& r) const {
  Weight w{std::vector<Rational>(rank_)};
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) w.coords[i] += r.coords[j] * cartan_[j][i];
  return w;
}

Weight RootSystem::fundamental_weight(int i) const {
  if (i < 0 || i >= rank_) throw std::out_of_range("fundamental weight index");
  Weight w{std::vector<Rational>(rank_)};
  w.coords[i] = 1;
  return w;
}

std::vector<Rational> RootSystem::weight_in_root_basis(const Weight& x) const {
  if (x.coords.size() != static_cast<std::size_t>(rank_)) throw std::invalid_argument("weight: dimension mismatch");
  std::vector<Rational> r(rank_);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) r[j] += x.coords[i] * inverse_cartan_[i][j];
  return r;
}

Rational RootSystem::pairing(const Weight& x, const Weight& y) const {
  const auto a = weight_in_root_basis(x);
  const auto b = weight_in_root_basis(y);
  Rational s;
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) s += a[i] * b[j] * gram_[i][j];
  return s;
}

Rational RootSystem::coroot_pairing(const Weight& x, const Root& b) const {
  const auto a = weight_in_root_basis(x);
  Rational s;
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) s += a[i] * b.coords[j] * gram_[i][j];
  return 2 * s / inner(b, b);
}

Root RootSystem::reflect(const Root& r, const Root& s) const { return r - s.scaled(coroot_pairing(r, s)); }

Weight RootSystem::reflect(const Weight& x, const Root& s) const {
  const Rational k = coroot_pairing(x, s);
  const Weight ws = to_weight(s);
  Weight out = x;
  for (int i = 0; i < rank_; ++i) out.coords[i] -= k * ws.coords[i];
  return out;
}

nlohmann::json RootSystem::to_json() const {
  nlohmann::json j;
  j["type"] = std::string(1, type_letter(type_));
  j["rank"] = rank_;
  nlohmann::json simple = nlohmann::json::array();
  for (int i = 0; i < rank_; ++i) simple.push_back(simple_root(i).coords);
  j["simple_roots"] = simple;
  nlohmann::json all = nlohmann::json::array();
  for (const Root& r : roots_) all.push_back(r.coords);
  j["roots"] = all;
  j["cartan_matrix"] = cartan_;
  return j;
}

}  // namespace glie
