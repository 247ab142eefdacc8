// Acceptance runner: one PASS/FAIL line per criterion. With arguments, runs
// only the listed criterion numbers.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <string>

#include "glie/suites.hpp"

using namespace glie;

namespace {

struct Verdict {
  bool pass = true;
  std::string note;
};

const CaseId kIdentityCases[] = {
    {CartanType::G, 2, 1}, {CartanType::B, 3, 1}, {CartanType::F, 4, 0}, {CartanType::E, 7, 0}, {CartanType::E, 8, 7}};

const QuarticData& quartic_data(const CaseId& c, SignConvention sc) {
  static std::map<std::pair<CaseId, SignConvention>, std::unique_ptr<QuarticData>> cache;
  auto& slot = cache[{c, sc}];
  if (!slot)
    slot = std::make_unique<QuarticData>(
        GradedModule(GradedAlgebra::build(RootSystem::build(c.type, c.rank), sc).graded_by(c.node)));
  return *slot;
}

const QuarticData& e8(SignConvention sc = SignConvention::Standard) { return quartic_data({CartanType::E, 8, 7}, sc); }

std::string first_failure(const CheckReport& r) {
  return r.check + " " + r.case_id + (r.failures.empty() ? "" : ": " + r.failures.front().dump());
}

Verdict structure() {
  const auto g = GradedAlgebra::build(RootSystem::build(CartanType::E, 8)).graded_by(7);
  const CheckReport rep = structure_report(g);
  std::vector<std::size_t> dims;
  for (const auto& [n, d] : g.grade_dimensions()) dims.push_back(d);
  Verdict v;
  v.pass = rep.pass && g.root_system().roots().size() == 240 && g.dim() == 248 &&
           dims == std::vector<std::size_t>{1, 56, 134, 56, 1} && rep.details["dim_centre"] == 1 &&
           rep.details["dim_g_prime"] == 133;
  std::ostringstream s;
  s << "E8: " << g.root_system().roots().size() << " roots, dim " << g.dim() << ", grades [";
  for (std::size_t i = 0; i < dims.size(); ++i) s << (i ? ", " : "") << dims[i];
  s << "], dim g' " << rep.details["dim_g_prime"];
  v.note = rep.pass ? s.str() : first_failure(rep);
  return v;
}

Verdict classification() {
  // the lists as printed: B_n (i != 1), C_n (i != n), D_n (i not in {1, n-1, n}),
  // E6 (2, 3, 5), E7 (1, 2, 6), E8 (1, 8), F4 (1, 4), G2 (2)
  std::set<CaseId> five, adjoint;
  for (int n = 2; n <= 8; ++n)
    for (int i = 2; i <= n; ++i) five.insert({CartanType::B, n, i - 1});
  for (int n = 2; n <= 8; ++n)
    for (int i = 1; i < n; ++i) five.insert({CartanType::C, n, i - 1});
  for (int n = 4; n <= 8; ++n)
    for (int i = 2; i <= n - 2; ++i) five.insert({CartanType::D, n, i - 1});
  for (int i : {2, 3, 5}) five.insert({CartanType::E, 6, i - 1});
  for (int i : {1, 2, 6}) five.insert({CartanType::E, 7, i - 1});
  for (int i : {1, 8}) five.insert({CartanType::E, 8, i - 1});
  for (int i : {1, 4}) five.insert({CartanType::F, 4, i - 1});
  five.insert({CartanType::G, 2, 1});
  // B_n (n >= 3) and D_n (n >= 4) at alpha_2, E6 alpha_2, E7 alpha_1, E8 alpha_8, F4 alpha_1, G2 alpha_2
  for (int n = 3; n <= 8; ++n) adjoint.insert({CartanType::B, n, 1});
  for (int n = 4; n <= 8; ++n) adjoint.insert({CartanType::D, n, 1});
  adjoint.insert({CartanType::E, 6, 1});
  adjoint.insert({CartanType::E, 7, 0});
  adjoint.insert({CartanType::E, 8, 7});
  adjoint.insert({CartanType::F, 4, 0});
  adjoint.insert({CartanType::G, 2, 1});

  const auto got_five = classify_grading_length_5(8);
  const auto got_adj = classify_adjoint_fundamental(8);
  const CheckReport rep = classification_report(8);
  Verdict v;
  const bool five_ok = std::set<CaseId>(got_five.begin(), got_five.end()) == five && got_five.size() == five.size();
  const bool adj_ok = std::set<CaseId>(got_adj.begin(), got_adj.end()) == adjoint && got_adj.size() == adjoint.size();
  v.pass = five_ok && adj_ok && rep.pass;
  std::ostringstream s;
  s << got_five.size() << " five-term gradings (rank <= 8)" << (five_ok ? "" : " MISMATCH") << ", "
    << got_adj.size() << " adjoint-fundamental pairs" << (adj_ok ? "" : " MISMATCH")
    << (rep.pass ? ", node coefficient 2 in the highest root" : ", " + first_failure(rep));
  v.note = s.str();
  return v;
}

Verdict identities(SignConvention sc) {
  Verdict v;
  std::ostringstream s;
  for (const CaseId& c : kIdentityCases) {
    const std::size_t trials = c.rank <= 3 ? 50 : 10;
    const auto& qd = quartic_data(c, sc);
    bool ok = true;
    for (const auto& r : identity_suite(qd, trials, 2024)) {
      if (!r.pass) {
        ok = false;
        if (v.pass) v.note = first_failure(r);
      }
    }
    v.pass = v.pass && ok;
    s << c.to_string() << "x" << trials << (ok ? " ok " : " FAIL ");
  }
  if (v.pass) v.note = s.str();
  return v;
}

Verdict orbit(SignConvention sc) {
  const CheckReport rep = orbit_suite(e8(sc), 100, 11);
  Verdict v;
  const bool dims_ok = rep.details["tangent_dims"] == nlohmann::json::array({28});
  const bool ann_ok = rep.details["annihilator_v"] == 0 && rep.details["annihilator_v_omega_minus_alpha"] == 0;
  v.pass = rep.pass && dims_ok && ann_ok && rep.details["exp_fixed"] == 100;
  std::ostringstream s;
  s << "E8: 100 points with p = 0, tangent dims " << rep.details["tangent_dims"].dump() << ", "
    << rep.details["isotropic_tangents"] << " isotropic tangent vectors, exp fixes " << rep.details["exp_fixed"]
    << ", annihilators " << rep.details["annihilator_v"] << "/" << rep.details["annihilator_v_omega_minus_alpha"];
  v.note = rep.pass ? s.str() : first_failure(rep);
  return v;
}

Verdict quartic() {
  const CheckReport rep = quartic_coefficient_survey(e8());
  Verdict v;
  v.pass = rep.pass && rep.details["weights"] == 56;
  std::ostringstream s;
  s << "E8: " << rep.details["zero_sum_quadruples"] << " zero-sum quadruples, " << rep.details["vanishing"]
    << " vanishing r-coefficients; no q^mu divisible by x^mu";
  v.note = rep.pass ? s.str() : first_failure(rep);
  return v;
}

Verdict series() {
  const CheckReport ch = ch_suite(e8().algebra(), 20, 5);
  const CheckReport lim = limit_suite(e8(), 20, 6);
  Verdict v;
  v.pass = ch.pass && lim.pass && lim.details["reproduced"] == 20 && lim.details["obstructed"] >= 20;
  std::ostringstream s;
  s << "E8: CH on " << ch.details["pairs"] << " pairs as 248x248 operators; limit reproduced on "
    << lim.details["reproduced"] << " (x, a), obstruction seen in " << lim.details["obstructed"] << " violating forms";
  v.note = !ch.pass ? first_failure(ch) : !lim.pass ? first_failure(lim) : s.str();
  return v;
}

Verdict lattice() {
  const Dp1Lattice lat;
  const CharacterLattice tl;
  Verdict v;
  std::ostringstream s;
  for (const auto& r : lattice_suite(lat, tl, 3)) {
    if (!r.pass && v.pass) v.note = first_failure(r);
    v.pass = v.pass && r.pass;
    s << r.check << (r.pass ? " ok " : " FAIL ");
  }
  const auto lines = dp1_lines(lat);
  const auto lines2 = dp2_lines(lat, tl);
  v.pass = v.pass && lines.size() == 240 && lines2.size() == 56 && tl.pairing(tl.chi0(), tl.chi0()) == 2;
  if (v.pass) v.note = s.str();
  return v;
}

Verdict stability() {
  const CheckReport rep = fat_suite(e8().algebra(), 1000, 8);
  Verdict v;
  v.pass = rep.pass && rep.details["supports"] == 1000;
  std::ostringstream s;
  s << "E8: " << rep.details["supports"] << " supports, " << rep.details["fat"] << " fat, all stable with trivial stabiliser";
  v.note = rep.pass ? s.str() : first_failure(rep);
  return v;
}

Verdict robustness() {
  const Verdict a = identities(SignConvention::Alternate);
  const Verdict b = orbit(SignConvention::Alternate);
  return {a.pass && b.pass, "alternate signs: identities [" + a.note + "]; orbit [" + b.note + "]"};
}

}  // namespace

int main(int argc, char** argv) {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;
    std::function<Verdict()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "structure", 60, structure},
      {2, "classification", 10, classification},
      {3, "identities", 900, [] { return identities(SignConvention::Standard); }},
      {4, "orbit", 600, [] { return orbit(SignConvention::Standard); }},
      {5, "quartic survey", 1200, quartic},
      {6, "series", 600, series},
      {7, "lattice", 30, lattice},
      {8, "stability", 300, stability},
      {9, "robustness", 1500, robustness},
  };
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::stoi(argv[i]));

  int failed = 0;
  for (const auto& c : criteria) {
    if (!only.empty() && !only.count(c.id)) continue;
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs <= c.limit_s;
    const bool pass = v.pass && in_time;
    failed += pass ? 0 : 1;
    std::printf("criterion %d (%s): %s  %.1f s (limit %.0f s)%s  %s\n", c.id, c.name, pass ? "PASS" : "FAIL", secs,
                c.limit_s, in_time ? "" : " OVER TIME", v.note.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
