#include <random>

#include "doctest.h"
#include "rspin/assemblage.hpp"

using namespace rspin;
using namespace rspin::assemblage;

namespace {

Int brute_gcd(const IntVec& v) {
  Int best = 0;
  Int bound = 0;
  for (Int x : v) bound = std::max(bound, x < 0 ? -x : x);
  for (Int k = 1; k <= bound; ++k) {
    bool all = true;
    for (Int x : v) all = all && x % k == 0;
    if (all) best = k;
  }
  return best;
}

State pants_state() { return State{0, 2, 0, 0, {{"x", 3}, {"y", -3}}}; }

}  // namespace

TEST_CASE("merge and split rules") {
  State s{1, 2, -2, 0, {{"p", 3}, {"q", 7}}};
  s.euler = 2 - 2 * s.genus - s.boundary;
  s.components = {{"p", 3}, {"q", -5}};
  auto merged = apply_step(s, AssemblageStep::merge("c", "p", "q", {"n", -3}));
  CHECK(merged.genus == 2);
  CHECK(merged.boundary == 1);
  CHECK(merged.euler == s.euler - 1);
  CHECK(merged.components == std::vector<Component>{{"n", -3}});

  State t{1, 1, -1, 0, {{"n", -1}}};
  auto split = apply_step(t, AssemblageStep::split("c", "n", {"u", -1}, {"v", -1}));
  CHECK(split.boundary == 2);
  CHECK(split.genus == 1);
  CHECK(split.euler == -2);
  CHECK_THROWS_AS(apply_step(State{2, 1, -3, 0, {{"n", -1}}}, AssemblageStep::split("c", "n", {"u", -1}, {"v", -1})),
                  Error);
  CHECK_THROWS_AS(apply_step(t, AssemblageStep::split("c", "n", {"u", 0}, {"v", -1})), Error);
  try {
    apply_step(t, AssemblageStep::split("c", "zz", {"u", -1}, {"v", -1}));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnknownComponent);
  }
  State m{0, 2, 0, 0, {{"p", 3}, {"q", -3}}};
  CHECK(apply_step(m, AssemblageStep::merge("c", "p", "q", {"n", -1})).components[0].value == -1);
  CHECK_THROWS_AS(apply_step(m, AssemblageStep::merge("c", "p", "q", {"n", 9})), Error);
  CHECK(pants_state().coherent());
}

TEST_CASE("merge of values 3 and 7 gives 9") {
  State s{0, 3, -1, 0, {{"a", 3}, {"b", 7}, {"c", -11}}};
  auto after = apply_step(s, AssemblageStep::merge("x", "a", "b", {"ab", 9}));
  CHECK(after.components[0].value == 9);
  CHECK(after.genus == 1);
  CHECK(after.boundary == 2);
}

TEST_CASE("core verification") {
  auto core_rep = verify_core(curveconf::core13());
  CHECK(core_rep.genus == 6);
  CHECK(core_rep.type_e);
  auto e6 = verify_core(curveconf::dynkin("E6"));
  CHECK(e6.genus == 3);
  CHECK(e6.type_e);
  CHECK_FALSE(verify_core(curveconf::chain(7)).type_e);
}

TEST_CASE("certificate flags") {
  Assemblage core_only{curveconf::core13(), {}, {8, 2}, 0};
  auto c = certify(core_only, {{"dC", -9}, {"dD", -3}});
  CHECK_FALSE(c.filling);
  CHECK_FALSE(c.generates());
  core_only.ambient = {6, 2};
  CHECK(certify(core_only, {{"dC", -9}, {"dD", -3}}).generates());
  CHECK_THROWS_AS(certify(core_only, {{"dC", -9}, {"dD", -4}}), Error);

  Assemblage small{curveconf::dynkin("E6"), {}, {3, 1}, 0};
  auto e6 = certify(small, {{"d", -5}});
  CHECK(e6.filling);
  CHECK_FALSE(e6.core_genus_ok);
  CHECK_FALSE(e6.generates());

  Assemblage bad = core_only;
  bad.ambient = {7, 1};
  bad.steps.push_back(AssemblageStep::merge("x", "dC", "dD", {"d", -13}, 1));
  auto flagged = certify(bad, {{"dC", -9}, {"dD", -3}});
  CHECK(flagged.filling);
  CHECK_FALSE(flagged.admissible);
  CHECK_FALSE(flagged.generates());
}

TEST_CASE("capping order") {
  CHECK(capping_order({3, 7}) == 4);
  CHECK(capping_order({-1, -1}) == 0);
  CHECK_THROWS_AS(capping_order({}), Error);
  std::mt19937 rng(21);
  for (int t = 0; t < 300; ++t) {
    IntVec v(1 + t % 4);
    for (auto& x : v) x = static_cast<Int>(rng() % 61) - 30;
    Int r = capping_order(v);
    IntVec shifted;
    for (Int x : v) shifted.push_back(x + 1);
    CHECK(r == brute_gcd(shifted));
    for (Int x : shifted)
      if (r != 0) CHECK(x % r == 0);
  }
}

TEST_CASE("closed form of the staged construction") {
  auto p = staged_boundary_values(10, 0, 6);
  CHECK(p.delta_prime == -25);
  CHECK(p.delta_double_prime == -5);
  CHECK(p.r_prime == 4);
  auto q = staged_boundary_values(0, 0, 6);
  CHECK(q.delta_prime == -5);
  CHECK(q.delta_double_prime == -5);
  CHECK(q.r_prime == 4);
}

TEST_CASE("staged construction certifies and lands on the closed form") {
  for (Int gc = 3; gc <= 12; ++gc)
    for (Int gd = 0; gd <= 4; ++gd)
      for (Int d = 6; d <= 11; ++d) {
        auto p = build_staged_assemblage(gc, gd, d);
        auto cert = certify(p.assemblage, p.initial);
        Int g = gc + gd + d - 1;
        CHECK(cert.generates());
        CHECK(cert.genus == g);
        CHECK(cert.boundary == 2);
        CHECK(p.assemblage.steps.size() == static_cast<std::size_t>(2 * g - 12));
        CHECK(p.stage2_steps == static_cast<std::size_t>(2 * d - 8));
        for (const auto& st : cert.stages) {
          CHECK(st.coherent());
          CHECK(st.euler == 2 - 2 * st.genus - st.boundary);
        }
        REQUIRE(cert.boundary_values.size() == 2);
        CHECK(cert.boundary_values[0] == Component{"Delta'", p.expected.delta_prime});
        CHECK(cert.boundary_values[1] == Component{"Delta''", p.expected.delta_double_prime});
        CHECK(capping_order({p.expected.delta_prime, p.expected.delta_double_prime}) == p.expected.r_prime);
      }
  CHECK_THROWS_AS(build_staged_assemblage(10, 0, 5), Error);
  CHECK_THROWS_AS(build_staged_assemblage(0, 0, 6), Error);
}

TEST_CASE("final genus matches the smoothed genus on P2") {
  auto p2 = catalog::builtin("P2");
  for (Int a = 6; a <= 9; ++a)
    for (Int b = 1; b <= 3; ++b) {
      picard::DivisorClass c(p2.lattice, {a}), d(p2.lattice, {b});
      auto p = build_staged_assemblage(picard::genus_of_section(c), picard::genus_of_section(d), a * b);
      CHECK(certify(p.assemblage, p.initial).genus == picard::smoothed_genus(c, d));
    }
}

TEST_CASE("reordering independent steps keeps the final invariants") {
  Assemblage a{curveconf::core13(), {}, {7, 3}, 0};
  a.steps.push_back(AssemblageStep::split("x", "dC", {"p", -6}, {"q", -4}));
  a.steps.push_back(AssemblageStep::split("y", "dD", {"s", -2}, {"t", -2}));
  a.steps.push_back(AssemblageStep::merge("z", "p", "s", {"ps", -9}));
  auto first = certify(a, {{"dC", -9}, {"dD", -3}});
  std::swap(a.steps[0], a.steps[1]);
  auto second = certify(a, {{"dC", -9}, {"dD", -3}});
  CHECK(first.genus == second.genus);
  CHECK(first.boundary == second.boundary);
  CHECK(first.euler == second.euler);
  auto sorted = [](std::vector<Component> v) {
    std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.name < y.name; });
    return v;
  };
  CHECK(sorted(first.boundary_values) == sorted(second.boundary_values));
}

TEST_CASE("assemblage text format") {
  auto f = parse_assemblage(R"(
    ambient 7 1;
    modulus 0;
    core core13;
    boundary dC = -9;
    boundary dD = -3;
    merge x : dC + dD -> d = -13;
  )");
  auto cert = certify(f.assemblage, f.initial);
  CHECK(cert.genus == 7);
  CHECK(cert.filling);
  CHECK(cert.generates());
  auto g = parse_assemblage(R"(
    ambient 3 2;
    core { curves a b c d e; edge a b; edge b c; edge c d; edge d e; };
    boundary u = -2;
    boundary v = -2;
    split w : u -> p = -1, q = -2 winding 1;
  )");
  auto c2 = certify(g.assemblage, g.initial);
  CHECK(c2.boundary == 3);
  CHECK_FALSE(c2.admissible);
  CHECK_THROWS_AS(parse_assemblage("core core13;"), Error);
}

TEST_CASE("monodromy report on the plane") {
  auto p2 = catalog::builtin("P2");
  auto rep = monodromy_report(p2, {p2.lattice, {6}}, {p2.lattice, {1}});
  CHECK(rep.certified);
  CHECK(rep.r == 4);
  CHECK(rep.r_prime == 4);
  CHECK(rep.genus == 15);
  CHECK(rep.cut_down.empty());
  CHECK(rep.verdict == "Γ = Mod(E)[φ_M], r = 4");

  auto rep2 = monodromy_report(p2, {p2.lattice, {6}}, {p2.lattice, {2}});
  CHECK(rep2.r == 5);
  CHECK(rep2.r_prime == 10);
  REQUIRE(rep2.cut_down.size() == 1);
  CHECK(rep2.cut_down[0].candidate == 10);

  auto weak = monodromy_report(p2, {p2.lattice, {4}}, {p2.lattice, {1}});
  CHECK_FALSE(weak.certified);
  CHECK(weak.verdict == "not certified");

  auto swapped = monodromy_report(p2, {p2.lattice, {1}}, {p2.lattice, {6}});
  CHECK_FALSE(swapped.certified);
  CHECK_FALSE(swapped.warnings.empty());

  CHECK_THROWS_AS(monodromy_report(p2, {p2.lattice, {2}}, {p2.lattice, {1}}), Error);
}

TEST_CASE("r divides r' across catalog surfaces") {
  std::mt19937 rng(17);
  int certified = 0;
  for (const auto& name : catalog::builtin_names()) {
    auto s = catalog::builtin(name);
    auto ample = s.ledger.entries();
    if (ample.empty()) continue;
    const IntVec base = ample.begin()->first;
    for (int t = 0; t < 6; ++t) {
      Int a = 6 + static_cast<Int>(rng() % 4), b = 1 + static_cast<Int>(rng() % 3);
      IntVec cv = base, dv = base;
      for (auto& x : cv) x *= a;
      for (auto& x : dv) x *= b;
      picard::DivisorClass c(s.lattice, cv), d(s.lattice, dv);
      try {
        auto rep = monodromy_report(s, c, d);
        if (!rep.certified) continue;
        ++certified;
        CHECK(rep.r_prime % rep.r == 0);
        CHECK(rep.r_prime == rep.r_prime_from_intersections);
      } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Precondition);
      }
    }
  }
  CHECK(certified > 20);
}
