#include <random>

#include "doctest.h"
#include "rspin/winding.hpp"

using namespace rspin;
using namespace rspin::winding;

namespace {

IntVec random_class(std::mt19937& rng, const Context& ctx, int spread = 2) {
  std::uniform_int_distribution<int> d(-spread, spread);
  IntVec v(ctx.rank());
  do {
    for (auto& x : v) x = d(rng);
  } while (std::all_of(v.begin(), v.begin() + 2 * ctx.genus, [](Int x) { return x == 0; }));
  return v;
}

// Arf invariant as the value q takes most often.
int arf_by_majority(const QuadraticForm& q) {
  const Mask total = Mask{1} << (2 * q.genus());
  std::uint64_t ones = 0;
  for (Mask x = 0; x < total; ++x) ones += q(x);
  return ones * 2 > total ? 1 : 0;
}

}  // namespace

TEST_CASE("twist value examples") {
  CHECK(twist_value(3, 5, 0, 7, 0) == 3);
  CHECK(twist_value(2, 3, 1, 1, 0) == 5);
  CHECK(twist_value(2, 3, 1, 1, 4) == 1);
  for (Int r : {0, 3, 5})
    for (Int l = -6; l <= 6; ++l) {
      Int iterated = 1;
      for (Int i = 0; i < (l < 0 ? -l : l); ++i) iterated = twist_value(iterated, 2, 1, l < 0 ? -1 : 1, r);
      CHECK(twist_value(1, 2, 1, l, r) == iterated);
      CHECK(twist_value(1, 2, 1, l, r) == reduce_residue(1 + 2 * l, r));
    }
}

TEST_CASE("twist action on classes and windings") {
  Context ctx(0, 1, 0);
  std::map<std::string, HomologyCurve> curves{{"a", {"a", {1, 0}, 0}}, {"c", {"c", {1, 0}, 3}}};
  HomologyCurve b{"b", {0, 1}, 5};
  CHECK(act(ctx, curves, {}, b) == b);
  auto moved = act(ctx, curves, {{"a", 1}}, b);
  CHECK(moved.hclass == IntVec{-1, 1});
  CHECK(moved.winding == 5);
  auto back = act(ctx, curves, {{"c", 1}, {"c", -1}}, b);
  CHECK(back == b);
  CHECK(act(ctx, curves, {{"c", 1}}, b).winding == 2);
  CHECK_THROWS_AS(act(ctx, curves, {{"zz", 1}}, b), Error);
}

TEST_CASE("coherence") {
  for (Int k = -4; k <= 6; ++k) {
    // pants with values 0, 1-k, k when oriented with P to the right: the sum
    // is -chi(P); reversing all three puts P on the left.
    CHECK(coherence_check({0, 1 - k, k}, 1, 0));
    CHECK(coherence_check({0, -(1 - k), -k}, -1, 0));
  }
  CHECK(coherence_check({7, -7}, 0, 0));
  CHECK(coherence_check({1}, 1, 0));
  CHECK(coherence_check({5}, 1, 4));
  CHECK_FALSE(coherence_check({2}, 1, 0));
}

TEST_CASE("admissibility") {
  Context ctx(4, 2, 1);
  CHECK(is_admissible(ctx, {"a1", {1, 0, 0, 0, 0}, 0}));
  CHECK(is_admissible(ctx, {"a1", {1, 0, 0, 0, 0}, 8}));
  CHECK_FALSE(is_admissible(ctx, {"x", {1, 0, 0, 0, 0}, 1}));
  CHECK_FALSE(is_admissible(ctx, {"sep", {0, 0, 0, 0, 0}, 0}));
  CHECK_FALSE(is_admissible(ctx, {"bdry", {0, 0, 0, 0, 1}, 0}));
}

TEST_CASE("reduction") {
  WindingFunction f(Context(4, 1, 0));
  f = f.with_value("x", 0).with_value("y", 2).with_value("z", 3);
  auto g = f.reduce_mod(2);
  CHECK(g.values().at("x") == 0);
  CHECK(g.values().at("y") == 0);
  CHECK(g.values().at("z") == 1);
  CHECK(f.values().at("z") == 3);
  CHECK(f.reduce_mod(2).reduce_mod(1).values() == f.reduce_mod(1).values());
  CHECK_THROWS_AS(f.reduce_mod(3), Error);
  CHECK_THROWS_AS(f.reduce_mod(0), Error);
  WindingFunction framing(Context(0, 1, 0));
  framing = framing.with_value("x", -7).with_doubled_arc("t", 3);
  for (Int r = 1; r <= 9; ++r) CHECK(framing.reduce_mod(r).values().at("x") == reduce_residue(-7, r));
  CHECK(framing.reduce_mod(4).doubled_arc_values().at("t") == 3);
  CHECK_THROWS_AS(framing.with_doubled_arc("u", 2), Error);
}

TEST_CASE("nonconmax gcd") {
  CHECK(nonconmax_gcd({1}, 4, 12) == 4);
  CHECK(nonconmax_gcd({0}, 3, 12) == 12);
  CHECK(nonconmax_gcd({2}, 4, 8) == 8);
  CHECK_THROWS_AS(nonconmax_gcd({1}, 5, 12), Error);
  std::mt19937 rng(1);
  for (int t = 0; t < 300; ++t) {
    Int r = 1 + rng() % 6, r_prime = r * (1 + rng() % 6);
    IntVec ks{static_cast<Int>(rng() % 9), static_cast<Int>(rng() % 9)};
    Int out = nonconmax_gcd(ks, r, r_prime);
    CHECK(r_prime % out == 0);
    CHECK(out % r == 0);
  }
}

TEST_CASE("twists are symplectic and admissible twists preserve windings") {
  std::mt19937 rng(9);
  for (Int r : {0, 2, 3, 4}) {
    for (int trial = 0; trial < 100; ++trial) {
      Context ctx(r, 1 + trial % 3, trial % 2);
      std::map<std::string, HomologyCurve> letters;
      for (int i = 0; i < 3; ++i) {
        HomologyCurve c{"c" + std::to_string(i), random_class(rng, ctx, 1), 0};
        CHECK(is_admissible(ctx, c));
        letters[c.name] = c;
      }
      TwistWord w;
      for (int i = 0; i < 4; ++i) w.emplace_back("c" + std::to_string(rng() % 3), static_cast<Int>(rng() % 5) - 2);
      HomologyCurve x{"x", random_class(rng, ctx), static_cast<Int>(rng() % 7)};
      HomologyCurve y{"y", random_class(rng, ctx), static_cast<Int>(rng() % 7)};
      auto x2 = act(ctx, letters, w, x), y2 = act(ctx, letters, w, y);
      CHECK(pairing(x2.hclass, y2.hclass, ctx.genus) == pairing(x.hclass, y.hclass, ctx.genus));
      CHECK(x2.winding == ctx.reduce(x.winding));
    }
  }
}

TEST_CASE("a twist about a non-admissible primitive curve moves some winding") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    Context ctx(3 + trial % 3, 1 + trial % 3, 1);
    IntVec cls = random_class(rng, ctx, 1);
    auto y = dual_witness(cls, ctx.genus);
    if (!y) continue;
    CHECK(pairing(*y, cls, ctx.genus) == 1);
    HomologyCurve c{"c", cls, 1 + static_cast<Int>(rng() % (ctx.modulus - 1))};
    auto moved = act(ctx, {{"c", c}}, {{"c", 1}}, HomologyCurve{"y", *y, 0});
    CHECK(moved.winding == c.winding);
  }
}

TEST_CASE("reduction commutes with twist values") {
  for (Int a = -5; a <= 5; ++a)
    for (Int c = -3; c <= 3; ++c)
      for (Int p = -2; p <= 2; ++p)
        CHECK(reduce_residue(twist_value(a, c, p, 3, 12), 4) ==
              twist_value(reduce_residue(a, 4), reduce_residue(c, 4), p, 3, 4));
}

TEST_CASE("mod 2 forms") {
  QuadraticForm zero(2, {0, 0, 0, 0});
  CHECK(zero.arf() == 0);
  QuadraticForm one(1, {1, 1});
  CHECK(one.arf() == 1);
  CHECK(arf_by_majority(one) == 1);
  // q(x+y) = q(x) + q(y) + <x,y>
  for (Mask x = 0; x < 16; ++x)
    for (Mask y = 0; y < 16; ++y) {
      QuadraticForm q(2, {1, 0, 1, 1});
      CHECK(q(x ^ y) == (q(x) ^ q(y) ^ pairing_mod2(x, y, 2)));
    }
  auto from_framing = quadratic_form_from_windings(1, {0, 0}, 0);
  CHECK(from_framing.basis_values() == std::vector<int>{1, 1});
  CHECK_THROWS_AS(quadratic_form_from_windings(1, {0, 0}, 3), Error);
}

TEST_CASE("transvections along q = 1 vectors preserve q; q = 0 vectors do not") {
  for (int g = 1; g <= 3; ++g) {
    const Mask total = Mask{1} << (2 * g);
    for (Mask a = 0; a < total; ++a) {
      std::vector<int> vals;
      for (int i = 0; i < 2 * g; ++i) vals.push_back((a >> i) & 1U);
      QuadraticForm q(g, vals);
      for (Mask v = 1; v < total; ++v) {
        bool preserved = true;
        for (Mask x = 0; x < total; ++x) preserved = preserved && q(transvect(x, v, g)) == q(x);
        CHECK(preserved == (q(v) == 1));
      }
    }
  }
}

TEST_CASE("Arf census") {
  CHECK(enumerate_forms(1) == ArfCensus{3, 1});
  CHECK(enumerate_forms(2) == ArfCensus{10, 6});
  for (int g = 1; g <= 4; ++g) {
    ArfCensus oracle;
    const Mask total = Mask{1} << (2 * g);
    for (Mask a = 0; a < total; ++a) {
      std::vector<int> vals;
      for (int i = 0; i < 2 * g; ++i) vals.push_back((a >> i) & 1U);
      (arf_by_majority(QuadraticForm(g, vals)) ? oracle.odd : oracle.even) += 1;
    }
    auto c = enumerate_forms(g);
    CHECK(c == oracle);
    CHECK(c.even == (std::uint64_t{1} << (g - 1)) * ((std::uint64_t{1} << g) + 1));
  }
  CHECK_THROWS_AS(enumerate_forms(7), Error);
}

TEST_CASE("winding scripts") {
  auto s = parse_script(R"(
    context 1 1 4;
    curve a = (1 0 0) : 0;
    curve b = (0, 1, 0) : 5;
    word a^2 b^-1 a;
  )");
  CHECK(s.ctx.modulus == 4);
  CHECK(s.curves.size() == 2);
  CHECK(s.curves[1].winding == 1);
  CHECK(s.word.size() == 3);
  CHECK(s.word[1] == std::pair<std::string, Int>{"b", -1});
  CHECK(s.word[2].second == 1);
  CHECK_THROWS_AS(parse_script("curve a = (1 0) : 0;"), Error);
  CHECK_THROWS_AS(parse_script("context 1 0 0; curve a = (1) : 0;"), Error);
}
