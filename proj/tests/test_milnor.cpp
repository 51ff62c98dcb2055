#include <random>

#include "doctest.h"
#include "rspin/milnor.hpp"

using namespace rspin;
using namespace rspin::milnor;

namespace {

std::vector<Monomial> sorted(std::vector<Monomial> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("polynomial parsing") {
  auto f = parse_polynomial("x^3+y^4");
  CHECK(f.terms().size() == 2);
  CHECK(f.degree() == 4);
  auto g = parse_polynomial("y^2 + yx^4");
  CHECK(g.terms().at({4, 1}) == 1);
  auto h = parse_polynomial("-2/3*x^2*y + 5 - x + x");
  CHECK(h.terms().size() == 2);
  CHECK(h.terms().at({2, 1}) == mpq_class(-2, 3));
  CHECK(parse_polynomial(h.str()) == h);
  CHECK_THROWS_AS(parse_polynomial("x^"), Error);
  CHECK_THROWS_AS(parse_polynomial("x ++ y"), Error);
  CHECK_THROWS_AS(parse_polynomial("z"), Error);
  CHECK_THROWS_AS(parse_polynomial(""), Error);
  CHECK_THROWS_AS(parse_polynomial("1/0"), Error);
}

TEST_CASE("jacobian") {
  auto [fx, fy] = jacobian(parse_polynomial("x^3+y^4"));
  CHECK(fx == parse_polynomial("3x^2"));
  CHECK(fy == parse_polynomial("4y^3"));
  auto [gx, gy] = jacobian(parse_polynomial("y^2+yx^4"));
  CHECK(gx == parse_polynomial("4yx^3"));
  CHECK(gy == parse_polynomial("2y+x^4"));
  auto [cx, cy] = jacobian(parse_polynomial("7"));
  CHECK(cx.is_zero());
  CHECK(cy.is_zero());
}

TEST_CASE("Milnor numbers and bases of E6 and A7") {
  auto e6 = milnor_number(parse_polynomial("x^3+y^4"));
  CHECK(e6.mu == 6);
  std::vector<Monomial> e6_basis;
  for (int a = 0; a <= 1; ++a)
    for (int b = 0; b <= 2; ++b) e6_basis.emplace_back(a, b);
  CHECK(sorted(e6.basis) == sorted(e6_basis));

  auto a7 = milnor_number(parse_polynomial("y^2+yx^4"));
  CHECK(a7.mu == 7);
  CHECK(a7.basis == std::vector<Monomial>{{0, 0}, {1, 0}, {2, 0}, {3, 0}, {0, 1}, {1, 1}, {2, 1}});

  auto node = milnor_number(parse_polynomial("x^2+y^2"));
  CHECK(node.mu == 1);
  CHECK(node.basis == std::vector<Monomial>{{0, 0}});
  CHECK(milnor_number(parse_polynomial("x + y^2")).mu == 0);
}

TEST_CASE("Brieskorn-Pham germs") {
  for (int p = 2; p <= 6; ++p)
    for (int q = 2; q <= 6; ++q) {
      std::string s = "x^" + std::to_string(p) + " + y^" + std::to_string(q);
      auto r = milnor_number(parse_polynomial(s));
      CHECK(r.mu == (p - 1) * (q - 1));
      CHECK(static_cast<Int>(r.basis.size()) == r.mu);
      CHECK(truncated_dimension(parse_polynomial(s), r.truncation + 1) == r.mu);
      CHECK(truncated_dimension(parse_polynomial(s), r.truncation + 2) == r.mu);
    }
}

TEST_CASE("Milnor number is symmetric under swapping x and y") {
  for (const char* s : {"y^2+yx^4", "x^3+y^4", "x^2y+y^5", "x^3+xy^3", "x^4+x^2y^2+y^5"}) {
    auto f = parse_polynomial(s);
    CHECK(milnor_number(f).mu == milnor_number(swap_variables(f)).mu);
  }
  CHECK(milnor_number(parse_polynomial("x^2y+y^5")).mu == 6);  // D6
  CHECK(milnor_number(parse_polynomial("x^3+xy^3")).mu == 7);  // E7
}

TEST_CASE("parallel elimination gives the same Milnor data") {
  for (const char* s : {"y^2+yx^4", "x^3+y^4", "x^4+x^2y^2+y^5", "x^5+y^6+x^2y^3"}) {
    auto f = parse_polynomial(s);
    auto a = milnor_number(f);
    auto b = milnor_number(f, kDefaultDegreeCeiling, true);
    CHECK(a.mu == b.mu);
    CHECK(a.basis == b.basis);
  }
}

TEST_CASE("non-isolated singularities are reported") {
  for (const char* s : {"x^2", "x^2y^2", "7"}) {
    try {
      milnor_number(parse_polynomial(s), 12);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotIsolated);
    }
  }
}

TEST_CASE("jet requirement") {
  auto e6 = parse_polynomial("x^3+y^4");
  CHECK(jet_requirement(e6, milnor_number(e6).basis) == 6);
  auto a7 = parse_polynomial("y^2+yx^4");
  CHECK(jet_requirement(a7, milnor_number(a7).basis) == 7);
  auto node = parse_polynomial("x^2+y^2");
  CHECK(jet_requirement(node, milnor_number(node).basis) == 4);
}

TEST_CASE("morsification references") {
  auto a7 = morsification_reference("A7");
  CHECK(a7.system.size() == 7);
  CHECK(a7.markers == std::vector<std::string>{"Delta", "arc", "Delta", "arc", "Delta", "arc", "Delta"});
  auto e6 = morsification_reference("E6");
  CHECK(curveconf::is_E_arboreal(e6.system));
  CHECK(e6.markers.empty());
  auto a2 = morsification_reference("A2");
  CHECK(a2.system.size() == 2);
  CHECK(a2.markers.empty());
  CHECK_THROWS_AS(morsification_reference("D4"), Error);
}
