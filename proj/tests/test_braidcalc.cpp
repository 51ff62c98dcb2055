#include <random>

#include "doctest.h"
#include "rspin/braidcalc.hpp"

using namespace rspin;
using namespace rspin::braidcalc;

namespace {

// Independent tally of meridian exponents per puncture.
IntVec tally(const BraidWord& w, int d) {
  IntVec v(d, 0);
  for (const auto& g : w)
    if (g.kind == GenKind::Meridian) {
      v[g.i - 1] += g.exponent;
      v[g.j - 1] += g.exponent;
    }
  return v;
}

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Internal;
}

}  // namespace

TEST_CASE("psi on generators") {
  CHECK(psi(parse_word("m(1,2)"), 4) == IntVec{1, 1, 0, 0});
  CHECK(psi(parse_word("m(3,1)^-2"), 4) == IntVec{-2, 0, -2, 0});
  CHECK(psi(parse_word("b(2)^5 s(commutator) s(xyzw)^-1"), 4) == IntVec{0, 0, 0, 0});
  CHECK(kind_of([] { psi(parse_word("m(1,5)"), 4); }) == ErrorKind::IndexOutOfRange);
  CHECK(kind_of([] { psi(parse_word("s(mystery)"), 4); }) == ErrorKind::UnknownKernelTag);
  CHECK(kind_of([] { psi(parse_word("h(1,2)"), 4); }) == ErrorKind::UnsupportedType);
  CHECK(kind_of([] { psi(parse_word("p(1; 1 0)"), 4); }) == ErrorKind::UnsupportedType);
  CHECK(kind_of([] { psi({}, 2); }) == ErrorKind::Precondition);
}

TEST_CASE("the four-twist lantern combination lies in the stabiliser") {
  auto w = parse_word("m(1,2) m(3,4) m(1,3)^-1 m(2,4)^-1");
  CHECK(in_stabilizer(w, 6));
  CHECK_FALSE(in_stabilizer(parse_word("m(1,2) m(3,4)"), 6));
}

TEST_CASE("registered tags") {
  KernelRegistry reg;
  CHECK(kind_of([&] { psi(parse_word("s(mine)"), 4, reg); }) == ErrorKind::UnknownKernelTag);
  reg.add("mine", "test fixture");
  CHECK(psi(parse_word("s(mine)^3"), 4, reg) == IntVec{0, 0, 0, 0});
  CHECK_THROWS_AS(reg.add("blank", ""), Error);
}

TEST_CASE("psi is a homomorphism to Z^d") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> idx(1, 7), ex(-4, 4), len(0, 6);
  for (int trial = 0; trial < 300; ++trial) {
    BraidWord a, b;
    for (auto* w : {&a, &b})
      for (int n = len(rng); n > 0; --n) {
        int i = idx(rng), j = idx(rng);
        if (i == j) w->push_back(BraidGenerator::boundary(i, ex(rng)));
        else w->push_back(BraidGenerator::meridian(i, j, ex(rng)));
      }
    BraidWord ab = a;
    ab.insert(ab.end(), b.begin(), b.end());
    auto pa = psi(a, 7), pb = psi(b, 7), pab = psi(ab, 7);
    for (int k = 0; k < 7; ++k) CHECK(pab[k] == pa[k] + pb[k]);
    CHECK(pab == tally(ab, 7));
    Int sum = 0;
    for (Int x : pab) sum += x;
    CHECK(sum % 2 == 0);
    CHECK(parse_word(format_word(ab)) == ab);
  }
}

TEST_CASE("correction plan cancels psi") {
  auto plan = main_lemma_plan({1, 0, 0, 0, 0, 1});
  CHECK(plan.k_prime == IntVec{1, 0, -1});
  CHECK(plan.t == 0);
  CHECK(plan.ell == 1);
  CHECK(tally(plan.word, 6) == IntVec{-1, 0, 0, 0, 0, -1});

  std::mt19937 rng(5);
  std::uniform_int_distribution<int> val(-9, 9), dim(6, 11);
  for (int trial = 0; trial < 500; ++trial) {
    IntVec k(dim(rng));
    Int sum = 0;
    for (auto& x : k) sum += x = val(rng);
    if (sum % 2) k[0] += 1;
    auto p = main_lemma_plan(k);
    auto image = tally(p.word, static_cast<int>(k.size()));
    for (std::size_t i = 0; i < k.size(); ++i) CHECK(image[i] == -k[i]);
    CHECK(p.ell == k[0] - k[1]);
    int far = 1 + trial % static_cast<int>(k.size());
    int shared = 1 + (trial + 2) % static_cast<int>(k.size());
    int third = 1 + (trial + 4) % static_cast<int>(k.size());
    auto q = main_lemma_plan(k, far, shared, third);
    auto qi = tally(q.word, static_cast<int>(k.size()));
    for (std::size_t i = 0; i < k.size(); ++i) CHECK(qi[i] == -k[i]);
  }
}

TEST_CASE("correction plan preconditions") {
  CHECK(kind_of([] { main_lemma_plan({1, 1, 0, 0, 0}); }) == ErrorKind::Precondition);
  CHECK(kind_of([] { main_lemma_plan({1, 0, 0, 0, 0, 0}); }) == ErrorKind::Parity);
  CHECK(kind_of([] { main_lemma_plan({0, 0, 0, 0, 0, 0}, 1, 1, 2); }) == ErrorKind::IndexOutOfRange);
  CHECK(main_lemma_plan({0, 0, 0, 0, 0, 0}).word.empty());
}

TEST_CASE("lambda sums point-push labels") {
  auto w = parse_word("p(1; 1 0 0 1)^2 m(1,2) p(3; 0 1 0 0)^-1");
  CHECK(lambda(w, 2) == IntVec{2, -1, 0, 2});
  CHECK(kind_of([] { lambda(parse_word("p(2)"), 2); }) == ErrorKind::Unlabeled);
  CHECK(kind_of([] { lambda(parse_word("p(2; 1 0)"), 2); }) == ErrorKind::InconsistentInput);
}

TEST_CASE("word parser errors") {
  CHECK_THROWS_AS(parse_word("q(1,2)"), Error);
  CHECK_THROWS_AS(parse_word("m(1,1)"), Error);
  CHECK_THROWS_AS(parse_word("m(1,2"), Error);
}
