#include "rspin/braidcalc.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "rspin/text.hpp"

namespace rspin::braidcalc {

BraidGenerator BraidGenerator::meridian(int i, int j, Int e) {
  BraidGenerator g;
  g.kind = GenKind::Meridian;
  g.i = std::min(i, j);
  g.j = std::max(i, j);
  g.exponent = e;
  return g;
}

BraidGenerator BraidGenerator::boundary(int i, Int e) {
  BraidGenerator g;
  g.kind = GenKind::Boundary;
  g.i = i;
  g.exponent = e;
  return g;
}

BraidGenerator BraidGenerator::stabilizer(std::string tag, Int e) {
  BraidGenerator g;
  g.kind = GenKind::Stabilizer;
  g.tag = std::move(tag);
  g.exponent = e;
  return g;
}

KernelRegistry::KernelRegistry() {
  tags_["commutator"] = "commutators of Mod(B') for a five-holed boundary-adjacent sphere B'";
  tags_["xyzw"] = "T_x T_y T_z^-1 T_w^-1 on a five-holed boundary-adjacent sphere";
}

void KernelRegistry::add(const std::string& tag, const std::string& provenance) {
  if (tag.empty() || provenance.empty())
    fail(ErrorKind::UnknownKernelTag, "kernel tags need a name and a provenance note");
  tags_[tag] = provenance;
}

const KernelRegistry& default_registry() {
  static const KernelRegistry reg;
  return reg;
}

namespace {

void check_index(int i, int d) {
  if (i < 1 || i > d)
    fail(ErrorKind::IndexOutOfRange, "index " + std::to_string(i) + " outside 1.." + std::to_string(d));
}

}  // namespace

IntVec psi(const BraidWord& word, int d, const KernelRegistry& reg) {
  if (d < 3) fail(ErrorKind::Precondition, "psi needs d >= 3");
  IntVec v(static_cast<std::size_t>(d), 0);
  for (const auto& g : word) {
    switch (g.kind) {
      case GenKind::Meridian:
        check_index(g.i, d);
        check_index(g.j, d);
        if (g.i == g.j) fail(ErrorKind::IndexOutOfRange, "meridian needs two distinct indices");
        v[g.i - 1] = checked_add(v[g.i - 1], g.exponent);
        v[g.j - 1] = checked_add(v[g.j - 1], g.exponent);
        break;
      case GenKind::Boundary:
        check_index(g.i, d);
        break;
      case GenKind::Stabilizer:
        if (!reg.contains(g.tag)) fail(ErrorKind::UnknownKernelTag, "unregistered kernel tag '" + g.tag + "'");
        break;
      case GenKind::PointPush:
      case GenKind::HalfTwist:
        fail(ErrorKind::UnsupportedType,
             "psi is only defined here on meridians, boundary twists and registered kernel elements");
    }
  }
  return v;
}

bool in_stabilizer(const BraidWord& word, int d, const KernelRegistry& reg) {
  auto v = psi(word, d, reg);
  return std::all_of(v.begin(), v.end(), [](Int x) { return x == 0; });
}

IntVec lambda(const BraidWord& word, int genus) {
  IntVec out(static_cast<std::size_t>(2 * genus), 0);
  for (const auto& g : word) {
    if (g.kind != GenKind::PointPush) continue;
    if (!g.label) fail(ErrorKind::Unlabeled, "point push without a homology label");
    if (g.label->size() != out.size())
      fail(ErrorKind::InconsistentInput, "point-push label has length " + std::to_string(g.label->size()) +
                                             ", expected " + std::to_string(out.size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = checked_add(out[i], checked_mul(g.exponent, (*g.label)[i]));
  }
  return out;
}

CorrectionPlan main_lemma_plan(const IntVec& k) {
  const int d = static_cast<int>(k.size());
  if (d < 6) fail(ErrorKind::Precondition, "the correction procedure needs d >= 6, got " + std::to_string(d));
  Int total = 0;
  for (Int x : k) total = checked_add(total, x);
  if (total % 2 != 0) fail(ErrorKind::Parity, "coordinate sum is odd; the vector is not a psi image");

  CorrectionPlan plan;
  Int tail = 0;
  for (int i = 4; i <= d; ++i) tail = checked_add(tail, k[i - 1]);
  plan.k_prime = {k[0], k[1], k[2] - tail};
  const Int k1 = plan.k_prime[0], k2 = plan.k_prime[1], k3 = plan.k_prime[2];
  if ((k1 + k2 + k3) % 2 != 0) fail(ErrorKind::Internal, "k1' + k2' + k3' is odd");
  plan.t = (k2 - k1 - k3) / 2;
  plan.ell = k1 - k2;

  for (int i = 4; i <= d; ++i)
    if (k[i - 1] != 0) plan.word.push_back(BraidGenerator::meridian(3, i, -k[i - 1]));
  if (plan.t != 0) {
    plan.word.push_back(BraidGenerator::meridian(3, 4, plan.t));
    plan.word.push_back(BraidGenerator::meridian(3, 5, plan.t));
    plan.word.push_back(BraidGenerator::meridian(4, 5, -plan.t));
  }
  if (k1 != 0) plan.word.push_back(BraidGenerator::meridian(1, 2, -k1));
  if (plan.ell != 0) plan.word.push_back(BraidGenerator::meridian(2, 3, plan.ell));

  auto image = psi(plan.word, d);
  for (int i = 0; i < d; ++i)
    if (image[i] + k[i] != 0) fail(ErrorKind::Internal, "correction word does not cancel psi");
  return plan;
}

CorrectionPlan main_lemma_plan(const IntVec& k, int far, int shared, int third) {
  const int d = static_cast<int>(k.size());
  for (int x : {far, shared, third}) check_index(x, d);
  if (far == shared || far == third || shared == third)
    fail(ErrorKind::IndexOutOfRange, "the three distinguished indices must differ");
  // perm[new - 1] = old index
  std::vector<int> perm{far, shared, third};
  for (int i = 1; i <= d; ++i)
    if (i != far && i != shared && i != third) perm.push_back(i);
  IntVec permuted(k.size());
  for (int n = 0; n < d; ++n) permuted[n] = k[perm[n] - 1];
  CorrectionPlan plan = main_lemma_plan(permuted);
  for (auto& g : plan.word) g = BraidGenerator::meridian(perm[g.i - 1], perm[g.j - 1], g.exponent);
  auto image = psi(plan.word, d);
  for (int i = 0; i < d; ++i)
    if (image[i] + k[i] != 0) fail(ErrorKind::Internal, "relabelled correction word does not cancel psi");
  return plan;
}

std::string format_word(const BraidWord& word) {
  std::ostringstream os;
  for (std::size_t n = 0; n < word.size(); ++n) {
    const auto& g = word[n];
    if (n) os << ' ';
    switch (g.kind) {
      case GenKind::Meridian: os << "m(" << g.i << ',' << g.j << ')'; break;
      case GenKind::Boundary: os << "b(" << g.i << ')'; break;
      case GenKind::Stabilizer: os << "s(" << g.tag << ')'; break;
      case GenKind::HalfTwist: os << "h(" << g.i << ',' << g.j << ')'; break;
      case GenKind::PointPush:
        os << "p(" << g.i;
        if (g.label) {
          os << ';';
          for (Int v : *g.label) os << ' ' << v;
        }
        os << ')';
        break;
    }
    if (g.exponent != 1) os << '^' << g.exponent;
  }
  return os.str();
}

BraidWord parse_word(const std::string& src) {
  text::Cursor cur(text::tokenize(src));
  BraidWord w;
  auto index = [&]() {
    Int v = cur.integer();
    if (v < 1 || v > 1000000) cur.error("index out of range");
    return static_cast<int>(v);
  };
  while (!cur.at_end()) {
    std::string head = cur.word();
    BraidGenerator g;
    cur.expect("(");
    if (head == "m" || head == "h") {
      int i = index();
      cur.expect(",");
      int j = index();
      if (i == j) cur.error("generator needs two distinct indices");
      g = head == "m" ? BraidGenerator::meridian(i, j) : BraidGenerator{};
      if (head == "h") {
        g.kind = GenKind::HalfTwist;
        g.i = std::min(i, j);
        g.j = std::max(i, j);
      }
    } else if (head == "b") {
      g = BraidGenerator::boundary(index());
    } else if (head == "s") {
      g = BraidGenerator::stabilizer(cur.word());
    } else if (head == "p") {
      g.kind = GenKind::PointPush;
      g.i = index();
      if (cur.accept(";")) g.label = cur.integers_until(")");
    } else {
      cur.error("unknown generator '" + head + "'");
    }
    cur.expect(")");
    if (cur.accept("^")) g.exponent = cur.integer();
    w.push_back(std::move(g));
    cur.accept(",");
  }
  return w;
}

}  // namespace rspin::braidcalc
