#include "rspin/picard.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <mutex>
#include <sstream>

namespace rspin::picard {

namespace {

int sign_changes(const std::vector<mpz_class>& coeffs) {
  int changes = 0;
  int last = 0;
  for (const auto& c : coeffs) {
    int s = sgn(c);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

Signature signature_of(const IntMatrix& a) {
  const std::size_t n = a.size();
  // Faddeev-LeVerrier: coeff[k] is the coefficient of x^k in det(xI - A).
  std::vector<mpz_class> coeff(n + 1);
  coeff[n] = 1;
  std::vector<std::vector<mpz_class>> m(n, std::vector<mpz_class>(n, 0));
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::vector<mpz_class>> next(n, std::vector<mpz_class>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        mpz_class s = 0;
        for (std::size_t l = 0; l < n; ++l) s += mpz_class(static_cast<long>(a[i][l])) * m[l][j];
        next[i][j] = s;
      }
      next[i][i] += coeff[n - k + 1];
    }
    m = std::move(next);
    mpz_class trace = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) trace += mpz_class(static_cast<long>(a[i][l])) * m[l][i];
    coeff[n - k] = -trace / static_cast<long>(k);
  }

  Signature sig;
  std::size_t low = 0;
  while (low < n && coeff[low] == 0) ++low;
  sig.zero = static_cast<int>(low);
  sig.positive = sign_changes(coeff);
  std::vector<mpz_class> reflected(coeff);
  for (std::size_t k = 1; k < reflected.size(); k += 2) reflected[k] = -reflected[k];
  sig.negative = sign_changes(reflected);
  return sig;
}

PicardLattice::PicardLattice(IntMatrix gram, IntVec canonical, std::string name,
                             bool simply_connected)
    : gram_(std::move(gram)),
      canonical_(std::move(canonical)),
      name_(std::move(name)),
      simply_connected_(simply_connected) {
  const std::size_t n = gram_.size();
  if (n == 0) fail(ErrorKind::InvalidLattice, "lattice rank must be positive");
  for (const auto& row : gram_)
    if (row.size() != n) fail(ErrorKind::InvalidLattice, "gram matrix is not square");
  if (canonical_.size() != n)
    fail(ErrorKind::InvalidLattice, "canonical vector length does not match rank");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (gram_[i][j] != gram_[j][i]) fail(ErrorKind::InvalidLattice, "gram matrix is not symmetric");
  signature_ = signature_of(gram_);
  if (signature_.zero != 0) fail(ErrorKind::InvalidLattice, "gram matrix is degenerate");
  if (signature_.positive != 1)
    fail(ErrorKind::InvalidLattice, "signature is not (1, rank-1) (Hodge index)");
}

Int PicardLattice::pair(const IntVec& a, const IntVec& b) const {
  Int total = 0;
  for (std::size_t i = 0; i < gram_.size(); ++i) {
    if (a[i] == 0) continue;
    Int row = 0;
    for (std::size_t j = 0; j < gram_.size(); ++j) row = checked_add(row, checked_mul(gram_[i][j], b[j]));
    total = checked_add(total, checked_mul(a[i], row));
  }
  return total;
}

LatticePtr make_lattice(IntMatrix gram, IntVec canonical, std::string name, bool simply_connected) {
  return std::make_shared<const PicardLattice>(std::move(gram), std::move(canonical), std::move(name),
                                               simply_connected);
}

DivisorClass::DivisorClass(LatticePtr lattice, IntVec coords)
    : lattice_(std::move(lattice)), coords_(std::move(coords)) {
  if (!lattice_) fail(ErrorKind::InvalidLattice, "divisor class without a lattice");
  if (static_cast<int>(coords_.size()) != lattice_->rank())
    fail(ErrorKind::LatticeMismatch, "coordinate length " + std::to_string(coords_.size()) +
                                         " does not match lattice rank " +
                                         std::to_string(lattice_->rank()));
}

DivisorClass DivisorClass::canonical(const LatticePtr& lattice) {
  return DivisorClass(lattice, lattice->canonical());
}

DivisorClass DivisorClass::zero(const LatticePtr& lattice) {
  return DivisorClass(lattice, IntVec(static_cast<std::size_t>(lattice->rank()), 0));
}

bool DivisorClass::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](Int v) { return v == 0; });
}

void require_same_lattice(const DivisorClass& a, const DivisorClass& b) {
  if (a.lattice() == b.lattice()) return;
  if (!(*a.lattice() == *b.lattice()))
    fail(ErrorKind::LatticeMismatch, "classes live on different lattices");
}

DivisorClass DivisorClass::operator+(const DivisorClass& other) const {
  require_same_lattice(*this, other);
  IntVec out(coords_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = checked_add(coords_[i], other.coords_[i]);
  return DivisorClass(lattice_, std::move(out));
}

DivisorClass DivisorClass::operator-(const DivisorClass& other) const { return *this + other * -1; }

DivisorClass DivisorClass::operator*(Int k) const {
  IntVec out(coords_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = checked_mul(coords_[i], k);
  return DivisorClass(lattice_, std::move(out));
}

bool DivisorClass::operator==(const DivisorClass& other) const {
  return coords_ == other.coords_ &&
         (lattice_ == other.lattice_ || *lattice_ == *other.lattice_);
}

Int intersect(const DivisorClass& a, const DivisorClass& b) {
  require_same_lattice(a, b);
  return a.lattice()->pair(a.coords(), b.coords());
}

std::optional<DivisorClass> AdjointReport::root() const {
  if (degenerate) return std::nullopt;
  IntVec m = adjoint.coords();
  for (auto& v : m) v /= divisibility;
  return DivisorClass(adjoint.lattice(), std::move(m));
}

AdjointReport adjoint_and_root(const DivisorClass& line_bundle) {
  DivisorClass adjoint = DivisorClass::canonical(line_bundle.lattice()) + line_bundle;
  Int r = gcd_of(adjoint.coords());
  return AdjointReport{adjoint, r, r == 0};
}

Int genus_of_section(const DivisorClass& line_bundle) {
  DivisorClass adjoint = DivisorClass::canonical(line_bundle.lattice()) + line_bundle;
  Int product = intersect(line_bundle, adjoint);
  if (product % 2 != 0)
    fail(ErrorKind::NotRepresentable,
         "L.(K+L) = " + std::to_string(product) + " is odd for L = " + line_bundle.str() +
             "; the class and canonical vector are inconsistent");
  return 1 + product / 2;
}

Int smoothed_genus(const DivisorClass& c, const DivisorClass& d) {
  require_same_lattice(c, d);
  Int g = genus_of_section(c) + genus_of_section(d) + intersect(c, d) - 1;
  Int direct = genus_of_section(c + d);
  if (g != direct)
    fail(ErrorKind::Internal, "smoothed genus " + std::to_string(g) +
                                  " disagrees with adjunction genus " + std::to_string(direct));
  return g;
}

// ---------------------------------------------------------------------------
// JetLedger

JetLedger::JetLedger(LatticePtr lattice) : lattice_(std::move(lattice)) {}

JetLedger::JetLedger(const JetLedger& other) : lattice_(other.lattice_) {
  std::shared_lock lock(other.mutex_);
  entries_ = other.entries_;
}

JetLedger& JetLedger::operator=(const JetLedger& other) {
  if (this == &other) return *this;
  std::map<IntVec, Entry> copy;
  {
    std::shared_lock lock(other.mutex_);
    copy = other.entries_;
  }
  std::unique_lock lock(mutex_);
  lattice_ = other.lattice_;
  entries_ = std::move(copy);
  return *this;
}

int JetLedger::declare(const DivisorClass& cls, int level, std::string note) {
  if (!(*cls.lattice() == *lattice_)) fail(ErrorKind::LatticeMismatch, "ledger lattice mismatch");
  if (level < 0) fail(ErrorKind::InconsistentInput, "jet level must be nonnegative");
  std::unique_lock lock(mutex_);
  auto [it, inserted] = entries_.try_emplace(cls.coords(), Entry{level, std::move(note)});
  if (!inserted && it->second.level < level) it->second = Entry{level, std::move(note)};
  return it->second.level;
}

std::optional<int> JetLedger::level(const DivisorClass& cls) const {
  if (!(*cls.lattice() == *lattice_)) fail(ErrorKind::LatticeMismatch, "ledger lattice mismatch");
  std::shared_lock lock(mutex_);
  auto it = entries_.find(cls.coords());
  if (it == entries_.end()) return std::nullopt;
  return it->second.level;
}

std::map<IntVec, JetLedger::Entry> JetLedger::entries() const {
  std::shared_lock lock(mutex_);
  return entries_;
}

std::size_t JetLedger::size() const {
  std::shared_lock lock(mutex_);
  return entries_.size();
}

void JetLedger::close_under_composition(int max_terms) {
  const auto base = entries();
  std::map<IntVec, int> frontier;
  for (const auto& [coords, e] : base)
    if (e.level > 0) frontier[coords] = e.level;
  const auto generators = frontier;
  for (int terms = 2; terms <= max_terms; ++terms) {
    std::map<IntVec, int> next;
    for (const auto& [x, lx] : frontier) {
      for (const auto& [b, lb] : generators) {
        IntVec sum(x.size());
        for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = checked_add(x[i], b[i]);
        int& slot = next[sum];
        slot = std::max(slot, lx + lb);
      }
    }
    for (const auto& [coords, lvl] : next)
      declare(DivisorClass(lattice_, coords), lvl, "composed from ledger entries");
    frontier = std::move(next);
  }
}

int jet_compose(JetLedger& ledger, const DivisorClass& a, const DivisorClass& b) {
  auto la = ledger.level(a);
  auto lb = ledger.level(b);
  if (!la) fail(ErrorKind::Uncertified, "no ledger entry for " + a.str());
  if (!lb) fail(ErrorKind::Uncertified, "no ledger entry for " + b.str());
  return ledger.declare(a + b, *la + *lb, "jet(" + a.str() + ")+jet(" + b.str() + ")");
}

std::optional<HypothesisCertificate> theorem_hypothesis_check(
    const DivisorClass& line_bundle, const JetLedger& ledger,
    const std::vector<DivisorClass>& candidates, int max_terms) {
  JetLedger closed(ledger);
  closed.close_under_composition(max_terms);
  const auto& lattice = line_bundle.lattice();

  std::vector<std::pair<IntVec, int>> order;
  for (const auto& c : candidates) {
    require_same_lattice(c, line_bundle);
    if (auto lvl = closed.level(c)) order.emplace_back(c.coords(), *lvl);
  }
  std::vector<std::pair<IntVec, int>> rest;
  for (const auto& [coords, e] : closed.entries()) rest.emplace_back(coords, e.level);
  std::stable_sort(rest.begin(), rest.end(),
                   [](const auto& x, const auto& y) { return x.second > y.second; });
  order.insert(order.end(), rest.begin(), rest.end());

  for (const auto& [coords, lvl] : order) {
    if (lvl < kRequiredJetLevel) continue;
    DivisorClass first(lattice, coords);
    DivisorClass second = line_bundle - first;
    auto l2 = closed.level(second);
    if (l2 && *l2 >= 1) return HypothesisCertificate{first, second, lvl, *l2};
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Lefschetz pencils with full monodromy

const char* to_string(LefschetzVerdict v) {
  switch (v) {
    case LefschetzVerdict::FullMonodromyPencilExists: return "full-monodromy-pencil-exists";
    case LefschetzVerdict::NoFullMonodromyPencil: return "no-full-monodromy-pencil";
    case LefschetzVerdict::ExceptionalK3: return "exceptional-k3-rank-1";
    case LefschetzVerdict::ExceptionalProjectivePlane: return "exceptional-projective-plane";
    case LefschetzVerdict::ExceptionalDelPezzo: return "exceptional-del-pezzo";
  }
  return "unknown";
}

LefschetzDecision lefschetz_full_decision(const PicardLattice& lattice,
                                          const std::optional<IntVec>& ample_generator) {
  if (!lattice.simply_connected())
    fail(ErrorKind::Precondition, "the decision requires a simply connected surface");
  LefschetzDecision out;
  if (lattice.rank() >= 2) {
    out.verdict = LefschetzVerdict::FullMonodromyPencilExists;
    out.surface_class = "rank>=2";
    out.reasoning =
        "Picard rank >= 2: some L satisfying the theorem hypotheses has adjoint class without a "
        "nontrivial root, so a pencil in |L| has monodromy Mod(E)";
    return out;
  }

  const Int q = lattice.gram()[0][0];
  Int gen = ample_generator ? (ample_generator->size() == 1 ? (*ample_generator)[0] : 0) : (q > 0 ? 1 : -1);
  if (gen == 0) fail(ErrorKind::InconsistentInput, "ample generator must be a rank-1 class");
  if (q * gen * gen <= 0) fail(ErrorKind::InconsistentInput, "generator is not ample (L.L <= 0)");
  const Int k = lattice.canonical()[0];
  if (k % gen != 0)
    fail(ErrorKind::InconsistentInput, "canonical class is not an integer multiple of the generator");
  const Int n = k / gen;
  out.canonical_multiple = n;
  // Adjoint of mL is (m+n)L; it has no nontrivial root iff |m+n| <= 1.
  for (Int m = std::max<Int>(1, -n - 1); m <= 1 - n; ++m) out.full_monodromy_multiples.push_back(m);

  std::ostringstream why;
  why << "rank 1 with K = " << n << "L: adjoint of mL is (m" << (n < 0 ? "" : "+") << n << ")L";
  if (n > 0) {
    out.verdict = LefschetzVerdict::NoFullMonodromyPencil;
    out.surface_class = "neither";
    why << "; |m+n| >= 2 for every m >= 1, so every pencil has a nontrivial root";
  } else if (n == 0) {
    out.verdict = LefschetzVerdict::ExceptionalK3;
    out.surface_class = "K3";
    why << "; only m = 1 avoids a root: K3 of Picard rank 1, excluded by hypothesis";
  } else if (n == -3 && q == 1) {
    out.verdict = LefschetzVerdict::ExceptionalProjectivePlane;
    out.surface_class = "del Pezzo (P2)";
    why << "; P2 is excluded by hypothesis, full monodromy occurs in low degree";
  } else {
    out.verdict = LefschetzVerdict::ExceptionalDelPezzo;
    out.surface_class = "del Pezzo";
    why << "; a rank-1 del Pezzo surface must be P2, this lattice does not match it";
  }
  out.reasoning = why.str();
  return out;
}

}  // namespace rspin::picard
