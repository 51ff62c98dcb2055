#pragma once

// Integer Picard lattices of simply connected surfaces: intersection form,
// canonical class, adjunction, maximal roots of the adjoint class, and the
// jet-ampleness bookkeeping used to certify the hypotheses of the
// monodromy theorem.

#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "rspin/common.hpp"

namespace rspin::picard {

using IntMatrix = std::vector<IntVec>;

struct Signature {
  int positive = 0;
  int negative = 0;
  int zero = 0;
  bool operator==(const Signature&) const = default;
};

/// Free Z-module with a symmetric nondegenerate form of signature (1, rank-1)
/// and a chosen canonical vector. Immutable after construction.
class PicardLattice {
 public:
  PicardLattice(IntMatrix gram, IntVec canonical, std::string name = {},
                bool simply_connected = true);

  int rank() const { return static_cast<int>(gram_.size()); }
  const IntMatrix& gram() const { return gram_; }
  const IntVec& canonical() const { return canonical_; }
  const std::string& name() const { return name_; }
  bool simply_connected() const { return simply_connected_; }

  Int pair(const IntVec& a, const IntVec& b) const;
  Signature signature() const { return signature_; }

  bool operator==(const PicardLattice& other) const {
    return gram_ == other.gram_ && canonical_ == other.canonical_;
  }

 private:
  IntMatrix gram_;
  IntVec canonical_;
  std::string name_;
  bool simply_connected_;
  Signature signature_;
};

using LatticePtr = std::shared_ptr<const PicardLattice>;

LatticePtr make_lattice(IntMatrix gram, IntVec canonical, std::string name = {},
                        bool simply_connected = true);

/// Inertia of a symmetric integer matrix from the signs of its characteristic
/// polynomial coefficients (exact: the polynomial is real-rooted).
Signature signature_of(const IntMatrix& symmetric);

class DivisorClass {
 public:
  DivisorClass(LatticePtr lattice, IntVec coords);

  static DivisorClass canonical(const LatticePtr& lattice);
  static DivisorClass zero(const LatticePtr& lattice);

  const IntVec& coords() const { return coords_; }
  const LatticePtr& lattice() const { return lattice_; }
  bool is_zero() const;

  DivisorClass operator+(const DivisorClass& other) const;
  DivisorClass operator-(const DivisorClass& other) const;
  DivisorClass operator*(Int k) const;
  bool operator==(const DivisorClass& other) const;

  std::string str() const { return format_vec(coords_); }

 private:
  LatticePtr lattice_;
  IntVec coords_;
};

/// Throws LatticeMismatch unless both classes live on equal lattices.
void require_same_lattice(const DivisorClass& a, const DivisorClass& b);

Int intersect(const DivisorClass& a, const DivisorClass& b);

struct AdjointReport {
  DivisorClass adjoint;  // K + L
  Int divisibility = 0;  // gcd of coordinates; 0 when degenerate
  bool degenerate = false;

  /// The primitive class M with adjoint = divisibility * M.
  std::optional<DivisorClass> root() const;
};

AdjointReport adjoint_and_root(const DivisorClass& line_bundle);

/// Genus of a smooth section, g = 1 + L.(K+L)/2. Odd products are rejected.
Int genus_of_section(const DivisorClass& line_bundle);

/// Genus of the smoothing of C + D glued along their C.D intersection points.
Int smoothed_genus(const DivisorClass& c, const DivisorClass& d);

/// Certified jet-ampleness levels. Levels only ever increase; safe for one
/// writer and many concurrent readers.
class JetLedger {
 public:
  struct Entry {
    int level = 0;
    std::string note;
  };

  explicit JetLedger(LatticePtr lattice);
  JetLedger(const JetLedger& other);
  JetLedger& operator=(const JetLedger& other);

  const LatticePtr& lattice() const { return lattice_; }

  /// Records `level` for the class unless a higher level is already certified.
  /// Returns the level stored afterwards.
  int declare(const DivisorClass& cls, int level, std::string note);
  std::optional<int> level(const DivisorClass& cls) const;
  std::map<IntVec, Entry> entries() const;
  std::size_t size() const;

  /// Adds every sum of at most `max_terms` current entries at the summed level.
  void close_under_composition(int max_terms);

 private:
  LatticePtr lattice_;
  mutable std::shared_mutex mutex_;
  std::map<IntVec, Entry> entries_;
};

/// Certifies A+B at jet(A)+jet(B). Throws Uncertified when an input lacks an entry.
int jet_compose(JetLedger& ledger, const DivisorClass& a, const DivisorClass& b);

struct HypothesisCertificate {
  DivisorClass jet_part;         // L1, at least 6-jet ample
  DivisorClass very_ample_part;  // L2, at least very ample
  int jet_level = 0;
  int very_ample_level = 0;
};

inline constexpr int kRequiredJetLevel = 6;
inline constexpr int kDefaultClosureTerms = 12;

/// Sound, incomplete search for L = L1 + L2 with jet(L1) >= 6 and jet(L2) >= 1
/// among the ledger, its composition closure, and caller-proposed candidates.
std::optional<HypothesisCertificate> theorem_hypothesis_check(
    const DivisorClass& line_bundle, const JetLedger& ledger,
    const std::vector<DivisorClass>& candidates = {},
    int max_terms = kDefaultClosureTerms);

enum class LefschetzVerdict {
  FullMonodromyPencilExists,
  NoFullMonodromyPencil,
  ExceptionalK3,
  ExceptionalProjectivePlane,
  ExceptionalDelPezzo,
};

const char* to_string(LefschetzVerdict v);

struct LefschetzDecision {
  LefschetzVerdict verdict = LefschetzVerdict::NoFullMonodromyPencil;
  std::string surface_class;
  std::optional<Int> canonical_multiple;  // n with K = n * generator (rank 1)
  std::vector<Int> full_monodromy_multiples;  // m >= 1 with |m + n| <= 1
  std::string reasoning;
};

LefschetzDecision lefschetz_full_decision(const PicardLattice& lattice,
                                          const std::optional<IntVec>& ample_generator = {});

}  // namespace rspin::picard
