#pragma once

// The abelianised simple-braid calculus: psi on words in meridian twists,
// boundary twists and declared stabiliser elements, membership in the
// principal stabiliser via psi = 0, the homology trace lambda, and the
// correction words used to make a vanishing cycle out of an arbitrary curve.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rspin/common.hpp"

namespace rspin::braidcalc {

enum class GenKind {
  Meridian,    // m(i,j): twist about a curve enclosing Delta_i and Delta_j
  Boundary,    // b(i): twist about Delta_i
  Stabilizer,  // s(tag): registered element of the stabiliser
  PointPush,   // p(i; class): push of the i-th point along a loop
  HalfTwist,   // h(i,j): simple half-twist exchanging two points
};

struct BraidGenerator {
  GenKind kind = GenKind::Meridian;
  int i = 0;
  int j = 0;
  std::string tag;
  std::optional<IntVec> label;  // homology class for point pushes
  Int exponent = 1;
  bool operator==(const BraidGenerator&) const = default;

  static BraidGenerator meridian(int i, int j, Int e = 1);
  static BraidGenerator boundary(int i, Int e = 1);
  static BraidGenerator stabilizer(std::string tag, Int e = 1);
};

using BraidWord = std::vector<BraidGenerator>;

/// Registry of tags known to lie in the stabiliser. Built in: "commutator"
/// ([Mod(B'), Mod(B')] for a five-holed boundary-adjacent sphere B') and
/// "xyzw" (T_x T_y T_z^-1 T_w^-1 on the same sphere).
class KernelRegistry {
 public:
  KernelRegistry();
  /// Provenance must be non-empty.
  void add(const std::string& tag, const std::string& provenance);
  bool contains(const std::string& tag) const { return tags_.count(tag) > 0; }
  const std::map<std::string, std::string>& tags() const { return tags_; }

 private:
  std::map<std::string, std::string> tags_;
};

const KernelRegistry& default_registry();

/// psi(m(i,j)) = e_i + e_j, boundary twists and registered tags map to 0.
/// Point pushes and half-twists have no stated image and are rejected.
IntVec psi(const BraidWord& word, int d, const KernelRegistry& reg = default_registry());

bool in_stabilizer(const BraidWord& word, int d, const KernelRegistry& reg = default_registry());

/// Sum of homology labels times exponents; twists and half-twists contribute 0.
IntVec lambda(const BraidWord& word, int genus);

struct CorrectionPlan {
  BraidWord word;
  Int ell = 0;  // exponent of the twist about c = m(2,3)
  Int t = 0;    // exponent of m(3,4) m(3,5) m(4,5)^-1
  IntVec k_prime;
};

/// For an input with psi image k (length d >= 6, even sum): a word whose psi
/// image is -k, built as
///   prod_{i>=4} m(3,i)^-k_i, (m(3,4) m(3,5) m(4,5)^-1)^t, m(1,2)^-k1', m(2,3)^ell
/// with k3' = k3 - sum_{i>=4} k_i, t = (k2' - k1' - k3')/2 and ell = k1' - k2'.
CorrectionPlan main_lemma_plan(const IntVec& k);

/// Same plan with the roles of indices 1, 2, 3 played by `far`, `shared`,
/// `third` (1-based, distinct); the twist c becomes m(shared, third).
CorrectionPlan main_lemma_plan(const IntVec& k, int far, int shared, int third);

std::string format_word(const BraidWord& word);

/// Grammar: m(i,j)^e, b(i)^e, s(tag)^e, p(i; c1 c2 ...)^e, h(i,j)^e; the
/// exponent is optional.
BraidWord parse_word(const std::string& text);

}  // namespace rspin::braidcalc
