#pragma once

// Winding-number functions mod r on named curves, their behaviour under Dehn
// twists, and the mod 2 quadratic forms attached to spin structures.
//
// Conventions: homology classes are written in a symplectic basis
// a1, b1, ..., ag, bg followed by one coordinate per boundary component, with
// <a_i, b_i> = 1 and boundary coordinates pairing trivially. The right-handed
// twist acts by T_c(x) = x + <x, c> c, and phi(T_c(a)) = phi(a) + <a, c> phi(c).
// Boundary values are oriented with the subsurface to their left.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rspin/common.hpp"

namespace rspin::winding {

struct Context {
  Int modulus = 0;  // r; 0 means integer valued
  Int genus = 0;
  Int boundary = 0;
  std::vector<std::string> boundary_names;

  Context() = default;
  Context(Int r, Int g, Int b, std::vector<std::string> names = {});
  std::size_t rank() const { return static_cast<std::size_t>(2 * genus + boundary); }
  Int reduce(Int v) const { return reduce_residue(v, modulus); }
};

struct HomologyCurve {
  std::string name;
  IntVec hclass;
  Int winding = 0;
  bool operator==(const HomologyCurve&) const = default;
};

using TwistWord = std::vector<std::pair<std::string, Int>>;

Int pairing(const IntVec& x, const IntVec& y, Int genus);

/// phi(a) + exponent * pairing * phi(c), reduced mod r.
Int twist_value(Int phi_a, Int phi_c, Int pairing, Int exponent, Int r);

/// Applies the word left to right to `curve`. Every letter must name a curve
/// in `curves`; the letters themselves are not moved by earlier letters.
HomologyCurve act(const Context& ctx, const std::map<std::string, HomologyCurve>& curves,
                  const TwistWord& word, const HomologyCurve& curve);

/// True iff the values sum to chi mod r.
bool coherence_check(const IntVec& values, Int chi, Int r);

/// Nonzero class in the closed surface obtained by capping, and winding 0 mod r.
bool is_admissible(const Context& ctx, const HomologyCurve& curve);

/// For a primitive nonzero class c, a class y with <y, c> = 1.
std::optional<IntVec> dual_witness(const IntVec& c, Int genus);

class WindingFunction {
 public:
  explicit WindingFunction(Context ctx) : ctx_(std::move(ctx)) {}

  const Context& context() const { return ctx_; }
  const std::map<std::string, Int>& values() const { return values_; }
  /// Arc values are stored doubled so half-integers stay exact.
  const std::map<std::string, Int>& doubled_arc_values() const { return arcs_; }

  WindingFunction with_value(const std::string& curve, Int v) const;
  WindingFunction with_doubled_arc(const std::string& arc, Int twice) const;
  std::optional<Int> value(const std::string& curve) const;

  /// Reduction to a modulus dividing the current one; RefinementOrder otherwise.
  WindingFunction reduce_mod(Int r_new) const;

 private:
  Context ctx_;
  std::map<std::string, Int> values_;
  std::map<std::string, Int> arcs_;
};

/// gcd({k_i r} and r'); requires r | r'.
Int nonconmax_gcd(const IntVec& ks, Int r, Int r_prime);

// Mod 2 quadratic forms on H1(closed genus g surface; Z/2). Vectors are bit
// masks, bit 2i for a_{i+1} and bit 2i+1 for b_{i+1}.

using Mask = std::uint32_t;

class QuadraticForm {
 public:
  QuadraticForm(int genus, std::vector<int> basis_values);
  int genus() const { return genus_; }
  const std::vector<int>& basis_values() const { return q_; }
  /// q(x) from q(x+y) = q(x) + q(y) + <x, y> mod 2.
  int operator()(Mask x) const;
  int arf() const;

 private:
  int genus_;
  std::vector<int> q_;
};

int pairing_mod2(Mask x, Mask y, int genus);
/// x + <x, v> v over Z/2.
Mask transvect(Mask x, Mask v, int genus);

/// Spin structure of an even-modulus winding function: q = phi + 1 mod 2
/// evaluated on a symplectic basis of nonseparating curves.
QuadraticForm quadratic_form_from_windings(int genus, const IntVec& basis_windings, Int r);

struct ArfCensus {
  std::uint64_t even = 0;  // Arf 0
  std::uint64_t odd = 0;   // Arf 1
  bool operator==(const ArfCensus&) const = default;
};

inline constexpr int kMaxCensusGenus = 6;

/// Counts all 2^(2g) forms by Arf invariant. CostGuard above kMaxCensusGenus.
ArfCensus enumerate_forms(int genus);

/// Arf invariant of the form with the given basis bit pattern.
int arf_of_assignment(int genus, Mask assignment);

struct WindingScript {
  Context ctx;
  std::vector<HomologyCurve> curves;
  TwistWord word;
};

/// Parses
///   context g b r;
///   curve a1 = (1 0 0 0) : 0;
///   word a1^1 b1^-2;
WindingScript parse_script(const std::string& text);

}  // namespace rspin::winding
