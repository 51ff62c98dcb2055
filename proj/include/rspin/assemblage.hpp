#pragma once

// Assemblages: a spanning core followed by 1-handle attachments, with the
// boundary winding values of the compatible framing carried along, plus the
// staged construction on a smoothed fibre E = C~ u D~ and the resulting
// monodromy report.
//
// Handle rules: attaching along one boundary component splits it
// (b + 1, same g, v -> v', v'' with v' + v'' = v - 1); attaching along two
// components merges them (b - 1, g + 1, v1, v2 -> v1 + v2 - 1). Either way
// chi drops by one and the values keep summing to chi.

#include <optional>
#include <string>
#include <vector>

#include "rspin/catalog.hpp"
#include "rspin/curveconf.hpp"
#include "rspin/picard.hpp"

namespace rspin::assemblage {

struct Component {
  std::string name;
  Int value = 0;
  bool operator==(const Component&) const = default;
};

enum class Mode { Split, Merge };

struct AssemblageStep {
  std::string curve;
  Mode mode = Mode::Split;
  std::vector<std::string> sources;   // one for a split, two for a merge
  std::vector<Component> outputs;     // two for a split, one for a merge
  Int curve_winding = 0;              // declared winding of the attached curve

  static AssemblageStep split(std::string curve, std::string source, Component first, Component second,
                              Int winding = 0);
  static AssemblageStep merge(std::string curve, std::string a, std::string b, Component out,
                              Int winding = 0);
};

struct State {
  Int genus = 0;
  Int boundary = 0;
  Int euler = 0;
  Int modulus = 0;
  std::vector<Component> components;

  IntVec values() const;
  bool coherent() const;
};

/// Throws InconsistentStep on a sum-rule violation, UnknownComponent on a
/// missing boundary component.
State apply_step(const State& state, const AssemblageStep& step);

struct CoreReport {
  Int genus = 0;  // h
  Int boundary = 0;
  Int euler = 0;
  bool type_e = false;
};

/// Checks simplicity and connectivity; reports h and whether the core is E-arboreal.
CoreReport verify_core(const curveconf::CurveSystem& core);

struct Assemblage {
  curveconf::CurveSystem core;
  std::vector<AssemblageStep> steps;
  curveconf::Surface ambient;
  Int modulus = 0;  // 0 for framings
};

struct FramingCertificate {
  Int core_genus = 0;
  Int genus = 0;
  Int boundary = 0;
  Int euler = 0;
  std::vector<Component> boundary_values;
  std::vector<State> stages;  // after the core and after each step
  bool type_e = false;
  bool core_genus_ok = false;  // h >= 5
  bool genus_ok = false;       // g >= 5
  bool boundary_ok = false;    // b >= 1
  bool filling = false;
  bool admissible = false;     // every attached curve has winding 0
  bool generates() const {
    return type_e && core_genus_ok && genus_ok && boundary_ok && filling && admissible;
  }
};

inline constexpr Int kMinCoreGenus = 5;
inline constexpr Int kMinGenus = 5;

FramingCertificate certify(const Assemblage& asm_, const std::vector<Component>& initial);

/// gcd of (v_i + 1); 0 when every v_i = -1. NoCap on an empty list.
Int capping_order(const IntVec& boundary_values);

struct StagedBoundary {
  Int delta_prime = 0;         // chi(C) - d - 1
  Int delta_double_prime = 0;  // chi(D) - d - 1
  Int r_prime = 0;
};

/// Closed-form boundary values of the staged construction.
StagedBoundary staged_boundary_values(Int g_c, Int g_d, Int d);

struct StagedAssemblage {
  Assemblage assemblage;
  std::vector<Component> initial;
  StagedBoundary expected;
  std::size_t stage1_steps = 0;
  std::size_t stage2_steps = 0;
  std::size_t stage3_steps = 0;
};

/// Initial values of the two boundary components of the core S_0: the side
/// in C~ carries -9 and the side in D~ carries -3.
inline constexpr Int kCoreValueC = -9;
inline constexpr Int kCoreValueD = -3;

/// Core, then 2(g_C - 3) handles inside C~, then 2(d - 4) handles alternating
/// arcs a_k and the circles Delta_5..Delta_d, then 2 g_D handles inside D~.
/// Requires d >= 6, g_C >= 3, g_D >= 0 and g(E) >= 5.
StagedAssemblage build_staged_assemblage(Int g_c, Int g_d, Int d);

/// Assemblage text format:
///   ambient 6 2;
///   modulus 0;
///   core core13;                      # or E6, A<n>, or { configuration }
///   boundary dC = -9;
///   split x : dC -> u = -10, v = 0 winding 0;
///   merge y : u + v -> dC = -11;
struct AssemblageFile {
  Assemblage assemblage;
  std::vector<Component> initial;
};
AssemblageFile parse_assemblage(const std::string& text);

struct CutDown {
  Int candidate = 0;
  std::string refutation;
};

struct MonodromyReport {
  std::string surface;
  IntVec c, d;
  bool certified = false;
  std::optional<picard::HypothesisCertificate> hypothesis;
  std::string hypothesis_note;
  Int genus_c = 0, genus_d = 0, intersection = 0, genus = 0;
  IntVec adjoint, root;
  Int r = 0;
  Int r_prime = 0;
  Int r_prime_from_intersections = 0;
  StagedBoundary boundary;
  std::size_t assemblage_steps = 0;
  bool assemblage_generates = false;
  std::vector<CutDown> cut_down;
  std::string verdict;
  std::vector<std::string> warnings;
};

/// End-to-end pipeline. Hypothesis failure yields certified = false with
/// verdict "not certified"; a degenerate adjoint or failed size preconditions
/// raise Precondition.
MonodromyReport monodromy_report(const catalog::Surface& surface, const picard::DivisorClass& c,
                                 const picard::DivisorClass& d);

}  // namespace rspin::assemblage
