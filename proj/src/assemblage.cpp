#include "rspin/assemblage.hpp"

#include <algorithm>
#include <set>

#include "rspin/text.hpp"

namespace rspin::assemblage {

using curveconf::CurveSystem;
using picard::DivisorClass;

AssemblageStep AssemblageStep::split(std::string curve, std::string source, Component first,
                                     Component second, Int winding) {
  return {std::move(curve), Mode::Split, {std::move(source)}, {std::move(first), std::move(second)}, winding};
}

AssemblageStep AssemblageStep::merge(std::string curve, std::string a, std::string b, Component out,
                                     Int winding) {
  return {std::move(curve), Mode::Merge, {std::move(a), std::move(b)}, {std::move(out)}, winding};
}

IntVec State::values() const {
  IntVec v;
  for (const auto& c : components) v.push_back(c.value);
  return v;
}

bool State::coherent() const {
  Int s = 0;
  for (const auto& c : components) s = checked_add(s, c.value);
  return reduce_residue(s - euler, modulus) == 0 && euler == 2 - 2 * genus - boundary &&
         static_cast<Int>(components.size()) == boundary;
}

namespace {

std::size_t find_component(const State& s, const std::string& name, const std::string& curve) {
  for (std::size_t i = 0; i < s.components.size(); ++i)
    if (s.components[i].name == name) return i;
  fail(ErrorKind::UnknownComponent, "step '" + curve + "' uses missing boundary component '" + name + "'");
}

void check_fresh(const State& s, const std::vector<std::string>& consumed, const Component& out,
                 const std::string& curve) {
  for (const auto& c : s.components)
    if (c.name == out.name && std::find(consumed.begin(), consumed.end(), c.name) == consumed.end())
      fail(ErrorKind::InconsistentStep, "step '" + curve + "' reuses live component name '" + out.name + "'");
}

}  // namespace

State apply_step(const State& state, const AssemblageStep& step) {
  if (!state.coherent())
    fail(ErrorKind::InconsistentStep, "state before step '" + step.curve + "' is not coherent");
  State next = state;
  const Int r = state.modulus;
  if (step.mode == Mode::Split) {
    if (step.sources.size() != 1 || step.outputs.size() != 2)
      fail(ErrorKind::InconsistentStep, "split '" + step.curve + "' needs one source and two outputs");
    std::size_t i = find_component(state, step.sources[0], step.curve);
    if (step.outputs[0].name == step.outputs[1].name)
      fail(ErrorKind::InconsistentStep, "split '" + step.curve + "' produces two components with one name");
    for (const auto& out : step.outputs) check_fresh(state, step.sources, out, step.curve);
    Int v = state.components[i].value;
    Int sum = checked_add(step.outputs[0].value, step.outputs[1].value);
    if (reduce_residue(sum - (v - 1), r) != 0)
      fail(ErrorKind::InconsistentStep, "split '" + step.curve + "': " + std::to_string(step.outputs[0].value) +
                                            " + " + std::to_string(step.outputs[1].value) + " != " +
                                            std::to_string(v) + " - 1");
    next.components[i] = {step.outputs[0].name, reduce_residue(step.outputs[0].value, r)};
    next.components.insert(next.components.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                           {step.outputs[1].name, reduce_residue(step.outputs[1].value, r)});
    next.boundary += 1;
  } else {
    if (step.sources.size() != 2 || step.outputs.size() != 1)
      fail(ErrorKind::InconsistentStep, "merge '" + step.curve + "' needs two sources and one output");
    if (step.sources[0] == step.sources[1])
      fail(ErrorKind::InconsistentStep, "merge '" + step.curve + "' must join two distinct components");
    std::size_t i = find_component(state, step.sources[0], step.curve);
    std::size_t j = find_component(state, step.sources[1], step.curve);
    check_fresh(state, step.sources, step.outputs[0], step.curve);
    Int expect = state.components[i].value + state.components[j].value - 1;
    if (reduce_residue(step.outputs[0].value - expect, r) != 0)
      fail(ErrorKind::InconsistentStep, "merge '" + step.curve + "': value " +
                                            std::to_string(step.outputs[0].value) + " != " +
                                            std::to_string(expect));
    next.components[i] = {step.outputs[0].name, reduce_residue(step.outputs[0].value, r)};
    next.components.erase(next.components.begin() + static_cast<std::ptrdiff_t>(j));
    next.boundary -= 1;
    next.genus += 1;
  }
  next.euler -= 1;
  if (!next.coherent()) fail(ErrorKind::Internal, "coherence lost after step '" + step.curve + "'");
  return next;
}

CoreReport verify_core(const CurveSystem& core) {
  auto graph = curveconf::intersection_graph(core);
  auto inv = curveconf::neighborhood_invariants(core);
  CoreReport rep;
  rep.genus = inv.genus;
  rep.boundary = inv.boundary;
  rep.euler = inv.euler;
  rep.type_e = curveconf::is_tree(graph) && curveconf::find_induced_e6(graph).has_value();
  return rep;
}

FramingCertificate certify(const Assemblage& a, const std::vector<Component>& initial) {
  auto core = verify_core(a.core);
  FramingCertificate cert;
  cert.core_genus = core.genus;
  cert.type_e = core.type_e;
  if (static_cast<Int>(initial.size()) != core.boundary)
    fail(ErrorKind::InconsistentStep, "core has " + std::to_string(core.boundary) +
                                          " boundary components but " + std::to_string(initial.size()) +
                                          " initial values were given");
  State s{core.genus, core.boundary, core.euler, a.modulus, {}};
  std::set<std::string> names;
  for (const auto& c : initial) {
    if (!names.insert(c.name).second)
      fail(ErrorKind::InconsistentStep, "duplicate boundary component '" + c.name + "'");
    s.components.push_back({c.name, reduce_residue(c.value, a.modulus)});
  }
  if (!s.coherent())
    fail(ErrorKind::InconsistentStep, "initial boundary values do not sum to chi = " + std::to_string(s.euler));
  cert.stages.push_back(s);
  cert.admissible = true;
  for (const auto& step : a.steps) {
    s = apply_step(s, step);
    cert.stages.push_back(s);
    if (reduce_residue(step.curve_winding, a.modulus) != 0) cert.admissible = false;
  }
  cert.genus = s.genus;
  cert.boundary = s.boundary;
  cert.euler = s.euler;
  cert.boundary_values = s.components;
  cert.core_genus_ok = core.genus >= kMinCoreGenus;
  cert.genus_ok = s.genus >= kMinGenus;
  cert.boundary_ok = s.boundary >= 1;
  cert.filling = s.genus == a.ambient.genus && s.boundary == a.ambient.boundary;
  return cert;
}

Int capping_order(const IntVec& values) {
  if (values.empty()) fail(ErrorKind::NoCap, "no boundary components to cap");
  IntVec shifted;
  for (Int v : values) shifted.push_back(checked_add(v, 1));
  return gcd_of(shifted);
}

StagedBoundary staged_boundary_values(Int g_c, Int g_d, Int d) {
  StagedBoundary out;
  out.delta_prime = 2 - 2 * g_c - d - 1;
  out.delta_double_prime = 2 - 2 * g_d - d - 1;
  out.r_prime = capping_order({out.delta_prime, out.delta_double_prime});
  return out;
}

StagedAssemblage build_staged_assemblage(Int g_c, Int g_d, Int d) {
  if (d < 6) fail(ErrorKind::Precondition, "need d = C.D >= 6, got " + std::to_string(d));
  if (g_c < 3)
    fail(ErrorKind::Precondition, "need g(C) >= 3 to hold the E6 part of the core, got " + std::to_string(g_c));
  if (g_d < 0) fail(ErrorKind::Precondition, "g(D) must be nonnegative");
  const Int g = g_c + g_d + d - 1;
  if (g < kMinGenus) fail(ErrorKind::Precondition, "need g(E) >= 5, got " + std::to_string(g));

  StagedAssemblage p;
  p.assemblage.core = curveconf::core13();
  p.assemblage.ambient = {g, 2};
  p.assemblage.modulus = 0;
  p.initial = {{"dC", kCoreValueC}, {"dD", kCoreValueD}};
  p.expected = staged_boundary_values(g_c, g_d, d);
  auto& steps = p.assemblage.steps;

  // S0 -> S1: handles inside C~ raise the genus to g_C + 3.
  Int vc = kCoreValueC;
  for (Int k = 1; k <= g_c - 3; ++k) {
    std::string t = "t" + std::to_string(k);
    steps.push_back(AssemblageStep::split("s1_a" + std::to_string(2 * k - 1), "dC", {"dC", vc - 1}, {t, 0}));
    steps.push_back(AssemblageStep::merge("s1_a" + std::to_string(2 * k), "dC", t, {"dC", vc - 2}));
    vc -= 2;
  }
  p.stage1_steps = steps.size();

  // S1 -> S2: a_k joins the two boundary circles, Delta_i separates them again.
  Int vd = kCoreValueD;
  for (Int i = 5; i <= d; ++i) {
    Int merged = vc + vd - 1;
    steps.push_back(AssemblageStep::merge("s2_a" + std::to_string(i - 4), "dC", "dD", {"m", merged}));
    vc = 1 - 2 * g_c - i;
    vd = 1 - i;
    bool last = i == d;
    std::string c_name = last ? "Delta'" : "dC";
    std::string d_name = last ? (g_d == 0 ? "Delta''" : "eps") : "dD";
    steps.push_back(AssemblageStep::split("Delta" + std::to_string(i), "m", {c_name, vc}, {d_name, vd}));
  }
  p.stage2_steps = steps.size() - p.stage1_steps;

  // S2 -> S3: handles inside D~.
  for (Int k = 1; k <= g_d; ++k) {
    std::string t = "u" + std::to_string(k);
    steps.push_back(AssemblageStep::split("s3_a" + std::to_string(2 * k - 1), "eps", {"eps", vd - 1}, {t, 0}));
    std::string out = k == g_d ? "Delta''" : "eps";
    steps.push_back(AssemblageStep::merge("s3_a" + std::to_string(2 * k), "eps", t, {out, vd - 2}));
    vd -= 2;
  }
  p.stage3_steps = steps.size() - p.stage1_steps - p.stage2_steps;
  return p;
}

AssemblageFile parse_assemblage(const std::string& src_in) {
  // An inline core is cut out first and handed to the configuration parser.
  std::string src = src_in;
  std::optional<CurveSystem> inline_core;
  if (auto open = src.find('{'); open != std::string::npos) {
    auto close = src.find('}', open);
    if (close == std::string::npos) fail(ErrorKind::Parse, "unterminated core block");
    inline_core = curveconf::parse_config(src.substr(open + 1, close - open - 1));
    src = src.substr(0, open) + "inline" + src.substr(close + 1);
  }
  text::Cursor cur(text::tokenize(src));
  AssemblageFile f;
  bool have_core = false, have_ambient = false;
  auto component = [&]() {
    Component c;
    c.name = cur.word();
    cur.expect("=");
    c.value = cur.integer();
    return c;
  };
  auto winding = [&]() -> Int { return cur.accept("winding") ? cur.integer() : 0; };
  while (!cur.at_end()) {
    std::string kw = cur.word();
    if (kw == "ambient") {
      f.assemblage.ambient = {cur.integer(), cur.integer()};
      have_ambient = true;
    } else if (kw == "modulus") {
      f.assemblage.modulus = cur.integer();
      if (f.assemblage.modulus < 0) cur.error("modulus must be nonnegative");
    } else if (kw == "core") {
      std::string kind = cur.word();
      if (kind == "inline") f.assemblage.core = *inline_core;
      else if (kind == "core13") f.assemblage.core = curveconf::core13();
      else f.assemblage.core = curveconf::dynkin(kind);
      have_core = true;
    } else if (kw == "boundary") {
      f.initial.push_back(component());
    } else if (kw == "split") {
      std::string curve = cur.word();
      cur.expect(":");
      std::string source = cur.word();
      cur.expect("->");
      Component a = component();
      cur.accept(",");
      Component b = component();
      f.assemblage.steps.push_back(AssemblageStep::split(curve, source, a, b, winding()));
    } else if (kw == "merge") {
      std::string curve = cur.word();
      cur.expect(":");
      std::string a = cur.word();
      cur.expect("+");
      std::string b = cur.word();
      cur.expect("->");
      Component out = component();
      f.assemblage.steps.push_back(AssemblageStep::merge(curve, a, b, out, winding()));
    } else {
      cur.error("unknown statement '" + kw + "'");
    }
    cur.expect(";");
  }
  if (!have_core) fail(ErrorKind::Parse, "missing core statement");
  if (!have_ambient) fail(ErrorKind::Parse, "missing ambient statement");
  return f;
}

MonodromyReport monodromy_report(const catalog::Surface& surface, const DivisorClass& c,
                                 const DivisorClass& d) {
  picard::require_same_lattice(c, d);
  MonodromyReport rep;
  rep.surface = surface.lattice->name();
  rep.c = c.coords();
  rep.d = d.coords();
  const DivisorClass l = c + d;

  auto adj = picard::adjoint_and_root(l);
  if (adj.degenerate) fail(ErrorKind::Precondition, "adjoint class K+C+D is zero");
  rep.adjoint = adj.adjoint.coords();
  rep.r = adj.divisibility;
  rep.root = adj.root()->coords();

  rep.genus_c = picard::genus_of_section(c);
  rep.genus_d = picard::genus_of_section(d);
  rep.intersection = picard::intersect(c, d);
  rep.genus = picard::smoothed_genus(c, d);

  picard::JetLedger closed(surface.ledger);
  closed.close_under_composition(picard::kDefaultClosureTerms);
  auto jc = closed.level(c);
  auto jd = closed.level(d);
  if (jc && jd && *jc >= picard::kRequiredJetLevel && *jd >= 1) {
    rep.hypothesis = picard::HypothesisCertificate{c, d, *jc, *jd};
    rep.hypothesis_note = "jet(C) >= " + std::to_string(*jc) + ", jet(D) >= " + std::to_string(*jd);
  } else {
    rep.hypothesis_note = "ledger does not certify C as 6-jet ample and D as very ample";
    if (auto other = picard::theorem_hypothesis_check(l, surface.ledger))
      rep.warnings.push_back("C+D splits as " + other->jet_part.str() + " + " + other->very_ample_part.str() +
                             "; rerun with that split");
    rep.verdict = "not certified";
    return rep;
  }

  if (rep.genus < kMinGenus) fail(ErrorKind::Precondition, "fibre genus " + std::to_string(rep.genus) + " < 5");
  auto staged = build_staged_assemblage(rep.genus_c, rep.genus_d, rep.intersection);
  auto cert = certify(staged.assemblage, staged.initial);
  rep.assemblage_steps = staged.assemblage.steps.size();
  rep.assemblage_generates = cert.generates();
  rep.boundary = staged.expected;
  if (!cert.generates()) fail(ErrorKind::Internal, "staged assemblage failed to certify");
  IntVec finals;
  for (const auto& comp : cert.boundary_values) finals.push_back(comp.value);
  if (finals != IntVec{staged.expected.delta_prime, staged.expected.delta_double_prime})
    fail(ErrorKind::Internal, "assemblage boundary values disagree with the closed form");
  rep.r_prime = capping_order(finals);
  rep.r_prime_from_intersections =
      gcd_of({picard::intersect(c, adj.adjoint), picard::intersect(d, adj.adjoint)});
  if (rep.r_prime != rep.r_prime_from_intersections)
    fail(ErrorKind::Internal, "capping order disagrees with gcd(C.(K+C+D), D.(K+C+D))");
  if (rep.r_prime == 0) fail(ErrorKind::Precondition, "capping order is 0; no spin structure to compare");
  if (rep.r_prime % rep.r != 0)
    fail(ErrorKind::Internal, "r = " + std::to_string(rep.r) + " does not divide r' = " + std::to_string(rep.r_prime));

  for (Int cand = rep.r + 1; cand <= rep.r_prime; ++cand) {
    if (rep.r_prime % cand != 0) continue;
    if (gcd_of(rep.adjoint) % cand == 0)
      fail(ErrorKind::Internal, "adjoint unexpectedly divisible by " + std::to_string(cand));
    rep.cut_down.push_back({cand, "K+C+D = " + std::to_string(rep.r) + "*" + format_vec(rep.root) +
                                      " is not divisible by " + std::to_string(cand)});
  }
  rep.certified = true;
  rep.verdict = "Γ = Mod(E)[φ_M], r = " + std::to_string(rep.r);
  return rep;
}

}  // namespace rspin::assemblage
