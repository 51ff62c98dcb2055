#include "rspin/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <sstream>

#include "CLI11.hpp"
#include "rspin/assemblage.hpp"
#include "rspin/braidcalc.hpp"
#include "rspin/catalog.hpp"
#include "rspin/curveconf.hpp"
#include "rspin/kernels.hpp"
#include "rspin/milnor.hpp"
#include "rspin/report.hpp"
#include "rspin/text.hpp"
#include "rspin/winding.hpp"

namespace rspin::cli {

namespace {

using report::ReportDocument;

/// "6", "1,2", "1 2" or "(1, 2)".
IntVec parse_coords(const std::string& s) {
  std::string t = s;
  for (char& c : t)
    if (c == ',' || c == '(' || c == ')') c = ' ';
  std::istringstream is(t);
  IntVec v;
  std::string tok;
  while (is >> tok) {
    std::size_t used = 0;
    long long x = 0;
    try {
      x = std::stoll(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size()) fail(ErrorKind::Parse, "expected integers, got '" + s + "'");
    v.push_back(x);
  }
  if (v.empty()) fail(ErrorKind::Parse, "empty coordinate list");
  return v;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string join(const std::vector<std::string>& xs, const char* sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i];
  return out;
}

std::string basis_str(const std::vector<milnor::Monomial>& basis) {
  std::vector<std::string> xs;
  for (const auto& m : basis) xs.push_back(milnor::monomial_str(m));
  return "{" + join(xs, ", ") + "}";
}

std::string components_str(const std::vector<assemblage::Component>& cs) {
  std::vector<std::string> xs;
  for (const auto& c : cs) xs.push_back(c.name + ":" + std::to_string(c.value));
  return join(xs);
}

/// A file when one exists at that path, otherwise a built-in name.
curveconf::CurveSystem load_config(const std::string& arg) {
  if (std::filesystem::exists(arg)) return curveconf::parse_config(text::read_file(arg));
  if (arg == "core13") return curveconf::core13();
  if (arg == "E6" || (arg.size() > 1 && arg[0] == 'A')) return curveconf::dynkin(arg);
  fail(ErrorKind::Parse, "no configuration file or built-in named '" + arg + "'");
}

ReportDocument do_lattice(const std::string& source, const std::string& cls) {
  auto s = catalog::load_surface(source);
  const auto& lat = *s.lattice;
  ReportDocument doc("lattice");
  doc.set("name", lat.name().empty() ? source : lat.name());
  doc.set("rank", std::to_string(lat.rank()));
  std::vector<std::string> rows;
  for (const auto& row : lat.gram()) rows.push_back(format_vec(row));
  doc.set("gram", join(rows));
  doc.set("canonical", format_vec(lat.canonical()));
  auto sig = lat.signature();
  doc.set("signature", "(" + std::to_string(sig.positive) + "," + std::to_string(sig.negative) + ")");
  doc.set("simply_connected", yes_no(lat.simply_connected()));
  doc.set("ledger_entries", std::to_string(s.ledger.size()));
  if (lat.simply_connected()) {
    auto dec = picard::lefschetz_full_decision(lat, s.ample_generator);
    doc.set("lefschetz", picard::to_string(dec.verdict));
    if (!dec.full_monodromy_multiples.empty()) {
      IntVec ms(dec.full_monodromy_multiples.begin(), dec.full_monodromy_multiples.end());
      doc.set("full_monodromy_multiples", format_vec(ms));
    }
  }
  if (!cls.empty()) {
    picard::DivisorClass l(s.lattice, parse_coords(cls));
    doc.set("class", l.str());
    doc.set("self_intersection", std::to_string(picard::intersect(l, l)));
    try {
      doc.set("genus", std::to_string(picard::genus_of_section(l)));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotRepresentable) throw;
      doc.warn(e.what());
    }
    auto adj = picard::adjoint_and_root(l);
    doc.set("adjoint", adj.adjoint.str());
    doc.set("r", std::to_string(adj.divisibility));
    if (auto root = adj.root()) doc.set("root", root->str());
    else doc.warn("adjoint class is zero; no maximal root");
    auto cert = picard::theorem_hypothesis_check(l, s.ledger);
    doc.set("hypothesis", cert ? "certified" : "not certified");
    if (cert) {
      doc.set("jet_part", cert->jet_part.str() + " @" + std::to_string(cert->jet_level));
      doc.set("very_ample_part", cert->very_ample_part.str() + " @" + std::to_string(cert->very_ample_level));
    }
  }
  return doc;
}

ReportDocument do_config(const std::string& source) {
  auto sys = load_config(source);
  ReportDocument doc("configuration");
  doc.set("curves", std::to_string(sys.size()));
  doc.set("points", std::to_string(sys.points().size()));
  auto graph = curveconf::intersection_graph(sys);
  doc.set("edges", std::to_string(graph.edges.size()));
  doc.set("connected", yes_no(curveconf::is_connected(graph)));
  doc.set("tree", yes_no(curveconf::is_tree(graph)));
  doc.set("arboreal", yes_no(curveconf::is_arboreal(sys)));
  doc.set("e_arboreal", yes_no(curveconf::is_E_arboreal(sys)));
  if (auto six = curveconf::find_induced_e6(graph)) {
    std::vector<std::string> names;
    for (int v : *six) names.push_back(sys.names()[v]);
    doc.set("e6_subgraph", join(names));
  }
  if (curveconf::is_connected(graph)) {
    auto inv = curveconf::neighborhood_invariants(sys);
    doc.set("euler", std::to_string(inv.euler), "χ");
    doc.set("boundary", std::to_string(inv.boundary), "b");
    doc.set("genus", std::to_string(inv.genus), "g");
  } else {
    auto comps = curveconf::component_invariants(sys);
    for (std::size_t i = 0; i < comps.size(); ++i)
      doc.set("component" + std::to_string(i + 1),
              "χ=" + std::to_string(comps[i].euler) + " b=" + std::to_string(comps[i].boundary) +
                  " g=" + std::to_string(comps[i].genus));
    doc.warn("configuration is disconnected; invariants are per component");
  }
  if (auto amb = sys.ambient()) {
    doc.set("ambient", "Σ_" + std::to_string(amb->genus) + "^" + std::to_string(amb->boundary));
    doc.set("spanning", yes_no(curveconf::is_connected(graph) && curveconf::is_spanning(sys, *amb)));
  }
  return doc;
}

ReportDocument do_winding_act(const std::string& path) {
  auto script = winding::parse_script(text::read_file(path));
  std::map<std::string, winding::HomologyCurve> curves;
  for (const auto& c : script.curves) curves[c.name] = c;
  ReportDocument doc("winding");
  const auto& ctx = script.ctx;
  doc.set("context", "g=" + std::to_string(ctx.genus) + " b=" + std::to_string(ctx.boundary) +
                         " r=" + std::to_string(ctx.modulus));
  std::vector<std::string> letters;
  for (const auto& [n, e] : script.word) letters.push_back(n + "^" + std::to_string(e));
  doc.set("word", join(letters));
  for (const auto& c : script.curves) {
    auto after = winding::act(ctx, curves, script.word, c);
    doc.set("before." + c.name, format_vec(c.hclass) + " : " + std::to_string(ctx.reduce(c.winding)));
    doc.set("after." + c.name, format_vec(after.hclass) + " : " + std::to_string(after.winding));
    doc.set("admissible." + c.name, yes_no(winding::is_admissible(ctx, after)));
  }
  return doc;
}

ReportDocument do_winding_census(int genus, bool parallel) {
  auto census = parallel ? kernels::arf_census_parallel(genus) : kernels::arf_census_serial(genus);
  ReportDocument doc("arf census");
  doc.set("genus", std::to_string(genus));
  doc.set("forms", std::to_string(census.even + census.odd));
  doc.set("arf0", std::to_string(census.even));
  doc.set("arf1", std::to_string(census.odd));
  return doc;
}

void describe_certificate(ReportDocument& doc, const assemblage::FramingCertificate& cert) {
  doc.set("core_genus", std::to_string(cert.core_genus), "h");
  doc.set("genus", std::to_string(cert.genus), "g");
  doc.set("boundary", std::to_string(cert.boundary), "b");
  doc.set("euler", std::to_string(cert.euler), "χ");
  doc.set("boundary_values", components_str(cert.boundary_values));
  IntVec vals;
  for (const auto& c : cert.boundary_values) vals.push_back(c.value);
  doc.set("capping_order", std::to_string(assemblage::capping_order(vals)));
  doc.set("type_e", yes_no(cert.type_e));
  doc.set("filling", yes_no(cert.filling));
  doc.set("admissible", yes_no(cert.admissible));
  doc.set("generates", yes_no(cert.generates()));
  if (!cert.core_genus_ok) doc.warn("core genus below 5");
  if (!cert.genus_ok) doc.warn("surface genus below 5");
}

ReportDocument do_assemblage_run(const std::string& path) {
  auto file = assemblage::parse_assemblage(text::read_file(path));
  auto cert = assemblage::certify(file.assemblage, file.initial);
  ReportDocument doc("assemblage");
  doc.set("steps", std::to_string(file.assemblage.steps.size()));
  doc.set("modulus", std::to_string(file.assemblage.modulus));
  describe_certificate(doc, cert);
  return doc;
}

ReportDocument do_assemblage_staged(Int gc, Int gd, Int d) {
  auto pa = assemblage::build_staged_assemblage(gc, gd, d);
  auto cert = assemblage::certify(pa.assemblage, pa.initial);
  ReportDocument doc("staged assemblage");
  doc.set("genus_c", std::to_string(gc), "g_C");
  doc.set("genus_d", std::to_string(gd), "g_D");
  doc.set("d", std::to_string(d));
  doc.set("stage_steps", std::to_string(pa.stage1_steps) + " " + std::to_string(pa.stage2_steps) + " " +
                             std::to_string(pa.stage3_steps));
  doc.set("steps", std::to_string(pa.assemblage.steps.size()));
  describe_certificate(doc, cert);
  doc.set("r_prime", std::to_string(pa.expected.r_prime), "r'");
  return doc;
}

ReportDocument do_milnor(const std::string& poly, bool parallel) {
  auto f = milnor::parse_polynomial(poly);
  auto res = milnor::milnor_number(f, milnor::kDefaultDegreeCeiling, parallel);
  ReportDocument doc("milnor");
  doc.set("f", f.str());
  doc.set("mu", std::to_string(res.mu), "μ");
  doc.set("basis", basis_str(res.basis));
  doc.set("truncation", std::to_string(res.truncation));
  doc.set("jet_requirement", std::to_string(milnor::jet_requirement(f, res.basis)));
  return doc;
}

ReportDocument do_psi(const std::string& word, int d) {
  auto w = braidcalc::parse_word(word);
  ReportDocument doc("psi");
  doc.set("word", braidcalc::format_word(w));
  doc.set("d", std::to_string(d));
  auto v = braidcalc::psi(w, d);
  doc.set("psi", format_vec(v, "(", ")"), "ψ");
  doc.set("in_stabilizer", yes_no(std::all_of(v.begin(), v.end(), [](Int x) { return x == 0; })));
  return doc;
}

ReportDocument do_mainlemma(const std::string& k, const std::vector<int>& roles) {
  IntVec kv = parse_coords(k);
  auto plan = roles.empty() ? braidcalc::main_lemma_plan(kv)
                            : braidcalc::main_lemma_plan(kv, roles.at(0), roles.at(1), roles.at(2));
  ReportDocument doc("correction plan");
  doc.set("k", format_vec(kv));
  doc.set("k_prime", format_vec(plan.k_prime), "k'");
  doc.set("t", std::to_string(plan.t));
  doc.set("ell", std::to_string(plan.ell), "ℓ");
  doc.set("word", plan.word.empty() ? "(empty)" : braidcalc::format_word(plan.word));
  IntVec total = braidcalc::psi(plan.word, static_cast<int>(kv.size()));
  for (std::size_t i = 0; i < kv.size(); ++i) total[i] += kv[i];
  doc.set("psi_after", format_vec(total), "ψ after");
  return doc;
}

ReportDocument do_report(const std::string& surface, const std::string& c, const std::string& d) {
  auto s = catalog::load_surface(surface);
  picard::DivisorClass C(s.lattice, parse_coords(c)), D(s.lattice, parse_coords(d));
  auto rep = assemblage::monodromy_report(s, C, D);
  ReportDocument doc("monodromy report");
  doc.set("surface", s.lattice->name().empty() ? surface : s.lattice->name());
  doc.set("C", C.str());
  doc.set("D", D.str());
  doc.set("genus_c", std::to_string(rep.genus_c), "g(C)");
  doc.set("genus_d", std::to_string(rep.genus_d), "g(D)");
  doc.set("d", std::to_string(rep.intersection), "d = C·D");
  doc.set("genus", std::to_string(rep.genus), "g(E)");
  doc.set("adjoint", format_vec(rep.adjoint), "K+C+D");
  doc.set("r", std::to_string(rep.r));
  if (!rep.root.empty()) doc.set("root", format_vec(rep.root), "M");
  doc.set("hypothesis", rep.hypothesis ? "certified" : "not certified");
  doc.set("hypothesis_note", rep.hypothesis_note);
  if (rep.hypothesis) {
    doc.set("assemblage_steps", std::to_string(rep.assemblage_steps));
    doc.set("assemblage_generates", yes_no(rep.assemblage_generates));
    doc.set("boundary_values",
            std::to_string(rep.boundary.delta_prime) + " " + std::to_string(rep.boundary.delta_double_prime),
            "Δ' Δ''");
    doc.set("r_prime", std::to_string(rep.r_prime), "r'");
    doc.set("r_prime_check", std::to_string(rep.r_prime_from_intersections), "gcd(C·(K+C+D), D·(K+C+D))");
    std::vector<std::string> cuts;
    for (const auto& cd : rep.cut_down) {
      cuts.push_back(std::to_string(cd.candidate));
      doc.set("refuted." + std::to_string(cd.candidate), cd.refutation);
    }
    doc.set("cut_down", cuts.empty() ? "none" : join(cuts));
  }
  doc.set("verdict", rep.verdict);
  for (const auto& w : rep.warnings) doc.warn(w);
  return doc;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact r-spin monodromy computations", "rspinmono"};
  app.require_subcommand(1);
  std::string format = "human";
  app.add_option("--format", format, "human or machine")->check(CLI::IsMember({"human", "machine"}));

  std::function<ReportDocument()> action;

  auto* lattice = app.add_subcommand("lattice", "Show a lattice and optionally analyse a class");
  std::string lat_src, lat_class;
  lattice->add_option("surface", lat_src, "built-in name or lattice file")->required();
  lattice->add_option("--class", lat_class, "coordinates of a line bundle");
  lattice->callback([&] { action = [&] { return do_lattice(lat_src, lat_class); }; });

  auto* catalog_cmd = app.add_subcommand("catalog", "Built-in surfaces");
  catalog_cmd->require_subcommand(1);
  auto* cat_list = catalog_cmd->add_subcommand("list", "List built-in surfaces");
  cat_list->callback([&] {
    action = [] {
      ReportDocument doc("catalog");
      for (const auto& n : catalog::builtin_names()) {
        auto s = catalog::builtin(n);
        doc.set("surface." + n, "rank " + std::to_string(s.lattice->rank()) + ", K = " + format_vec(s.lattice->canonical()));
      }
      return doc;
    };
  });
  auto* cat_show = catalog_cmd->add_subcommand("show", "Print a built-in surface in lattice format");
  std::string cat_name;
  cat_show->add_option("name", cat_name)->required();
  bool cat_raw = false;
  cat_show->callback([&] { cat_raw = true; });

  auto* config = app.add_subcommand("config", "Curve configurations");
  config->require_subcommand(1);
  auto* analyze = config->add_subcommand("analyze", "Graph type, invariants and spanning verdict");
  std::string config_src;
  analyze->add_option("source", config_src, "configuration file, core13, E6 or A<n>")->required();
  analyze->callback([&] { action = [&] { return do_config(config_src); }; });

  auto* wind = app.add_subcommand("winding", "Winding-number calculus");
  wind->require_subcommand(1);
  auto* act = wind->add_subcommand("act", "Apply a twist word to declared curves");
  std::string script_path;
  act->add_option("script", script_path)->required();
  act->callback([&] { action = [&] { return do_winding_act(script_path); }; });
  auto* census = wind->add_subcommand("census", "Count mod 2 quadratic forms by Arf invariant");
  int census_genus = 1;
  bool census_parallel = false;
  census->add_option("--genus", census_genus)->required();
  census->add_flag("--parallel", census_parallel);
  census->callback([&] { action = [&] { return do_winding_census(census_genus, census_parallel); }; });

  auto* asm_cmd = app.add_subcommand("assemblage", "Assemblages and boundary values");
  asm_cmd->require_subcommand(1);
  auto* asm_run = asm_cmd->add_subcommand("run", "Certify an assemblage file");
  std::string asm_path;
  asm_run->add_option("file", asm_path)->required();
  asm_run->callback([&] { action = [&] { return do_assemblage_run(asm_path); }; });
  auto* asm_staged = asm_cmd->add_subcommand("staged", "Staged construction for given g_C, g_D, d");
  Int gc = 0, gd = 0, dd = 0;
  asm_staged->add_option("--gc", gc)->required();
  asm_staged->add_option("--gd", gd)->required();
  asm_staged->add_option("--d", dd)->required();
  asm_staged->callback([&] { action = [&] { return do_assemblage_staged(gc, gd, dd); }; });

  auto* mil = app.add_subcommand("milnor", "Milnor number and local algebra basis");
  std::string poly;
  bool mil_parallel = false;
  mil->add_option("polynomial", poly)->required();
  mil->add_flag("--parallel", mil_parallel);
  mil->callback([&] { action = [&] { return do_milnor(poly, mil_parallel); }; });

  auto* psi_cmd = app.add_subcommand("psi", "Abelianised image of a braid word");
  std::string word;
  int psi_d = 0;
  psi_cmd->add_option("word", word)->required();
  psi_cmd->add_option("--d", psi_d)->required();
  psi_cmd->callback([&] { action = [&] { return do_psi(word, psi_d); }; });

  auto* ml = app.add_subcommand("mainlemma", "Correction word cancelling a psi image");
  std::string kvec;
  std::vector<int> roles;
  ml->add_option("--k", kvec)->required();
  ml->add_option("--roles", roles, "far, shared and third index")->expected(3);
  ml->callback([&] { action = [&] { return do_mainlemma(kvec, roles); }; });

  auto* rep = app.add_subcommand("report", "End-to-end monodromy report");
  std::string surface, cstr, dstr;
  rep->add_option("--surface", surface)->required();
  rep->add_option("--C", cstr)->required();
  rep->add_option("--D", dstr)->required();
  rep->callback([&] { action = [&] { return do_report(surface, cstr, dstr); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (cat_raw) {
      out << catalog::write_lattice(catalog::builtin(cat_name));
      return 0;
    }
    if (!action) {
      err << "usage error: no subcommand\n";
      return 2;
    }
    out << action().render(format == "machine");
    return 0;
  } catch (const Error& e) {
    err << "error[" << to_string(e.kind()) << "]: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace rspin::cli
