#include <sstream>

#include "doctest.h"
#include "rspin/cli.hpp"
#include "rspin/report.hpp"

using rspin::report::ReportDocument;

namespace {

struct Run {
  int status;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int s = rspin::cli::run(args, out, err);
  return {s, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(RSPIN_DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("cli examples") {
  auto rep = cli({"report", "--surface", "P2", "--C", "6", "--D", "1"});
  CHECK(rep.status == 0);
  CHECK(rep.out.find("Γ = Mod(E)[φ_M], r = 4") != std::string::npos);
  auto mil = cli({"milnor", "x^3+y^4"});
  CHECK(mil.status == 0);
  CHECK(mil.out.find("μ               = 6") != std::string::npos);
  auto mil_m = cli({"--format", "machine", "milnor", "x^3+y^4"});
  CHECK(ReportDocument::parse_machine(mil_m.out).get("mu") == "6");
  auto psi = cli({"psi", "m(1,2)", "--d", "6"});
  CHECK(psi.status == 0);
  CHECK(psi.out.find("(1,1,0,0,0,0)") != std::string::npos);
}

TEST_CASE("cli exit codes") {
  CHECK(cli({}).status == 2);
  CHECK(cli({"frobnicate"}).status == 2);
  CHECK(cli({"psi", "m(1,2)"}).status == 2);
  CHECK(cli({"--format", "xml", "milnor", "x^2+y^2"}).status == 2);
  auto bad = cli({"psi", "m(1,9)", "--d", "6"});
  CHECK(bad.status == 1);
  CHECK(bad.err.find("index-out-of-range") != std::string::npos);
  CHECK(cli({"milnor", "x^2"}).status == 1);
  CHECK(cli({"mainlemma", "--k", "1,0,0,0,0,0"}).status == 1);
  CHECK(cli({"report", "--surface", "P2", "--C", "2", "--D", "1"}).status == 1);
  CHECK(cli({"config", "analyze", data("missing.conf")}).status == 1);
  CHECK(cli({"--help"}).status == 0);
}

TEST_CASE("machine output round-trips and is deterministic") {
  const std::vector<std::vector<std::string>> commands = {
      {"report", "--surface", "P2", "--C", "6", "--D", "2"},
      {"report", "--surface", "P2", "--C", "5", "--D", "1"},
      {"milnor", "y^2+y*x^4"},
      {"psi", "m(1,2) m(3,4) m(1,3)^-1 m(2,4)^-1", "--d", "6"},
      {"mainlemma", "--k", "1,2,3,4,5,7", "--roles", "2", "4", "6"},
      {"config", "analyze", "core13"},
      {"config", "analyze", data("e6.conf")},
      {"assemblage", "run", data("core_merge.asm")},
      {"assemblage", "staged", "--gc", "4", "--gd", "1", "--d", "7"},
      {"winding", "act", data("torus.wind")},
      {"winding", "census", "--genus", "3"},
      {"lattice", data("p1xp1.lattice"), "--class", "2,5"},
      {"catalog", "list"},
  };
  for (const auto& c : commands) {
    auto machine = c;
    machine.insert(machine.begin(), {"--format", "machine"});
    auto a = cli(machine), b = cli(machine);
    INFO(a.err);
    REQUIRE(a.status == 0);
    CHECK(a.out == b.out);
    auto doc = ReportDocument::parse_machine(a.out);
    CHECK(doc.render_machine() == a.out);
    auto human = cli(c);
    REQUIRE(human.status == 0);
    for (const auto& e : doc.entries()) CHECK(human.out.find(" = " + e.value + "\n") != std::string::npos);
    for (const auto& w : doc.warnings()) CHECK(human.out.find("warning: " + w) != std::string::npos);
  }
}

TEST_CASE("report states the cut-down and the hypothesis failure") {
  auto r = cli({"--format", "machine", "report", "--surface", "P2", "--C", "6", "--D", "2"});
  auto doc = ReportDocument::parse_machine(r.out);
  CHECK(doc.get("r") == "5");
  CHECK(doc.get("r_prime") == "10");
  CHECK(doc.get("cut_down") == "10");
  auto nc = ReportDocument::parse_machine(
      cli({"--format", "machine", "report", "--surface", "P2", "--C", "5", "--D", "2"}).out);
  CHECK(nc.get("verdict") == "not certified");
  CHECK_FALSE(nc.warnings().empty());
}

TEST_CASE("catalog show emits a parseable lattice") {
  auto r = cli({"catalog", "show", "dP3"});
  CHECK(r.status == 0);
  CHECK(r.out.find("name = dP3") != std::string::npos);
  CHECK(cli({"catalog", "show", "nowhere"}).status == 1);
}

TEST_CASE("report document basics") {
  ReportDocument d("t");
  d.set("a", "1");
  d.set("b", "two\nlines", "β");
  d.set("a", "3");
  d.warn("careful");
  CHECK(d.entries().size() == 2);
  CHECK(d.get("a") == "3");
  CHECK(d.get("b") == "two lines");
  CHECK(d.render_machine() == "title=t\na=3\nb=two lines\nwarning=careful\n");
  CHECK(d.render_human() == "t\n  a = 3\n  β = two lines\nwarning: careful\n");
  CHECK_THROWS(d.set("bad key", "x"));
  CHECK_THROWS(ReportDocument::parse_machine("no equals sign"));
}
