#include "rspin/catalog.hpp"

#include <filesystem>
#include <sstream>

#include "rspin/text.hpp"

namespace rspin::catalog {

using picard::DivisorClass;
using picard::IntMatrix;
using picard::JetLedger;

namespace {

std::optional<Int> suffix_number(const std::string& name, const std::string& prefix) {
  if (name.size() <= prefix.size() || name.compare(0, prefix.size(), prefix) != 0) return std::nullopt;
  std::string rest = name.substr(prefix.size());
  for (char c : rest)
    if (c < '0' || c > '9') return std::nullopt;
  if (rest.size() > 6) return std::nullopt;
  return std::stoll(rest);
}

IntVec unit(std::size_t n, std::size_t i, Int v = 1) {
  IntVec out(n, 0);
  out[i] = v;
  return out;
}

struct Raw {
  IntMatrix gram;
  IntVec canonical;
  std::vector<std::pair<IntVec, int>> jets;
  std::optional<IntVec> generator;
};

Raw raw_builtin(const std::string& name) {
  Raw r;
  if (name == "P2") {
    r.gram = {{1}};
    r.canonical = {-3};
    r.jets = {{{1}, 1}};
    r.generator = IntVec{1};
    return r;
  }
  if (name == "P1xP1") {
    r.gram = {{0, 1}, {1, 0}};
    r.canonical = {-2, -2};
    r.jets = {{{1, 1}, 1}};
    return r;
  }
  if (auto n = suffix_number(name, "F"); n && *n <= 12) {
    // basis (f, s): fibre and the negative section, s.s = -n
    r.gram = {{0, 1}, {1, -*n}};
    r.canonical = {-(*n + 2), -2};
    r.jets = {{{*n + 1, 1}, 1}};
    return r;
  }
  if (auto k = suffix_number(name, "dP"); k && *k >= 1 && *k <= 8) {
    std::size_t n = static_cast<std::size_t>(*k) + 1;
    r.gram.assign(n, IntVec(n, 0));
    r.gram[0][0] = 1;
    for (std::size_t i = 1; i < n; ++i) r.gram[i][i] = -1;
    r.canonical.assign(n, 1);
    r.canonical[0] = -3;
    if (*k <= 6) {
      IntVec anti(n, -1);
      anti[0] = 3;
      r.jets = {{anti, 1}};
    }
    return r;
  }
  if (auto n = suffix_number(name, "K3-"); n && *n >= 1) {
    r.gram = {{2 * *n}};
    r.canonical = {0};
    if (*n >= 2) r.jets = {{{1}, 1}};
    r.generator = IntVec{1};
    return r;
  }
  fail(ErrorKind::InconsistentInput, "unknown built-in surface '" + name + "'");
}

void validate(const Surface& s, const std::string& name) {
  for (const auto& [coords, g] : reference_genera(name)) {
    Int got = picard::genus_of_section(DivisorClass(s.lattice, coords));
    if (got != g)
      fail(ErrorKind::Internal, "catalog entry " + name + ": class " + format_vec(coords) +
                                    " has genus " + std::to_string(got) + ", expected " +
                                    std::to_string(g));
  }
}

}  // namespace

std::vector<std::pair<IntVec, Int>> reference_genera(const std::string& name) {
  Raw r = raw_builtin(name);
  const std::size_t n = r.gram.size();
  std::vector<std::pair<IntVec, Int>> out;
  if (name == "P2") return {{{1}, 0}, {{2}, 0}, {{3}, 1}};
  if (name == "P1xP1") return {{{1, 0}, 0}, {{0, 1}, 0}, {{1, 1}, 0}, {{2, 2}, 1}};
  if (name.rfind("F", 0) == 0) return {{{1, 0}, 0}, {{0, 1}, 0}};
  if (name.rfind("dP", 0) == 0) {
    out.push_back({unit(n, 0), 0});
    for (std::size_t i = 1; i < n; ++i) {
      out.push_back({unit(n, i), 0});
      IntVec line = unit(n, 0);
      line[i] = -1;
      out.push_back({line, 0});
      for (std::size_t j = i + 1; j < n; ++j) {
        IntVec through = line;
        through[j] = -1;
        out.push_back({through, 0});
      }
    }
    IntVec anti(n, -1);
    anti[0] = 3;
    out.push_back({anti, 1});
    return out;
  }
  // K3 of degree 2n: a smooth hyperplane section has genus n + 1.
  return {{{1}, r.gram[0][0] / 2 + 1}};
}

Surface builtin(const std::string& name) {
  Raw r = raw_builtin(name);
  auto lattice = picard::make_lattice(r.gram, r.canonical, name, true);
  Surface s{lattice, JetLedger(lattice), r.generator};
  for (const auto& [coords, level] : r.jets)
    s.ledger.declare(DivisorClass(lattice, coords), level, "catalog: very ample");
  validate(s, name);
  return s;
}

std::vector<std::string> builtin_names() {
  std::vector<std::string> out{"P2", "P1xP1"};
  for (int n = 0; n <= 3; ++n) out.push_back("F" + std::to_string(n));
  for (int k = 1; k <= 8; ++k) out.push_back("dP" + std::to_string(k));
  for (int n = 1; n <= 3; ++n) out.push_back("K3-" + std::to_string(n));
  return out;
}

Surface parse_lattice(const std::string& src) {
  text::Cursor cur(text::tokenize(src));
  std::optional<Int> rank;
  IntVec gram_flat, canonical;
  std::string name;
  bool simply_connected = true;
  bool have_gram = false, have_canonical = false;
  std::vector<std::pair<IntVec, int>> jets;
  std::optional<IntVec> generator;

  while (!cur.at_end()) {
    std::string key = cur.word();
    if (key == "jets") {
      cur.expect("{");
      while (!cur.accept("}")) {
        cur.expect("(");
        IntVec coords = cur.integers_until(")");
        cur.expect(")");
        cur.expect(":");
        Int level = cur.integer();
        cur.accept(";");
        jets.emplace_back(std::move(coords), static_cast<int>(level));
      }
      cur.accept(";");
      continue;
    }
    cur.expect("=");
    if (key == "rank") {
      rank = cur.integer();
    } else if (key == "gram") {
      gram_flat = cur.integers_until(";");
      have_gram = true;
    } else if (key == "canonical") {
      canonical = cur.integers_until(";");
      have_canonical = true;
    } else if (key == "generator") {
      generator = cur.integers_until(";");
    } else if (key == "name") {
      while (!(cur.peek().kind == text::TokKind::Punct && cur.peek().text == ";")) {
        if (cur.at_end()) cur.error("unterminated name");
        name += cur.next().text;
      }
    } else if (key == "simply_connected") {
      std::string v = cur.word();
      if (v != "true" && v != "false") cur.error("simply_connected must be true or false");
      simply_connected = v == "true";
    } else {
      cur.error("unknown key '" + key + "'");
    }
    cur.expect(";");
  }
  if (!rank || *rank <= 0) fail(ErrorKind::Parse, "missing or nonpositive rank");
  if (!have_gram || !have_canonical) fail(ErrorKind::Parse, "gram and canonical are required");
  const auto n = static_cast<std::size_t>(*rank);
  if (gram_flat.size() != n * n)
    fail(ErrorKind::Parse, "gram has " + std::to_string(gram_flat.size()) + " entries, expected " +
                               std::to_string(n * n));
  IntMatrix gram(n, IntVec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) gram[i][j] = gram_flat[i * n + j];
  auto lattice = picard::make_lattice(gram, canonical, name, simply_connected);
  Surface s{lattice, JetLedger(lattice), generator};
  for (const auto& [coords, level] : jets)
    s.ledger.declare(DivisorClass(lattice, coords), level, "declared in lattice file");
  return s;
}

std::string write_lattice(const Surface& s) {
  const auto& lat = *s.lattice;
  std::ostringstream os;
  os << "rank = " << lat.rank() << ";\n";
  os << "gram =";
  for (int i = 0; i < lat.rank(); ++i) {
    for (int j = 0; j < lat.rank(); ++j) os << ' ' << lat.gram()[i][j];
    if (i + 1 < lat.rank()) os << ',';
  }
  os << ";\ncanonical =";
  for (Int v : lat.canonical()) os << ' ' << v;
  os << ";\n";
  if (!lat.name().empty()) os << "name = " << lat.name() << ";\n";
  os << "simply_connected = " << (lat.simply_connected() ? "true" : "false") << ";\n";
  if (s.ample_generator) {
    os << "generator =";
    for (Int v : *s.ample_generator) os << ' ' << v;
    os << ";\n";
  }
  auto entries = s.ledger.entries();
  if (!entries.empty()) {
    os << "jets {\n";
    for (const auto& [coords, e] : entries) os << "  " << format_vec(coords) << " : " << e.level << ";\n";
    os << "}\n";
  }
  return os.str();
}

Surface load_surface(const std::string& name_or_path) {
  if (std::filesystem::exists(name_or_path)) return parse_lattice(text::read_file(name_or_path));
  return builtin(name_or_path);
}

}  // namespace rspin::catalog
