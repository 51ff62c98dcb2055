#include "rspin/milnor.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "rspin/kernels.hpp"

namespace rspin::milnor {

PlaneGerm::PlaneGerm(std::map<Monomial, mpq_class> terms) {
  for (auto& [m, c] : terms) {
    if (m.first < 0 || m.second < 0) fail(ErrorKind::InconsistentInput, "negative exponent");
    if (c != 0) terms_.emplace(m, c);
  }
}

int PlaneGerm::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.first + m.second);
  return d;
}

std::string monomial_str(const Monomial& m) {
  if (m.first == 0 && m.second == 0) return "1";
  std::string s;
  if (m.first > 0) s += m.first == 1 ? "x" : "x^" + std::to_string(m.first);
  if (m.second > 0) s += m.second == 1 ? "y" : "y^" + std::to_string(m.second);
  return s;
}

std::string PlaneGerm::str() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Monomial, mpq_class>> ordered(terms_.begin(), terms_.end());
  std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    int da = a.first.first + a.first.second, db = b.first.first + b.first.second;
    return da != db ? da > db : a.first.first > b.first.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : ordered) {
    mpq_class mag = abs(c);
    os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    bool unit = mag == 1;
    if (!unit || (m.first == 0 && m.second == 0)) os << mag.get_str() << (m.first + m.second > 0 ? "*" : "");
    if (m.first + m.second > 0) os << monomial_str(m);
    first = false;
  }
  return os.str();
}

PlaneGerm parse_polynomial(const std::string& text) {
  std::map<Monomial, mpq_class> terms;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto bad = [&](const std::string& msg) -> void {
    fail(ErrorKind::Parse, "polynomial '" + text + "' at column " + std::to_string(i + 1) + ": " + msg);
  };
  auto number = [&]() {
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (start == i) bad("expected a number");
    if (i - start > 30) bad("number too long");
    return mpz_class(text.substr(start, i - start));
  };
  skip();
  if (i == text.size()) bad("empty polynomial");
  bool first = true;
  while (true) {
    skip();
    if (i == text.size()) break;
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip();
    } else if (!first) {
      bad("expected '+' or '-'");
    }
    first = false;
    mpq_class coeff = sign;
    Monomial mono{0, 0};
    bool any = false;
    while (true) {
      skip();
      if (i == text.size()) break;
      char c = text[i];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        mpq_class v(number());
        skip();
        if (i < text.size() && text[i] == '/') {
          ++i;
          skip();
          mpz_class den = number();
          if (den == 0) bad("zero denominator");
          v /= den;
        }
        coeff *= v;
      } else if (c == 'x' || c == 'y') {
        ++i;
        int e = 1;
        skip();
        if (i < text.size() && text[i] == '^') {
          ++i;
          skip();
          mpz_class ez = number();
          if (ez > 200) bad("exponent too large");
          e = static_cast<int>(ez.get_si());
        }
        (c == 'x' ? mono.first : mono.second) += e;
      } else {
        break;
      }
      any = true;
      skip();
      if (i < text.size() && text[i] == '*') {
        ++i;
        skip();
        if (i == text.size() || !(std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == 'x' || text[i] == 'y'))
          bad("dangling '*'");
      }
    }
    if (!any) bad("expected a term");
    terms[mono] += coeff;
  }
  return PlaneGerm(terms);
}

std::pair<PlaneGerm, PlaneGerm> jacobian(const PlaneGerm& f) {
  std::map<Monomial, mpq_class> dx, dy;
  for (const auto& [m, c] : f.terms()) {
    if (m.first > 0) dx[{m.first - 1, m.second}] += c * m.first;
    if (m.second > 0) dy[{m.first, m.second - 1}] += c * m.second;
  }
  return {PlaneGerm(dx), PlaneGerm(dy)};
}

PlaneGerm swap_variables(const PlaneGerm& f) {
  std::map<Monomial, mpq_class> out;
  for (const auto& [m, c] : f.terms()) out[{m.second, m.first}] = c;
  return PlaneGerm(out);
}

namespace {

// Columns: monomials of degree <= n, descending degree, then descending x power.
std::vector<Monomial> columns(int n) {
  std::vector<Monomial> cols;
  for (int d = n; d >= 0; --d)
    for (int a = d; a >= 0; --a) cols.emplace_back(a, d - a);
  return cols;
}

int column_index(const Monomial& m, int n) {
  int d = m.first + m.second;
  int before = 0;
  for (int e = n; e > d; --e) before += e + 1;
  return before + (d - m.first);
}

struct Truncation {
  Int dimension = 0;
  std::vector<Monomial> standard;
};

Truncation truncate(const PlaneGerm& f, int n, bool parallel) {
  auto [fx, fy] = jacobian(f);
  const auto cols = columns(n);
  std::vector<kernels::SparseRow> rows;
  for (const PlaneGerm* g : {&fx, &fy}) {
    if (g->is_zero()) continue;
    mpz_class lcm = 1;
    for (const auto& [m, c] : g->terms()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
    for (int d = 0; d <= n; ++d)
      for (int a = 0; a <= d; ++a) {
        kernels::SparseRow row;
        for (const auto& [m, c] : g->terms()) {
          Monomial prod{m.first + a, m.second + d - a};
          if (prod.first + prod.second > n) continue;
          mpq_class scaled = c * lcm;
          row.emplace_back(column_index(prod, n), scaled.get_num());
        }
        if (row.empty()) continue;
        std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        rows.push_back(std::move(row));
      }
  }
  auto ech = parallel ? kernels::echelon_parallel(std::move(rows)) : kernels::echelon_serial(std::move(rows));
  Truncation t;
  std::vector<char> pivot(cols.size(), 0);
  for (int c : ech.pivot_columns) pivot[c] = 1;
  for (std::size_t c = 0; c < cols.size(); ++c)
    if (!pivot[c]) t.standard.push_back(cols[c]);
  t.dimension = static_cast<Int>(t.standard.size());
  return t;
}

}  // namespace

Int truncated_dimension(const PlaneGerm& f, int n, bool parallel) { return truncate(f, n, parallel).dimension; }

MilnorResult milnor_number(const PlaneGerm& f, int ceiling, bool parallel) {
  Truncation prev = truncate(f, 0, parallel);
  for (int n = 1; n <= ceiling; ++n) {
    Truncation cur = truncate(f, n, parallel);
    if (cur.dimension == prev.dimension) {
      MilnorResult r;
      r.mu = prev.dimension;
      r.basis = prev.standard;
      r.truncation = n - 1;
      std::sort(r.basis.begin(), r.basis.end(),
                [](const Monomial& a, const Monomial& b) { return std::tie(a.second, a.first) < std::tie(b.second, b.first); });
      return r;
    }
    prev = std::move(cur);
  }
  fail(ErrorKind::NotIsolated, "quotient dimension of '" + f.str() + "' did not stabilise by degree " +
                                   std::to_string(ceiling) + "; singularity not isolated or too deep");
}

int jet_requirement(const PlaneGerm& f, const std::vector<Monomial>& basis) {
  int k = f.degree() + 2;
  for (const auto& m : basis) k = std::max(k, m.first + m.second);
  return k;
}

MorsificationReference morsification_reference(const std::string& type) {
  MorsificationReference ref;
  ref.system = curveconf::dynkin(type);
  if (type == "A7") {
    for (int i = 1; i <= 7; ++i) ref.markers.push_back(i % 2 == 1 ? "Delta" : "arc");
    ref.provenance =
        "reference data: smoothing of y(y + x^4) as C~ u D~ with C = {y + x^4 + eps = 0}, D = {y = 0}; "
        "odd curves are the four separating circles, even curves cross once between them";
  } else if (type == "E6") {
    ref.provenance = "reference data: vanishing cycles of a Morsification of x^3 + y^4 (E6 diagram)";
  } else {
    ref.provenance = "standard chain of vanishing cycles";
  }
  return ref;
}

}  // namespace rspin::milnor
