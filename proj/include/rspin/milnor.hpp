#pragma once

// Isolated plane curve singularities at the origin: Jacobian ideal, Milnor
// number and a monomial basis of the local algebra C[[x,y]]/(f_x, f_y), plus
// reference vanishing-cycle configurations for A_n and E6.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "rspin/curveconf.hpp"

namespace rspin::milnor {

using Monomial = std::pair<int, int>;  // exponents of x and y

class PlaneGerm {
 public:
  PlaneGerm() = default;
  explicit PlaneGerm(std::map<Monomial, mpq_class> terms);

  const std::map<Monomial, mpq_class>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;  // -1 for the zero germ
  std::string str() const;
  bool operator==(const PlaneGerm&) const = default;

 private:
  std::map<Monomial, mpq_class> terms_;
};

/// Grammar: sums of terms like 3, -x, 2/3*x^2*y, yx^4, x^3y^2.
PlaneGerm parse_polynomial(const std::string& text);

std::pair<PlaneGerm, PlaneGerm> jacobian(const PlaneGerm& f);

/// Swaps x and y.
PlaneGerm swap_variables(const PlaneGerm& f);

struct MilnorResult {
  Int mu = 0;
  std::vector<Monomial> basis;  // sorted by y exponent, then x exponent
  int truncation = 0;
};

inline constexpr int kDefaultDegreeCeiling = 24;

/// Dimension of C[x,y]/(J + m^(N+1)) for N = 0, 1, ... until two consecutive
/// values agree; then m^(N+1) lies in J locally and the value is mu. The basis
/// is the set of monomials of degree <= N outside the leading terms, with
/// columns ordered by descending degree and, within a degree, descending
/// power of x. NotIsolated if no agreement occurs by `ceiling`.
MilnorResult milnor_number(const PlaneGerm& f, int ceiling = kDefaultDegreeCeiling, bool parallel = false);

/// Quotient dimension at a single truncation degree N.
Int truncated_dimension(const PlaneGerm& f, int n, bool parallel = false);

/// Smallest k with k >= deg f + 2 and k >= every basis degree.
int jet_requirement(const PlaneGerm& f, const std::vector<Monomial>& basis);

std::string monomial_str(const Monomial& m);

struct MorsificationReference {
  curveconf::CurveSystem system;
  std::vector<std::string> markers;  // per curve; empty when none are recorded
  std::string provenance;
};

/// "A<n>" or "E6". A7 marks a1, a3, a5, a7 as boundary circles between the
/// two smoothed branches and a2, a4, a6 as arcs crossing between them.
MorsificationReference morsification_reference(const std::string& type);

}  // namespace rspin::milnor
