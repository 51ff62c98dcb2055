#pragma once

// Hot loops with a serial reference and an OpenMP version. The two versions
// must agree exactly; tests compare them and bench/ times them.

#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "rspin/curveconf.hpp"
#include "rspin/winding.hpp"

namespace rspin::kernels {

/// Sparse integer row, sorted by column.
using SparseRow = std::vector<std::pair<int, mpz_class>>;

struct EchelonResult {
  std::vector<int> pivot_columns;  // sorted ascending
  std::size_t rank() const { return pivot_columns.size(); }
};

/// Fraction-free elimination; a pivot's column is the smallest index in its row.
EchelonResult echelon_serial(std::vector<SparseRow> rows);
EchelonResult echelon_parallel(std::vector<SparseRow> rows);

winding::ArfCensus arf_census_serial(int genus);
winding::ArfCensus arf_census_parallel(int genus);

/// Lexicographically first six-subset inducing E6.
std::optional<std::vector<int>> e6_search_serial(const curveconf::IntersectionGraph& g);
std::optional<std::vector<int>> e6_search_parallel(const curveconf::IntersectionGraph& g);

}  // namespace rspin::kernels
