#include "rspin/kernels.hpp"

#include <algorithm>
#include <map>

#include <omp.h>

namespace rspin::kernels {

namespace {

void normalize(SparseRow& row) {
  mpz_class g = 0;
  for (const auto& [c, v] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  if (g > 1)
    for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  if (!row.empty() && row.front().second < 0)
    for (auto& [c, v] : row) v = -v;
}

// row <- lead(pivot) * row - row[col] * pivot, where col = lead column of pivot.
void eliminate(SparseRow& row, const SparseRow& pivot) {
  const int col = pivot.front().first;
  auto hit = std::lower_bound(row.begin(), row.end(), col,
                              [](const auto& e, int c) { return e.first < c; });
  if (hit == row.end() || hit->first != col) return;
  const mpz_class a = pivot.front().second;
  const mpz_class b = hit->second;
  SparseRow out;
  out.reserve(row.size() + pivot.size());
  auto i = row.begin();
  auto j = pivot.begin();
  while (i != row.end() || j != pivot.end()) {
    if (j == pivot.end() || (i != row.end() && i->first < j->first)) {
      out.emplace_back(i->first, a * i->second);
      ++i;
    } else if (i == row.end() || j->first < i->first) {
      out.emplace_back(j->first, -b * j->second);
      ++j;
    } else {
      mpz_class v = a * i->second - b * j->second;
      if (v != 0) out.emplace_back(i->first, std::move(v));
      ++i;
      ++j;
    }
  }
  row = std::move(out);
  normalize(row);
}

}  // namespace

EchelonResult echelon_serial(std::vector<SparseRow> rows) {
  std::map<int, SparseRow> pivots;
  for (auto& row : rows) {
    normalize(row);
    while (!row.empty()) {
      auto it = pivots.find(row.front().first);
      if (it == pivots.end()) break;
      eliminate(row, it->second);
    }
    if (!row.empty()) pivots.emplace(row.front().first, std::move(row));
  }
  EchelonResult out;
  for (const auto& [c, r] : pivots) out.pivot_columns.push_back(c);
  return out;
}

EchelonResult echelon_parallel(std::vector<SparseRow> rows) {
  for (auto& r : rows) normalize(r);
  EchelonResult out;
  std::vector<char> done(rows.size(), 0);
  while (true) {
    // Pivot: the live row with the smallest leading column (ties by index).
    long best = -1;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (done[i] || rows[i].empty()) continue;
      if (best < 0 || rows[i].front().first < rows[best].front().first) best = static_cast<long>(i);
    }
    if (best < 0) break;
    done[best] = 1;
    const SparseRow& pivot = rows[best];
    out.pivot_columns.push_back(pivot.front().first);
    const long n = static_cast<long>(rows.size());
#pragma omp parallel for schedule(dynamic, 16)
    for (long i = 0; i < n; ++i) {
      if (done[i] || rows[i].empty()) continue;
      if (rows[i].front().first == pivot.front().first) eliminate(rows[i], pivot);
    }
  }
  std::sort(out.pivot_columns.begin(), out.pivot_columns.end());
  return out;
}

winding::ArfCensus arf_census_serial(int genus) { return winding::enumerate_forms(genus); }

winding::ArfCensus arf_census_parallel(int genus) {
  if (genus < 0) fail(ErrorKind::InconsistentInput, "genus must be nonnegative");
  if (genus > winding::kMaxCensusGenus)
    fail(ErrorKind::CostGuard, "census refused above genus " + std::to_string(winding::kMaxCensusGenus));
  const long total = 1L << (2 * genus);
  unsigned long long odd = 0;
#pragma omp parallel for reduction(+ : odd) schedule(static)
  for (long m = 0; m < total; ++m) odd += static_cast<unsigned long long>(
      winding::arf_of_assignment(genus, static_cast<winding::Mask>(m)));
  return {static_cast<std::uint64_t>(total) - odd, odd};
}

std::optional<std::vector<int>> e6_search_serial(const curveconf::IntersectionGraph& g) {
  return curveconf::find_induced_e6(g);
}

std::optional<std::vector<int>> e6_search_parallel(const curveconf::IntersectionGraph& g) {
  const int n = g.vertices;
  if (n < 6) return std::nullopt;
  const auto adj = g.adjacency();
  std::vector<std::optional<std::vector<int>>> found(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic, 1)
  for (int first = 0; first <= n - 6; ++first) {
    std::vector<int> pick{first, first + 1, first + 2, first + 3, first + 4, first + 5};
    while (true) {
      if (curveconf::induces_e6(adj, pick)) {
        found[first] = pick;
        break;
      }
      int i = 5;
      while (i >= 1 && pick[i] == n - 6 + i) --i;
      if (i < 1) break;
      ++pick[i];
      for (int j = i + 1; j < 6; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  for (auto& f : found)
    if (f) return f;
  return std::nullopt;
}

}  // namespace rspin::kernels
