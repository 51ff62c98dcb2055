// Serial reference vs OpenMP kernels: checks agreement and reports wall time.
//   bench_kernels [--rows N] [--cols N] [--genus G] [--vertices N] [--reps N]

#include <chrono>
#include <cstdio>
#include <random>

#include <omp.h>

#include "CLI11.hpp"
#include "rspin/kernels.hpp"
#include "rspin/milnor.hpp"

using namespace rspin;
using Clock = std::chrono::steady_clock;

namespace {

template <class F>
double best_ms(int reps, F&& f) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    auto t0 = Clock::now();
    f();
    best = std::min(best, std::chrono::duration<double, std::milli>(Clock::now() - t0).count());
  }
  return best;
}

std::vector<kernels::SparseRow> random_rows(int nr, int nc, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<kernels::SparseRow> rows(nr);
  for (auto& row : rows)
    for (int c = 0; c < nc; ++c)
      if (rng() % 4 == 0) {
        long v = static_cast<long>(rng() % 19) - 9;
        if (v) row.emplace_back(c, mpz_class(v));
      }
  return rows;
}

// A path 0..n-1 with a pendant vertex n on n-4: the only E6 sits at the far
// end, so the search scans almost every six-subset.
curveconf::IntersectionGraph planted_graph(int n) {
  curveconf::IntersectionGraph g;
  g.vertices = n + 1;
  for (int v = 1; v < n; ++v) g.edges.emplace_back(v - 1, v);
  g.edges.emplace_back(n - 4, n);
  return g;
}

void row(const char* name, double serial, double parallel, bool agree) {
  std::printf("%-22s %12.2f %12.2f %8.2fx  %s\n", name, serial, parallel, serial / std::max(parallel, 1e-9),
              agree ? "agree" : "DISAGREE");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Serial vs OpenMP kernel benchmark"};
  int nr = 120, nc = 120, genus = 6, vertices = 36, reps = 3;
  app.add_option("--rows", nr);
  app.add_option("--cols", nc);
  app.add_option("--genus", genus);
  app.add_option("--vertices", vertices);
  app.add_option("--reps", reps);
  CLI11_PARSE(app, argc, argv);

  std::printf("threads: %d\n", omp_get_max_threads());
  std::printf("%-22s %12s %12s %9s\n", "kernel", "serial ms", "parallel ms", "speedup");
  bool ok = true;

  auto rows = random_rows(nr, nc, 17);
  kernels::EchelonResult es, ep;
  double ts = best_ms(reps, [&] { es = kernels::echelon_serial(rows); });
  double tp = best_ms(reps, [&] { ep = kernels::echelon_parallel(rows); });
  ok &= es.pivot_columns == ep.pivot_columns;
  row("echelon (random)", ts, tp, es.pivot_columns == ep.pivot_columns);

  auto f = milnor::parse_polynomial("y^2+y*x^4");
  milnor::MilnorResult ms, mp;
  ts = best_ms(reps, [&] { ms = milnor::milnor_number(f, milnor::kDefaultDegreeCeiling, false); });
  tp = best_ms(reps, [&] { mp = milnor::milnor_number(f, milnor::kDefaultDegreeCeiling, true); });
  ok &= ms.mu == mp.mu && ms.basis == mp.basis;
  row("milnor A7", ts, tp, ms.mu == mp.mu && ms.basis == mp.basis);

  winding::ArfCensus cs, cp;
  ts = best_ms(reps, [&] { cs = kernels::arf_census_serial(genus); });
  tp = best_ms(reps, [&] { cp = kernels::arf_census_parallel(genus); });
  ok &= cs == cp;
  row("arf census", ts, tp, cs == cp);

  auto g = planted_graph(vertices);
  std::optional<std::vector<int>> ss, sp;
  ts = best_ms(reps, [&] { ss = kernels::e6_search_serial(g); });
  tp = best_ms(reps, [&] { sp = kernels::e6_search_parallel(g); });
  ok &= ss == sp;
  row("e6 search", ts, tp, ss == sp);

  return ok ? 0 : 1;
}
