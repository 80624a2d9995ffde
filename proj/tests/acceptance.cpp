// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure.  All corpus sizes, bounds, and time limits are pinned here.

#include <chrono>
#include <cstdio>
#include <string>

#include "raag/verify.hpp"

using namespace raag;

namespace {

int g_failures = 0;

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void report(int criterion, const std::string& what, bool ok, long long cases, double elapsed,
            const std::string& detail) {
  std::printf("%s criterion %d: %s (cases=%lld, %.1fs)%s%s\n", ok ? "PASS" : "FAIL", criterion,
              what.c_str(), cases, elapsed, detail.empty() ? "" : " — ", detail.c_str());
  if (!ok) ++g_failures;
}

void run_family(int criterion, const std::string& what, CheckResult (*family)(const CheckOptions&),
                const CheckOptions& opt, long long min_cases, double time_limit) {
  auto start = std::chrono::steady_clock::now();
  CheckResult res = family(opt);
  double elapsed = seconds_since(start);
  std::string detail;
  bool ok = res.failures == 0;
  if (!ok) detail = res.first_failure;
  if (res.cases < min_cases) {
    ok = false;
    detail += " too few cases, expected >= " + std::to_string(min_cases);
  }
  if (elapsed > time_limit) {
    ok = false;
    detail += " over the " + std::to_string(static_cast<int>(time_limit)) + "s budget";
  }
  report(criterion, what, ok, res.cases, elapsed, detail);
}

// The P3 path graph has a fully pinned answer: its lattice, its legal
// transvections, and the exact shape of the stabiliser matrix group.
void p3_fixture() {
  auto start = std::chrono::steady_clock::now();
  Graph g({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  Context ctx(g);
  long long cases = 0;
  bool ok = true;
  std::string detail;
  auto expect = [&](bool cond, const std::string& msg) {
    ++cases;
    if (!cond && ok) {
      ok = false;
      detail = msg;
    }
  };

  auto set = [&](const std::string& names) {
    VertexSet y;
    for (char c : names) y.add(g.vertex(std::string(1, c)));
    return y;
  };
  expect(ctx.lattice().closed_sets() ==
             std::vector<VertexSet>{set("b"), set("ab"), set("bc"), set("abc")},
         "lattice of the path is not {{b},{a,b},{b,c},{a,b,c}}");

  auto tr = enumerate_generators(ctx).transvections;
  expect(tr == std::vector<std::pair<int, int>>{{g.vertex("a"), g.vertex("b")},
                                                {g.vertex("c"), g.vertex("b")}},
         "legal transvections are not exactly (a,b) and (c,b)");

  // Exhaustive comparison over all small integer matrices: membership in the
  // matrix group must coincide with "diagonal +-1, free entries only at
  // (a,b) and (c,b)" in the row order (a, c, b).
  StabPattern p = StabPattern::of(ctx, g.all());
  int e[9];
  for (e[0] = -2; e[0] <= 2; ++e[0])
    for (e[1] = -2; e[1] <= 2; ++e[1])
      for (e[2] = -2; e[2] <= 2; ++e[2])
        for (e[3] = -2; e[3] <= 2; ++e[3])
          for (e[4] = -2; e[4] <= 2; ++e[4])
            for (e[5] = -2; e[5] <= 2; ++e[5])
              for (e[6] = -2; e[6] <= 2; ++e[6])
                for (e[7] = -2; e[7] <= 2; ++e[7])
                  for (e[8] = -2; e[8] <= 2; ++e[8]) {
                    IntMatrix m = {{e[0], e[1], e[2]}, {e[3], e[4], e[5]}, {e[6], e[7], e[8]}};
                    bool direct = (e[0] == 1 || e[0] == -1) && (e[4] == 1 || e[4] == -1) &&
                                  (e[8] == 1 || e[8] == -1) && e[1] == 0 && e[3] == 0 &&
                                  e[6] == 0 && e[7] == 0;
                    ++cases;
                    if (StabMatrix::is_member(m, p) != direct && ok) {
                      ok = false;
                      detail = "pattern membership disagrees with the pinned shape";
                    }
                  }
  report(9, "path-graph fixture", ok, cases, seconds_since(start), detail);
}

}  // namespace

int main() {
  CheckOptions opt;  // exhaustive <=5 vertices, 300 random <=8, seed 1
  opt.matrix_pairs = 1000;
  opt.generator_words = 500;
  opt.matrix_samples = 500;
  opt.factor_samples = 200;
  opt.entry_bound = 5;
  opt.conj_max_vertices = 6;

  run_family(1, "closure-operator axioms", check_closure_axioms, opt, 1000, 60.0);
  run_family(2, "lattice laws and class boundaries", check_lattice_laws, opt, 1000, 600.0);
  run_family(3, "total order properties and determinism", check_total_order, opt, 1000, 600.0);
  run_family(4, "stabiliser matrix algebra", check_matrix_algebra, opt, 9LL * 1000, 120.0);
  run_family(5, "matrix representation and decomposition", check_pi_homomorphism, opt,
             9LL * 1000, 600.0);
  run_family(6, "restriction diagram", check_restriction_diagram, opt, 100, 600.0);
  run_family(7, "elementary-conjugation witnesses", check_conj_witnesses, opt, 1000, 600.0);
  run_family(8, "semidirect factorization", check_factorization, opt, 7LL * 200, 300.0);
  p3_fixture();

  if (g_failures) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all acceptance criteria passed\n");
  return 0;
}
