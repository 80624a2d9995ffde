#ifndef RAAG_VERIFY_HPP
#define RAAG_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "raag/conj.hpp"

namespace raag {

/// Knobs for the property suite.  The defaults match the desk-scale corpus
/// the structural theorems are verified on.
struct CheckOptions {
  bool exhaustive = true;     // run every graph up to max_vertices
  int max_vertices = 5;       // exhaustive corpus bound
  int random_graphs = 300;    // extra random graphs
  int random_max_vertices = 8;
  int conj_max_vertices = 6;  // exhaustive bound for witness checks
  int matrix_pairs = 1000;    // per fixture graph
  int generator_words = 500;  // per fixture graph
  int matrix_samples = 500;   // per fixture graph
  int factor_samples = 200;   // per fixture graph
  int entry_bound = 5;
  std::uint64_t seed = 1;
  /// When nonempty, every check runs on exactly these graphs instead of the
  /// generated corpora.
  std::vector<Graph> graphs;
};

struct CheckResult {
  std::string name;
  long long cases = 0;
  long long failures = 0;
  std::string first_failure;  // witness description of the first violation

  bool passed() const { return failures == 0; }
  void record(bool ok, const std::string& witness);
};

// Corpus helpers.
std::vector<Graph> exhaustive_graphs(int max_vertices);
Graph random_graph(int vertices, std::uint64_t seed);
/// The fixed family of named graphs the randomized algebra checks run on.
std::vector<Graph> fixture_graphs();

// One entry per verification family; each returns counts and the first
// violating instance, never throws on a mere property failure.
CheckResult check_closure_axioms(const CheckOptions& opt);
CheckResult check_lattice_laws(const CheckOptions& opt);
CheckResult check_total_order(const CheckOptions& opt);
CheckResult check_matrix_algebra(const CheckOptions& opt);
CheckResult check_pi_homomorphism(const CheckOptions& opt);
CheckResult check_restriction_diagram(const CheckOptions& opt);
CheckResult check_conj_witnesses(const CheckOptions& opt);
CheckResult check_factorization(const CheckOptions& opt);

std::vector<CheckResult> run_verification(const CheckOptions& opt);

}  // namespace raag

#endif
