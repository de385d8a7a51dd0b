#pragma once

// Exhaustive and sampled checks of the α- and BE-properties, the conjecture
// survey and the per-class theorem validation.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "diperfect/digraph.hpp"
#include "diperfect/oracles.hpp"

namespace diperfect {

inline constexpr int kCheckPropertyMaxOrder = 10;
inline constexpr int kCheckDiperfectMaxOrder = 9;
inline constexpr int kEnumerateMaxOrder = 6;
inline constexpr int kIsoDedupMaxOrder = 5;

struct PropertyReport {
  Digraph digraph;
  Mode mode = Mode::Alpha;
  bool holds = true;
  /// Maximum stable set without a partition, in the labels of `digraph`.
  std::optional<VertexSet> failing_stable_set;
  /// For check_diperfect: vertex set of the smallest failing induced subdigraph.
  std::optional<VertexSet> failing_subset;
  /// One certificate per maximum stable set when the property holds (for
  /// check_diperfect: the certificates of D itself).
  std::vector<std::pair<VertexSet, PathPartition>> certificates;
};

/// Throws TooLarge above kCheckPropertyMaxOrder.
PropertyReport check_property(const Digraph& d, Mode mode);

/// Property on every induced subdigraph, smallest subsets first. Results of
/// isomorphic subdigraphs are shared when `memoize` is set.
PropertyReport check_diperfect(const Digraph& d, Mode mode, bool memoize = true);

/// Labelled digraph whose pair (i, j), i < j in lexicographic order, has state
/// bits (code >> 2p) & 3: bit 0 the arc i→j, bit 1 the arc j→i.
Digraph digraph_from_code(int n, std::uint64_t code);

/// Streams all labelled digraphs of order n in code order. With `up_to_iso`
/// only the first digraph of each isomorphism class is kept. The visitor
/// returns false to stop.
void for_each_digraph(int n, bool up_to_iso, const std::function<bool(const Digraph&)>& filter,
                      const std::function<bool(const Digraph&)>& visit);

std::vector<Digraph> enumerate_digraphs(int n, bool up_to_iso, const std::function<bool(const Digraph&)>& filter = {});

/// Every pair independently in one of the four states, uniformly.
Digraph random_digraph(int n, std::mt19937_64& rng);

struct SurveyRow {
  int order = 0;
  std::size_t digraphs = 0;
  std::size_t in_class_diperfect = 0;
  std::size_t in_class_not_diperfect = 0;
  std::size_t out_class_diperfect = 0;
  std::size_t out_class_not_diperfect = 0;
};

struct Counterexample {
  Digraph digraph;
  /// "necessity" (forbidden structure yet diperfect) or "sufficiency".
  std::string direction;
  PropertyReport report;
};

struct SurveyStats {
  double seconds = 0;
  int jobs = 1;
  std::size_t memo_entries = 0;
};

struct SurveyReport {
  int n_max = 0;
  Mode mode = Mode::Alpha;
  bool up_to_iso = true;
  std::vector<SurveyRow> rows;
  std::vector<Counterexample> counterexamples;
  /// Timing; kept out of the deterministic JSON rendering.
  SurveyStats stats;
};

struct SurveyOptions {
  bool up_to_iso = true;
  int jobs = 1;
  /// Maximum number of digraphs examined; BudgetExceeded beyond it.
  std::optional<std::size_t> budget;
  /// Orders above kIsoDedupMaxOrder are sampled with this many digraphs;
  /// without samples they raise TooLarge.
  std::size_t samples = 0;
  std::uint64_t seed = 1;
};

SurveyReport survey_conjecture(int n_max, Mode mode, const SurveyOptions& options = {});

struct ValidationFailure {
  Digraph digraph;
  VertexSet stable_set;
  std::string message;
};

struct ValidationReport {
  std::string class_name;
  int order = 0;
  Mode mode = Mode::Alpha;
  bool exhaustive = false;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::size_t instances = 0;
  std::size_t stable_sets = 0;
  std::size_t certificates_validated = 0;
  /// Perfect class: instances whose minimum clique cover has size α.
  std::size_t lovasz_confirmed = 0;
  /// In-semicomplete class: strong instances with a checked Hamilton cycle.
  std::size_t hamilton_cycles = 0;
  std::vector<ValidationFailure> failures;
};

struct ValidationOptions {
  /// 0 means every member of order n up to isomorphism (n <= 5).
  std::size_t samples = 0;
  std::uint64_t seed = 1;
  /// Semi-symmetric class: exact number of lonely arcs, or -1 for 0..3 at random.
  int lonely_arcs = -1;
};

/// Classes: perfect, series_parallel, in_semicomplete, semi_symmetric,
/// semicomplete, cycle. Throws UnknownClass.
ValidationReport validate_theorem(const std::string& class_name, int n, Mode mode, const ValidationOptions& options = {});

const std::vector<std::string>& theorem_classes();

}  // namespace diperfect
