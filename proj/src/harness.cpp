#include "diperfect/harness.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <set>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "diperfect/constructive.hpp"
#include "diperfect/error.hpp"
#include "diperfect/forbidden.hpp"
#include "diperfect/validate.hpp"

namespace diperfect {

// ---------------------------------------------------------------------------
// Property checks

PropertyReport check_property(const Digraph& d, Mode mode) {
  if (d.order() > kCheckPropertyMaxOrder) {
    fail(ErrorCode::TooLarge, "check_property supports order <= " + std::to_string(kCheckPropertyMaxOrder));
  }
  PropertyReport report;
  report.digraph = d;
  report.mode = mode;
  const PathPartitionOracle oracle(d);
  for (VertexSet s : max_stable_sets(d).sets) {
    auto p = oracle.with_stable_set(s, mode);
    if (!p) {
      report.holds = false;
      report.failing_stable_set = s;
      report.certificates.clear();
      return report;
    }
    report.certificates.emplace_back(s, std::move(*p));
  }
  return report;
}

namespace {

using Memo = std::unordered_map<std::string, bool>;

bool property_holds(const Digraph& d, Mode mode, Memo* memo) {
  if (d.order() <= 1) return true;
  if (!memo) return check_property(d, mode).holds;
  std::string key = canonical_form(d);
  if (auto it = memo->find(key); it != memo->end()) return it->second;
  const bool holds = check_property(d, mode).holds;
  memo->emplace(std::move(key), holds);
  return holds;
}

PropertyReport check_diperfect_with(const Digraph& d, Mode mode, Memo* memo) {
  const int n = d.order();
  if (n > kCheckDiperfectMaxOrder) {
    fail(ErrorCode::TooLarge, "check_diperfect supports order <= " + std::to_string(kCheckDiperfectMaxOrder));
  }
  std::vector<std::uint64_t> masks;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) masks.push_back(mask);
  std::stable_sort(masks.begin(), masks.end(), [](std::uint64_t a, std::uint64_t b) { return std::popcount(a) < std::popcount(b); });
  for (std::uint64_t mask : masks) {
    const VertexSet keep(mask);
    if (keep == d.vertices()) break;
    const InducedSubdigraph sub = induced(d, keep);
    if (property_holds(sub.digraph, mode, memo)) continue;
    const PropertyReport local = check_property(sub.digraph, mode);
    PropertyReport out;
    out.digraph = d;
    out.mode = mode;
    out.holds = false;
    out.failing_subset = keep;
    out.failing_stable_set = sub.to_host(*local.failing_stable_set);
    return out;
  }
  PropertyReport top = check_property(d, mode);
  if (!top.holds) top.failing_subset = d.vertices();
  if (memo && n >= 2) memo->emplace(canonical_form(d), top.holds);
  return top;
}

}  // namespace

PropertyReport check_diperfect(const Digraph& d, Mode mode, bool memoize) {
  Memo memo;
  return check_diperfect_with(d, mode, memoize ? &memo : nullptr);
}

// ---------------------------------------------------------------------------
// Enumeration

Digraph digraph_from_code(int n, std::uint64_t code) {
  std::vector<Arc> arcs;
  int p = 0;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j, ++p) {
      const auto state = (code >> (2 * p)) & 3U;
      if (state & 1U) arcs.push_back({i, j});
      if (state & 2U) arcs.push_back({j, i});
    }
  }
  return Digraph::from_arcs(n, arcs);
}

void for_each_digraph(int n, bool up_to_iso, const std::function<bool(const Digraph&)>& filter,
                      const std::function<bool(const Digraph&)>& visit) {
  if (n < 0 || n > kEnumerateMaxOrder) fail(ErrorCode::TooLarge, "exhaustive enumeration supports order <= " + std::to_string(kEnumerateMaxOrder));
  if (up_to_iso && n > kIsoDedupMaxOrder) fail(ErrorCode::TooLarge, "isomorphism dedup supports order <= " + std::to_string(kIsoDedupMaxOrder));
  const int pairs = n * (n - 1) / 2;
  const std::uint64_t total = std::uint64_t{1} << (2 * pairs);
  std::unordered_set<std::string> seen;
  for (std::uint64_t code = 0; code < total; ++code) {
    const Digraph d = digraph_from_code(n, code);
    if (filter && !filter(d)) continue;
    if (up_to_iso && !seen.insert(canonical_form(d)).second) continue;
    if (!visit(d)) return;
  }
}

std::vector<Digraph> enumerate_digraphs(int n, bool up_to_iso, const std::function<bool(const Digraph&)>& filter) {
  std::vector<Digraph> out;
  for_each_digraph(n, up_to_iso, filter, [&](const Digraph& d) {
    out.push_back(d);
    return true;
  });
  return out;
}

namespace {

// Weights for the states none, i→j, j→i, digon.
Digraph weighted_digraph(int n, std::mt19937_64& rng, std::array<double, 4> weights) {
  std::discrete_distribution<int> state(weights.begin(), weights.end());
  std::vector<Arc> arcs;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      const int st = state(rng);
      if (st == 1 || st == 3) arcs.push_back({i, j});
      if (st == 2 || st == 3) arcs.push_back({j, i});
    }
  }
  return Digraph::from_arcs(n, arcs);
}

}  // namespace

Digraph random_digraph(int n, std::mt19937_64& rng) { return weighted_digraph(n, rng, {1, 1, 1, 1}); }

// ---------------------------------------------------------------------------
// Survey

namespace {

struct Verdict {
  bool in_class = false;
  bool diperfect = false;
  PropertyReport report;
};

Verdict judge(const Digraph& d, Mode mode, Memo& memo) {
  Verdict v;
  v.in_class = mode == Mode::Alpha ? in_class_b(d) : in_class_d(d);
  v.report = check_diperfect_with(d, mode, &memo);
  v.diperfect = v.report.holds;
  return v;
}

std::vector<Digraph> survey_population(int n, const SurveyOptions& options) {
  if (n <= kIsoDedupMaxOrder) return enumerate_digraphs(n, options.up_to_iso);
  if (options.samples == 0) fail(ErrorCode::TooLarge, "orders above " + std::to_string(kIsoDedupMaxOrder) + " are sampled; give a sample count");
  std::mt19937_64 rng(options.seed + static_cast<std::uint64_t>(n));
  std::vector<Digraph> out;
  for (std::size_t i = 0; i < options.samples; ++i) out.push_back(random_digraph(n, rng));
  return out;
}

}  // namespace

SurveyReport survey_conjecture(int n_max, Mode mode, const SurveyOptions& options) {
  if (n_max > kCheckDiperfectMaxOrder) fail(ErrorCode::TooLarge, "survey supports n_max <= " + std::to_string(kCheckDiperfectMaxOrder));
  const auto started = std::chrono::steady_clock::now();
  SurveyReport report;
  report.n_max = n_max;
  report.mode = mode;
  report.up_to_iso = options.up_to_iso;
  const int jobs = std::max(1, options.jobs);
  std::vector<Memo> memos(static_cast<std::size_t>(jobs));
  std::size_t examined = 0;

  for (int n = 1; n <= n_max; ++n) {
    const std::vector<Digraph> population = survey_population(n, options);
    examined += population.size();
    if (options.budget && examined > *options.budget) {
      fail(ErrorCode::BudgetExceeded, "survey needs more than " + std::to_string(*options.budget) + " digraphs");
    }
    std::vector<Verdict> verdicts(population.size());
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(jobs));
    auto work = [&](int worker) {
      try {
        for (std::size_t i = static_cast<std::size_t>(worker); i < population.size(); i += static_cast<std::size_t>(jobs)) {
          verdicts[i] = judge(population[i], mode, memos[static_cast<std::size_t>(worker)]);
        }
      } catch (...) {
        errors[static_cast<std::size_t>(worker)] = std::current_exception();
      }
    };
    if (jobs == 1) {
      work(0);
    } else {
      std::vector<std::thread> threads;
      for (int w = 0; w < jobs; ++w) threads.emplace_back(work, w);
      for (std::thread& t : threads) t.join();
    }
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }

    SurveyRow row;
    row.order = n;
    row.digraphs = population.size();
    for (std::size_t i = 0; i < population.size(); ++i) {
      const Verdict& v = verdicts[i];
      if (v.in_class) {
        ++(v.diperfect ? row.in_class_diperfect : row.in_class_not_diperfect);
      } else {
        ++(v.diperfect ? row.out_class_diperfect : row.out_class_not_diperfect);
      }
      if (v.in_class != v.diperfect) {
        report.counterexamples.push_back(Counterexample{population[i], v.in_class ? "sufficiency" : "necessity", v.report});
      }
    }
    report.rows.push_back(row);
  }
  report.stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  report.stats.jobs = jobs;
  for (const Memo& m : memos) report.stats.memo_entries += m.size();
  return report;
}

// ---------------------------------------------------------------------------
// Theorem validation

namespace {

bool disjoint_lonely(const std::vector<Arc>& lonely) {
  VertexSet seen;
  for (const Arc& a : lonely) {
    if (seen.contains(a.tail) || seen.contains(a.head)) return false;
    seen.insert(a.tail);
    seen.insert(a.head);
  }
  return true;
}

bool class_gate(const Digraph& d, Mode mode) { return mode == Mode::Alpha ? in_class_b(d) : in_class_d(d); }

bool is_member(const std::string& name, const Digraph& d, Mode mode) {
  if (name == "perfect") return is_perfect(underlying_graph(d)).perfect && (mode == Mode::Alpha || in_class_d(d));
  if (name == "series_parallel") return is_series_parallel(underlying_graph(d)) && class_gate(d, mode);
  if (name == "in_semicomplete") return is_in_semicomplete(d) && (mode == Mode::Alpha || in_class_d(d));
  if (name == "semi_symmetric") {
    const std::vector<Arc> lonely = lonely_arcs(d);
    return lonely.size() <= 2 || (lonely.size() == 3 && disjoint_lonely(lonely));
  }
  if (name == "semicomplete") return is_semicomplete(d) && (mode == Mode::Alpha || !find_induced_transitive_triangle(d));
  if (name == "cycle") return underlying_cycle(d).has_value() && class_gate(d, mode);
  fail(ErrorCode::UnknownClass, "unknown class '" + name + "'");
}

Digraph sample_in_semicomplete(int n, std::mt19937_64& rng) {
  std::vector<Arc> candidates;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u != v) candidates.push_back({u, v});
    }
  }
  std::shuffle(candidates.begin(), candidates.end(), rng);
  const std::size_t attempts = std::uniform_int_distribution<std::size_t>(0, candidates.size())(rng);
  Digraph d(n);
  for (std::size_t i = 0; i < attempts; ++i) {
    const Arc a = candidates[i];
    const VertexSet in = d.in_neighbors(a.head);
    if (!in.is_subset_of(d.neighbors(a.tail))) continue;
    const std::vector<Arc> add{a};
    d = d.with_arcs_added(add);
  }
  return d;
}

Digraph sample_semi_symmetric(int n, std::mt19937_64& rng, int lonely) {
  Digraph d = weighted_digraph(n, rng, {1, 0, 0, 1});
  const int k = lonely >= 0 ? lonely : std::uniform_int_distribution<int>(0, 3)(rng);
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
  std::shuffle(order.begin(), order.end(), rng);
  for (int i = 0; i < k && 2 * i + 1 < n; ++i) {
    const Vertex u = order[static_cast<std::size_t>(2 * i)];
    const Vertex v = order[static_cast<std::size_t>(2 * i + 1)];
    const std::vector<Arc> back{{v, u}};
    const std::vector<Arc> forth{{u, v}};
    d = d.is_digon(u, v) ? d.with_arcs_removed(back) : d.with_arcs_added(forth);
  }
  return d;
}

Digraph sample_cycle(int n, std::mt19937_64& rng) {
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
  std::shuffle(order.begin(), order.end(), rng);
  std::uniform_int_distribution<int> state(1, 3);
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i) {
    const Vertex a = order[static_cast<std::size_t>(i)];
    const Vertex b = order[static_cast<std::size_t>((i + 1) % n)];
    const int st = state(rng);
    if (st & 1) arcs.push_back({a, b});
    if (st & 2) arcs.push_back({b, a});
  }
  return Digraph::from_arcs(n, arcs);
}

Digraph sample_candidate(const std::string& name, int n, Mode mode, std::mt19937_64& rng, int lonely) {
  const bool be = mode == Mode::BE;
  if (name == "perfect") return be ? weighted_digraph(n, rng, {4, 1, 1, 5}) : weighted_digraph(n, rng, {3, 2, 2, 3});
  if (name == "series_parallel") return be ? weighted_digraph(n, rng, {12, 1, 1, 6}) : weighted_digraph(n, rng, {6, 2, 2, 2});
  if (name == "in_semicomplete") return sample_in_semicomplete(n, rng);
  if (name == "semi_symmetric") return sample_semi_symmetric(n, rng, lonely);
  if (name == "semicomplete") return be ? weighted_digraph(n, rng, {0, 1, 1, 4}) : weighted_digraph(n, rng, {0, 1, 1, 1});
  if (name == "cycle") return sample_cycle(n, rng);
  fail(ErrorCode::UnknownClass, "unknown class '" + name + "'");
}

Build semicomplete_build(const Digraph& d, VertexSet s, Mode mode) {
  Build out;
  const Path p = mode == Mode::Alpha ? redei_hamilton_path(d) : hamilton_path_with_end(d, s.front());
  out.trace.add(mode == Mode::Alpha ? "redei" : "st_hamilton_path");
  out.partition.paths = {p};
  out.partition.kind = partition_kind(mode);
  out.partition.stable_set = s;
  return out;
}

Build run_builder(const std::string& name, const Digraph& d, VertexSet s, Mode mode) {
  if (name == "perfect") return partition_perfect(d, s, mode);
  if (name == "series_parallel") return partition_series_parallel(d, s, mode);
  if (name == "in_semicomplete") return partition_in_semicomplete(d, s, mode);
  if (name == "semi_symmetric") {
    Build b = partition_semi_symmetric(d, s);
    b.partition.kind = partition_kind(mode);
    return b;
  }
  if (name == "semicomplete") return semicomplete_build(d, s, mode);
  return partition_cycle_digraph(d, s, mode);
}

void validate_instance(const std::string& name, const Digraph& d, Mode mode, ValidationReport& report) {
  ++report.instances;
  if (name == "perfect") {
    if (static_cast<int>(min_clique_partition(underlying_graph(d)).size()) == stability_number(d)) {
      ++report.lovasz_confirmed;
    } else {
      report.failures.push_back({d, {}, "minimum clique cover differs from the stability number"});
    }
  }
  if (name == "in_semicomplete" && d.order() >= 2 && is_strong(d)) {
    try {
      if (is_hamilton_cycle(d, hamilton_cycle_strong_in_semicomplete(d))) {
        ++report.hamilton_cycles;
      } else {
        report.failures.push_back({d, {}, "returned sequence is not a Hamilton cycle"});
      }
    } catch (const Error& e) {
      report.failures.push_back({d, {}, e.what()});
    }
  }
  const PathPartitionOracle oracle(d);
  for (VertexSet s : max_stable_sets(d).sets) {
    ++report.stable_sets;
    try {
      const Build b = run_builder(name, d, s, mode);
      if (auto why = partition_violation(d, b.partition)) {
        report.failures.push_back({d, s, "invalid certificate: " + *why});
        continue;
      }
      ++report.certificates_validated;
      if (!oracle.with_stable_set(s, mode)) report.failures.push_back({d, s, "oracle reports no partition"});
    } catch (const Error& e) {
      report.failures.push_back({d, s, e.what()});
    }
  }
}

}  // namespace

const std::vector<std::string>& theorem_classes() {
  static const std::vector<std::string> names{"perfect", "series_parallel", "in_semicomplete", "semi_symmetric", "semicomplete", "cycle"};
  return names;
}

ValidationReport validate_theorem(const std::string& class_name, int n, Mode mode, const ValidationOptions& options) {
  const auto& names = theorem_classes();
  if (std::find(names.begin(), names.end(), class_name) == names.end()) fail(ErrorCode::UnknownClass, "unknown class '" + class_name + "'");
  if (n < 1) fail(ErrorCode::PreconditionViolated, "order must be positive");
  if (class_name == "cycle" && n < 3) fail(ErrorCode::PreconditionViolated, "cycles need order >= 3");
  ValidationReport report;
  report.class_name = class_name;
  report.order = n;
  report.mode = mode;
  report.samples = options.samples;
  report.seed = options.seed;
  report.exhaustive = options.samples == 0;

  auto member = [&](const Digraph& d) {
    if (!is_member(class_name, d, mode)) return false;
    if (class_name == "semi_symmetric" && options.lonely_arcs >= 0) return static_cast<int>(lonely_arcs(d).size()) == options.lonely_arcs;
    return true;
  };
  if (report.exhaustive) {
    if (n > kIsoDedupMaxOrder) fail(ErrorCode::TooLarge, "exhaustive validation supports order <= " + std::to_string(kIsoDedupMaxOrder));
    for_each_digraph(n, true, member, [&](const Digraph& d) {
      validate_instance(class_name, d, mode, report);
      return true;
    });
    return report;
  }
  if (n > kPathPartitionMaxOrder) fail(ErrorCode::TooLarge, "sampled validation supports order <= " + std::to_string(kPathPartitionMaxOrder));
  std::mt19937_64 rng(options.seed);
  const std::size_t max_attempts = options.samples * 5000;
  for (std::size_t attempt = 0; attempt < max_attempts && report.instances < options.samples; ++attempt) {
    const Digraph d = sample_candidate(class_name, n, mode, rng, options.lonely_arcs);
    if (member(d)) validate_instance(class_name, d, mode, report);
  }
  return report;
}

}  // namespace diperfect
