// diperfect: command-line front end.
//
// Exit codes: 0 property holds / construction succeeded, 1 definite negative
// (witness on stdout), 2 usage or input error, 3 size cap or budget exceeded,
// 4 internal error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "diperfect/constructive.hpp"
#include "diperfect/error.hpp"
#include "diperfect/forbidden.hpp"
#include "diperfect/harness.hpp"
#include "diperfect/io.hpp"
#include "diperfect/oracles.hpp"
#include "diperfect/validate.hpp"

using namespace diperfect;

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;
constexpr int kTooLarge = 3;
constexpr int kInternal = 4;

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::ParseError, "cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Digraph load(const std::string& path, const std::string& format) {
  const std::string text = read_input(path);
  if (format == "auto") return parse_digraph(text);
  return parse_digraph(text, parse_format(format));
}

VertexSet parse_set(const std::string& text, int order) {
  VertexSet s;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    int v = -1;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || v < 0) fail(ErrorCode::ParseError, "bad vertex '" + item + "' in --set");
    if (v >= order) fail(ErrorCode::VertexOutOfRange, "vertex " + item + " outside 0.." + std::to_string(order - 1));
    s.insert(static_cast<Vertex>(v));
  }
  return s;
}

void print(const Json& j) { std::cout << dump(document(j)); }

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::TooLarge:
    case ErrorCode::BudgetExceeded:
      return kTooLarge;
    case ErrorCode::InternalTheoremViolation:
      return kInternal;
    default:
      return kUsage;
  }
}

int default_jobs() {
  if (const char* env = std::getenv("DIPERFECT_JOBS")) {
    const int jobs = std::atoi(env);
    if (jobs > 0) return jobs;
  }
  return 1;
}

std::optional<Witness> forbidden_witness(const Digraph& d, Mode mode) {
  return mode == Mode::Alpha ? find_induced_anti_directed_odd_cycle(d) : find_induced_blocking_odd_cycle(d);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Path partitions of digraphs with one stable-set vertex per path"};
  app.require_subcommand(1);

  std::string file;
  std::string format = "auto";
  std::string mode_name = "alpha";

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("file", file, "Digraph file, or - for standard input")->required();
    sub->add_option("--format", format, "auto, edge_list, digraph6 or json")->check(CLI::IsMember({"auto", "edge_list", "digraph6", "json"}));
  };
  auto add_mode = [&](CLI::App* sub, const char* flag) {
    sub->add_option(flag, mode_name, "alpha or be")->check(CLI::IsMember({"alpha", "be"}));
  };

  auto* classify_cmd = app.add_subcommand("classify", "Report class memberships and α");
  add_input(classify_cmd);

  auto* forbidden_cmd = app.add_subcommand("forbidden", "Search for the obstruction of the chosen property");
  add_input(forbidden_cmd);
  add_mode(forbidden_cmd, "--mode");

  std::string set_text;
  std::string builder = "auto";
  auto* partition_cmd = app.add_subcommand("partition", "Build a certified S-path partition");
  add_input(partition_cmd);
  partition_cmd->add_option("--set", set_text, "Maximum stable set, comma separated")->required();
  add_mode(partition_cmd, "--mode");
  partition_cmd->add_option("--builder", builder, "auto or oracle")->check(CLI::IsMember({"auto", "oracle"}));

  bool diperfect_flag = false;
  auto* check_cmd = app.add_subcommand("check", "Check the α- or BE-property");
  add_input(check_cmd);
  add_mode(check_cmd, "--property");
  check_cmd->add_flag("--diperfect", diperfect_flag, "Check every induced subdigraph");

  int n = 0;
  bool up_to_iso = false;
  int jobs = default_jobs();
  std::size_t samples = 0;
  std::uint64_t seed = 1;
  std::size_t budget = 0;
  bool stats = false;
  auto* survey_cmd = app.add_subcommand("survey", "Cross-tabulate class membership and diperfection");
  survey_cmd->add_option("--n", n, "Largest order")->required()->check(CLI::Range(1, kMaxOrder));
  add_mode(survey_cmd, "--mode");
  survey_cmd->add_flag("--up-to-iso", up_to_iso, "One digraph per isomorphism class");
  survey_cmd->add_option("--jobs", jobs, "Worker threads (default DIPERFECT_JOBS or 1)")->check(CLI::PositiveNumber);
  survey_cmd->add_option("--samples", samples, "Random digraphs per order above the exhaustive range");
  survey_cmd->add_option("--seed", seed, "Sampling seed");
  survey_cmd->add_option("--budget", budget, "Maximum number of digraphs examined");
  survey_cmd->add_flag("--stats", stats, "Include timing in the report");

  std::string class_name;
  int lonely = -1;
  auto* validate_cmd = app.add_subcommand("validate", "Validate a class theorem on sampled members");
  validate_cmd->add_option("--class", class_name, "perfect, series_parallel, in_semicomplete, semi_symmetric, semicomplete, cycle")->required();
  validate_cmd->add_option("--n", n, "Order")->required()->check(CLI::Range(1, kMaxOrder));
  add_mode(validate_cmd, "--mode");
  validate_cmd->add_option("--samples", samples, "Sample count; 0 for every member up to isomorphism");
  validate_cmd->add_option("--seed", seed, "Sampling seed");
  validate_cmd->add_option("--lonely", lonely, "Lonely arcs for semi_symmetric (-1 random)");

  std::string target = "edge_list";
  auto* convert_cmd = app.add_subcommand("convert", "Rewrite a digraph in another format");
  add_input(convert_cmd);
  convert_cmd->add_option("--to", target, "edge_list, digraph6, dot or json")->check(CLI::IsMember({"edge_list", "digraph6", "dot", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const Mode mode = parse_mode(mode_name);

    if (classify_cmd->parsed()) {
      print(to_json(classify(load(file, format))));
      return kOk;
    }

    if (forbidden_cmd->parsed()) {
      const Digraph d = load(file, format);
      const std::optional<Witness> w = forbidden_witness(d, mode);
      Json j{{"mode", to_string(mode)}, {"found", w.has_value()}};
      j["witness"] = w ? to_json(*w) : Json(nullptr);
      print(j);
      return w ? kNegative : kOk;
    }

    if (partition_cmd->parsed()) {
      const Digraph d = load(file, format);
      const VertexSet s = parse_set(set_text, d.order());
      const int alpha = stability_number(d);
      if (!underlying_graph(d).is_stable(s)) {
        std::cerr << "error: the set is not stable\n";
        return kUsage;
      }
      if (static_cast<int>(s.size()) != alpha) {
        std::cerr << "error: the set is not a maximum stable set; alpha = " << alpha << "\n";
        return kUsage;
      }
      Json j{{"mode", to_string(mode)}, {"stable_set", to_json(s)}, {"alpha", alpha}};
      std::optional<Build> built;
      if (builder == "auto") built = build_partition(d, s, mode);
      if (!built) {
        std::optional<PathPartition> p = exists_s_path_partition(d, s, mode);
        if (p) {
          built = Build{*p, {}};
          built->trace.add("dispatch", "oracle");
        }
      }
      if (!built) {
        j["found"] = false;
        const std::optional<Witness> w = forbidden_witness(d, mode);
        j["witness"] = w ? to_json(*w) : Json(nullptr);
        print(j);
        return kNegative;
      }
      if (const auto bad = partition_violation(d, built->partition)) fail(ErrorCode::InternalTheoremViolation, *bad);
      j["found"] = true;
      j["partition"] = to_json(built->partition);
      j["trace"] = to_json(built->trace);
      print(j);
      return kOk;
    }

    if (check_cmd->parsed()) {
      const Digraph d = load(file, format);
      const PropertyReport r = diperfect_flag ? check_diperfect(d, mode) : check_property(d, mode);
      Json j = to_json(r);
      j["diperfect"] = diperfect_flag;
      print(j);
      return r.holds ? kOk : kNegative;
    }

    if (survey_cmd->parsed()) {
      SurveyOptions options;
      options.up_to_iso = up_to_iso;
      options.jobs = jobs;
      options.samples = samples;
      options.seed = seed;
      if (budget > 0) options.budget = budget;
      const SurveyReport r = survey_conjecture(n, mode, options);
      print(to_json(r, stats));
      return r.counterexamples.empty() ? kOk : kNegative;
    }

    if (validate_cmd->parsed()) {
      ValidationOptions options;
      options.samples = samples;
      options.seed = seed;
      options.lonely_arcs = lonely;
      const ValidationReport r = validate_theorem(class_name, n, mode, options);
      print(to_json(r));
      return r.failures.empty() ? kOk : kNegative;
    }

    if (convert_cmd->parsed()) {
      std::cout << emit(load(file, format), parse_format(target));
      return kOk;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}
