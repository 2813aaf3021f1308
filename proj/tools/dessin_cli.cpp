#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "dessin/construct.hpp"
#include "dessin/error.hpp"
#include "dessin/io.hpp"
#include "dessin/zorient.hpp"

namespace {

using namespace dessin;

enum Exit { kOk = 0, kViolation = 1, kParse = 2, kInvalidDessin = 3, kGuard = 4, kBadArgs = 5 };

struct Limits {
  std::size_t max_degree = kDefaultMaxConstructDegree;
  std::size_t max_group_degree = kDefaultMaxDegree;
};

std::size_t env_or(const char* name, std::size_t fallback) {
  const char* value = std::getenv(name);
  if (value == nullptr || *value == '\0') return fallback;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(value, &used);
    if (used != std::string(value).size()) throw std::invalid_argument(name);
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw Error(ErrorKind::InvalidArgument, std::string("environment variable ") + name + " is not a number");
  }
}

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::size_t parse_count(const std::string& text, const char* what) {
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(text, &used);
    if (used == text.size() && text.front() != '-') return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
  }
  throw Error(ErrorKind::InvalidArgument, std::string(what) + " must be a non-negative integer, got '" + text + "'");
}

Dessin build_named(const std::string& name, const std::vector<std::string>& args, const Limits& limits) {
  auto expect_args = [&](std::size_t count) {
    if (args.size() != count)
      throw Error(ErrorKind::InvalidArgument,
                  name + " takes " + std::to_string(count) + " parameter(s), got " + std::to_string(args.size()));
  };
  if (name == "degree2") {
    expect_args(0);
    return degree2_dessin();
  }
  if (name == "example37") {
    expect_args(0);
    return genus_two_pair().plain;
  }
  if (name == "figure5") {
    expect_args(0);
    return genus_three_cover();
  }
  if (name == "dihedral") {
    expect_args(1);
    const std::size_t n = parse_count(args[0], "n");
    check_guard("dessin degree", n, limits.max_degree);
    return dihedral_path(n);
  }
  if (name == "snxsn") {
    expect_args(2);
    const std::size_t n = parse_count(args[0], "n");
    const std::size_t index = parse_count(args[1], "index");
    if (index > 3) throw Error(ErrorKind::InvalidArgument, "index must be 0..3");
    // (n!/24)^2 overflows for large n long before the guard could matter.
    check_guard("S_n x S_n parameter n", n, 12);
    return snxsn_dessin(n, static_cast<int>(index), limits.max_degree).dessin;
  }
  throw Error(ErrorKind::InvalidArgument, "unknown construction '" + name + "'");
}

int run_enumerate(std::size_t n, const std::string& check, const Limits& limits) {
  GroupOptions group_options;
  group_options.max_degree = limits.max_group_degree;
  std::size_t violations = 0;
  std::size_t relevant = 0;
  std::vector<std::string> examples;
  auto report = [&](const Dessin& d, const std::string& why) {
    ++violations;
    if (examples.size() < 5)
      examples.push_back("sigma0=" + to_cycle_string(d.sigma0()) + " sigma1=" + to_cycle_string(d.sigma1()) +
                         ": " + why);
  };
  auto all_even = [](const CycleType& t) {
    for (auto l : t)
      if (l % 2) return false;
    return true;
  };
  const std::size_t total = enumerate_transitive_pairs(n, [&](const Dessin& d) {
    const TotResult t = tot(d);
    if (check == "tot") {
      ++relevant;
      if (t.tot != 0 && t.tot != 1 && t.tot != 3) report(d, "tot = " + std::to_string(t.tot));
    } else if (check == "genus0") {
      const Passport p = passport(d);
      if (p.genus != 0) return;
      ++relevant;
      if (t.verdicts[0] != (all_even(p.white) && all_even(p.black))) report(d, "orientability differs from parity");
    } else {
      ++relevant;
      if (classify_by_monodromy(d, group_options) != t.verdicts) report(d, "monodromy classification differs");
    }
  });
  std::cout << "checked: " << total << "\n";
  std::cout << "relevant: " << relevant << "\n";
  std::cout << "violations: " << violations << "\n";
  for (const auto& e : examples) std::cout << "violation: " << e << "\n";
  return violations == 0 ? kOk : kViolation;
}

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::Parse:
      return kParse;
    case ErrorKind::DegreeMismatch:
    case ErrorKind::NotTransitive:
      return kInvalidDessin;
    case ErrorKind::GuardExceeded:
      return kGuard;
    case ErrorKind::InvalidArgument:
      return kBadArgs;
    case ErrorKind::Internal:
      break;
  }
  return kViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants of dessins d'enfants given as permutation pairs"};
  app.require_subcommand(1);

  std::optional<std::size_t> max_degree_flag, max_group_degree_flag;
  app.add_option("--max-degree", max_degree_flag, "Largest dessin degree accepted (env DESSIN_MAX_DEGREE)");
  app.add_option("--max-group-degree", max_group_degree_flag,
                 "Largest degree for group computations (env DESSIN_MAX_GROUP_DEGREE)");

  std::string analyze_input;
  AnalysisOptions analysis;
  bool analyze_json = false;
  auto* analyze_cmd = app.add_subcommand("analyze", "Report the invariants of a dessin file ('-' for stdin)");
  analyze_cmd->add_option("input", analyze_input)->required();
  analyze_cmd->add_flag("--group", analysis.group, "Monodromy group order and M/M^2 class");
  analyze_cmd->add_flag("--aut", analysis.aut, "Automorphism group order");
  analyze_cmd->add_flag("--tot-only", analysis.tot_only, "Only the orientability triple");
  analyze_cmd->add_flag("--json", analyze_json, "Machine-readable output");

  std::string construct_name;
  std::vector<std::string> construct_args;
  std::string emit = "text";
  auto* construct_cmd = app.add_subcommand("construct", "Emit a catalogue dessin: degree2, example37, figure5, "
                                                        "dihedral <n>, snxsn <n> <i>");
  construct_cmd->add_option("name", construct_name)->required();
  construct_cmd->add_option("params", construct_args);
  construct_cmd->add_option("--emit", emit, "Output format")->check(CLI::IsMember({"text", "json"}));

  std::size_t enumerate_n = 0;
  std::string check = "tot";
  auto* enumerate_cmd = app.add_subcommand("enumerate", "Check a property on every transitive pair of degree n");
  enumerate_cmd->add_option("n", enumerate_n)->required();
  enumerate_cmd->add_option("--check", check)->check(CLI::IsMember({"tot", "genus0", "teo15"}));

  std::string compare_a, compare_b;
  bool compare_group = false;
  auto* compare_cmd = app.add_subcommand("compare", "Compare the invariants of two dessin files");
  compare_cmd->add_option("a", compare_a)->required();
  compare_cmd->add_option("b", compare_b)->required();
  compare_cmd->add_flag("--group", compare_group, "Also compare group-theoretic invariants");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kBadArgs;
  }

  try {
    Limits limits;
    limits.max_degree = max_degree_flag.value_or(env_or("DESSIN_MAX_DEGREE", kDefaultMaxConstructDegree));
    limits.max_group_degree = max_group_degree_flag.value_or(env_or("DESSIN_MAX_GROUP_DEGREE", kDefaultMaxDegree));
    analysis.group_options.max_degree = limits.max_group_degree;
    analysis.max_aut_degree = limits.max_group_degree;

    if (*analyze_cmd) {
      const Dessin d = parse_dessin(read_input(analyze_input), limits.max_degree);
      const AnalysisReport r = analyze(d, analysis);
      std::cout << (analyze_json ? to_json(r) : to_text(r));
      return kOk;
    }
    if (*construct_cmd) {
      const Dessin d = build_named(construct_name, construct_args, limits);
      std::cout << (emit == "json" ? format_dessin_json(d) : format_dessin(d));
      return kOk;
    }
    if (*enumerate_cmd) return run_enumerate(enumerate_n, check, limits);
    if (*compare_cmd) {
      const Dessin a = parse_dessin(read_input(compare_a), limits.max_degree);
      const Dessin b = parse_dessin(read_input(compare_b), limits.max_degree);
      AnalysisOptions opts = analysis;
      opts.group = compare_group;
      std::cout << to_text(compare(a, b, opts));
      return kOk;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kViolation;
  }
  return kBadArgs;
}
