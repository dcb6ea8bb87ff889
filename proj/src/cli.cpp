#include "kantorovich/cli.hpp"

#include <string>
#include <vector>

#include "CLI11.hpp"

#include "kantorovich/errors.hpp"
#include "kantorovich/io.hpp"
#include "kantorovich/laws.hpp"
#include "kantorovich/monad.hpp"
#include "kantorovich/structure.hpp"
#include "kantorovich/transport.hpp"

namespace kantorovich {
namespace {

// Thrown by a subcommand to end with exit code 1 after printing its result.
struct CheckFailed {};

struct Options {
  std::vector<std::string> workspace;
  bool as_json = false;
};

void print_measure(std::ostream& out, const Measure& p) {
  for (std::size_t i = 0; i < p.space().size(); ++i) {
    if (p(i) != 0) out << p.space().label(i) << '\t' << to_string(p(i)) << '\n';
  }
}

void emit(std::ostream& out, const Options& opt, const Measure& p) {
  if (opt.as_json) {
    out << to_json(p).dump(2) << '\n';
  } else {
    print_measure(out, p);
  }
}

void emit_bool(std::ostream& out, const Options& opt, const char* key, bool value) {
  if (opt.as_json) {
    out << json{{key, value}}.dump(2) << '\n';
  } else {
    out << (value ? "true" : "false") << '\n';
  }
}

Workspace load(const Options& opt) {
  if (opt.workspace.empty()) throw ParseError("no --workspace files given");
  return Workspace::from_files(opt.workspace);
}

void cmd_validate(const Options& opt, std::ostream& out) {
  auto ws = load(opt);
  json summary{{"spaces", ws.spaces().size()},
               {"maps", ws.maps().size()},
               {"functionals", ws.functionals().size()},
               {"measures", ws.measures().size()},
               {"nested", ws.nested_measures().size()},
               {"nested2", ws.doubly_nested_measures().size()},
               {"monoids", ws.monoids().size()}};
  if (opt.as_json) {
    out << json{{"valid", true}, {"counts", summary}}.dump(2) << '\n';
    return;
  }
  out << "valid";
  for (const auto& [kind, count] : summary.items()) out << ' ' << kind << '=' << count.get<std::size_t>();
  out << '\n';
}

void cmd_distance(const Options& opt, const std::string& p, const std::string& q, bool verbose,
                  std::ostream& out) {
  auto ws = load(opt);
  auto result = wasserstein(ws.measure(p), ws.measure(q));
  if (!opt.as_json && !verbose) {
    out << to_string(result.value) << '\n';
    return;
  }
  json report{{"distance", rational_to_json(result.value)}};
  if (verbose) {
    report["plan"] = to_json(result.plan);
    report["witness"] = to_json(result.witness.potential);
  }
  if (!opt.as_json) out << to_string(result.value) << '\n';
  out << report.dump(2) << '\n';
}

void cmd_marginals(const Options& opt, const std::string& r, std::ostream& out) {
  auto ws = load(opt);
  auto [first, second] = marginals(ws.measure(r));
  if (opt.as_json) {
    out << json{{"first", to_json(first)}, {"second", to_json(second)}}.dump(2) << '\n';
    return;
  }
  out << "first\n";
  print_measure(out, first);
  out << "second\n";
  print_measure(out, second);
}

void cmd_independent_maps(const Options& opt, const std::string& s, const std::string& f1,
                          const std::string& f2, std::ostream& out) {
  auto ws = load(opt);
  auto result = independent_maps(ws.measure(s), ws.map(f1), ws.map(f2));
  if (opt.as_json) {
    out << json{{"independent", result.independent},
                {"tupling_short", result.tupling_short},
                {"joint", to_json(result.joint)}}
               .dump(2)
        << '\n';
    return;
  }
  out << (result.independent ? "true" : "false") << '\n';
  if (!result.tupling_short) out << "note: the tupling is not short\n";
}

void cmd_expect(const Options& opt, const std::string& mu, std::ostream& out) {
  auto ws = load(opt);
  emit(out, opt, expectation(ws.nested(mu)));
}

void cmd_laws(const Options& opt, std::uint64_t seed, std::size_t cases,
              const std::vector<std::string>& only, const std::string& instance,
              std::ostream& out) {
  if (!instance.empty()) {
    if (only.size() != 1) throw ParseError("--instance needs exactly one --law");
    auto outcome = check_law(only.front(), read_json_file(instance));
    if (opt.as_json) {
      out << json{{"law", only.front()}, {"holds", outcome.holds}, {"diagnostics", outcome.diagnostics}}
                 .dump(2)
          << '\n';
    } else {
      out << only.front() << ": " << (outcome.holds ? "holds" : "fails");
      if (!outcome.holds) out << " (" << outcome.diagnostics << ')';
      out << '\n';
    }
    const auto* law = find_law(only.front());
    const bool expected = law->expectation == Expectation::Holds ? outcome.holds : !outcome.holds;
    if (!expected) throw CheckFailed{};
    return;
  }
  auto report = run_suite(seed, cases, SizeBudget{}, only);
  if (opt.as_json) {
    out << to_json(report).dump(2) << '\n';
  } else {
    for (const auto& law : report.laws) {
      out << law.id << ": " << law.status() << " (" << law.cases_run << " cases, "
          << law.counterexamples << " counterexamples)\n";
      if (!law.ok() && law.first_counterexample) {
        out << "  case " << law.first_counterexample->case_index << ": "
            << law.first_counterexample->diagnostics << '\n';
      }
    }
    out << (report.all_passed() ? "all laws passed" : "some laws failed") << '\n';
  }
  if (!report.all_passed()) throw CheckFailed{};
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Kantorovich monad on finite metric spaces", "kantorovich"};
  app.require_subcommand(1);
  Options opt;
  auto add_common = [&opt](CLI::App* sub) {
    sub->add_option("-w,--workspace", opt.workspace, "workspace JSON files, merged left to right")
        ->expected(1, -1);
    sub->add_flag("--json", opt.as_json, "machine-readable output");
  };

  std::string a;
  std::string b;
  std::string c;
  std::string monoid;
  bool verbose = false;

  auto* validate = app.add_subcommand("validate", "load and validate a workspace");
  add_common(validate);

  auto* distance = app.add_subcommand("distance", "W1 distance between two measures");
  add_common(distance);
  distance->add_option("p", a)->required();
  distance->add_option("q", b)->required();
  distance->add_flag("-v,--verbose", verbose, "include the optimal coupling and dual witness");

  auto* product_cmd = app.add_subcommand("product", "independent joint p ⊗ q");
  add_common(product_cmd);
  product_cmd->add_option("p", a)->required();
  product_cmd->add_option("q", b)->required();

  auto* marginals_cmd = app.add_subcommand("marginals", "both marginals of a joint");
  add_common(marginals_cmd);
  marginals_cmd->add_option("r", a)->required();

  auto* independent = app.add_subcommand("independent", "whether a joint equals the product of its marginals");
  add_common(independent);
  independent->add_option("r", a)->required();

  auto* independent_maps_cmd =
      app.add_subcommand("independent-maps", "independence of two observables under a law");
  add_common(independent_maps_cmd);
  independent_maps_cmd->add_option("s", a)->required();
  independent_maps_cmd->add_option("f1", b)->required();
  independent_maps_cmd->add_option("f2", c)->required();

  auto* convolve_cmd = app.add_subcommand("convolve", "convolution over an internal monoid");
  add_common(convolve_cmd);
  convolve_cmd->add_option("p", a)->required();
  convolve_cmd->add_option("q", b)->required();
  convolve_cmd->add_option("-m,--monoid", monoid)->required();

  auto* expect = app.add_subcommand("expect", "expectation of a nested measure");
  add_common(expect);
  expect->add_option("mu", a)->required();

  auto* push = app.add_subcommand("pushforward", "pushforward of a measure along a short map");
  add_common(push);
  push->add_option("f", a)->required();
  push->add_option("p", b)->required();

  std::uint64_t seed = 0;
  std::size_t cases = 100;
  std::vector<std::string> only;
  std::string instance;
  auto* laws = app.add_subcommand("laws", "property-check the law catalog");
  laws->add_option("--seed", seed)->required();
  laws->add_option("--cases", cases)->check(CLI::PositiveNumber);
  laws->add_option("--law", only, "restrict to these law ids");
  laws->add_option("--instance", instance, "replay one instance file against a single --law");
  laws->add_flag("--json", opt.as_json, "machine-readable report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (validate->parsed()) {
      cmd_validate(opt, out);
    } else if (distance->parsed()) {
      cmd_distance(opt, a, b, verbose, out);
    } else if (product_cmd->parsed()) {
      auto ws = load(opt);
      emit(out, opt, product(ws.measure(a), ws.measure(b)));
    } else if (marginals_cmd->parsed()) {
      cmd_marginals(opt, a, out);
    } else if (independent->parsed()) {
      auto ws = load(opt);
      emit_bool(out, opt, "independent", is_independent(ws.measure(a)));
    } else if (independent_maps_cmd->parsed()) {
      cmd_independent_maps(opt, a, b, c, out);
    } else if (convolve_cmd->parsed()) {
      auto ws = load(opt);
      emit(out, opt, convolve(ws.measure(a), ws.measure(b), ws.monoid(monoid)));
    } else if (expect->parsed()) {
      cmd_expect(opt, a, out);
    } else if (push->parsed()) {
      auto ws = load(opt);
      emit(out, opt, pushforward(ws.map(a), ws.measure(b)));
    } else if (laws->parsed()) {
      cmd_laws(opt, seed, cases, only, instance, out);
    }
  } catch (const CheckFailed&) {
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace kantorovich
