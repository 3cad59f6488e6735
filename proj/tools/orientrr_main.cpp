// Command-line front end: series and class computations with exact rational
// output, plus the identity-verification suites. All machine output is JSON
// with rationals as strings.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "orientrr/errors.hpp"
#include "orientrr/json_io.hpp"
#include "orientrr/ktheory.hpp"
#include "orientrr/orientation.hpp"
#include "orientrr/projective.hpp"
#include "orientrr/pushforward.hpp"
#include "orientrr/rational.hpp"
#include "orientrr/series.hpp"
#include "orientrr/verify.hpp"

namespace {

using orientrr::Json;

std::string read_text(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path);
  if (!in) throw orientrr::ParseError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Json parse_json_text(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw orientrr::ParseError(what + ": " + e.what());
  }
}

Json parse_json_file(const std::string& path, const std::string& what) {
  return parse_json_text(read_text(path), what);
}

std::size_t default_order_from_env() {
  const char* env = std::getenv("ORIENT_RR_ORDER");
  if (env == nullptr) return 32;
  std::string text(env);
  orientrr::Rat value = orientrr::rat_from_string(text);
  if (!orientrr::is_integer(value) || value < 1 || value > 512)
    throw orientrr::ParseError(
        "ORIENT_RR_ORDER must be an integer in 1..512, got '" + text + "'");
  return static_cast<std::size_t>(
      orientrr::to_integer(value).convert_to<unsigned long>());
}

std::string registry_path_from_env() {
  const char* env = std::getenv("ORIENT_RR_REGISTRY");
  return env ? std::string(env) : std::string("orientrr_orientations.json");
}

orientrr::OrientationRegistry load_registry(const std::string& path) {
  orientrr::OrientationRegistry registry;
  std::ifstream in(path);
  if (!in) return registry;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  Json doc = parse_json_text(buffer.str(), "registry '" + path + "'");
  if (!doc.is_array())
    throw orientrr::ParseError("registry '" + path + "': expected an array");
  for (const Json& entry : doc)
    registry.register_orientation(orientrr::orientation_from_json(entry));
  return registry;
}

void save_registry(const std::string& path,
                   const orientrr::OrientationRegistry& registry) {
  Json doc = Json::array();
  for (const std::string& name : registry.names()) {
    const orientrr::Orientation& o = registry.lookup(name);
    if (o.kind() != orientrr::Orientation::Kind::Custom) continue;
    doc.push_back(orientrr::orientation_to_json(
        o, o.custom_coeffs().size() + 1));
  }
  std::ofstream out(path);
  if (!out)
    throw orientrr::ParseError("cannot write registry '" + path + "'");
  out << doc.dump() << "\n";
}

void print_series(const orientrr::Series& s, bool json) {
  if (json)
    std::cout << orientrr::series_to_json(s).dump() << "\n";
  else
    std::cout << orientrr::series_to_string(s) << "\n";
}

void print_class(const orientrr::CohElement& a, bool json) {
  if (json)
    std::cout << orientrr::coh_to_json(a).dump() << "\n";
  else
    std::cout << orientrr::coh_to_string(a) << "\n";
}

orientrr::RingShape shape_from_caps_text(const std::string& text) {
  return orientrr::shape_from_json(
      parse_json_text(text, "shape '" + text + "'"));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "orientrr: exact Todd/Euler/multiplier classes and pushforwards over "
      "products of projective spaces"};
  app.require_subcommand(1);
  // Let the global --json flag be written after the subcommand too.
  app.fallthrough();
  bool json_out = false;
  app.add_flag("--json", json_out, "emit JSON instead of human-readable text");

  std::size_t default_order;
  try {
    default_order = default_order_from_env();
  } catch (const orientrr::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  // todd
  auto* todd_cmd = app.add_subcommand(
      "todd", "Todd series of an orientation change, coefficients of u^0..");
  std::string todd_from, todd_to;
  std::size_t todd_order = default_order;
  bool todd_multiplier = false;
  todd_cmd->add_option("--from", todd_from, "orientation A")->required();
  todd_cmd->add_option("--to", todd_to, "orientation B")->required();
  todd_cmd->add_option("--order", todd_order, "number of coefficients")
      ->capture_default_str();
  todd_cmd->add_flag("--multiplier", todd_multiplier,
                     "print the multiplier series 1/td instead");

  // solve-todd
  auto* solve_cmd = app.add_subcommand(
      "solve-todd",
      "solve the power conditions [u^n] f^{n+1} = 1 for the Todd series");
  std::size_t solve_order = default_order;
  solve_cmd->add_option("--order", solve_order, "number of coefficients")
      ->capture_default_str();

  // chi
  auto* chi_cmd = app.add_subcommand(
      "chi", "Euler characteristic of O(d) on P^n");
  unsigned chi_n = 0;
  long long chi_d = 0;
  std::string chi_method = "both";
  chi_cmd->add_option("--n", chi_n, "projective dimension")->required();
  chi_cmd->add_option("--d", chi_d, "twist")->required();
  chi_cmd->add_option("--method", chi_method, "hrr, oracle, or both")
      ->check(CLI::IsMember({"hrr", "oracle", "both"}))
      ->capture_default_str();

  // integrate
  auto* integrate_cmd = app.add_subcommand(
      "integrate", "integrate a class over its whole space");
  std::string integrate_orientation = "additive";
  std::string integrate_class;
  integrate_cmd
      ->add_option("--orientation", integrate_orientation, "orientation name")
      ->capture_default_str();
  integrate_cmd
      ->add_option("--class", integrate_class,
                   "class JSON file, or - for stdin")
      ->required();

  // push
  auto* push_cmd = app.add_subcommand(
      "push", "pushforward of a class along a map");
  std::string push_orientation = "additive";
  std::string push_class, push_map, push_target;
  std::size_t push_drop = 1;
  push_cmd->add_option("--orientation", push_orientation, "orientation name")
      ->capture_default_str();
  push_cmd->add_option("--map", push_map,
                       "to-point, inclusion, or projection")
      ->required();
  push_cmd
      ->add_option("--class", push_class, "class JSON file, or - for stdin")
      ->required();
  push_cmd->add_option(
      "--target", push_target,
      "target caps as a JSON array, e.g. [3] (inclusion only)");
  push_cmd->add_option("--drop", push_drop,
                       "1-based factor to drop (projection only)");

  // euler
  auto* euler_cmd = app.add_subcommand(
      "euler", "Euler class of an effective split bundle");
  std::string euler_orientation = "additive";
  std::string euler_bundle;
  euler_cmd->add_option("--orientation", euler_orientation, "orientation name")
      ->capture_default_str();
  euler_cmd
      ->add_option("--bundle", euler_bundle,
                   "bundle JSON file, or - for stdin")
      ->required();

  // todd-class
  auto* tdclass_cmd = app.add_subcommand(
      "todd-class", "Todd class of a split bundle for an orientation change");
  std::string tdclass_from, tdclass_to, tdclass_bundle;
  bool tdclass_multiplier = false;
  tdclass_cmd->add_option("--from", tdclass_from, "orientation A")->required();
  tdclass_cmd->add_option("--to", tdclass_to, "orientation B")->required();
  tdclass_cmd
      ->add_option("--bundle", tdclass_bundle,
                   "bundle JSON file, or - for stdin")
      ->required();
  tdclass_cmd->add_flag("--multiplier", tdclass_multiplier,
                        "print the multiplier class instead");

  // ch
  auto* ch_cmd = app.add_subcommand(
      "ch", "Chern character of O(d) on P^n");
  unsigned ch_n = 0;
  long long ch_d = 0;
  ch_cmd->add_option("--n", ch_n, "projective dimension")->required();
  ch_cmd->add_option("--d", ch_d, "twist")->required();

  // orientation list | show | register
  auto* orientation_cmd =
      app.add_subcommand("orientation", "manage orientations");
  orientation_cmd->require_subcommand(1);
  auto* olist_cmd =
      orientation_cmd->add_subcommand("list", "list known orientations");
  auto* oshow_cmd = orientation_cmd->add_subcommand(
      "show", "print an orientation's Euler series coefficients");
  std::string oshow_name;
  oshow_cmd->add_option("name", oshow_name, "orientation name")->required();
  auto* oreg_cmd = orientation_cmd->add_subcommand(
      "register", "validate and store a custom orientation");
  std::string oreg_file;
  oreg_cmd
      ->add_option("file", oreg_file,
                   "orientation JSON file {\"name\":..., \"coeffs\":[...]}")
      ->required();

  // verify
  auto* verify_cmd = app.add_subcommand(
      "verify", "run an identity suite and print its report");
  std::string verify_suite;
  std::uint64_t verify_seed = 7;
  std::size_t verify_cases = 0;
  unsigned verify_max_n = 0;
  verify_cmd->add_option("--suite", verify_suite, "suite name")->required();
  verify_cmd->add_option("--seed", verify_seed, "base seed")
      ->capture_default_str();
  verify_cmd->add_option("--cases", verify_cases,
                         "cases per configuration (0 = suite default)");
  verify_cmd->add_option("--max-n", verify_max_n,
                         "dimension bound (0 = suite default)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    orientrr::OrientationRegistry registry =
        load_registry(registry_path_from_env());

    if (*todd_cmd) {
      orientrr::OrientationPair pair =
          orientrr::comparison(registry.lookup(todd_from),
                               registry.lookup(todd_to), todd_order);
      print_series(todd_multiplier ? pair.multiplier : pair.todd, json_out);
      return 0;
    }

    if (*solve_cmd) {
      print_series(orientrr::solve_todd_series(solve_order), json_out);
      return 0;
    }

    if (*chi_cmd) {
      Json out = Json::object();
      orientrr::Rat hrr;
      orientrr::BigInt oracle;
      if (chi_method != "oracle") {
        hrr = orientrr::chi_hrr(chi_n, chi_d);
        out["hrr"] = orientrr::rat_to_string(hrr);
      }
      if (chi_method != "hrr") {
        oracle = orientrr::chi_oracle(chi_n, chi_d);
        out["oracle"] = oracle.str();
      }
      bool match = true;
      if (chi_method == "both") {
        match = hrr == orientrr::Rat(oracle);
        out["match"] = match;
      }
      if (json_out) {
        std::cout << out.dump() << "\n";
      } else {
        for (const auto& [key, value] : out.items()) {
          std::cout << key << " = "
                    << (value.is_string() ? value.get<std::string>()
                                          : value.dump())
                    << "\n";
        }
      }
      return match ? 0 : 1;
    }

    if (*integrate_cmd) {
      orientrr::CohElement a = orientrr::coh_from_json(
          parse_json_file(integrate_class, "class"));
      orientrr::Rat value = orientrr::integrate(
          registry.lookup(integrate_orientation), a.shape(), a);
      if (json_out)
        std::cout << Json{{"value", orientrr::rat_to_string(value)}}.dump()
                  << "\n";
      else
        std::cout << orientrr::rat_to_string(value) << "\n";
      return 0;
    }

    if (*push_cmd) {
      orientrr::CohElement a =
          orientrr::coh_from_json(parse_json_file(push_class, "class"));
      orientrr::Orientation A = registry.lookup(push_orientation);
      orientrr::MapKind kind = orientrr::map_kind_from_string(push_map);
      orientrr::PushforwardProblem problem = [&] {
        switch (kind) {
          case orientrr::MapKind::ToPoint:
            return orientrr::PushforwardProblem::to_point(A, a.shape());
          case orientrr::MapKind::Inclusion:
            if (push_target.empty())
              throw orientrr::ParseError("inclusion needs --target");
            return orientrr::PushforwardProblem::inclusion(
                A, a.shape(), shape_from_caps_text(push_target));
          case orientrr::MapKind::Projection:
          default:
            if (push_drop < 1 || push_drop > a.shape().factors())
              throw orientrr::ParseError(
                  "--drop must name a factor between 1 and " +
                  std::to_string(a.shape().factors()));
            return orientrr::PushforwardProblem::projection(A, a.shape(),
                                                            push_drop - 1);
        }
      }();
      print_class(orientrr::pushforward(problem, a), json_out);
      return 0;
    }

    if (*euler_cmd) {
      orientrr::SplitBundle v = orientrr::bundle_from_json(
          parse_json_file(euler_bundle, "bundle"));
      print_class(
          orientrr::euler_class(registry.lookup(euler_orientation), v),
          json_out);
      return 0;
    }

    if (*tdclass_cmd) {
      orientrr::SplitBundle v = orientrr::bundle_from_json(
          parse_json_file(tdclass_bundle, "bundle"));
      const orientrr::Orientation& A = registry.lookup(tdclass_from);
      const orientrr::Orientation& B = registry.lookup(tdclass_to);
      print_class(tdclass_multiplier ? orientrr::multiplier_class(A, B, v)
                                     : orientrr::todd_class(A, B, v),
                  json_out);
      return 0;
    }

    if (*ch_cmd) {
      print_class(orientrr::chern_character(orientrr::o_bundle(ch_n, ch_d)),
                  json_out);
      return 0;
    }

    if (*olist_cmd) {
      if (json_out) {
        Json names = Json::array();
        for (const std::string& name : registry.names())
          names.push_back(name);
        std::cout << names.dump() << "\n";
      } else {
        for (const std::string& name : registry.names())
          std::cout << name << "\n";
      }
      return 0;
    }

    if (*oshow_cmd) {
      const orientrr::Orientation& o = registry.lookup(oshow_name);
      if (json_out) {
        std::cout << orientrr::orientation_to_json(o, default_order).dump()
                  << "\n";
      } else {
        std::size_t avail = o.kind() == orientrr::Orientation::Kind::Custom
                                ? o.custom_coeffs().size() + 1
                                : default_order;
        std::size_t n = default_order < avail ? default_order : avail;
        std::cout << o.name() << ": s(t) = "
                  << orientrr::series_to_string(o.euler_series(n), "t")
                  << "\n";
      }
      return 0;
    }

    if (*oreg_cmd) {
      orientrr::Orientation o = orientrr::orientation_from_json(
          parse_json_file(oreg_file, "orientation"));
      registry.register_orientation(o);
      save_registry(registry_path_from_env(), registry);
      if (json_out)
        std::cout << Json{{"registered", o.name()}}.dump() << "\n";
      else
        std::cout << "registered '" << o.name() << "' ("
                  << o.custom_coeffs().size() + 1 << " coefficients)\n";
      return 0;
    }

    if (*verify_cmd) {
      orientrr::SuiteOptions opts;
      opts.seed = verify_seed;
      opts.cases = verify_cases;
      opts.max_n = verify_max_n;
      orientrr::VerificationReport report =
          orientrr::run_suite(verify_suite, opts);
      std::cout << orientrr::report_to_json(report).dump() << "\n";
      return report.all_pass() ? 0 : 1;
    }
  } catch (const orientrr::NonIntegerResult& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const orientrr::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  std::cerr << "error: no subcommand handled\n";
  return 2;
}
