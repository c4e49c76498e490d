// gencx: verify structures, sample type maps and run the example bundles.
//
// Exit status: 0 all checks pass, 1 a verification failed, 2 bad input.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gencx/gencx.hpp"

namespace {

using namespace gencx;

enum class Mode { Exact, Float, Auto };

struct Config {
  Mode mode = Mode::Auto;
  double epsilon = 1e-9;
  std::size_t grid = 64;
  bool grid_set = false;
  std::string output;
  std::string format = "json";
  bool s2_symplectic = false;
};

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const Config& cfg, const std::string& text) {
  if (cfg.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.output, std::ios::binary);
  if (!out) throw InputError("cannot write '" + cfg.output + "'");
  out << text;
}

Json read_json(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  if (out.empty()) throw ParameterError("empty parameter list");
  return out;
}

template <RealField T>
std::vector<T> parse_list(const std::string& s) {
  std::vector<T> out;
  for (const auto& item : split_list(s)) out.push_back(convert<T>(parse_rational(item)));
  return out;
}

// Runs `fn.template operator()<T>()` in the configured field. Auto mode
// starts exact and reruns in float when a square root leaves the rationals.
template <class Fn>
int dispatch(const Config& cfg, Fn&& fn) {
  switch (cfg.mode) {
    case Mode::Exact:
      return fn.template operator()<Rational>();
    case Mode::Float:
      return fn.template operator()<double>();
    case Mode::Auto:
      try {
        return fn.template operator()<Rational>();
      } catch (const ExactnessError& e) {
        std::cerr << "note: " << e.what() << "; rerunning in float mode\n";
        return fn.template operator()<double>();
      }
  }
  return 2;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

template <RealField T>
SphereFamily<T> family_from_bundle(const Bundle<T>& b) {
  if (!b.pair) throw ParseError("input needs a 'pair' (or 'family') to build a family");
  auto check = [](const GenStructure<T>& s, const char* which) {
    auto r = is_generalized_complex(s.mat());
    if (!r.ok())
      throw InputError(std::string(which) + " is not a generalized complex structure: " +
                       (r.squares_to_minus_id ? "pairing orthogonality failed" : "square check failed"));
    return GenStructure<T>::verified(s.mat());
  };
  try {
    return build_family(check(b.pair->first, "pair[0]"), check(b.pair->second, "pair[1]"));
  } catch (const VerificationError& e) {
    throw InputError(e.what());
  }
}

int cmd_verify(const Config& cfg, const std::string& input) {
  if (cfg.format != "json") throw ParameterError("verify writes JSON only");
  Json j = read_json(input);
  return dispatch(cfg, [&]<RealField T>() {
    auto rep = verify_bundle(bundle_from_json<T>(j));
    rep.params = Json{{"input", input}};
    emit(cfg, dump(rep.to_json()));
    return rep.passed() ? 0 : 1;
  });
}

int cmd_typemap(const Config& cfg, const std::string& input) {
  Json j = read_json(input);
  return dispatch(cfg, [&]<RealField T>() {
    auto f = family_from_bundle(bundle_from_json<T>(j));
    auto tm = family_typemap(f, cfg.grid);
    if (cfg.format == "csv") {
      emit(cfg, typemap_csv(tm));
    } else {
      Json out = to_json(tm);
      out["grid"] = cfg.grid;
      out["conventions"] = convention_block<T>(cfg.s2_symplectic);
      emit(cfg, dump(out));
    }
    return 0;
  });
}

int cmd_twistor(const Config& cfg, const std::string& input) {
  Json j = read_json(input);
  return dispatch(cfg, [&]<RealField T>() {
    auto f = family_from_bundle(bundle_from_json<T>(j));
    auto r = twistor_type_report(f, cfg.grid, cfg.s2_symplectic);
    if (cfg.format == "csv") {
      emit(cfg, twistor_csv(r));
    } else {
      Json out = to_json(r);
      out["grid"] = cfg.grid;
      out["conventions"] = convention_block<T>(cfg.s2_symplectic);
      emit(cfg, dump(out));
    }
    return 0;
  });
}

int cmd_example(const Config& cfg, const std::string& name, const std::map<std::string, std::string>& raw) {
  if (cfg.format != "json") throw ParameterError("example writes JSON only");
  return dispatch(cfg, [&]<RealField T>() {
    ExampleParams<T> params;
    for (const auto& [key, value] : raw) params[key] = parse_list<T>(value);
    auto grid = cfg.grid_set ? std::optional<std::size_t>(cfg.grid) : std::nullopt;
    auto rep = verify_example<T>(name, params, grid);
    rep.conventions = convention_block<T>(cfg.s2_symplectic);
    if (name == "kt") rep.conventions["kt_matrices"] = "row i of each displayed array is the image of E_{i+1} (operator = transpose)";
    emit(cfg, dump(rep.to_json()));
    return rep.passed() ? 0 : 1;
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Linear generalized complex structures: verification, type maps and examples"};
  app.require_subcommand(1);
  Config cfg;
  std::string mode = "auto";

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--mode", mode, "exact, float or auto (exact, falling back to float for irrational roots)")
        ->check(CLI::IsMember({"exact", "float", "auto"}));
    sub->add_option("--epsilon", cfg.epsilon, "float-mode tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--grid", cfg.grid, "sphere sampling: 6 axis points plus grid^2 points")
        ->check(CLI::Range(std::size_t{2}, std::size_t{4096}))
        ->each([&](const std::string&) { cfg.grid_set = true; });
    sub->add_option("--output,-o", cfg.output, "write to this file instead of stdout");
    sub->add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_flag("--s2-symplectic", cfg.s2_symplectic, "give the sphere factor its symplectic structure (+0 to type)");
  };

  std::string input;
  auto* verify = app.add_subcommand("verify", "check a JSON bundle of structures, a pair and an algebra");
  verify->add_option("input", input, "bundle JSON")->required();
  add_common(verify);

  auto* typemap = app.add_subcommand("typemap", "type of every sampled member of a family");
  typemap->add_option("input", input, "pair JSON")->required();
  add_common(typemap);

  auto* twistor = app.add_subcommand("twistor-report", "fiber and twistor types over the sphere");
  twistor->add_option("input", input, "pair JSON")->required();
  add_common(twistor);

  auto* example = app.add_subcommand("example", "verification bundle of a built-in example");
  example->require_subcommand(1);
  std::string b1 = "0", b2 = "1", lambdas, mus;
  auto* kt = example->add_subcommand("kt", "Kodaira-Thurston family on T*(H3 x R)");
  kt->add_option("--b1", b1, "rational, e.g. 1/2")->capture_default_str();
  kt->add_option("--b2", b2, "nonzero rational")->capture_default_str();
  add_common(kt);
  auto* torus = example->add_subcommand("torus", "hypersymplectic family on the 4n-torus");
  torus->add_option("--lambda", lambdas, "comma-separated list, e.g. 3/5,1")->required();
  torus->add_option("--mu", mus, "comma-separated list, e.g. 4/5,0")->required();
  add_common(torus);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  cfg.mode = mode == "exact" ? Mode::Exact : mode == "float" ? Mode::Float : Mode::Auto;

  try {
    ScopedTolerance tol(cfg.epsilon);
    if (*verify) return cmd_verify(cfg, input);
    if (*typemap) return cmd_typemap(cfg, input);
    if (*twistor) return cmd_twistor(cfg, input);
    if (*kt) return cmd_example(cfg, "kt", {{"b1", b1}, {"b2", b2}});
    if (*torus) return cmd_example(cfg, "torus", {{"lambda", lambdas}, {"mu", mus}});
  } catch (const std::exception& e) {
    // Verification failures are reported, not thrown; anything thrown here is
    // bad input (parse errors, invalid parameters, structure constants failing Jacobi).
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
