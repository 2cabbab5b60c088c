#include "ncx/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ncx/contour.hpp"
#include "ncx/cosexp.hpp"
#include "ncx/elementary.hpp"
#include "ncx/io.hpp"
#include "ncx/polyfactor.hpp"
#include "ncx/series.hpp"
#include "ncx/spectral.hpp"
#include "ncx/verify.hpp"

namespace ncx::cli {

namespace {

using nlohmann::json;

struct Config {
  Tolerances tol{};
  std::string format;  // empty = per-subcommand default
  std::uint64_t seed = 7;
};

void apply_config_file(Config& config, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad config JSON: ") + e.what());
  }
  for (const auto& [key, value] : j.items()) {
    if (key == "tolerances") {
      for (const auto& [tkey, tvalue] : value.items()) {
        const double v = tvalue.get<double>();
        if (tkey == "node_eps") config.tol.node_eps = v;
        else if (tkey == "cmp_eps") config.tol.cmp_eps = v;
        else if (tkey == "series_eps") config.tol.series_eps = v;
        else if (tkey == "factor_tol") config.tol.factor_tol = v;
        else throw ParseError("unknown tolerance key '" + tkey + "'");
      }
    } else if (key == "format") {
      config.format = value.get<std::string>();
      if (config.format != "json" && config.format != "csv" &&
          config.format != "plain") {
        throw ParseError("format must be json, csv or plain");
      }
    } else if (key == "seed") {
      config.seed = value.get<std::uint64_t>();
    } else {
      throw ParseError("unknown config key '" + key + "'");
    }
  }
  config.tol.validate();
}

json load_json(const std::string& path) {
  json j;
  try {
    if (path == "-") {
      std::cin >> j;
    } else {
      std::ifstream in(path);
      if (!in) throw ParseError("cannot open '" + path + "'");
      in >> j;
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad JSON in '") + path + "': " + e.what());
  }
  return j;
}

std::string pick_format(const Config& config, const std::string& flag,
                        const std::string& fallback) {
  if (!flag.empty()) return flag;
  if (!config.format.empty()) return config.format;
  return fallback;
}

void emit_value(std::ostream& out, const NComplex& value,
                const std::string& format) {
  if (format == "json") {
    out << to_json(value).dump() << "\n";
  } else {
    out << to_literal(value) << "\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"polar and planar n-complex numbers: evaluation, spectra, "
               "cosexponential tables, factorization, contour integration "
               "and the property verification suite"};
  app.require_subcommand(1);

  Config config;
  std::string config_path, format_flag;
  app.add_option("--config", config_path, "JSON config file");
  app.add_option("--format", format_flag, "output format")
      ->check(CLI::IsMember({"json", "csv", "plain"}));

  // eval
  auto* eval_cmd = app.add_subcommand("eval", "elementary function of a literal");
  std::string eval_op, eval_literal;
  double eval_m = 1.0;
  eval_cmd->add_option("--op", eval_op, "operation")
      ->required()
      ->check(CLI::IsMember({"exp", "log", "pow"}));
  eval_cmd->add_option("--m", eval_m, "exponent for pow");
  eval_cmd->add_option("literal", eval_literal, "n-complex literal")->required();

  // spectrum
  auto* spectrum_cmd = app.add_subcommand("spectrum", "spectral coordinates");
  std::string spectrum_literal;
  spectrum_cmd->add_option("literal", spectrum_literal)->required();

  // form
  auto* form_cmd = app.add_subcommand("form", "geometric form (d, rho, angles)");
  std::string form_literal;
  form_cmd->add_option("literal", form_literal)->required();

  // table
  auto* table_cmd =
      app.add_subcommand("table", "cosexponential function table as CSV");
  std::string table_variant = "polar";
  int table_n = 4;
  double y_min = -5.0, y_max = 5.0;
  int steps = 21;
  table_cmd->add_option("--variant", table_variant)
      ->check(CLI::IsMember({"polar", "planar"}));
  table_cmd->add_option("--n", table_n, "dimension")->check(CLI::Range(1, 64));
  table_cmd->add_option("--y-min", y_min);
  table_cmd->add_option("--y-max", y_max);
  table_cmd->add_option("--steps", steps)->check(CLI::Range(2, 100000));

  // factor
  auto* factor_cmd =
      app.add_subcommand("factor", "factor a monic n-complex polynomial");
  std::string factor_file;
  long factor_limit = 10000;
  bool count_only = false;
  factor_cmd->add_option("file", factor_file, "polynomial JSON (or -)")
      ->required();
  factor_cmd->add_option("--limit", factor_limit, "factorization cap");
  factor_cmd->add_flag("--count-only", count_only);

  // integrate
  auto* integrate_cmd =
      app.add_subcommand("integrate", "path integral of a catalog function");
  std::string function_name = "const", path_file, center_literal,
              path_variant;
  int path_n = 0;
  double quad_tol = 1e-9;
  int max_levels = 14;
  integrate_cmd->add_option("--function", function_name)
      ->check(CLI::IsMember({"const", "identity", "exp", "reciprocal"}));
  integrate_cmd->add_option("--center", center_literal,
                            "pole literal for reciprocal");
  integrate_cmd->add_option("--path", path_file, "path JSON (or -)")
      ->required();
  integrate_cmd->add_option("--variant", path_variant)
      ->check(CLI::IsMember({"polar", "planar"}));
  integrate_cmd->add_option("--n", path_n);
  integrate_cmd->add_option("--tol", quad_tol, "refinement tolerance");
  integrate_cmd->add_option("--max-levels", max_levels);

  // analyze
  auto* analyze_cmd =
      app.add_subcommand("analyze", "series convergence radii and analyticity");
  std::string series_file, riemann_literal;
  analyze_cmd->add_option("--series", series_file, "series JSON (or -)")
      ->required();
  analyze_cmd->add_option("--riemann", riemann_literal,
                          "also report Riemann-relation residuals at this point");

  // verify
  auto* verify_cmd =
      app.add_subcommand("verify", "run the property verification suite");
  VerifyOptions vopt;
  bool seed_given = false;
  verify_cmd->add_option("--seed", vopt.seed)->each([&](const std::string&) {
    seed_given = true;
  });
  verify_cmd->add_option("--n-max", vopt.n_max)->check(CLI::Range(2, 8));
  verify_cmd->add_option("--samples", vopt.samples)->check(CLI::Range(1, 100000));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    err << app.help();
    return 2;
  }

  try {
    if (!config_path.empty()) apply_config_file(config, config_path);
    const Tolerances& tol = config.tol;

    if (*eval_cmd) {
      const NComplex u = parse_literal(eval_literal);
      NComplex result = u;
      if (eval_op == "exp") result = exp(u);
      else if (eval_op == "log") result = log(u, tol);
      else result = pow(u, eval_m, tol);
      emit_value(out, result, pick_format(config, format_flag, "plain"));
    } else if (*spectrum_cmd) {
      out << to_json(to_spectrum(parse_literal(spectrum_literal))).dump()
          << "\n";
    } else if (*form_cmd) {
      out << to_json(geometric_form(parse_literal(form_literal), tol)).dump()
          << "\n";
    } else if (*table_cmd) {
      const Variant variant = variant_from_string(table_variant);
      const CosexpFamily fam{variant, table_n};
      const char prefix = variant == Variant::polar ? 'g' : 'f';
      out << "y";
      for (int k = 0; k < table_n; ++k)
        out << "," << prefix << "_" << table_n << "_" << k;
      out << "\n";
      for (int i = 0; i < steps; ++i) {
        const double y = y_min + (y_max - y_min) * i / (steps - 1);
        out << format_double(y);
        for (int k = 0; k < table_n; ++k)
          out << "," << format_double(eval_closed(fam, k, y));
        out << "\n";
      }
    } else if (*factor_cmd) {
      const NPolynomial poly = polynomial_from_json(load_json(factor_file));
      const auto list = factorizations(poly, factor_limit, tol);
      if (count_only) {
        out << list.size() << "\n";
      } else {
        json jf = json::array();
        for (const auto& f : list) {
          json roots = json::array();
          for (const auto& r : f.linear_roots) roots.push_back(to_literal(r));
          json quads = json::array();
          for (const auto& q : f.quadratic_factors)
            quads.push_back({{"b", to_literal(q.b)}, {"c", to_literal(q.c)}});
          jf.push_back({{"ordering_id", f.ordering_id},
                        {"linear_roots", roots},
                        {"quadratic_factors", quads},
                        {"mixed", f.mixed}});
        }
        out << json{{"count", list.size()}, {"factorizations", jf}}.dump()
            << "\n";
      }
    } else if (*integrate_cmd) {
      std::optional<Variant> variant;
      if (!path_variant.empty()) variant = variant_from_string(path_variant);
      std::optional<int> n;
      if (path_n > 0) n = path_n;
      const PiecewisePath path =
          path_from_json(load_json(path_file), variant, n);
      const QuadratureSpec quad{quad_tol, max_levels};

      if (function_name == "reciprocal") {
        if (center_literal.empty()) {
          throw DomainError("reciprocal needs --center <literal>");
        }
        const NComplex center = parse_literal(center_literal);
        const Integrand one{[](const NComplex& u) {
                              return NComplex::one(u.variant(), u.dim());
                            },
                            {}};
        out << to_json(residue_check(one, center, path, quad, tol)).dump()
            << "\n";
      } else {
        Integrand f;
        if (function_name == "const") {
          f.eval = [](const NComplex& u) {
            return NComplex::one(u.variant(), u.dim());
          };
        } else if (function_name == "identity") {
          f.eval = [](const NComplex& u) { return u; };
        } else {
          f.eval = [](const NComplex& u) { return exp(u); };
        }
        ResidueCertificate cert{integrate(f, path, quad, tol),
                                NComplex::zero(path.variant, path.n),
                                {},
                                0.0,
                                false};
        cert.max_abs_error =
            path.closed ? max_abs_diff(cert.integral, cert.predicted) : 0.0;
        out << to_json(cert).dump() << "\n";
      }
    } else if (*analyze_cmd) {
      const NPowerSeries series = series_from_json(load_json(series_file));
      const ConvergenceCylinder cyl = convergence_radii(series);
      json result{{"c_plus", cyl.c_plus ? json(*cyl.c_plus) : json(nullptr)},
                  {"c_minus", cyl.c_minus ? json(*cyl.c_minus) : json(nullptr)},
                  {"c", cyl.c}};
      if (!riemann_literal.empty()) {
        const NComplex u0 = parse_literal(riemann_literal);
        const auto f = [&series](const NComplex& u) {
          return evaluate(series, u,
                          static_cast<int>(series.coefficients.size()));
        };
        const RiemannReport report = check_riemann_relations(f, u0);
        result["riemann"] = {{"first_order", report.first_order},
                             {"second_order", report.second_order}};
      }
      out << result.dump() << "\n";
    } else if (*verify_cmd) {
      if (!seed_given) vopt.seed = config.seed;
      vopt.tol = tol;
      const auto results = run_verification(vopt);
      print_results(out, results);
      if (!all_passed(results)) return 1;
    }
  } catch (const Error& e) {
    err << "error: " << e.name() << ": " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace ncx::cli
