#include "ncx/io.hpp"

#include <charconv>
#include <cmath>
#include <limits>

namespace ncx {

using nlohmann::json;

std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

Variant variant_from_string(std::string_view name) {
  if (name == "polar") return Variant::polar;
  if (name == "planar") return Variant::planar;
  throw ParseError("unknown variant '" + std::string(name) +
                   "' (expected polar or planar)");
}

std::string to_literal(const NComplex& u) {
  std::string out(to_string(u.variant()));
  out += ":n=" + std::to_string(u.dim()) + ":[";
  for (int p = 0; p < u.dim(); ++p) {
    if (p > 0) out += ",";
    out += format_double(u[p]);
  }
  out += "]";
  return out;
}

namespace {

double parse_number(std::string_view text) {
  double value = 0.0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  const auto res = std::from_chars(begin, end, value);
  if (res.ec != std::errc{} || res.ptr != end) {
    throw ParseError("bad numeric literal '" + std::string(text) + "'");
  }
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

NComplex parse_literal(std::string_view text) {
  text = trim(text);
  const auto c1 = text.find(':');
  const auto c2 = text.find(':', c1 == std::string_view::npos ? 0 : c1 + 1);
  if (c1 == std::string_view::npos || c2 == std::string_view::npos) {
    throw ParseError(
        "literal must look like polar:n=4:[1,0,2,-3]; got '" +
        std::string(text) + "'");
  }
  const Variant variant = variant_from_string(trim(text.substr(0, c1)));
  std::string_view dim = trim(text.substr(c1 + 1, c2 - c1 - 1));
  if (dim.substr(0, 2) != "n=") {
    throw ParseError("expected n=<dimension> in literal");
  }
  const double n_value = parse_number(dim.substr(2));
  if (n_value != std::floor(n_value) || n_value < 2 || n_value > 4096) {
    throw ParseError("bad dimension in literal");
  }
  std::string_view body = trim(text.substr(c2 + 1));
  if (body.size() < 2 || body.front() != '[' || body.back() != ']') {
    throw ParseError("expected [components] in literal");
  }
  body = body.substr(1, body.size() - 2);
  std::vector<double> x;
  while (!body.empty()) {
    const auto comma = body.find(',');
    x.push_back(parse_number(trim(body.substr(0, comma))));
    if (comma == std::string_view::npos) break;
    body = body.substr(comma + 1);
  }
  if (static_cast<int>(x.size()) != static_cast<int>(n_value)) {
    throw ParseError("component count does not match n");
  }
  try {
    return NComplex(variant, std::move(x));
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

json to_json(const NComplex& u) {
  return json{{"variant", std::string(to_string(u.variant()))},
              {"n", u.dim()},
              {"x", u.components()}};
}

NComplex ncomplex_from_json(const json& j) {
  try {
    const Variant variant =
        variant_from_string(j.at("variant").get<std::string>());
    const int n = j.at("n").get<int>();
    auto x = j.at("x").get<std::vector<double>>();
    if (static_cast<int>(x.size()) != n) {
      throw ParseError("component count does not match n");
    }
    return NComplex(variant, std::move(x));
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad n-complex JSON: ") + e.what());
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

json to_json(const Spectrum& s) {
  json pairs = json::array();
  for (const auto& z : s.pairs) pairs.push_back({z.real(), z.imag()});
  return json{{"v_plus", s.v_plus ? json(*s.v_plus) : json(nullptr)},
              {"v_minus", s.v_minus ? json(*s.v_minus) : json(nullptr)},
              {"pairs", pairs}};
}

json to_json(const GeometricForm& g) {
  return json{
      {"d", g.d},
      {"rho", g.rho ? json(*g.rho) : json(nullptr)},
      {"phi", g.phi},
      {"psi", g.psi},
      {"theta_plus", g.theta_plus ? json(*g.theta_plus) : json(nullptr)},
      {"theta_minus", g.theta_minus ? json(*g.theta_minus) : json(nullptr)},
      {"F_n", g.F_n}};
}

json to_json(const ResidueCertificate& cert) {
  return json{{"integral", cert.integral.components()},
              {"predicted", cert.predicted.components()},
              {"winding", cert.winding},
              {"max_abs_error", cert.max_abs_error},
              {"winding_out_of_domain", cert.winding_out_of_domain}};
}

namespace {

std::vector<NComplex> coefficient_list(const json& j, Variant variant, int n) {
  std::vector<NComplex> out;
  for (const auto& row : j) {
    auto x = row.get<std::vector<double>>();
    if (static_cast<int>(x.size()) != n) {
      throw ParseError("coefficient length does not match n");
    }
    out.emplace_back(variant, std::move(x));
  }
  return out;
}

json coefficient_json(const std::vector<NComplex>& coefficients) {
  json rows = json::array();
  for (const auto& a : coefficients) rows.push_back(a.components());
  return rows;
}

}  // namespace

json to_json(const NPowerSeries& series) {
  return json{{"variant", std::string(to_string(series.variant))},
              {"n", series.n},
              {"coefficients", coefficient_json(series.coefficients)}};
}

NPowerSeries series_from_json(const json& j) {
  try {
    NPowerSeries s;
    s.variant = variant_from_string(j.at("variant").get<std::string>());
    s.n = j.at("n").get<int>();
    s.coefficients = coefficient_list(j.at("coefficients"), s.variant, s.n);
    return s;
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad series JSON: ") + e.what());
  }
}

json to_json(const NPolynomial& poly) {
  return json{{"variant", std::string(to_string(poly.variant))},
              {"n", poly.n},
              {"coefficients", coefficient_json(poly.coefficients)}};
}

NPolynomial polynomial_from_json(const json& j) {
  try {
    NPolynomial p;
    p.variant = variant_from_string(j.at("variant").get<std::string>());
    p.n = j.at("n").get<int>();
    p.coefficients = coefficient_list(j.at("coefficients"), p.variant, p.n);
    return p;
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad polynomial JSON: ") + e.what());
  }
}

PiecewisePath path_from_json(const json& j, std::optional<Variant> variant,
                             std::optional<int> n) {
  try {
    if (j.contains("variant"))
      variant = variant_from_string(j.at("variant").get<std::string>());
    if (j.contains("n")) n = j.at("n").get<int>();
    if (!variant || !n) {
      throw ParseError(
          "path JSON needs variant and n (in the file or from flags)");
    }
    std::vector<NComplex> vertices;
    for (const auto& row : j.at("vertices")) {
      auto x = row.get<std::vector<double>>();
      if (static_cast<int>(x.size()) != *n) {
        throw ParseError("path vertex length does not match n");
      }
      vertices.emplace_back(*variant, std::move(x));
    }
    const bool closed = j.value("closed", true);
    return make_path(std::move(vertices), closed);
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad path JSON: ") + e.what());
  }
}

}  // namespace ncx
