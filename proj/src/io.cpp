#include "divinfo/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

namespace divinfo::io {

namespace {

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw FormatError(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

std::vector<double> number_array(const json& j, const char* what) {
  if (!j.is_array()) throw FormatError(std::string(what) + " must be an array");
  std::vector<double> out;
  out.reserve(j.size());
  for (const auto& x : j) {
    if (!x.is_number()) throw FormatError(std::string(what) + " must contain only numbers");
    out.push_back(x.get<double>());
  }
  return out;
}

std::size_t size_field(const json& j, const char* key) {
  const json& v = require(j, key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
    throw FormatError(std::string("\"") + key + "\" must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

std::vector<std::vector<double>> number_matrix(const json& j, std::size_t d, const char* what) {
  if (!j.is_array() || j.size() != d) {
    throw FormatError(std::string(what) + " must have " + std::to_string(d) + " rows");
  }
  std::vector<std::vector<double>> rows;
  for (const auto& row : j) {
    auto r = number_array(row, what);
    if (r.size() != d) throw FormatError(std::string(what) + " rows must have length d");
    rows.push_back(std::move(r));
  }
  return rows;
}

json json_number(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

}  // namespace

json to_json(const Distribution& p) { return {{"n", p.size()}, {"p", p.values()}}; }

Distribution distribution_from_json(const json& j) {
  const std::size_t n = size_field(j, "n");
  auto p = number_array(require(j, "p"), "\"p\"");
  if (p.size() != n) {
    throw FormatError("\"n\" is " + std::to_string(n) + " but \"p\" has " +
                      std::to_string(p.size()) + " entries");
  }
  return Distribution(std::move(p));
}

json to_json(const Ensemble& e) {
  json components = json::array();
  for (const auto& c : e.components()) components.push_back(c.values());
  return {{"weights", e.weights().values()}, {"components", components}};
}

Ensemble ensemble_from_json(const json& j) {
  Distribution weights(number_array(require(j, "weights"), "\"weights\""));
  const json& comps = require(j, "components");
  if (!comps.is_array()) throw FormatError("\"components\" must be an array");
  std::vector<Distribution> components;
  for (const auto& c : comps) components.emplace_back(number_array(c, "component"));
  if (components.empty()) throw FormatError("\"components\" must be non-empty");
  return Ensemble(std::move(weights), std::move(components));
}

json to_json(const quantum::DensityMatrix& rho) {
  const std::size_t d = rho.dim();
  json re = json::array();
  json im = json::array();
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<double> r(d);
    std::vector<double> c(d);
    for (std::size_t k = 0; k < d; ++k) {
      r[k] = rho.matrix()(i, k).real();
      c[k] = rho.matrix()(i, k).imag();
    }
    re.push_back(r);
    im.push_back(c);
  }
  return {{"d", d}, {"re", re}, {"im", im}};
}

quantum::DensityMatrix density_matrix_from_json(const json& j) {
  const std::size_t d = size_field(j, "d");
  const auto re = number_matrix(require(j, "re"), d, "\"re\"");
  const auto im = number_matrix(require(j, "im"), d, "\"im\"");
  quantum::ComplexMatrix m(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = 0; k < d; ++k) m(i, k) = quantum::Complex(re[i][k], im[i][k]);
  }
  return quantum::DensityMatrix(std::move(m));
}

json profile_sidecar(const ExtremalProfile& profile) {
  const auto& params = profile.params;
  const double kn = params.k() * static_cast<double>(params.n());
  json out{{"n", params.n()},
           {"k", params.k()},
           {"crossover", profile.crossover},
           {"theorem_regime", params.theorem_regime()}};
  out["f_lower"] = kn > 1.0 ? json(f_lower(params.k(), params.n())) : json(nullptr);
  out["f_upper"] = kn > 1.0 ? json(f_upper(params.k(), params.n())) : json(nullptr);
  return out;
}

json to_json(const BoundReport& r) {
  return {{"name", r.name},
          {"lhs", json_number(r.lhs)},
          {"rhs", json_number(r.rhs)},
          {"slack", json_number(r.slack)},
          {"tol", r.tol},
          {"pass", r.pass},
          {"relation", r.relation == Relation::equal ? "equal" : "less_equal"},
          {"regime_flags", r.regime_flags}};
}

json to_json(const std::vector<BoundReport>& reports) {
  json out = json::array();
  for (const auto& r : reports) out.push_back(to_json(r));
  return out;
}

json load_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

void save_json(const json& j, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  out << j.dump(2) << '\n';
  if (!out) throw IoError("write failed for " + path.string());
}

Distribution load_distribution(const std::filesystem::path& path) {
  return distribution_from_json(load_json(path));
}

void save_distribution(const Distribution& p, const std::filesystem::path& path) {
  save_json(to_json(p), path);
}

Ensemble load_ensemble(const std::filesystem::path& path) {
  return ensemble_from_json(load_json(path));
}

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

void write_sweep_csv(const std::vector<verify::SweepRow>& rows, std::ostream& out) {
  out << kSweepCsvHeader << '\n';
  for (const auto& r : rows) {
    out << std::to_string(r.n) << ',' << format_double(r.k) << ',';
    if (r.skipped) {
      out << "nan,nan,nan,nan,nan,nan,nan,skipped\n";
      continue;
    }
    out << format_double(r.s1) << ',' << std::to_string(r.crossover) << ',' << format_double(r.divergence) << ','
        << format_double(r.rel_entropy) << ',' << format_double(r.f_lower) << ','
        << format_double(r.f_upper) << ',' << format_double(r.theta_ratio) << ','
        << (r.theorem_regime ? "true" : "false") << '\n';
  }
}

void emit_sweep_csv(const std::vector<verify::SweepRow>& rows, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  write_sweep_csv(rows, out);
  if (!out) throw IoError("write failed for " + path.string());
}

}  // namespace divinfo::io
