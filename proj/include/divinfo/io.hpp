#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "divinfo/distribution.hpp"
#include "divinfo/errors.hpp"
#include "divinfo/extremal.hpp"
#include "divinfo/quantum.hpp"
#include "divinfo/report.hpp"
#include "divinfo/verify.hpp"

// JSON and CSV interchange formats.
//
//   Distribution   {"n": <int>, "p": [<float>...]}
//   Ensemble       {"weights": [<float>...], "components": [[<float>...], ...]}
//   DensityMatrix  {"d": <int>, "re": [[...]], "im": [[...]]}
//   Profile        {"n":, "k":, "crossover":, "theorem_regime":, "f_lower":, "f_upper":}

namespace divinfo::io {

using nlohmann::json;

/// Malformed document (syntax or schema).
class FormatError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

json to_json(const Distribution& p);
Distribution distribution_from_json(const json& j);

json to_json(const Ensemble& e);
Ensemble ensemble_from_json(const json& j);

json to_json(const quantum::DensityMatrix& rho);
quantum::DensityMatrix density_matrix_from_json(const json& j);

/// Sidecar for an extremal profile. f_lower/f_upper are null when nk <= 1.
json profile_sidecar(const ExtremalProfile& profile);

json to_json(const BoundReport& r);
json to_json(const std::vector<BoundReport>& reports);

Distribution load_distribution(const std::filesystem::path& path);
void save_distribution(const Distribution& p, const std::filesystem::path& path);
Ensemble load_ensemble(const std::filesystem::path& path);

/// Parses a file into JSON, raising FormatError / IoError.
json load_json(const std::filesystem::path& path);
void save_json(const json& j, const std::filesystem::path& path);

inline constexpr const char* kSweepCsvHeader =
    "n,k,s1,crossover,divergence,rel_entropy,f_lower,f_upper,theta_ratio,theorem_regime";

/// Shortest decimal string that round-trips, independent of locale.
std::string format_double(double x);

void write_sweep_csv(const std::vector<verify::SweepRow>& rows, std::ostream& out);
void emit_sweep_csv(const std::vector<verify::SweepRow>& rows, const std::filesystem::path& path);

}  // namespace divinfo::io
