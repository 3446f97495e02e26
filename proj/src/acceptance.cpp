#include "divinfo/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <sstream>

#include "divinfo/extremal.hpp"
#include "divinfo/measures.hpp"
#include "divinfo/quantum.hpp"
#include "divinfo/random.hpp"
#include "divinfo/verify.hpp"

namespace divinfo::verify {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* format, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, format, a, b, c);
  return buf;
}

CriterionResult oracle_equivalence() {
  const auto start = Clock::now();
  Rng rng(20240101);
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = rng.index(2, 12);
    const Distribution p =
        trial % 4 == 3 ? random_sparse_distribution(n, rng) : random_distribution(n, rng);
    const double fast = divergence_uniform(p);
    const double exact = divergence_exact(p, Distribution::uniform(n)).value();
    worst = std::max(worst, std::abs(fast - exact));
  }
  const double secs = seconds_since(start);
  return {1, "", worst <= 1e-12 && secs < 10.0,
          fmt("1000 distributions, max |fast - exhaustive| = %.3g, %.2f s", worst, secs), secs};
}

CriterionResult distribution_theorem() {
  const auto start = Clock::now();
  int checked = 0;
  int failed = 0;
  std::string first_failure;
  for (std::size_t n : {32, 64, 256, 1024, 4096, 65536}) {
    for (double k : {0.25, 0.5, 1.0, 2.0, 4.0, 8.0}) {
      if (!ExtremalParams(n, k).theorem_regime()) continue;
      ++checked;
      for (const auto& r : check_distribution_theorem(n, k)) {
        if (!r.pass) {
          ++failed;
          if (first_failure.empty()) first_failure = r.name + " at " + r.regime_flags.front();
        }
      }
    }
  }
  const double secs = seconds_since(start);
  std::string detail = std::to_string(checked) + " grid pairs, " + std::to_string(failed) +
                       " failed reports" + fmt(", %.2f s", secs);
  if (!first_failure.empty()) detail += "; first: " + first_failure;
  return {2, "", failed == 0 && checked > 0 && secs < 30.0, detail, secs};
}

CriterionResult ensemble_theorem() {
  const auto start = Clock::now();
  bool ok = true;
  std::ostringstream detail;
  for (auto [n, k] : {std::pair<std::size_t, double>{64, 1.0}, {256, 2.0}, {1024, 0.5}}) {
    const auto reports = check_ensemble_theorem(n, k);
    ok = ok && all_pass(reports);
    detail << "(" << n << "," << k << ") chi=" << reports[2].rhs << " D=" << reports[1].lhs
           << (all_pass(reports) ? " ok; " : " FAIL; ");
  }
  return {3, "", ok, detail.str(), seconds_since(start)};
}

CriterionResult intro_trend() {
  const auto start = Clock::now();
  constexpr double k = 0.5;
  bool upper_ok = true;
  bool increasing = true;
  double prev_ratio = -1.0;
  std::ostringstream detail;
  detail.precision(6);
  for (std::size_t n : {1024, 4096, 65536}) {
    const auto rows = sweep({n}, {k});
    const auto& row = rows.front();
    const double ceiling = 2.0 * k * std::log2(std::log2(static_cast<double>(n) * k));
    upper_ok = upper_ok && row.rel_entropy <= ceiling + 1e-9;
    if (prev_ratio >= 0.0 && !(row.theta_ratio > prev_ratio)) increasing = false;
    prev_ratio = row.theta_ratio;
    detail << "N=" << n << " theta=" << row.theta_ratio << "; ";
  }
  detail << "S <= 2k loglog(Nk): " << (upper_ok ? "yes" : "NO")
         << ", theta strictly increasing: " << (increasing ? "yes" : "NO");
  return {4, "", upper_ok && increasing, detail.str(), seconds_since(start)};
}

CriterionResult ub_theorem() {
  const auto start = Clock::now();
  Rng rng(777);
  int failures = 0;
  double min_slack = std::numeric_limits<double>::infinity();
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = rng.index(8, 256);
    const auto mode = trial % 2 == 0 ? UniformAverageMode::cyclic : UniformAverageMode::complement_pair;
    const auto report = check_ub_theorem(random_uniform_average_ensemble(n, rng.next(), mode));
    if (!report.pass) ++failures;
    min_slack = std::min(min_slack, report.slack);
  }
  const double secs = seconds_since(start);
  return {5, "", failures == 0 && secs < 60.0,
          fmt("500 ensembles, %.0f failures, min slack %.4g, %.2f s", failures, min_slack, secs),
          secs};
}

CriterionResult majorization_extremality() {
  const auto start = Clock::now();
  Rng rng(4242);
  int failures = 0;
  for (int trial = 0; trial < 200; ++trial) {
    // log-uniform support size in [4, 1024]
    const auto n = static_cast<std::size_t>(std::lround(std::exp2(rng.uniform(2.0, 10.0))));
    const auto reports = check_majorization_extremality(random_distribution(n, rng));
    if (!all_pass(reports)) ++failures;
  }
  return {6, "", failures == 0, fmt("200 distributions, %.0f failures", failures),
          seconds_since(start)};
}

CriterionResult pair_relations() {
  const auto start = Clock::now();
  Rng rng(99);
  int failures = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = rng.index(2, 10);
    const std::size_t m = rng.index(1, 6);
    if (!all_pass(check_pair_relations(random_ensemble(n, m, rng)))) ++failures;
  }
  const Ensemble tight(Distribution{0.5, 0.5}, {Distribution{1.0, 0.0}, Distribution{0.0, 1.0}});
  const auto tight_reports = check_pair_relations(tight);
  const bool tight_ok = all_pass(tight_reports) && std::abs(tight_reports[1].slack) <= 1e-12;
  return {7, "", failures == 0 && tight_ok,
          fmt("200 ensembles, %.0f failures; tight case chi - D(n-1) = %.3g", failures,
              -tight_reports[1].slack),
          seconds_since(start)};
}

CriterionResult quantum_bound() {
  const auto start = Clock::now();
  Rng rng(31337);
  double worst_residual = 0.0;
  double worst_average = 0.0;
  double worst_diag = 0.0;
  int failures = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t d = rng.index(3, 8);
    const Distribution p = random_distribution(d, rng);
    const auto qe = quantum::conjugated_cyclic_qensemble(p, rng.next());
    for (const auto& rho : qe.states()) {
      const auto sys = quantum::hermitian_eigensystem(rho.matrix());
      for (std::size_t c = 0; c < d; ++c) {
        double r2 = 0.0;
        for (std::size_t i = 0; i < d; ++i) {
          quantum::Complex hv = 0.0;
          for (std::size_t j = 0; j < d; ++j) hv += rho.matrix()(i, j) * sys.vectors(j, c);
          r2 += std::norm(hv - sys.values[c] * sys.vectors(i, c));
        }
        worst_residual = std::max(worst_residual, std::sqrt(r2));
      }
    }
    worst_average = std::max(worst_average, qe.mixed_average_defect());
    if (!quantum::check_quantum_ub(qe).pass) ++failures;

    const auto diag = quantum::DensityMatrix::diagonal(p);
    const Distribution u = Distribution::uniform(d);
    worst_diag = std::max(worst_diag, std::abs(quantum::q_relative_entropy_mixed(diag) -
                                               relative_entropy(p, u).value()));
    worst_diag = std::max(worst_diag,
                          std::abs(quantum::q_divergence_mixed_lb(diag) - divergence_uniform(p)));
  }
  const bool ok = failures == 0 && worst_residual <= 1e-8 && worst_average <= 1e-9 &&
                  worst_diag <= 1e-12;
  std::string detail = fmt("50 ensembles, residual %.3g, average defect %.3g, ", worst_residual,
                           worst_average) +
                       fmt("diagonal mismatch %.3g, %.0f bound failures", worst_diag, failures);
  return {8, "", ok, detail, seconds_since(start)};
}

CriterionResult solver_properties() {
  const auto start = Clock::now();
  Rng rng(5150);
  double worst_identity = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto n = static_cast<std::size_t>(std::lround(std::exp2(rng.uniform(1.0, 20.0))));
    const double k = rng.uniform(0.05, 12.0);
    const double x = static_cast<double>(n) * std::exp2(-k);
    worst_identity = std::max(worst_identity, std::abs(solve_h(x, n, k) - 1.0));
  }
  int monotone_failures = 0;
  int concave_failures = 0;
  for (auto [n, k] : {std::pair<std::size_t, double>{64, 1.0}, {1024, 0.5}, {65536, 4.0}, {4, 1.0}}) {
    constexpr int kPoints = 1000;
    const double x_max = 2.0 * static_cast<double>(n);
    const double dx = x_max / kPoints;
    std::vector<double> h(kPoints);
    for (int i = 0; i < kPoints; ++i) h[i] = solve_h(dx * (i + 1), n, k);
    for (int i = 0; i + 1 < kPoints; ++i) {
      if (!(h[i] < h[i + 1])) ++monotone_failures;
    }
    for (int i = 0; i + 2 < kPoints; ++i) {
      if (h[i + 1] < 0.5 * (h[i] + h[i + 2]) - 1e-10) ++concave_failures;
    }
  }
  const bool ok = worst_identity <= 1e-12 && monotone_failures == 0 && concave_failures == 0;
  return {9, "", ok,
          fmt("identity error %.3g; monotonicity failures %.0f; concavity failures %.0f",
              worst_identity, monotone_failures, concave_failures),
          seconds_since(start)};
}

CriterionResult qsc_calculator() {
  const auto start = Clock::now();
  const auto b = qsc_min_binding({100.0, 10.0});
  bool ok = std::abs(b.harry - 90.0) <= 1e-3 && std::abs(b.jain - 47.4670) <= 1e-3 &&
            std::abs(b.jainchi - 45.2872) <= 1e-3;
  int order_failures = 0;
  for (int i = 0; i < 100; ++i) {
    const auto q = qsc_min_binding({100.0, 0.5 * i});
    if (!(q.jainchi <= q.jain && q.jain <= q.harry)) ++order_failures;
  }
  ok = ok && order_failures == 0;
  return {10, "", ok,
          fmt("(100,10) -> (%.4f, %.4f, %.4f)", b.harry, b.jain, b.jainchi) +
              fmt("; ordering failures %.0f over 100 points", order_failures),
          seconds_since(start)};
}

}  // namespace

std::vector<Criterion> acceptance_criteria() {
  return {
      {1, "divergence vs uniform: prefix formula equals exhaustive oracle", oracle_equivalence},
      {2, "extremal distribution: divergence k and entropy/coordinate sandwiches", distribution_theorem},
      {3, "cyclic ensemble: uniform average, D(E) <= k, chi(E) >= f_L", ensemble_theorem},
      {4, "k log log N trend at desk scale (k = 0.5)", intro_trend},
      {5, "Holevo ceiling for uniform-average ensembles", ub_theorem},
      {6, "extremal distribution majorises every R with the same divergence", majorization_extremality},
      {7, "D <= chi + 1 and chi <= D (n - 1)", pair_relations},
      {8, "quantum Holevo ceiling via spectra", quantum_bound},
      {9, "h: identity point, monotonicity, concavity", solver_properties},
      {10, "string-commitment trade-off calculator", qsc_calculator},
  };
}

std::vector<CriterionResult> run_acceptance_suite() {
  std::vector<CriterionResult> results;
  for (const auto& c : acceptance_criteria()) {
    CriterionResult r;
    const auto start = Clock::now();
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
      r.seconds = seconds_since(start);
    }
    r.id = c.id;
    r.name = c.name;
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace divinfo::verify
