#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "spextree/graph.hpp"
#include "spextree/tree.hpp"

namespace spextree {

// Largest root of (x - (l-1))(x - d) - l(n - l), the spectral radius of K_l
// joined with a d-regular graph on n - l vertices. Throws DomainError.
auto f_value(int l, double x, double n) -> double;
auto quotient_matrix(int l, double d, double n) -> std::array<std::array<double, 2>, 2>;
// Characteristic polynomial of the quotient matrix evaluated at y.
auto quotient_polynomial(int l, double d, double n, double y) -> double;

struct SpectralResult {
  double lambda = 0.0;
  std::vector<double> perron;  // max entry 1, zero outside the dominant component
  bool converged = true;
  int iterations = 0;
};

inline constexpr double kDefaultTolerance = 1e-10;
inline constexpr int kDefaultMaxIterations = 100000;

auto spectral_radius(const Graph& g, double tol = kDefaultTolerance, int max_iter = kDefaultMaxIterations)
    -> SpectralResult;

enum class Regime { Plain, Embeddable };

struct BoundsReport {
  double lower = 0.0;
  double upper = 0.0;
  Regime regime = Regime::Plain;
  std::optional<double> c;
  int l = 0;
  int delta = 0;
  double n = 0;
};

// Throws DomainError, DeltaTooSmall.
auto spex_bounds(const TreeProfile& p, double n, bool embeddable, std::optional<double> c = std::nullopt)
    -> BoundsReport;
auto default_c(const TreeProfile& p) -> double;

// Largest eigenvalue of [[D1, |H2|], [|H1|, D2]].
auto join_upper_bound(const Graph& h1, const Graph& h2) -> double;

struct PerronCheck {
  double lambda = 0.0;
  double M = 0.0;  // max Perron entry over the second part
  double m = 0.0;  // min Perron entry over the second part
  int d = 0;       // max degree of the second part
  double bound_M = 0.0;        // l / (lambda - d)
  double bound_spread = 0.0;   // d M / lambda
  double slack_M = 0.0;        // bound_M - M
  double slack_spread = 0.0;   // bound_spread - (M - m)
  bool holds = false;
};

// Host is K_l joined with h2; checks both Perron-entry inequalities.
auto perron_bounds_check(int l, const Graph& h2, const SpectralResult& spectrum, double tol = 1e-8) -> PerronCheck;

struct RefinedUpperCheck {
  double lambda = 0.0;
  double bound = 0.0;
  int d = 0;
  int c = 0;
  bool holds = false;
};

// lambda(K_l v h2) <= f(l, d-1, n) + 2c/n when max degree of h2 is at most d
// and at most c vertices reach d. d defaults to the max degree of h2.
// Throws PreconditionFailed.
auto refined_upper_check(int l, const Graph& h2, int c, std::optional<int> d = std::nullopt, double tol = 1e-9)
    -> RefinedUpperCheck;

auto degree_count_bound(int k, int d) -> long long;

// True iff (A y)_v >= c y_v everywhere, certifying lambda >= c for y >= 0, y != 0.
auto rayleigh_lower_cert(const Graph& g, const std::vector<double>& y, double c) -> bool;

auto gap(int l, int delta, double n) -> double;

struct ThresholdReport {
  bool valid = false;
  std::vector<std::string> violations;
  std::array<double, 5> log10_terms{};
  std::array<double, 5> terms{};  // +inf when beyond double range
  double log10_N = 0.0;
  double N = 0.0;
  bool overflow = false;
};

// Throws InvalidInputs.
auto constants_and_threshold(int m, int l, double eta, double eps, double alpha) -> ThresholdReport;

}  // namespace spextree
