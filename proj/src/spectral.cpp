#include "spextree/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "spextree/error.hpp"

namespace spextree {

auto f_value(int l, double x, double n) -> double {
  if (l < 1) fail(ErrorCode::DomainError, "f needs l >= 1");
  if (x < 0) fail(ErrorCode::DomainError, "f needs x >= 0");
  if (!(n > l)) fail(ErrorCode::DomainError, "f needs n > l");
  double b = l + x - 1;
  double disc = b * b + 4 * (n * l + x - l * x - static_cast<double>(l) * l);
  if (disc < 0) fail(ErrorCode::DomainError, "negative discriminant");
  return (b + std::sqrt(disc)) / 2;
}

auto quotient_matrix(int l, double d, double n) -> std::array<std::array<double, 2>, 2> {
  return {{{static_cast<double>(l - 1), n - l}, {static_cast<double>(l), d}}};
}

auto quotient_polynomial(int l, double d, double n, double y) -> double {
  auto q = quotient_matrix(l, d, n);
  return (y - q[0][0]) * (y - q[1][1]) - q[0][1] * q[1][0];
}

auto spectral_radius(const Graph& g, double tol, int max_iter) -> SpectralResult {
  const int n = g.vertex_count();
  SpectralResult best;
  best.perron.assign(n, 0.0);
  if (n == 0) return best;
  auto comp = g.components();
  int comps = *std::max_element(comp.begin(), comp.end()) + 1;
  bool have = false;
  for (int c = 0; c < comps; ++c) {
    std::vector<int> verts;
    for (int v = 0; v < n; ++v)
      if (comp[v] == c) verts.push_back(v);
    std::vector<double> x(n, 0.0);
    for (int v : verts) x[v] = 1.0;
    std::vector<double> y(n, 0.0);
    double lambda = 0.0;
    bool converged = false;
    int it = 0;
    if (verts.size() == 1) {
      converged = true;
    } else {
      double prev = -1.0;
      for (it = 1; it <= max_iter; ++it) {
        double xax = 0.0;
        double xx = 0.0;
        double top = 0.0;
        for (int v : verts) {
          double s = x[v];
          for (int w : g.neighbors(v)) s += x[w];
          y[v] = s;
          xax += x[v] * (s - x[v]);
          xx += x[v] * x[v];
          top = std::max(top, s);
        }
        lambda = xax / xx;
        double change = 0.0;
        for (int v : verts) {
          double nx = y[v] / top;
          change = std::max(change, std::abs(nx - x[v]));
          x[v] = nx;
        }
        if (std::abs(lambda - prev) < tol && change < tol) {
          converged = true;
          break;
        }
        prev = lambda;
      }
      if (!converged) it = max_iter;
    }
    if (!have || lambda > best.lambda) {
      have = true;
      best.lambda = lambda;
      best.perron = x;
      best.converged = converged;
      best.iterations = it;
    }
  }
  return best;
}

auto default_c(const TreeProfile& p) -> double {
  return static_cast<double>(p.m - 1) * ((p.delta - 1) * (p.delta - 1) + 1);
}

auto spex_bounds(const TreeProfile& p, double n, bool embeddable, std::optional<double> c) -> BoundsReport {
  BoundsReport r;
  r.l = p.l;
  r.delta = p.delta;
  r.n = n;
  if (embeddable) {
    if (p.delta < 2) fail(ErrorCode::DeltaTooSmall, "embeddable regime needs delta >= 2");
    r.regime = Regime::Embeddable;
    r.c = c.value_or(default_c(p));
    r.lower = f_value(p.l, p.delta - 2, n);
    r.upper = r.lower + 2 * *r.c / n;
  } else {
    r.regime = Regime::Plain;
    r.lower = f_value(p.l, p.delta - 2, n);
    r.upper = f_value(p.l, p.delta - 1, n);
  }
  return r;
}

auto join_upper_bound(const Graph& h1, const Graph& h2) -> double {
  double a = h1.max_degree();
  double d = h2.max_degree();
  double b = h2.vertex_count();
  double c = h1.vertex_count();
  return (a + d + std::sqrt((a - d) * (a - d) + 4 * b * c)) / 2;
}

auto perron_bounds_check(int l, const Graph& h2, const SpectralResult& spectrum, double tol) -> PerronCheck {
  PerronCheck r;
  r.lambda = spectrum.lambda;
  r.d = h2.max_degree();
  if (h2.vertex_count() == 0 || static_cast<int>(spectrum.perron.size()) != l + h2.vertex_count())
    fail(ErrorCode::PreconditionFailed, "Perron vector does not match K_l joined with the second part");
  r.M = 0.0;
  r.m = std::numeric_limits<double>::infinity();
  for (int v = 0; v < h2.vertex_count(); ++v) {
    r.M = std::max(r.M, spectrum.perron[l + v]);
    r.m = std::min(r.m, spectrum.perron[l + v]);
  }
  r.bound_M = r.lambda > r.d ? l / (r.lambda - r.d) : std::numeric_limits<double>::infinity();
  r.bound_spread = r.d * r.M / r.lambda;
  r.slack_M = r.bound_M - r.M;
  r.slack_spread = r.bound_spread - (r.M - r.m);
  r.holds = r.slack_M >= -tol && r.slack_spread >= -tol;
  return r;
}

auto refined_upper_check(int l, const Graph& h2, int c, std::optional<int> d, double tol) -> RefinedUpperCheck {
  RefinedUpperCheck r;
  r.d = d.value_or(h2.max_degree());
  r.c = c;
  if (l < 1 || r.d < 1) fail(ErrorCode::PreconditionFailed, "needs l >= 1 and d >= 1");
  if (h2.max_degree() > r.d) fail(ErrorCode::PreconditionFailed, "second part exceeds degree d");
  int top = 0;
  for (int v = 0; v < h2.vertex_count(); ++v) top += h2.degree(v) == r.d ? 1 : 0;
  if (top > c) fail(ErrorCode::PreconditionFailed, "more than c vertices of degree d");
  double n = l + h2.vertex_count();
  r.lambda = spectral_radius(join(complete_graph(l), h2)).lambda;
  r.bound = f_value(l, r.d - 1, n) + 2.0 * c / n;
  r.holds = r.lambda <= r.bound + tol;
  return r;
}

auto degree_count_bound(int k, int d) -> long long {
  return static_cast<long long>(k - 1) * (static_cast<long long>(d) * d + 1);
}

auto rayleigh_lower_cert(const Graph& g, const std::vector<double>& y, double c) -> bool {
  if (static_cast<int>(y.size()) != g.vertex_count()) return false;
  bool nonzero = false;
  for (double v : y) {
    if (v < 0) return false;
    nonzero = nonzero || v > 0;
  }
  if (!nonzero) return false;
  for (int v = 0; v < g.vertex_count(); ++v) {
    double s = 0.0;
    for (int w : g.neighbors(v)) s += y[w];
    if (s < c * y[v]) return false;
  }
  return true;
}

auto gap(int l, int delta, double n) -> double {
  if (delta < 2) fail(ErrorCode::DomainError, "gap needs delta >= 2");
  return f_value(l, delta - 1, n) - f_value(l, delta - 2, n);
}

auto constants_and_threshold(int m, int l, double eta, double eps, double alpha) -> ThresholdReport {
  if (l < 1 || m < 2 * l + 2) fail(ErrorCode::InvalidInputs, "needs l >= 1 and m >= 2l + 2");
  if (!(eta > 0) || !(eps > 0) || !(alpha > 0)) fail(ErrorCode::InvalidInputs, "constants must be positive");
  ThresholdReport r;
  const double M = m;
  const double L = l;
  double eta_cap = std::min(1 / (2 * L), (0.2 - 1 / (16 * L * M) + 1 / (20 * L * L * M)) / (M - L - 1));
  if (!(eta < eta_cap)) r.violations.push_back("eta");
  double eps_cap = std::min({1 / (16 * L * L * M), eta / 2, eta / (32 * L * L * M + 2)});
  if (!(eps < eps_cap)) r.violations.push_back("eps");
  // alpha <= eps^2/(10m) is allowed with equality, up to rounding.
  double alpha_cap = eps * eps / (10 * M);
  if (!(alpha < eta) || alpha > alpha_cap * (1 + 1e-12)) r.violations.push_back("alpha");
  r.valid = r.violations.empty();

  double x = 50 * M * M * L / alpha;
  double log_binom = -std::lgamma(L + 1) / std::log(10.0);
  double binom = 1.0;
  for (int i = 0; i < l; ++i) {
    log_binom += std::log10(x - i);
    binom *= (x - i) / (i + 1);
  }
  r.log10_terms = {
      std::log10(200.0) + 6 * std::log10(M) - 4 * std::log10(alpha),
      std::log10(2500.0) + 3 * std::log10(M) + 2 * std::log10(L) - 3 * std::log10(alpha),
      2 * std::log10(L) - 2 * std::log10(eps),
      std::log10(50.0) + 3 * std::log10(M) + std::log10(L) - std::log10(eps) - std::log10(alpha) + log_binom,
      std::log10(200.0) + 2 * std::log10(M) + std::log10(L) - std::log10(alpha) - std::log10(eps),
  };
  r.terms = {
      200 * std::pow(M, 6) / std::pow(alpha, 4),
      2500 * std::pow(M, 3) * L * L / std::pow(alpha, 3),
      L * L / (eps * eps),
      50 * std::pow(M, 3) * L / (eps * alpha) * binom,
      200 * M * M * L / (alpha * eps),
  };
  r.log10_N = *std::max_element(r.log10_terms.begin(), r.log10_terms.end());
  for (auto& t : r.terms)
    if (!std::isfinite(t) || t > 1e300) {
      t = std::numeric_limits<double>::infinity();
      r.overflow = true;
    }
  r.N = r.overflow ? std::numeric_limits<double>::infinity() : *std::max_element(r.terms.begin(), r.terms.end());
  return r;
}

}  // namespace spextree
