#include "csfq/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>

namespace csfq {

namespace {

// Uniform in [0,1) from the raw engine output; the distribution adapters in
// <random> are not pinned by the standard, this is.
double uniform01(std::mt19937_64& rng) { return (rng() >> 11) * 0x1.0p-53; }

double simplex_diameter(const std::vector<std::vector<double>>& pts) {
  double d = 0.0;
  for (std::size_t a = 0; a < pts.size(); ++a)
    for (std::size_t b = a + 1; b < pts.size(); ++b) {
      double s = 0.0;
      for (std::size_t k = 0; k < pts[a].size(); ++k) {
        const double diff = pts[a][k] - pts[b][k];
        s += diff * diff;
      }
      d = std::max(d, std::sqrt(s));
    }
  return d;
}

struct NmOutcome {
  std::vector<double> x;
  double value = std::numeric_limits<double>::infinity();
  bool converged = false;
  bool aborted = false;  // non-finite objective encountered
  int iterations = 0;
  int evaluations = 0;
};

NmOutcome nelder_mead(const std::function<double(std::span<const double>)>& objective,
                      const std::vector<double>& start, const MinimizeOptions& opt) {
  const std::size_t n = start.size();
  NmOutcome out;
  out.x = start;

  std::vector<std::vector<double>> pts(n + 1, start);
  std::vector<double> f(n + 1);
  bool bad = false;
  for (std::size_t i = 0; i <= n; ++i) {
    if (i > 0) {
      const double s = pts[i][i - 1];
      pts[i][i - 1] = (s != 0.0) ? s * (1.0 + opt.initial_step) : opt.initial_step;
    }
    f[i] = objective(pts[i]);
    ++out.evaluations;
    if (!std::isfinite(f[i])) {
      bad = true;
      break;
    }
    if (f[i] < out.value) {
      out.value = f[i];
      out.x = pts[i];
    }
  }
  if (bad) {
    out.aborted = true;
    return out;
  }

  auto record = [&](const std::vector<double>& x, double fx) {
    if (fx < out.value) {
      out.value = fx;
      out.x = x;
    }
  };

  std::vector<std::size_t> order(n + 1);
  std::vector<double> centroid(n), xr(n), xe(n), xc(n);
  for (int iter = 0; iter < opt.max_iterations; ++iter) {
    ++out.iterations;
    for (std::size_t i = 0; i <= n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return f[a] < f[b]; });
    const std::size_t best = order[0], second_worst = order[n - 1], worst = order[n];

    if (simplex_diameter(pts) < opt.tolerance) {
      out.converged = true;
      break;
    }

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == worst) continue;
      for (std::size_t k = 0; k < n; ++k) centroid[k] += pts[i][k];
    }
    for (std::size_t k = 0; k < n; ++k) centroid[k] /= static_cast<double>(n);

    auto eval = [&](const std::vector<double>& x) {
      const double v = objective(x);
      ++out.evaluations;
      return v;
    };

    for (std::size_t k = 0; k < n; ++k) xr[k] = centroid[k] + (centroid[k] - pts[worst][k]);
    const double fr = eval(xr);
    if (!std::isfinite(fr)) {
      out.aborted = true;
      return out;
    }
    record(xr, fr);

    if (fr < f[best]) {
      for (std::size_t k = 0; k < n; ++k) xe[k] = centroid[k] + 2.0 * (centroid[k] - pts[worst][k]);
      const double fe = eval(xe);
      if (!std::isfinite(fe)) {
        out.aborted = true;
        return out;
      }
      record(xe, fe);
      if (fe < fr) {
        pts[worst] = xe;
        f[worst] = fe;
      } else {
        pts[worst] = xr;
        f[worst] = fr;
      }
      continue;
    }
    if (fr < f[second_worst]) {
      pts[worst] = xr;
      f[worst] = fr;
      continue;
    }

    const bool outside = fr < f[worst];
    for (std::size_t k = 0; k < n; ++k) {
      const double toward = outside ? xr[k] : pts[worst][k];
      xc[k] = centroid[k] + 0.5 * (toward - centroid[k]);
    }
    const double fc = eval(xc);
    if (!std::isfinite(fc)) {
      out.aborted = true;
      return out;
    }
    record(xc, fc);
    if (fc < (outside ? fr : f[worst])) {
      pts[worst] = xc;
      f[worst] = fc;
      continue;
    }

    // shrink toward best
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == best) continue;
      for (std::size_t k = 0; k < n; ++k) pts[i][k] = pts[best][k] + 0.5 * (pts[i][k] - pts[best][k]);
      f[i] = eval(pts[i]);
      if (!std::isfinite(f[i])) {
        out.aborted = true;
        return out;
      }
      record(pts[i], f[i]);
    }
  }
  return out;
}

}  // namespace

MinimizeResult minimize(const std::function<double(std::span<const double>)>& objective,
                        std::span<const double> start, const MinimizeOptions& options) {
  if (start.empty()) throw std::invalid_argument("minimize: empty start point");
  const std::vector<double> x0(start.begin(), start.end());
  const double f0 = objective(x0);
  if (!std::isfinite(f0))
    throw std::invalid_argument("minimize: objective is not finite at the start point");

  MinimizeResult result;
  result.argmin = x0;
  result.value = f0;

  std::mt19937_64 rng(options.seed);
  std::vector<double> origin = x0;
  for (int r = 0; r <= options.restarts; ++r) {
    if (r > 0) {
      origin = result.argmin;
      for (auto& v : origin) {
        const double jitter = options.restart_jitter * (2.0 * uniform01(rng) - 1.0);
        v = (v != 0.0) ? v * (1.0 + jitter) : jitter;
      }
      if (!std::isfinite(objective(origin))) continue;  // skip a bad jitter
    }
    const NmOutcome nm = nelder_mead(objective, origin, options);
    result.iterations += nm.iterations;
    result.evaluations += nm.evaluations;
    if (nm.value < result.value) {
      result.value = nm.value;
      result.argmin = nm.x;
    }
    if (nm.converged) result.converged = true;
  }
  return result;
}

double find_root(const std::function<double(double)>& f, double lo, double hi,
                 double tolerance) {
  double a = lo, b = hi;
  double fa = f(a), fb = f(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if (fa * fb > 0.0) {
    std::ostringstream msg;
    msg << "find_root: no sign change on [" << a << ", " << b << "]: f(lo) = " << fa
        << ", f(hi) = " << fb;
    throw std::invalid_argument(msg.str());
  }

  // Brent (1973): inverse quadratic / secant with bisection fallback.
  double c = a, fc = fa;
  double d = b - a, e = b - a;
  for (int iter = 0; iter < 200; ++iter) {
    if (std::abs(fc) < std::abs(fb)) {
      a = b;
      b = c;
      c = a;
      fa = fb;
      fb = fc;
      fc = fa;
    }
    const double tol1 = 2.0 * std::numeric_limits<double>::epsilon() * std::abs(b) +
                        0.5 * tolerance;
    const double xm = 0.5 * (c - b);
    if (std::abs(xm) <= tol1 || fb == 0.0) return b;

    if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
      double p, q;
      const double s = fb / fa;
      if (a == c) {
        p = 2.0 * xm * s;
        q = 1.0 - s;
      } else {
        const double qq = fa / fc, rr = fb / fc;
        p = s * (2.0 * xm * qq * (qq - rr) - (b - a) * (rr - 1.0));
        q = (qq - 1.0) * (rr - 1.0) * (s - 1.0);
      }
      if (p > 0.0) q = -q;
      p = std::abs(p);
      if (2.0 * p < std::min(3.0 * xm * q - std::abs(tol1 * q), std::abs(e * q))) {
        e = d;
        d = p / q;
      } else {
        d = xm;
        e = d;
      }
    } else {
      d = xm;
      e = d;
    }
    a = b;
    fa = fb;
    b += (std::abs(d) > tol1) ? d : (xm > 0 ? tol1 : -tol1);
    fb = f(b);
    if ((fb > 0) == (fc > 0)) {
      c = a;
      fc = fa;
      d = b - a;
      e = d;
    }
  }
  return b;
}

}  // namespace csfq
