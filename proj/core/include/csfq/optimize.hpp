#ifndef CSFQ_OPTIMIZE_HPP_
#define CSFQ_OPTIMIZE_HPP_

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace csfq {

struct MinimizeOptions {
  double tolerance = 1e-9;    // convergence: simplex diameter below this
  int max_iterations = 2000;  // per restart
  int restarts = 0;           // additional seeded-jitter restarts
  std::uint64_t seed = 0;
  double initial_step = 0.05;   // relative simplex edge (absolute for zero coords)
  double restart_jitter = 0.10; // +/- relative jitter applied on restart
};

struct MinimizeResult {
  std::vector<double> argmin;
  double value = 0.0;
  bool converged = false;
  int iterations = 0;   // Nelder-Mead iterations over all restarts
  int evaluations = 0;  // objective calls
};

/// Derivative-free Nelder-Mead minimization with optional seeded random
/// restarts. The returned value never exceeds objective(start). A non-finite
/// objective value aborts the current restart and the best finite point seen
/// so far stands.
MinimizeResult minimize(const std::function<double(std::span<const double>)>& objective,
                        std::span<const double> start, const MinimizeOptions& options = {});

/// Brent root find on [lo, hi]. Requires f(lo) and f(hi) to straddle zero;
/// stops when |f| vanishes or the bracket width falls below tolerance.
double find_root(const std::function<double(double)>& f, double lo, double hi,
                 double tolerance = 1e-12);

}  // namespace csfq

#endif  // CSFQ_OPTIMIZE_HPP_
