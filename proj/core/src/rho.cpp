#include "corrgraph/rho.hpp"

#include <cmath>

#include "corrgraph/errors.hpp"
#include "corrgraph/parallel.hpp"
#include "corrgraph/sampling.hpp"

namespace corrgraph {

RhoEstimate estimate_rho(double lambda, int n, int trials, RngSeed rng,
                         int threads) {
  if (lambda <= 0) throw ParameterError("estimate_rho: lambda must be positive");
  if (n < 2) throw ParameterError("estimate_rho: n < 2");
  if (trials < 1) throw ParameterError("estimate_rho: trials < 1");
  if (lambda / n > 1.0) throw ParameterError("estimate_rho: lambda/n > 1");

  std::vector<double> values(trials);
  parallel_for(trials, threads, [&](int t) {
    Graph g = sample_er(n, lambda / n, rng.with_stream(rng.stream + t));
    values[t] = densest_exact(g).density.value();
  });
  double mean = 0;
  for (double v : values) mean += v;
  mean /= trials;
  double var = 0;
  for (double v : values) var += (v - mean) * (v - mean);
  double se = trials > 1 ? std::sqrt(var / (trials - 1) / trials) : 0.0;
  return RhoEstimate{lambda, n, trials, mean, se};
}

const RhoEstimate& RhoCurve::operator()(double lambda) {
  auto it = cache_.find(lambda);
  if (it == cache_.end())
    it = cache_.emplace(lambda, estimate_rho(lambda, n_, trials_, rng_, threads_)).first;
  return it->second;
}

InvertRhoResult invert_rho_on(const std::function<double(double)>& curve,
                              double target, double tol) {
  if (target < 1.0) throw ParameterError("invert_rho: target < 1");
  if (tol <= 0.0) throw ParameterError("invert_rho: tol must be positive");
  InvertRhoResult out;
  if (target == 1.0) return out;  // rho_inverse(1) = 1 by convention

  const double cap = 2.0 * target * std::max(2.0, target);
  double lo = 1.0;
  double f_lo = curve(lo);
  ++out.evaluations;
  if (f_lo >= target)
    return InvertRhoResult{lo, f_lo, out.evaluations};
  double hi = 2.0;
  double f_hi;
  for (;;) {
    if (hi > cap) throw BracketingError("invert_rho: no bracket within cap");
    f_hi = curve(hi);
    ++out.evaluations;
    if (f_hi >= target) break;
    lo = hi;
    hi *= 2.0;
  }
  while (hi - lo > tol) {
    double mid = 0.5 * (lo + hi);
    double f_mid = curve(mid);
    ++out.evaluations;
    if (f_mid < target)
      lo = mid;
    else
      hi = mid;
  }
  out.lambda_star = 0.5 * (lo + hi);
  out.rho_at_result = curve(out.lambda_star);
  ++out.evaluations;
  return out;
}

InvertRhoResult invert_rho(double target, int n, int trials, RngSeed rng,
                           double tol, int threads) {
  RhoCurve curve(n, trials, rng, threads);
  return invert_rho_on([&](double l) { return curve(l).mean; }, target, tol);
}

}  // namespace corrgraph
