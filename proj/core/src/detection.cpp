#include "corrgraph/detection.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "corrgraph/errors.hpp"

namespace corrgraph {

int size_floor(int n) {
  if (n < 3) throw ParameterError("size_floor: n < 3");
  return static_cast<int>(std::ceil(n / std::log(n)));
}

namespace {

// For equal-cardinality subsets, the one owning the lowest differing vertex
// is lexicographically smaller as an ascending sequence.
bool lex_smaller_mask(std::uint32_t a, std::uint32_t b) {
  std::uint32_t diff = a ^ b;
  return diff != 0 && (a & (diff & -diff));
}

DensestResult constrained_bruteforce(const Graph& g, int floor) {
  const int n = g.n();
  std::vector<std::uint32_t> adj(n, 0);
  for (const auto& [u, v] : g.edges()) {
    adj[u] |= 1u << v;
    adj[v] |= 1u << u;
  }
  DensityValue best{-1, 1};
  std::uint32_t best_mask = 0;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    int size = __builtin_popcount(mask);
    if (size < floor) continue;
    std::int64_t edges = 0;
    for (std::uint32_t rest = mask; rest;) {
      int v = __builtin_ctz(rest);
      rest &= rest - 1;
      edges += __builtin_popcount(adj[v] & mask);
    }
    edges /= 2;
    DensityValue d{edges, size};
    if (best.num < 0 || best < d || (best == d && d.den > best.den) ||
        (best == d && d.den == best.den && lex_smaller_mask(mask, best_mask))) {
      best = d;
      best_mask = mask;
    }
  }
  std::vector<int> subset;
  for (int v = 0; v < n; ++v)
    if (best_mask & (1u << v)) subset.push_back(v);
  return DensestResult{std::move(subset), best, true};
}

}  // namespace

DensestResult constrained_densest(const Graph& g, int floor) {
  if (floor < 1 || floor > g.n())
    throw ParameterError("constrained_densest: floor out of range");
  DensestResult unconstrained = densest_exact(g);
  if (static_cast<int>(unconstrained.subset.size()) >= floor) return unconstrained;
  if (g.n() <= 20) return constrained_bruteforce(g, floor);
  return greedy_peel(g, floor);
}

namespace {

DetectionOutcome outcome_from(DensestResult r, StatisticMode mode, double tau) {
  DetectionOutcome o;
  o.statistic = r.density.value();
  o.decision = o.statistic >= tau ? Hypothesis::H1 : Hypothesis::H0;
  o.mode = mode;
  o.approximate = !r.exact;
  o.result = std::move(r);
  return o;
}

}  // namespace

DetectionOutcome statistic_planted(const CorrelatedPair& pair, int floor, double tau) {
  Graph h = intersection_graph(pair.g, pair.g2, pair.pi_star);
  return outcome_from(constrained_densest(h, floor), StatisticMode::planted, tau);
}

DetectionOutcome statistic_bruteforce(const Graph& g, const Graph& g2, int floor,
                                      double tau) {
  if (g.n() != g2.n()) throw ParameterError("statistic_bruteforce: size mismatch");
  if (g.n() > 8) throw RefusalError("statistic_bruteforce: n > 8");
  const int n = g.n();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  bool have = false;
  DensestResult best;
  do {
    Graph h = intersection_graph(g, g2, Bijection(perm));
    DensestResult r = constrained_densest(h, floor);
    if (!have || best.density < r.density) {
      best = std::move(r);
      have = true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return outcome_from(std::move(best), StatisticMode::bruteforce, tau);
}

DetectionOutcome statistic_identity(const Graph& g, const Graph& g2, int floor,
                                    double tau) {
  Graph h = intersection_graph(g, g2, Bijection::identity(g.n()));
  return outcome_from(constrained_densest(h, floor), StatisticMode::heuristic, tau);
}

ThresholdInfo threshold_tau(double alpha, double epsilon,
                            const std::function<RhoEstimate(double)>& rho_curve,
                            double tol) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw ParameterError("threshold_tau: alpha outside (0,1]");
  if (epsilon <= 0.0) throw ParameterError("threshold_tau: epsilon <= 0");
  ThresholdInfo info;
  InvertRhoResult inv = invert_rho_on(
      [&](double l) { return rho_curve(l).mean; }, 1.0 / alpha, tol);
  info.lambda_star = inv.lambda_star;
  info.rho_star = rho_curve(info.lambda_star);
  info.rho_plus = rho_curve(info.lambda_star + epsilon);
  const double lambda_minus = info.lambda_star - epsilon;
  if (lambda_minus > 0.0) {
    info.rho_minus = rho_curve(lambda_minus);
  } else {
    info.rho_minus = RhoEstimate{lambda_minus, 0, 0, 0.0, 0.0};  // empty graph
  }
  info.tau = 0.5 * (info.rho_star.mean + info.rho_plus.mean);
  info.xi = 0.5 * (info.rho_minus.mean + info.rho_star.mean);
  return info;
}

H0BoundTerm h0_union_bound_term(int n, int k, double ps, double tau) {
  if (k < 1) throw ParameterError("h0_union_bound_term: k < 1");
  if (!(ps > 0.0 && ps < 1.0)) throw ParameterError("h0_union_bound_term: ps outside (0,1)");
  if (tau <= 0.0) throw ParameterError("h0_union_bound_term: tau <= 0");
  const double pairs = 0.5 * k * (k - 1.0);
  const double mu = pairs * ps * ps;
  const double threshold = tau * k;
  H0BoundTerm term;
  if (threshold <= mu) {
    // Deviation is nonpositive; the only valid bound on the probability is
    // the trivial one.
    term.applicable = false;
    term.log_term = 0.0;
    return term;
  }
  double log_tail;
  if (mu == 0.0) {
    log_tail = -std::numeric_limits<double>::infinity();  // Bin(0, q) >= t > 0
  } else {
    const double delta = threshold / mu - 1.0;
    log_tail = -mu * ((1.0 + delta) * std::log1p(delta) - delta);
  }
  const double log_choose = std::lgamma(n + 1.0) - std::lgamma(k + 1.0) -
                            std::lgamma(n - k + 1.0);
  term.log_term = 2.0 * log_choose + std::lgamma(k + 1.0) + log_tail;
  return term;
}

H0BoundTotal h0_union_bound_total(int n, double ps, double tau) {
  H0BoundTotal out;
  out.first_k = size_floor(n);
  std::vector<double> logs;
  logs.reserve(n - out.first_k + 1);
  for (int k = out.first_k; k <= n; ++k) {
    H0BoundTerm t = h0_union_bound_term(n, k, ps, tau);
    out.all_applicable = out.all_applicable && t.applicable;
    logs.push_back(t.log_term);
  }
  const double peak = *std::max_element(logs.begin(), logs.end());
  if (std::isinf(peak) && peak < 0) {
    out.log_total = peak;
    out.total = 0;
    return out;
  }
  double acc = 0;
  for (double l : logs) acc += std::exp(l - peak);
  out.log_total = peak + std::log(acc);
  out.total = std::exp(out.log_total);
  return out;
}

DetectionConfig make_detection_config(int n, double alpha, double epsilon,
                                      RhoCurve& curve, double tol) {
  DetectionConfig cfg;
  cfg.n = n;
  cfg.alpha = alpha;
  cfg.epsilon = epsilon;
  cfg.thresholds = threshold_tau(
      alpha, epsilon, [&](double l) { return curve(l); }, tol);
  cfg.p = std::pow(n, -alpha);
  cfg.lambda = cfg.thresholds.lambda_star + epsilon;
  const double s2 = cfg.lambda / (n * cfg.p);
  cfg.s = std::sqrt(s2);
  if (cfg.s > 1.0)
    throw ParameterError("detection config: s = sqrt(lambda/(n p)) exceeds 1");
  cfg.size_floor = size_floor(n);
  cfg.tau = cfg.thresholds.tau;
  return cfg;
}

}  // namespace corrgraph
