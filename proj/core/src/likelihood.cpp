#include "corrgraph/likelihood.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "corrgraph/errors.hpp"

namespace corrgraph {

namespace {

void require_interior(double p, double s, const char* who) {
  if (!(p > 0.0 && p < 1.0 && s > 0.0 && s < 1.0))
    throw ParameterError(std::string(who) + ": p, s must lie in (0,1)");
}

}  // namespace

double ell(int x, int y, double p, double s) {
  require_interior(p, s, "ell");
  const double ps = p * s;
  if (x == 0 && y == 0) return (1.0 - 2.0 * ps + ps * s) / ((1.0 - ps) * (1.0 - ps));
  if (x != y) return (1.0 - s) / (1.0 - ps);
  return 1.0 / p;
}

double joint_edge_pmf(int x, int y, double p, double s) {
  const double ps = p * s;
  if (x == 1 && y == 1) return ps * s;
  if (x != y) return ps * (1.0 - s);
  return 1.0 - 2.0 * ps + ps * s;
}

LikelihoodKernel kernel(double p, double s) {
  require_interior(p, s, "kernel");
  LikelihoodKernel k;
  k.p = p;
  k.s = s;
  k.ell00 = ell(0, 0, p, s);
  k.ell01 = ell(0, 1, p, s);
  k.ell11 = ell(1, 1, p, s);
  const double ps = p * s;
  k.m[0][0] = (1.0 - 2.0 * ps + ps * s) / (1.0 - ps);
  k.m[0][1] = ps * (1.0 - s) / (1.0 - ps);
  k.m[1][0] = 1.0 - s;
  k.m[1][1] = s;
  k.rho = s * (1.0 - p) / (1.0 - ps);
  // Numeric spectrum of the 2x2 matrix.
  const double tr = k.m[0][0] + k.m[1][1];
  const double det = k.m[0][0] * k.m[1][1] - k.m[0][1] * k.m[1][0];
  const double disc = std::sqrt(std::max(0.0, tr * tr / 4.0 - det));
  k.eigenvalues[0] = tr / 2.0 - disc;
  k.eigenvalues[1] = tr / 2.0 + disc;
  return k;
}

double pair_loglikelihood(const Graph& g, const Graph& g2, const Bijection& pi,
                          double p, double s) {
  if (g.n() != g2.n() || g.n() != pi.size())
    throw ParameterError("pair_loglikelihood: size mismatch");
  require_interior(p, s, "pair_loglikelihood");
  const int n = g.n();
  std::int64_t n11 = 0;
  for (const auto& [u, v] : g.edges())
    if (g2.has_edge(pi(u), pi(v))) ++n11;
  const std::int64_t total = static_cast<std::int64_t>(n) * (n - 1) / 2;
  const std::int64_t n10 = g.m() - n11;
  const std::int64_t n01 = g2.m() - n11;
  const std::int64_t n00 = total - n11 - n10 - n01;
  return static_cast<double>(n00) * std::log(ell(0, 0, p, s)) +
         static_cast<double>(n10 + n01) * std::log(ell(0, 1, p, s)) -
         static_cast<double>(n11) * std::log(p);
}

double log_likelihood_ratio(const Graph& g, const Graph& g2, double p, double s) {
  if (g.n() != g2.n()) throw ParameterError("likelihood_ratio: size mismatch");
  if (g.n() > 8) throw RefusalError("likelihood_ratio: n > 8");
  require_interior(p, s, "likelihood_ratio");
  const int n = g.n();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  // log-sum-exp over all n! bijections
  std::vector<double> terms;
  do {
    terms.push_back(pair_loglikelihood(g, g2, Bijection(perm), p, s));
  } while (std::next_permutation(perm.begin(), perm.end()));
  const double peak = *std::max_element(terms.begin(), terms.end());
  double acc = 0;
  for (double t : terms) acc += std::exp(t - peak);
  return peak + std::log(acc) - std::lgamma(n + 1.0);
}

double likelihood_ratio(const Graph& g, const Graph& g2, double p, double s) {
  return std::exp(log_likelihood_ratio(g, g2, p, s));
}

double orbit_factor(int k, double p, double s) {
  if (k < 1) throw ParameterError("orbit_factor: k < 1");
  require_interior(p, s, "orbit_factor");
  const double rho = s * (1.0 - p) / (1.0 - p * s);
  const double pss = p * s * s;
  const double denom = 1.0 - std::pow(pss, k);
  if (denom <= 0.0) throw ParameterError("orbit_factor: (p s^2)^k reaches 1");
  return (1.0 + std::pow(rho, 2 * k) - std::pow(s, 2 * k)) / denom;
}

double exact_tv(int n, double p, double s) {
  if (n > 4) throw RefusalError("exact_tv: n > 4");
  if (n < 0) throw ParameterError("exact_tv: negative n");
  if (p < 0.0 || p > 1.0 || s < 0.0 || s > 1.0)
    throw ParameterError("exact_tv: p, s outside [0,1]");
  const int pairs = n * (n - 1) / 2;
  const int states = 1 << pairs;
  std::vector<Edge> pair_list;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pair_list.emplace_back(u, v);
  std::vector<std::vector<int>> pair_index(n, std::vector<int>(n, -1));
  for (int i = 0; i < pairs; ++i) {
    pair_index[pair_list[i].first][pair_list[i].second] = i;
    pair_index[pair_list[i].second][pair_list[i].first] = i;
  }

  // All bijections as pair-slot permutations.
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> pair_maps;
  do {
    std::vector<int> pm(pairs);
    for (int i = 0; i < pairs; ++i)
      pm[i] = pair_index[perm[pair_list[i].first]][perm[pair_list[i].second]];
    pair_maps.push_back(std::move(pm));
  } while (std::next_permutation(perm.begin(), perm.end()));

  const long double ps = static_cast<long double>(p) * s;
  const long double q11 = ps * s;
  const long double q10 = ps * (1.0L - s);
  const long double q00 = 1.0L - 2.0L * ps + ps * s;

  std::vector<long double> er_prob(states);
  for (int g = 0; g < states; ++g) {
    long double prob = 1.0L;
    for (int i = 0; i < pairs; ++i)
      prob *= (g >> i & 1) ? ps : (1.0L - ps);
    er_prob[g] = prob;
  }

  long double tv = 0.0L;
  const long double inv_fact = 1.0L / std::tgammal(n + 1.0L);
  for (int g = 0; g < states; ++g) {
    for (int g2 = 0; g2 < states; ++g2) {
      long double q_total = 0.0L;
      for (const auto& pm : pair_maps) {
        long double term = 1.0L;
        for (int i = 0; i < pairs; ++i) {
          int x = g >> i & 1;
          int y = g2 >> pm[i] & 1;
          term *= (x && y) ? q11 : (x != y ? q10 : q00);
        }
        q_total += term;
      }
      q_total *= inv_fact;
      tv += std::abs(er_prob[g] * er_prob[g2] - q_total);
    }
  }
  return static_cast<double>(tv / 2.0L);
}

}  // namespace corrgraph
