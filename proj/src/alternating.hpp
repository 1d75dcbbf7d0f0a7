#pragma once

#include <vector>

namespace dsplan::detail {

// Alternating binomial sums over the gamma prior. Each is summed in double and
// redone in binary128 when the term magnitudes put the double result's
// absolute error above about 1e-11.

/// P(N = k), k = 0..n, for N ~ Binomial(n, 1 - exp(-lambda tau)), lambda ~ Gamma(a, b):
///   C(n,k) sum_j (-1)^j C(k,j) (b / (b + (n-k+j) tau))^a.
std::vector<double> prior_binomial_pmfs(int n, double tau, double a, double b);

/// r C(n,r) sum_{j<r} (-1)^{r-1-j} C(r-1,j) [b/c^2 K(log1p(c tau/b)) - tau/c (1 + c tau/b)^-a],
/// c = n - j, K(L) = (1 - exp(-(a-1) L)) / (a-1).
double order_statistic_part(int n, int r, double tau, double a, double b);

}  // namespace dsplan::detail
