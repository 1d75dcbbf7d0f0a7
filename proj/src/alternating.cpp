#include "alternating.hpp"

#include <quadmath.h>

#include <cmath>
#include <unordered_map>
#include <vector>

#include "dsplan/specfun.hpp"

namespace dsplan::detail {

namespace {

using quad = __float128;

constexpr double kDoubleBudget = 1e-11;

template <class T>
constexpr double kSeriesLimit = 1e-12;
template <>
constexpr double kSeriesLimit<quad> = 1e-25;

double xlog1p(double x) { return std::log1p(x); }
double xexp(double x) { return std::exp(x); }
double xexpm1(double x) { return std::expm1(x); }
double xabs(double x) { return std::abs(x); }
quad xlog1p(quad x) { return log1pq(x); }
quad xexp(quad x) { return expq(x); }
quad xexpm1(quad x) { return expm1q(x); }
quad xabs(quad x) { return fabsq(x); }

// C(n, k) as an exact integer while it fits, else through lgamma.
template <class T>
T binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (n <= 60) {
    unsigned long long c = 1;
    k = k < n - k ? k : n - k;
    for (int i = 1; i <= k; ++i) c = c * static_cast<unsigned long long>(n - k + i) / static_cast<unsigned long long>(i);
    return static_cast<T>(c);
  }
  return static_cast<T>(std::exp(specfun::log_binomial(n, k)));
}

// Fills out[k] = P(N = k) and returns the largest term magnitude.
// (b / (b + c tau))^a for c = 0..n. The binary128 values are cached per tau,
// since a search revisits the same tau for many sizes and targets.
std::vector<double> prior_laplace(int n, double tau, double a, double b) {
  std::vector<double> f(n + 1);
  for (int c = 0; c <= n; ++c) f[c] = std::exp(-a * std::log1p(c * tau / b));
  return f;
}

std::vector<quad> prior_laplace_exact(int n, double tau, double a, double b) {
  struct Cache {
    double a = 0.0;
    double b = 0.0;
    std::unordered_map<double, std::vector<quad>> values;
  };
  thread_local Cache cache;
  if (cache.a != a || cache.b != b || cache.values.size() > 100'000) cache = Cache{a, b, {}};
  std::vector<quad>& f = cache.values[tau];
  const quad qa = a;
  const quad qb = b;
  const quad qtau = tau;
  for (int c = static_cast<int>(f.size()); c <= n; ++c) f.push_back(expq(-qa * log1pq(c * qtau / qb)));
  return {f.begin(), f.begin() + n + 1};
}

std::vector<double> laplace(int n, double tau, double a, double b, double) { return prior_laplace(n, tau, a, b); }
std::vector<quad> laplace(int n, double tau, double a, double b, quad) { return prior_laplace_exact(n, tau, a, b); }

template <class T>
T pmfs(int n, double tau, double a, double b, std::vector<T>& out) {
  const std::vector<T> f = laplace(n, tau, a, b, T(0));
  out.assign(n + 1, T(0));
  std::vector<T> row(1, T(1));  // C(k, .)
  T magnitude = 0;
  for (int k = 0; k <= n; ++k) {
    if (k > 0) {
      row.push_back(T(1));
      for (int j = k - 1; j > 0; --j) row[j] += row[j - 1];
    }
    T sum = 0;
    T size = 0;
    for (int j = 0; j <= k; ++j) {
      const T v = row[j] * f[n - k + j];
      sum += j % 2 == 0 ? v : -v;
      size += v;
    }
    const T c = binomial<T>(n, k);
    out[k] = c * sum;
    if (c * size > magnitude) magnitude = c * size;
  }
  return magnitude;
}

template <class T>
T order_part(int n, int r, T tau, T a, T b, T& magnitude) {
  const T s = a - 1;
  T sum = 0;
  magnitude = 0;
  for (int j = 0; j <= r - 1; ++j) {
    const T c = n - j;
    const T L = xlog1p(c * tau / b);
    const T kernel = xabs(s * L) < T(kSeriesLimit<T>) ? L * (1 - s * L / 2) : -xexpm1(-s * L) / s;
    const T v = binomial<T>(r - 1, j) * (b / (c * c) * kernel - tau / c * xexp(-a * L));
    sum += (r - 1 - j) % 2 == 0 ? v : -v;
    magnitude += xabs(v);
  }
  const T scale = r * binomial<T>(n, r);
  magnitude *= scale;
  return scale * sum;
}

}  // namespace

std::vector<double> prior_binomial_pmfs(int n, double tau, double a, double b) {
  std::vector<double> fast;
  if (pmfs<double>(n, tau, a, b, fast) * 0x1p-50 < kDoubleBudget) return fast;
  std::vector<quad> exact;
  pmfs<quad>(n, tau, a, b, exact);
  for (int k = 0; k <= n; ++k) fast[k] = static_cast<double>(exact[k]);
  return fast;
}

double order_statistic_part(int n, int r, double tau, double a, double b) {
  double magnitude = 0.0;
  const double fast = order_part<double>(n, r, tau, a, b, magnitude);
  if (magnitude * 0x1p-50 < kDoubleBudget) return fast;
  quad m = 0;
  return static_cast<double>(order_part<quad>(n, r, tau, a, b, m));
}

}  // namespace dsplan::detail
