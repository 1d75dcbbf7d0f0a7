#pragma once

#include <span>
#include <vector>

#include "dsplan/model.hpp"
#include "dsplan/specfun.hpp"

namespace dsplan {

/// Largest sample size for which the alternating binomial sums are evaluated.
inline constexpr int kStabilityCap = 30;

/// Largest number of acceptance-cost terms the tail kernel accepts.
inline constexpr std::size_t kMaxCostTerms = 32;

/// Throws StabilityError when n exceeds kStabilityCap.
void check_stability_cap(int n);

/// One member of the shifted-gamma mixture behind the estimator's law:
/// weight * Gamma(beta)/C^beta * I_{S*}(m, beta) with C = b + m * shift.
struct MixtureTerm {
  int m = 0;
  int j = 0;
  double tau_jm = 0.0;  // shift (n - m + j) tau / m
  double A_jm = 0.0;    // signed weight
  double C_jm = 0.0;    // b + m * tau_jm
  double Cstar_jm = 0.0;
  double Sstar_jm = 0.0;
};

/// Fills the zeta-dependent fields of a term: C* = max(0, m (1/zeta_eff - shift)) / C.
MixtureTerm make_mixture_term(int m, int j, double shift, double weight, double zeta_eff,
                              const GammaPrior& prior);

/// zeta_eff = max(zeta, 1/(n tau)).
double effective_threshold(int n, double tau, double zeta);

/// Prior-weighted powers K_l (b + m / zeta_k)^{-beta_l} for a fixed zeta grid,
/// shared by every TailKernel built with the same prior and acceptance cost.
class ZetaGridPowers {
 public:
  ZetaGridPowers(std::span<const double> zetas, int max_m, const AcceptanceCost& g,
                 const GammaPrior& prior);

  std::size_t size() const { return zetas_.size(); }
  double zeta(std::size_t k) const { return zetas_[k]; }
  int max_m() const { return max_m_; }
  /// Row of exponents() values for (k, m).
  const double* row(std::size_t k, int m) const { return &pow_[(k * (max_m_ + 1) + m) * L_]; }

 private:
  std::vector<double> zetas_;
  int max_m_;
  std::size_t L_;
  std::vector<double> pow_;
};

/// Evaluates, for every acceptance-cost exponent p_l, the prior-weighted tail
///   T_l(zeta) = E[ lambda^{p_l} P(lambda_hat >= zeta | lambda) ]
/// for a fixed (n, tau) and a fixed list of mixture terms.
///
/// Everything independent of zeta is precomputed, so repeated calls across a
/// zeta grid cost O(sum_t m_t * L) multiply-adds plus O(n * L) exponentials.
/// The incomplete beta with integer first argument m is expanded as
/// 1 - (1-x)^beta sum_{i<m} (beta)_i x^i / i!, and (1-x) = C_t / (b + m/zeta_eff)
/// makes the second part independent of C_t apart from the polynomial.
class TailKernel {
 public:
  struct Term {
    int m;
    double shift;
    double weight;
  };

  TailKernel(int n, double tau, std::span<const Term> terms, const AcceptanceCost& g,
             const GammaPrior& prior);

  std::size_t exponents() const { return betas_.size(); }

  /// Writes T_l(zeta) into out (size == exponents()).
  void evaluate(double zeta, std::span<double> out) const;

  /// Same as evaluate(powers.zeta(k), out) for grid points above 1/(n tau).
  void evaluate(const ZetaGridPowers& powers, std::size_t k, std::span<double> out) const;

  /// 1/(n tau), below which the tail no longer depends on zeta (for zeta > 0).
  double zeta_floor() const;

 private:
  struct Member {
    double shift;
    double weight;
  };
  struct Group {
    int m;
    std::vector<Member> members;  // sorted by shift
    std::vector<double> prefix;   // (members.size() + 1) * L, running sums of weight K_l C^{-beta_l}
    std::vector<double> poly;     // L * m coefficients (beta_l)_i / i!
  };

  template <class PowerRow>
  void accumulate(double inv, PowerRow&& power_row, std::span<double> out) const;

  int n_;
  double tau_;
  double b_;
  std::vector<double> betas_;
  std::vector<double> log_norm_;  // ln(b^a Gamma(beta_l) / Gamma(a))
  std::vector<Group> groups_;
};

/// Terms of the Type-I mixture: m = 1..n, j = 0..m.
std::vector<TailKernel::Term> type1_terms(int n, double tau);

/// Terms of the Type-I hybrid mixture: m < r terms, the exact-r gamma term and
/// the order-statistic correction terms.
std::vector<TailKernel::Term> hybrid_terms(int n, int r, double tau);

}  // namespace dsplan
