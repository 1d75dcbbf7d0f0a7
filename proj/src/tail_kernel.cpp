#include "dsplan/tail_kernel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "dsplan/errors.hpp"

namespace dsplan {

void check_stability_cap(int n) {
  if (n > kStabilityCap) {
    throw StabilityError("sample size " + std::to_string(n) + " exceeds the stability cap of " +
                         std::to_string(kStabilityCap));
  }
}

double effective_threshold(int n, double tau, double zeta) {
  if (n <= 0 || tau <= 0.0) return std::numeric_limits<double>::infinity();
  return std::max(zeta, 1.0 / (n * tau));
}

MixtureTerm make_mixture_term(int m, int j, double shift, double weight, double zeta_eff,
                              const GammaPrior& prior) {
  MixtureTerm t;
  t.m = m;
  t.j = j;
  t.tau_jm = shift;
  t.A_jm = weight;
  t.C_jm = prior.rate + m * shift;
  const double span = std::isinf(zeta_eff) ? 0.0 : 1.0 / zeta_eff - shift;
  // Empty integration range when 1/zeta_eff <= shift.
  t.Cstar_jm = span > 0.0 ? m * span / t.C_jm : 0.0;
  t.Sstar_jm = t.Cstar_jm / (1.0 + t.Cstar_jm);
  return t;
}

TailKernel::TailKernel(int n, double tau, std::span<const Term> terms, const AcceptanceCost& g,
                       const GammaPrior& prior)
    : n_(n), tau_(tau), b_(prior.rate) {
  check_stability_cap(n);
  const double a = prior.shape;
  const double base = a * std::log(prior.rate) - specfun::log_gamma(a);
  for (const auto& t : g.terms()) {
    betas_.push_back(a + t.exponent);
    log_norm_.push_back(base + specfun::log_gamma(a + t.exponent));
  }
  const std::size_t L = betas_.size();
  if (L > kMaxCostTerms) throw DomainError("TailKernel: too many acceptance-cost terms");

  int max_m = 0;
  for (const auto& t : terms) max_m = std::max(max_m, t.m);
  std::vector<Group> by_m(max_m + 1);
  for (const auto& t : terms) {
    if (t.m < 1) throw DomainError("TailKernel: mixture index m must be >= 1");
    by_m[t.m].m = t.m;
    by_m[t.m].members.push_back({t.shift, t.weight});
  }
  for (auto& grp : by_m) {
    if (grp.members.empty()) continue;
    std::stable_sort(grp.members.begin(), grp.members.end(),
                     [](const Member& x, const Member& y) { return x.shift < y.shift; });
    grp.prefix.assign((grp.members.size() + 1) * L, 0.0);
    std::vector<specfun::CompensatedSum> run(L);
    for (std::size_t k = 0; k < grp.members.size(); ++k) {
      const double log_c = std::log(b_ + grp.m * grp.members[k].shift);
      const double w = grp.members[k].weight;
      const double log_w = std::log(std::abs(w));
      for (std::size_t l = 0; l < L; ++l) {
        const double v = std::exp(log_w + log_norm_[l] - betas_[l] * log_c);
        run[l] += w < 0 ? -v : v;
        grp.prefix[(k + 1) * L + l] = run[l].value();
      }
    }
    grp.poly.resize(L * grp.m);
    for (std::size_t l = 0; l < L; ++l) {
      double c = 1.0;
      for (int i = 0; i < grp.m; ++i) {
        grp.poly[l * grp.m + i] = c;
        c *= (betas_[l] + i) / (i + 1.0);
      }
    }
    groups_.push_back(std::move(grp));
  }
}

double TailKernel::zeta_floor() const {
  if (n_ <= 0 || tau_ <= 0.0) return std::numeric_limits<double>::infinity();
  return 1.0 / (n_ * tau_);
}

template <class PowerRow>
void TailKernel::accumulate(double inv, PowerRow&& power_row, std::span<double> out) const {
  const std::size_t L = betas_.size();
  specfun::CompensatedSum total[kMaxCostTerms];
  double poly_sum[kMaxCostTerms];

  for (const auto& grp : groups_) {
    const int m = grp.m;
    const double d = b_ + m * inv;
    std::size_t active = 0;
    std::fill(poly_sum, poly_sum + L, 0.0);
    for (; active < grp.members.size(); ++active) {
      const auto& mem = grp.members[active];
      if (!(inv > mem.shift)) break;
      const double x = m * (inv - mem.shift) / d;
      for (std::size_t l = 0; l < L; ++l) {
        const double* c = &grp.poly[l * m];
        double p = c[m - 1];
        for (int i = m - 2; i >= 0; --i) p = p * x + c[i];
        poly_sum[l] += mem.weight * p;
      }
    }
    if (active == 0) continue;
    const double* first = &grp.prefix[active * L];
    const double* pw = power_row(m, d);
    for (std::size_t l = 0; l < L; ++l) {
      total[l] += first[l];
      total[l] += -pw[l] * poly_sum[l];
    }
  }
  for (std::size_t l = 0; l < L; ++l) out[l] += total[l].value();
}

void TailKernel::evaluate(double zeta, std::span<double> out) const {
  const std::size_t L = betas_.size();
  if (out.size() != L) throw DomainError("TailKernel::evaluate: output span has the wrong size");
  // zeta = 0 carries the M = 0 atom: E[lambda^p exp(-n lambda tau)].
  for (std::size_t l = 0; l < L; ++l) {
    out[l] = zeta == 0.0 ? std::exp(log_norm_[l] - betas_[l] * std::log(b_ + n_ * tau_)) : 0.0;
  }
  const double zeta_eff = effective_threshold(n_, tau_, zeta);
  if (std::isinf(zeta_eff)) return;
  double buf[kMaxCostTerms];
  accumulate(1.0 / zeta_eff,
             [&](int, double d) {
               const double log_d = std::log(d);
               for (std::size_t l = 0; l < L; ++l) buf[l] = std::exp(log_norm_[l] - betas_[l] * log_d);
               return static_cast<const double*>(buf);
             },
             out);
}

void TailKernel::evaluate(const ZetaGridPowers& powers, std::size_t k, std::span<double> out) const {
  const std::size_t L = betas_.size();
  if (out.size() != L) throw DomainError("TailKernel::evaluate: output span has the wrong size");
  const double zeta = powers.zeta(k);
  if (!(zeta > zeta_floor()) || powers.max_m() < n_) {
    evaluate(zeta, out);
    return;
  }
  std::fill(out.begin(), out.end(), 0.0);
  accumulate(1.0 / zeta, [&](int m, double) { return powers.row(k, m); }, out);
}

ZetaGridPowers::ZetaGridPowers(std::span<const double> zetas, int max_m, const AcceptanceCost& g,
                               const GammaPrior& prior)
    : zetas_(zetas.begin(), zetas.end()), max_m_(max_m), L_(g.size()) {
  prior.validate();
  const double a = prior.shape;
  const double base = a * std::log(prior.rate) - specfun::log_gamma(a);
  std::vector<double> betas;
  std::vector<double> log_norm;
  for (const auto& t : g.terms()) {
    betas.push_back(a + t.exponent);
    log_norm.push_back(base + specfun::log_gamma(a + t.exponent));
  }
  pow_.resize(zetas_.size() * (max_m_ + 1) * L_);
  for (std::size_t k = 0; k < zetas_.size(); ++k) {
    const double inv = 1.0 / zetas_[k];
    for (int m = 0; m <= max_m_; ++m) {
      const double log_d = std::log(prior.rate + m * inv);
      for (std::size_t l = 0; l < L_; ++l) {
        pow_[(k * (max_m_ + 1) + m) * L_ + l] = std::exp(log_norm[l] - betas[l] * log_d);
      }
    }
  }
}

std::vector<TailKernel::Term> type1_terms(int n, double tau) {
  check_stability_cap(n);
  std::vector<TailKernel::Term> terms;
  for (int m = 1; m <= n; ++m) {
    const double bnm = std::exp(specfun::log_binomial(n, m));
    for (int j = 0; j <= m; ++j) {
      const double w = std::round(bnm * std::exp(specfun::log_binomial(m, j)));
      terms.push_back({m, (n - m + j) * tau / m, j % 2 == 0 ? w : -w});
    }
  }
  return terms;
}

std::vector<TailKernel::Term> hybrid_terms(int n, int r, double tau) {
  check_stability_cap(n);
  std::vector<TailKernel::Term> terms;
  for (int m = 1; m <= r - 1; ++m) {
    const double bnm = std::exp(specfun::log_binomial(n, m));
    for (int j = 0; j <= m; ++j) {
      const double w = std::round(bnm * std::exp(specfun::log_binomial(m, j)));
      terms.push_back({m, (n - m + j) * tau / m, j % 2 == 0 ? w : -w});
    }
  }
  // R_{p, r-n, r}: the complete-sample gamma term, zero shift.
  terms.push_back({r, 0.0, 1.0});
  const double bnr = std::round(std::exp(specfun::log_binomial(n, r)));
  for (int i = 1; i <= r; ++i) {
    const double w = bnr * std::round(std::exp(specfun::log_binomial(r - 1, i - 1))) * r / (n - r + i);
    terms.push_back({r, (n - r + i) * tau / r, i % 2 == 0 ? w : -w});
  }
  return terms;
}

}  // namespace dsplan
