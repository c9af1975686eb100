#pragma once

namespace boem {

// Poisson log-pmf; mu = 0 puts all mass on y = 0.
double poisson_logpmf(long y, double mu);

// Log-pmf of a count conditional on the structural-zero indicator:
// pi = 1 forces y = 0, pi = 0 is plain Poisson(mu).
double zip_logpmf_conditional(long y, double mu, int pi);

// Log-pmf with the indicator marginalised over Bern(rho). The y = 0 branch
// log(rho + (1-rho) e^-mu) is evaluated by log-sum-exp.
double zip_logpmf_marginal(long y, double mu, double rho);

struct ZipMoments {
  double mean;
  double variance;
};

// Marginal mean (1-rho)*mu and variance mean + rho/(1-rho)*mean^2.
ZipMoments zip_moments(double mu, double rho);

}  // namespace boem
