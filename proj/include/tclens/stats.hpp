#pragma once

namespace tclens {

// Closed-form distribution helpers for the conjugate posteriors. Quantiles
// at q = 0 and q = 1 return the support bounds (-inf/+inf for the normal,
// 0/+inf for the gamma) rather than throwing.

double normal_cdf(double x, double mean, double sd);
double normal_quantile(double q, double mean, double sd);

double gamma_cdf(double x, double shape, double rate);
double gamma_quantile(double q, double shape, double rate);

}  // namespace tclens
