#pragma once

#include <cstddef>
#include <span>

namespace ipsim {

/// Standard normal CDF.
double normal_cdf(double z);

/// Standard normal quantile (Wichura's AS 241, ~1e-15 relative accuracy).
/// p outside (0,1) throws NumericError.
double normal_quantile(double p);

/// Digamma function psi(x) for x > 0.
double digamma(double x);

/// Trigamma function psi'(x) for x > 0.
double trigamma(double x);

/// Two-sided Kolmogorov-Smirnov statistic of a sample against U(0,1).
/// The input need not be sorted.
double ks_statistic_uniform(std::span<const double> u);

/// Asymptotic two-sided KS critical value at significance alpha.
double ks_critical_value(std::size_t n, double alpha);

}  // namespace ipsim
