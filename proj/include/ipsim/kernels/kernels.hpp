#pragma once

#include <cstddef>
#include <string>

namespace ipsim::kernels {

/// Batched numeric kernels behind the fitting, simulation and scoring inner
/// loops. Two implementations exist: a scalar reference (plain std:: math,
/// the semantic ground truth) and an AVX2/FMA variant selected at runtime.
/// The variants are equivalence-tested against each other; all are pure
/// functions safe for concurrent use.
struct Ops {
    const char* name;

    /// out[i] = exp(x[i]); overflow saturates to +inf, underflow to 0.
    void (*vexp)(const double* x, double* out, std::size_t n);

    /// out[i] = log(x[i]) for x > 0.
    void (*vlog)(const double* x, double* out, std::size_t n);

    /// Softplus link: theta[i] = eps + log1p(exp(gamma*eta[i])).
    /// If dtheta != nullptr also writes d theta / d eta.
    /// Stable for |gamma*eta| well past 500.
    void (*softplus)(const double* eta, double* theta, double* dtheta, std::size_t n,
                     double eps, double gamma);

    /// Binary cross-entropy given logits. Returns sum of losses; writes
    /// grad[i] = sigmoid(eta[i]) - y[i]. y must be 0 or 1.
    double (*logistic_loss_grad)(const double* eta, const double* y, double* grad,
                                 std::size_t n);

    /// Johnson S_U negative log-likelihood, summed over observations, with
    /// per-observation parameter vectors. Writes per-observation gradients
    /// unless the gradient pointers are null (all four must then be null).
    /// Invalid parameters (tau <= 0) yield NaN in the sum.
    double (*jsu_nll_grad)(const double* y, const double* mu, const double* sigma,
                           const double* nu, const double* tau, double* gmu,
                           double* gsigma, double* gnu, double* gtau, std::size_t n);

    double (*dot)(const double* a, const double* b, std::size_t n);

    /// y[i] += a * x[i].
    void (*axpy)(double a, const double* x, double* y, std::size_t n);

    /// Euclidean distance between two vectors.
    double (*l2_dist)(const double* a, const double* b, std::size_t n);
};

enum class Backend { Auto, Scalar, Avx2 };

const Ops& scalar_ops();
const Ops& avx2_ops();  // valid only when avx2_supported()
bool avx2_supported();

/// Selects the backend. Auto picks AVX2 when the CPU supports it; the
/// IPSIM_KERNELS environment variable ("scalar"/"avx2") overrides Auto.
void set_backend(Backend b);

const Ops& active();

}  // namespace ipsim::kernels
