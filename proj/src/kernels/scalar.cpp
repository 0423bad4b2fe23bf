// Scalar reference kernels. These define the semantics; the SIMD variants
// are tested for agreement against this file.

#include <cmath>

#include "ipsim/kernels/kernels.hpp"

namespace ipsim::kernels {

namespace {

constexpr double kHalfLog2Pi = 0.91893853320467274178;  // 0.5*log(2*pi)

void vexp_scalar(const double* x, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = std::exp(x[i]);
}

void vlog_scalar(const double* x, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = std::log(x[i]);
}

inline double softplus_one(double u) {
    // log(1 + e^u) without overflow on either side.
    return u > 0.0 ? u + std::log1p(std::exp(-u)) : std::log1p(std::exp(u));
}

inline double sigmoid_one(double u) {
    if (u >= 0.0) {
        const double e = std::exp(-u);
        return 1.0 / (1.0 + e);
    }
    const double e = std::exp(u);
    return e / (1.0 + e);
}

void softplus_scalar(const double* eta, double* theta, double* dtheta, std::size_t n,
                     double eps, double gamma) {
    for (std::size_t i = 0; i < n; ++i) {
        const double u = gamma * eta[i];
        theta[i] = eps + softplus_one(u);
        if (dtheta) dtheta[i] = gamma * sigmoid_one(u);
    }
}

double logistic_loss_grad_scalar(const double* eta, const double* y, double* grad,
                                 std::size_t n) {
    double loss = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        loss += softplus_one(eta[i]) - y[i] * eta[i];
        grad[i] = sigmoid_one(eta[i]) - y[i];
    }
    return loss;
}

inline double asinh_guarded(double z) {
    // log(z + sqrt(z^2+1)) on |z|, sign restored; avoids both the
    // cancellation for z < 0 and overflow of z^2 for huge |z|.
    const double az = std::fabs(z);
    double a;
    if (az > 1e150) {
        a = std::log(az) + 0.6931471805599453094;
    } else {
        a = std::log(az + std::sqrt(az * az + 1.0));
    }
    return z < 0.0 ? -a : a;
}

double jsu_nll_grad_scalar(const double* y, const double* mu, const double* sigma,
                           const double* nu, const double* tau, double* gmu, double* gsigma,
                           double* gnu, double* gtau, std::size_t n) {
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double s = sigma[i];
        const double t = tau[i];
        const double z = (y[i] - mu[i]) / s;
        const double c2 = 1.0 + z * z;
        const double c = std::sqrt(c2);
        const double a = asinh_guarded(z);
        const double r = nu[i] + t * a;
        total += -std::log(t) + std::log(s) + kHalfLog2Pi + 0.5 * std::log(c2) + 0.5 * r * r;
        if (gmu) {
            gmu[i] = -z / (s * c2) - r * t / (s * c);
            gsigma[i] = (1.0 - z * z / c2 - r * t * z / c) / s;
            gnu[i] = r;
            gtau[i] = -1.0 / t + r * a;
        }
    }
    return total;
}

double dot_scalar(const double* a, const double* b, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
    return s;
}

void axpy_scalar(double a, const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

double l2_dist_scalar(const double* a, const double* b, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return std::sqrt(s);
}

}  // namespace

const Ops& scalar_ops() {
    static const Ops ops{
        "scalar",         vexp_scalar,         vlog_scalar, softplus_scalar,
        logistic_loss_grad_scalar, jsu_nll_grad_scalar, dot_scalar,  axpy_scalar,
        l2_dist_scalar,
    };
    return ops;
}

}  // namespace ipsim::kernels
