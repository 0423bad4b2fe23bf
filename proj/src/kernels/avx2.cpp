// AVX2/FMA kernel variants. Compiled with -mavx2 -mfma in its own TU;
// only reached through the runtime dispatcher when the CPU supports it.
// exp/log are computed with Cephes-style argument reduction + minimax-grade
// polynomials (~2 ulp), which the equivalence tests bound against the
// scalar reference.

#include "ipsim/kernels/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)

#include <immintrin.h>

#include <cmath>
#include <limits>

namespace ipsim::kernels {

namespace {

constexpr double kHalfLog2Pi = 0.91893853320467274178;
constexpr double kLn2 = 0.6931471805599453094;

inline __m256d set1(double v) { return _mm256_set1_pd(v); }

// 2^n for integral-valued n in [-1021, 1023] per lane (normal range only).
inline __m256d pow2_int(__m256d n) {
    const __m256d biased = _mm256_add_pd(n, set1(1023.0));
    // Integer extraction trick: adding 2^52 leaves the integer in the low
    // mantissa bits.
    const __m256i bits = _mm256_castpd_si256(_mm256_add_pd(biased, set1(0x1.0p52)));
    const __m256i expo = _mm256_slli_epi64(_mm256_and_si256(bits, _mm256_set1_epi64x(0x7FF)), 52);
    return _mm256_castsi256_pd(expo);
}

inline __m256d exp4(__m256d x) {
    const __m256d log2e = set1(1.4426950408889634074);
    const __m256d ln2_hi = set1(6.93147180369123816490e-01);
    const __m256d ln2_lo = set1(1.90821492927058770002e-10);
    x = _mm256_min_pd(x, set1(709.5));
    x = _mm256_max_pd(x, set1(-745.0));
    const __m256d n =
        _mm256_round_pd(_mm256_mul_pd(x, log2e), _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
    __m256d r = _mm256_fnmadd_pd(n, ln2_hi, x);
    r = _mm256_fnmadd_pd(n, ln2_lo, r);
    // exp(r) on |r| <= ln2/2 as a degree-13 Taylor polynomial (truncation
    // below 1e-17 relative).
    static constexpr double c[14] = {
        1.0 / 6227020800.0, 1.0 / 479001600.0, 1.0 / 39916800.0, 1.0 / 3628800.0,
        1.0 / 362880.0,     1.0 / 40320.0,     1.0 / 5040.0,     1.0 / 720.0,
        1.0 / 120.0,        1.0 / 24.0,        1.0 / 6.0,        0.5,
        1.0,                1.0};
    __m256d p = set1(c[0]);
    for (int k = 1; k < 14; ++k) p = _mm256_fmadd_pd(p, r, set1(c[k]));
    // Two-step 2^n scaling keeps each factor in the normal range even for
    // results that overflow or denormalize.
    const __m256d n1 = _mm256_round_pd(_mm256_mul_pd(n, set1(0.5)),
                                       _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
    const __m256d n2 = _mm256_sub_pd(n, n1);
    return _mm256_mul_pd(_mm256_mul_pd(p, pow2_int(n1)), pow2_int(n2));
}

inline __m256d log4(__m256d x) {
    const __m256i mantissa_mask = _mm256_set1_epi64x(0x000FFFFFFFFFFFFFLL);
    const __m256i one_bits = _mm256_set1_epi64x(0x3FF0000000000000LL);
    const __m256i magic = _mm256_set1_epi64x(0x4330000000000000LL);  // 2^52

    // Denormal inputs are rescaled by 2^54 and the exponent corrected.
    const __m256d tiny = _mm256_cmp_pd(x, set1(2.2250738585072014e-308), _CMP_LT_OQ);
    const __m256d xs = _mm256_blendv_pd(x, _mm256_mul_pd(x, set1(0x1.0p54)), tiny);

    const __m256i bits = _mm256_castpd_si256(xs);
    const __m256i expo_i = _mm256_srli_epi64(bits, 52);  // biased exponent, [0, 2047]
    const __m256d expo_d = _mm256_sub_pd(
        _mm256_castsi256_pd(_mm256_or_si256(expo_i, magic)), set1(0x1.0p52));
    __m256d e = _mm256_sub_pd(expo_d, set1(1023.0));
    e = _mm256_sub_pd(e, _mm256_and_pd(tiny, set1(54.0)));

    __m256d m = _mm256_castsi256_pd(_mm256_or_si256(_mm256_and_si256(bits, mantissa_mask), one_bits));
    const __m256d big_m = _mm256_cmp_pd(m, set1(1.4142135623730951), _CMP_GT_OQ);
    m = _mm256_blendv_pd(m, _mm256_mul_pd(m, set1(0.5)), big_m);
    e = _mm256_add_pd(e, _mm256_and_pd(big_m, set1(1.0)));

    // log m = 2 atanh((m-1)/(m+1)), |s| <= sqrt(2)-1 over sqrt(2)+1 ~ 0.1716.
    const __m256d s =
        _mm256_div_pd(_mm256_sub_pd(m, set1(1.0)), _mm256_add_pd(m, set1(1.0)));
    const __m256d s2 = _mm256_mul_pd(s, s);
    static constexpr double c[8] = {1.0 / 17, 1.0 / 15, 1.0 / 13, 1.0 / 11,
                                    1.0 / 9,  1.0 / 7,  1.0 / 5,  1.0 / 3};
    __m256d q = set1(c[0]);
    for (int k = 1; k < 8; ++k) q = _mm256_fmadd_pd(q, s2, set1(c[k]));
    const double ln2_hi = 6.93147180369123816490e-01;
    const double ln2_lo = 1.90821492927058770002e-10;
    const __m256d two_s = _mm256_add_pd(s, s);
    __m256d logm = _mm256_fmadd_pd(_mm256_mul_pd(two_s, s2), q, two_s);
    __m256d out = _mm256_fmadd_pd(e, set1(ln2_lo), logm);
    out = _mm256_fmadd_pd(e, set1(ln2_hi), out);

    // Edge cases: x<0 -> NaN, x==0 -> -inf, x==inf -> inf, NaN -> NaN.
    const __m256d zero = _mm256_setzero_pd();
    const __m256d nan = set1(std::numeric_limits<double>::quiet_NaN());
    const __m256d inf = set1(std::numeric_limits<double>::infinity());
    out = _mm256_blendv_pd(out, nan, _mm256_cmp_pd(x, zero, _CMP_LT_OQ));
    out = _mm256_blendv_pd(out, _mm256_sub_pd(zero, inf), _mm256_cmp_pd(x, zero, _CMP_EQ_OQ));
    out = _mm256_blendv_pd(out, inf, _mm256_cmp_pd(x, inf, _CMP_EQ_OQ));
    out = _mm256_blendv_pd(out, nan, _mm256_cmp_pd(x, x, _CMP_UNORD_Q));
    return out;
}

void vexp_avx2(const double* x, double* out, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) _mm256_storeu_pd(out + i, exp4(_mm256_loadu_pd(x + i)));
    for (; i < n; ++i) out[i] = std::exp(x[i]);
}

void vlog_avx2(const double* x, double* out, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) _mm256_storeu_pd(out + i, log4(_mm256_loadu_pd(x + i)));
    for (; i < n; ++i) out[i] = std::log(x[i]);
}

// max(u,0) + log1p(exp(-|u|)) and sigmoid(u), shared by the next two kernels.
inline void softplus_sigmoid4(__m256d u, __m256d& sp, __m256d& sig) {
    const __m256d zero = _mm256_setzero_pd();
    const __m256d one = set1(1.0);
    const __m256d absu = _mm256_andnot_pd(set1(-0.0), u);
    const __m256d e = exp4(_mm256_sub_pd(zero, absu));  // exp(-|u|) in (0,1]
    const __m256d denom = _mm256_add_pd(one, e);
    sp = _mm256_add_pd(_mm256_max_pd(u, zero), log4(denom));
    const __m256d pos = _mm256_cmp_pd(u, zero, _CMP_GE_OQ);
    sig = _mm256_blendv_pd(_mm256_div_pd(e, denom), _mm256_div_pd(one, denom), pos);
}

void softplus_avx2(const double* eta, double* theta, double* dtheta, std::size_t n,
                   double eps, double gamma) {
    const __m256d g = set1(gamma);
    const __m256d ev = set1(eps);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d sp, sig;
        softplus_sigmoid4(_mm256_mul_pd(g, _mm256_loadu_pd(eta + i)), sp, sig);
        _mm256_storeu_pd(theta + i, _mm256_add_pd(ev, sp));
        if (dtheta) _mm256_storeu_pd(dtheta + i, _mm256_mul_pd(g, sig));
    }
    for (; i < n; ++i) {
        const double u = gamma * eta[i];
        const double sp = u > 0.0 ? u + std::log1p(std::exp(-u)) : std::log1p(std::exp(u));
        theta[i] = eps + sp;
        if (dtheta) {
            const double e = std::exp(-std::fabs(u));
            dtheta[i] = gamma * (u >= 0.0 ? 1.0 / (1.0 + e) : e / (1.0 + e));
        }
    }
}

double logistic_loss_grad_avx2(const double* eta, const double* y, double* grad,
                               std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d u = _mm256_loadu_pd(eta + i);
        const __m256d yi = _mm256_loadu_pd(y + i);
        __m256d sp, sig;
        softplus_sigmoid4(u, sp, sig);
        acc = _mm256_add_pd(acc, _mm256_fnmadd_pd(yi, u, sp));
        _mm256_storeu_pd(grad + i, _mm256_sub_pd(sig, yi));
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    double loss = lanes[0] + lanes[1] + lanes[2] + lanes[3];
    for (; i < n; ++i) {
        const double u = eta[i];
        const double sp = u > 0.0 ? u + std::log1p(std::exp(-u)) : std::log1p(std::exp(u));
        loss += sp - y[i] * u;
        const double e = std::exp(-std::fabs(u));
        grad[i] = (u >= 0.0 ? 1.0 / (1.0 + e) : e / (1.0 + e)) - y[i];
    }
    return loss;
}

double jsu_nll_grad_avx2(const double* y, const double* mu, const double* sigma,
                         const double* nu, const double* tau, double* gmu, double* gsigma,
                         double* gnu, double* gtau, std::size_t n) {
    const __m256d one = set1(1.0);
    const __m256d signbit = set1(-0.0);
    const __m256d big_thresh = set1(1e150);
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d s = _mm256_loadu_pd(sigma + i);
        const __m256d t = _mm256_loadu_pd(tau + i);
        const __m256d z =
            _mm256_div_pd(_mm256_sub_pd(_mm256_loadu_pd(y + i), _mm256_loadu_pd(mu + i)), s);
        const __m256d az = _mm256_andnot_pd(signbit, z);
        const __m256d zsign = _mm256_and_pd(signbit, z);
        const __m256d big = _mm256_cmp_pd(az, big_thresh, _CMP_GT_OQ);
        const __m256d c2 = _mm256_fmadd_pd(z, z, one);
        const __m256d c = _mm256_sqrt_pd(c2);
        // asinh(|z|) = log(|z| + sqrt(1+z^2)); huge |z| avoids the overflowed
        // sqrt via log(|z|) + ln2.
        const __m256d arg = _mm256_blendv_pd(_mm256_add_pd(az, c), az, big);
        __m256d a = _mm256_add_pd(log4(arg), _mm256_and_pd(big, set1(kLn2)));
        a = _mm256_xor_pd(a, zsign);
        const __m256d r = _mm256_fmadd_pd(t, a, _mm256_loadu_pd(nu + i));
        // nll = log(s*c/t) + halfLog2Pi + r^2/2, folding the three logs into one.
        const __m256d c_log = _mm256_blendv_pd(c, az, big);
        const __m256d logterm = log4(_mm256_div_pd(_mm256_mul_pd(s, c_log), t));
        __m256d nll = _mm256_fmadd_pd(_mm256_mul_pd(r, r), set1(0.5),
                                      _mm256_add_pd(logterm, set1(kHalfLog2Pi)));
        acc = _mm256_add_pd(acc, nll);
        if (gmu) {
            const __m256d inv_s = _mm256_div_pd(one, s);
            // z/c2 and 1/c underflow to 0 for huge |z| on their own, matching
            // the limit; z/c and z^2/c2 need explicit blends to their limits.
            const __m256d z_c2 = _mm256_div_pd(z, c2);
            const __m256d z_c =
                _mm256_blendv_pd(_mm256_div_pd(z, c), _mm256_xor_pd(one, zsign), big);
            const __m256d zz_c2 = _mm256_blendv_pd(_mm256_mul_pd(z, z_c2), one, big);
            const __m256d rt = _mm256_mul_pd(r, t);
            const __m256d inv_c = _mm256_div_pd(one, c);
            _mm256_storeu_pd(gmu + i,
                             _mm256_mul_pd(inv_s, _mm256_sub_pd(_mm256_setzero_pd(),
                                                                _mm256_fmadd_pd(rt, inv_c, z_c2))));
            _mm256_storeu_pd(gsigma + i,
                             _mm256_mul_pd(inv_s, _mm256_sub_pd(_mm256_sub_pd(one, zz_c2),
                                                                _mm256_mul_pd(rt, z_c))));
            _mm256_storeu_pd(gnu + i, r);
            _mm256_storeu_pd(gtau + i,
                             _mm256_fmadd_pd(r, a, _mm256_sub_pd(_mm256_setzero_pd(),
                                                                 _mm256_div_pd(one, t))));
        }
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    double total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
    for (; i < n; ++i) {
        const double s = sigma[i];
        const double t = tau[i];
        const double z = (y[i] - mu[i]) / s;
        const double c2 = 1.0 + z * z;
        const double c = std::sqrt(c2);
        const double az = std::fabs(z);
        double a = az > 1e150 ? std::log(az) + kLn2 : std::log(az + std::sqrt(az * az + 1.0));
        if (z < 0.0) a = -a;
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

double dot_avx2(const double* a, const double* b, std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
        acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4), acc1);
    }
    for (; i + 4 <= n; i += 4) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, _mm256_add_pd(acc0, acc1));
    double s = lanes[0] + lanes[1] + lanes[2] + lanes[3];
    for (; i < n; ++i) s += a[i] * b[i];
    return s;
}

void axpy_avx2(double a, const double* x, double* y, std::size_t n) {
    const __m256d av = set1(a);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        _mm256_storeu_pd(y + i, _mm256_fmadd_pd(av, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
    }
    for (; i < n; ++i) y[i] += a * x[i];
}

double l2_dist_avx2(const double* a, const double* b, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
        acc = _mm256_fmadd_pd(d, d, acc);
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    double s = lanes[0] + lanes[1] + lanes[2] + lanes[3];
    for (; i < n; ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return std::sqrt(s);
}

}  // namespace

const Ops& avx2_ops() {
    static const Ops ops{
        "avx2",         vexp_avx2,         vlog_avx2, softplus_avx2,
        logistic_loss_grad_avx2, jsu_nll_grad_avx2, dot_avx2,  axpy_avx2,
        l2_dist_avx2,
    };
    return ops;
}

}  // namespace ipsim::kernels

#else  // non-x86: avx2_ops() must never be selected

namespace ipsim::kernels {
const Ops& avx2_ops() { return scalar_ops(); }
}  // namespace ipsim::kernels

#endif
