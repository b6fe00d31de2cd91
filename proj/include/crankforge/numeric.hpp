#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "crankforge/quasimod.hpp"
#include "crankforge/series.hpp"

namespace crankforge {

using Complex = std::complex<double>;

/// Point of the upper half-plane; q = exp(2 pi i tau) has |q| < 1.
struct HalfPlanePoint {
    Complex tau;

    explicit HalfPlanePoint(Complex t) : tau(t) {
        if (!(t.imag() > 0)) throw std::invalid_argument("tau must have positive imaginary part");
    }

    Complex nome() const {
        return std::exp(Complex(0, 2 * std::numbers::pi) * tau);
    }
};

/// Integral matrix of determinant 1 acting by Moebius transformation.
struct GammaElement {
    long a, b, c, d;

    GammaElement(long a_, long b_, long c_, long d_) : a(a_), b(b_), c(c_), d(d_) {
        if (a * d - b * c != 1) throw std::invalid_argument("matrix determinant must be 1");
    }

    bool in_gamma0(long level) const { return c % level == 0; }

    Complex apply(Complex tau) const {
        return (Complex(static_cast<double>(a)) * tau + Complex(static_cast<double>(b))) /
               automorphy(tau);
    }

    /// c tau + d.
    Complex automorphy(Complex tau) const {
        return Complex(static_cast<double>(c)) * tau + Complex(static_cast<double>(d));
    }
};

/// Evaluates the truncated series at q = exp(2 pi i tau).
///
/// Guard: the geometric tail bound |q|^{N+1} / (1 - |q|) must stay below
/// 1e-12 times the magnitude of the computed value (at least 1).
inline Complex eval_series(const Series& s, const HalfPlanePoint& point) {
    const Complex q = point.nome();
    const double absq = std::abs(q);
    Complex acc(0, 0);
    for (long n = s.order(); n >= 0; --n) acc = acc * q + Complex(s[n].get_d());
    const double tail = std::pow(absq, static_cast<double>(s.order() + 1)) / (1.0 - absq);
    const double scale = std::max(1.0, std::abs(acc));
    if (!(tail < 1e-12 * scale)) throw TailBoundExceeded(tail);
    return acc;
}

struct TransformReport {
    double defect = 0;
    double tolerance = 0;
    bool pass = false;
};

/// E_2(-1/tau) = tau^2 E_2(tau) + 6 tau / (pi i), checked numerically.
inline TransformReport check_e2_anomaly(const HalfPlanePoint& point, long trunc_order, double tol,
                                        bool drop_anomaly_term = false) {
    const Series e2 = eisenstein(2, 1, trunc_order);
    const Complex tau = point.tau;
    const Complex lhs = eval_series(e2, HalfPlanePoint(-1.0 / tau));
    Complex rhs = tau * tau * eval_series(e2, point);
    if (!drop_anomaly_term) rhs += 6.0 * tau / (Complex(0, 1) * std::numbers::pi);
    const double defect = std::abs(lhs - rhs);
    return {defect, tol, defect < tol};
}

/// |f(gamma tau) - (c tau + d)^weight f(tau)| < tol * |f(tau)| for a form of
/// the given transformation weight and level.
inline TransformReport check_modularity(const Series& f, long weight, long level,
                                        const GammaElement& gamma, const HalfPlanePoint& point,
                                        double tol) {
    if (!gamma.in_gamma0(level)) throw LevelViolation(gamma.c, level);
    const Complex at_tau = eval_series(f, point);
    const Complex at_gamma_tau = eval_series(f, HalfPlanePoint(gamma.apply(point.tau)));
    const Complex factor = std::pow(gamma.automorphy(point.tau), static_cast<double>(weight));
    const double defect = std::abs(at_gamma_tau - factor * at_tau);
    return {defect, tol, defect < tol * std::abs(at_tau)};
}

/// Deterministic sampler for (gamma, tau) check points: entries bounded by
/// 10, tau with Im tau in [0.8, 2], |Re tau| <= 1, and Im(gamma tau) >= 0.2;
/// draws are rejected until the guards hold.
class TransformSampler {
  public:
    explicit TransformSampler(unsigned long seed) : rng_(seed) {}

    GammaElement sample_gamma(long level) {
        std::uniform_int_distribution<long> entry(-10, 10);
        for (;;) {
            const long a = entry(rng_), b = entry(rng_), c = entry(rng_), d = entry(rng_);
            if (a * d - b * c != 1) continue;
            if (c % level != 0) continue;
            return GammaElement(a, b, c, d);
        }
    }

    std::pair<GammaElement, HalfPlanePoint> sample_check_point(long level) {
        std::uniform_real_distribution<double> re(-1.0, 1.0);
        std::uniform_real_distribution<double> im(0.8, 2.0);
        for (;;) {
            const GammaElement gamma = sample_gamma(level);
            const Complex tau(re(rng_), im(rng_));
            const Complex image = gamma.apply(tau);
            if (image.imag() < 0.2) continue;
            return {gamma, HalfPlanePoint(tau)};
        }
    }

    HalfPlanePoint sample_tau() {
        std::uniform_real_distribution<double> re(-1.0, 1.0);
        std::uniform_real_distribution<double> im(0.8, 2.0);
        return HalfPlanePoint(Complex(re(rng_), im(rng_)));
    }

  private:
    std::mt19937_64 rng_;
};

}  // namespace crankforge
