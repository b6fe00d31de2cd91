#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "crankforge/errors.hpp"
#include "crankforge/rational.hpp"

namespace crankforge {

/// Truncated formal power series in q with exact rational coefficients.
///
/// A Series knows its coefficients through q^N inclusive (N = trunc_order).
/// Arithmetic never extends knowledge: mixed-order operands truncate to the
/// shorter order, and equality compares only through the common order.
class Series {
  public:
    explicit Series(long trunc_order)
        : coeffs_(static_cast<std::size_t>(check_order(trunc_order)) + 1) {}

    explicit Series(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) throw std::invalid_argument("series needs a constant term");
    }

    static Series constant(const Rational& c, long trunc_order) {
        Series s(trunc_order);
        s.coeffs_[0] = c;
        return s;
    }

    static Series one(long trunc_order) { return constant(Rational(1), trunc_order); }

    /// c * q^power, zero if power exceeds the truncation order.
    static Series monomial(const Rational& c, long power, long trunc_order) {
        Series s(trunc_order);
        if (power < 0) throw std::invalid_argument("negative power");
        if (power <= trunc_order) s.coeffs_[static_cast<std::size_t>(power)] = c;
        return s;
    }

    long order() const { return static_cast<long>(coeffs_.size()) - 1; }

    const Rational& operator[](long n) const { return coeffs_.at(static_cast<std::size_t>(n)); }

    void set_coeff(long n, const Rational& v) { coeffs_.at(static_cast<std::size_t>(n)) = v; }

    const std::vector<Rational>& coeffs() const { return coeffs_; }

    /// Copy truncated to a (possibly shorter) order.
    Series truncated(long new_order) const {
        if (new_order > order()) throw std::invalid_argument("cannot extend a truncated series");
        Series out(new_order);
        std::copy(coeffs_.begin(), coeffs_.begin() + new_order + 1, out.coeffs_.begin());
        return out;
    }

    bool is_zero() const {
        for (const Rational& c : coeffs_)
            if (c != 0) return false;
        return true;
    }

    Series operator+(const Series& rhs) const {
        Series out(std::min(order(), rhs.order()));
        for (long n = 0; n <= out.order(); ++n)
            out.coeffs_[n] = coeffs_[n] + rhs.coeffs_[n];
        return out;
    }

    Series operator-(const Series& rhs) const {
        Series out(std::min(order(), rhs.order()));
        for (long n = 0; n <= out.order(); ++n)
            out.coeffs_[n] = coeffs_[n] - rhs.coeffs_[n];
        return out;
    }

    Series operator-() const {
        Series out(order());
        for (long n = 0; n <= order(); ++n) out.coeffs_[n] = -coeffs_[n];
        return out;
    }

    /// Cauchy product truncated at the shorter operand order.
    Series operator*(const Series& rhs) const {
        const long N = std::min(order(), rhs.order());
        Series out(N);
        for (long i = 0; i <= N; ++i) {
            if (coeffs_[i] == 0) continue;
            for (long j = 0; i + j <= N; ++j) {
                if (rhs.coeffs_[j] == 0) continue;
                out.coeffs_[i + j] += coeffs_[i] * rhs.coeffs_[j];
            }
        }
        return out;
    }

    Series operator*(const Rational& c) const {
        Series out(order());
        for (long n = 0; n <= order(); ++n) out.coeffs_[n] = coeffs_[n] * c;
        return out;
    }

    friend Series operator*(const Rational& c, const Series& s) { return s * c; }

    Series pow(unsigned long e) const {
        Series out = one(order());
        for (unsigned long i = 0; i < e; ++i) out = out * *this;
        return out;
    }

    /// Two-sided multiplicative inverse through the truncation order.
    ///
    /// If 1/(sum a_n q^n) = sum b_n q^n then b_0 = 1/a_0 and
    /// b_n = -(1/a_0) sum_{k=1}^{n} a_k b_{n-k}.
    Series inverse() const {
        if (coeffs_[0] == 0) throw ZeroConstantTerm();
        Series out(order());
        const Rational inv0 = Rational(1) / coeffs_[0];
        out.coeffs_[0] = inv0;
        for (long n = 1; n <= order(); ++n) {
            Rational acc(0);
            for (long k = 1; k <= n; ++k) acc += coeffs_[k] * out.coeffs_[n - k];
            out.coeffs_[n] = -inv0 * acc;
        }
        return out;
    }

    /// Coefficient-wise equality through the common truncation order.
    bool operator==(const Series& rhs) const {
        const long N = std::min(order(), rhs.order());
        for (long n = 0; n <= N; ++n)
            if (coeffs_[n] != rhs.coeffs_[n]) return false;
        return true;
    }

    bool operator!=(const Series& rhs) const { return !(*this == rhs); }

    /// In-place multiply by the binomial (1 - c q^m), m >= 1.
    void mul_binomial(const Rational& c, long m) {
        for (long n = order(); n >= m; --n) coeffs_[n] -= c * coeffs_[n - m];
    }

    /// In-place multiply by the geometric factor 1/(1 - q^m), m >= 1.
    void mul_geometric(long m) {
        for (long n = m; n <= order(); ++n) coeffs_[n] += coeffs_[n - m];
    }

  private:
    static long check_order(long n) {
        if (n < 0) throw std::invalid_argument("negative truncation order");
        return n;
    }

    std::vector<Rational> coeffs_;
};

/// First order at which the two series disagree (through the common order).
inline std::optional<long> first_mismatch(const Series& a, const Series& b) {
    const long N = std::min(a.order(), b.order());
    for (long n = 0; n <= N; ++n)
        if (a[n] != b[n]) return n;
    return std::nullopt;
}

/// q d/dq: multiplies the coefficient of q^n by n.
inline Series delta_q(const Series& a) {
    Series out(a.order());
    for (long n = 1; n <= a.order(); ++n) out.set_coeff(n, a[n] * n);
    return out;
}

inline Series delta_q_pow(Series a, unsigned long m) {
    for (unsigned long i = 0; i < m; ++i) a = delta_q(a);
    return a;
}

/// q -> q^d on expansions; the truncation order is unchanged, so coefficients
/// of q^{dn} with dn > N are dropped.
inline Series substitute_power(const Series& a, long d) {
    if (d < 1) throw std::invalid_argument("dilation must be positive");
    Series out(a.order());
    for (long n = 0; d * n <= a.order(); ++n) out.set_coeff(d * n, a[n]);
    return out;
}

/// One factor (sign * q^shift ; q^modulus)_inf of a Pochhammer product,
/// i.e. prod_{i>=0} (1 - sign * q^{shift + i*modulus}).
struct PochhammerFactor {
    long shift = 1;
    int sign = +1;
};

/// Product of infinite q-Pochhammer factors sharing one modulus.
struct PochhammerSpec {
    std::vector<PochhammerFactor> factors;
    long modulus = 1;

    static PochhammerSpec single(long shift, int sign, long modulus) {
        return PochhammerSpec{{PochhammerFactor{shift, sign}}, modulus};
    }
};

/// Exact truncated expansion of a Pochhammer product. Factors whose constant
/// term would vanish (shift 0 with positive sign) are rejected: the product
/// would not be a unit power series.
inline Series pochhammer(const PochhammerSpec& spec, long trunc_order) {
    if (spec.modulus < 1) throw NonUnitProduct("modulus must be positive");
    Series out = Series::one(trunc_order);
    for (const PochhammerFactor& f : spec.factors) {
        if (f.shift < 0) throw NonUnitProduct("negative shift in Pochhammer factor");
        if (f.shift == 0 && f.sign > 0)
            throw NonUnitProduct("factor (q^0; q^d) has vanishing constant term");
        if (f.sign != 1 && f.sign != -1) throw NonUnitProduct("factor sign must be +1 or -1");
        for (long m = f.shift; m <= trunc_order; m += spec.modulus) {
            if (m == 0) {
                // (1 - (-1)) = 2: a constant unit factor.
                out = out * Rational(2);
                continue;
            }
            out.mul_binomial(Rational(f.sign), m);
        }
    }
    return out;
}

/// (q^d; q^d)_inf.
inline Series euler_function(long d, long trunc_order) {
    return pochhammer(PochhammerSpec::single(d, +1, d), trunc_order);
}

/// Generating function for partitions, 1/(q;q)_inf, built by iterated
/// geometric factors.
inline Series partition_gf(long trunc_order) {
    Series out = Series::one(trunc_order);
    for (long m = 1; m <= trunc_order; ++m) out.mul_geometric(m);
    return out;
}

/// Generating function for overpartitions, (-q;q)_inf / (q;q)_inf.
inline Series overpartition_gf(long trunc_order) {
    return pochhammer(PochhammerSpec::single(1, -1, 1), trunc_order) * partition_gf(trunc_order);
}

/// Divisor-power sum series at argument q^d: coefficient of q^{dn} is
/// sigma_l(n) = sum_{e | n} e^l.
inline Series phi(long l, long d, long trunc_order) {
    if (l < 1 || l % 2 == 0) throw std::invalid_argument("phi requires odd l >= 1");
    if (d < 1) throw std::invalid_argument("dilation must be positive");
    Series out(trunc_order);
    const long bound = trunc_order / d;
    std::vector<Integer> sigma(static_cast<std::size_t>(bound) + 1);
    for (long e = 1; e <= bound; ++e) {
        const Integer pe = int_pow(Integer(e), static_cast<unsigned long>(l));
        for (long n = e; n <= bound; n += e) sigma[static_cast<std::size_t>(n)] += pe;
    }
    for (long n = 1; n <= bound; ++n) out.set_coeff(d * n, Rational(sigma[static_cast<std::size_t>(n)]));
    return out;
}

}  // namespace crankforge
