#pragma once

#include <array>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "crankforge/cranks.hpp"
#include "crankforge/series.hpp"

namespace crankforge {

/// Exact Bernoulli numbers B_0 .. B_max via the recurrence
/// sum_{j=0}^{n} C(n+1, j) B_j = 0 with B_0 = 1.
class BernoulliCache {
  public:
    explicit BernoulliCache(unsigned long max_index) {
        values_.reserve(max_index + 1);
        values_.push_back(Rational(1));
        for (unsigned long n = 1; n <= max_index; ++n) {
            Rational acc(0);
            for (unsigned long j = 0; j < n; ++j) acc += Rational(binomial(n + 1, j)) * values_[j];
            Rational b = -acc / Rational(Integer(n + 1));
            b.canonicalize();
            values_.push_back(b);
        }
    }

    const Rational& value(unsigned long n) const { return values_.at(n); }
    const std::vector<Rational>& values() const { return values_; }

  private:
    std::vector<Rational> values_;
};

inline Rational bernoulli(unsigned long n) { return BernoulliCache(n).value(n); }

/// Eisenstein series of even weight w at argument q^d, normalized so that
/// E_w = 1 - (2w / B_w) Phi_{w-1}; this reproduces E_2 = 1 - 24 Phi_1,
/// E_4 = 1 + 240 Phi_3, E_6 = 1 - 504 Phi_5, E_8 = 1 + 480 Phi_7.
inline Series eisenstein(long weight, long dilation, long trunc_order) {
    if (weight < 2 || weight % 2 != 0) throw std::invalid_argument("weight must be even and >= 2");
    const Rational coeff = Rational(2 * weight) / bernoulli(static_cast<unsigned long>(weight));
    return Series::one(trunc_order) - phi(weight - 1, dilation, trunc_order) * coeff;
}

/// delta_q(E_2) = (E_2^2 - E_4) / 12, checked coefficient-wise through the
/// truncation order with both sides expanded independently.
inline bool verify_e2_derivative(long trunc_order) {
    const Series e2 = eisenstein(2, 1, trunc_order);
    const Series e4 = eisenstein(4, 1, trunc_order);
    return delta_q(e2) == (e2 * e2 - e4) * make_rational(1, 12);
}

/// 12 delta_q(f) - 2k E_2 f for f of weight 2k; lands in weight 2k + 2.
inline Series serre_derivative(const Series& f, long k) {
    const Series e2 = eisenstein(2, 1, f.order());
    return delta_q(f) * Rational(12) - e2 * f * Rational(2 * k);
}

/// Monomial in the generators E_2(q^d), E_4(q^d), E_6(q^d) and optionally
/// Phi_{2i-1}(q^d). Weight counts E_2 as 2, E_4 as 4, E_6 as 6 and
/// Phi_{2i-1} as 2i.
struct QMonomial {
    // dilation -> exponents of (E2, E4, E6) at q^dilation
    std::map<long, std::array<unsigned, 3>> eis;
    // (l, dilation) -> exponent of Phi_l(q^dilation), l odd
    std::map<std::pair<long, long>, unsigned> phis;

    long weight() const {
        long w = 0;
        for (const auto& [d, e] : eis) w += 2 * e[0] + 4 * e[1] + 6 * e[2];
        for (const auto& [key, e] : phis) w += (key.first + 1) * e;
        return w;
    }

    bool is_one() const { return eis.empty() && phis.empty(); }

    Series expand(long trunc_order) const {
        Series out = Series::one(trunc_order);
        for (const auto& [d, e] : eis)
            for (int g = 0; g < 3; ++g)
                for (unsigned i = 0; i < e[g]; ++i) out = out * eisenstein(2 * (g + 1), d, trunc_order);
        for (const auto& [key, e] : phis)
            for (unsigned i = 0; i < e; ++i) out = out * phi(key.first, key.second, trunc_order);
        return out;
    }

    std::string name() const {
        if (is_one()) return "1";
        std::string out;
        auto append = [&out](const std::string& base, long d, unsigned e) {
            if (e == 0) return;
            if (!out.empty()) out += "*";
            out += base;
            out += d == 1 ? "(q)" : "(q^" + std::to_string(d) + ")";
            if (e > 1) out += "^" + std::to_string(e);
        };
        for (const auto& [d, e] : eis)
            for (int g = 0; g < 3; ++g) append("E" + std::to_string(2 * (g + 1)), d, e[g]);
        for (const auto& [key, e] : phis) append("Phi" + std::to_string(key.first), key.second, e);
        return out;
    }

    auto tie() const { return std::tie(eis, phis); }
    bool operator==(const QMonomial& o) const { return tie() == o.tie(); }
    bool operator<(const QMonomial& o) const {
        const long wl = weight(), wr = o.weight();
        if (wl != wr) return wl < wr;
        return tie() < o.tie();
    }
};

inline std::vector<long> divisors(long n) {
    std::vector<long> out;
    for (long d = 1; d <= n; ++d)
        if (n % d == 0) out.push_back(d);
    return out;
}

namespace detail {

inline void extend_monomials(std::vector<QMonomial>& acc, const std::vector<long>& divs,
                             std::size_t idx, long budget, QMonomial cur) {
    if (idx == divs.size()) {
        acc.push_back(std::move(cur));
        return;
    }
    const long d = divs[idx];
    for (unsigned a = 0; 2 * static_cast<long>(a) <= budget; ++a)
        for (unsigned b = 0; 2 * static_cast<long>(a) + 4 * static_cast<long>(b) <= budget; ++b)
            for (unsigned c = 0;
                 2 * static_cast<long>(a) + 4 * static_cast<long>(b) + 6 * static_cast<long>(c) <= budget;
                 ++c) {
                QMonomial next = cur;
                if (a + b + c > 0) next.eis[d] = {a, b, c};
                extend_monomials(acc, divs, idx + 1,
                                 budget - 2 * a - 4 * b - 6 * c, std::move(next));
            }
}

}  // namespace detail

/// Spanning monomials of weight at most 2l over the divisors of the level:
/// all products prod_{d | level} E2(q^d)^a E4(q^d)^b E6(q^d)^c, optionally
/// augmented with the single generators Phi_{2i-1}(q^d) (affine in E_{2i}, so
/// the span is unchanged). Deterministic order: weight, then exponents.
inline std::vector<QMonomial> spanning_set(long level, long l, bool include_phi = false) {
    if (level < 1 || l < 0) throw std::invalid_argument("bad spanning-set parameters");
    const std::vector<long> divs = divisors(level);
    std::vector<QMonomial> out;
    detail::extend_monomials(out, divs, 0, 2 * l, QMonomial{});
    if (include_phi)
        for (long i = 1; i <= l; ++i)
            for (long d : divs) {
                QMonomial m;
                m.phis[{2 * i - 1, d}] = 1;
                out.push_back(std::move(m));
            }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// Exact rational coordinates expressing a target series in a declared
/// spanning set, together with the order through which the combination was
/// matched.
struct MembershipCertificate {
    std::string target_description;
    std::vector<QMonomial> span;
    std::vector<Rational> coordinates;
    long residual_order = 0;

    /// Every Eisenstein monomial has constant term 1, every monomial with a
    /// Phi factor has constant term 0.
    Rational constant_term() const {
        Rational acc(0);
        for (std::size_t i = 0; i < span.size(); ++i)
            if (span[i].phis.empty()) acc += coordinates[i];
        return acc;
    }

    Series combination(long trunc_order) const {
        Series combo(trunc_order);
        for (std::size_t i = 0; i < span.size(); ++i) {
            if (coordinates[i] == 0) continue;
            combo = combo + span[i].expand(trunc_order) * coordinates[i];
        }
        return combo;
    }

    /// Recombines the span by direct expansion and compares against the
    /// target; independent of the solver.
    std::optional<long> first_mismatch_with(const Series& target, long trunc_order) const {
        return first_mismatch(combination(trunc_order), target);
    }
};

struct SolveFailure {
    long first_failing_order;
};

using SolveResult = std::variant<MembershipCertificate, SolveFailure>;

namespace detail {

// One reduced row of the incremental elimination state.
struct PivotRow {
    std::size_t pivot_col;
    std::vector<Rational> coeffs;
    Rational rhs;
};

}  // namespace detail

/// Finds exact rational coordinates such that sum_i x_i span_i matches the
/// target coefficient-wise through q^trunc, by incremental Gaussian
/// elimination over the rows q^0, q^1, ... in order. The constant-term row is
/// processed first, so a certificate automatically satisfies any vanishing
/// constant-term constraint carried by the target. If some prefix of rows is
/// consistent but row r is not, the result is SolveFailure{r}: no coordinate
/// choice matching all earlier orders can match order r.
inline SolveResult solve_in_span(const Series& target, const std::vector<QMonomial>& span,
                                 long trunc_order, long margin = 50) {
    const long dim = static_cast<long>(span.size());
    if (trunc_order > target.order()) throw std::invalid_argument("target series is too short");
    if (trunc_order < dim + margin) throw InsufficientTruncation(trunc_order, dim + margin);

    std::vector<Series> expanded;
    expanded.reserve(span.size());
    for (const QMonomial& m : span) expanded.push_back(m.expand(trunc_order));

    std::vector<detail::PivotRow> pivots;
    for (long r = 0; r <= trunc_order; ++r) {
        std::vector<Rational> row(span.size());
        for (std::size_t j = 0; j < span.size(); ++j) row[j] = expanded[j][r];
        Rational rhs = target[r];
        // Reduce against existing pivots.
        for (const auto& p : pivots) {
            const Rational factor = row[p.pivot_col];
            if (factor == 0) continue;
            for (std::size_t j = 0; j < row.size(); ++j) row[j] -= factor * p.coeffs[j];
            rhs -= factor * p.rhs;
        }
        std::size_t col = 0;
        while (col < row.size() && row[col] == 0) ++col;
        if (col == row.size()) {
            if (rhs != 0) return SolveFailure{r};
            continue;  // redundant row
        }
        const Rational inv = Rational(1) / row[col];
        for (std::size_t j = 0; j < row.size(); ++j) row[j] *= inv;
        rhs *= inv;
        // Keep the state fully reduced (Gauss-Jordan).
        for (auto& p : pivots) {
            const Rational factor = p.coeffs[col];
            if (factor == 0) continue;
            for (std::size_t j = 0; j < row.size(); ++j) p.coeffs[j] -= factor * row[j];
            p.rhs -= factor * rhs;
        }
        pivots.push_back({col, std::move(row), std::move(rhs)});
    }

    // Free coordinates are zero; pivot coordinates read off directly.
    std::vector<Rational> coords(span.size(), Rational(0));
    for (const auto& p : pivots) coords[p.pivot_col] = p.rhs;
    MembershipCertificate cert{"", span, std::move(coords), trunc_order};
    return cert;
}

/// Exponent tuples (a_1, ..., a_j) with a_1 + 2 a_2 + ... + j a_j = j, in
/// descending lexicographic order, and the matching Phi-monomials at q^k:
/// Phi_1^{a_1}(q^k) Phi_3^{a_2}(q^k) ... Phi_{2j-1}^{a_j}(q^k).
inline std::vector<std::vector<unsigned>> moment_rep_exponents(long j) {
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> cur(static_cast<std::size_t>(j));
    auto rec = [&](auto&& self, long idx, long remaining) -> void {
        if (idx == j) {
            if (remaining == 0) out.push_back(cur);
            return;
        }
        const long i = idx + 1;
        for (long a = remaining / i; a >= 0; --a) {
            cur[static_cast<std::size_t>(idx)] = static_cast<unsigned>(a);
            self(self, idx + 1, remaining - a * i);
        }
        cur[static_cast<std::size_t>(idx)] = 0;
    };
    rec(rec, 0, j);
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end()); });
    return out;
}

inline QMonomial phi_monomial(const std::vector<unsigned>& exponents, long k) {
    QMonomial m;
    for (std::size_t i = 0; i < exponents.size(); ++i)
        if (exponents[i] > 0) m.phis[{2 * static_cast<long>(i) + 1, k}] = exponents[i];
    return m;
}

/// Integer coefficients alpha expressing the 2j-th residual crank moment
/// series as 2 Pbar(q) sum alpha * Phi-monomials(q^k).
struct Representation {
    long k;
    long j;
    std::vector<std::pair<std::vector<unsigned>, Integer>> alpha;
    long residual_order;
};

inline Representation find_representation(long k, long j, long trunc_order) {
    if (k < 1 || j < 1) throw std::invalid_argument("k and j must be positive");
    const std::vector<std::vector<unsigned>> exps = moment_rep_exponents(j);
    std::vector<QMonomial> span;
    span.reserve(exps.size());
    for (const auto& e : exps) span.push_back(phi_monomial(e, k));

    const Series moment = moment_series(k, 2 * j, trunc_order).series;
    const Series target = moment * overpartition_gf(trunc_order).inverse() * make_rational(1, 2);
    SolveResult result = solve_in_span(target, span, trunc_order);
    if (std::holds_alternative<SolveFailure>(result))
        throw NoSolutionWithinTruncation(std::get<SolveFailure>(result).first_failing_order);

    const MembershipCertificate& cert = std::get<MembershipCertificate>(result);
    Representation rep{k, j, {}, cert.residual_order};
    for (std::size_t i = 0; i < exps.size(); ++i) {
        if (!is_integer(cert.coordinates[i]))
            throw NonIntegerCoefficients("coefficient " + rational_to_string(cert.coordinates[i]) +
                                         " for " + span[i].name() + " is not an integer");
        rep.alpha.emplace_back(exps[i], cert.coordinates[i].get_num());
    }
    return rep;
}

/// Certificate that delta_q^m of the 2j-th residual crank moment series,
/// divided by Pbar, lies in the spanning set of weight <= 2l at level
/// lcm(2, k), with vanishing constant term.
inline MembershipCertificate certify_membership(long k, long j, long m, long l, long trunc_order,
                                                bool include_phi = false) {
    if (k < 1 || j < 1 || m < 0 || l < 1) throw std::invalid_argument("bad certificate parameters");
    if (j + m > l) throw std::invalid_argument("certificate requires j + m <= l");
    const long level = std::lcm(2L, k);

    const Series moment = moment_series(k, 2 * j, trunc_order).series;
    const Series target =
        delta_q_pow(moment, static_cast<unsigned long>(m)) * overpartition_gf(trunc_order).inverse();
    if (target[0] != 0)
        throw NoSolutionWithinTruncation(0);  // not in the zero-constant-term space

    SolveResult result = solve_in_span(target, spanning_set(level, l, include_phi), trunc_order);
    if (std::holds_alternative<SolveFailure>(result))
        throw NoSolutionWithinTruncation(std::get<SolveFailure>(result).first_failing_order);
    MembershipCertificate cert = std::get<MembershipCertificate>(std::move(result));
    cert.target_description = "delta_q^" + std::to_string(m) + "(moment " + std::to_string(2 * j) +
                              " of residual crank " + std::to_string(k) + ") / Pbar";
    return cert;
}

}  // namespace crankforge
