#pragma once

#include <algorithm>
#include <vector>

#include "crankforge/partitions.hpp"
#include "crankforge/series.hpp"

namespace crankforge {

/// Laurent polynomial in z with integer coefficients on a contiguous support.
struct LaurentRow {
    long min_m = 0;
    std::vector<Integer> c;

    long max_m() const { return min_m + static_cast<long>(c.size()) - 1; }

    bool empty() const { return c.empty(); }

    Integer coeff(long m) const {
        if (c.empty() || m < min_m || m > max_m()) return Integer(0);
        return c[static_cast<std::size_t>(m - min_m)];
    }

    void ensure_range(long lo, long hi) {
        if (c.empty()) {
            min_m = lo;
            c.resize(static_cast<std::size_t>(hi - lo) + 1);
            return;
        }
        if (lo < min_m) {
            std::vector<Integer> grown(static_cast<std::size_t>(min_m - lo));
            grown.insert(grown.end(), std::make_move_iterator(c.begin()),
                         std::make_move_iterator(c.end()));
            c = std::move(grown);
            min_m = lo;
        }
        if (hi > max_m()) c.resize(static_cast<std::size_t>(hi - min_m) + 1);
    }

    /// this += scale * z^{z_offset} * src.
    void add_scaled(const LaurentRow& src, long z_offset, const Integer& scale) {
        if (src.empty() || scale == 0) return;
        const long lo = src.min_m + z_offset, hi = src.max_m() + z_offset;
        ensure_range(lo, hi);
        for (std::size_t i = 0; i < src.c.size(); ++i) {
            Integer& dst = c[static_cast<std::size_t>(lo - min_m) + i];
            mpz_addmul(dst.get_mpz_t(), scale.get_mpz_t(), src.c[i].get_mpz_t());
        }
    }

    void trim() {
        std::size_t lead = 0;
        while (lead < c.size() && c[lead] == 0) ++lead;
        std::size_t tail = c.size();
        while (tail > lead && c[tail - 1] == 0) --tail;
        if (lead == tail) {
            c.clear();
            min_m = 0;
            return;
        }
        c.erase(c.begin() + static_cast<std::ptrdiff_t>(tail), c.end());
        c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(lead));
        min_m += static_cast<long>(lead);
    }
};

/// Two-variable series: for each power of q up to the truncation order, a
/// Laurent polynomial in z. Row n of a crank series is supported on |m| <= n.
class ZLaurentSeries {
  public:
    explicit ZLaurentSeries(long trunc_order) {
        if (trunc_order < 0) throw std::invalid_argument("negative truncation order");
        rows_.resize(static_cast<std::size_t>(trunc_order) + 1);
    }

    static ZLaurentSeries one(long trunc_order) {
        ZLaurentSeries s(trunc_order);
        s.rows_[0].min_m = 0;
        s.rows_[0].c = {Integer(1)};
        return s;
    }

    long order() const { return static_cast<long>(rows_.size()) - 1; }

    const LaurentRow& row(long n) const { return rows_.at(static_cast<std::size_t>(n)); }

    Integer coeff(long n, long m) const { return row(n).coeff(m); }

    /// In-place multiply by 1/(1 - z^{z_exp} q^{q_shift}): the forward
    /// recurrence row'_n = row_n + z^{z_exp} row'_{n - q_shift}.
    void apply_geometric_factor(int z_exp, long q_shift) {
        if (q_shift < 1) throw std::invalid_argument("q-shift must be positive");
        static const Integer kOne(1);
        for (long n = q_shift; n <= order(); ++n)
            rows_[static_cast<std::size_t>(n)].add_scaled(rows_[static_cast<std::size_t>(n - q_shift)],
                                                          z_exp, kOne);
    }

    /// Multiply by a one-variable series with integer coefficients.
    void multiply_by(const Series& s) {
        const long N = std::min(order(), s.order());
        std::vector<Integer> scalars(static_cast<std::size_t>(N) + 1);
        for (long j = 0; j <= N; ++j) {
            if (!is_integer(s[j])) throw std::invalid_argument("series factor must be integral");
            scalars[static_cast<std::size_t>(j)] = s[j].get_num();
        }
        std::vector<LaurentRow> out(static_cast<std::size_t>(N) + 1);
        for (long n = 0; n <= N; ++n)
            for (long j = 0; j <= n; ++j) {
                const Integer& a = scalars[static_cast<std::size_t>(j)];
                if (a == 0) continue;
                out[static_cast<std::size_t>(n)].add_scaled(rows_[static_cast<std::size_t>(n - j)], 0, a);
            }
        rows_ = std::move(out);
        for (auto& r : rows_) r.trim();
    }

    /// Row sums: the series at z = 1.
    Series at_z_one() const {
        Series out(order());
        for (long n = 0; n <= order(); ++n) {
            Integer acc(0);
            for (const Integer& v : rows_[static_cast<std::size_t>(n)].c) acc += v;
            out.set_coeff(n, Rational(acc));
        }
        return out;
    }

    /// sum_m m^ell coeff(n, m) per row; ell = 0 gives the row sums.
    Series moment(long ell) const {
        if (ell < 0) throw std::invalid_argument("negative moment order");
        Series out(order());
        for (long n = 0; n <= order(); ++n) {
            const LaurentRow& r = rows_[static_cast<std::size_t>(n)];
            Integer acc(0);
            for (long m = r.min_m; m <= r.max_m(); ++m) {
                const Integer& v = r.c[static_cast<std::size_t>(m - r.min_m)];
                if (v == 0) continue;
                if (ell == 0)
                    acc += v;
                else
                    acc += int_pow(Integer(m), static_cast<unsigned long>(ell)) * v;
            }
            out.set_coeff(n, Rational(acc));
        }
        return out;
    }

    /// One-sided moment sum_{m >= 1} m^ell coeff(n, m).
    Series positive_moment(long ell) const {
        if (ell < 0) throw std::invalid_argument("negative moment order");
        Series out(order());
        for (long n = 0; n <= order(); ++n) {
            const LaurentRow& r = rows_[static_cast<std::size_t>(n)];
            Integer acc(0);
            for (long m = std::max(r.min_m, 1L); m <= r.max_m(); ++m) {
                const Integer& v = r.c[static_cast<std::size_t>(m - r.min_m)];
                if (v == 0) continue;
                acc += int_pow(Integer(m), static_cast<unsigned long>(ell)) * v;
            }
            out.set_coeff(n, Rational(acc));
        }
        return out;
    }

  private:
    std::vector<LaurentRow> rows_;
};

/// Two-variable crank series (q;q)_inf / ((zq;q)_inf (q/z;q)_inf): the
/// coefficient of z^m q^n counts partitions of n with crank m under the
/// generating-function convention.
inline ZLaurentSeries crank_series(long trunc_order) {
    ZLaurentSeries zs = ZLaurentSeries::one(trunc_order);
    for (long i = 1; i <= trunc_order; ++i) {
        zs.apply_geometric_factor(+1, i);
        zs.apply_geometric_factor(-1, i);
    }
    zs.multiply_by(euler_function(1, trunc_order));
    return zs;
}

/// k-th residual crank series (q^k;q^k)_inf Pbar(q) C(z;q^k), expanded as
/// Pbar(q) (q^k;q^k)_inf^2 / ((zq^k;q^k)_inf (q^k/z;q^k)_inf).
inline ZLaurentSeries residual_crank_series(long k, long trunc_order) {
    if (k < 1) throw std::invalid_argument("residual modulus must be positive");
    ZLaurentSeries zs = ZLaurentSeries::one(trunc_order);
    for (long i = 1; k * i <= trunc_order; ++i) {
        zs.apply_geometric_factor(+1, k * i);
        zs.apply_geometric_factor(-1, k * i);
    }
    const Series ek = euler_function(k, trunc_order);
    zs.multiply_by(overpartition_gf(trunc_order) * ek * ek);
    return zs;
}

/// Reads a CrankTable out of a two-variable series.
inline CrankTable table_from_zseries(const ZLaurentSeries& zs, long k, long trunc) {
    if (trunc > zs.order()) throw std::invalid_argument("table order exceeds series order");
    CrankTable table{k, trunc, {}};
    table.counts.resize(static_cast<std::size_t>(trunc) + 1);
    for (long n = 0; n <= trunc; ++n) {
        const LaurentRow& r = zs.row(n);
        for (long m = r.min_m; m <= r.max_m(); ++m) {
            const Integer v = r.coeff(m);
            if (v == 0) continue;
            if (!v.fits_slong_p()) throw std::overflow_error("table entry exceeds long range");
            table.counts[static_cast<std::size_t>(n)][m] = v.get_si();
        }
    }
    return table;
}

inline CrankTable crank_table_from_series(long k, long trunc) {
    return table_from_zseries(residual_crank_series(k, trunc), k, trunc);
}

/// Moment generating series of the k-th residual crank.
struct MomentSeries {
    long k;
    long ell;
    Series series;
};

inline MomentSeries moment_series(const ZLaurentSeries& zs, long k, long ell) {
    return MomentSeries{k, ell, zs.moment(ell)};
}

inline MomentSeries moment_series(long k, long ell, long trunc_order) {
    return moment_series(residual_crank_series(k, trunc_order), k, ell);
}

inline MomentSeries positive_moment(const ZLaurentSeries& zs, long k, long ell) {
    return MomentSeries{k, ell, zs.positive_moment(ell)};
}

inline MomentSeries positive_moment(long k, long ell, long trunc_order) {
    return positive_moment(residual_crank_series(k, trunc_order), k, ell);
}

/// One row of an inequality scan: d * M[dk]_ell(n) <= M[k]_ell(n).
struct InequalityScanRow {
    long n;
    Integer lhs;
    Integer rhs;
    bool holds;
    bool equal;
};

struct InequalityScanReport {
    long d;
    long k;
    long ell;
    long trunc;
    std::vector<InequalityScanRow> rows;
    std::vector<long> equality_set;
    bool all_hold = true;
};

/// Scans d * M[dk]_ell(n) <= M[k]_ell(n) for n <= trunc and records the
/// observed equality set. No equality condition is asserted.
inline InequalityScanReport scan_moment_inequality(long d, long k, long ell, long trunc) {
    if (d < 1 || k < 1) throw std::invalid_argument("scan parameters must be positive");
    InequalityScanReport report{d, k, ell, trunc, {}, {}, true};
    const Series coarse = moment_series(d * k, ell, trunc).series;
    const Series fine = moment_series(k, ell, trunc).series;
    for (long n = 0; n <= trunc; ++n) {
        Integer lhs = coarse[n].get_num() * d;
        Integer rhs = fine[n].get_num();
        InequalityScanRow row{n, lhs, rhs, lhs <= rhs, lhs == rhs};
        if (!row.holds) report.all_hold = false;
        if (row.equal) report.equality_set.push_back(n);
        report.rows.push_back(std::move(row));
    }
    return report;
}

}  // namespace crankforge
