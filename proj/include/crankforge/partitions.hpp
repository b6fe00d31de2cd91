#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <vector>

#include "crankforge/errors.hpp"
#include "crankforge/rational.hpp"

namespace crankforge {

/// Hard ceiling on brute-force enumeration weight.
inline constexpr long kEnumerationCap = 40;

/// Non-increasing sequence of positive integers.
struct Partition {
    std::vector<long> parts;

    long weight() const {
        long w = 0;
        for (long p : parts) w += p;
        return w;
    }

    bool operator==(const Partition&) const = default;
};

struct OverpartEntry {
    long part;
    bool overlined;

    bool operator==(const OverpartEntry&) const = default;
};

/// Overpartition: non-increasing parts where the first occurrence of a value
/// may be overlined. Overlined entries precede non-overlined entries of the
/// same value.
struct Overpartition {
    std::vector<OverpartEntry> entries;

    long weight() const {
        long w = 0;
        for (const auto& e : entries) w += e.part;
        return w;
    }

    bool operator==(const Overpartition&) const = default;
};

/// Crank of a partition: the largest part when no ones occur, otherwise the
/// number of parts exceeding the count of ones, minus that count. The empty
/// partition gets 0 by convention.
inline long crank(const Partition& p) {
    long ones = 0;
    for (long part : p.parts)
        if (part == 1) ++ones;
    if (ones == 0) return p.parts.empty() ? 0 : p.parts.front();
    long exceeding = 0;
    for (long part : p.parts)
        if (part > ones) ++exceeding;
    return exceeding - ones;
}

/// Non-overlined parts of o divisible by k, each divided by k.
inline Partition residual_partition(const Overpartition& o, long k) {
    if (k < 1) throw std::invalid_argument("residual modulus must be positive");
    Partition p;
    for (const auto& e : o.entries)
        if (!e.overlined && e.part % k == 0) p.parts.push_back(e.part / k);
    return p;
}

inline long residual_crank(const Overpartition& o, long k) {
    return crank(residual_partition(o, k));
}

/// Number of times k occurs non-overlined as a part.
inline long omega_k(const Overpartition& o, long k) {
    long count = 0;
    for (const auto& e : o.entries)
        if (!e.overlined && e.part == k) ++count;
    return count;
}

namespace detail {

template <typename Fn>
void walk_overpartitions(long remaining, long max_part, Overpartition& cur, Fn&& emit) {
    if (remaining == 0) {
        emit(static_cast<const Overpartition&>(cur));
        return;
    }
    for (long v = std::min(remaining, max_part); v >= 1; --v) {
        for (long copies = remaining / v; copies >= 1; --copies) {
            const std::size_t base = cur.entries.size();
            for (long c = 0; c < copies; ++c) cur.entries.push_back({v, false});
            // Overlined branch first, then plain.
            cur.entries[base].overlined = true;
            walk_overpartitions(remaining - copies * v, v - 1, cur, emit);
            cur.entries[base].overlined = false;
            walk_overpartitions(remaining - copies * v, v - 1, cur, emit);
            cur.entries.resize(base);
        }
    }
}

template <typename Fn>
void walk_partitions(long remaining, long max_part, Partition& cur, Fn&& emit) {
    if (remaining == 0) {
        emit(static_cast<const Partition&>(cur));
        return;
    }
    for (long v = std::min(remaining, max_part); v >= 1; --v) {
        cur.parts.push_back(v);
        walk_partitions(remaining - v, v, cur, emit);
        cur.parts.pop_back();
    }
}

}  // namespace detail

/// Visits every overpartition of n exactly once, in descending lexicographic
/// order of the part sequence, overlined branch before plain within a value.
template <typename Fn>
void for_each_overpartition(long n, Fn&& emit) {
    if (n < 0) throw std::invalid_argument("negative weight");
    Overpartition cur;
    detail::walk_overpartitions(n, n == 0 ? 1 : n, cur, emit);
}

inline std::vector<Overpartition> enumerate_overpartitions(long n) {
    std::vector<Overpartition> out;
    for_each_overpartition(n, [&](const Overpartition& o) { out.push_back(o); });
    return out;
}

template <typename Fn>
void for_each_partition(long n, Fn&& emit) {
    if (n < 0) throw std::invalid_argument("negative weight");
    Partition cur;
    detail::walk_partitions(n, n == 0 ? 1 : n, cur, emit);
}

inline std::vector<Partition> enumerate_partitions(long n) {
    std::vector<Partition> out;
    for_each_partition(n, [&](const Partition& p) { out.push_back(p); });
    return out;
}

/// Crank counting convention.
///
/// GeneratingFunction: an object whose (residual) partition is exactly (1)
/// contributes +1 at m = -1, -1 at m = 0 and +1 at m = +1, matching the
/// coefficients of the two-variable product series. Raw: the combinatorial
/// statistic as defined.
enum class CrankConvention { GeneratingFunction, Raw };

/// Exact counts M[k](m, n) for n <= trunc.
struct CrankTable {
    long k = 1;
    long trunc = 0;
    std::vector<std::map<long, long>> counts;  // counts[n][m]

    long count(long m, long n) const {
        const auto& row = counts.at(static_cast<std::size_t>(n));
        auto it = row.find(m);
        return it == row.end() ? 0 : it->second;
    }

    /// sum_m m^ell count(m, n), exact.
    Integer moment(long ell, long n) const {
        Integer acc(0);
        for (const auto& [m, c] : counts.at(static_cast<std::size_t>(n))) {
            Integer term = int_pow(Integer(m), static_cast<unsigned long>(ell));
            term *= c;
            acc += term;
        }
        return acc;
    }

    /// sum_{m >= 1} m^ell count(m, n).
    Integer positive_moment(long ell, long n) const {
        Integer acc(0);
        for (const auto& [m, c] : counts.at(static_cast<std::size_t>(n))) {
            if (m < 1) continue;
            Integer term = int_pow(Integer(m), static_cast<unsigned long>(ell));
            term *= c;
            acc += term;
        }
        return acc;
    }

    long column_sum(long n) const {
        long acc = 0;
        for (const auto& [m, c] : counts.at(static_cast<std::size_t>(n))) acc += c;
        return acc;
    }

    void drop_zero_entries() {
        for (auto& row : counts)
            for (auto it = row.begin(); it != row.end();)
                it = it->second == 0 ? row.erase(it) : std::next(it);
    }
};

struct TableMismatch {
    long n;
    long m;
    long lhs;
    long rhs;
};

inline std::vector<TableMismatch> diff_tables(const CrankTable& a, const CrankTable& b) {
    std::vector<TableMismatch> out;
    const long N = std::min(a.trunc, b.trunc);
    for (long n = 0; n <= N; ++n) {
        std::map<long, bool> ms;
        for (const auto& [m, c] : a.counts[n]) ms[m] = true;
        for (const auto& [m, c] : b.counts[n]) ms[m] = true;
        for (const auto& [m, unused] : ms) {
            const long lhs = a.count(m, n), rhs = b.count(m, n);
            if (lhs != rhs) out.push_back({n, m, lhs, rhs});
        }
    }
    return out;
}

namespace detail {

inline void tally_crank(std::map<long, long>& row, const Partition& residual,
                        CrankConvention convention) {
    if (convention == CrankConvention::GeneratingFunction && residual.parts == std::vector<long>{1}) {
        row[-1] += 1;
        row[0] -= 1;
        row[1] += 1;
    } else {
        row[crank(residual)] += 1;
    }
}

}  // namespace detail

/// M[k](m, n) for n <= trunc by direct enumeration of overpartitions.
inline CrankTable crank_table_bruteforce(long k, long trunc,
                                         CrankConvention convention = CrankConvention::GeneratingFunction) {
    if (trunc > kEnumerationCap) throw EnumerationBudgetExceeded(trunc, kEnumerationCap);
    if (k < 1) throw std::invalid_argument("residual modulus must be positive");
    CrankTable table{k, trunc, {}};
    table.counts.resize(static_cast<std::size_t>(trunc) + 1);
    for (long n = 0; n <= trunc; ++n) {
        auto& row = table.counts[static_cast<std::size_t>(n)];
        for_each_overpartition(n, [&](const Overpartition& o) {
            detail::tally_crank(row, residual_partition(o, k), convention);
        });
    }
    table.drop_zero_entries();
    return table;
}

/// Ordinary-partition crank table, same conventions.
inline CrankTable ordinary_crank_table_bruteforce(long trunc,
                                                  CrankConvention convention = CrankConvention::GeneratingFunction) {
    if (trunc > kEnumerationCap) throw EnumerationBudgetExceeded(trunc, kEnumerationCap);
    CrankTable table{1, trunc, {}};
    table.counts.resize(static_cast<std::size_t>(trunc) + 1);
    for (long n = 0; n <= trunc; ++n) {
        auto& row = table.counts[static_cast<std::size_t>(n)];
        for_each_partition(n, [&](const Partition& p) { detail::tally_crank(row, p, convention); });
    }
    table.drop_zero_entries();
    return table;
}

/// Total of non-overlined parts divisible by k across all overpartitions of n.
inline long nov(long k, long n) {
    if (n > kEnumerationCap) throw EnumerationBudgetExceeded(n, kEnumerationCap);
    if (k < 1) throw std::invalid_argument("residual modulus must be positive");
    long acc = 0;
    for_each_overpartition(n, [&](const Overpartition& o) {
        for (const auto& e : o.entries)
            if (!e.overlined && e.part % k == 0) acc += e.part;
    });
    return acc;
}

/// Total of overlined parts divisible by k across all overpartitions of n.
inline long ov(long k, long n) {
    if (n > kEnumerationCap) throw EnumerationBudgetExceeded(n, kEnumerationCap);
    if (k < 1) throw std::invalid_argument("residual modulus must be positive");
    long acc = 0;
    for_each_overpartition(n, [&](const Overpartition& o) {
        for (const auto& e : o.entries)
            if (e.overlined && e.part % k == 0) acc += e.part;
    });
    return acc;
}

/// sum over overpartitions of n of omega_k * residual crank. Under the
/// generating-function convention an overpartition with residual (1) uses the
/// first moment of the correction vector, which is 0, in place of its raw
/// crank.
inline long omega_weighted_crank_sum(long k, long n,
                                          CrankConvention convention = CrankConvention::Raw) {
    if (n > kEnumerationCap) throw EnumerationBudgetExceeded(n, kEnumerationCap);
    long acc = 0;
    for_each_overpartition(n, [&](const Overpartition& o) {
        const long w = omega_k(o, k);
        if (w == 0) return;
        const Partition residual = residual_partition(o, k);
        if (convention == CrankConvention::GeneratingFunction &&
            residual.parts == std::vector<long>{1})
            return;  // correction vector has first moment 0
        acc += w * crank(residual);
    });
    return acc;
}

enum class DilationDirection { Forward, Inverse };

/// Dilated Euler map between partitions into distinct parts divisible by k
/// and partitions into parts divisible by k but not by 2k. Forward splits
/// each part k*2^a*m (m odd) into 2^a copies of k*m; inverse merges copies
/// binarily. Weight is preserved.
inline Partition euler_dilation(const Partition& p, long k, DilationDirection direction) {
    if (k < 1) throw std::invalid_argument("dilation modulus must be positive");
    Partition out;
    if (direction == DilationDirection::Forward) {
        for (std::size_t i = 0; i < p.parts.size(); ++i) {
            const long part = p.parts[i];
            if (part % k != 0) throw PreconditionViolated("part not divisible by the modulus", part);
            if (i + 1 < p.parts.size() && p.parts[i + 1] == part)
                throw PreconditionViolated("parts must be distinct", part);
            long m = part / k, copies = 1;
            while (m % 2 == 0) {
                m /= 2;
                copies *= 2;
            }
            for (long c = 0; c < copies; ++c) out.parts.push_back(k * m);
        }
    } else {
        std::map<long, long> multiplicity;
        for (long part : p.parts) {
            if (part % k != 0) throw PreconditionViolated("part not divisible by the modulus", part);
            if ((part / k) % 2 == 0) throw PreconditionViolated("part divisible by twice the modulus", part);
            multiplicity[part] += 1;
        }
        for (const auto& [part, count] : multiplicity)
            for (long bit = 0, c = count; c > 0; ++bit, c >>= 1)
                if (c & 1) out.parts.push_back(part << bit);
    }
    std::sort(out.parts.begin(), out.parts.end(), std::greater<long>());
    return out;
}

}  // namespace crankforge
