#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <vector>

#include "gtmt/rational.hpp"

namespace gtmt {

/// Integer array with h+1 rows of lengths n-h, ..., n (top to bottom), weakly
/// increasing along both diagonal directions.
struct Trapezoid {
    int h = 0;
    std::vector<std::vector<long>> rows; // rows[0] = top ... rows[h] = bottom

    int n() const { return rows.empty() ? 0 : static_cast<int>(rows.back().size()); }

    bool operator==(const Trapezoid&) const = default;
};

inline bool weakly_increasing(const std::vector<long>& v) {
    return std::is_sorted(v.begin(), v.end());
}

inline bool strictly_increasing(const std::vector<long>& v) {
    for (size_t i = 1; i < v.size(); ++i)
        if (v[i - 1] >= v[i]) return false;
    return true;
}

/// l interlaces k: k_1 <= l_1 <= k_2 <= l_2 <= ... <= k_n.
inline bool interlaces(const std::vector<long>& l, const std::vector<long>& k) {
    if (l.size() + 1 != k.size()) return false;
    for (size_t i = 0; i < l.size(); ++i)
        if (!(k[i] <= l[i] && l[i] <= k[i + 1])) return false;
    return true;
}

inline bool is_valid_trapezoid(const Trapezoid& t, bool monotone) {
    if (t.h < 0 || static_cast<int>(t.rows.size()) != t.h + 1) return false;
    int n = t.n();
    if (t.h > n) return false;
    for (int i = 0; i <= t.h; ++i) {
        if (static_cast<int>(t.rows[i].size()) != n - t.h + i) return false;
        if (monotone && !strictly_increasing(t.rows[i])) return false;
        if (!monotone && !weakly_increasing(t.rows[i])) return false;
    }
    for (int i = 1; i <= t.h; ++i)
        if (!interlaces(t.rows[i - 1], t.rows[i])) return false;
    return true;
}

/// Brute-force counts and streams of GT/monotone trapezoids with a prescribed
/// bottom row. The top row is free. Counting is memoized on (height, row).
class TrapezoidEnumerator {
public:
    explicit TrapezoidEnumerator(Int count_cap = Int(1) << 62) : cap_(std::move(count_cap)) {}

    /// Number of (h,n)-trapezoids with the given bottom row.
    Int count(int h, const std::vector<long>& bottom, bool monotone) {
        check_bottom(h, bottom, monotone);
        Int result = count_rec(h, bottom, monotone);
        if (result > cap_) throw ResourceError("trapezoid count exceeds cap");
        return result;
    }

    /// Streams every trapezoid; the callback may be invoked up to cap times
    /// before a ResourceError is raised.
    void emit(int h, const std::vector<long>& bottom, bool monotone,
              const std::function<void(const Trapezoid&)>& sink) {
        check_bottom(h, bottom, monotone);
        Int emitted = 0;
        std::vector<std::vector<long>> stack = {bottom};
        emit_rec(h, bottom, monotone, stack, emitted, sink);
    }

private:
    Int cap_;
    std::map<std::tuple<int, bool, std::vector<long>>, Int> memo_;

    static void check_bottom(int h, const std::vector<long>& bottom, bool monotone) {
        int n = static_cast<int>(bottom.size());
        if (h < 0 || h > n) throw DomainError("enumerate: need 0 <= h <= n");
        if (monotone && !strictly_increasing(bottom))
            throw DomainError("enumerate: monotone bottom row must be strictly increasing");
        if (!monotone && !weakly_increasing(bottom))
            throw DomainError("enumerate: bottom row must be weakly increasing");
    }

    Int count_rec(int h, const std::vector<long>& row, bool monotone) {
        if (h == 0) return 1;
        auto key = std::make_tuple(h, monotone, row);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        Int total = 0;
        for_each_interlacing(row, monotone, [&](const std::vector<long>& above) {
            total += count_rec(h - 1, above, monotone);
        });
        memo_.emplace(std::move(key), total);
        return total;
    }

    void emit_rec(int h, const std::vector<long>& row, bool monotone,
                  std::vector<std::vector<long>>& stack, Int& emitted,
                  const std::function<void(const Trapezoid&)>& sink) {
        if (h == 0) {
            if (++emitted > cap_) throw ResourceError("trapezoid emission exceeds cap");
            Trapezoid t;
            t.h = static_cast<int>(stack.size()) - 1;
            t.rows.assign(stack.rbegin(), stack.rend());
            sink(t);
            return;
        }
        for_each_interlacing(row, monotone, [&](const std::vector<long>& above) {
            stack.push_back(above);
            emit_rec(h - 1, above, monotone, stack, emitted, sink);
            stack.pop_back();
        });
    }

    template <class F>
    static void for_each_interlacing(const std::vector<long>& row, bool monotone, F&& fn) {
        int m = static_cast<int>(row.size()) - 1; // length of the row above
        std::vector<long> above(static_cast<size_t>(std::max(m, 0)));
        auto rec = [&](auto&& self, int i) -> void {
            if (i == m) {
                fn(above);
                return;
            }
            long lo = row[i];
            if (monotone && i > 0) lo = std::max(lo, above[i - 1] + 1);
            for (long v = lo; v <= row[i + 1]; ++v) {
                above[i] = v;
                self(self, i + 1);
            }
        };
        rec(rec, 0);
    }
};

/// The {0,+-1}-matrix of the monotone-trapezoid bijection: h x k_n, with
/// alternating non-zero entries in rows and columns, unit row sums, and the
/// bottom-most non-zero entry of a column equal to +1 exactly at the
/// bottom-row positions.
struct SignMatrix {
    int h = 0;
    long width = 0;
    std::vector<std::vector<int>> entries; // h rows, width columns (1-based positions)
    std::vector<long> positions;           // the bottom row k_1..k_n

    bool operator==(const SignMatrix&) const = default;
};

inline bool sign_matrix_valid(const SignMatrix& m) {
    if (m.h < 0 || m.width < 0) return false;
    if (static_cast<int>(m.entries.size()) != m.h) return false;
    for (const auto& row : m.entries) {
        if (static_cast<long>(row.size()) != m.width) return false;
        int sum = 0, last = 0;
        for (int v : row) {
            if (v != 0) {
                if (last != 0 && v == last) return false; // row alternation
                last = v;
                sum += v;
            }
        }
        if (m.width > 0 && sum != 1) return false;
    }
    for (long c = 0; c < m.width; ++c) {
        int last = 0, bottom_most = 0;
        for (int i = 0; i < m.h; ++i) {
            int v = m.entries[i][c];
            if (v != 0) {
                if (last != 0 && v == last) return false; // column alternation
                last = v;
                bottom_most = v;
            }
        }
        bool is_position =
            std::find(m.positions.begin(), m.positions.end(), c + 1) != m.positions.end();
        if (bottom_most == 1 && !is_position) return false;
        if (bottom_most == -1 && is_position) return false;
    }
    return true;
}

/// Extended standard bijection with the first row deleted; requires a
/// monotone trapezoid with positive entries.
inline SignMatrix to_sign_matrix(const Trapezoid& t) {
    if (!is_valid_trapezoid(t, true))
        throw DomainError("to_sign_matrix: not a monotone trapezoid");
    for (const auto& row : t.rows)
        for (long v : row)
            if (v < 1) throw DomainError("to_sign_matrix: entries must be positive");
    SignMatrix m;
    m.h = t.h;
    m.width = t.rows.back().empty() ? 0 : t.rows.back().back();
    m.positions = t.rows.back();
    m.entries.assign(static_cast<size_t>(t.h), std::vector<int>(static_cast<size_t>(m.width), 0));
    for (int i = 1; i <= t.h; ++i) {
        for (long v : t.rows[i]) m.entries[i - 1][v - 1] += 1;
        for (long v : t.rows[i - 1]) m.entries[i - 1][v - 1] -= 1;
    }
    return m;
}

/// Inverse of the bijection: recovers rows from partial sums of the rows of
/// the matrix (top row of the trapezoid is the remaining support).
inline Trapezoid from_sign_matrix(const SignMatrix& m) {
    if (!sign_matrix_valid(m)) throw DomainError("from_sign_matrix: invalid sign matrix");
    Trapezoid t;
    t.h = m.h;
    t.rows.assign(static_cast<size_t>(m.h) + 1, {});
    std::vector<int> indicator(static_cast<size_t>(m.width), 0);
    for (long v : m.positions) {
        if (v < 1 || v > m.width) throw DomainError("from_sign_matrix: position out of range");
        indicator[v - 1] = 1;
    }
    t.rows[static_cast<size_t>(m.h)] = m.positions;
    for (int i = m.h; i >= 1; --i) {
        for (long c = 0; c < m.width; ++c) {
            indicator[c] -= m.entries[i - 1][c];
            if (indicator[c] != 0 && indicator[c] != 1)
                throw DomainError("from_sign_matrix: partial sums are not an indicator");
        }
        auto& row = t.rows[static_cast<size_t>(i) - 1];
        for (long c = 0; c < m.width; ++c)
            if (indicator[c] == 1) row.push_back(c + 1);
    }
    if (!is_valid_trapezoid(t, true))
        throw DomainError("from_sign_matrix: result is not a monotone trapezoid");
    return t;
}

} // namespace gtmt
