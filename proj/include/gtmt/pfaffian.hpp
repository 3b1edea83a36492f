#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "gtmt/multipoly.hpp"

namespace gtmt {

template <class R>
struct RingTraits {
    static R zero() { return R(0); }
    static R one() { return R(1); }
};

template <>
struct RingTraits<MultiPoly> {
    static MultiPoly zero() { return {}; }
    static MultiPoly one() { return MultiPoly::constant(FieldElem(1)); }
};

/// Upper triangular array of even order with implicit skew-symmetric
/// extension A[j][i] = -A[i][j], A[i][i] = 0. Indices are 1-based.
template <class R>
class TriArray {
public:
    explicit TriArray(int order) : order_(order) {
        if (order <= 0 || order % 2 != 0)
            throw DomainError("TriArray order must be a positive even integer");
        entries_.resize(static_cast<size_t>(order) * order, RingTraits<R>::zero());
    }

    int order() const { return order_; }

    R& entry(int i, int j) {
        check_upper(i, j);
        return entries_[idx(i, j)];
    }
    const R& entry(int i, int j) const {
        check_upper(i, j);
        return entries_[idx(i, j)];
    }

    /// Signed access to the skew-symmetric extension.
    R at(int i, int j) const {
        if (i == j) return RingTraits<R>::zero();
        if (i < j) return entries_[idx(i, j)];
        return -entries_[idx(j, i)];
    }

private:
    int order_;
    std::vector<R> entries_;

    size_t idx(int i, int j) const {
        return static_cast<size_t>(i - 1) * order_ + static_cast<size_t>(j - 1);
    }
    void check_upper(int i, int j) const {
        if (!(1 <= i && i < j && j <= order_)) throw DomainError("TriArray: need 1 <= i < j <= order");
    }
};

/// Pfaffian as the literal signed sum over perfect matchings; the oracle
/// route, kept independent of the Laplace recursion. (2m-1)!! growth, so the
/// order is capped.
template <class R>
R pf_matchings(const TriArray<R>& a, int order_cap = 12) {
    int n = a.order();
    if (n > order_cap) throw ResourceError("pf_matchings: order exceeds cap");
    std::vector<int> remaining(n);
    for (int i = 0; i < n; ++i) remaining[i] = i + 1;
    std::vector<int> word; // i1 j1 i2 j2 ...
    word.reserve(n);
    R total = RingTraits<R>::zero();

    auto sign_of_word = [](const std::vector<int>& w) {
        int inv = 0;
        for (size_t i = 0; i < w.size(); ++i)
            for (size_t j = i + 1; j < w.size(); ++j)
                if (w[i] > w[j]) ++inv;
        return inv % 2 == 0 ? 1 : -1;
    };

    auto rec = [&](auto&& self, std::vector<int> rem, R prod) -> void {
        if (rem.empty()) {
            if (sign_of_word(word) < 0) prod = -prod;
            total = total + prod;
            return;
        }
        int i = rem.front();
        for (size_t t = 1; t < rem.size(); ++t) {
            int j = rem[t];
            std::vector<int> next;
            next.reserve(rem.size() - 2);
            for (size_t u = 1; u < rem.size(); ++u)
                if (u != t) next.push_back(rem[u]);
            word.push_back(i);
            word.push_back(j);
            self(self, std::move(next), prod * a.entry(i, j));
            word.pop_back();
            word.pop_back();
        }
    };
    rec(rec, remaining, RingTraits<R>::one());
    return total;
}

/// Pfaffian via the Laplace expansion, memoized on index subsets. The top
/// level expands at `expand_index` (default: the last column); minors expand
/// along their own last index.
template <class R>
R pf_laplace(const TriArray<R>& a, int expand_index = -1) {
    int n = a.order();
    if (n > 62) throw ResourceError("pf_laplace: order too large for subset masks");
    if (expand_index == -1) expand_index = n;
    if (expand_index < 1 || expand_index > n)
        throw DomainError("pf_laplace: expansion index out of range");

    std::map<std::uint64_t, R> memo;
    const std::uint64_t full = (n == 62) ? ~0ULL : ((1ULL << n) - 1);

    auto rec = [&](auto&& self, std::uint64_t mask) -> R {
        if (mask == 0) return RingTraits<R>::one();
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;

        std::vector<int> idxs; // 1-based original indices present in mask
        for (int i = 1; i <= n; ++i)
            if (mask & (1ULL << (i - 1))) idxs.push_back(i);

        int m = static_cast<int>(idxs.size());
        // position (1-based within the subarray) to expand at
        int pos_p = m;
        if (mask == full && expand_index != -1) {
            for (int t = 0; t < m; ++t)
                if (idxs[t] == expand_index) pos_p = t + 1;
        }
        int p = idxs[pos_p - 1];

        R acc = RingTraits<R>::zero();
        for (int pos_q = 1; pos_q <= m; ++pos_q) {
            if (pos_q == pos_p) continue;
            int q = idxs[pos_q - 1];
            std::uint64_t sub = mask & ~(1ULL << (p - 1)) & ~(1ULL << (q - 1));
            R term = a.entry(std::min(p, q), std::max(p, q)) * self(self, sub);
            if ((pos_p + pos_q) % 2 == 0) term = -term; // sign (-1)^(pos_p+pos_q+1)
            acc = acc + term;
        }
        memo.emplace(mask, acc);
        return acc;
    };
    return rec(rec, full);
}

/// Determinant of the skew-symmetric extension by cofactor expansion with
/// memoization on column subsets. Exact over any commutative ring.
template <class R>
R skew_determinant(const TriArray<R>& a, int order_cap = 12) {
    int n = a.order();
    if (n > order_cap) throw ResourceError("skew_determinant: order exceeds cap");
    std::map<std::uint64_t, R> memo;

    auto rec = [&](auto&& self, std::uint64_t colmask) -> R {
        if (colmask == 0) return RingTraits<R>::one();
        auto it = memo.find(colmask);
        if (it != memo.end()) return it->second;
        int row = n - __builtin_popcountll(colmask) + 1;
        R acc = RingTraits<R>::zero();
        int sign = 1;
        for (int c = 1; c <= n; ++c) {
            if (!(colmask & (1ULL << (c - 1)))) continue;
            R e = a.at(row, c);
            R term = e * self(self, colmask & ~(1ULL << (c - 1)));
            if (sign < 0) term = -term;
            acc = acc + term;
            sign = -sign;
        }
        memo.emplace(colmask, acc);
        return acc;
    };
    return rec(rec, (n == 62) ? ~0ULL : ((1ULL << n) - 1));
}

/// pf(a)^2 = det(skew extension of a); a classical self-check.
template <class R>
bool pf_squared_is_det(const TriArray<R>& a) {
    R pf = pf_laplace(a);
    return pf * pf == skew_determinant(a, std::max(8, a.order()));
}

} // namespace gtmt
