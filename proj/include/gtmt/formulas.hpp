#pragma once

#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "gtmt/diffops.hpp"
#include "gtmt/pfaffian.hpp"
#include "gtmt/trapezoids.hpp"

namespace gtmt {

inline std::vector<std::string> k_vars(int n, const std::string& stem = "k") {
    std::vector<std::string> v;
    v.reserve(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) v.push_back(stem + std::to_string(i));
    return v;
}

/// gt_h(x,y): gt_0 = 1 and, for h >= 1, the telescoped form of
///   sum_{p=h}^{x-1} ( C(x-p+h-1,h) C(y-p+h-2,h) - C(x-p+h-2,h) C(y-p+h-1,h) ),
/// computed by substituting p -> x - p and summing p over [1, x-h].
inline const MultiPoly& gt_kernel(int h) {
    static std::map<int, MultiPoly> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(h);
    if (it != cache.end()) return it->second;
    if (h < 0) throw DomainError("gt_kernel: h must be non-negative");
    MultiPoly result;
    if (h == 0) {
        result = MultiPoly::constant(FieldElem(1));
    } else {
        MultiPoly x = MultiPoly::variable("x"), y = MultiPoly::variable("y");
        MultiPoly p = MultiPoly::variable("p");
        MultiPoly ymx = y - x; // the summand depends on p through y-x+p
        MultiPoly summand =
            binom_poly("p", h, MultiPoly::constant(FieldElem(h - 1))) *
                binom_of(ymx + p + MultiPoly::constant(FieldElem(h - 2)), h) -
            binom_poly("p", h, MultiPoly::constant(FieldElem(h - 2))) *
                binom_of(ymx + p + MultiPoly::constant(FieldElem(h - 1)), h);
        result = definite_sum(summand, "p", MultiPoly::constant(FieldElem(1)),
                              x - MultiPoly::constant(FieldElem(h)));
    }
    return cache.emplace(h, std::move(result)).first->second;
}

/// sgt_h(x,y) = (-1)^h (1/(2h)!) (x-y-h+1)_{2h-1} (x-y), the symmetric part
/// of gt_h; sgt_0 = 1 and sgt_h = 0 for h < 0.
inline const MultiPoly& sgt_kernel(int h) {
    static std::map<int, MultiPoly> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(h);
    if (it != cache.end()) return it->second;
    MultiPoly result;
    if (h < 0) {
        result = MultiPoly();
    } else if (h == 0) {
        result = MultiPoly::constant(FieldElem(1));
    } else {
        MultiPoly xmy = MultiPoly::variable("x") - MultiPoly::variable("y");
        result = pochhammer(xmy - MultiPoly::constant(FieldElem(h - 1)), 2 * h - 1) * xmy;
        FieldElem scale(Rat(h % 2 ? -1 : 1) / factorial_rat(static_cast<unsigned long>(2 * h)));
        result = scale * result;
    }
    return cache.emplace(h, std::move(result)).first->second;
}

inline MultiPoly gt_kernel_at(int h, const std::string& a, const std::string& b) {
    return gt_kernel(h).subst("x", MultiPoly::variable(a)).subst("y", MultiPoly::variable(b));
}

inline MultiPoly sgt_kernel_at(int h, const std::string& a, const std::string& b) {
    return sgt_kernel(h).subst("x", MultiPoly::variable(a)).subst("y", MultiPoly::variable(b));
}

/// The triangular array [ TGT_h(names) | RGT_{h,h}(names) ; T(0)_h ] of order
/// n+h, with entries gt_h(names_i, names_j) and C(names_i, h-j).
inline TriArray<MultiPoly> gt_pf_array(int h, const std::vector<std::string>& names) {
    int n = static_cast<int>(names.size());
    if ((n + h) % 2 != 0) throw DomainError("gt_pf_array: n+h must be even");
    TriArray<MultiPoly> a(n + h);
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j)
            a.entry(i, j) = gt_kernel_at(h, names[i - 1], names[j - 1]);
        for (int j = 1; j <= h; ++j)
            a.entry(i, n + j) = binom_poly(names[i - 1], h - j);
    }
    return a;
}

/// overline GT_h = GT_h(k - (1,...,n)) as a polynomial in the given bottom
/// variables; even n+h via the Pfaffian, odd n+h via the Delta^h reduction in
/// an auxiliary (n+1)-st variable (asserted independent before removal).
inline MultiPoly overline_gt_poly(int h, const std::vector<std::string>& names) {
    int n = static_cast<int>(names.size());
    if (h < 0 || h > n) throw DomainError("overline_gt_poly: need 0 <= h <= n");
    if (h == 0) return MultiPoly::constant(FieldElem(1));
    if ((n + h) % 2 == 0) return pf_laplace(gt_pf_array(h, names));
    std::string extra = "zzaux";
    auto extended = names;
    extended.push_back(extra);
    MultiPoly p = pf_laplace(gt_pf_array(h, extended));
    for (int t = 0; t < h; ++t) p = p.delta(extra);
    if (p.degree(extra) != 0)
        throw DomainError("overline_gt_poly: odd-parity reduction not independent of the "
                          "auxiliary variable");
    return p.subst_int(extra, 0);
}

inline MultiPoly overline_gt_symbolic(int h, int n) { return overline_gt_poly(h, k_vars(n)); }

/// GT_h(k_1..k_n) as a polynomial.
inline MultiPoly gt_symbolic(int h, int n) {
    std::vector<std::string> ks = k_vars(n);
    MultiPoly p = overline_gt_poly(h, ks);
    for (int i = 1; i <= n; ++i) p = p.shift(ks[i - 1], i);
    return p;
}

/// The Weyl product: prod_{i<j} (k_j - k_i + j - i)/(j - i); equals
/// GT_{n-1} and GT_n.
inline MultiPoly weyl_symbolic(int n) {
    if (n < 1) throw DomainError("weyl_symbolic: n must be positive");
    MultiPoly prod = MultiPoly::constant(FieldElem(1));
    Rat denom(1);
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            prod *= MultiPoly::variable("k" + std::to_string(j)) -
                    MultiPoly::variable("k" + std::to_string(i)) +
                    MultiPoly::constant(FieldElem(j - i));
            denom *= j - i;
        }
    return FieldElem(Rat(1) / denom) * prod;
}

struct MtOptions {
    std::optional<HiddenSpec> hidden = HiddenSpec{}; // nullopt: operators st^{-1} only
    bool remark_numerator_form = false;              // use the numerator-form composite
};

/// MT_h(k_1..k_n) via the operator formula: apply
/// prod_{i<j} st^{-1}_{k_i,k_j} A_{k_i,k_j} to GT_h, pair by pair, and only
/// then specialize.
inline MultiPoly mt_symbolic(int h, int n, const MtOptions& opt = {}) {
    if (opt.remark_numerator_form &&
        (!opt.hidden || (opt.hidden->choice != PChoice::q_a && opt.hidden->choice != PChoice::q_b) ||
         opt.hidden->factor != AFactor::one_minus_xy))
        throw ConfigError("remark_numerator_form requires a Q-based hidden series with the "
                          "(1-xy) factor");
    MultiPoly p = gt_symbolic(h, n);
    std::vector<std::string> ks = k_vars(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            if (opt.remark_numerator_form) {
                p = numerator_form_mt_op(opt.hidden->choice, ks[i - 1], ks[j - 1]).apply(p);
            } else {
                PairOperator op = PairOperator::st_inv(ks[i - 1], ks[j - 1]);
                if (opt.hidden)
                    op = op.then(hidden_pair_op(*opt.hidden, ks[i - 1], ks[j - 1]));
                p = op.apply(p);
            }
        }
    return p;
}

inline FieldElem eval_at(const MultiPoly& p, const std::vector<std::string>& names,
                         const std::vector<long>& values) {
    if (names.size() != values.size()) throw DomainError("eval_at: size mismatch");
    std::map<std::string, long> a;
    for (size_t i = 0; i < names.size(); ++i) a[names[i]] = values[i];
    for (const auto& v : p.vars())
        if (!a.count(v)) a[v] = 0; // variables already eliminated by compression
    return p.eval(a);
}

/// Exact integer from a field element that must be a rational integer.
inline Int to_integer(const FieldElem& v) {
    if (!v.is_rational()) throw DomainError("expected a rational value, got " + v.to_string());
    if (v.rat_part().get_den() != 1)
        throw DomainError("expected an integer value, got " + v.to_string());
    return v.rat_part().get_num();
}

enum class Provenance { pfaffian_even, odd_reduction, weyl, operator_formula, brute_force };

inline const char* to_string(Provenance p) {
    switch (p) {
        case Provenance::pfaffian_even: return "pfaffian_even";
        case Provenance::odd_reduction: return "odd_reduction";
        case Provenance::weyl: return "weyl";
        case Provenance::operator_formula: return "operator_formula";
        case Provenance::brute_force: return "brute_force";
    }
    return "?";
}

struct CountResult {
    std::optional<Int> value;
    std::optional<MultiPoly> poly;
    Provenance provenance = Provenance::pfaffian_even;
};

enum class GtMethod { pfaffian, weyl, brute };

inline CountResult gt_count(int h, int n, bool symbolic,
                            const std::optional<std::vector<long>>& bottom,
                            GtMethod method = GtMethod::pfaffian) {
    if (h < 0 || h > n) throw DomainError("gt_count: need 0 <= h <= n");
    if (bottom && static_cast<int>(bottom->size()) != n)
        throw DomainError("gt_count: bottom row size mismatch");
    CountResult r;
    if (method == GtMethod::brute) {
        if (!bottom) throw DomainError("gt_count: brute force needs a bottom row");
        TrapezoidEnumerator e;
        r.value = e.count(h, *bottom, false);
        r.provenance = Provenance::brute_force;
        return r;
    }
    MultiPoly p;
    if (method == GtMethod::weyl) {
        if (h != n && h != n - 1)
            throw DomainError("gt_count: the Weyl product applies for h in {n-1, n}");
        p = weyl_symbolic(n);
        r.provenance = Provenance::weyl;
    } else {
        p = gt_symbolic(h, n);
        r.provenance = (n + h) % 2 == 0 ? Provenance::pfaffian_even : Provenance::odd_reduction;
    }
    if (symbolic) r.poly = p;
    if (bottom) {
        if (!weakly_increasing(*bottom))
            throw DomainError("gt_count: bottom row must be weakly increasing");
        r.value = to_integer(eval_at(p, k_vars(n), *bottom));
    }
    return r;
}

inline CountResult mt_count(int h, int n, const MtOptions& opt, bool symbolic,
                            const std::optional<std::vector<long>>& bottom) {
    if (h < 0 || h > n) throw DomainError("mt_count: need 0 <= h <= n");
    if (bottom && static_cast<int>(bottom->size()) != n)
        throw DomainError("mt_count: bottom row size mismatch");
    if (bottom && !strictly_increasing(*bottom))
        throw DomainError("mt_count: bottom row must be strictly increasing");
    CountResult r;
    r.provenance = Provenance::operator_formula;
    MultiPoly p = mt_symbolic(h, n, opt);
    for (const auto& [e, c] : p.terms())
        if (!c.is_rational())
            throw DomainError("mt_count: operator formula produced a non-rational coefficient");
    if (symbolic) r.poly = p;
    if (bottom) r.value = to_integer(eval_at(p, k_vars(n), *bottom));
    return r;
}

/// sum over l_t = k_t .. k_{t+1}-1, t = 1..n-1, of a polynomial in the l's
/// (the strict interlacing sum of the recursion).
inline MultiPoly strict_interlace_sum(MultiPoly p, const std::vector<std::string>& lnames,
                                      const std::vector<std::string>& knames) {
    if (lnames.size() + 1 != knames.size())
        throw DomainError("strict_interlace_sum: need one more k than l");
    for (size_t t = 0; t < lnames.size(); ++t) {
        MultiPoly lo = MultiPoly::variable(knames[t]);
        MultiPoly hi = MultiPoly::variable(knames[t + 1]) - MultiPoly::constant(FieldElem(1));
        p = definite_sum(p, lnames[t], lo, hi);
    }
    return p;
}

} // namespace gtmt
