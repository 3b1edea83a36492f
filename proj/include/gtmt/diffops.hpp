#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "gtmt/series.hpp"

namespace gtmt {

/// Generator producing an operator's coefficient table, as a series in
/// (Delta_x, Delta_y), at the requested per-variable truncation orders.
using OperatorTable = std::function<BiSeries(int, int)>;

namespace optables {

inline BiSeries var_x(int ox, int oy) {
    BiSeries s(ox, oy);
    if (ox >= 1) s.at(1, 0) = FieldElem(1);
    return s;
}
inline BiSeries var_y(int ox, int oy) {
    BiSeries s(ox, oy);
    if (oy >= 1) s.at(0, 1) = FieldElem(1);
    return s;
}
inline BiSeries shift_x(int ox, int oy) { return BiSeries::one(ox, oy) + var_x(ox, oy); }
inline BiSeries shift_y(int ox, int oy) { return BiSeries::one(ox, oy) + var_y(ox, oy); }

// backward differences delta = iota(Delta) = -Delta/(1+Delta)
inline BiSeries bdelta_x(int ox, int oy) {
    return BiSeries::one(ox, oy) / shift_x(ox, oy) - BiSeries::one(ox, oy);
}
inline BiSeries bdelta_y(int ox, int oy) {
    return BiSeries::one(ox, oy) / shift_y(ox, oy) - BiSeries::one(ox, oy);
}

/// st_{x,y} = E_x^{-1} + E_y - E_x^{-1} E_y
inline BiSeries st(int ox, int oy) {
    BiSeries exinv = BiSeries::one(ox, oy) / shift_x(ox, oy);
    BiSeries ey = shift_y(ox, oy);
    return exinv + ey - exinv * ey;
}

inline BiSeries st_inv(int ox, int oy) { return BiSeries::one(ox, oy) / st(ox, oy); }

/// W_{x,y} = E_x st_{x,y} = id + Delta_x + Delta_x Delta_y
inline BiSeries w(int ox, int oy) {
    return BiSeries::one(ox, oy) + var_x(ox, oy) + var_x(ox, oy) * var_y(ox, oy);
}

inline BiSeries w_inv(int ox, int oy) { return BiSeries::one(ox, oy) / w(ox, oy); }

} // namespace optables

/// A bivariate operator acting on polynomials through a truncated series in
/// the forward differences of its two variables.
class PairOperator {
public:
    PairOperator(OperatorTable table, std::string var_x, std::string var_y)
        : table_(std::move(table)), x_(std::move(var_x)), y_(std::move(var_y)) {}

    static PairOperator st(std::string x, std::string y) {
        return {optables::st, std::move(x), std::move(y)};
    }
    static PairOperator st_inv(std::string x, std::string y) {
        return {optables::st_inv, std::move(x), std::move(y)};
    }
    static PairOperator w(std::string x, std::string y) {
        return {optables::w, std::move(x), std::move(y)};
    }
    static PairOperator w_inv(std::string x, std::string y) {
        return {optables::w_inv, std::move(x), std::move(y)};
    }

    /// S(Delta_x, Delta_y) for a series generator (e.g. a hidden series).
    static PairOperator from_series(OperatorTable gen, std::string x, std::string y) {
        return {std::move(gen), std::move(x), std::move(y)};
    }

    /// S(Delta_x, 0): the univariate specialization A_{x,.}.
    static PairOperator series_at_zero(OperatorTable gen, std::string x) {
        OperatorTable tab = [gen = std::move(gen)](int ox, int oy) {
            BiSeries full = gen(ox, 0);
            BiSeries s(ox, oy);
            for (int i = 0; i <= ox; ++i) s.at(i, 0) = full.at(i, 0);
            return s;
        };
        return {std::move(tab), std::move(x), ""};
    }

    /// Product of two operators on the same variable pair (tables multiply).
    PairOperator then(const PairOperator& other) const {
        if (x_ != other.x_ || y_ != other.y_)
            throw DomainError("PairOperator::then requires matching variable pairs");
        OperatorTable a = table_, b = other.table_;
        return {[a, b](int ox, int oy) { return a(ox, oy) * b(ox, oy); }, x_, y_};
    }

    PairOperator inverted() const {
        OperatorTable t = table_;
        return {[t](int ox, int oy) { return t(ox, oy).reciprocal(); }, x_, y_};
    }

    const std::string& var_x() const { return x_; }
    const std::string& var_y() const { return y_; }

    BiSeries table(int ox, int oy) const { return table_(ox, oy); }

    MultiPoly apply(const MultiPoly& p) const {
        int dx = p.degree(x_);
        int dy = y_.empty() ? 0 : p.degree(y_);
        BiSeries s = table_(dx, dy);
        MultiPoly result;
        MultiPoly px = p;
        for (int i = 0; i <= dx; ++i) {
            MultiPoly py = px;
            for (int j = 0; j <= dy; ++j) {
                const FieldElem& c = s.at(i, j);
                if (!c.is_zero()) result += c * py;
                if (j < dy) py = py.delta(y_);
            }
            if (i < dx) px = px.delta(x_);
        }
        return result;
    }

private:
    OperatorTable table_;
    std::string x_, y_;
};

/// Sequential application; the operators are series in commuting shifts, so
/// the result does not depend on the order.
inline MultiPoly apply_product(const std::vector<PairOperator>& ops, MultiPoly p) {
    for (const auto& op : ops) p = op.apply(p);
    return p;
}

/// The Remark-style numerator form of st^{-1}_{x,y} A_{x,y} for the Q-based
/// hidden series with factor (1 - x y):
///   E_x E_y st_{y,x} (1 + bdelta_x + bdelta_y)^{-1}
///   Q(D_x,D_y) Q(D_y,D_x) / (Q(bdelta_x,D_y) Q(bdelta_y,D_x)).
inline PairOperator numerator_form_mt_op(PChoice qchoice, std::string x, std::string y) {
    MultiPoly q = q_poly(qchoice);
    OperatorTable tab = [q](int ox, int oy) {
        using namespace optables;
        int o = std::max({ox, oy, 1});
        BiSeries qs = BiSeries::from_poly(q, "x", "y", ox, oy);
        BiSeries q_bx_y = BiSeries::from_poly(q, "x", "y", o, oy)
                              .substitute(BiSeries::Which::first, iota_series(o))
                              .truncated(ox, oy);                       // Q(bdelta_x, D_y)
        BiSeries q_by_x = BiSeries::from_poly(q, "x", "y", o, o)
                              .substitute(BiSeries::Which::first, iota_series(o))
                              .swapped()
                              .truncated(ox, oy);                       // Q(bdelta_y, D_x)
        BiSeries ex_ey = shift_x(ox, oy) * shift_y(ox, oy);
        BiSeries eyinv = BiSeries::one(ox, oy) / shift_y(ox, oy);
        BiSeries st_yx = eyinv + shift_x(ox, oy) - eyinv * shift_x(ox, oy);
        BiSeries denom1 = BiSeries::one(ox, oy) + bdelta_x(ox, oy) + bdelta_y(ox, oy);
        BiSeries qq = qs * qs.swapped().truncated(ox, oy);
        return ex_ey * st_yx * (BiSeries::one(ox, oy) / denom1) * (qq / (q_bx_y * q_by_x));
    };
    return PairOperator::from_series(std::move(tab), std::move(x), std::move(y));
}

/// Hidden-series specification: which catalog P and which symmetric factor.
struct HiddenSpec {
    PChoice choice = PChoice::p0a;
    AFactor factor = AFactor::one_plus_x_plus_y;
};

inline OperatorTable hidden_table(HiddenSpec spec) {
    return [spec](int ox, int oy) {
        return hidden_series(spec.choice, spec.factor, std::max({ox, oy, 1})).truncated(ox, oy);
    };
}

inline PairOperator hidden_pair_op(HiddenSpec spec, std::string x, std::string y) {
    return PairOperator::from_series(hidden_table(spec), std::move(x), std::move(y));
}

enum class DiffKind { forward, backward, shift };

/// Applies one operator op_var^e to p, where op is Delta, bdelta or E.
inline MultiPoly apply_single_op(const MultiPoly& p, const std::string& var, int e, DiffKind kind) {
    if (kind == DiffKind::shift) return p.shift(var, e);
    MultiPoly r = p;
    for (int t = 0; t < e; ++t) r = r.delta(var, kind == DiffKind::forward);
    return r;
}

/// R(op_{v_1},...,op_{v_n}) p for a polynomial R in placeholder variables
/// X1..Xn (R.vars() must be a subset of var_map's keys).
inline MultiPoly apply_op_poly(const MultiPoly& r,
                               const std::map<std::string, std::string>& var_map,
                               const MultiPoly& p, DiffKind kind) {
    MultiPoly result;
    for (const auto& [e, c] : r.terms()) {
        MultiPoly cur = p;
        for (size_t i = 0; i < r.vars().size(); ++i) {
            if (e[i] == 0) continue;
            auto it = var_map.find(r.vars()[i]);
            if (it == var_map.end())
                throw DomainError("apply_op_poly: unmapped operator variable " + r.vars()[i]);
            cur = apply_single_op(cur, it->second, e[i], kind);
        }
        result += c * cur;
    }
    return result;
}

/// e_r of the chosen difference operators over the listed variables.
inline MultiPoly elementary_sym_op(const MultiPoly& p, const std::vector<std::string>& vars,
                                   int r, DiffKind kind = DiffKind::forward) {
    int n = static_cast<int>(vars.size());
    if (r < 0 || r > n) throw DomainError("elementary_sym_op: need 0 <= r <= |vars|");
    MultiPoly result;
    std::vector<int> pick;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(pick.size()) == r) {
            MultiPoly cur = p;
            for (int idx : pick) cur = apply_single_op(cur, vars[idx], 1, kind);
            result += cur;
            return;
        }
        for (int i = start; i <= n - (r - static_cast<int>(pick.size())); ++i) {
            pick.push_back(i);
            self(self, i + 1);
            pick.pop_back();
        }
    };
    rec(rec, 0);
    return result;
}

/// The elementary symmetric polynomial e_r(X_{v} : v in vars) as a MultiPoly.
inline MultiPoly elementary_sym_poly(const std::vector<std::string>& vars, int r) {
    int n = static_cast<int>(vars.size());
    if (r < 0 || r > n) throw DomainError("elementary_sym_poly: need 0 <= r <= |vars|");
    MultiPoly result;
    std::vector<int> pick;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(pick.size()) == r) {
            MultiPoly mono = MultiPoly::constant(FieldElem(1));
            for (int idx : pick) mono *= MultiPoly::variable(vars[idx]);
            result += mono;
            return;
        }
        for (int i = start; i <= n - (r - static_cast<int>(pick.size())); ++i) {
            pick.push_back(i);
            self(self, i + 1);
            pick.pop_back();
        }
    };
    rec(rec, 0);
    return result;
}

} // namespace gtmt
