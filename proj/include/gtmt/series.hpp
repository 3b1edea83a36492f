#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "gtmt/multipoly.hpp"

namespace gtmt {

/// Truncated univariate formal power series over Q(rho).
class UniSeries {
public:
    explicit UniSeries(int order) : c_(static_cast<size_t>(order) + 1) {
        if (order < 0) throw DomainError("series order must be non-negative");
    }

    static UniSeries one(int order) {
        UniSeries s(order);
        s.c_[0] = FieldElem(1);
        return s;
    }
    static UniSeries identity(int order) {
        UniSeries s(order);
        if (order >= 1) s.c_[1] = FieldElem(1);
        return s;
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const FieldElem& at(int i) const { return c_[static_cast<size_t>(i)]; }
    FieldElem& at(int i) { return c_[static_cast<size_t>(i)]; }
    bool zero_constant_term() const { return c_[0].is_zero(); }
    bool is_unit() const { return !c_[0].is_zero(); }

    UniSeries truncated(int order) const {
        UniSeries r(order);
        for (int i = 0; i <= std::min(order, this->order()); ++i) r.c_[i] = c_[i];
        return r;
    }

    friend UniSeries operator+(const UniSeries& a, const UniSeries& b) {
        int n = std::min(a.order(), b.order());
        UniSeries r(n);
        for (int i = 0; i <= n; ++i) r.c_[i] = a.c_[i] + b.c_[i];
        return r;
    }
    friend UniSeries operator-(const UniSeries& a, const UniSeries& b) {
        int n = std::min(a.order(), b.order());
        UniSeries r(n);
        for (int i = 0; i <= n; ++i) r.c_[i] = a.c_[i] - b.c_[i];
        return r;
    }
    friend UniSeries operator*(const UniSeries& a, const UniSeries& b) {
        int n = std::min(a.order(), b.order());
        UniSeries r(n);
        for (int i = 0; i <= n; ++i) {
            if (a.c_[i].is_zero()) continue;
            for (int j = 0; i + j <= n; ++j) {
                if (b.c_[j].is_zero()) continue;
                r.c_[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return r;
    }
    friend UniSeries operator/(const UniSeries& a, const UniSeries& b) {
        if (!b.is_unit()) throw DomainError("series division by non-unit");
        int n = std::min(a.order(), b.order());
        UniSeries q(n);
        FieldElem inv0 = b.c_[0].inverse();
        for (int i = 0; i <= n; ++i) {
            FieldElem acc = a.c_[i];
            for (int u = 0; u < i; ++u) acc -= q.c_[u] * b.c_[i - u];
            q.c_[i] = acc * inv0;
        }
        return q;
    }
    friend bool operator==(const UniSeries& a, const UniSeries& b) { return a.c_ == b.c_; }

    /// Composition a(g(x)); requires g(0) = 0.
    UniSeries compose(const UniSeries& g) const {
        if (!g.zero_constant_term())
            throw DomainError("series composition requires zero constant term");
        int n = std::min(order(), g.order());
        UniSeries r(n), gp = UniSeries::one(n);
        for (int e = 0; e <= n; ++e) {
            if (!c_[e].is_zero())
                for (int i = 0; i <= n; ++i) r.c_[i] += c_[e] * gp.c_[i];
            if (e < n) gp = gp * g.truncated(n);
        }
        return r;
    }

    std::string to_string() const {
        std::string out = "[";
        for (int i = 0; i <= order(); ++i) {
            if (i) out += ", ";
            out += c_[i].to_string();
        }
        return out + "]";
    }

private:
    std::vector<FieldElem> c_;
};

/// iota(x) = -x/(1+x); coefficients 0, -1, +1, -1, ...  An involution.
inline UniSeries iota_series(int order) {
    if (order < 1) throw DomainError("iota_series: order must be >= 1");
    UniSeries s(order);
    for (int i = 1; i <= order; ++i) s.at(i) = FieldElem(i % 2 ? -1 : 1);
    return s;
}

/// Truncated bivariate formal power series over Q(rho); truncation bounds are
/// tracked per variable and all arithmetic re-truncates.
class BiSeries {
public:
    BiSeries(int order_x, int order_y)
        : ox_(order_x), oy_(order_y),
          c_(static_cast<size_t>(order_x) + 1,
             std::vector<FieldElem>(static_cast<size_t>(order_y) + 1)) {
        if (order_x < 0 || order_y < 0) throw DomainError("series orders must be non-negative");
    }

    static BiSeries one(int ox, int oy) {
        BiSeries s(ox, oy);
        s.c_[0][0] = FieldElem(1);
        return s;
    }

    /// Interprets a polynomial in exactly the variables {var_x, var_y} (either
    /// may be absent) as a truncated series.
    static BiSeries from_poly(const MultiPoly& p, const std::string& var_x,
                              const std::string& var_y, int ox, int oy) {
        BiSeries s(ox, oy);
        for (const auto& [e, coeff] : p.terms()) {
            int i = 0, j = 0;
            for (size_t t = 0; t < p.vars().size(); ++t) {
                if (p.vars()[t] == var_x) {
                    i = e[t];
                } else if (p.vars()[t] == var_y) {
                    j = e[t];
                } else if (e[t] != 0) {
                    throw DomainError("from_poly: unexpected variable " + p.vars()[t]);
                }
            }
            if (i <= ox && j <= oy) s.c_[i][j] = coeff;
        }
        return s;
    }

    int order_x() const { return ox_; }
    int order_y() const { return oy_; }
    const FieldElem& at(int i, int j) const { return c_[static_cast<size_t>(i)][static_cast<size_t>(j)]; }
    FieldElem& at(int i, int j) { return c_[static_cast<size_t>(i)][static_cast<size_t>(j)]; }
    const FieldElem& constant_term() const { return c_[0][0]; }
    bool is_unit() const { return !c_[0][0].is_zero(); }

    BiSeries truncated(int ox, int oy) const {
        BiSeries r(ox, oy);
        for (int i = 0; i <= std::min(ox, ox_); ++i)
            for (int j = 0; j <= std::min(oy, oy_); ++j) r.c_[i][j] = c_[i][j];
        return r;
    }

    friend BiSeries operator+(const BiSeries& a, const BiSeries& b) {
        auto [nx, ny] = common(a, b);
        BiSeries r(nx, ny);
        for (int i = 0; i <= nx; ++i)
            for (int j = 0; j <= ny; ++j) r.c_[i][j] = a.c_[i][j] + b.c_[i][j];
        return r;
    }
    friend BiSeries operator-(const BiSeries& a, const BiSeries& b) {
        auto [nx, ny] = common(a, b);
        BiSeries r(nx, ny);
        for (int i = 0; i <= nx; ++i)
            for (int j = 0; j <= ny; ++j) r.c_[i][j] = a.c_[i][j] - b.c_[i][j];
        return r;
    }
    friend BiSeries operator*(const BiSeries& a, const BiSeries& b) {
        auto [nx, ny] = common(a, b);
        BiSeries r(nx, ny);
        for (int i = 0; i <= nx; ++i)
            for (int j = 0; j <= ny; ++j) {
                if (a.c_[i][j].is_zero()) continue;
                for (int u = 0; i + u <= nx; ++u)
                    for (int v = 0; j + v <= ny; ++v) {
                        if (b.c_[u][v].is_zero()) continue;
                        r.c_[i + u][j + v] += a.c_[i][j] * b.c_[u][v];
                    }
            }
        return r;
    }
    friend BiSeries operator/(const BiSeries& a, const BiSeries& b) {
        if (!b.is_unit()) throw DomainError("series division by non-unit");
        auto [nx, ny] = common(a, b);
        BiSeries q(nx, ny);
        FieldElem inv0 = b.c_[0][0].inverse();
        for (int i = 0; i <= nx; ++i)
            for (int j = 0; j <= ny; ++j) {
                FieldElem acc = a.c_[i][j];
                for (int u = 0; u <= i; ++u)
                    for (int v = 0; v <= j; ++v) {
                        if (u == i && v == j) continue;
                        if (q.c_[u][v].is_zero()) continue;
                        acc -= q.c_[u][v] * b.c_[i - u][j - v];
                    }
                q.c_[i][j] = acc * inv0;
            }
        return q;
    }
    friend bool operator==(const BiSeries& a, const BiSeries& b) {
        return a.ox_ == b.ox_ && a.oy_ == b.oy_ && a.c_ == b.c_;
    }

    BiSeries reciprocal() const { return one(ox_, oy_) / *this; }

    /// c'[i][j] = c[j][i]; orders swap.
    BiSeries swapped() const {
        BiSeries r(oy_, ox_);
        for (int i = 0; i <= ox_; ++i)
            for (int j = 0; j <= oy_; ++j) r.c_[j][i] = c_[i][j];
        return r;
    }

    bool is_symmetric() const { return *this == this->swapped().truncated(ox_, oy_); }

    enum class Which { first, second };

    /// Substitutes g (zero constant term) for one of the variables.
    BiSeries substitute(Which which, const UniSeries& g) const {
        if (!g.zero_constant_term())
            throw DomainError("substitute: series must have zero constant term");
        if (which == Which::second) return swapped().substitute(Which::first, g).swapped();
        int nx = std::min(ox_, g.order());
        BiSeries r(nx, oy_);
        UniSeries gp = UniSeries::one(nx);
        for (int e = 0; e <= std::min(ox_, nx); ++e) {
            for (int i = 0; i <= nx; ++i) {
                if (gp.at(i).is_zero()) continue;
                for (int j = 0; j <= oy_; ++j) {
                    if (c_[e][j].is_zero()) continue;
                    r.c_[i][j] += c_[e][j] * gp.at(i);
                }
            }
            if (e < nx) gp = gp * g.truncated(nx);
        }
        return r;
    }

    /// S(x, g(x)) as a univariate series; g must have zero constant term
    /// unless it is the identity.
    UniSeries collapse(const UniSeries& g) const {
        int n = std::min(ox_, g.order());
        UniSeries r(n), gp = UniSeries::one(n);
        for (int j = 0; j <= std::min(oy_, n); ++j) {
            for (int i = 0; i <= n; ++i) {
                if (c_[i][j].is_zero()) continue;
                for (int t = 0; i + t <= n; ++t) {
                    if (gp.at(t).is_zero()) continue;
                    r.at(i + t) += c_[i][j] * gp.at(t);
                }
            }
            if (j < n) gp = gp * g.truncated(n);
        }
        return r;
    }

    /// Square root with result^2 = *this up to truncation; the constant term
    /// must be a square in Q(rho) (DomainError otherwise). Branch: the one
    /// whose constant term FieldElem::sqrt returns (positive rational for
    /// rational squares).
    BiSeries sqrt() const {
        BiSeries s(ox_, oy_);
        s.c_[0][0] = c_[0][0].sqrt();
        FieldElem twice0 = FieldElem(2) * s.c_[0][0];
        if (twice0.is_zero()) throw DomainError("sqrt of series with zero constant term");
        FieldElem inv = twice0.inverse();
        for (int i = 0; i <= ox_; ++i)
            for (int j = 0; j <= oy_; ++j) {
                if (i == 0 && j == 0) continue;
                FieldElem acc = c_[i][j];
                for (int u = 0; u <= i; ++u)
                    for (int v = 0; v <= j; ++v) {
                        if ((u == 0 && v == 0) || (u == i && v == j)) continue;
                        if (s.c_[u][v].is_zero()) continue;
                        acc -= s.c_[u][v] * s.c_[i - u][j - v];
                    }
                s.c_[i][j] = acc * inv;
            }
        return s;
    }

    /// Row j=0, i.e. S(x, 0).
    UniSeries at_second_zero() const {
        UniSeries r(ox_);
        for (int i = 0; i <= ox_; ++i) r.at(i) = c_[i][0];
        return r;
    }

private:
    int ox_, oy_;
    std::vector<std::vector<FieldElem>> c_;

    static std::pair<int, int> common(const BiSeries& a, const BiSeries& b) {
        return {std::min(a.ox_, b.ox_), std::min(a.oy_, b.oy_)};
    }
};

// ---------------------------------------------------------------------------
// Catalog of the built-in P(x,y) choices and the hidden series built from
// them.
// ---------------------------------------------------------------------------

enum class PChoice { p0a, p0b, sqrt_a, sqrt_b, q_a, q_b };
enum class AFactor { one_plus_x_plus_y, one_minus_xy };

inline const char* to_string(PChoice c) {
    switch (c) {
        case PChoice::p0a: return "p0a";
        case PChoice::p0b: return "p0b";
        case PChoice::sqrt_a: return "sqrt_a";
        case PChoice::sqrt_b: return "sqrt_b";
        case PChoice::q_a: return "q_a";
        case PChoice::q_b: return "q_b";
    }
    return "?";
}

inline PChoice pchoice_from_string(const std::string& s) {
    if (s == "p0a") return PChoice::p0a;
    if (s == "p0b") return PChoice::p0b;
    if (s == "sqrt_a") return PChoice::sqrt_a;
    if (s == "sqrt_b") return PChoice::sqrt_b;
    if (s == "q_a") return PChoice::q_a;
    if (s == "q_b") return PChoice::q_b;
    throw ConfigError("unknown P choice: '" + s + "'");
}

namespace detail {

inline MultiPoly xvar() { return MultiPoly::variable("x"); }
inline MultiPoly yvar() { return MultiPoly::variable("y"); }
inline MultiPoly cst(long v) { return MultiPoly::constant(FieldElem(v)); }
inline MultiPoly rho_poly() { return MultiPoly::constant(FieldElem::rho()); }

// Coefficient-wise rho -> rho^5 = 1 - rho.
inline MultiPoly conj_coeffs(const MultiPoly& p) {
    MultiPoly r;
    for (const auto& [e, c] : p.terms()) {
        MultiPoly mono = MultiPoly::constant(c.conj());
        for (size_t i = 0; i < e.size(); ++i)
            for (int t = 0; t < e[i]; ++t) mono *= MultiPoly::variable(p.vars()[i]);
        r += mono;
    }
    return r;
}

inline MultiPoly p0a_poly() {
    auto x = xvar(), y = yvar();
    return cst(1) - (x + cst(1)) * (y + cst(1)) - rho_poly() * (x + cst(2));
}

inline MultiPoly p0b_poly() {
    auto x = xvar(), y = yvar();
    return cst(1) - (x + cst(1)) * (y + cst(1)) + rho_poly() * (x + cst(1)) * (x + cst(2));
}

inline MultiPoly one_plus_x_plus_xy() {
    auto x = xvar(), y = yvar();
    return cst(1) + x + x * y;
}

inline MultiPoly qa_poly() {
    auto x = xvar(), y = yvar();
    FieldElem rho = FieldElem::rho();
    return x * y + rho * x + rho.inverse() * y - cst(2);
}

inline MultiPoly qb_poly() {
    auto x = xvar(), y = yvar();
    FieldElem rho = FieldElem::rho();
    FieldElem half(make_rat(1, 2));
    return x * y + (FieldElem(1) + half * rho) * x + (FieldElem(1) + half * rho.inverse()) * y +
           cst(1);
}

} // namespace detail

/// Q(x,y) polynomial of the two Q-based catalog entries.
inline MultiPoly q_poly(PChoice choice) {
    if (choice == PChoice::q_a) return detail::qa_poly();
    if (choice == PChoice::q_b) return detail::qb_poly();
    throw ConfigError("q_poly: not a Q-based choice");
}

/// P(x,y) as a truncated series for every catalog entry.
inline BiSeries p_series(PChoice choice, int ox, int oy) {
    using namespace detail;
    switch (choice) {
        case PChoice::p0a:
            return BiSeries::from_poly(p0a_poly(), "x", "y", ox, oy);
        case PChoice::p0b:
            return BiSeries::from_poly(p0b_poly(), "x", "y", ox, oy);
        case PChoice::sqrt_a:
            return BiSeries::from_poly(p0a_poly() * conj_coeffs(p0a_poly()), "x", "y", ox, oy)
                .sqrt();
        case PChoice::sqrt_b:
            return BiSeries::from_poly(p0b_poly() * conj_coeffs(p0b_poly()), "x", "y", ox, oy)
                .sqrt();
        case PChoice::q_a:
            return BiSeries::from_poly(one_plus_x_plus_xy() * qa_poly(), "x", "y", ox, oy);
        case PChoice::q_b:
            return BiSeries::from_poly(one_plus_x_plus_xy() * qb_poly(), "x", "y", ox, oy);
    }
    throw ConfigError("unknown P choice");
}

inline BiSeries factor_series(AFactor f, int ox, int oy) {
    using namespace detail;
    MultiPoly p = (f == AFactor::one_plus_x_plus_y) ? cst(1) + xvar() + yvar()
                                                    : cst(1) - xvar() * yvar();
    return BiSeries::from_poly(p, "x", "y", ox, oy);
}

/// A(x,y) = factor * P(x,y) P(y,x) / (P(iota(x),y) P(iota(y),x)) for a
/// user-supplied P.
inline BiSeries hidden_series_from(const BiSeries& p, AFactor factor) {
    int ox = p.order_x(), oy = p.order_y();
    int o = std::max({ox, oy, 1});
    UniSeries iot = iota_series(o);
    BiSeries p_ix_y = p.substitute(BiSeries::Which::first, iot);   // P(iota(x), y)
    BiSeries p_iy_x = p_ix_y.swapped().truncated(ox, oy);          // P(iota(y), x)
    BiSeries num = p * p.swapped().truncated(ox, oy);
    BiSeries den = p_ix_y.truncated(ox, oy) * p_iy_x;
    return factor_series(factor, ox, oy) * (num / den);
}

/// Catalog hidden series A(x,y), truncated per variable at `order`.
inline BiSeries hidden_series(PChoice choice, AFactor factor, int order) {
    return hidden_series_from(p_series(choice, order, order), factor);
}

/// Left-hand side of the paper's residue condition on P:
/// P(x,iota(x)) P(iota(x),x) / (P(x,x) P(iota(x),iota(x))).
inline UniSeries p_residue(const BiSeries& p) {
    int o = std::min(p.order_x(), p.order_y());
    UniSeries iot = iota_series(std::max(o, 1));
    UniSeries ident = UniSeries::identity(o);
    UniSeries p_x_ix = p.collapse(iot);            // P(x, iota(x))
    UniSeries p_ix_x = p.swapped().collapse(iot);  // P(iota(x), x)
    UniSeries diag = p.collapse(ident);            // P(x, x)
    UniSeries diag_i = diag.compose(iot.truncated(o)); // P(iota(x), iota(x))
    return (p_x_ix * p_ix_x) / (diag * diag_i);
}

/// (1+x)/(1+x+x^2) as a series: the required residue for valid P choices.
inline UniSeries p_residue_target(int order) {
    UniSeries num(order), den(order);
    num.at(0) = FieldElem(1);
    if (order >= 1) num.at(1) = FieldElem(1);
    den.at(0) = FieldElem(1);
    if (order >= 1) den.at(1) = FieldElem(1);
    if (order >= 2) den.at(2) = FieldElem(1);
    return num / den;
}

/// (1+x+x^2)/((1-x)(1+2x)): the required residue for valid Q choices.
inline UniSeries q_residue_target(int order) {
    UniSeries num(order), den(order);
    num.at(0) = FieldElem(1);
    if (order >= 1) num.at(1) = FieldElem(1);
    if (order >= 2) num.at(2) = FieldElem(1);
    den.at(0) = FieldElem(1);
    if (order >= 1) den.at(1) = FieldElem(1);
    if (order >= 2) den.at(2) = FieldElem(-2);
    return num / den;
}

/// The fourfold product A(x1,x2) A(x1,iota(x2)) A(iota(x1),x2)
/// A(iota(x1),iota(x2)).
inline BiSeries fourfold_product(const BiSeries& a) {
    int ox = a.order_x(), oy = a.order_y();
    UniSeries iot = iota_series(std::max({ox, oy, 1}));
    BiSeries a_xi = a.substitute(BiSeries::Which::second, iot).truncated(ox, oy);
    BiSeries a_ix = a.substitute(BiSeries::Which::first, iot).truncated(ox, oy);
    BiSeries a_ii = a_ix.substitute(BiSeries::Which::second, iot).truncated(ox, oy);
    return a * a_xi * a_ix * a_ii;
}

/// Right-hand side of the fourfold equation:
/// (1+x+y)(1-xy)(1+x+xy)(1+y+xy) / ((1+x)^2 (1+y)^2).
inline BiSeries fourfold_target(int ox, int oy) {
    using namespace detail;
    auto x = xvar(), y = yvar();
    MultiPoly num = (cst(1) + x + y) * (cst(1) - x * y) * (cst(1) + x + x * y) *
                    (cst(1) + y + x * y);
    MultiPoly den = (cst(1) + x) * (cst(1) + x) * (cst(1) + y) * (cst(1) + y);
    return BiSeries::from_poly(num, "x", "y", ox, oy) /
           BiSeries::from_poly(den, "x", "y", ox, oy);
}

struct EquationReport {
    bool symmetric = false;
    bool unit_on_iota_diagonal = false; // A(x, iota(x)) = 1
    bool fourfold_equation = false;     // the fourfold product identity
    bool passed() const { return symmetric && unit_on_iota_diagonal && fourfold_equation; }
};

/// Series-level annihilating criteria for a candidate A.
inline EquationReport check_equation(const BiSeries& a) {
    EquationReport rep;
    if (!a.is_unit()) return rep;
    rep.symmetric = a.is_symmetric();
    int o = std::min(a.order_x(), a.order_y());
    UniSeries iot = iota_series(std::max(o, 1));
    rep.unit_on_iota_diagonal = (a.collapse(iot) == UniSeries::one(o));
    rep.fourfold_equation =
        (fourfold_product(a) == fourfold_target(a.order_x(), a.order_y()));
    return rep;
}

} // namespace gtmt
