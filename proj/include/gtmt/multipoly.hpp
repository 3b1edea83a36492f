#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gtmt/field.hpp"

namespace gtmt {

/// Sparse multivariate polynomial over Q(rho) in named variables.
///
/// Variables are kept sorted lexically and unused variables are dropped, so
/// equal polynomials always have identical representations. No zero
/// coefficients are stored.
class MultiPoly {
public:
    using Exp = std::vector<int>;
    using TermMap = std::map<Exp, FieldElem>;

    MultiPoly() = default; // zero

    static MultiPoly constant(FieldElem c) {
        MultiPoly p;
        if (!c.is_zero()) p.terms_[{}] = std::move(c);
        return p;
    }

    static MultiPoly variable(const std::string& name) {
        MultiPoly p;
        p.vars_ = {name};
        p.terms_[{1}] = FieldElem(1);
        return p;
    }

    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return vars_.empty(); }

    FieldElem constant_value() const {
        if (terms_.empty()) return FieldElem(0);
        if (!is_constant()) throw DomainError("constant_value of non-constant polynomial");
        return terms_.begin()->second;
    }

    /// Coefficient of the constant term.
    FieldElem constant_term() const {
        Exp zero(vars_.size(), 0);
        auto it = terms_.find(zero);
        return it == terms_.end() ? FieldElem(0) : it->second;
    }

    int degree(const std::string& var) const {
        int pos = var_pos(var);
        if (pos < 0) return 0;
        int d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, e[pos]);
        return d;
    }

    int total_degree() const {
        int d = 0;
        for (const auto& [e, c] : terms_) {
            int s = 0;
            for (int x : e) s += x;
            d = std::max(d, s);
        }
        return d;
    }

    friend MultiPoly operator-(const MultiPoly& p) {
        MultiPoly r = p;
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }

    friend MultiPoly operator+(const MultiPoly& p, const MultiPoly& q) { return combined(p, q, false); }
    friend MultiPoly operator-(const MultiPoly& p, const MultiPoly& q) { return combined(p, q, true); }

    friend MultiPoly operator*(const MultiPoly& p, const MultiPoly& q) {
        if (p.is_zero() || q.is_zero()) return {};
        std::vector<std::string> uv = merged_vars(p.vars_, q.vars_);
        MultiPoly a = p.aligned(uv), b = q.aligned(uv);
        MultiPoly r;
        r.vars_ = uv;
        Exp e(uv.size());
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                for (size_t i = 0; i < uv.size(); ++i) e[i] = ea[i] + eb[i];
                FieldElem prod = ca * cb;
                auto [it, fresh] = r.terms_.try_emplace(e, prod);
                if (!fresh) {
                    it->second += prod;
                    if (it->second.is_zero()) r.terms_.erase(it);
                }
            }
        }
        r.compress();
        return r;
    }

    friend MultiPoly operator*(const FieldElem& c, const MultiPoly& p) {
        if (c.is_zero()) return {};
        MultiPoly r = p;
        for (auto& [e, v] : r.terms_) v *= c;
        return r;
    }
    friend MultiPoly operator*(const MultiPoly& p, const FieldElem& c) { return c * p; }

    MultiPoly& operator+=(const MultiPoly& q) { *this = *this + q; return *this; }
    MultiPoly& operator-=(const MultiPoly& q) { *this = *this - q; return *this; }
    MultiPoly& operator*=(const MultiPoly& q) { *this = *this * q; return *this; }

    friend bool operator==(const MultiPoly& p, const MultiPoly& q) {
        return p.vars_ == q.vars_ && p.terms_ == q.terms_;
    }
    friend bool operator!=(const MultiPoly& p, const MultiPoly& q) { return !(p == q); }

    /// Substitution var -> var + amount (E_var^amount). Exact, total.
    MultiPoly shift(const std::string& var, long amount) const {
        int pos = var_pos(var);
        if (pos < 0 || amount == 0) return *this;
        int d = degree(var);
        // row[e][i] = C(e,i) * amount^(e-i), the expansion of (v+amount)^e
        std::vector<std::vector<Rat>> row(d + 1);
        {
            std::vector<Int> apow(d + 1);
            apow[0] = 1;
            for (int i = 1; i <= d; ++i) apow[i] = apow[i - 1] * amount;
            for (int e = 0; e <= d; ++e) {
                row[e].resize(e + 1);
                Int binom = 1;
                for (int i = 0; i <= e; ++i) {
                    row[e][i] = Rat(binom * apow[e - i]);
                    binom = binom * (e - i) / (i + 1);
                }
            }
        }
        MultiPoly r;
        r.vars_ = vars_;
        for (const auto& [e, c] : terms_) {
            Exp ne = e;
            for (int i = 0; i <= e[pos]; ++i) {
                const Rat& w = row[e[pos]][i];
                if (sgn(w) == 0) continue;
                ne[pos] = i;
                FieldElem add = c * FieldElem(w);
                auto [it, fresh] = r.terms_.try_emplace(ne, add);
                if (!fresh) {
                    it->second += add;
                    if (it->second.is_zero()) r.terms_.erase(it);
                }
            }
        }
        r.compress();
        return r;
    }

    /// Forward difference p(var+1)-p(var) or backward difference p(var-1)-p(var).
    MultiPoly delta(const std::string& var, bool forward = true) const {
        return shift(var, forward ? 1 : -1) - *this;
    }

    /// Substitution var -> value (an integer).
    MultiPoly subst_int(const std::string& var, long value) const {
        int pos = var_pos(var);
        if (pos < 0) return *this;
        MultiPoly r;
        r.vars_ = vars_;
        int d = degree(var);
        std::vector<Int> vpow(d + 1);
        vpow[0] = 1;
        for (int i = 1; i <= d; ++i) vpow[i] = vpow[i - 1] * value;
        for (const auto& [e, c] : terms_) {
            Exp ne = e;
            ne[pos] = 0;
            FieldElem add = c * FieldElem(Rat(vpow[e[pos]]));
            if (add.is_zero()) continue;
            auto [it, fresh] = r.terms_.try_emplace(ne, add);
            if (!fresh) {
                it->second += add;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
        r.compress();
        return r;
    }

    /// Substitution var -> q for a polynomial q.
    MultiPoly subst(const std::string& var, const MultiPoly& q) const {
        int pos = var_pos(var);
        if (pos < 0) return *this;
        int d = degree(var);
        // split into coefficient polynomials of var^e, then Horner
        std::vector<MultiPoly> part(d + 1);
        std::vector<std::string> rest = vars_;
        rest.erase(rest.begin() + pos);
        for (int e = 0; e <= d; ++e) part[e].vars_ = rest;
        for (const auto& [e, c] : terms_) {
            Exp ne = e;
            ne.erase(ne.begin() + pos);
            part[e[pos]].terms_[ne] = c;
        }
        for (auto& pp : part) pp.compress();
        MultiPoly r = part[d];
        for (int e = d - 1; e >= 0; --e) r = r * q + part[e];
        return r;
    }

    /// Exact evaluation at an integer point. All variables must be assigned.
    FieldElem eval(const std::map<std::string, long>& assignment) const {
        std::vector<long> vals(vars_.size());
        for (size_t i = 0; i < vars_.size(); ++i) {
            auto it = assignment.find(vars_[i]);
            if (it == assignment.end())
                throw DomainError("eval: missing assignment for variable '" + vars_[i] + "'");
            vals[i] = it->second;
        }
        FieldElem acc(0);
        for (const auto& [e, c] : terms_) {
            Int m = 1;
            for (size_t i = 0; i < vals.size(); ++i) {
                if (e[i] == 0) continue;
                Int p;
                Int base(vals[i]);
                mpz_pow_ui(p.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e[i]));
                m *= p;
            }
            acc += c * FieldElem(Rat(m));
        }
        return acc;
    }

    MultiPoly pow(unsigned e) const {
        MultiPoly r = constant(FieldElem(1)), b = *this;
        while (e > 0) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    /// Leading term under graded-lex (total degree, then exponent vector).
    std::pair<Exp, FieldElem> leading_term() const {
        if (is_zero()) throw DomainError("leading_term of zero polynomial");
        auto best = terms_.begin();
        int bestdeg = deg_of(best->first);
        for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it) {
            int d = deg_of(it->first);
            if (d > bestdeg || (d == bestdeg && it->first > best->first)) {
                best = it;
                bestdeg = d;
            }
        }
        return {best->first, best->second};
    }

    /// Canonical text: terms in decreasing graded-lex order, coefficients as
    /// "p/q" or "p/q+r/s*rho".
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::vector<const std::pair<const Exp, FieldElem>*> order;
        order.reserve(terms_.size());
        for (const auto& t : terms_) order.push_back(&t);
        std::sort(order.begin(), order.end(), [](const auto* x, const auto* y) {
            int dx = deg_of(x->first), dy = deg_of(y->first);
            if (dx != dy) return dx > dy;
            return x->first > y->first;
        });
        std::string out;
        for (const auto* t : order) {
            std::string ts = term_string(t->first, t->second);
            if (out.empty()) {
                out = ts;
            } else if (!ts.empty() && ts[0] == '-') {
                out += ts;
            } else {
                out += "+" + ts;
            }
        }
        return out;
    }

private:
    std::vector<std::string> vars_;
    TermMap terms_;

    friend class PolyBuilder;

    static int deg_of(const Exp& e) {
        int s = 0;
        for (int x : e) s += x;
        return s;
    }

    int var_pos(const std::string& var) const {
        auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
        if (it == vars_.end() || *it != var) return -1;
        return static_cast<int>(it - vars_.begin());
    }

    static std::vector<std::string> merged_vars(const std::vector<std::string>& a,
                                                const std::vector<std::string>& b) {
        std::vector<std::string> u;
        std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(u));
        return u;
    }

    MultiPoly aligned(const std::vector<std::string>& uv) const {
        if (uv == vars_) return *this;
        std::vector<int> where(vars_.size());
        for (size_t i = 0; i < vars_.size(); ++i) {
            where[i] = static_cast<int>(
                std::lower_bound(uv.begin(), uv.end(), vars_[i]) - uv.begin());
        }
        MultiPoly r;
        r.vars_ = uv;
        for (const auto& [e, c] : terms_) {
            Exp ne(uv.size(), 0);
            for (size_t i = 0; i < vars_.size(); ++i) ne[where[i]] = e[i];
            r.terms_.emplace(std::move(ne), c);
        }
        return r;
    }

    static MultiPoly combined(const MultiPoly& p, const MultiPoly& q, bool subtract) {
        std::vector<std::string> uv = merged_vars(p.vars_, q.vars_);
        MultiPoly r = p.aligned(uv);
        MultiPoly b = q.aligned(uv);
        for (const auto& [e, c] : b.terms_) {
            FieldElem add = subtract ? -c : c;
            auto [it, fresh] = r.terms_.try_emplace(e, add);
            if (!fresh) {
                it->second += add;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
        r.compress();
        return r;
    }

    // Drop variables that no term uses.
    void compress() {
        if (vars_.empty()) return;
        std::vector<bool> used(vars_.size(), false);
        for (const auto& [e, c] : terms_)
            for (size_t i = 0; i < e.size(); ++i)
                if (e[i] > 0) used[i] = true;
        if (std::all_of(used.begin(), used.end(), [](bool u) { return u; })) return;
        std::vector<std::string> nv;
        for (size_t i = 0; i < vars_.size(); ++i)
            if (used[i]) nv.push_back(vars_[i]);
        TermMap nt;
        for (auto& [e, c] : terms_) {
            Exp ne;
            ne.reserve(nv.size());
            for (size_t i = 0; i < e.size(); ++i)
                if (used[i]) ne.push_back(e[i]);
            nt.emplace(std::move(ne), c);
        }
        vars_ = std::move(nv);
        terms_ = std::move(nt);
    }

    std::string term_string(const Exp& e, const FieldElem& c) const {
        std::string mono;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += vars_[i];
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty()) return c.to_string();
        if (c == FieldElem(1)) return mono;
        if (c == FieldElem(-1)) return "-" + mono;
        std::string cs = c.to_string();
        if (!c.is_rational() && !(c.rat_part() == 0)) cs = "(" + cs + ")";
        return cs + "*" + mono;
    }
};

/// Binomial coefficient C(arg, m) = arg (arg-1) ... (arg-m+1) / m! as a
/// polynomial in arg's variables; matches the integer convention for all
/// integer arguments, including negative ones.
inline MultiPoly binom_of(const MultiPoly& arg, int m) {
    if (m < 0) return {};
    MultiPoly r = MultiPoly::constant(FieldElem(1));
    for (int t = 0; t < m; ++t) r *= arg - MultiPoly::constant(FieldElem(t));
    return r * FieldElem(Rat(1) / factorial_rat(static_cast<unsigned long>(m)));
}

/// C(var + shift, m).
inline MultiPoly binom_poly(const std::string& var, int m, const MultiPoly& shift = {}) {
    return binom_of(MultiPoly::variable(var) + shift, m);
}

/// Pochhammer (arg)_n = arg (arg+1) ... (arg+n-1).
inline MultiPoly pochhammer(const MultiPoly& arg, int n) {
    MultiPoly r = MultiPoly::constant(FieldElem(1));
    for (int t = 0; t < n; ++t) r *= arg + MultiPoly::constant(FieldElem(t));
    return r;
}

/// The extended summation operator: the unique polynomial in the bound
/// variables that agrees with sum_{var=lower}^{upper} p whenever
/// lower <= upper+1, extended by
///   sum_{l=a}^{b} = -sum_{l=b+1}^{a-1} for b+1 <= a-1, and 0 for b = a-1.
/// Computed by conversion to the binomial basis in var and telescoping
///   sum_{x=a}^{b} C(x,n) = C(b+1,n+1) - C(a,n+1).
inline MultiPoly definite_sum(const MultiPoly& p, const std::string& var,
                              const MultiPoly& lower, const MultiPoly& upper) {
    if (lower.degree(var) > 0 || upper.degree(var) > 0)
        throw DomainError("definite_sum: bounds must not involve the summation variable");
    int d = p.degree(var);
    MultiPoly hi1 = upper + MultiPoly::constant(FieldElem(1));
    MultiPoly result, cur = p;
    for (int m = 0; m <= d; ++m) {
        MultiPoly coeff = cur.subst_int(var, 0); // Newton forward-difference coefficient
        if (!coeff.is_zero()) result += coeff * (binom_of(hi1, m + 1) - binom_of(lower, m + 1));
        if (m < d) cur = cur.delta(var, true);
    }
    return result;
}

} // namespace gtmt
