#pragma once

#include <string>
#include <utility>

#include "gtmt/rational.hpp"

namespace gtmt {

/// Element of Q(rho) where rho is a primitive sixth root of unity,
/// reduced modulo rho^2 = rho - 1. Value = rat + rho_coef * rho.
class FieldElem {
public:
    FieldElem() : a_(0), b_(0) {}
    FieldElem(long v) : a_(v, 1), b_(0) {} // NOLINT: implicit by design
    FieldElem(Rat rat) : a_(std::move(rat)), b_(0) {} // NOLINT
    FieldElem(Rat rat, Rat rho_coef) : a_(std::move(rat)), b_(std::move(rho_coef)) {}

    static FieldElem rho() { return FieldElem(Rat(0), Rat(1)); }

    const Rat& rat_part() const { return a_; }
    const Rat& rho_part() const { return b_; }

    bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
    bool is_rational() const { return sgn(b_) == 0; }

    friend FieldElem operator+(const FieldElem& x, const FieldElem& y) {
        return {x.a_ + y.a_, x.b_ + y.b_};
    }
    friend FieldElem operator-(const FieldElem& x, const FieldElem& y) {
        return {x.a_ - y.a_, x.b_ - y.b_};
    }
    friend FieldElem operator-(const FieldElem& x) { return {-x.a_, -x.b_}; }
    friend FieldElem operator*(const FieldElem& x, const FieldElem& y) {
        // (a1 + b1 rho)(a2 + b2 rho), rho^2 = rho - 1
        return {x.a_ * y.a_ - x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_ + x.b_ * y.b_};
    }
    friend FieldElem operator/(const FieldElem& x, const FieldElem& y) { return x * y.inverse(); }

    FieldElem& operator+=(const FieldElem& y) { a_ += y.a_; b_ += y.b_; return *this; }
    FieldElem& operator-=(const FieldElem& y) { a_ -= y.a_; b_ -= y.b_; return *this; }
    FieldElem& operator*=(const FieldElem& y) { *this = *this * y; return *this; }

    friend bool operator==(const FieldElem& x, const FieldElem& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const FieldElem& x, const FieldElem& y) { return !(x == y); }

    // Complex conjugate: rho -> rho^5 = 1 - rho.
    FieldElem conj() const { return {a_ + b_, -b_}; }

    // Norm (a + b rho)(a + b rho^5) = a^2 + ab + b^2; zero only at zero.
    Rat norm() const { return a_ * a_ + a_ * b_ + b_ * b_; }

    FieldElem inverse() const {
        if (is_zero()) throw DomainError("division by zero in Q(rho)");
        Rat n = norm();
        return {(a_ + b_) / n, -b_ / n};
    }

    FieldElem pow(unsigned long e) const {
        FieldElem r(1), base = *this;
        while (e > 0) {
            if (e & 1) r *= base;
            base *= base;
            e >>= 1;
        }
        return r;
    }

    // Square root in Q(rho) if one exists; throws DomainError otherwise.
    // The branch is fixed by: positive rational root when the value is a
    // rational square, otherwise positive rho-coefficient.
    FieldElem sqrt() const;

    /// Canonical form "p/q" or "p/q+r/s*rho" (minus sign absorbed).
    std::string to_string() const {
        if (sgn(b_) == 0) return rat_to_string(a_);
        std::string rho_str = rat_to_string(abs(b_)) + "*rho";
        if (sgn(a_) == 0) return (sgn(b_) < 0 ? "-" : "") + rho_str;
        return rat_to_string(a_) + (sgn(b_) < 0 ? "-" : "+") + rho_str;
    }

private:
    Rat a_, b_;
};

inline FieldElem FieldElem::sqrt() const {
    const Rat& c = a_;
    const Rat& d = b_;
    if (sgn(d) == 0) {
        Rat root;
        if (rat_sqrt(c, root)) return FieldElem(root);
        // c < 0: try root = v*(2 rho - 1), since (2 rho - 1)^2 = -3.
        if (rat_sqrt(-c / 3, root)) return FieldElem(-root, 2 * root);
        throw DomainError("not a square in Q(rho): " + to_string());
    }
    // General case: (u + v rho)^2 = (u^2 - v^2) + (2uv + v^2) rho.
    // With t = u/v: (t^2-1)/(2t+1) = c/d, i.e. d t^2 - 2c t - (c+d) = 0,
    // t = (c +- N)/d with N^2 = c^2 + c d + d^2 (the norm).
    Rat nrm = norm(), big_n;
    if (rat_sqrt(nrm, big_n)) {
        for (int s : {1, -1}) {
            Rat t = (c + s * big_n) / d;
            Rat v2, v;
            if (t == 1) {
                v2 = d / 3; // u = v: v(2u+v) = 3v^2 = d
            } else if (t == -1) {
                v2 = -d; // u = -v: v(2u+v) = -v^2 = d
            } else {
                v2 = c / (t * t - 1);
            }
            if (!rat_sqrt(v2, v)) continue;
            FieldElem cand(t * v, v);
            if (cand * cand == *this) return sgn(v) >= 0 ? cand : -cand;
            cand = -cand;
            if (cand * cand == *this) return cand;
        }
    }
    throw DomainError("not a square in Q(rho): " + to_string());
}

} // namespace gtmt
