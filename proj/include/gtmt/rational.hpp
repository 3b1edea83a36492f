#pragma once

#include <gmpxx.h>

#include <string>

#include "gtmt/errors.hpp"

namespace gtmt {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
    if (den == 0) throw DomainError("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Parses "p", "p/q" (optionally signed). Throws DomainError on malformed input.
inline Rat rat_from_string(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw DomainError("malformed rational: '" + s + "'");
    if (r.get_den() == 0) throw DomainError("rational with zero denominator: '" + s + "'");
    r.canonicalize();
    return r;
}

inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

// If r = s^2 for some rational s >= 0, stores s and returns true.
inline bool rat_sqrt(const Rat& r, Rat& root) {
    if (sgn(r) < 0) return false;
    const Int& num = r.get_num();
    const Int& den = r.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return false;
    if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return false;
    Int sn, sd;
    mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
    root = Rat(sn, sd);
    root.canonicalize();
    return true;
}

inline Rat rat_pow(const Rat& base, unsigned long e) {
    Rat r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(), e);
    return r;
}

inline Rat factorial_rat(unsigned long n) {
    Int f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rat(f);
}

} // namespace gtmt
