#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <sstream>
#include <string>

#include "crnd/errors.hpp"

namespace crnd {

// Exact rational arithmetic throughout: tightness tests (deficiency == 0,
// x_e >= 1/2) are load-bearing and must not drift.
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// gmpxx has no long long overloads; everything is in long range here.
inline Rat to_rat(long long v) { return Rat(static_cast<long>(v)); }

// Parses "3", "-1/2" or "0.25" into an exact rational.
inline Rat parse_rat(const std::string& token) {
    auto bad = [&]() -> Error { return Error("bad rational literal: '" + token + "'"); };
    if (token.empty()) throw bad();
    auto slash = token.find('/');
    if (slash != std::string::npos) {
        std::string num = token.substr(0, slash), den = token.substr(slash + 1);
        if (num.empty() || den.empty()) throw bad();
        try {
            mpz_class nz(num, 10), dz(den, 10);  // base fixed: no octal surprises
            if (dz == 0) throw bad();
            Rat r(nz, dz);
            r.canonicalize();
            return r;
        } catch (const std::invalid_argument&) {
            throw bad();
        }
    }
    auto dot = token.find('.');
    std::string digits = token;
    size_t frac_len = 0;
    if (dot != std::string::npos) {
        frac_len = token.size() - dot - 1;
        digits = token.substr(0, dot) + token.substr(dot + 1);
        if (digits.empty() || digits == "-" || digits == "+") throw bad();
    }
    try {
        mpz_class num(digits, 10);
        mpz_class den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
        Rat r(num, den);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw bad();
    }
}

// "3" for integers, "p/q" otherwise.
inline std::string rat_to_string(const Rat& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

// Fixed-point decimal rendering (round half away from zero).
inline std::string rat_to_decimal(const Rat& r, int digits = 3) {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    mpq_class scaled = r * Rat(scale);
    mpz_class num = scaled.get_num(), den = scaled.get_den();
    mpz_class q, rem;
    mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (mpz_class(2) * abs(rem) >= den) q += (sgn(scaled) < 0 ? -1 : 1);
    bool neg = q < 0;
    mpz_class aq = abs(q);
    std::string s = aq.get_str();
    while ((int)s.size() <= digits) s = "0" + s;
    std::string out = s.substr(0, s.size() - digits) + "." + s.substr(s.size() - digits);
    return (neg ? "-" : "") + out;
}

}  // namespace crnd
