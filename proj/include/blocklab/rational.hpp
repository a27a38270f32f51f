#pragma once

#include <gmpxx.h>

#include <string>

#include "blocklab/errors.hpp"
#include "blocklab/numtheory.hpp"

namespace blocklab {

using Int = mpz_class;
using Rat = mpq_class;

// gmpxx constructors take long, not long long.
static_assert(sizeof(long) == sizeof(i64), "LP64 platform expected");

inline Int to_int(i64 v) { return Int(static_cast<long>(v)); }
inline Rat to_rat(i64 v) { return Rat(static_cast<long>(v)); }

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw DivisionByZero();
    Rat r;
    r.get_num() = num;
    r.get_den() = den;
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline int valuation(const Int& n, i64 p) {
    if (n == 0) throw InternalError("valuation of zero");
    Int m = abs(n);
    int v = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), static_cast<unsigned long>(p))) {
        m /= static_cast<unsigned long>(p);
        ++v;
    }
    return v;
}

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// Serialized as "a" for integers, "a/b" otherwise (b > 0, reduced).
inline std::string rat_to_string(const Rat& r) {
    if (is_integer(r)) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rat parse_rat(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational");
    auto check_int = [](const std::string& t) {
        if (t.empty()) throw ParseError("empty integer part in rational");
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) throw ParseError("sign without digits in rational");
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') throw ParseError("bad digit in rational: " + t);
    };
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        check_int(s);
        return Rat(Int(s, 10));
    }
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    check_int(num);
    check_int(den);
    Int d(den, 10);
    if (d == 0) throw ParseError("zero denominator in rational: " + s);
    return make_rat(Int(num, 10), d);
}

}  // namespace blocklab
