#pragma once

#include <vector>

#include "blocklab/rational.hpp"

namespace blocklab {

// Dense polynomials, coefficient of x^i at index i, no trailing zeros.
using RatPoly = std::vector<Rat>;
using IntPoly = std::vector<Int>;

inline void poly_trim(RatPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline void poly_trim(IntPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

RatPoly poly_add(const RatPoly& a, const RatPoly& b);
RatPoly poly_sub(const RatPoly& a, const RatPoly& b);
RatPoly poly_mul(const RatPoly& a, const RatPoly& b);

// Remainder of a modulo a monic divisor.
RatPoly poly_mod_monic(RatPoly a, const RatPoly& monic);

// Quotient/remainder for monic divisors with integer coefficients.
void int_poly_divmod_monic(const IntPoly& a, const IntPoly& monic, IntPoly& q, IntPoly& r);

// n-th cyclotomic polynomial over Z, cached. Thread-safe.
const IntPoly& cyclotomic_polynomial(i64 n);

}  // namespace blocklab
