#pragma once

#include <vector>

#include "blocklab/cyclotomic.hpp"

namespace blocklab {

// Polynomials over F_p: int64 coefficients in [0, p), no trailing zeros.
using FpPoly = std::vector<i64>;

FpPoly fp_poly_mul(const FpPoly& a, const FpPoly& b, i64 p);
FpPoly fp_poly_mod(FpPoly a, const FpPoly& m, i64 p);
FpPoly fp_poly_gcd(FpPoly a, FpPoly b, i64 p);  // monic
FpPoly fp_poly_powmod(const FpPoly& base, const Int& exp, const FpPoly& m, i64 p);

// The n-th cyclotomic polynomial reduced mod p.
FpPoly cyclotomic_mod_p(i64 n, i64 p);

// All monic irreducible factors of Phi_m mod p for gcd(m, p) = 1; every
// factor has degree ord_m(p). Sorted by coefficient tuple (constant term
// first), which makes the result canonical. Deterministic.
std::vector<FpPoly> factor_cyclotomic_mod_p(i64 m, i64 p);

// A ring homomorphism Z[zeta_n] -> F_{p^f} whose kernel is a maximal ideal
// over p: zeta_n maps to a primitive n'-th root of unity (n' the p'-part of
// n), so every p-power root of unity maps to 1. The target field is
// F_p[x]/(g) for the factor_index-th irreducible factor g of Phi_{n'} mod p
// (index 0 = lexicographically least).
class IdealEmbedding {
public:
    IdealEmbedding(i64 p, i64 n, std::size_t factor_index = 0);

    i64 p() const { return p_; }
    i64 n() const { return n_; }
    i64 p_prime_part() const { return nprime_; }
    i64 residue_degree() const { return f_; }
    const FpPoly& modulus() const { return modulus_; }
    std::size_t factor_count() const { return factor_count_; }

    // Image of alpha in F_{p^f} as a coefficient vector of length f.
    // Requires integral coordinates and conductor dividing n.
    std::vector<i64> embed(const Cyclotomic& alpha) const;

private:
    i64 p_, n_, nprime_, f_;
    std::size_t factor_count_;
    FpPoly modulus_;
};

}  // namespace blocklab
