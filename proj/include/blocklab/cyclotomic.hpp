#pragma once

#include <optional>
#include <string>
#include <vector>

#include "blocklab/polynomial.hpp"

namespace blocklab {

// Largest conductor accepted anywhere (lcm ceiling for catalog exponents).
constexpr i64 kConductorCap = 10080;

// An exact element of a cyclotomic field Q(zeta_n), stored at its minimal
// conductor n over the power basis 1, zeta, ..., zeta^(phi(n)-1), reduced
// modulo the n-th cyclotomic polynomial. Two equal field elements always
// have identical (n, coeffs), so operator== is coordinate comparison.
// Values are immutable; all operations are pure.
class Cyclotomic {
public:
    Cyclotomic() : n_(1), c_{Rat(0)} {}
    Cyclotomic(const Rat& r) : n_(1), c_{r} {}
    Cyclotomic(const Int& z) : n_(1), c_{Rat(z)} {}
    Cyclotomic(long long v) : n_(1), c_{to_rat(v)} {}
    Cyclotomic(int v) : n_(1), c_{Rat(v)} {}

    // Reduce an arbitrary coefficient vector (indexed by powers of zeta_n)
    // modulo Phi_n and canonicalize to minimal conductor.
    static Cyclotomic from_coeffs(i64 n, RatPoly coeffs);

    // zeta_n^k, canonical.
    static Cyclotomic root_of_unity(i64 n, i64 k);

    i64 conductor() const { return n_; }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const { return n_ == 1; }
    Rat rational_value() const;  // requires is_rational()
    bool is_rational_integer() const;
    // Algebraic integer test: integral power-basis coordinates at minimal
    // conductor (the power basis is an integral basis of Z[zeta_n]).
    bool is_integral() const;

    Cyclotomic conj() const;       // complex conjugation zeta -> zeta^(-1)
    Cyclotomic galois(i64 k) const;  // sigma_k : zeta -> zeta^k, gcd(k, n) = 1
    Cyclotomic pow(i64 e) const;

    Cyclotomic operator-() const;
    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b);
    Cyclotomic& operator+=(const Cyclotomic& b) { return *this = *this + b; }
    Cyclotomic& operator-=(const Cyclotomic& b) { return *this = *this - b; }
    Cyclotomic& operator*=(const Cyclotomic& b) { return *this = *this * b; }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
        return a.n_ == b.n_ && a.c_ == b.c_;
    }
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    // Deterministic total order: conductor first, then coefficients.
    static int compare(const Cyclotomic& a, const Cyclotomic& b);

    // Coordinates in Q(zeta_target), target a multiple of the conductor.
    RatPoly lift_coeffs(i64 target) const;

    // Serialization: cyc(n; c0, c1, ..., c_{phi(n)-1}) with rationals a/b.
    std::string to_string() const;
    static Cyclotomic parse(const std::string& s);

private:
    struct canonical_tag {};
    Cyclotomic(i64 n, std::vector<Rat> c, canonical_tag) : n_(n), c_(std::move(c)) {}

    i64 n_;
    std::vector<Rat> c_;
};

// Images under all sigma_k, k coprime to n, in ascending k. For an element of
// a subfield, the ambient overload repeats each image [Q(zeta_n):Q(subfield)]
// times, matching the Galois orbit with multiplicity.
std::vector<Cyclotomic> galois_conjugates(const Cyclotomic& a);
std::vector<Cyclotomic> galois_conjugates(const Cyclotomic& a, i64 ambient_n);

Rat trace_to_rationals(const Cyclotomic& a);
Rat trace_to_rationals(const Cyclotomic& a, i64 ambient_n);
// trace / phi(conductor); independent of the ambient field.
Rat average_of_conjugates(const Cyclotomic& a);

Cyclotomic norm_abs_squared(const Cyclotomic& a);  // a * conj(a)

// Exact sign of a real cyclotomic number (conj(a) == a required), via
// isolating-interval refinement with rational endpoints. No floating point.
int sign_of_real(const Cyclotomic& a);

// Every Galois conjugate real and > 0, decided exactly.
bool is_totally_positive(const Cyclotomic& a);

bool is_root_of_unity(const Cyclotomic& a);
// Multiplicative order when a is a root of unity, nullopt otherwise.
std::optional<i64> root_of_unity_order(const Cyclotomic& a);

struct SiegelResult {
    enum class Kind { IsOne, AverageAtLeastThreeHalves, NotTotallyPositive };
    Kind kind;
    Rat average;  // set when kind == AverageAtLeastThreeHalves
};

// Cassels/Siegel bound for totally positive cyclotomic integers: alpha != 1
// implies the conjugate average is >= 3/2. A violation throws SiegelViolation.
// Throws NotAlgebraicInteger for non-integral input.
SiegelResult siegel_bound_check(const Cyclotomic& alpha);

struct RootSumResult {
    bool is_zero;
    std::size_t term_count;
    bool count_divisible_by_p;  // meaningful when is_zero
};

// Checks a sum of p-power roots of unity: if it vanishes, the number of
// terms must be a multiple of p. Throws NotPPowerRoot on bad terms.
RootSumResult p_power_root_sum_check(const std::vector<Cyclotomic>& eps, i64 p);

}  // namespace blocklab
