#include "blocklab/finite_field.hpp"

#include <algorithm>

namespace blocklab {

namespace {

void fp_trim(FpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

FpPoly fp_make_monic(FpPoly a, i64 p) {
    fp_trim(a);
    if (a.empty()) return a;
    i64 inv = inv_mod(a.back(), p);
    for (auto& c : a) c = mul_mod(c, inv, p);
    return a;
}

FpPoly fp_add(const FpPoly& a, const FpPoly& b, i64 p) {
    FpPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + b[i]) % p;
    fp_trim(r);
    return r;
}

}  // namespace

FpPoly fp_poly_mul(const FpPoly& a, const FpPoly& b, i64 p) {
    if (a.empty() || b.empty()) return {};
    FpPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + static_cast<__int128>(a[i]) * b[j]) % p;
    }
    fp_trim(r);
    return r;
}

FpPoly fp_poly_mod(FpPoly a, const FpPoly& m, i64 p) {
    fp_trim(a);
    if (m.empty()) throw InternalError("fp_poly_mod by zero");
    i64 lead_inv = inv_mod(m.back(), p);
    while (a.size() >= m.size()) {
        i64 f = mul_mod(a.back(), lead_inv, p);
        std::size_t shift = a.size() - m.size();
        if (f != 0)
            for (std::size_t i = 0; i < m.size(); ++i)
                a[shift + i] = mod_reduce(a[shift + i] - mul_mod(f, m[i], p), p);
        a.pop_back();
        fp_trim(a);
        if (a.size() < m.size()) break;
    }
    return a;
}

FpPoly fp_poly_gcd(FpPoly a, FpPoly b, i64 p) {
    fp_trim(a);
    fp_trim(b);
    while (!b.empty()) {
        FpPoly r = fp_poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return fp_make_monic(std::move(a), p);
}

FpPoly fp_poly_powmod(const FpPoly& base, const Int& exp, const FpPoly& m, i64 p) {
    FpPoly result = {1};
    FpPoly b = fp_poly_mod(base, m, p);
    std::size_t bits = mpz_sizeinbase(exp.get_mpz_t(), 2);
    if (exp == 0) return result;
    for (std::size_t i = bits; i-- > 0;) {
        result = fp_poly_mod(fp_poly_mul(result, result, p), m, p);
        if (mpz_tstbit(exp.get_mpz_t(), static_cast<mp_bitcnt_t>(i)))
            result = fp_poly_mod(fp_poly_mul(result, b, p), m, p);
    }
    return result;
}

FpPoly cyclotomic_mod_p(i64 n, i64 p) {
    const IntPoly& phi = cyclotomic_polynomial(n);
    FpPoly out(phi.size());
    for (std::size_t i = 0; i < phi.size(); ++i) {
        Int r = phi[i] % to_int(p);
        if (r < 0) r += to_int(p);
        out[i] = r.get_si();
    }
    fp_trim(out);
    return out;
}

namespace {

// Equal-degree splitting (Cantor-Zassenhaus); every irreducible factor of
// the input has degree f. Randomness is seeded, and the caller sorts, so the
// output is canonical either way.
void equal_degree_factor(const FpPoly& poly, i64 f, i64 p, SplitMix64& rng, std::vector<FpPoly>& out) {
    i64 deg = static_cast<i64>(poly.size()) - 1;
    if (deg == f) {
        out.push_back(fp_make_monic(poly, p));
        return;
    }
    for (;;) {
        FpPoly a(static_cast<std::size_t>(deg), 0);
        for (auto& c : a) c = static_cast<i64>(rng.below(static_cast<u64>(p)));
        fp_trim(a);
        if (a.size() <= 1) continue;  // constants never split
        FpPoly b;
        if (p == 2) {
            // Trace map over F_{2^f}: a + a^2 + ... + a^(2^(f-1)).
            FpPoly t = fp_poly_mod(a, poly, p);
            FpPoly acc = t;
            for (i64 i = 1; i < f; ++i) {
                t = fp_poly_mod(fp_poly_mul(t, t, p), poly, p);
                acc = fp_add(acc, t, p);
            }
            b = acc;
        } else {
            Int e = (int_pow(to_int(p), static_cast<unsigned long>(f)) - 1) / 2;
            b = fp_poly_powmod(a, e, poly, p);
            if (b.empty())
                b = {p - 1};
            else
                b[0] = mod_reduce(b[0] - 1, p);
            fp_trim(b);
        }
        if (b.empty()) continue;
        FpPoly g = fp_poly_gcd(poly, b, p);
        i64 gd = static_cast<i64>(g.size()) - 1;
        if (gd <= 0 || gd >= deg) continue;
        // exact division poly / g
        FpPoly quot;
        {
            FpPoly rem = poly;
            fp_trim(rem);
            quot.assign(rem.size() - g.size() + 1, 0);
            i64 lead_inv = inv_mod(g.back(), p);
            while (rem.size() >= g.size() && !rem.empty()) {
                i64 fcoef = mul_mod(rem.back(), lead_inv, p);
                std::size_t shift = rem.size() - g.size();
                quot[shift] = fcoef;
                for (std::size_t i = 0; i < g.size(); ++i)
                    rem[shift + i] = mod_reduce(rem[shift + i] - mul_mod(fcoef, g[i], p), p);
                fp_trim(rem);
            }
            if (!rem.empty()) throw InternalError("equal-degree split: division not exact");
        }
        equal_degree_factor(g, f, p, rng, out);
        equal_degree_factor(quot, f, p, rng, out);
        return;
    }
}

}  // namespace

std::vector<FpPoly> factor_cyclotomic_mod_p(i64 m, i64 p) {
    if (m % p == 0) throw Error("factor_cyclotomic_mod_p: p divides m");
    FpPoly phi = cyclotomic_mod_p(m, p);
    if (m == 1) return {fp_make_monic(phi, p)};
    i64 f = multiplicative_order(p, m);
    std::vector<FpPoly> out;
    SplitMix64 rng(kDefaultSeed ^ static_cast<u64>(m * 1315423911LL) ^ static_cast<u64>(p));
    equal_degree_factor(fp_make_monic(std::move(phi), p), f, p, rng, out);
    std::sort(out.begin(), out.end());
    return out;
}

IdealEmbedding::IdealEmbedding(i64 p, i64 n, std::size_t factor_index) : p_(p), n_(n) {
    if (!is_prime(p)) throw Error("IdealEmbedding: p must be prime");
    if (n < 1) throw Error("IdealEmbedding: bad conductor");
    nprime_ = n;
    while (nprime_ % p == 0) nprime_ /= p;
    auto factors = factor_cyclotomic_mod_p(nprime_, p);
    factor_count_ = factors.size();
    if (factor_index >= factors.size()) throw Error("IdealEmbedding: factor index out of range");
    modulus_ = factors[factor_index];
    f_ = static_cast<i64>(modulus_.size()) - 1;
    if (nprime_ > 1 && f_ != multiplicative_order(p, nprime_))
        throw InternalError("IdealEmbedding: unexpected residue degree");
}

std::vector<i64> IdealEmbedding::embed(const Cyclotomic& alpha) const {
    if (!alpha.is_integral()) throw NotIntegral(alpha.to_string());
    if (n_ % alpha.conductor() != 0) throw Error("embed: conductor does not divide embedding conductor");
    i64 step = n_ / alpha.conductor();
    // zeta_{conductor}^j = zeta_n^(j*step) |-> x^(j*step mod n'), since the
    // p-power part of zeta_n collapses to 1.
    FpPoly acc(static_cast<std::size_t>(std::max<i64>(nprime_, 1)), 0);
    const auto& c = alpha.coeffs();
    for (std::size_t j = 0; j < c.size(); ++j) {
        if (c[j] == 0) continue;
        Int r = c[j].get_num() % to_int(p_);
        if (r < 0) r += to_int(p_);
        i64 coef = r.get_si();
        if (coef == 0) continue;
        std::size_t e = static_cast<std::size_t>(mod_reduce(static_cast<i64>(j) * step, std::max<i64>(nprime_, 1)));
        acc[e] = (acc[e] + coef) % p_;
    }
    FpPoly reduced = fp_poly_mod(std::move(acc), modulus_, p_);
    reduced.resize(static_cast<std::size_t>(f_), 0);
    return reduced;
}

}  // namespace blocklab
