#pragma once

#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "blocklab/errors.hpp"

namespace blocklab {

using i64 = long long;
using u64 = unsigned long long;

inline i64 mod_reduce(i64 x, i64 m) {
    i64 r = x % m;
    return r < 0 ? r + m : r;
}

inline i64 mul_mod(i64 a, i64 b, i64 m) {
    return static_cast<i64>(static_cast<__int128>(a) * b % m);
}

inline i64 pow_mod(i64 base, i64 exp, i64 m) {
    i64 r = 1 % m;
    base = mod_reduce(base, m);
    while (exp > 0) {
        if (exp & 1) r = mul_mod(r, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return r;
}

// Extended gcd: returns g and x, y with a*x + b*y = g.
inline i64 ext_gcd(i64 a, i64 b, i64& x, i64& y) {
    if (b == 0) {
        x = 1;
        y = 0;
        return a;
    }
    i64 x1, y1;
    i64 g = ext_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

inline i64 inv_mod(i64 a, i64 m) {
    i64 x, y;
    i64 g = ext_gcd(mod_reduce(a, m), m, x, y);
    if (g != 1) throw InternalError("inv_mod: not invertible");
    return mod_reduce(x, m);
}

inline bool is_prime(i64 n) {
    if (n < 2) return false;
    for (i64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<std::pair<i64, int>> factorize(i64 n) {
    std::vector<std::pair<i64, int>> out;
    for (i64 d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            int e = 0;
            while (n % d == 0) {
                n /= d;
                ++e;
            }
            out.emplace_back(d, e);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

inline i64 euler_phi(i64 n) {
    i64 r = n;
    for (auto [p, e] : factorize(n)) r = r / p * (p - 1);
    return r;
}

inline std::vector<i64> divisors(i64 n) {
    std::vector<i64> out;
    for (i64 d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            if (d != n / d) out.push_back(n / d);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline int moebius(i64 n) {
    int mu = 1;
    for (auto [p, e] : factorize(n)) {
        if (e > 1) return 0;
        mu = -mu;
    }
    return mu;
}

// p-adic valuation of n (n != 0).
inline int valuation(i64 n, i64 p) {
    if (n == 0) throw InternalError("valuation of zero");
    if (n < 0) n = -n;
    int v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

inline i64 p_part(i64 n, i64 p) {
    i64 r = 1;
    while (n % p == 0) {
        n /= p;
        r *= p;
    }
    return r;
}

// Multiplicative order of a modulo m, gcd(a, m) = 1.
inline i64 multiplicative_order(i64 a, i64 m) {
    if (m == 1) return 1;
    a = mod_reduce(a, m);
    if (std::gcd(a, m) != 1) throw InternalError("multiplicative_order: gcd != 1");
    i64 t = 1, x = a;
    while (x != 1) {
        x = mul_mod(x, a, m);
        ++t;
        if (t > m) throw InternalError("multiplicative_order: runaway");
    }
    return t;
}

// Deterministic seeded generator used everywhere randomness is called for.
// splitmix64 is platform-independent, unlike <random> distributions.
struct SplitMix64 {
    u64 state;

    explicit SplitMix64(u64 seed) : state(seed) {}

    u64 next() {
        u64 z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound), bound > 0. Modulo bias is irrelevant here: draws
    // feed splitting heuristics and sample generation, not statistics.
    u64 below(u64 bound) { return next() % bound; }

    i64 range(i64 lo, i64 hi) {  // inclusive
        return lo + static_cast<i64>(below(static_cast<u64>(hi - lo + 1)));
    }
};

constexpr u64 kDefaultSeed = 0x424c4f434b4c4142ULL;  // "BLOCKLAB"

}  // namespace blocklab
