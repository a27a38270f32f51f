#include "blocklab/polynomial.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace blocklab {

RatPoly poly_add(const RatPoly& a, const RatPoly& b) {
    RatPoly r(std::max(a.size(), b.size()), Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    poly_trim(r);
    return r;
}

RatPoly poly_sub(const RatPoly& a, const RatPoly& b) {
    RatPoly r(std::max(a.size(), b.size()), Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    poly_trim(r);
    return r;
}

RatPoly poly_mul(const RatPoly& a, const RatPoly& b) {
    if (a.empty() || b.empty()) return {};
    RatPoly r(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    poly_trim(r);
    return r;
}

RatPoly poly_mod_monic(RatPoly a, const RatPoly& monic) {
    const std::size_t d = monic.size() - 1;
    while (a.size() > d) {
        Rat lead = a.back();
        std::size_t shift = a.size() - 1 - d;
        if (lead != 0)
            for (std::size_t i = 0; i < d; ++i) a[shift + i] -= lead * monic[i];
        a.pop_back();
    }
    poly_trim(a);
    return a;
}

void int_poly_divmod_monic(const IntPoly& a, const IntPoly& monic, IntPoly& q, IntPoly& r) {
    const std::size_t d = monic.size() - 1;
    r = a;
    q.assign(a.size() > d ? a.size() - d : 0, Int(0));
    while (r.size() > d) {
        Int lead = r.back();
        std::size_t shift = r.size() - 1 - d;
        q[shift] = lead;
        if (lead != 0)
            for (std::size_t i = 0; i < d; ++i) r[shift + i] -= lead * monic[i];
        r.pop_back();
    }
    poly_trim(q);
    poly_trim(r);
}

namespace {

// Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d; the division is exact and the
// divisors are monic, so everything stays in Z.
IntPoly compute_cyclotomic(i64 n, const std::map<i64, std::shared_ptr<const IntPoly>>& cache) {
    IntPoly num(static_cast<std::size_t>(n) + 1, Int(0));
    num[0] = -1;
    num[static_cast<std::size_t>(n)] = 1;
    for (i64 d : divisors(n)) {
        if (d == n) continue;
        const IntPoly& phi_d = *cache.at(d);
        IntPoly q, r;
        int_poly_divmod_monic(num, phi_d, q, r);
        if (!r.empty()) throw InternalError("cyclotomic polynomial division not exact");
        num = std::move(q);
    }
    return num;
}

}  // namespace

const IntPoly& cyclotomic_polynomial(i64 n) {
    static std::mutex mu;
    static std::map<i64, std::shared_ptr<const IntPoly>> cache;
    if (n < 1) throw InternalError("cyclotomic_polynomial: n < 1");
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return *it->second;
    // Divisors first, smallest to largest.
    for (i64 d : divisors(n)) {
        if (!cache.count(d)) cache[d] = std::make_shared<const IntPoly>(compute_cyclotomic(d, cache));
    }
    return *cache.at(n);
}

}  // namespace blocklab
