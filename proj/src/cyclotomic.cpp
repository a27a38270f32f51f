#include "blocklab/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

namespace blocklab {

namespace {

RatPoly phi_as_rat(i64 n) {
    const IntPoly& phi = cyclotomic_polynomial(n);
    RatPoly out(phi.size());
    for (std::size_t i = 0; i < phi.size(); ++i) out[i] = Rat(phi[i]);
    return out;
}

// Coefficient vector reduced mod Phi_n and padded to length phi(n).
std::vector<Rat> reduce_mod_phi(RatPoly p, i64 n) {
    std::size_t deg = static_cast<std::size_t>(euler_phi(n));
    if (p.size() > deg) p = poly_mod_monic(std::move(p), phi_as_rat(n));
    p.resize(deg, Rat(0));
    return p;
}

// Solver for rewriting an element of Q(zeta_n) in the power basis of the
// subfield Q(zeta_m), m | n. The column matrix has full column rank (powers
// of zeta_m are independent over Q), so the system has at most one solution;
// inconsistency means the element does not lie in the subfield.
struct DescentSolver {
    std::size_t rows, cols;
    std::vector<std::vector<Rat>> transform;  // rows x rows
    std::vector<std::vector<Rat>> echelon;    // rows x cols, reduced
    std::vector<std::size_t> pivot_row;       // per column

    DescentSolver(i64 n, i64 m) {
        rows = static_cast<std::size_t>(euler_phi(n));
        cols = static_cast<std::size_t>(euler_phi(m));
        std::vector<std::vector<Rat>> a(rows, std::vector<Rat>(cols, Rat(0)));
        for (std::size_t j = 0; j < cols; ++j) {
            RatPoly col(static_cast<std::size_t>(j) * static_cast<std::size_t>(n / m) + 1, Rat(0));
            col.back() = 1;  // zeta_m^j = zeta_n^(j * n/m)
            auto red = reduce_mod_phi(std::move(col), n);
            for (std::size_t i = 0; i < rows; ++i) a[i][j] = red[i];
        }
        transform.assign(rows, std::vector<Rat>(rows, Rat(0)));
        for (std::size_t i = 0; i < rows; ++i) transform[i][i] = 1;
        echelon = std::move(a);
        pivot_row.assign(cols, 0);
        std::size_t next_row = 0;
        for (std::size_t col = 0; col < cols; ++col) {
            std::size_t pr = next_row;
            while (pr < rows && echelon[pr][col] == 0) ++pr;
            if (pr == rows) throw InternalError("descent matrix not full rank");
            std::swap(echelon[pr], echelon[next_row]);
            std::swap(transform[pr], transform[next_row]);
            Rat inv = 1 / echelon[next_row][col];
            for (auto& v : echelon[next_row]) v *= inv;
            for (auto& v : transform[next_row]) v *= inv;
            for (std::size_t r = 0; r < rows; ++r) {
                if (r == next_row || echelon[r][col] == 0) continue;
                Rat f = echelon[r][col];
                for (std::size_t j = col; j < cols; ++j) echelon[r][j] -= f * echelon[next_row][j];
                for (std::size_t j = 0; j < rows; ++j) transform[r][j] -= f * transform[next_row][j];
            }
            pivot_row[col] = next_row;
            ++next_row;
        }
    }

    std::optional<std::vector<Rat>> solve(const std::vector<Rat>& c) const {
        std::vector<Rat> t(rows, Rat(0));
        for (std::size_t i = 0; i < rows; ++i) {
            for (std::size_t j = 0; j < rows; ++j) {
                if (transform[i][j] != 0 && c[j] != 0) t[i] += transform[i][j] * c[j];
            }
        }
        for (std::size_t i = cols; i < rows; ++i)
            if (t[i] != 0) return std::nullopt;
        std::vector<Rat> x(cols);
        for (std::size_t col = 0; col < cols; ++col) x[col] = t[pivot_row[col]];
        return x;
    }
};

const DescentSolver& descent_solver(i64 n, i64 m) {
    static std::mutex mu;
    static std::map<std::pair<i64, i64>, std::shared_ptr<const DescentSolver>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(n, m);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, std::make_shared<const DescentSolver>(n, m)).first;
    return *it->second;
}

// sigma_k applied to raw coordinates at conductor n (no canonicalization).
std::vector<Rat> galois_raw(const std::vector<Rat>& c, i64 n, i64 k) {
    RatPoly p(static_cast<std::size_t>(n), Rat(0));
    for (std::size_t j = 0; j < c.size(); ++j) {
        if (c[j] == 0) continue;
        p[static_cast<std::size_t>(mod_reduce(static_cast<i64>(j) * k, n))] += c[j];
    }
    return reduce_mod_phi(std::move(p), n);
}

std::pair<i64, std::vector<Rat>> canonicalize(i64 n, std::vector<Rat> c) {
    for (;;) {
        bool rational = true;
        for (std::size_t j = 1; j < c.size(); ++j)
            if (c[j] != 0) {
                rational = false;
                break;
            }
        if (rational) {
            Rat v = c.empty() ? Rat(0) : c[0];
            return {1, {v}};
        }
        bool descended = false;
        for (auto [p, e] : factorize(n)) {
            i64 m = n / p;
            auto sol = descent_solver(n, m).solve(c);
            if (sol) {
                n = m;
                c = std::move(*sol);
                descended = true;
                break;
            }
        }
        if (!descended) return {n, std::move(c)};
    }
}

// ---- exact real-interval machinery for sign determination ----

struct RatInterval {
    Rat lo, hi;
};

Rat two_pow_neg(int bits) { return make_rat(Int(1), int_pow(Int(2), static_cast<unsigned long>(bits))); }

// arctan(1/x) for integer x >= 2, alternating series; partial sums bracket.
RatInterval atan_inv_bounds(long x, int prec) {
    Rat eps = two_pow_neg(prec + 4);
    Rat sum(0);
    Rat xpow = make_rat(Int(1), Int(x));  // (1/x)^(2i+1)
    Rat x2 = make_rat(Int(1), Int(x) * Int(x));
    bool plus = true;
    for (long i = 0;; ++i) {
        Rat term = xpow / Rat(2 * i + 1);
        if (term < eps) {
            // Next term bounds the truncation error; series alternates.
            return plus ? RatInterval{sum, sum + term} : RatInterval{sum - term, sum};
        }
        sum += plus ? term : -term;
        plus = !plus;
        xpow *= x2;
    }
}

RatInterval pi_interval(int prec) {
    // Machin: pi = 16 atan(1/5) - 4 atan(1/239).
    RatInterval a5 = atan_inv_bounds(5, prec + 6);
    RatInterval a239 = atan_inv_bounds(239, prec + 6);
    return {Rat(16) * a5.lo - Rat(4) * a239.hi, Rat(16) * a5.hi - Rat(4) * a239.lo};
}

// cos at an exact rational point r, |r| <= 4, with Lagrange remainder bound.
RatInterval cos_point(const Rat& r, int prec) {
    Rat eps = two_pow_neg(prec + 2);
    Rat r2 = r * r;
    Rat term(1);  // r^(2m) / (2m)!
    Rat sum(0);
    for (long m = 0;; ++m) {
        if (term < eps && term > -eps) {
            Rat bound = abs(term);
            return {sum - bound, sum + bound};
        }
        sum += (m % 2 == 0) ? term : -term;
        term = term * r2 / Rat((2 * m + 1) * (2 * m + 2));
    }
}

// Enclosure of cos(2 pi j / n) in fixed point: the value lies in
// [lo, hi] / 2^prec. Integer endpoints keep the sign accumulation in plain
// mpz arithmetic, with outward rounding preserving rigor.
struct FixedInterval {
    Int lo, hi;
};

Int floor_scaled(const Rat& r, int prec) {
    Int num = r.get_num();
    mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), static_cast<mp_bitcnt_t>(prec));
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), r.get_den().get_mpz_t());
    return q;
}

Int ceil_scaled(const Rat& r, int prec) {
    Int num = r.get_num();
    mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), static_cast<mp_bitcnt_t>(prec));
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), r.get_den().get_mpz_t());
    return q;
}

const std::vector<FixedInterval>& cos_table(i64 n, int prec) {
    static std::mutex mu;
    static std::map<std::pair<i64, int>, std::shared_ptr<const std::vector<FixedInterval>>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(n, prec);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;

    RatInterval pi = pi_interval(prec + 8);
    auto tbl = std::make_shared<std::vector<FixedInterval>>();
    tbl->reserve(static_cast<std::size_t>(n));
    for (i64 j = 0; j < n; ++j) {
        i64 jj = std::min(j, n - j);  // cos symmetric about pi
        Rat a = to_rat(2 * jj) * pi.lo / to_rat(n);
        Rat b = to_rat(2 * jj) * pi.hi / to_rat(n);
        RatInterval at_a = cos_point(a, prec + 2);
        Rat w = b - a;  // |cos'(t)| <= 1
        tbl->push_back({floor_scaled(at_a.lo - w, prec), ceil_scaled(at_a.hi + w, prec)});
    }
    it = cache.emplace(key, std::move(tbl)).first;
    return *it->second;
}

// Sign of sum c_j cos(2 pi j / n), known nonzero. Coefficients are cleared
// to integers first; positive scaling does not change the sign.
int sign_by_intervals(const std::vector<Rat>& c, i64 n) {
    Int scale(1);
    for (const auto& v : c)
        if (v != 0) scale = lcm(scale, v.get_den());
    std::vector<Int> ci(c.size());
    for (std::size_t j = 0; j < c.size(); ++j) ci[j] = c[j].get_num() * (scale / c[j].get_den());

    for (int prec = 48; prec <= 6144; prec *= 2) {
        const auto& tbl = cos_table(n, prec);
        Int lo(0), hi(0);
        for (std::size_t j = 0; j < ci.size(); ++j) {
            const Int& cj = ci[j];
            if (cj == 0) continue;
            const FixedInterval& iv = tbl[j];
            if (cj > 0) {
                lo += cj * iv.lo;
                hi += cj * iv.hi;
            } else {
                lo += cj * iv.hi;
                hi += cj * iv.lo;
            }
        }
        if (lo > 0) return 1;
        if (hi < 0) return -1;
    }
    throw InternalError("sign determination did not converge");
}

}  // namespace

Cyclotomic Cyclotomic::from_coeffs(i64 n, RatPoly coeffs) {
    if (n < 1) throw Error("conductor must be >= 1");
    if (n > kConductorCap) throw TooLarge("conductor " + std::to_string(n));
    auto reduced = reduce_mod_phi(std::move(coeffs), n);
    auto [cn, cc] = canonicalize(n, std::move(reduced));
    return Cyclotomic(cn, std::move(cc), canonical_tag{});
}

Cyclotomic Cyclotomic::root_of_unity(i64 n, i64 k) {
    if (n < 1) throw Error("root_of_unity: n must be >= 1");
    if (n > kConductorCap) throw TooLarge("conductor " + std::to_string(n));
    k = mod_reduce(k, n);
    i64 g = std::gcd(k == 0 ? n : k, n);
    i64 m = n / g;      // order of zeta_n^k
    i64 e = (k / g) % m;  // zeta_n^k = zeta_m^e, gcd(e, m) = 1
    bool negate = false;
    if (m == 1) return Cyclotomic(1);
    if (m == 2) return Cyclotomic(-1);
    if (m % 4 == 2) {
        // zeta_m = -zeta_{m'}^((m'+1)/2) for odd m' = m/2.
        i64 mp = m / 2;
        negate = (e % 2 == 1);
        e = mod_reduce(e * ((mp + 1) / 2), mp);
        m = mp;
        if (m == 1) return Cyclotomic(negate ? -1 : 1);
    }
    RatPoly p(static_cast<std::size_t>(e) + 1, Rat(0));
    p.back() = negate ? Rat(-1) : Rat(1);
    // A primitive m-th root (m not 2 mod 4) already has minimal conductor m.
    return Cyclotomic(m, reduce_mod_phi(std::move(p), m), canonical_tag{});
}

bool Cyclotomic::is_zero() const {
    for (const auto& v : c_)
        if (v != 0) return false;
    return true;
}

Rat Cyclotomic::rational_value() const {
    if (n_ != 1) throw Error("rational_value on non-rational element");
    return c_[0];
}

bool Cyclotomic::is_rational_integer() const { return n_ == 1 && is_integer(c_[0]); }

bool Cyclotomic::is_integral() const {
    for (const auto& v : c_)
        if (!is_integer(v)) return false;
    return true;
}

Cyclotomic Cyclotomic::conj() const { return n_ == 1 ? *this : galois(n_ - 1); }

Cyclotomic Cyclotomic::galois(i64 k) const {
    if (n_ == 1) return *this;
    k = mod_reduce(k, n_);
    if (std::gcd(k, n_) != 1) throw Error("galois: k not coprime to conductor");
    // The image has the same minimal conductor, so no descent is needed.
    return Cyclotomic(n_, galois_raw(c_, n_, k), canonical_tag{});
}

Cyclotomic Cyclotomic::pow(i64 e) const {
    if (e < 0) return (Cyclotomic(1) / *this).pow(-e);
    Cyclotomic result(1);
    Cyclotomic base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

Cyclotomic Cyclotomic::operator-() const {
    std::vector<Rat> c = c_;
    for (auto& v : c) v = -v;
    return Cyclotomic(n_, std::move(c), canonical_tag{});
}

RatPoly Cyclotomic::lift_coeffs(i64 target) const {
    if (target % n_ != 0) throw Error("lift_coeffs: target not a multiple of conductor");
    if (target == n_) return c_;
    i64 step = target / n_;
    RatPoly p(static_cast<std::size_t>(target), Rat(0));
    for (std::size_t j = 0; j < c_.size(); ++j)
        if (c_[j] != 0) p[j * static_cast<std::size_t>(step)] += c_[j];
    return reduce_mod_phi(std::move(p), target);
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    i64 l = std::lcm(a.n_, b.n_);
    if (l > kConductorCap) throw TooLarge("conductor " + std::to_string(l));
    auto ca = a.lift_coeffs(l);
    auto cb = b.lift_coeffs(l);
    for (std::size_t i = 0; i < ca.size(); ++i) ca[i] += cb[i];
    auto [cn, cc] = canonicalize(l, std::move(ca));
    return Cyclotomic(cn, std::move(cc), Cyclotomic::canonical_tag{});
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    i64 l = std::lcm(a.n_, b.n_);
    if (l > kConductorCap) throw TooLarge("conductor " + std::to_string(l));
    RatPoly pa = a.lift_coeffs(l);
    RatPoly pb = b.lift_coeffs(l);
    poly_trim(pa);
    poly_trim(pb);
    auto prod = reduce_mod_phi(poly_mul(pa, pb), l);
    auto [cn, cc] = canonicalize(l, std::move(prod));
    return Cyclotomic(cn, std::move(cc), Cyclotomic::canonical_tag{});
}

Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) {
    if (b.is_zero()) throw DivisionByZero();
    if (b.n_ == 1) {
        std::vector<Rat> c = a.c_;
        for (auto& v : c) v /= b.c_[0];
        return Cyclotomic(a.n_, std::move(c), Cyclotomic::canonical_tag{});
    }
    // Inverse via extended Euclid in Q[x]: Phi_n is irreducible, so any
    // nonzero residue is a unit mod Phi_n.
    RatPoly r0 = phi_as_rat(b.n_), r1 = b.c_;
    poly_trim(r1);
    RatPoly s0 = {}, s1 = {Rat(1)};  // s tracks the coefficient of b in r
    while (!r1.empty() && r1.size() > 1) {
        // divide r0 by r1
        RatPoly q;
        RatPoly rem = r0;
        while (rem.size() >= r1.size() && !rem.empty()) {
            std::size_t shift = rem.size() - r1.size();
            Rat f = rem.back() / r1.back();
            if (q.size() < shift + 1) q.resize(shift + 1, Rat(0));
            q[shift] += f;
            for (std::size_t i = 0; i < r1.size(); ++i) rem[shift + i] -= f * r1[i];
            poly_trim(rem);
        }
        RatPoly s2 = poly_sub(s0, poly_mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r1.empty()) throw InternalError("cyclotomic inverse: gcd degenerated");
    // r1 is a nonzero constant: b * s1 = r1 (mod Phi), so b^{-1} = s1 / r1.
    Rat inv_const = 1 / r1[0];
    for (auto& v : s1) v *= inv_const;
    Cyclotomic binv = Cyclotomic::from_coeffs(b.n_, std::move(s1));
    return a * binv;
}

int Cyclotomic::compare(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_ ? -1 : 1;
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        int c = cmp(a.c_[i], b.c_[i]);
        if (c != 0) return c;
    }
    return 0;
}

std::string Cyclotomic::to_string() const {
    std::ostringstream os;
    os << "cyc(" << n_ << ";";
    for (std::size_t i = 0; i < c_.size(); ++i) os << (i == 0 ? " " : ", ") << rat_to_string(c_[i]);
    os << ")";
    return os.str();
}

Cyclotomic Cyclotomic::parse(const std::string& s) {
    auto fail = [&]() -> void { throw ParseError("bad cyclotomic literal: " + s); };
    std::size_t open = s.find('(');
    if (s.substr(0, 3) != "cyc" || open == std::string::npos || s.back() != ')') fail();
    std::string body = s.substr(open + 1, s.size() - open - 2);
    std::size_t semi = body.find(';');
    if (semi == std::string::npos) fail();
    std::string nstr = body.substr(0, semi);
    i64 n = 0;
    try {
        std::size_t used = 0;
        n = std::stoll(nstr, &used);
        while (used < nstr.size() && nstr[used] == ' ') ++used;
        if (used != nstr.size()) fail();
    } catch (const std::exception&) {
        fail();
    }
    if (n < 1 || n > kConductorCap) fail();
    RatPoly coeffs;
    std::string rest = body.substr(semi + 1);
    std::size_t pos = 0;
    while (pos <= rest.size()) {
        std::size_t comma = rest.find(',', pos);
        std::string tok = rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        std::size_t b = tok.find_first_not_of(" \t");
        std::size_t e = tok.find_last_not_of(" \t");
        if (b == std::string::npos) fail();
        coeffs.push_back(parse_rat(tok.substr(b, e - b + 1)));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (coeffs.size() != static_cast<std::size_t>(euler_phi(n))) fail();
    return from_coeffs(n, std::move(coeffs));
}

std::vector<Cyclotomic> galois_conjugates(const Cyclotomic& a) {
    std::vector<Cyclotomic> out;
    i64 n = a.conductor();
    for (i64 k = 1; k <= n; ++k) {
        if (std::gcd(k, n) != 1) continue;
        out.push_back(a.galois(k));
    }
    return out;
}

std::vector<Cyclotomic> galois_conjugates(const Cyclotomic& a, i64 ambient_n) {
    if (ambient_n % a.conductor() != 0) throw Error("ambient conductor not a multiple");
    std::vector<Cyclotomic> out;
    for (i64 k = 1; k <= ambient_n; ++k) {
        if (std::gcd(k, ambient_n) != 1) continue;
        out.push_back(a.galois(k));
    }
    return out;
}

Rat trace_to_rationals(const Cyclotomic& a) {
    // Tr(zeta_n^j) = mu(d) phi(n)/phi(d) with d = n/gcd(j, n).
    i64 n = a.conductor();
    if (n == 1) return a.coeffs()[0];
    i64 phi_n = euler_phi(n);
    Rat t(0);
    const auto& c = a.coeffs();
    for (std::size_t j = 0; j < c.size(); ++j) {
        if (c[j] == 0) continue;
        i64 d = n / std::gcd<i64>(static_cast<i64>(j), n);
        int mu = moebius(d);
        if (mu == 0) continue;
        t += c[j] * to_rat(mu * (phi_n / euler_phi(d)));
    }
    return t;
}

Rat trace_to_rationals(const Cyclotomic& a, i64 ambient_n) {
    if (ambient_n % a.conductor() != 0) throw Error("ambient conductor not a multiple");
    i64 ratio = euler_phi(ambient_n) / euler_phi(a.conductor());
    return trace_to_rationals(a) * to_rat(ratio);
}

Rat average_of_conjugates(const Cyclotomic& a) {
    return trace_to_rationals(a) / to_rat(euler_phi(a.conductor()));
}

Cyclotomic norm_abs_squared(const Cyclotomic& a) { return a * a.conj(); }

int sign_of_real(const Cyclotomic& a) {
    if (a.conj() != a) throw Error("sign_of_real: value is not real");
    if (a.is_zero()) return 0;
    if (a.is_rational()) return sgn(a.rational_value());
    return sign_by_intervals(a.coeffs(), a.conductor());
}

bool is_totally_positive(const Cyclotomic& a) {
    if (a.is_zero()) return false;
    if (a.is_rational()) return a.rational_value() > 0;
    if (a.conj() != a) return false;  // not real, and then no conjugate is real
    i64 n = a.conductor();
    // sigma_k and sigma_{n-k} agree on real elements.
    for (i64 k = 1; 2 * k <= n; ++k) {
        if (std::gcd(k, n) != 1) continue;
        Cyclotomic im = a.galois(k);
        if (im.is_rational()) {
            if (!(im.rational_value() > 0)) return false;
        } else if (sign_by_intervals(im.coeffs(), n) < 0) {
            return false;
        }
    }
    return true;
}

bool is_root_of_unity(const Cyclotomic& a) { return root_of_unity_order(a).has_value(); }

namespace {

// The roots of unity of Q(zeta_n) whose minimal conductor is exactly n,
// keyed by canonical coordinates, mapped to their orders. They are the
// +-zeta_n^k; an element at canonical conductor n can equal no other root.
const std::map<std::vector<Rat>, i64>& root_table(i64 n) {
    static std::mutex mu;
    static std::map<i64, std::shared_ptr<const std::map<std::vector<Rat>, i64>>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return *it->second;
    auto tbl = std::make_shared<std::map<std::vector<Rat>, i64>>();
    for (i64 k = 0; k < n; ++k) {
        Cyclotomic r = Cyclotomic::root_of_unity(n, k);
        if (r.conductor() != n) continue;  // lives in a proper subfield
        // at its own canonical conductor a positive entry has order exactly n
        tbl->emplace(r.coeffs(), n);
        Cyclotomic neg = -r;
        tbl->emplace(neg.coeffs(), n % 2 == 1 ? 2 * n : n);
    }
    it = cache.emplace(n, std::move(tbl)).first;
    return *it->second;
}

}  // namespace

std::optional<i64> root_of_unity_order(const Cyclotomic& a) {
    const auto& tbl = root_table(a.conductor());
    auto it = tbl.find(a.coeffs());
    if (it == tbl.end()) return std::nullopt;
    return it->second;
}

SiegelResult siegel_bound_check(const Cyclotomic& alpha) {
    if (!alpha.is_integral()) throw NotAlgebraicInteger(alpha.to_string());
    if (alpha == Cyclotomic(1)) return {SiegelResult::Kind::IsOne, Rat(0)};
    if (!is_totally_positive(alpha)) return {SiegelResult::Kind::NotTotallyPositive, Rat(0)};
    Rat avg = average_of_conjugates(alpha);
    if (avg < make_rat(Int(3), Int(2)))
        throw SiegelViolation(alpha.to_string() + " has conjugate average " + rat_to_string(avg));
    return {SiegelResult::Kind::AverageAtLeastThreeHalves, avg};
}

RootSumResult p_power_root_sum_check(const std::vector<Cyclotomic>& eps, i64 p) {
    if (!is_prime(p)) throw Error("p_power_root_sum_check: p must be prime");
    i64 lcm_cond = 1;
    for (const auto& e : eps) {
        auto ord = root_of_unity_order(e);
        if (!ord) throw NotPPowerRoot(e.to_string());
        i64 o = *ord;
        while (o % p == 0) o /= p;
        if (o != 1) throw NotPPowerRoot(e.to_string() + " has order " + std::to_string(*ord));
        lcm_cond = std::lcm(lcm_cond, e.conductor());
    }
    std::size_t len = static_cast<std::size_t>(euler_phi(lcm_cond));
    std::vector<Rat> sum(len, Rat(0));
    for (const auto& e : eps) {
        auto lifted = e.lift_coeffs(lcm_cond);
        for (std::size_t i = 0; i < lifted.size(); ++i) sum[i] += lifted[i];
    }
    bool zero = true;
    for (const auto& v : sum)
        if (v != 0) {
            zero = false;
            break;
        }
    return {zero, eps.size(), eps.size() % static_cast<std::size_t>(p) == 0};
}

}  // namespace blocklab
