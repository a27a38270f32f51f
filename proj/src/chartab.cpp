#include "blocklab/chartab.hpp"

#include <algorithm>
#include <cmath>

namespace blocklab {

std::shared_ptr<const GroupCtx> make_group_ctx(Group group, std::string id) {
    ConjugacyClasses classes = conjugacy_classes(group);
    std::vector<int> inverse_class(classes.count());
    std::vector<std::vector<int>> power_class(classes.count());
    for (std::size_t k = 0; k < classes.count(); ++k) {
        int rep = classes.reps[k];
        inverse_class[k] = classes.class_of[static_cast<std::size_t>(group.inv(rep))];
        int m = group.order(rep);
        auto& pc = power_class[k];
        pc.resize(static_cast<std::size_t>(m));
        int x = group.identity();
        for (int t = 0; t < m; ++t) {
            pc[static_cast<std::size_t>(t)] = classes.class_of[static_cast<std::size_t>(x)];
            x = group.op(x, rep);
        }
    }
    return std::make_shared<const GroupCtx>(GroupCtx{std::move(group), std::move(classes), std::move(id),
                                                     std::move(inverse_class), std::move(power_class)});
}

ClassFunction::ClassFunction(std::shared_ptr<const GroupCtx> ctx, std::vector<Cyclotomic> values)
    : ctx_(std::move(ctx)), values_(std::move(values)) {
    if (values_.size() != ctx_->classes.count()) throw Error("class function has wrong length");
}

const Cyclotomic& ClassFunction::at_element(int g) const {
    return values_[static_cast<std::size_t>(ctx_->classes.class_of[static_cast<std::size_t>(g)])];
}

Character::Character(std::shared_ptr<const GroupCtx> ctx, std::vector<Cyclotomic> values)
    : ClassFunction(std::move(ctx), std::move(values)) {
    const Cyclotomic& d = on_class(0);
    if (!d.is_rational_integer() || d.rational_value() < 1) throw Error("character degree must be a positive integer");
}

Int Character::degree() const { return on_class(0).rational_value().get_num(); }

std::vector<std::vector<std::vector<i64>>> class_multiplication_coefficients(const GroupCtx& ctx) {
    const Group& g = ctx.group;
    const auto& cls = ctx.classes;
    const std::size_t r = cls.count();
    std::vector a(r, std::vector(r, std::vector<i64>(r, 0)));
    for (std::size_t i = 0; i < r; ++i)
        for (int x : cls.classes[i])
            for (std::size_t j = 0; j < r; ++j)
                for (int y : cls.classes[j]) {
                    int prod = g.op(x, y);
                    // count pairs landing on the fixed representative
                    std::size_t k = static_cast<std::size_t>(cls.class_of[static_cast<std::size_t>(prod)]);
                    if (prod == cls.reps[k]) a[i][j][k] += 1;
                }
    return a;
}

namespace {

// ---- F_q linear algebra for the Dixon splitting ----

struct Subspace {
    std::vector<std::vector<i64>> rows;  // reduced echelon basis
    std::vector<int> pivots;
};

Subspace echelonize(std::vector<std::vector<i64>> vecs, i64 q) {
    Subspace s;
    const std::size_t dim = vecs.empty() ? 0 : vecs[0].size();
    for (auto& v : vecs) {
        // reduce against existing rows
        for (std::size_t i = 0; i < s.rows.size(); ++i) {
            i64 c = v[static_cast<std::size_t>(s.pivots[i])];
            if (c != 0)
                for (std::size_t j = 0; j < dim; ++j) v[j] = mod_reduce(v[j] - mul_mod(c, s.rows[i][j], q), q);
        }
        std::size_t pc = 0;
        while (pc < dim && v[pc] == 0) ++pc;
        if (pc == dim) continue;
        i64 inv = inv_mod(v[pc], q);
        for (auto& x : v) x = mul_mod(x, inv, q);
        // clear this column in existing rows
        for (std::size_t i = 0; i < s.rows.size(); ++i) {
            i64 c = s.rows[i][pc];
            if (c != 0)
                for (std::size_t j = 0; j < dim; ++j)
                    s.rows[i][j] = mod_reduce(s.rows[i][j] - mul_mod(c, v[j], q), q);
        }
        s.rows.push_back(std::move(v));
        s.pivots.push_back(static_cast<int>(pc));
    }
    return s;
}

// Coordinates of u in the subspace basis; throws if u is outside.
std::vector<i64> coords_in(const Subspace& s, std::vector<i64> u, i64 q) {
    std::vector<i64> c(s.rows.size(), 0);
    for (std::size_t i = 0; i < s.rows.size(); ++i) {
        i64 f = u[static_cast<std::size_t>(s.pivots[i])];
        c[i] = f;
        if (f != 0)
            for (std::size_t j = 0; j < u.size(); ++j) u[j] = mod_reduce(u[j] - mul_mod(f, s.rows[i][j], q), q);
    }
    for (i64 x : u)
        if (x != 0) throw LiftFailure("class matrix does not preserve a computed subspace");
    return c;
}

// Characteristic polynomial over F_q via Hessenberg reduction.
std::vector<i64> char_poly(std::vector<std::vector<i64>> h, i64 q) {
    const std::size_t s = h.size();
    for (std::size_t col = 0; col + 2 < s; ++col) {
        std::size_t piv = col + 1;
        while (piv < s && h[piv][col] == 0) ++piv;
        if (piv == s) continue;
        if (piv != col + 1) {
            std::swap(h[piv], h[col + 1]);
            for (std::size_t r = 0; r < s; ++r) std::swap(h[r][piv], h[r][col + 1]);
        }
        i64 inv = inv_mod(h[col + 1][col], q);
        for (std::size_t row = col + 2; row < s; ++row) {
            i64 f = mul_mod(h[row][col], inv, q);
            if (f == 0) continue;
            for (std::size_t j = 0; j < s; ++j) h[row][j] = mod_reduce(h[row][j] - mul_mod(f, h[col + 1][j], q), q);
            for (std::size_t r = 0; r < s; ++r) h[r][col + 1] = mod_reduce(h[r][col + 1] + mul_mod(f, h[r][row], q), q);
        }
    }
    // p_k = (x - h[k-1][k-1]) p_{k-1} - sum_i h[i-1][k-1] (prod subdiag) p_{i-1}
    std::vector<std::vector<i64>> p(s + 1);
    p[0] = {1};
    for (std::size_t k = 1; k <= s; ++k) {
        std::vector<i64> cur(k + 1, 0);
        const auto& prev = p[k - 1];
        for (std::size_t t = 0; t < prev.size(); ++t) {
            cur[t + 1] = (cur[t + 1] + prev[t]) % q;
            cur[t] = mod_reduce(cur[t] - mul_mod(h[k - 1][k - 1], prev[t], q), q);
        }
        i64 subprod = 1;
        for (std::size_t i = k - 1; i >= 1; --i) {
            subprod = mul_mod(subprod, h[i][i - 1], q);
            if (subprod == 0) break;
            i64 coef = mul_mod(h[i - 1][k - 1], subprod, q);
            if (coef == 0) continue;
            const auto& pi = p[i - 1];
            for (std::size_t t = 0; t < pi.size(); ++t) cur[t] = mod_reduce(cur[t] - mul_mod(coef, pi[t], q), q);
        }
        p[k] = std::move(cur);
    }
    return p[s];
}

std::vector<i64> poly_roots_in_fq(const std::vector<i64>& poly, i64 q) {
    std::vector<i64> roots;
    for (i64 x = 0; x < q; ++x) {
        i64 v = 0;
        for (std::size_t t = poly.size(); t-- > 0;) v = mod_reduce(mul_mod(v, x, q) + poly[t], q);
        if (v == 0) roots.push_back(x);
    }
    return roots;
}

std::vector<std::vector<i64>> kernel_basis(std::vector<std::vector<i64>> m, i64 q) {
    const std::size_t s = m.size();
    std::vector<int> pivot_of_col(s, -1);
    std::size_t row = 0;
    for (std::size_t col = 0; col < s && row < s; ++col) {
        std::size_t piv = row;
        while (piv < s && m[piv][col] == 0) ++piv;
        if (piv == s) continue;
        std::swap(m[piv], m[row]);
        i64 inv = inv_mod(m[row][col], q);
        for (auto& x : m[row]) x = mul_mod(x, inv, q);
        for (std::size_t r = 0; r < s; ++r) {
            if (r == row || m[r][col] == 0) continue;
            i64 f = m[r][col];
            for (std::size_t j = 0; j < s; ++j) m[r][j] = mod_reduce(m[r][j] - mul_mod(f, m[row][j], q), q);
        }
        pivot_of_col[col] = static_cast<int>(row);
        ++row;
    }
    std::vector<std::vector<i64>> basis;
    for (std::size_t col = 0; col < s; ++col) {
        if (pivot_of_col[col] >= 0) continue;
        std::vector<i64> v(s, 0);
        v[col] = 1;
        for (std::size_t c2 = 0; c2 < s; ++c2)
            if (pivot_of_col[c2] >= 0) v[c2] = mod_reduce(-m[static_cast<std::size_t>(pivot_of_col[c2])][col], q);
        basis.push_back(std::move(v));
    }
    return basis;
}

i64 sqrt_mod_prime(i64 a, i64 q) {
    a = mod_reduce(a, q);
    if (a == 0) return 0;
    if (q == 2) return a;
    if (pow_mod(a, (q - 1) / 2, q) != 1) throw LiftFailure("degree^2 is not a quadratic residue");
    if (q % 4 == 3) return pow_mod(a, (q + 1) / 4, q);
    // Tonelli-Shanks
    i64 s = q - 1;
    int e = 0;
    while (s % 2 == 0) {
        s /= 2;
        ++e;
    }
    i64 nqr = 2;
    while (pow_mod(nqr, (q - 1) / 2, q) != q - 1) ++nqr;
    i64 x = pow_mod(a, (s + 1) / 2, q);
    i64 b = pow_mod(a, s, q);
    i64 g = pow_mod(nqr, s, q);
    int r = e;
    for (;;) {
        i64 t = b;
        int m = 0;
        while (t != 1 && m < r) {
            t = mul_mod(t, t, q);
            ++m;
        }
        if (m == 0) return x;
        i64 gs = pow_mod(g, 1LL << (r - m - 1), q);
        x = mul_mod(x, gs, q);
        g = mul_mod(gs, gs, q);
        b = mul_mod(b, g, q);
        r = m;
    }
}

i64 find_dixon_prime(i64 order, i64 exponent) {
    i64 start = 2 * static_cast<i64>(std::ceil(std::sqrt(static_cast<double>(order)))) + 1;
    // first q >= start with q = 1 (mod exponent)
    i64 q = ((start - 1 + exponent - 1) / exponent) * exponent + 1;
    if (q < start) q += exponent;
    while (!is_prime(q)) q += exponent;
    return q;
}

i64 primitive_root_of_unity(i64 q, i64 e) {
    auto fac = factorize(q - 1);
    i64 h = 2;
    for (;; ++h) {
        bool gen = true;
        for (auto [pf, _] : fac)
            if (pow_mod(h, (q - 1) / pf, q) == 1) {
                gen = false;
                break;
            }
        if (gen) break;
    }
    return pow_mod(h, (q - 1) / e, q);
}

}  // namespace

CharacterTable character_table(std::shared_ptr<const GroupCtx> ctx, u64 seed) {
    const Group& g = ctx->group;
    const auto& cls = ctx->classes;
    const i64 n = g.size();
    const std::size_t r = cls.count();
    const i64 e = g.exponent();
    const i64 q = find_dixon_prime(n, e);

    // Combined class matrix M[j][k] = sum_i coeff[i] * a_{ijk}, assembled in
    // O(r n) from M[j][k] = sum_{y in K_j} coeff[class(rep_k * y^{-1})].
    auto combo_matrix = [&](const std::vector<i64>& coeff) {
        std::vector m(r, std::vector<i64>(r, 0));
        for (std::size_t j = 0; j < r; ++j)
            for (int y : cls.classes[j]) {
                int yi = g.inv(y);
                for (std::size_t k = 0; k < r; ++k) {
                    int x = g.op(cls.reps[k], yi);
                    m[j][k] = (m[j][k] + coeff[static_cast<std::size_t>(cls.class_of[static_cast<std::size_t>(x)])]) % q;
                }
            }
        return m;
    };

    // Split F_q^r into the common eigenvector lines of the class matrices.
    std::vector<Subspace> spaces;
    {
        std::vector<std::vector<i64>> id(r, std::vector<i64>(r, 0));
        for (std::size_t i = 0; i < r; ++i) id[i][i] = 1;
        spaces.push_back(echelonize(std::move(id), q));
    }
    SplitMix64 rng(seed);
    const int random_rounds = 8;
    for (int round = 0;; ++round) {
        bool done = true;
        for (const auto& s : spaces)
            if (s.rows.size() > 1) done = false;
        if (done) break;
        if (round >= random_rounds + static_cast<int>(r)) throw LiftFailure("eigenspace splitting did not converge");
        std::vector<i64> coeff(r, 0);
        if (round < random_rounds) {
            for (auto& c : coeff) c = static_cast<i64>(rng.below(static_cast<u64>(q)));
        } else {
            coeff[static_cast<std::size_t>(1 + (round - random_rounds))] = 1;  // deterministic sweep
        }
        auto m = combo_matrix(coeff);
        std::vector<Subspace> next;
        for (auto& s : spaces) {
            if (s.rows.size() <= 1) {
                next.push_back(std::move(s));
                continue;
            }
            const std::size_t dim = s.rows.size();
            // restricted action: columns are coords of images of basis rows
            std::vector rest(dim, std::vector<i64>(dim, 0));
            for (std::size_t t = 0; t < dim; ++t) {
                std::vector<i64> img(r, 0);
                for (std::size_t j = 0; j < r; ++j) {
                    i64 acc = 0;
                    for (std::size_t k = 0; k < r; ++k) acc = (acc + mul_mod(m[j][k], s.rows[t][k], q)) % q;
                    img[j] = acc;
                }
                auto c = coords_in(s, std::move(img), q);
                for (std::size_t t2 = 0; t2 < dim; ++t2) rest[t2][t] = c[t2];
            }
            auto roots = poly_roots_in_fq(char_poly(rest, q), q);
            std::size_t total = 0;
            for (i64 lambda : roots) {
                auto shifted = rest;
                for (std::size_t t = 0; t < dim; ++t) shifted[t][t] = mod_reduce(shifted[t][t] - lambda, q);
                auto null_vecs = kernel_basis(std::move(shifted), q);
                if (null_vecs.empty()) continue;
                std::vector<std::vector<i64>> global;
                for (const auto& w : null_vecs) {
                    std::vector<i64> v(r, 0);
                    for (std::size_t t = 0; t < dim; ++t) {
                        if (w[t] == 0) continue;
                        for (std::size_t k = 0; k < r; ++k) v[k] = (v[k] + mul_mod(w[t], s.rows[t][k], q)) % q;
                    }
                    global.push_back(std::move(v));
                }
                Subspace sub = echelonize(std::move(global), q);
                total += sub.rows.size();
                next.push_back(std::move(sub));
            }
            if (total != dim) throw LiftFailure("eigenspace split lost dimension");
        }
        spaces = std::move(next);
    }
    if (spaces.size() != r) throw LiftFailure("wrong number of common eigenvectors");

    // Each line, normalized at the identity class, is a central character
    // vector mod q: v[k] = omega(K_k).
    std::vector<std::vector<i64>> omegas;
    for (const auto& s : spaces) {
        std::vector<i64> v = s.rows[0];
        if (v[0] == 0) throw LiftFailure("eigenvector vanishes at identity class");
        i64 inv0 = inv_mod(v[0], q);
        for (auto& x : v) x = mul_mod(x, inv0, q);
        omegas.push_back(std::move(v));
    }

    const i64 z = primitive_root_of_unity(q, e);
    std::vector<Character> chars;
    for (const auto& omega : omegas) {
        // 1/d^2 = (1/|G|) sum_k omega_k omega_{k*} / |K_k|
        i64 denom = 0;
        for (std::size_t k = 0; k < r; ++k) {
            i64 term = mul_mod(omega[k], omega[static_cast<std::size_t>(ctx->inverse_class[k])], q);
            term = mul_mod(term, inv_mod(static_cast<i64>(cls.classes[k].size()), q), q);
            denom = (denom + term) % q;
        }
        if (denom == 0) throw LiftFailure("degree denominator vanished");
        i64 d2 = mul_mod(mod_reduce(n, q), inv_mod(denom, q), q);
        i64 droot = sqrt_mod_prime(d2, q);
        i64 deg = std::min(droot, q - droot);  // the true degree is < q/2
        if (deg == 0) throw LiftFailure("zero degree");

        // values mod q, then exact lift per class by inverse DFT over the
        // eigenvalue multiplicities of rho(rep): counts c_l < q are exact.
        std::vector<i64> w(r);
        for (std::size_t k = 0; k < r; ++k) {
            w[k] = mul_mod(mul_mod(omega[k], deg, q), inv_mod(static_cast<i64>(cls.classes[k].size()), q), q);
        }
        std::vector<Cyclotomic> values(r);
        for (std::size_t k = 0; k < r; ++k) {
            i64 m = g.order(cls.reps[k]);
            i64 zeta_m = pow_mod(z, e / m, q);
            i64 inv_m = inv_mod(m, q);
            RatPoly coeffs(static_cast<std::size_t>(m), Rat(0));
            Int total(0);
            for (i64 l = 0; l < m; ++l) {
                i64 acc = 0;
                i64 zml_inv = inv_mod(pow_mod(zeta_m, l, q), q);
                i64 cur = 1;
                for (i64 t = 0; t < m; ++t) {
                    acc = (acc + mul_mod(w[static_cast<std::size_t>(ctx->power_class[k][static_cast<std::size_t>(t)])],
                                         cur, q)) %
                          q;
                    cur = mul_mod(cur, zml_inv, q);
                }
                i64 cl = mul_mod(acc, inv_m, q);
                if (cl >= q) throw LiftFailure("multiplicity out of range");
                coeffs[static_cast<std::size_t>(l)] = to_rat(cl);
                total += to_int(cl);
            }
            if (total != to_int(deg)) throw LiftFailure("eigenvalue multiplicities do not sum to the degree");
            values[k] = Cyclotomic::from_coeffs(m, std::move(coeffs));
        }
        if (to_int(n) % to_int(deg) != 0) throw LiftFailure("degree does not divide group order");
        chars.emplace_back(ctx, std::move(values));
    }

    std::sort(chars.begin(), chars.end(), [](const Character& a, const Character& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        for (std::size_t k = 0; k < a.class_count(); ++k) {
            int c = Cyclotomic::compare(a.on_class(k), b.on_class(k));
            if (c != 0) return c < 0;
        }
        return false;
    });

    CharacterTable table{std::move(ctx), std::move(chars), q};
    Int degsum(0);
    for (const auto& chi : table.irreducibles) degsum += chi.degree() * chi.degree();
    if (degsum != to_int(n)) throw LiftFailure("sum of squared degrees is not |G|");
    if (!check_row_orthogonality(table)) throw LiftFailure("row orthogonality fails");
    if (!check_column_orthogonality(table)) throw LiftFailure("column orthogonality fails");
    return table;
}

Cyclotomic inner_product(const ClassFunction& a, const ClassFunction& b) {
    if (a.ctx() != b.ctx()) throw GroupMismatch();
    const auto& cls = a.ctx()->classes;
    Cyclotomic sum(0);
    for (std::size_t k = 0; k < cls.count(); ++k)
        sum += Cyclotomic(to_int(static_cast<i64>(cls.classes[k].size()))) * a.on_class(k) * b.on_class(k).conj();
    return sum / Cyclotomic(to_int(a.ctx()->group.size()));
}

Character trivial_character(std::shared_ptr<const GroupCtx> ctx) {
    std::vector<Cyclotomic> ones(ctx->classes.count(), Cyclotomic(1));
    return Character(std::move(ctx), std::move(ones));
}

int trivial_character_index(const CharacterTable& table) {
    for (std::size_t i = 0; i < table.irreducibles.size(); ++i) {
        bool all_one = true;
        for (std::size_t k = 0; k < table.irreducibles[i].class_count(); ++k)
            if (table.irreducibles[i].on_class(k) != Cyclotomic(1)) {
                all_one = false;
                break;
            }
        if (all_one) return static_cast<int>(i);
    }
    throw InternalError("trivial character missing from table");
}

bool check_row_orthogonality(const CharacterTable& table) {
    for (std::size_t i = 0; i < table.irreducibles.size(); ++i)
        for (std::size_t j = i; j < table.irreducibles.size(); ++j) {
            Cyclotomic ip = inner_product(table.irreducibles[i], table.irreducibles[j]);
            if (ip != Cyclotomic(i == j ? 1 : 0)) return false;
        }
    return true;
}

bool check_column_orthogonality(const CharacterTable& table) {
    const auto& cls = table.ctx->classes;
    const i64 n = table.ctx->group.size();
    for (std::size_t k = 0; k < cls.count(); ++k)
        for (std::size_t l = k; l < cls.count(); ++l) {
            Cyclotomic sum(0);
            for (const auto& chi : table.irreducibles) sum += chi.on_class(k) * chi.on_class(l).conj();
            Cyclotomic expect =
                k == l ? Cyclotomic(to_int(n / static_cast<i64>(cls.classes[k].size()))) : Cyclotomic(0);
            if (sum != expect) return false;
        }
    return true;
}

SubgroupCtx subgroup_ctx(const std::shared_ptr<const GroupCtx>& parent, const Subgroup& h) {
    if (h.parent != &parent->group) throw GroupMismatch();
    SubgroupGroup sg = subgroup_as_group(parent->group, h);
    auto ctx = make_group_ctx(std::move(sg.group), parent->id + "/sub" + std::to_string(h.order()));
    return SubgroupCtx{std::move(ctx), std::move(sg.to_parent)};
}

QuotientCtx quotient_ctx(const std::shared_ptr<const GroupCtx>& parent, const Subgroup& n) {
    Quotient quo = quotient(parent->group, n);
    auto ctx = make_group_ctx(std::move(quo.group), parent->id + "/mod" + std::to_string(n.order()));
    return QuotientCtx{std::move(ctx), std::move(quo.projection)};
}

ClassFunction restrict_to(const ClassFunction& chi, const SubgroupCtx& sub) {
    std::vector<Cyclotomic> values;
    values.reserve(sub.ctx->classes.count());
    for (std::size_t k = 0; k < sub.ctx->classes.count(); ++k) {
        int local_rep = sub.ctx->classes.reps[k];
        values.push_back(chi.at_element(sub.to_parent[static_cast<std::size_t>(local_rep)]));
    }
    return ClassFunction(sub.ctx, std::move(values));
}

ClassFunction restrict_to(const ClassFunction& chi, const Subgroup& h) {
    return restrict_to(chi, subgroup_ctx(chi.ctx(), h));
}

ClassFunction inflate(const ClassFunction& chibar, const QuotientCtx& quo,
                      const std::shared_ptr<const GroupCtx>& parent) {
    if (chibar.ctx() != quo.ctx) throw GroupMismatch();
    std::vector<Cyclotomic> values;
    values.reserve(parent->classes.count());
    for (std::size_t k = 0; k < parent->classes.count(); ++k) {
        int rep = parent->classes.reps[k];
        values.push_back(chibar.at_element(quo.projection[static_cast<std::size_t>(rep)]));
    }
    return ClassFunction(parent, std::move(values));
}

Subgroup kernel(const ClassFunction& chi) {
    const Group& g = chi.ctx()->group;
    const Cyclotomic& top = chi.on_class(0);
    std::vector<int> members;
    for (int x = 0; x < g.size(); ++x)
        if (chi.at_element(x) == top) members.push_back(x);
    Subgroup ker{&g, std::move(members)};
    if (!is_subgroup(g, ker.members) || !is_normal(g, ker))
        throw InternalError("character kernel is not a normal subgroup");
    return ker;
}

}  // namespace blocklab
