#include "blocklab/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

#include "blocklab/errors.hpp"

namespace blocklab {

int Group::power(int g, i64 e) const {
    int m = order(g);
    e = mod_reduce(e, m);
    int r = identity_;
    int base = g;
    while (e > 0) {
        if (e & 1) r = op(r, base);
        base = op(base, base);
        e >>= 1;
    }
    return r;
}

void Group::finish(bool check_associativity) {
    const int n = n_;
    // Identity: the unique two-sided unit.
    int e = -1;
    for (int cand = 0; cand < n; ++cand) {
        bool ok = true;
        for (int x = 0; x < n && ok; ++x)
            if (op(cand, x) != x || op(x, cand) != x) ok = false;
        if (ok) {
            e = cand;
            break;
        }
    }
    if (e < 0) throw NotAGroup("no two-sided identity");
    identity_ = e;

    inv_.assign(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (op(a, b) == e) {
                if (op(b, a) != e) throw NotAGroup("one-sided inverse at " + std::to_string(a));
                inv_[a] = b;
                break;
            }
        }
        if (inv_[a] < 0) throw NotAGroup("no inverse for element " + std::to_string(a));
    }

    if (check_associativity) {
        if (n <= 256) {
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    for (int c = 0; c < n; ++c)
                        if (op(op(a, b), c) != op(a, op(b, c)))
                            throw NotAGroup("associativity fails");
        } else {
            SplitMix64 rng(kDefaultSeed);
            for (int t = 0; t < 4096; ++t) {
                int a = static_cast<int>(rng.below(static_cast<u64>(n)));
                int b = static_cast<int>(rng.below(static_cast<u64>(n)));
                int c = static_cast<int>(rng.below(static_cast<u64>(n)));
                if (op(op(a, b), c) != op(a, op(b, c))) throw NotAGroup("associativity fails");
            }
        }
    }

    order_.assign(n, 0);
    exponent_ = 1;
    for (int g = 0; g < n; ++g) {
        int x = g, ord = 1;
        while (x != e) {
            x = op(x, g);
            ++ord;
            if (ord > n) throw NotAGroup("element order exceeds group size");
        }
        if (n % ord != 0) throw NotAGroup("element order does not divide group order");
        order_[g] = ord;
        exponent_ = std::lcm(exponent_, static_cast<i64>(ord));
    }
}

Group Group::from_cayley(const std::vector<std::vector<int>>& table) {
    const int n = static_cast<int>(table.size());
    if (n == 0) throw NotAGroup("empty table");
    Group g;
    g.n_ = n;
    g.op_.assign(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(table[i].size()) != n) throw NotAGroup("table is not square");
        for (int j = 0; j < n; ++j) {
            int v = table[i][j];
            if (v < 0 || v >= n) throw NotAGroup("entry out of range");  // closure
            g.op_[static_cast<std::size_t>(i) * n + j] = v;
        }
    }
    g.finish(/*check_associativity=*/true);
    return g;
}

namespace {

Perm compose(const Perm& first, const Perm& then) {
    Perm r(first.size());
    for (std::size_t i = 0; i < first.size(); ++i) r[i] = then[static_cast<std::size_t>(first[i])];
    return r;
}

}  // namespace

Group Group::from_permutations(const std::vector<Perm>& gens, int cap) {
    std::size_t degree = gens.empty() ? 1 : gens[0].size();
    for (const auto& p : gens) {
        if (p.size() != degree) throw NotAGroup("generators act on different point sets");
        std::vector<bool> seen(degree, false);
        for (int img : p) {
            if (img < 0 || img >= static_cast<int>(degree) || seen[static_cast<std::size_t>(img)])
                throw NotAGroup("generator is not a bijection");
            seen[static_cast<std::size_t>(img)] = true;
        }
    }

    Perm id(degree);
    std::iota(id.begin(), id.end(), 0);
    std::map<Perm, int> index;
    std::vector<Perm> elems;
    elems.push_back(id);
    index[id] = 0;
    for (std::size_t head = 0; head < elems.size(); ++head) {
        Perm cur = elems[head];  // copy: elems may reallocate
        for (const auto& gen : gens) {
            Perm nxt = compose(cur, gen);
            if (index.emplace(nxt, static_cast<int>(elems.size())).second) {
                elems.push_back(std::move(nxt));
                if (static_cast<int>(elems.size()) > cap)
                    throw TooLarge("group enumeration passed " + std::to_string(cap) + " elements");
            }
        }
    }

    const int n = static_cast<int>(elems.size());
    Group g;
    g.n_ = n;
    g.perm_gens_ = gens;
    g.op_.assign(static_cast<std::size_t>(n) * n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            g.op_[static_cast<std::size_t>(a) * n + b] = index.at(compose(elems[a], elems[b]));
    // Composition of bijections: associativity and the axioms hold by
    // construction, so only derive metadata.
    g.finish(/*check_associativity=*/false);
    return g;
}

bool Subgroup::contains(int g) const { return std::binary_search(members.begin(), members.end(), g); }

namespace {

Subgroup make_subgroup(const Group& g, std::vector<int> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    return Subgroup{&g, std::move(members)};
}

}  // namespace

ConjugacyClasses conjugacy_classes(const Group& g) {
    const int n = g.size();
    std::vector<int> cls(n, -1);
    std::vector<std::vector<int>> classes;
    for (int x = 0; x < n; ++x) {
        if (cls[x] >= 0) continue;
        int id = static_cast<int>(classes.size());
        std::vector<int> orbit;
        for (int t = 0; t < n; ++t) {
            int y = g.conjugate(x, t);
            if (cls[y] < 0) {
                cls[y] = id;
                orbit.push_back(y);
            }
        }
        std::sort(orbit.begin(), orbit.end());
        classes.push_back(std::move(orbit));
    }
    std::vector<int> perm(classes.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](int a, int b) {
        int oa = g.order(classes[a][0]), ob = g.order(classes[b][0]);
        if (oa != ob) return oa < ob;
        if (classes[a].size() != classes[b].size()) return classes[a].size() < classes[b].size();
        return classes[a][0] < classes[b][0];
    });
    ConjugacyClasses result;
    result.classes.resize(classes.size());
    result.reps.resize(classes.size());
    result.class_of.assign(n, -1);
    for (std::size_t k = 0; k < perm.size(); ++k) {
        result.classes[k] = std::move(classes[static_cast<std::size_t>(perm[k])]);
        result.reps[k] = result.classes[k][0];
        for (int m : result.classes[k]) result.class_of[static_cast<std::size_t>(m)] = static_cast<int>(k);
    }
    return result;
}

Subgroup centralizer(const Group& g, const std::vector<int>& s) {
    std::vector<int> members;
    for (int x = 0; x < g.size(); ++x) {
        bool ok = true;
        for (int y : s)
            if (g.op(x, y) != g.op(y, x)) {
                ok = false;
                break;
            }
        if (ok) members.push_back(x);
    }
    return make_subgroup(g, std::move(members));
}

Subgroup normalizer(const Group& g, const Subgroup& h) {
    std::vector<bool> in_h(static_cast<std::size_t>(g.size()), false);
    for (int m : h.members) in_h[static_cast<std::size_t>(m)] = true;
    std::vector<int> members;
    for (int x = 0; x < g.size(); ++x) {
        bool ok = true;
        for (int y : h.members)
            if (!in_h[static_cast<std::size_t>(g.conjugate(y, x))]) {
                ok = false;
                break;
            }
        if (ok) members.push_back(x);
    }
    return make_subgroup(g, std::move(members));
}

Subgroup center(const Group& g) {
    std::vector<int> all(static_cast<std::size_t>(g.size()));
    std::iota(all.begin(), all.end(), 0);
    return centralizer(g, all);
}

Subgroup generated_closure(const Group& g, const std::vector<int>& seed) {
    std::vector<bool> in(static_cast<std::size_t>(g.size()), false);
    std::vector<int> members;
    auto push = [&](int x) {
        if (!in[static_cast<std::size_t>(x)]) {
            in[static_cast<std::size_t>(x)] = true;
            members.push_back(x);
        }
    };
    push(g.identity());
    for (int s : seed) push(s);
    for (std::size_t head = 0; head < members.size(); ++head)
        for (int s : seed) push(g.op(members[head], s));
    return make_subgroup(g, std::move(members));
}

namespace {

bool is_p_element(const Group& g, int x, i64 p) {
    int o = g.order(x);
    while (o % p == 0) o = static_cast<int>(o / p);
    return o == 1;
}

}  // namespace

Subgroup sylow_subgroup(const Group& g, i64 p) {
    if (!is_prime(p)) throw Error("sylow_subgroup: p must be prime");
    i64 target = p_part(g.size(), p);
    Subgroup q = make_subgroup(g, {g.identity()});
    while (q.order() < target) {
        Subgroup norm = normalizer(g, q);
        int chosen = -1;
        for (int x : norm.members) {
            if (x != g.identity() && !q.contains(x) && is_p_element(g, x, p)) {
                chosen = x;
                break;
            }
        }
        if (chosen < 0) throw InternalError("sylow growth stalled");
        std::vector<int> seed = q.members;
        seed.push_back(chosen);
        q = generated_closure(g, seed);
    }
    return q;
}

PDecomposition p_decompose(const Group& g, int elem, i64 p) {
    if (!is_prime(p)) throw Error("p_decompose: p must be prime");
    i64 m = g.order(elem);
    i64 pa = p_part(m, p);
    i64 mprime = m / pa;
    if (pa == 1) return {g.identity(), elem};
    if (mprime == 1) return {elem, g.identity()};
    i64 t = inv_mod(mprime, pa);
    i64 s = inv_mod(pa, mprime);
    return {g.power(elem, mprime * t), g.power(elem, pa * s)};
}

std::vector<int> p_regular_elements(const Group& g, i64 p) {
    std::vector<int> out;
    for (int x = 0; x < g.size(); ++x)
        if (g.order(x) % p != 0) out.push_back(x);
    return out;
}

std::optional<Subgroup> normal_p_complement(const Group& g, i64 p) {
    if (!is_prime(p)) throw Error("normal_p_complement: p must be prime");
    std::vector<int> reg = p_regular_elements(g, p);
    std::vector<bool> in(static_cast<std::size_t>(g.size()), false);
    for (int x : reg) in[static_cast<std::size_t>(x)] = true;
    for (int a : reg)
        for (int b : reg)
            if (!in[static_cast<std::size_t>(g.op(a, b))]) return std::nullopt;
    return make_subgroup(g, std::move(reg));
}

bool burnside_hypothesis(const Group& g, i64 p) {
    Subgroup syl = sylow_subgroup(g, p);
    Subgroup c = centralizer(g, syl.members);
    Subgroup n = normalizer(g, syl);
    return c.members == n.members;
}

Subgroup o_p_residual(const Group& g, i64 p) { return generated_closure(g, p_regular_elements(g, p)); }

bool is_subgroup(const Group& g, const std::vector<int>& members) {
    std::vector<bool> in(static_cast<std::size_t>(g.size()), false);
    for (int m : members) {
        if (m < 0 || m >= g.size()) return false;
        in[static_cast<std::size_t>(m)] = true;
    }
    if (!in[static_cast<std::size_t>(g.identity())]) return false;
    for (int a : members) {
        if (!in[static_cast<std::size_t>(g.inv(a))]) return false;
        for (int b : members)
            if (!in[static_cast<std::size_t>(g.op(a, b))]) return false;
    }
    return true;
}

bool is_normal(const Group& g, const Subgroup& h) {
    std::vector<bool> in(static_cast<std::size_t>(g.size()), false);
    for (int m : h.members) in[static_cast<std::size_t>(m)] = true;
    for (int x = 0; x < g.size(); ++x)
        for (int m : h.members)
            if (!in[static_cast<std::size_t>(g.conjugate(m, x))]) return false;
    return true;
}

Quotient quotient(const Group& g, const Subgroup& n) {
    if (n.parent != &g) throw GroupMismatch();
    if (!is_subgroup(g, n.members)) throw NotNormal("given member set is not a subgroup");
    if (!is_normal(g, n)) throw NotNormal("gN != Ng for some g");

    std::vector<int> coset(static_cast<std::size_t>(g.size()), -1);
    std::vector<int> coset_rep;
    for (int x = 0; x < g.size(); ++x) {
        if (coset[static_cast<std::size_t>(x)] >= 0) continue;
        int id = static_cast<int>(coset_rep.size());
        coset_rep.push_back(x);  // smallest member, by ascending scan
        for (int m : n.members) coset[static_cast<std::size_t>(g.op(x, m))] = id;
    }
    const int q = static_cast<int>(coset_rep.size());
    std::vector<std::vector<int>> table(static_cast<std::size_t>(q), std::vector<int>(static_cast<std::size_t>(q)));
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b)
            table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                coset[static_cast<std::size_t>(g.op(coset_rep[static_cast<std::size_t>(a)],
                                                    coset_rep[static_cast<std::size_t>(b)]))];
    return Quotient{Group::from_cayley(table), std::move(coset)};
}

SubgroupGroup subgroup_as_group(const Group& g, const Subgroup& h) {
    if (h.parent != &g) throw GroupMismatch();
    std::vector<int> local(static_cast<std::size_t>(g.size()), -1);
    for (std::size_t i = 0; i < h.members.size(); ++i) local[static_cast<std::size_t>(h.members[i])] = static_cast<int>(i);
    const int m = h.order();
    std::vector<std::vector<int>> table(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m)));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            int prod = g.op(h.members[static_cast<std::size_t>(a)], h.members[static_cast<std::size_t>(b)]);
            int loc = local[static_cast<std::size_t>(prod)];
            if (loc < 0) throw NotAGroup("member set not closed under op");
            table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = loc;
        }
    return SubgroupGroup{Group::from_cayley(table), h.members};
}

std::vector<Subgroup> normal_subgroups(const Group& g) {
    ConjugacyClasses cls = conjugacy_classes(g);
    const std::size_t r = cls.count();
    if (r > 22) throw TooLarge("normal subgroup enumeration over " + std::to_string(r) + " classes");
    std::vector<Subgroup> out;
    const u64 subsets = 1ULL << (r - 1);
    for (u64 mask = 0; mask < subsets; ++mask) {
        std::vector<int> members = cls.classes[0];  // identity class
        for (std::size_t k = 1; k < r; ++k)
            if (mask & (1ULL << (k - 1)))
                members.insert(members.end(), cls.classes[k].begin(), cls.classes[k].end());
        if (static_cast<int>(members.size()) == 0 || g.size() % static_cast<int>(members.size()) != 0) continue;
        std::sort(members.begin(), members.end());
        if (is_subgroup(g, members)) out.push_back(Subgroup{&g, std::move(members)});
    }
    std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
        return a.members < b.members;
    });
    return out;
}

}  // namespace blocklab
