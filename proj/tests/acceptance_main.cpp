// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Everything is exact arithmetic; "tolerance" below always means equality.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "blocklab/driver.hpp"
#include "blocklab/group_io.hpp"
#include "blocklab/json_schema.hpp"

using namespace blocklab;

namespace {

int g_failures = 0;

struct Criterion {
    std::string name;
    std::chrono::steady_clock::time_point start;
    bool ok = true;
    std::string detail;

    explicit Criterion(std::string n) : name(std::move(n)), start(std::chrono::steady_clock::now()) {}

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }

    void finish() {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
        std::cout << (ok ? "PASS" : "FAIL") << "  " << name;
        if (!detail.empty()) std::cout << "  [" << detail << "]";
        std::cout << "  (" << ms.count() << " ms)" << std::endl;
        if (!ok) ++g_failures;
    }
};

struct Instance {
    std::string name;
    std::shared_ptr<const GroupCtx> ctx;
    CharacterTable table;
};

std::vector<Instance>& catalog_tables() {
    static std::vector<Instance> tables = [] {
        std::vector<Instance> out;
        for (const auto& e : builtin_catalog()) {
            Instance inst;
            inst.name = e.name;
            inst.ctx = make_group_ctx(group_from_text(e.text), "builtin:" + e.name);
            inst.table = character_table(inst.ctx);
            out.push_back(std::move(inst));
        }
        return out;
    }();
    return tables;
}

std::string find_degree2_row_failure(const CharacterTable& t) {
    if (t.irreducibles.size() != 3) return "S3 must have 3 irreducibles";
    if (t.irreducibles[0].degree() != 1 || t.irreducibles[1].degree() != 1 || t.irreducibles[2].degree() != 2)
        return "S3 degrees must be 1,1,2";
    const Character& chi2 = t.irreducibles[2];
    if (chi2.on_class(0) != Cyclotomic(2) || chi2.on_class(1) != Cyclotomic(0) || chi2.on_class(2) != Cyclotomic(-1))
        return "S3 degree-2 row must be (2, 0, -1)";
    return "";
}

}  // namespace

// 1. Orthogonality oracle over the full catalog, under 60 s.
static void criterion_1() {
    Criterion c("1 orthogonality-oracle: exact row+column orthogonality, counts, degree sums; catalog < 60 s");
    auto t0 = std::chrono::steady_clock::now();
    std::size_t groups = 0;
    for (auto& inst : catalog_tables()) {
        ++groups;
        c.require(check_row_orthogonality(inst.table), inst.name + ": row orthogonality");
        c.require(check_column_orthogonality(inst.table), inst.name + ": column orthogonality");
        c.require(inst.table.irreducibles.size() == inst.ctx->classes.count(),
                  inst.name + ": #irreducibles != #classes");
        Int degsum(0);
        for (const auto& chi : inst.table.irreducibles) degsum += chi.degree() * chi.degree();
        c.require(degsum == to_int(inst.ctx->group.size()), inst.name + ": sum of squared degrees");
    }
    c.require(groups >= 12, "catalog must have at least 12 groups");
    bool has_s6 = false;
    for (auto& inst : catalog_tables())
        if (inst.name == "S6") has_s6 = true;
    c.require(has_s6, "catalog must include S6 (order 720)");
    auto secs = std::chrono::duration_cast<std::chrono::seconds>(std::chrono::steady_clock::now() - t0);
    c.require(secs.count() < 60, "catalog run took too long");
    c.finish();
}

// 2. Known-table oracle: golden S3 and analytic C_n, n <= 12.
static void criterion_2() {
    Criterion c("2 known-table-oracle: S3 golden table and analytic C_n tables (n <= 12), exact");
    for (auto& inst : catalog_tables())
        if (inst.name == "S3") {
            std::string err = find_degree2_row_failure(inst.table);
            c.require(err.empty(), err);
        }
    for (i64 n = 1; n <= 12; ++n) {
        std::vector<Perm> gens;
        Perm cycle(static_cast<std::size_t>(n));
        for (i64 i = 0; i < n; ++i) cycle[static_cast<std::size_t>(i)] = static_cast<int>((i + 1) % n);
        gens.push_back(cycle);
        auto ctx = make_group_ctx(Group::from_permutations(gens), "C" + std::to_string(n));
        auto table = character_table(ctx);
        // locate a generator class ordering: rep of class k is a power of gen
        int gen = -1;
        for (int x = 0; x < ctx->group.size(); ++x)
            if (ctx->group.order(x) == n) gen = x;
        c.require(gen >= 0 || n == 1, "no generator found");
        if (n == 1) gen = 0;
        // each analytic row chi_j(g^k) = zeta_n^(jk) must appear, value for value
        for (i64 j = 0; j < n; ++j) {
            std::vector<Cyclotomic> row(ctx->classes.count(), Cyclotomic(1));
            for (std::size_t k = 0; k < ctx->classes.count(); ++k) {
                i64 t = 0;
                int x = ctx->group.identity();
                while (x != ctx->classes.reps[k]) {
                    x = ctx->group.op(x, gen);
                    ++t;
                }
                row[k] = Cyclotomic::root_of_unity(n, j * t);
            }
            bool found = false;
            for (const auto& chi : table.irreducibles) {
                bool same = true;
                for (std::size_t k = 0; k < row.size(); ++k)
                    if (chi.on_class(k) != row[k]) same = false;
                if (same) found = true;
            }
            c.require(found, "C" + std::to_string(n) + " missing analytic character " + std::to_string(j));
        }
    }
    c.finish();
}

// 3. Burnside end-to-end on every hypothesis-true catalog pair.
static void criterion_3() {
    Criterion c("3 burnside-end-to-end: hypothesis-true (G,p) pairs all yield a normal p-complement (>= 10 pairs)");
    int pairs = 0;
    std::vector<std::string> seen;
    for (auto& inst : catalog_tables()) {
        for (i64 p : applicable_primes(inst.ctx->group)) {
            if (!burnside_hypothesis(inst.ctx->group, p)) continue;
            ++pairs;
            seen.push_back(inst.name + "/p=" + std::to_string(p));
            auto k = normal_p_complement(inst.ctx->group, p);
            c.require(k.has_value(), inst.name + " p=" + std::to_string(p) + ": complement missing");
            if (k) {
                c.require(is_normal(inst.ctx->group, *k), "complement not normal");
                c.require(k->order() == inst.ctx->group.size() / p_part(inst.ctx->group.size(), p),
                          "complement has wrong order");
            }
        }
    }
    c.require(pairs >= 10, "only " + std::to_string(pairs) + " hypothesis-true pairs");
    for (const char* want : {"S3/p=2", "C6/p=2", "C6/p=3", "F20/p=2"})
        c.require(std::find(seen.begin(), seen.end(), want) != seen.end(), std::string("missing pair ") + want);
    c.finish();
}

// 4. Lemma 2.3 identity (E:2) on every qualifying (G,p), all pairs, exact.
static void criterion_4() {
    Criterion c("4 lemma-2.3-E2: exact identity for all Irr(B0) u {1} pairs on every qualifying (G,p)");
    int qualifying = 0, pairs_total = 0;
    for (auto& inst : catalog_tables()) {
        for (i64 p : applicable_primes(inst.ctx->group)) {
            auto blocks = block_partition(inst.table, p);
            const Block& b0 = principal_block(blocks);
            auto rec = verify_identity_E2_pairs(inst.table, p, b0);
            if (rec.status == CheckRecord::Status::NotApplicable) continue;
            ++qualifying;
            pairs_total += rec.witness["pairs"].get<int>();
            c.require(rec.status == CheckRecord::Status::Pass,
                      inst.name + " p=" + std::to_string(p) + ": " + rec.witness.dump());
        }
    }
    c.require(qualifying >= 10, "only " + std::to_string(qualifying) + " qualifying instances");
    c.detail = c.ok ? std::to_string(qualifying) + " instances, " + std::to_string(pairs_total) + " pairs" : c.detail;
    c.finish();
}

// 5. The section-3 chain on every hypothesis-true (G,p) with p | |G|.
static void criterion_5() {
    Criterion c("5 section-3-chain: (E:4)(E:6)(E:7)(E:8) equalities and zeta = 1 on G-circle, exact");
    int instances = 0;
    for (auto& inst : catalog_tables()) {
        for (i64 p : applicable_primes(inst.ctx->group)) {
            if (!burnside_hypothesis(inst.ctx->group, p)) continue;
            auto blocks = block_partition(inst.table, p);
            auto recs = verify_section3_chain(inst.table, p, principal_block(blocks));
            ++instances;
            for (const auto& r : recs)
                c.require(r.status == CheckRecord::Status::Pass,
                          inst.name + " p=" + std::to_string(p) + " " + r.id + ": " + r.witness.dump());
        }
    }
    c.require(instances >= 10, "too few hypothesis-true instances");
    c.detail = c.ok ? std::to_string(instances) + " instances" : c.detail;
    c.finish();
}

// 6. Siegel/Cassels bound over seeded random totally positive integers.
static void criterion_6() {
    Criterion c("6 siegel-bound: 1000 random beta*conj(beta) != 1, conductor <= 40, average >= 3/2 exact");
    SplitMix64 rng(kDefaultSeed ^ 0x5153ULL);
    int done = 0;
    try {
        while (done < 1000) {
            i64 n = rng.range(1, 40);
            RatPoly coeffs(static_cast<std::size_t>(euler_phi(n)));
            for (auto& v : coeffs) v = to_rat(rng.range(-2, 2));
            Cyclotomic beta = Cyclotomic::from_coeffs(n, std::move(coeffs));
            Cyclotomic alpha = norm_abs_squared(beta);
            if (alpha.is_zero() || alpha == Cyclotomic(1)) continue;
            ++done;
            auto res = siegel_bound_check(alpha);  // SiegelViolation would throw
            c.require(res.kind == SiegelResult::Kind::AverageAtLeastThreeHalves, "unexpected kind");
            c.require(res.average >= make_rat(Int(3), Int(2)), "average below 3/2");
        }
        Cyclotomic z5 = Cyclotomic::root_of_unity(5, 1);
        auto witness = siegel_bound_check((Cyclotomic(1) + z5) * (Cyclotomic(1) + z5.conj()));
        c.require(witness.average == make_rat(Int(3), Int(2)), "(1+zeta5)(1+zeta5^-1) must attain exactly 3/2");
    } catch (const SiegelViolation& ex) {
        c.require(false, ex.what());
    }
    c.finish();
}

// 7. Lemma 2.4 for p in {2, 3, 5}.
static void criterion_7() {
    Criterion c("7 lemma-2.4: every vanishing p-power root sum in the family has p | #terms, p in {2,3,5}");
    for (i64 p : {2, 3, 5}) {
        auto rec = verify_lemma_2_4(p, kDefaultSeed);
        c.require(rec.status == CheckRecord::Status::Pass, "p=" + std::to_string(p) + ": " + rec.witness.dump());
        c.require(rec.witness["vanishing"].get<i64>() > 0, "family must contain vanishing sums");
    }
    c.finish();
}

// 8. Thompson's third over every irreducible of every catalog group.
static void criterion_8() {
    Criterion c("8 thompson-third: zero-or-root-of-unity count >= |G|/3 for every irreducible");
    for (auto& inst : catalog_tables()) {
        auto rec = verify_thompson_third(inst.table);
        c.require(rec.status == CheckRecord::Status::Pass, inst.name + ": " + rec.witness.dump());
    }
    c.finish();
}

// 9. Block sanity: defect-0 singletons off p, the S3 partition, and the
// principal block = Irr(G/K) inflations whenever a complement exists.
static void criterion_9() {
    Criterion c("9 block-sanity: p'|G| singletons, S3 p=2 partition, principal = inflations of Irr(G/K)");
    for (auto& inst : catalog_tables()) {
        if (inst.ctx->group.size() % 7 != 0) {
            auto blocks = block_partition(inst.table, 7);
            c.require(blocks.size() == inst.table.irreducibles.size(), inst.name + ": p'|G| blocks not singletons");
            for (const auto& b : blocks) c.require(b.defect == 0, inst.name + ": nonzero defect for p'|G|");
        }
        for (i64 p : applicable_primes(inst.ctx->group)) {
            auto complement = normal_p_complement(inst.ctx->group, p);
            if (!complement) continue;
            auto blocks = block_partition(inst.table, p);
            const Block& pb = principal_block(blocks);
            QuotientCtx quo = quotient_ctx(inst.ctx, *complement);
            auto qt = character_table(quo.ctx);
            c.require(qt.irreducibles.size() == pb.members.size(),
                      inst.name + " p=" + std::to_string(p) + ": |Irr(B0)| != |Irr(G/K)|");
            for (const auto& qchi : qt.irreducibles) {
                ClassFunction lifted = inflate(qchi, quo, inst.ctx);
                bool found = false;
                for (int m : pb.members)
                    if (static_cast<const ClassFunction&>(inst.table.irreducibles[static_cast<std::size_t>(m)]) ==
                        lifted)
                        found = true;
                c.require(found, inst.name + " p=" + std::to_string(p) + ": inflation missing from B0");
            }
        }
        if (inst.name == "S3") {
            auto blocks = block_partition(inst.table, 2);
            c.require(blocks.size() == 2, "S3 p=2 must have two blocks");
            const Block& pb = principal_block(blocks);
            c.require(pb.members.size() == 2 && pb.defect == 1, "S3 principal 2-block must be {1, sgn}, defect 1");
            for (int m : pb.members)
                c.require(inst.table.irreducibles[static_cast<std::size_t>(m)].degree() == 1,
                          "S3 principal 2-block member of degree != 1");
            for (const auto& b : blocks)
                if (!b.principal)
                    c.require(b.members.size() == 1 && b.defect == 0 &&
                                  inst.table.irreducibles[static_cast<std::size_t>(b.members[0])].degree() == 2,
                              "S3 non-principal 2-block must be the defect-0 {chi_2}");
        }
    }
    c.finish();
}

// 10. Determinism: two sweeps with the same seed are byte-identical.
static void criterion_10() {
    Criterion c("10 determinism: repeated catalog sweeps serialize byte-identically");
    SweepOptions opt;
    opt.seed = kDefaultSeed;
    auto out1 = run_sweep(opt);
    auto out2 = run_sweep(opt);
    c.require(out1.doc.dump(2) == out2.doc.dump(2), "sweep bytes differ between runs");
    c.require(out1.all_pass, "sweep reported check failures");
    // and the reports validate against the published schema
    std::ifstream in(std::filesystem::path(BLOCKLAB_SOURCE_DIR) / "report.schema.json");
    std::stringstream buf;
    buf << in.rdbuf();
    auto schema = nlohmann::ordered_json::parse(buf.str());
    for (const auto& rep : out1.doc["reports"]) {
        auto errs = validate_against_schema(rep, schema);
        c.require(errs.empty(), "schema violation: " + (errs.empty() ? "" : errs[0]));
    }
    c.finish();
}

int main() {
    std::cout << "blocklab acceptance suite (exact arithmetic; every tolerance is equality)\n";
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    if (g_failures == 0) {
        std::cout << "acceptance: all 10 criteria pass\n";
        return 0;
    }
    std::cout << "acceptance: " << g_failures << " criteria FAILED\n";
    return 1;
}
