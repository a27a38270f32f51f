#include "blocklab/driver.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "blocklab/group_io.hpp"

namespace blocklab {

GroupSource load_group_source(const std::string& source) {
    const std::string prefix = "builtin:";
    if (source.rfind(prefix, 0) == 0) {
        std::string name = source.substr(prefix.size());
        const CatalogEntry* entry = find_builtin(name);
        if (!entry) throw ParseError("unknown builtin group '" + name + "'");
        return GroupSource{"builtin:" + name, entry->text};
    }
    std::ifstream in(source, std::ios::binary);
    if (!in) throw ParseError("cannot read group file '" + source + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return GroupSource{"file:" + content_hash(buf.str()), buf.str()};
}

std::shared_ptr<const GroupCtx> build_ctx(const GroupSource& src, int cap) {
    return make_group_ctx(group_from_text(src.text, cap), src.display_id);
}

std::vector<i64> applicable_primes(const Group& g) {
    std::vector<i64> primes;
    for (auto [p, e] : factorize(g.size())) primes.push_back(p);
    return primes;
}

json blocks_to_json(const CharacterTable& table, const std::vector<Block>& blocks) {
    json out = json::array();
    for (const auto& b : blocks) {
        json members = json::array();
        for (std::size_t i = 0; i < b.members.size(); ++i)
            members.push_back({{"index", b.members[i]},
                               {"degree", table.irreducibles[static_cast<std::size_t>(b.members[i])].degree().get_si()},
                               {"height", b.heights[i]}});
        out.push_back({{"p", b.p}, {"defect", b.defect}, {"members", std::move(members)}, {"principal", b.principal}});
    }
    return out;
}

json report_to_json(const VerificationReport& report, const CharacterTable& table,
                    const std::vector<Block>& blocks, u64 seed) {
    const auto& ctx = *table.ctx;
    json doc;
    doc["schema"] = "blocklab-report-v1";
    doc["group"] = {{"id", report.group_id},
                    {"order", ctx.group.size()},
                    {"exponent", ctx.group.exponent()},
                    {"class_count", ctx.classes.count()}};
    doc["p"] = report.p;
    doc["seed"] = seed;
    doc["hypothesis_holds"] = report.hypothesis_holds;
    auto complement = normal_p_complement(ctx.group, report.p);
    doc["normal_p_complement_order"] = complement ? json(complement->order()) : json(nullptr);
    doc["blocks"] = blocks_to_json(table, blocks);

    // Classical cross-check (not one of the numbered checks): with a normal
    // p-complement K, the principal block is exactly the inflations of
    // Irr(G/K), compared value for value.
    bool cross_ok = true;
    if (complement) {
        const Block& pb = principal_block(blocks);
        auto parent = table.ctx;
        QuotientCtx quo = quotient_ctx(parent, *complement);
        auto qt = character_table(quo.ctx, seed);
        if (qt.irreducibles.size() != pb.members.size()) cross_ok = false;
        for (const auto& qchi : qt.irreducibles) {
            ClassFunction lifted = inflate(qchi, quo, parent);
            bool found = false;
            for (int m : pb.members)
                if (static_cast<const ClassFunction&>(table.irreducibles[static_cast<std::size_t>(m)]) == lifted)
                    found = true;
            if (!found) cross_ok = false;
        }
        doc["classical_cross_check"] = {
            {"statement", "Irr(B0) equals the inflations of Irr(G/K) for the normal p-complement K"},
            {"holds", cross_ok}};
    } else {
        doc["classical_cross_check"] = nullptr;
    }

    json checks = json::array();
    for (const auto& c : report.checks)
        checks.push_back({{"id", c.id}, {"status", status_name(c.status)}, {"witness", c.witness}});
    doc["checks"] = std::move(checks);
    doc["all_pass"] = report.all_pass() && cross_ok;
    return doc;
}

std::string report_to_text(const json& doc) {
    std::ostringstream os;
    os << "group " << doc["group"]["id"].get<std::string>() << "  |G| = " << doc["group"]["order"]
       << "  p = " << doc["p"] << "  hypothesis C_G(P)=N_G(P): " << (doc["hypothesis_holds"].get<bool>() ? "holds" : "fails")
       << "\n";
    if (doc["normal_p_complement_order"].is_null())
        os << "normal p-complement: none\n";
    else
        os << "normal p-complement: order " << doc["normal_p_complement_order"] << "\n";
    os << "blocks:";
    for (const auto& b : doc["blocks"]) {
        os << "  {p=" << b["p"] << " defect=" << b["defect"] << (b["principal"].get<bool>() ? " principal" : "")
           << " degrees=[";
        bool first = true;
        for (const auto& m : b["members"]) {
            os << (first ? "" : ",") << m["degree"];
            first = false;
        }
        os << "]}";
    }
    os << "\n";
    if (!doc["classical_cross_check"].is_null()) {
        const auto& cc = doc["classical_cross_check"];
        os << "classical cross-check: " << cc["statement"].get<std::string>() << " -> "
           << (cc["holds"].get<bool>() ? "holds" : "FAILS") << "\n";
    }
    std::size_t width = 0;
    for (const auto& c : doc["checks"]) width = std::max(width, c["id"].get<std::string>().size());
    for (const auto& c : doc["checks"]) {
        std::string id = c["id"].get<std::string>();
        os << "  " << id << std::string(width - id.size(), ' ') << "  " << c["status"].get<std::string>();
        const json& w = c["witness"];
        if (w.contains("failure")) os << "  " << w["failure"].dump();
        else if (w.contains("reason")) os << "  (" << w["reason"].get<std::string>() << ")";
        os << "\n";
    }
    os << (doc["all_pass"].get<bool>() ? "result: all checks pass" : "result: CHECK FAILURES PRESENT") << "\n";
    return os.str();
}

VerifyOutcome run_verify(const GroupSource& src, const VerifyOptions& opt) {
    VerifyOutcome out;
    auto ctx = build_ctx(src, opt.cap);
    CharacterTable table = table_with_cache(ctx, src.text, opt.cache_dir, opt.seed, &out.warnings);
    auto blocks = block_partition(table, opt.p);
    VerificationReport report = verify_instance(ctx, opt.p, table, opt.seed);
    if (!opt.check_filter.empty()) {
        std::vector<CheckRecord> kept;
        for (auto& c : report.checks)
            for (const auto& want : opt.check_filter)
                if (c.id == want) kept.push_back(c);
        report.checks = std::move(kept);
        if (report.checks.empty()) throw ParseError("--checks matched no known check id");
    }
    out.doc = report_to_json(report, table, blocks, opt.seed);
    out.all_pass = out.doc["all_pass"].get<bool>();
    return out;
}

SweepOutcome run_sweep(const SweepOptions& opt) {
    SweepOutcome out;
    out.doc["schema"] = "blocklab-sweep-v1";
    out.doc["seed"] = opt.seed;
    json reports = json::array();
    for (const auto& entry : builtin_catalog()) {
        GroupSource src{"builtin:" + entry.name, entry.text};
        auto ctx = build_ctx(src);
        if (ctx->group.size() != entry.order)
            throw InternalError("catalog entry " + entry.name + " has wrong advertised order");
        CharacterTable table = table_with_cache(ctx, src.text, opt.cache_dir, opt.seed, &out.warnings);
        for (i64 p : applicable_primes(ctx->group)) {
            if (!opt.primes_filter.empty() &&
                std::find(opt.primes_filter.begin(), opt.primes_filter.end(), p) == opt.primes_filter.end())
                continue;
            auto blocks = block_partition(table, p);
            VerificationReport report = verify_instance(ctx, p, table, opt.seed);
            json doc = report_to_json(report, table, blocks, opt.seed);
            if (!doc["all_pass"].get<bool>()) out.all_pass = false;
            reports.push_back(std::move(doc));
        }
    }
    out.doc["reports"] = std::move(reports);
    out.doc["all_pass"] = out.all_pass;
    return out;
}

std::string sweep_to_text(const json& doc) {
    // status matrix: one row per group, one column per prime present
    std::vector<i64> primes;
    std::map<std::string, std::map<i64, std::string>> cells;
    std::vector<std::string> order;
    for (const auto& rep : doc["reports"]) {
        std::string gid = rep["group"]["id"].get<std::string>();
        i64 p = rep["p"].get<i64>();
        if (std::find(primes.begin(), primes.end(), p) == primes.end()) primes.push_back(p);
        if (!cells.count(gid)) order.push_back(gid);
        int fails = 0, nas = 0;
        for (const auto& c : rep["checks"]) {
            std::string st = c["status"].get<std::string>();
            if (st == "fail") ++fails;
            if (st == "not-applicable") ++nas;
        }
        std::ostringstream cell;
        cell << (fails ? "FAIL" : "pass");
        if (nas) cell << "(" << nas << " n/a)";
        cells[gid][p] = cell.str();
    }
    std::sort(primes.begin(), primes.end());
    std::size_t name_w = 5;
    for (const auto& gid : order) name_w = std::max(name_w, gid.size());
    std::ostringstream os;
    os << std::string(name_w, ' ');
    for (i64 p : primes) os << "  p=" << p << std::string(11, ' ');
    os << "\n";
    for (const auto& gid : order) {
        os << gid << std::string(name_w - gid.size(), ' ');
        for (i64 p : primes) {
            std::string cell = cells[gid].count(p) ? cells[gid][p] : "-";
            os << "  " << cell << std::string(cell.size() < 13 ? 13 - cell.size() : 0, ' ');
        }
        os << "\n";
    }
    os << (doc["all_pass"].get<bool>() ? "sweep: all checks pass" : "sweep: CHECK FAILURES PRESENT") << "\n";
    return os.str();
}

}  // namespace blocklab
