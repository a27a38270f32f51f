#include "blocklab/chartab_io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "blocklab/group_io.hpp"

namespace blocklab {

using json = nlohmann::ordered_json;

json table_to_json(const CharacterTable& table) {
    const auto& ctx = *table.ctx;
    json j;
    j["schema"] = "blocklab-table-v1";
    j["group"] = {{"id", ctx.id},
                  {"order", ctx.group.size()},
                  {"exponent", ctx.group.exponent()},
                  {"class_count", ctx.classes.count()}};
    j["modulus"] = table.modulus;
    json classes = json::array();
    for (std::size_t k = 0; k < ctx.classes.count(); ++k)
        classes.push_back({{"size", ctx.classes.classes[k].size()},
                           {"rep", ctx.classes.reps[k]},
                           {"rep_order", ctx.group.order(ctx.classes.reps[k])}});
    j["classes"] = std::move(classes);
    json irr = json::array();
    for (const auto& chi : table.irreducibles) {
        json row;
        row["degree"] = chi.degree().get_si();
        json vals = json::array();
        for (std::size_t k = 0; k < chi.class_count(); ++k) vals.push_back(chi.on_class(k).to_string());
        row["values"] = std::move(vals);
        irr.push_back(std::move(row));
    }
    j["irreducibles"] = std::move(irr);
    return j;
}

std::string serialize_table(const CharacterTable& table) { return table_to_json(table).dump(2) + "\n"; }

CharacterTable parse_table(const std::string& bytes, std::shared_ptr<const GroupCtx> ctx) {
    json j = json::parse(bytes, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded()) throw ParseError("table cache is not valid JSON");
    try {
        if (j.at("schema") != "blocklab-table-v1") throw ParseError("unknown table schema");
        if (j.at("group").at("order") != ctx->group.size() ||
            j.at("group").at("class_count") != ctx->classes.count())
            throw ParseError("table cache does not match the group");
        CharacterTable table;
        table.ctx = ctx;
        table.modulus = j.at("modulus").get<i64>();
        for (const auto& row : j.at("irreducibles")) {
            std::vector<Cyclotomic> values;
            for (const auto& v : row.at("values")) values.push_back(Cyclotomic::parse(v.get<std::string>()));
            Character chi(ctx, std::move(values));
            if (chi.degree() != Int(row.at("degree").get<long>())) throw ParseError("degree mismatch in cache");
            table.irreducibles.push_back(std::move(chi));
        }
        if (table.irreducibles.size() != ctx->classes.count()) throw ParseError("wrong irreducible count in cache");
        if (!check_row_orthogonality(table) || !check_column_orthogonality(table))
            throw ParseError("cached table fails orthogonality");
        return table;
    } catch (const ParseError&) {
        throw;
    } catch (const json::exception& ex) {
        throw ParseError(std::string("table cache malformed: ") + ex.what());
    } catch (const Error& ex) {
        throw ParseError(std::string("table cache invalid: ") + ex.what());
    }
}

namespace {

std::string display_value(const Cyclotomic& v) {
    if (v.is_rational()) return rat_to_string(v.rational_value());
    return v.to_string();
}

}  // namespace

std::string table_to_text(const CharacterTable& table) {
    const auto& ctx = *table.ctx;
    const std::size_t r = ctx.classes.count();
    std::vector<std::vector<std::string>> grid;
    std::vector<std::string> head{"class"};
    for (std::size_t k = 0; k < r; ++k) head.push_back("K" + std::to_string(k));
    grid.push_back(head);
    std::vector<std::string> sizes{"size"};
    std::vector<std::string> orders{"rep order"};
    for (std::size_t k = 0; k < r; ++k) {
        sizes.push_back(std::to_string(ctx.classes.classes[k].size()));
        orders.push_back(std::to_string(ctx.group.order(ctx.classes.reps[k])));
    }
    grid.push_back(sizes);
    grid.push_back(orders);
    for (std::size_t i = 0; i < table.irreducibles.size(); ++i) {
        std::vector<std::string> row{"X" + std::to_string(i)};
        for (std::size_t k = 0; k < r; ++k) row.push_back(display_value(table.irreducibles[i].on_class(k)));
        grid.push_back(std::move(row));
    }
    std::vector<std::size_t> width(r + 1, 0);
    for (const auto& row : grid)
        for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    std::ostringstream os;
    os << "group " << ctx.id << "  order " << ctx.group.size() << "  exponent " << ctx.group.exponent()
       << "  classes " << r << "  q " << table.modulus << "\n";
    for (const auto& row : grid) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            os << (c == 0 ? "" : "  ");
            os << row[c] << std::string(width[c] - row[c].size(), ' ');
        }
        os << "\n";
    }
    return os.str();
}

CharacterTable table_with_cache(std::shared_ptr<const GroupCtx> ctx, const std::string& group_text,
                                const std::string& cache_dir, u64 seed, std::vector<std::string>* warnings) {
    if (cache_dir.empty()) return character_table(std::move(ctx), seed);
    namespace fs = std::filesystem;
    fs::path dir(cache_dir);
    std::error_code ec;
    fs::create_directories(dir, ec);
    fs::path file = dir / (content_hash(group_text) + ".table.json");

    if (fs::exists(file)) {
        std::ifstream in(file, std::ios::binary);
        std::stringstream buf;
        buf << in.rdbuf();
        try {
            return parse_table(buf.str(), ctx);
        } catch (const ParseError& ex) {
            if (warnings) warnings->push_back("cache entry " + file.string() + " rebuilt: " + ex.what());
        }
    }

    CharacterTable table = character_table(ctx, seed);
    std::string bytes = serialize_table(table);
    fs::path tmp = file;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out << bytes;
    }
    fs::rename(tmp, file, ec);
    if (ec && warnings) warnings->push_back("cache write failed: " + ec.message());
    return table;
}

}  // namespace blocklab
