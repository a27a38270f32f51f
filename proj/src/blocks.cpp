#include "blocklab/blocks.hpp"

#include <algorithm>
#include <map>

namespace blocklab {

std::vector<CentralCharacter> central_characters(const CharacterTable& table) {
    const auto& cls = table.ctx->classes;
    std::vector<CentralCharacter> out;
    for (std::size_t i = 0; i < table.irreducibles.size(); ++i) {
        const Character& chi = table.irreducibles[i];
        Cyclotomic deg(chi.degree());
        std::vector<Cyclotomic> omega;
        omega.reserve(cls.count());
        for (std::size_t k = 0; k < cls.count(); ++k) {
            Cyclotomic w = Cyclotomic(to_int(static_cast<i64>(cls.classes[k].size()))) * chi.on_class(k) / deg;
            if (!w.is_integral()) throw NotIntegral("central character value " + w.to_string());
            omega.push_back(std::move(w));
        }
        out.push_back(CentralCharacter{static_cast<int>(i), std::move(omega)});
    }
    return out;
}

std::vector<Block> block_partition(const CharacterTable& table, i64 p) {
    IdealEmbedding emb(p, table.ctx->group.exponent());
    return block_partition(table, p, emb);
}

std::vector<Block> block_partition(const CharacterTable& table, i64 p, const IdealEmbedding& emb) {
    if (!is_prime(p)) throw Error("block_partition: p must be prime");
    if (emb.p() != p || emb.n() % table.ctx->group.exponent() != 0)
        throw Error("block_partition: embedding does not match (p, exp(G))");
    auto omegas = central_characters(table);

    std::map<std::vector<std::vector<i64>>, std::vector<int>> by_fingerprint;
    for (const auto& cc : omegas) {
        std::vector<std::vector<i64>> fp;
        fp.reserve(cc.omega.size());
        for (const auto& w : cc.omega) fp.push_back(emb.embed(w));
        by_fingerprint[std::move(fp)].push_back(cc.character_index);
    }

    const i64 a = valuation(static_cast<i64>(table.ctx->group.size()), p);  // p^a = |G|_p

    int trivial_idx = trivial_character_index(table);
    std::vector<Block> blocks;
    for (auto& [fp, members] : by_fingerprint) {
        std::sort(members.begin(), members.end());
        i64 min_v = -1;
        for (int idx : members) {
            Int deg = table.irreducibles[static_cast<std::size_t>(idx)].degree();
            i64 v = valuation(deg, p);
            if (min_v < 0 || v < min_v) min_v = v;
        }
        Block b;
        b.p = p;
        b.defect = static_cast<int>(a - min_v);
        b.members = members;
        for (int idx : members) {
            i64 v = valuation(table.irreducibles[static_cast<std::size_t>(idx)].degree(), p);
            b.heights.push_back(static_cast<int>(v - (a - b.defect)));
        }
        b.principal = std::binary_search(members.begin(), members.end(), trivial_idx);
        blocks.push_back(std::move(b));
    }
    std::sort(blocks.begin(), blocks.end(), [](const Block& x, const Block& y) { return x.members[0] < y.members[0]; });
    return blocks;
}

const Block& principal_block(const std::vector<Block>& blocks) {
    for (const auto& b : blocks)
        if (b.principal) return b;
    throw InternalError("no principal block");
}

std::vector<int> height_zero_members(const Block& b) {
    std::vector<int> out;
    for (std::size_t i = 0; i < b.members.size(); ++i)
        if (b.heights[i] == 0) out.push_back(b.members[i]);
    return out;
}

}  // namespace blocklab
