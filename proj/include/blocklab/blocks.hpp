#pragma once

#include "blocklab/chartab.hpp"
#include "blocklab/finite_field.hpp"

namespace blocklab {

// omega_chi(K) = |K| chi(g_K) / chi(1), an algebraic integer.
struct CentralCharacter {
    int character_index;
    std::vector<Cyclotomic> omega;
};

// Exact central character values; integrality is asserted (NotIntegral is a
// bug signal, central characters are always algebraic integers).
std::vector<CentralCharacter> central_characters(const CharacterTable& table);

struct Block {
    i64 p;
    std::vector<int> members;   // character indices, ascending
    int defect;
    std::vector<int> heights;   // parallel to members
    bool principal;
};

// p-block partition: chi ~ psi iff their central characters agree under the
// ideal embedding for conductor exp(G) (class-by-class fingerprint match).
// Blocks are sorted by smallest member index.
std::vector<Block> block_partition(const CharacterTable& table, i64 p);
std::vector<Block> block_partition(const CharacterTable& table, i64 p, const IdealEmbedding& emb);

const Block& principal_block(const std::vector<Block>& blocks);
std::vector<int> height_zero_members(const Block& b);

}  // namespace blocklab
