#pragma once

#include "blocklab/blocks.hpp"

// vendored single-header nlohmann/json
#include "json.hpp"

namespace blocklab {

using json = nlohmann::ordered_json;

struct CheckRecord {
    enum class Status { Pass, Fail, NotApplicable };

    std::string id;
    Status status = Status::Pass;
    json witness;  // exact values, serialized

    bool failed() const { return status == Status::Fail; }
};

const char* status_name(CheckRecord::Status s);

// One (G, p) verification instance. Every id from check_id_list() appears
// exactly once; any Fail contradicts a proven theorem and means the engine
// itself is broken.
struct VerificationReport {
    std::string group_id;
    i64 p = 0;
    bool hypothesis_holds = false;
    std::vector<CheckRecord> checks;

    bool all_pass() const;
};

const std::vector<std::string>& check_id_list();

// --- individual checkers ---

// Theorem 1: the hypothesis forces a normal p-complement.
CheckRecord verify_burnside(const GroupCtx& ctx, i64 p);

// Lemma 2.1 as a checkable predicate: psi(zy) = psi(z) for psi in Irr(B0),
// z a nonidentity p-element whose centralizer has a normal p-complement,
// y p-regular in that centralizer.
CheckRecord verify_lemma_2_1(const std::shared_ptr<const GroupCtx>& ctx, i64 p, const CharacterTable& table,
                             const Block& b0);

// Lemma 2.2 at element and cyclic-subgroup level.
CheckRecord verify_fusion(const std::shared_ptr<const GroupCtx>& ctx, i64 p);

// Lemma 2.3 / (E:2) for one pair of class functions.
CheckRecord verify_identity_E2(const CharacterTable& table, i64 p, const ClassFunction& psi,
                               const ClassFunction& eta);

// (E:2) over all pairs from Irr(B0) plus the trivial character.
CheckRecord verify_identity_E2_pairs(const CharacterTable& table, i64 p, const Block& b0);

// Lemma 2.4 over a deterministic family of root-of-unity sums plus seeded
// random samples. Group-independent; results are cached per (p, seed).
CheckRecord verify_lemma_2_4(i64 p, u64 seed);

// Lemma 2.5 (contrapositive descent to O^p(G)) and Lemma 2.6 (hypothesis
// passes to quotients; p does not divide |Z(G)|).
std::pair<CheckRecord, CheckRecord> verify_lemma_2_5_2_6(const std::shared_ptr<const GroupCtx>& ctx, i64 p);

// The section-3 chain (E:3)-(E:10) instantiated on a hypothesis-satisfying
// group, plus the Kronecker root-of-unity step and the per-term Siegel
// consistency check. Returns records for ids sec3/* and sec1/siegel.
std::vector<CheckRecord> verify_section3_chain(const CharacterTable& table, i64 p, const Block& b0);

// Thompson's corollary: each irreducible is zero or a root of unity on at
// least a third of the elements.
CheckRecord verify_thompson_third(const CharacterTable& table);

// Runs every checker and assembles the full report.
VerificationReport verify_instance(const std::shared_ptr<const GroupCtx>& ctx, i64 p, const CharacterTable& table,
                                   u64 seed = kDefaultSeed);

}  // namespace blocklab
