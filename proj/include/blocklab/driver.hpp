#pragma once

#include "blocklab/catalog.hpp"
#include "blocklab/chartab_io.hpp"
#include "blocklab/verify.hpp"

namespace blocklab {

// A group input: "builtin:<name>" from the catalog, or a file path.
struct GroupSource {
    std::string display_id;  // builtin:NAME or file:<hash>
    std::string text;        // group file content
};

GroupSource load_group_source(const std::string& source);

std::shared_ptr<const GroupCtx> build_ctx(const GroupSource& src, int cap = Group::kDefaultElementCap);

// Primes dividing the group order, ascending.
std::vector<i64> applicable_primes(const Group& g);

json blocks_to_json(const CharacterTable& table, const std::vector<Block>& blocks);

// Full report document (the shape published in report.schema.json).
json report_to_json(const VerificationReport& report, const CharacterTable& table,
                    const std::vector<Block>& blocks, u64 seed);

// Text rendering with the same facts as the JSON.
std::string report_to_text(const json& report_doc);

struct VerifyOptions {
    i64 p = 2;
    u64 seed = kDefaultSeed;
    std::string cache_dir;
    std::vector<std::string> check_filter;  // empty = all
    int cap = Group::kDefaultElementCap;
};

struct VerifyOutcome {
    json doc;
    bool all_pass = true;
    std::vector<std::string> warnings;
};

VerifyOutcome run_verify(const GroupSource& src, const VerifyOptions& opt);

struct SweepOptions {
    std::vector<i64> primes_filter;  // empty = all applicable
    u64 seed = kDefaultSeed;
    std::string cache_dir;
};

struct SweepOutcome {
    json doc;
    bool all_pass = true;
    std::vector<std::string> warnings;
};

// Verifies every catalog entry for each applicable prime, in catalog order.
// Deterministic: two runs with the same seed serialize identically.
SweepOutcome run_sweep(const SweepOptions& opt);

std::string sweep_to_text(const json& sweep_doc);

}  // namespace blocklab
