#pragma once

#include "blocklab/chartab.hpp"
#include "json.hpp"

namespace blocklab {

// JSON form of a table; also the cache file content (stable byte-for-byte
// for a given group file).
nlohmann::ordered_json table_to_json(const CharacterTable& table);
std::string serialize_table(const CharacterTable& table);

// Rebuild a table from serialized bytes against a known group context.
// Throws ParseError on any mismatch or corruption (including failed
// orthogonality re-verification).
CharacterTable parse_table(const std::string& bytes, std::shared_ptr<const GroupCtx> ctx);

// Human-readable grid with the same facts as the JSON.
std::string table_to_text(const CharacterTable& table);

// Cached table computation. cache_dir may be empty (no caching); corrupted
// cache entries are rebuilt and rewritten with a warning. Writes are
// atomic (temp file + rename).
CharacterTable table_with_cache(std::shared_ptr<const GroupCtx> ctx, const std::string& group_text,
                                const std::string& cache_dir, u64 seed, std::vector<std::string>* warnings);

}  // namespace blocklab
