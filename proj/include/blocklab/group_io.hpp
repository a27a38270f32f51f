#pragma once

#include <string>
#include <vector>

#include "blocklab/group.hpp"

namespace blocklab {

// Parsed form of the group file format:
//   line 1: "perm <degree>", then one generator per nonempty line as a
//           space-separated 1-based image list; or
//   line 1: "cayley <n>", then n rows of n 0-based indices.
// Lines starting with '#' are comments.
struct ParsedGroupFile {
    bool is_perm = false;
    int degree = 0;                        // perm form
    std::vector<Perm> generators;          // 0-based images
    std::vector<std::vector<int>> table;   // cayley form
};

ParsedGroupFile parse_group_text(const std::string& text);

// Parse + construct. Throws ParseError, NotAGroup, TooLarge.
Group group_from_text(const std::string& text, int cap = Group::kDefaultElementCap);

// FNV-1a 64-bit content hash, 16 hex digits. Used for group ids and cache keys.
std::string content_hash(const std::string& text);

}  // namespace blocklab
