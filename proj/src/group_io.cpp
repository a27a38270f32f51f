#include "blocklab/group_io.hpp"

#include <sstream>

#include "blocklab/errors.hpp"

namespace blocklab {

namespace {

std::vector<std::string> content_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::size_t first = line.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        if (line[first] == '#') continue;
        lines.push_back(line);
    }
    return lines;
}

std::vector<long long> parse_ints(const std::string& line, const char* what) {
    std::istringstream in(line);
    std::vector<long long> out;
    std::string tok;
    while (in >> tok) {
        try {
            std::size_t used = 0;
            long long v = std::stoll(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            out.push_back(v);
        } catch (const std::exception&) {
            throw ParseError(std::string(what) + ": bad integer '" + tok + "'");
        }
    }
    return out;
}

}  // namespace

ParsedGroupFile parse_group_text(const std::string& text) {
    auto lines = content_lines(text);
    if (lines.empty()) throw ParseError("empty group file");

    std::istringstream head(lines[0]);
    std::string kind;
    long long param = 0;
    head >> kind >> param;
    std::string trailing;
    if (head >> trailing) throw ParseError("trailing tokens on header line");

    ParsedGroupFile out;
    if (kind == "perm") {
        if (param < 1 || param > 1'000'000) throw ParseError("bad permutation degree");
        out.is_perm = true;
        out.degree = static_cast<int>(param);
        for (std::size_t i = 1; i < lines.size(); ++i) {
            auto images = parse_ints(lines[i], "generator");
            if (static_cast<long long>(images.size()) != param)
                throw ParseError("generator line has " + std::to_string(images.size()) + " images, expected " +
                                 std::to_string(param));
            Perm p(images.size());
            std::vector<bool> seen(images.size(), false);
            for (std::size_t j = 0; j < images.size(); ++j) {
                long long img = images[j];
                if (img < 1 || img > param) throw ParseError("generator image out of range");
                if (seen[static_cast<std::size_t>(img - 1)]) throw ParseError("generator is not a bijection");
                seen[static_cast<std::size_t>(img - 1)] = true;
                p[j] = static_cast<int>(img - 1);
            }
            out.generators.push_back(std::move(p));
        }
    } else if (kind == "cayley") {
        if (param < 1 || param > Group::kDefaultElementCap) throw ParseError("bad cayley size");
        if (lines.size() != static_cast<std::size_t>(param) + 1)
            throw ParseError("cayley table needs exactly " + std::to_string(param) + " rows");
        for (std::size_t i = 1; i < lines.size(); ++i) {
            auto row = parse_ints(lines[i], "cayley row");
            if (static_cast<long long>(row.size()) != param) throw ParseError("cayley row has wrong length");
            std::vector<int> r;
            r.reserve(row.size());
            for (long long v : row) {
                if (v < 0 || v >= param) throw ParseError("cayley entry out of range");
                r.push_back(static_cast<int>(v));
            }
            out.table.push_back(std::move(r));
        }
    } else {
        throw ParseError("unknown header '" + kind + "' (expected 'perm' or 'cayley')");
    }
    return out;
}

Group group_from_text(const std::string& text, int cap) {
    ParsedGroupFile parsed = parse_group_text(text);
    if (parsed.is_perm) return Group::from_permutations(parsed.generators, cap);
    return Group::from_cayley(parsed.table);
}

std::string content_hash(const std::string& text) {
    u64 h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    static const char* hex = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = hex[h & 0xf];
        h >>= 4;
    }
    return out;
}

}  // namespace blocklab
