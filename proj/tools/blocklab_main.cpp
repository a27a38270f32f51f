// blocklab command-line tool: exact character tables, p-blocks, and the
// verification harness over the builtin catalog or external group files.

#include <cstdlib>
#include <iostream>

#include "CLI11.hpp"
#include "blocklab/driver.hpp"

namespace {

using namespace blocklab;

std::string cache_dir_or_env(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    const char* env = std::getenv("BLOCKLAB_CACHE");
    return env ? std::string(env) : std::string();
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

void print_warnings(const std::vector<std::string>& warnings) {
    for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
}

int cmd_table(const std::string& group_spec, bool as_json, u64 seed, const std::string& cache_dir, int cap) {
    GroupSource src = load_group_source(group_spec);
    auto ctx = build_ctx(src, cap);
    std::vector<std::string> warnings;
    CharacterTable table = table_with_cache(ctx, src.text, cache_dir, seed, &warnings);
    print_warnings(warnings);
    if (as_json)
        std::cout << table_to_json(table).dump(2) << "\n";
    else
        std::cout << table_to_text(table);
    return 0;
}

int cmd_verify(const std::string& group_spec, i64 p, bool as_json, u64 seed, const std::string& cache_dir,
               const std::string& checks, int cap) {
    if (!is_prime(p)) throw ParseError("-p expects a prime");
    GroupSource src = load_group_source(group_spec);
    VerifyOptions opt;
    opt.p = p;
    opt.seed = seed;
    opt.cache_dir = cache_dir;
    opt.check_filter = split_list(checks);
    opt.cap = cap;
    VerifyOutcome out = run_verify(src, opt);
    print_warnings(out.warnings);
    if (as_json)
        std::cout << out.doc.dump(2) << "\n";
    else
        std::cout << report_to_text(out.doc);
    return out.all_pass ? 0 : 1;
}

int cmd_sweep(const std::string& primes, bool as_json, u64 seed, const std::string& cache_dir) {
    SweepOptions opt;
    opt.seed = seed;
    opt.cache_dir = cache_dir;
    for (const auto& tok : split_list(primes)) {
        try {
            opt.primes_filter.push_back(std::stoll(tok));
        } catch (const std::exception&) {
            throw ParseError("--primes expects a comma-separated list of primes");
        }
    }
    for (i64 p : opt.primes_filter)
        if (!is_prime(p)) throw ParseError("--primes entries must be prime");
    SweepOutcome out = run_sweep(opt);
    print_warnings(out.warnings);
    if (as_json)
        std::cout << out.doc.dump(2) << "\n";
    else
        std::cout << sweep_to_text(out.doc);
    return out.all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"blocklab: exact character tables, p-blocks, and block-theoretic verification"};
    app.require_subcommand(1);

    std::string group_spec, cache_flag, checks, primes;
    bool as_json = false, as_text = false;
    u64 seed = blocklab::kDefaultSeed;
    long long p = 2;
    int cap = blocklab::Group::kDefaultElementCap;

    auto add_common = [&](CLI::App* sub, bool with_group) {
        if (with_group)
            sub->add_option("--group", group_spec, "builtin:<name> or path to a group file")->required();
        CLI::Option* json_flag = sub->add_flag("--json", as_json, "machine-readable JSON output");
        sub->add_flag("--text", as_text, "human-readable output (default)")->excludes(json_flag);
        sub->add_option("--seed", seed, "seed for the randomized internals");
        sub->add_option("--cache-dir", cache_flag, "table cache directory (or env BLOCKLAB_CACHE)");
    };

    CLI::App* table = app.add_subcommand("table", "compute and print the character table");
    add_common(table, true);
    table->add_option("--cap", cap, "element-count cap for group enumeration");

    CLI::App* verify = app.add_subcommand("verify", "run the verification checks for one (group, p)");
    add_common(verify, true);
    verify->add_option("-p,--prime", p, "the prime p")->required();
    verify->add_option("--checks", checks, "comma-separated check ids to keep");
    verify->add_option("--cap", cap, "element-count cap for group enumeration");

    CLI::App* sweep = app.add_subcommand("sweep", "verify every catalog group for each applicable prime");
    add_common(sweep, false);
    sweep->add_option("--primes", primes, "restrict to these primes (comma-separated)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        std::string cache_dir = cache_dir_or_env(cache_flag);
        if (table->parsed()) return cmd_table(group_spec, as_json, seed, cache_dir, cap);
        if (verify->parsed()) return cmd_verify(group_spec, p, as_json, seed, cache_dir, checks, cap);
        if (sweep->parsed()) return cmd_sweep(primes, as_json, seed, cache_dir);
    } catch (const blocklab::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const blocklab::NotAGroup& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const blocklab::TooLarge& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 5;
    }
    return 2;
}
