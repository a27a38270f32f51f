// Drives the blocklab binary end to end: exit codes, output modes,
// determinism, and cache behavior. Usage: cli_harness <path-to-blocklab>

#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

int g_failures = 0;
std::string g_binary;
fs::path g_tmp;

struct RunResult {
    int exit_code;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

RunResult run(const std::string& args) {
    fs::path out = g_tmp / "stdout.txt";
    fs::path err = g_tmp / "stderr.txt";
    std::string cmd = g_binary + " " + args + " > " + out.string() + " 2> " + err.string();
    int rc = std::system(cmd.c_str());
    int code = (rc >= 0 && WIFEXITED(rc)) ? WEXITSTATUS(rc) : -1;
    return RunResult{code, slurp(out), slurp(err)};
}

void expect(bool cond, const std::string& what) {
    if (!cond) {
        std::cout << "FAIL  " << what << "\n";
        ++g_failures;
    } else {
        std::cout << "ok    " << what << "\n";
    }
}

void write_file(const fs::path& p, const std::string& content) {
    std::ofstream out(p, std::ios::binary | std::ios::trunc);
    out << content;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: cli_harness <blocklab binary>\n";
        return 2;
    }
    g_binary = argv[1];
    g_tmp = fs::temp_directory_path() / ("blocklab_cli_" + std::to_string(::getpid()));
    fs::create_directories(g_tmp);

    // --- happy paths ---
    auto t = run("table --group builtin:C2");
    expect(t.exit_code == 0, "table builtin:C2 exits 0");
    expect(t.out.find("order 2") != std::string::npos, "table shows the order");

    auto tj = run("table --group builtin:S3 --json");
    expect(tj.exit_code == 0, "table --json exits 0");
    expect(tj.out.find("\"degree\": 2") != std::string::npos, "S3 table has a degree-2 row");
    expect(tj.out.find("blocklab-table-v1") != std::string::npos, "table JSON carries its schema tag");

    auto v = run("verify --group builtin:S3 -p 2");
    expect(v.exit_code == 0, "verify S3 p=2 exits 0");
    expect(v.out.find("all checks pass") != std::string::npos, "verify S3 p=2 passes");

    auto v3 = run("verify --group builtin:S3 -p 3");
    expect(v3.exit_code == 0, "verify S3 p=3 exits 0 (vacuous checks are not failures)");
    expect(v3.out.find("not-applicable") != std::string::npos, "verify S3 p=3 reports not-applicable checks");

    auto vf = run("verify --group builtin:A4 -p 3 --checks sec3/E7 --json");
    expect(vf.exit_code == 0, "verify --checks exits 0");
    expect(vf.out.find("sec3/E7") != std::string::npos, "filtered report keeps the requested id");
    expect(vf.out.find("lem2.1") == std::string::npos, "filtered report drops other ids");

    // a user-supplied group file goes through the same pipeline with a
    // content-hash id
    fs::path d10 = g_tmp / "d10.grp";
    write_file(d10, "perm 5\n2 3 4 5 1\n1 5 4 3 2\n");
    auto vfile = run("verify --group " + d10.string() + " -p 2");
    expect(vfile.exit_code == 0, "verify on a group file exits 0");
    expect(vfile.out.find("file:") != std::string::npos, "file inputs are identified by content hash");

    auto vtriv = run("verify --group builtin:C1 -p 2");
    expect(vtriv.exit_code == 0, "verify on the trivial group exits 0");

    // --- error paths and exit codes ---
    auto missing = run("verify --group " + (g_tmp / "missing.grp").string() + " -p 2");
    expect(missing.exit_code == 2, "missing group file exits 2");

    fs::path bad_gen = g_tmp / "bad_gen.grp";
    write_file(bad_gen, "perm 3\n1 1 2\n");
    auto badg = run("table --group " + bad_gen.string());
    expect(badg.exit_code == 2, "non-bijective generator exits 2 (parse error)");

    fs::path bad_cayley = g_tmp / "bad_cayley.grp";
    write_file(bad_cayley, "cayley 2\n0 0\n0 0\n");
    auto badc = run("table --group " + bad_cayley.string());
    expect(badc.exit_code == 3, "broken cayley table exits 3 (group-axiom failure)");

    fs::path big = g_tmp / "c30.grp";
    write_file(big, "perm 30\n2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20 21 22 23 24 25 26 27 28 29 30 1\n");
    auto toolarge = run("table --group " + big.string() + " --cap 8");
    expect(toolarge.exit_code == 4, "enumeration past --cap exits 4");

    auto badflag = run("verify --group builtin:S3");
    expect(badflag.exit_code == 2, "missing -p exits 2");

    auto badprime = run("verify --group builtin:S3 -p 6");
    expect(badprime.exit_code == 2, "non-prime -p exits 2");

    // --- determinism ---
    auto j1 = run("verify --group builtin:F20 -p 2 --json");
    auto j2 = run("verify --group builtin:F20 -p 2 --json");
    expect(j1.exit_code == 0 && j2.exit_code == 0, "verify F20 p=2 exits 0");
    expect(j1.out == j2.out, "verify --json is byte-identical across runs");

    auto s1 = run("sweep --primes 2 --json");
    auto s2 = run("sweep --primes 2 --json");
    expect(s1.exit_code == 0, "sweep --primes 2 exits 0");
    expect(s1.out == s2.out, "sweep --json is byte-identical across runs");
    expect(s1.out.find("blocklab-sweep-v1") != std::string::npos, "sweep JSON carries its schema tag");

    auto stext = run("sweep --primes 2");
    expect(stext.exit_code == 0, "text sweep exits 0");
    expect(stext.out.find("builtin:S6") != std::string::npos, "text sweep lists S6");

    auto sdef = run("sweep");
    expect(sdef.exit_code == 0, "default sweep exits 0");
    expect(sdef.out.find("all checks pass") != std::string::npos, "default sweep is an all-pass summary");
    int rows = 0;
    for (std::size_t pos = 0; (pos = sdef.out.find("builtin:", pos)) != std::string::npos; ++pos) ++rows;
    expect(rows >= 12, "default sweep covers at least 12 groups");

    // --- cache behavior ---
    fs::path cache = g_tmp / "cache";
    auto c1 = run("table --group builtin:SL23 --json --cache-dir " + cache.string());
    expect(c1.exit_code == 0, "table with cache dir exits 0");
    int entries = 0;
    fs::path entry;
    for (const auto& f : fs::directory_iterator(cache))
        if (f.path().extension() == ".json") {
            ++entries;
            entry = f.path();
        }
    expect(entries == 1, "cache holds one entry");
    auto c2 = run("table --group builtin:SL23 --json --cache-dir " + cache.string());
    expect(c2.exit_code == 0 && c2.out == c1.out, "cached reload prints identical bytes");
    expect(c2.err.empty(), "clean cache reload has no warnings");

    write_file(entry, "this is not json");
    auto c3 = run("table --group builtin:SL23 --json --cache-dir " + cache.string());
    expect(c3.exit_code == 0 && c3.out == c1.out, "corrupted cache still yields the right table");
    expect(c3.err.find("warning") != std::string::npos, "corrupted cache emits a warning");
    expect(slurp(entry) != "this is not json", "corrupted cache entry was rewritten");

    // env var cache dir
    fs::path cache2 = g_tmp / "cache_env";
    std::string env_cmd = "BLOCKLAB_CACHE=" + cache2.string() + " " + g_binary +
                          " table --group builtin:D8 > /dev/null 2>&1";
    int rc = std::system(env_cmd.c_str());
    expect(WIFEXITED(rc) && WEXITSTATUS(rc) == 0, "BLOCKLAB_CACHE env var accepted");
    expect(fs::exists(cache2) && !fs::is_empty(cache2), "BLOCKLAB_CACHE env var populates the cache");

    fs::remove_all(g_tmp);
    if (g_failures == 0) {
        std::cout << "cli harness: all checks pass\n";
        return 0;
    }
    std::cout << "cli harness: " << g_failures << " FAILURES\n";
    return 1;
}
