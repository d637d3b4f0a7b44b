#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "lorenz/cache.hpp"

using namespace lorenz;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct CmdResult {
    int code;
    std::string out;
};

// Run a full shell command line, capturing stdout+stderr and the exit code.
CmdResult run_shell(const std::string& cmd) {
    FILE* pipe = popen((cmd + " 2>&1").c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t n = 0;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

CmdResult run_cli(const std::string& args) {
    return run_shell(std::string(LORENZ_CLI_PATH) + " " + args);
}

// A fresh scratch directory per test case, removed on destruction.
struct TempDir {
    fs::path path;

    TempDir() {
        static int counter = 0;
        path = fs::temp_directory_path() /
               ("lorenzknots_test_" + std::to_string(::getpid()) + "_" +
                std::to_string(counter++));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::size_t count_occurrences(const std::string& haystack, const std::string& needle) {
    std::size_t count = 0;
    for (std::size_t pos = haystack.find(needle); pos != std::string::npos;
         pos = haystack.find(needle, pos + needle.size()))
        ++count;
    return count;
}

LaurentPoly poly(std::initializer_list<std::pair<long, long>> terms) {
    std::vector<std::pair<long, Int>> v;
    for (auto [e, c] : terms) v.emplace_back(e, Int(c));
    return LaurentPoly::from_terms(v);
}

}  // namespace

TEST_CASE("cli: enumerate writes readable fingerprint records") {
    TempDir dir;
    const std::string out_path = dir.file("a.jsonl");
    CmdResult r = run_cli("enumerate --template 0,0 --max-len 3 --output " + out_path);
    CHECK(r.code == 0);
    CHECK(r.out.find("wrote 5 records") != std::string::npos);

    std::vector<CacheRecord> records = read_cache_file(out_path);
    REQUIRE(records.size() == 5);
    std::vector<std::string> words;
    for (const CacheRecord& rec : records) {
        words.push_back(rec.word);
        CHECK(rec.schema_version == kCacheSchemaVersion);
        CHECK(rec.spec == TemplateSpec{0, 0, false});
        CHECK(rec.fp.jones_computed);  // at most 3 strands, well inside budget
    }
    CHECK(words == std::vector<std::string>{"x", "y", "xy", "xxy", "xyy"});
    for (const CacheRecord& rec : records) CHECK(rec.fp.trivial());
}

TEST_CASE("cli: enumerate records carry the twisted-template invariants") {
    TempDir dir;
    const std::string out_path = dir.file("b.jsonl");
    CmdResult r = run_cli("enumerate --template 0,-2 --max-len 4 --output " + out_path);
    CHECK(r.code == 0);

    std::vector<CacheRecord> records = read_cache_file(out_path);
    REQUIRE(records.size() == 8);
    bool saw_xyyy = false;
    for (const CacheRecord& rec : records) {
        if (rec.word != "xyyy") continue;
        saw_xyyy = true;
        CHECK(rec.fp.exponent_sum == -3);
        CHECK(rec.fp.signature == 2);
        CHECK(rec.fp.alexander == poly({{-1, 1}, {0, -1}, {1, 1}}));
        CHECK(rec.fp.determinant == 3);
        REQUIRE(rec.fp.jones_computed);
        CHECK(*rec.fp.jones == poly({{-4, -1}, {-3, 1}, {-1, 1}}));
    }
    CHECK(saw_xyyy);
}

TEST_CASE("cli: enumerate derives its output path from the cache directory") {
    TempDir dir;
    CmdResult r = run_cli("enumerate --template 0,-2 --max-len 2 --cache-dir " +
                          dir.path.string());
    CHECK(r.code == 0);
    const std::string expected = dir.file("orbits_0_-2_len2.jsonl");
    CHECK(fs::exists(expected));
    CHECK(read_cache_file(expected).size() == 3);

    // The environment variable is the fallback when no flag is given.
    CmdResult env_run = run_shell("LORENZ_CACHE_DIR=" + dir.path.string() + " " +
                                  LORENZ_CLI_PATH + " enumerate --template ~1,0 --max-len 2");
    CHECK(env_run.code == 0);
    CHECK(fs::exists(dir.file("orbits_m1_0_len2.jsonl")));
}

TEST_CASE("cli: invariants prints one fingerprint as JSON") {
    CmdResult r = run_cli("invariants --template 0,0 --word xy");
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["template"] == "0,0");
    CHECK(j["word"] == "xy");
    CHECK(j["alexander"] == json::array({{0, "1"}}));
    CHECK(j["determinant"] == "1");
    CHECK(j["signature"] == 0);
    CHECK(j["jones"] == json::array({{0, "1"}}));

    CmdResult tw = run_cli("invariants --template 0,-2 --word xyyy");
    CHECK(tw.code == 0);
    json k = json::parse(tw.out);
    CHECK(k["alexander"] == json::array({{-1, "1"}, {0, "-1"}, {1, "1"}}));
    CHECK(k["signature"] == 2);
    CHECK(k["exponent_sum"] == -3);
}

TEST_CASE("cli: usage and input errors exit 2") {
    CHECK(run_cli("invariants --template 0,0 --word xyxy").code == 2);   // non-primitive
    CHECK(run_cli("invariants --template 0,0 --word xzy").code == 2);    // bad letter
    CHECK(run_cli("invariants --template banana --word xy").code == 2);  // bad template
    CHECK(run_cli("invariants --template 0,0").code == 2);               // missing flag
    CHECK(run_cli("").code == 2);                                        // no subcommand
    CHECK(run_cli("no-such-command").code == 2);

    CmdResult r = run_cli("invariants --template 0,0 --word xyxy");
    CHECK(r.out.find("error:") != std::string::npos);
}

TEST_CASE("cli: verify-inclusion reports and exit codes") {
    CmdResult ok = run_cli(
        "verify-inclusion --sub 0,2 --super 0,0 --sub-max-len 6 --search-len 12");
    CHECK(ok.code == 0);
    CHECK(ok.out.find("verified: yes") != std::string::npos);

    TempDir dir;
    const std::string report = dir.file("rep.json");
    CmdResult bad = run_cli(
        "verify-inclusion --sub 0,-2 --super 0,0 --sub-max-len 4 --search-len 12 "
        "--report " + report);
    CHECK(bad.code == 1);
    CHECK(bad.out.find("verified: no") != std::string::npos);
    CHECK(bad.out.find("unmatched: xyyy") != std::string::npos);

    json j = json::parse(slurp(report));
    CHECK(j["sub"] == "0,-2");
    CHECK(j["super"] == "0,0");
    CHECK(j["verified"] == false);
    REQUIRE(j["unmatched"].size() == 1);
    CHECK(j["unmatched"][0]["word"] == "xyyy");
    CHECK(j["matched"].size() == 7);

    CHECK(run_cli("verify-inclusion --sub nope --super 0,0 --sub-max-len 2 "
                  "--search-len 2").code == 2);
}

TEST_CASE("cli: find-composites expectation flags") {
    CmdResult none = run_cli(
        "find-composites --template 0,0 --max-len 6 --catalog-len 5 --expect-none");
    CHECK(none.code == 0);
    CHECK(none.out.find("composites on 0,0 up to length 6: 0") != std::string::npos);

    CHECK(run_cli("find-composites --template 0,0 --max-len 6 --catalog-len 5 "
                  "--expect-some").code == 1);
    CHECK(run_cli("find-composites --template 0,0 --max-len 6 --catalog-len 5 "
                  "--expect-some --expect-none").code == 2);
}

TEST_CASE("cli: verify-sum witness search") {
    CmdResult triv = run_cli("verify-sum --u x --v x --search-len 5");
    CHECK(triv.code == 0);
    CHECK(triv.out.find("witness: x") != std::string::npos);

    // A positive-braid template cannot hold a nontrivial connected sum.
    CmdResult miss = run_cli("verify-sum --u xyy --v xyy --target 0,0 --search-len 8");
    CHECK(miss.code == 1);
    CHECK(miss.out.find("not found at budget") != std::string::npos);
}

TEST_CASE("cli: emit-diagram text output") {
    CmdResult r = run_cli("emit-diagram --template 0,0 --word xy");
    CHECK(r.code == 0);
    CHECK(r.out.find("strands: 2") != std::string::npos);
    CHECK(r.out.find("crossings: 1") != std::string::npos);
    CHECK(r.out.find('+') != std::string::npos);  // the single positive crossing

    CmdResult slim = run_cli("emit-diagram --template 0,0 --word xyyy --simplified");
    CHECK(slim.code == 0);
    CHECK(slim.out.find("strands: 1") != std::string::npos);
    CHECK(slim.out.find("crossings: 0") != std::string::npos);

    CHECK(run_cli("emit-diagram --template 0,0 --word xy --format bogus").code == 2);
}

TEST_CASE("cli: emit-diagram svg output is deterministic") {
    TempDir dir;
    CmdResult first = run_cli("emit-diagram --template 0,-2 --word xyyy --format svg");
    CHECK(first.code == 0);
    CHECK(first.out.find("<svg") != std::string::npos);
    // One crossing group per braid generator: 9 crossings for this word.
    CHECK(count_occurrences(first.out, "class=\"crossing\"") == 9);

    CmdResult second = run_cli("emit-diagram --template 0,-2 --word xyyy --format svg");
    CHECK(second.out == first.out);

    const std::string path = dir.file("d.svg");
    CmdResult to_file =
        run_cli("emit-diagram --template 0,-2 --word xyyy --format svg --output " + path);
    CHECK(to_file.code == 0);
    CHECK(slurp(path) == first.out);
}

TEST_CASE("cli: build-catalog lists the named entries") {
    CmdResult r = run_cli("build-catalog --catalog-len 5");
    CHECK(r.code == 0);
    CHECK(r.out.find("catalog entries: 3") != std::string::npos);
    CHECK(r.out.find("unknot") != std::string::npos);
    CHECK(r.out.find("trefoil (mirror)") != std::string::npos);

    TempDir dir;
    const std::string path = dir.file("cat.json");
    CmdResult with_file = run_cli("build-catalog --catalog-len 5 --output " + path);
    CHECK(with_file.code == 0);
    json j = json::parse(slurp(path));
    REQUIRE(j["entries"].size() == 3);
    CHECK(j["entries"][0]["name"] == "unknot");
}

TEST_CASE("cache: records round-trip through files") {
    TempDir dir;
    std::vector<CacheRecord> records;
    for (const char* w : {"x", "xy", "xyy"}) {
        CacheRecord r;
        r.spec = TemplateSpec{0, -1, false};
        r.word = w;
        r.fp = fingerprint(OrbitWord(w), r.spec);
        records.push_back(std::move(r));
    }
    const std::string path = dir.file("round.jsonl");
    write_cache_file(path, records);
    CHECK_FALSE(fs::exists(path + ".tmp"));

    std::vector<CacheRecord> back = read_cache_file(path);
    REQUIRE(back.size() == records.size());
    for (std::size_t i = 0; i < back.size(); ++i) {
        CHECK(record_to_json(back[i]) == record_to_json(records[i]));
        CHECK(back[i].fp == records[i].fp);
    }
}

TEST_CASE("cache: merge deduplicates and orders records canonically") {
    auto make = [](int m, int n, const char* w) {
        CacheRecord r;
        r.spec = TemplateSpec{m, n, false};
        r.word = w;
        r.fp = fingerprint(OrbitWord(w), r.spec);
        return r;
    };
    std::vector<CacheRecord> a = {make(0, 0, "xy"), make(0, 0, "x")};
    std::vector<CacheRecord> b = {make(0, -1, "x"), make(0, 0, "xy")};

    std::vector<CacheRecord> ab = merge_records(a, b);
    std::vector<CacheRecord> ba = merge_records(b, a);
    REQUIRE(ab.size() == 3);  // the duplicate 0,0/xy collapses
    REQUIRE(ba.size() == 3);
    for (std::size_t i = 0; i < ab.size(); ++i)
        CHECK(record_to_json(ab[i]) == record_to_json(ba[i]));

    // Sorted by template first, then by word length and spelling.
    CHECK(ab[0].spec == TemplateSpec{0, -1, false});
    CHECK(ab[1].word == "x");
    CHECK(ab[2].word == "xy");
}

TEST_CASE("cache: malformed input is rejected with location info") {
    TempDir dir;
    const std::string path = dir.file("bad.jsonl");
    {
        std::ofstream out(path);
        out << "not json at all\n";
    }
    CHECK_THROWS_AS(read_cache_file(path), InvalidInput);
    try {
        read_cache_file(path);
        FAIL("expected InvalidInput");
    } catch (const InvalidInput& e) {
        CHECK(std::string(e.what()).find(":1") != std::string::npos);
    }

    const std::string versioned = dir.file("ver.jsonl");
    {
        CacheRecord r;
        r.spec = TemplateSpec{0, 0, false};
        r.word = "x";
        r.fp = fingerprint(OrbitWord("x"), r.spec);
        json j = record_to_json(r);
        j["schema_version"] = 999;
        std::ofstream out(versioned);
        out << j.dump() << "\n";
    }
    CHECK_THROWS_AS(read_cache_file(versioned), InvalidInput);

    CHECK_THROWS_AS(read_cache_file(dir.file("missing.jsonl")), InvalidInput);
    CHECK_THROWS_AS(
        write_cache_file((dir.path / "no_dir" / "x.jsonl").string(), {}),
        InvalidInput);
}

TEST_CASE("cache: polynomial JSON accepts string and integer coefficients") {
    LaurentPoly p = poly({{-2, 5}, {0, -7}, {3, 1}});
    CHECK(poly_from_json(poly_to_json(p)) == p);

    json mixed = json::array({{0, 3}, {1, "-4"}});
    CHECK(poly_from_json(mixed) == poly({{0, 3}, {1, -4}}));

    CHECK_THROWS_AS(poly_from_json(json{{"oops", 1}}), InvalidInput);
}
