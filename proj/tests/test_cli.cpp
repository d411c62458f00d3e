#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "curvechi/cache.hpp"

namespace {

namespace fs = std::filesystem;

struct RunResult {
    int exit_code;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& p) {
    std::ifstream f(p);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

RunResult run(const std::string& args) {
    static int counter = 0;
    fs::path dir = fs::temp_directory_path() / "curvechi-cli-test";
    fs::create_directories(dir);
    fs::path out = dir / ("out" + std::to_string(counter) + ".txt");
    fs::path err = dir / ("err" + std::to_string(counter) + ".txt");
    ++counter;
    std::string cmd = std::string(CURVECHI_BIN) + " " + args + " > " + out.string() + " 2> " +
                      err.string();
    int rc = std::system(cmd.c_str());
    return {WEXITSTATUS(rc), slurp(out), slurp(err)};
}

fs::path fresh_cache() {
    static int counter = 0;
    fs::path dir = fs::temp_directory_path() /
                   ("curvechi-cache-test-" + std::to_string(counter++));
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

// minimal csv parser for the scan output contract
std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::vector<std::string> cells;
        std::string cell;
        std::istringstream ls(line);
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        rows.push_back(cells);
    }
    return rows;
}

} // namespace

TEST_CASE("chi values and the doubling flag") {
    auto cache = fresh_cache();
    std::string common = " --cache-dir " + cache.string();

    auto r = run("chi --weight 13 --g 12 --n 0 --whole" + common);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("-6*s[]") != std::string::npos);
    CHECK(r.out.find("scalar = -6") != std::string::npos);

    r = run("chi --weight 13 --g 8 --n 1 --whole" + common);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("scalar = -2") != std::string::npos);

    r = run("chi --weight 11 --g 5 --n 5" + common);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("-s[1,1,1,1,1]") != std::string::npos);

    r = run("chi --weight 13 --g 2 --n 5" + common);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("= 0") != std::string::npos);
}

TEST_CASE("chi error contract") {
    auto cache = fresh_cache();
    auto r = run("chi --weight 11 --g 0 --n 2 --cache-dir " + cache.string());
    CHECK(r.exit_code == 1);
    CHECK(r.err.find("unstable") != std::string::npos);

    r = run("chi --weight 11 --g 1 --n 11 --nmax 6 --cache-dir " + cache.string());
    CHECK(r.exit_code == 1);
    CHECK(r.err.find("--nmax") != std::string::npos);
}

TEST_CASE("scan csv round-trips and caching is byte-stable") {
    auto cache = fresh_cache();
    std::string base = "scan --weight 13 --gmax 6 --nmax 4 --summax 10 --format csv "
                       "--cache-dir " + cache.string();
    auto cold = run(base);
    CHECK(cold.exit_code == 0);
    auto warm = run(base);
    CHECK(warm.exit_code == 0);
    CHECK(cold.out == warm.out); // cache hit must be byte-identical

    auto rows = parse_csv(cold.out);
    REQUIRE(!rows.empty());
    CHECK(rows[0] == std::vector<std::string>{"g", "n", "partition", "coefficient"});
    // re-rendering the parsed rows reproduces the file
    std::ostringstream os;
    for (size_t i = 0; i < rows.size(); ++i) {
        for (size_t j = 0; j < rows[i].size(); ++j) {
            if (j) os << ",";
            os << rows[i][j];
        }
        os << "\n";
    }
    CHECK(os.str() == cold.out);

    // known cell: (6,4) has the single term s[1 1 1 1] with coefficient 1
    bool found = false;
    for (size_t i = 1; i < rows.size(); ++i)
        if (rows[i][0] == "6" && rows[i][1] == "4") {
            found = true;
            CHECK(rows[i][2] == "[1 1 1 1]");
            CHECK(rows[i][3] == "1");
        }
    CHECK(found);
}

TEST_CASE("empty region gives a header-only csv") {
    auto cache = fresh_cache();
    auto r = run("scan --weight 13 --gmax 1 --nmax 1 --format csv --cache-dir " +
                 cache.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out == "g,n,partition,coefficient\n");
}

TEST_CASE("dimension-only scan reports the zero set") {
    auto cache = fresh_cache();
    auto r = run("scan --weight 11 --gmax 13 --nmax 2 --summax 13 --dimension-only "
                 "--cache-dir " + cache.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("(8,1)") != std::string::npos);
    CHECK(r.out.find("(12,0)") != std::string::npos);
}

TEST_CASE("asymp table contract") {
    auto cache = fresh_cache();
    auto r = run("asymp --gmin 30 --gmax 34 --format csv --cache-dir " + cache.string());
    CHECK(r.exit_code == 0);
    auto rows = parse_csv(r.out);
    REQUIRE(rows.size() == 6);
    CHECK(rows[0] == std::vector<std::string>{"g", "z_exact", "z_asymp", "ratio"});
    for (size_t i = 1; i < rows.size(); ++i) {
        CHECK(std::stod(rows[i][3]) > 0); // ratio column is positive
    }
    auto bad = run("asymp --gmin 10 --gmax 5 --cache-dir " + cache.string());
    CHECK(bad.exit_code == 1);
}

TEST_CASE("certify exit codes") {
    auto ok = run("certify --quick");
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("FAIL") == std::string::npos);

    auto fail = run("certify --quick --self-test-fail");
    CHECK(fail.exit_code == 2);
    CHECK(fail.out.find("FAIL") != std::string::npos);

    auto lowprec = run("certify --precision 10");
    CHECK(lowprec.exit_code == 1);
}

TEST_CASE("certify json schema") {
    auto r = run("certify --quick --format json");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"schema\": 1") != std::string::npos);
    CHECK(r.out.find("\"family\"") != std::string::npos);
    CHECK(r.out.find("\"pass\"") != std::string::npos);
}

TEST_CASE("cache maintenance") {
    auto cache = fresh_cache();
    std::string common = " --cache-dir " + cache.string();
    run("chi --weight 11 --g 7 --n 2" + common);
    auto info = run("cache info" + common);
    CHECK(info.exit_code == 0);
    CHECK(info.out.find("entries: ") != std::string::npos);
    CHECK(info.out.find("entries: 0") == std::string::npos);
    auto clear = run("cache clear" + common);
    CHECK(clear.exit_code == 0);
    auto info2 = run("cache info" + common);
    CHECK(info2.out.find("entries: 0") != std::string::npos);
}

TEST_CASE("cache loads only on an exact fingerprint match") {
    using namespace curvechi;
    auto dir = fresh_cache();
    USeries<Rat> s(3, Rat(0));
    s.c[2] = Rat(7, 3);
    CacheKey key{"unit-test", {{"u_cap", 3}, {"n_max", 5}}};
    cache_store(dir, key, s);

    auto hit = cache_load<Rat>(dir, key, 3, Rat(0));
    REQUIRE(hit.has_value());
    CHECK(hit->c[2] == Rat(7, 3));

    // same formula, different caps: distinct fingerprint, treated as a miss
    CacheKey other{"unit-test", {{"u_cap", 3}, {"n_max", 6}}};
    CHECK(!cache_load<Rat>(dir, other, 3, Rat(0)).has_value());

    // same filename but tampered fingerprint field inside the file
    std::ofstream f(dir / key.filename());
    f << "{\"schema\":1,\"fingerprint\":\"elsewhere\",\"series\":[\"0\",\"0\",\"7/3\",\"0\"]}";
    f.close();
    CHECK(!cache_load<Rat>(dir, key, 3, Rat(0)).has_value());
}

TEST_CASE("corrupt cache entries are ignored") {
    auto cache = fresh_cache();
    std::string common = " --cache-dir " + cache.string();
    auto first = run("chi --weight 11 --g 7 --n 2" + common);
    // clobber every cached file
    for (const auto& e : fs::directory_iterator(cache)) {
        std::ofstream f(e.path());
        f << "{not json";
    }
    auto second = run("chi --weight 11 --g 7 --n 2" + common);
    CHECK(second.exit_code == 0);
    CHECK(second.out == first.out);
}
