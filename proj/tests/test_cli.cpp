#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "suzuki/cli.hpp"
#include "suzuki/matrix_cache.hpp"
#include "suzuki/structured.hpp"

using namespace suzuki;
using nlohmann::json;

namespace {

struct RunResult {
    int exit_code;
    std::string out, err;
};

RunResult invoke(const cli::RunConfig& cfg) {
    std::ostringstream out, err;
    const int code = cli::run(cfg, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_dir() {
    auto dir = std::filesystem::temp_directory_path() / "suzuki-cartier-test";
    std::filesystem::create_directories(dir);
    return dir;
}

BitMatrix cartier_matrix(int m) {
    const SuzukiParams p = make_params(m);
    return build_cartier_matrix(p, enumerate_basis(p), CartierPath::structured);
}

} // namespace

TEST_CASE("params command") {
    cli::RunConfig cfg;
    cfg.m = 2;
    cfg.command = cli::Command::params;
    cfg.format = cli::Format::json;
    const RunResult r = invoke(cfg);
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j["q0"] == 4);
    CHECK(j["q"] == 32);
    CHECK(j["g"] == 124);
    CHECK(j["pole_orders"]["h2"] == 41);
    CHECK(j["sg_generators"] == json::array({32, 36, 40, 41}));
}

TEST_CASE("basis command lists g monomials") {
    cli::RunConfig cfg;
    cfg.m = 1;
    cfg.command = cli::Command::basis;
    cfg.format = cli::Format::json;
    const json j = json::parse(invoke(cfg).out);
    REQUIRE(j["basis"].size() == 14);
    CHECK(j["basis"][0] == json({{"a", 0}, {"b", 0}, {"c", 0}, {"d", 0}, {"pole", 0}}));

    cfg.format = cli::Format::csv;
    const RunResult csv = invoke(cfg);
    CHECK(csv.out.substr(0, 34) == "index,a,b,c,d,pole\n0,0,0,0,0,0\n1,1");
}

TEST_CASE("a-number command emits the schema payload") {
    cli::RunConfig cfg;
    cfg.m = 1;
    cfg.command = cli::Command::a_number;
    cfg.format = cli::Format::json;
    const RunResult r = invoke(cfg);
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j["m"] == 1);
    CHECK(j["q0"] == 2);
    CHECK(j["q"] == 8);
    CHECK(j["g"] == 14);
    CHECK(j["a_number"] == 5);
    // byte-identical across repeated runs
    CHECK(invoke(cfg).out == r.out);
}

TEST_CASE("rank-profile command") {
    cli::RunConfig cfg;
    cfg.m = 1;
    cfg.command = cli::Command::rank_profile;
    cfg.format = cli::Format::json;
    const RunResult r = invoke(cfg);
    REQUIRE(r.exit_code == 0);
    CHECK(json::parse(r.out)["rank_profile"] == json::array({9, 4, 0}));

    cfg.format = cli::Format::csv;
    CHECK(invoke(cfg).out == "k,rank\n1,9\n2,4\n3,0\n");
}

TEST_CASE("points command") {
    cli::RunConfig cfg;
    cfg.m = 1;
    cfg.command = cli::Command::points;
    cfg.format = cli::Format::json;
    cfg.k_values = {4, 1, 2};
    cfg.naive_check = true;
    const RunResult r = invoke(cfg);
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j["points"]["1"] == 65);
    CHECK(j["points"]["2"] == 65);
    CHECK(j["points"]["4"] == 5889);

    cfg.k_values = {3};
    CHECK(invoke(cfg).exit_code == 2); // --naive outside the brute-force bound
    cfg.naive_check = false;
    CHECK(invoke(cfg).exit_code == 0);
}

TEST_CASE("eo commands") {
    cli::RunConfig cfg;
    cfg.m = 1;
    cfg.command = cli::Command::eo_constraints;
    cfg.format = cli::Format::json;
    const json fixed = json::parse(invoke(cfg).out)["nu_fixed"];
    CHECK(fixed["1"] == 0);
    CHECK(fixed["4"] == 0);
    CHECK(fixed["9"] == 4);
    CHECK(fixed["10"] == 5);
    CHECK(fixed["14"] == 9);
    CHECK(fixed.size() == 10);

    cfg.command = cli::Command::eo_enumerate;
    const json types = json::parse(invoke(cfg).out)["final_types"];
    CHECK(types.size() == 5);

    cfg.cap = 2;
    const RunResult capped = invoke(cfg);
    CHECK(capped.exit_code == 1);
    CHECK(capped.err.find("free indices") != std::string::npos);
}

TEST_CASE("verify command exits 0 for m=1 and m=2") {
    for (int m : {1, 2}) {
        cli::RunConfig cfg;
        cfg.m = m;
        cfg.command = cli::Command::verify;
        cfg.format = cli::Format::json;
        const RunResult r = invoke(cfg);
        CHECK(r.exit_code == 0);
        CHECK(json::parse(r.out)["verified"] == true);
    }
}

TEST_CASE("all command aggregates the payloads") {
    cli::RunConfig cfg;
    cfg.m = 1;
    cfg.command = cli::Command::all;
    cfg.format = cli::Format::json;
    const RunResult r = invoke(cfg);
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j["a_number"] == 5);
    CHECK(j["rank_profile"] == json::array({9, 4, 0}));
    CHECK(j["points"]["1"] == 65);
    CHECK(j["verified"] == true);
}

TEST_CASE("usage errors exit with status 2") {
    cli::RunConfig cfg;
    cfg.m = 5;
    cfg.command = cli::Command::matrix;
    CHECK(invoke(cfg).exit_code == 2); // m > 4 without --allow-large

    cfg.m = 1;
    cfg.command = cli::Command::a_number;
    cfg.format = cli::Format::csv;
    CHECK(invoke(cfg).exit_code == 2); // csv unsupported here

    cfg.format = cli::Format::pretty;
    cfg.jobs = 0;
    CHECK(invoke(cfg).exit_code == 2);
}

TEST_CASE("matrix cache round trip is bit-exact") {
    const auto dir = temp_dir();
    for (int m : {1, 2, 3}) {
        const BitMatrix original = cartier_matrix(m);
        const auto path = cli::cache_file_path(dir, m);
        save_matrix_cache(path, m, original);
        const CachedMatrix loaded = load_matrix_cache(path);
        CHECK(loaded.m == m);
        CHECK(loaded.matrix == original);
    }
}

TEST_CASE("cache loader distinguishes its failure modes") {
    const auto dir = temp_dir();
    const auto path = dir / "tamper.szcm";
    const BitMatrix original = cartier_matrix(1);
    save_matrix_cache(path, 1, original);

    auto tamper = [&](size_t offset, char value) {
        std::fstream f(path, std::ios::binary | std::ios::in | std::ios::out);
        f.seekp(static_cast<std::streamoff>(offset));
        f.put(value);
    };
    auto kind_of = [&]() {
        try {
            load_matrix_cache(path);
        } catch (const CacheError& e) {
            return e.kind;
        }
        throw std::logic_error("expected CacheError");
    };

    tamper(0, 'X');
    CHECK(kind_of() == CacheError::Kind::bad_magic);
    save_matrix_cache(path, 1, original);
    tamper(4, 9);
    CHECK(kind_of() == CacheError::Kind::bad_version);
    save_matrix_cache(path, 1, original);
    tamper(9, 15); // header now says m=1, g=15, but g must be 14
    CHECK(kind_of() == CacheError::Kind::bad_dimensions);

    save_matrix_cache(path, 1, original);
    std::filesystem::resize_file(path, 20);
    CHECK(kind_of() == CacheError::Kind::short_read);

    save_matrix_cache(path, 1, original);
    {
        std::ofstream f(path, std::ios::binary | std::ios::app);
        f.put(0);
    }
    CHECK(kind_of() == CacheError::Kind::trailing_data);

    CHECK_THROWS_AS(load_matrix_cache(dir / "missing.szcm"), CacheError);
}

TEST_CASE("cache directory comes from the environment unless the flag wins") {
    const auto dir = temp_dir() / "envcache";
    setenv("SUZUKI_CARTIER_CACHE_DIR", dir.c_str(), 1);
    CHECK(cli::cache_dir_from_env() == dir.string());

    cli::RunConfig cfg;
    cfg.m = 1;
    cfg.command = cli::Command::matrix;
    cfg.format = cli::Format::json;
    CHECK(invoke(cfg).exit_code == 0);
    CHECK(std::filesystem::exists(cli::cache_file_path(dir, 1)));

    // flag wins over the environment
    const auto flag_dir = temp_dir() / "flagcache";
    cfg.cache_dir = flag_dir.string();
    CHECK(invoke(cfg).exit_code == 0);
    CHECK(std::filesystem::exists(cli::cache_file_path(flag_dir, 1)));
    unsetenv("SUZUKI_CARTIER_CACHE_DIR");
}

TEST_CASE("a stale cache for another m is rebuilt with a warning") {
    const auto dir = temp_dir() / "stale";
    std::filesystem::create_directories(dir);
    // plant an m=2 matrix under the m=1 cache name
    save_matrix_cache(cli::cache_file_path(dir, 1), 2, cartier_matrix(2));
    cli::RunConfig cfg;
    cfg.m = 1;
    cfg.command = cli::Command::matrix;
    cfg.format = cli::Format::json;
    cfg.cache_dir = dir.string();
    const RunResult r = invoke(cfg);
    CHECK(r.exit_code == 0);
    CHECK(json::parse(r.out)["rank"] == 9);
    CHECK(r.err.find("warning") != std::string::npos);
}
