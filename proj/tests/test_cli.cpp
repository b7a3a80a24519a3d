#include "chowring/cli.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace chowring;
using nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result call(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

json call_json(std::vector<std::string> args) {
    args.push_back("--out");
    args.push_back("json");
    Result r = call(args);
    EXPECT_EQ(r.code, 0) << r.err;
    return json::parse(r.out);
}

std::filesystem::path scratch(const std::string& name) {
    const char* base = std::getenv("CHOWRING_TEST_TMP");
    std::filesystem::path p = std::filesystem::path(base ? base : std::filesystem::temp_directory_path().string()) / name;
    std::filesystem::remove_all(p);
    std::filesystem::create_directories(p);
    return p;
}

}  // namespace

TEST(Cli, Cosets) {
    json j = call_json({"cosets", "--preset", "E6/D5"});
    EXPECT_EQ(j["schema"], "chowring.coset-table/1");
    EXPECT_EQ(j["size"], 27);
    EXPECT_EQ(j["top_degree"], 16);
    json k = call_json({"cosets", "--type", "E", "--rank", "6", "--nodes", "1"});
    EXPECT_EQ(k["size"], 27);
}

TEST(Cli, CoefficientOfTheOddLiftSystem) {
    json j = call_json({"coeff", "--preset", "E6/D5", "--poly", "y1^4*y4", "--index", "8,1"});
    EXPECT_EQ(j["schema"], "chowring.coefficient/1");
    EXPECT_EQ(j["coefficient"], 3);
}

TEST(Cli, Cohomology) {
    json j = call_json({"cohomology", "--preset", "E6/A6", "--degree", "22"});
    EXPECT_EQ(j["schema"], "chowring.cohomology/1");
    ASSERT_EQ(j["groups"].size(), 1u);
    EXPECT_EQ(j["groups"][0]["group"]["text"], "Z_3");
}

TEST(Cli, PresentAndDeficiency) {
    json p = call_json({"present", "--preset", "F4/C3"});
    EXPECT_EQ(p["schema"], "chowring.presentation/1");
    for (const auto& row : p["certificate"]) EXPECT_TRUE(row["ok"].get<bool>());
    json d = call_json({"deficiency", "--preset", "F4/C3", "--degree", "24"});
    EXPECT_EQ(d["b"], 16);
    EXPECT_EQ(d["delta"], 15);
    EXPECT_TRUE(d["certified"].get<bool>());
}

TEST(Cli, DeficiencyStandalone) {
    json d = call_json({"deficiency", "--vars", "a:2,b:4", "--relations", "a^2 - b; b^2", "--degree", "8"});
    EXPECT_EQ(d["schema"], "chowring.deficiency/1");
    EXPECT_EQ(d["b"], 3);
    EXPECT_EQ(d["delta"], 3);
}

TEST(Cli, RationalHomotopy) {
    json r = call_json({"rational-homotopy", "--vars", "y1:2", "--relations", "y1^3"});
    EXPECT_EQ(r["degrees"], json::array({2, 5}));
}

TEST(Cli, ExitCodes) {
    Result none = call({});
    EXPECT_EQ(none.code, 2);
    Result bad = call({"cosets", "--preset", "Q9/Z"});
    EXPECT_EQ(bad.code, 1);
    EXPECT_EQ(json::parse(bad.err)["schema"], "chowring.error/1");
    Result missing = call({"chevalley", "--preset", "F4/C3"});
    EXPECT_EQ(missing.code, 2);
    Result range = call({"chevalley", "--preset", "F4/C3", "--degree", "99"});
    EXPECT_EQ(range.code, 1);
    Result nocache = call({"cache", "list", "--cache-dir", ""});
    EXPECT_EQ(nocache.code, 2);
    Result help = call({"--help"});
    EXPECT_EQ(help.code, 0);
    EXPECT_NE(help.out.find("cohomology"), std::string::npos);
}

TEST(Cli, Chevalley) {
    json j = call_json({"chevalley", "--preset", "F4/C3", "--degree", "1"});
    EXPECT_EQ(j["schema"], "chowring.chevalley/1");
    EXPECT_EQ(j["matrix"], json::array({json::array({1})}));
}

TEST(Cli, CacheRoundTrip) {
    std::filesystem::path dir = scratch("cache");
    json first = call_json({"chevalley", "--preset", "E6/D5", "--degree", "8", "--cache-dir", dir.string()});
    json list = call_json({"cache", "list", "--cache-dir", dir.string()});
    EXPECT_EQ(list["schema"], "chowring.cache-report/1");
    json again = call_json({"chevalley", "--preset", "E6/D5", "--degree", "8", "--cache-dir", dir.string()});
    EXPECT_EQ(first["matrix"], again["matrix"]);
    json verify = call_json({"cache", "verify", "--cache-dir", dir.string()});
    EXPECT_TRUE(verify["failures"].empty());
    json purge = call_json({"cache", "purge", "--cache-dir", dir.string()});
    EXPECT_EQ(purge["removed"].get<std::size_t>(), list["entries"].size());
}

TEST(Cli, CorruptCacheIsReported) {
    std::filesystem::path dir = scratch("corrupt");
    call_json({"coeff", "--preset", "E6/D5", "--poly", "y1^8", "--cache-dir", dir.string()});
    json list = call_json({"cache", "list", "--cache-dir", dir.string()});
    if (list["entries"].empty()) GTEST_SKIP() << "no entries were cached";
    for (const auto& e : std::filesystem::recursive_directory_iterator(dir))
        if (e.is_regular_file()) {
            std::ofstream f(e.path(), std::ios::trunc);
            f << "{not json";
            break;
        }
    Result r = call({"cache", "verify", "--cache-dir", dir.string()});
    EXPECT_EQ(r.code, 5);
}
