#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include <json.hpp>

#include "support/proc.hpp"

using json = nlohmann::json;

namespace {

std::string manifest_dir() { return testproc::binary_path("SAMPCARD_MANIFEST_DIR"); }

json load_manifest(const std::string& name) {
    std::ifstream in(manifest_dir() + "/" + name);
    REQUIRE(in.good());
    json manifest;
    in >> manifest;
    return manifest;
}

}  // namespace

TEST_SUITE("repro") {

TEST_CASE("a wrong expectation fails its row and only its row") {
    const json manifest{
        {"name", "synthetic"},
        {"rows",
         {{{"id", "ok"},
           {"command", {"simulate", "--table", "intro", "--fast", "--trials", "3", "--seed", "1"}},
           {"select", {{"estimator", "naive"}}},
           {"metric", "mean_ratio"},
           {"check", {{"kind", "interval"}, {"lo", 0.3}, {"hi", 1.6}}}},
          {{"id", "ok-ratio"},
           {"command", {"simulate", "--table", "intro", "--fast", "--trials", "3", "--seed", "1"}},
           {"select", {{"estimator", "naive"}}},
           {"metric", "mean_ratio"},
           {"check", {{"kind", "ratio"}, {"of", 0.9}, {"lo", 0.5}, {"hi", 2.0}}}},
          {{"id", "bad"},
           {"command", {"simulate", "--table", "intro", "--fast", "--trials", "3", "--seed", "1"}},
           {"select", {{"estimator", "naive"}}},
           {"metric", "mean_ratio"},
           {"check", {{"kind", "interval"}, {"lo", 10.0}, {"hi", 11.0}}}}}}};

    const std::string path = "/tmp/sampcard_synthetic_manifest.json";
    {
        std::ofstream out(path);
        out << manifest.dump(2);
    }
    const auto result = testproc::run(
        testproc::binary_path("SAMPCARD_REPRO_BIN") + " --manifest " + path + " --cli " +
        testproc::binary_path("SAMPCARD_CLI_BIN") + " 2>/dev/null");
    std::remove(path.c_str());

    CHECK(result.exit_code == 1);
    CHECK(result.out.find("ok,mean_ratio") != std::string::npos);
    CHECK(result.out.find(",PASS,") != std::string::npos);
    std::istringstream lines(result.out);
    std::string line;
    int pass = 0, fail = 0;
    while (std::getline(lines, line)) {
        pass += line.find(",PASS,") != std::string::npos;
        fail += line.find(",FAIL,") != std::string::npos;
    }
    CHECK(pass == 2);
    CHECK(fail == 1);
}

TEST_CASE("manifest covers every catalog row and the intro numbers exactly once") {
    const json manifest = load_manifest("repro.json");

    std::multiset<std::string> ids;
    for (const json& row : manifest.at("rows")) {
        ids.insert(row.at("id").get<std::string>());
        // structural sanity: every row carries a runnable command and a check
        CHECK(row.at("command").is_array());
        CHECK(row.at("check").is_object());
        CHECK(row.at("select").is_object());
        CHECK((row.value("source", "") == "reference" || row.value("source", "") == "model"));
    }

    std::vector<std::string> expected = {
        "intro/naive/mean", "intro/naive/variance", "intro/alg1/mean", "intro/alg1/variance"};
    for (const char* table : {"1a", "1b"}) {
        for (int m : {50, 100, 150}) {
            expected.push_back(std::string(table) + "/m=" + std::to_string(m) + "/bias");
            expected.push_back(std::string(table) + "/m=" + std::to_string(m) + "/variance");
        }
    }
    const std::pair<int, int> unif_splits[] = {{10, 190}, {50, 150}, {100, 100}, {150, 50}, {190, 10}};
    for (const char* table : {"2a", "2b"}) {
        for (const auto& [m, u] : unif_splits) {
            const std::string key = std::string(table) + "/m=" + std::to_string(m) +
                                    ";u=" + std::to_string(u);
            expected.push_back(key + "/bias");
            expected.push_back(key + "/variance");
        }
    }
    const std::pair<int, int> pareto_splits[] = {
        {50, 1950}, {100, 1900}, {500, 1500}, {1000, 1000}, {1500, 500}};
    for (const auto& [m, u] : pareto_splits) {
        const std::string key = "3/m=" + std::to_string(m) + ";u=" + std::to_string(u);
        expected.push_back(key + "/bias");
        expected.push_back(key + "/variance");
    }
    for (const char* rate : {"0.01", "0.002", "0.001"}) {
        for (int m : {100, 500, 1000}) {
            expected.push_back(std::string("4a/rate=") + rate + ";m=" + std::to_string(m) +
                               "/variance");
        }
    }
    for (int m : {100, 500, 1000}) {
        expected.push_back("4a/rate=1;m=" + std::to_string(m) + "/variance");
    }
    for (const char* rate : {"0.01", "0.002", "0.001"}) {
        for (int budget : {100, 500, 1000}) {
            expected.push_back(std::string("4b/rate=") + rate + ";B=" + std::to_string(budget) +
                               "/split");
        }
    }
    for (int budget : {100, 500, 1000}) {
        expected.push_back("4b/rate=1;B=" + std::to_string(budget) + "/variance");
    }

    CHECK(ids.size() == expected.size());
    for (const std::string& id : expected) {
        CHECK_MESSAGE(ids.count(id) == 1, "id: ", id);
    }
}

TEST_CASE("fast manifest mirrors the full manifest rows") {
    const json full = load_manifest("repro.json");
    const json fast = load_manifest("repro_fast.json");
    std::set<std::string> full_ids, fast_ids;
    for (const json& row : full.at("rows")) full_ids.insert(row.at("id").get<std::string>());
    for (const json& row : fast.at("rows")) fast_ids.insert(row.at("id").get<std::string>());
    CHECK(full_ids == fast_ids);
}

}  // TEST_SUITE
