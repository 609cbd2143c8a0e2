#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

#include <catch_amalgamated.hpp>

#include "hopfint/catalog.hpp"
#include "hopfint/monoidal.hpp"
#include "hopfint/serialization.hpp"

using namespace hopfint;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code = -1;
    std::string out;
    std::string err;
};

fs::path workdir() {
    static const fs::path dir = [] {
        auto d = fs::temp_directory_path() / ("hopfint_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string path(const std::string& name) { return (workdir() / name).string(); }

Run run(const std::string& args) {
    const std::string err_file = path("stderr.txt");
    const std::string cmd = std::string(HOPFINT_CLI_PATH) + " " + args + " 2>" + err_file;
    Run r;
    FILE* pipe = ::popen(cmd.c_str(), "r");
    REQUIRE(pipe);
    char buf[4096];
    std::size_t got;
    while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    const int status = ::pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.err = read_file(err_file);
    return r;
}

ojson json_of(const Run& r) { return ojson::parse(r.out); }

} // namespace

TEST_CASE("catalog writes canonical documents") {
    auto r = run("catalog sweedler4 --field Q -o " + path("h4.json"));
    CHECK(r.code == 0);
    const auto h4 = load_hopf(path("h4.json"));
    CHECK(h4.dim() == 4);
    CHECK(read_file(path("h4.json")) == serialize(sweedler4()));

    r = run("catalog taft --n 3 --p 7 --q 2 -o " + path("t3.json"));
    CHECK(r.code == 0);
    CHECK(load_hopf(path("t3.json")).dim() == 9);

    r = run("catalog group --order 2 -o " + path("kc2.json"));
    CHECK(r.code == 0);
    CHECK(load_hopf(path("kc2.json")).dim() == 2);

    r = run("catalog dualgroup --group S3 --field Fp --p 5 -o " + path("ds3.json"));
    CHECK(r.code == 0);
    CHECK(load_hopf(path("ds3.json")) == dual_group_algebra(symmetric_group_table(3), Field::prime(5)));
}

TEST_CASE("catalog rejects bad parameters") {
    CHECK(run("catalog taft --n 3 --p 7 --q 3 -o " + path("bad.json")).code == 2);
    CHECK(run("catalog taft --n 3 --p 8 --q 2 -o " + path("bad.json")).code == 2);
    CHECK(run("catalog group -o " + path("bad.json")).code == 2);
    CHECK(run("catalog group --order 2 --group S3").code == 2);
    CHECK(run("catalog sweedler4 --field Fp --p 2").code == 2);
    CHECK(run("catalog nosuch").code == 2);
    CHECK(run("").code == 2);
}

TEST_CASE("catalog accepts a Cayley table file") {
    {
        std::ofstream os(path("c3.json"));
        os << "[[0,1,2],[1,2,0],[2,0,1]]";
    }
    CHECK(run("catalog group --table " + path("c3.json") + " -o " + path("kc3.json")).code == 0);
    CHECK(load_hopf(path("kc3.json")) == group_algebra(cyclic_group_table(3)));
    {
        std::ofstream os(path("notgroup.json"));
        os << "[[0,1],[1,1]]";
    }
    CHECK(run("catalog group --table " + path("notgroup.json")).code == 2);
}

TEST_CASE("integrals, gamma and antipode commands") {
    REQUIRE(run("catalog sweedler4 -o " + path("h4.json")).code == 0);
    REQUIRE(run("catalog taft --n 3 --p 7 --q 2 -o " + path("t3.json")).code == 0);

    auto r = run("integrals " + path("h4.json") + " --side right");
    CHECK(r.code == 0);
    CHECK(json_of(r)["basis"] == ojson::parse(R"([["0","0","1","0"]])"));
    r = run("integrals " + path("h4.json") + " --side left");
    CHECK(json_of(r)["basis"] == ojson::parse(R"([["0","0","0","1"]])"));

    r = run("gamma " + path("h4.json"));
    CHECK(r.code == 0);
    CHECK(json_of(r)["gamma"] == ojson::array({"0", "1", "0", "0"}));
    CHECK(r.err.find("gamma = g") != std::string::npos);

    r = run("antipode " + path("t3.json"));
    CHECK(r.code == 0);
    CHECK(json_of(r)["bijective"] == true);
    CHECK(json_of(r)["order"] == 6);
}

TEST_CASE("verification gate") {
    auto doc = hopf_to_json(sweedler4());
    doc["antipode"][1] = ojson::array({"0", "0", "0", "0"});
    {
        std::ofstream os(path("broken.json"));
        os << doc.dump(2);
    }
    for (const std::string cmd : {"verify", "suite", "gamma", "antipode"}) {
        const auto r = run(cmd + " " + path("broken.json"));
        CHECK(r.code == 2);
        CHECK(r.err.find("antipode axiom") != std::string::npos);
    }
    CHECK(run("suite /nonexistent.json").code == 2);
    {
        std::ofstream os(path("garbage.json"));
        os << "not json";
    }
    CHECK(run("verify " + path("garbage.json")).code == 2);
    REQUIRE(run("catalog sweedler4 -o " + path("h4.json")).code == 0);
    CHECK(run("verify " + path("h4.json")).code == 0);
}

TEST_CASE("suite and check reports") {
    REQUIRE(run("catalog group --order 2 -o " + path("kc2.json")).code == 0);
    REQUIRE(run("catalog sweedler4 -o " + path("h4.json")).code == 0);

    auto r = run("suite " + path("kc2.json"));
    CHECK(r.code == 0);
    auto rep = json_of(r);
    CHECK(rep["overall"] == "pass");
    CHECK(rep["seed"] == default_seed);
    for (const auto& c : rep["checks"]) CHECK(c["status"] == "pass");

    r = run("suite " + path("h4.json"));
    CHECK(r.code == 0);
    rep = json_of(r);
    bool saw_gamma = false, saw_bases = false;
    for (const auto& c : rep["checks"]) {
        if (c["name"] == "distinguished_grouplike") {
            saw_gamma = true;
            CHECK(c["witness"]["gamma"] == ojson::array({"0", "1", "0", "0"}));
        }
        if (c["name"] == "uniqueness") {
            saw_bases = true;
            CHECK(c["witness"]["right_basis"] != c["witness"]["left_basis"]);
        }
    }
    CHECK(saw_gamma);
    CHECK(saw_bases);
    CHECK(run("suite " + path("h4.json")).out == r.out);

    for (const std::string iso : {"doi", "eq0", "sweedler", "lem10", "adjunction", "snake", "eq7"}) {
        r = run("check " + path("h4.json") + " --iso " + iso);
        CHECK(r.code == 0);
        CHECK(json_of(r)["checks"].size() >= 2);
    }
    CHECK(run("check " + path("h4.json") + " --iso nope").code == 2);
}
