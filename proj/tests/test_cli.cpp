#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>

using Json = nlohmann::json;

namespace {

struct Result {
    int code = -1;
    std::string out;
};

Result run(const std::string& args)
{
    const std::string cmd = std::string(WEYLCHECK_BIN) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p);
    Result r;
    char buf[4096];
    while (std::size_t n = std::fread(buf, 1, sizeof buf, p)) r.out.append(buf, n);
    const int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string temp_file(const std::string& name, const std::string& contents)
{
    auto path = (std::filesystem::temp_directory_path() / ("ew_cli_" + name)).string();
    std::ofstream(path) << contents;
    return path;
}

std::vector<std::string> lines(const std::string& s)
{
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);) out.push_back(l);
    return out;
}

Json without_elapsed(Json j)
{
    j.erase("elapsed_ms");
    return j;
}

}  // namespace

TEST_CASE("describe")
{
    auto e6 = run("describe --type e6");
    REQUIRE(e6.code == 0);
    auto j6 = Json::parse(e6.out);
    CHECK(j6["W"] == 51840);
    CHECK(j6["dimV0"] == 27);
    CHECK(j6["d"] == 16);
    CHECK(j6["bound"] == 22965120);
    CHECK(j6["h_dual"] == 12);
    CHECK(j6["h_dual_identity"] == true);
    CHECK(j6["roots"] == 72);

    auto j7 = Json::parse(run("describe --type e7").out);
    CHECK(j7["W"] == 2903040);
    CHECK(j7["dimV0"] == 56);
    CHECK(j7["d"] == 27);
    CHECK(j7["bound"] == 4473584640ULL);
    CHECK(j7["roots"] == 126);

    auto a = Json::parse(run("describe --type a --rank 3 --node 2").out);
    CHECK(a["W"] == 24);
    CHECK(a["d"] == 4);
    CHECK(a["h_dual_identity"] == true);
}

TEST_CASE("emit-tables")
{
    auto t1 = run("emit-tables --type e6");
    REQUIRE(t1.code == 0);
    auto l1 = lines(t1.out);
    REQUIRE(l1.size() == 28);  // header plus rows
    CHECK(l1[2].rfind("1/2,1/2,1/2,1/2,1/2,1/6*sqrt3,1,s6", 0) == 0);
    CHECK(l1[27].rfind("-1,0,0,0,0,-1/3*sqrt3,16,", 0) == 0);

    auto t2 = Json::parse(run("emit-tables --type e7 --table 2 --format json").out);
    REQUIRE(t2["rows"].size() == 27);
    CHECK(t2["rows"][14]["weight"] == Json({"1", "1", "0", "0", "0", "0", "0"}));

    auto t3 = run("emit-tables --type e7 --table 3");
    auto l3 = lines(t3.out);
    REQUIRE(l3.size() == 57);
    CHECK(l3[56].rfind("-1,0,0,0,0,0,-1/2*sqrt2,", 0) == 0);

    CHECK(run("emit-tables --type b --rank 3").code == 1);
    CHECK(run("emit-tables --type e6 --table 3").code == 1);
}

TEST_CASE("verify exit codes and formats")
{
    auto ok = run("verify --type b --rank 3 --progress 0");
    CHECK(ok.code == 0);
    auto j = Json::parse(ok.out);
    CHECK(j["success"] == true);
    CHECK(j["factor"] == "B(3)");
    CHECK(j["pairs_total"] == 48 * 6);
    CHECK(j["failures"].empty());
    for (const char* key : {"factor", "pairs_total", "pairs_no_solution", "pairs_forced", "eliminations_total",
                            "eliminations_bound", "elapsed_ms", "success", "failures"})
        CHECK(j.contains(key));

    auto csv = lines(run("verify --type d-h --rank 4 --format csv --progress 0").out);
    REQUIRE(csv.size() == 2);
    CHECK(csv[0].rfind("factor,pairs_total", 0) == 0);
    CHECK(csv[1].rfind("D_H(4),", 0) == 0);

    CHECK(run("verify --type q").code == 1);
    CHECK(run("verify --type b").code == 1);  // rank missing
    CHECK(run("verify --type b --rank 6 --budget 1000").code == 1);
    CHECK(run("verify --type a --rank 3 --node 7").code == 1);
    CHECK(run("").code == 1);
}

TEST_CASE("verify output is deterministic")
{
    auto a = Json::parse(run("verify --type c --rank 3 --workers 1 --progress 0").out);
    auto b = Json::parse(run("verify --type c --rank 3 --workers 3 --progress 0").out);
    CHECK(without_elapsed(a) == without_elapsed(b));
}

TEST_CASE("verify resumes from a checkpoint")
{
    const auto ck = (std::filesystem::temp_directory_path() / "ew_cli_resume.ckpt").string();
    std::filesystem::remove(ck);
    auto first = Json::parse(run("verify --type e6 --progress 0 --resume " + ck).out);
    CHECK(std::filesystem::exists(ck));
    // Everything is already recorded; the second run only merges.
    auto again = Json::parse(run("verify --type e6 --progress 0 --resume " + ck).out);
    CHECK(without_elapsed(first) == without_elapsed(again));
    CHECK(first["success"] == true);
    CHECK(run("verify --type e7 --progress 0 --resume " + ck).code == 1);
    std::filesystem::remove(ck);
}

TEST_CASE("check-regularity")
{
    auto zero = temp_file("zero.json", R"({"factors":[{"type":"e6","noncompact":true,"weight":["0","0","0","0","0","0"]},
        {"type":"b","rank":2,"weight":["0","0"]}],"orbit_kind":"G"})");
    auto z = run("check-regularity " + zero);
    CHECK(z.code == 0);
    CHECK(Json::parse(z.out)["regular"] == true);

    auto w6 = temp_file("w6.json", R"({"factors":[{"type":"e6","noncompact":true,
        "weight":["0","0","0","0","0","2/3*sqrt3"]}],"orbit_kind":"G"})");
    auto bad = run("check-regularity " + w6);
    CHECK(bad.code == 3);
    auto jb = Json::parse(bad.out);
    CHECK(jb["regular"] == false);
    CHECK(jb["factors"][0]["witness"]["value"] == "1");

    auto ext = temp_file("ext.json", R"({"factors":[{"type":"e6","noncompact":true,
        "weight":["0","0","0","0","0","2/3*sqrt3"]}],"orbit_kind":"G","extend":true})");
    auto e = run("check-regularity " + ext);
    CHECK(e.code == 0);
    auto je = Json::parse(e.out);
    CHECK(je["orbit_kind"] == "M");
    CHECK(je["factors"][0].contains("m_weight"));

    // A compact factor is not checked.
    auto compact = temp_file("compact.json", R"({"factors":[{"type":"e6","noncompact":false,
        "weight":["0","0","0","0","0","2/3*sqrt3"]}],"orbit_kind":"G"})");
    CHECK(run("check-regularity " + compact).code == 0);

    // Standard input.
    CHECK(run("check-regularity - < " + w6).code == 3);

    auto junk = temp_file("junk.json", "{not json");
    CHECK(run("check-regularity " + junk).code == 1);
    auto dims = temp_file("dims.json", R"({"factors":[{"type":"e6","weight":["0"]}]})");
    CHECK(run("check-regularity " + dims).code == 1);
    auto irr = temp_file("irr.json", R"({"factors":[{"type":"e6","weight":["sqrt2","0","0","0","0","0"]}],"extend":true})");
    CHECK(run("check-regularity " + irr).code == 1);
    CHECK(run("check-regularity /nonexistent/file.json").code == 1);
}
