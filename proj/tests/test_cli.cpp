#include "support.hpp"

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>

using namespace gtsp;
using namespace gtsp::test;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args)
{
    std::string cmd = std::string(GTSP_CLI_PATH) + " " + args + " 2>/dev/null";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = std::fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
    int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string temp_json(const std::string& name, const nlohmann::json& j)
{
    auto path = std::filesystem::temp_directory_path() / ("gtsp_cli_" + name + ".json");
    std::ofstream(path) << j.dump();
    return path.string();
}

}  // namespace

TEST_CASE("enum count-only")
{
    Run r = run("enum --series C --lambda \"0,-1\" --count-only");
    CHECK(r.code == 0);
    CHECK(r.out == "{\"count\":4,\"weyl\":4,\"match\":true}\n");
    Run d = run("enum --series D --lambda \"-1/2,-1/2\" --count-only");
    CHECK(d.code == 0);
    CHECK(d.out == "{\"count\":2,\"weyl\":2,\"match\":true}\n");
}

TEST_CASE("lagrange and primitive exit codes")
{
    CHECK(run("verify lagrange --k 2 --c \"0,5\"").code == 0);
    Run p = run("primitive --lambda \"-1/2,-1/2\"");
    CHECK(p.code == 0);
    CHECK_FALSE(p.out.empty());
}

TEST_CASE("malformed input exits 2")
{
    CHECK(run("enum --series C --lambda \"0,1/0\"").code == 2);
    CHECK(run("enum --series C --lambda \"x\"").code == 2);
    CHECK(run("verify lagrange --k 2 --c \"1,1\"").code == 2);
    CHECK(run("act --gen \"G(1,2)\" --lambda \"0,-1\"").code == 2);
    CHECK(run("nosuch").code == 2);
}

TEST_CASE("output is byte-stable")
{
    const std::string args = "verify relations --lambda \"-1/2,-1/2\" --mu \"1/3,2/5\" --samples 3 --seed 11";
    Run a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    Run c = run("enum --series C --lambda \"-1,-2\"");
    CHECK(c.out == run("enum --series C --lambda \"-1,-2\"").out);
    CHECK(nlohmann::json::parse(c.out).size() == 16);
}

TEST_CASE("file inputs")
{
    std::string tab = temp_json("tab", to_json(trivial2()));
    std::string mod = temp_json("mod", to_json(ModuleSpec::finite(v("0,0"))));
    Run w = run("weight --tableau " + tab);
    CHECK(w.code == 0);
    CHECK(nlohmann::json::parse(w.out)["weight"] == nlohmann::json::parse("[\"0\",\"0\"]"));
    Run a = run("act --gen \"F(1,-2)\" --tableau " + tab + " --module " + mod);
    CHECK(a.code == 0);
    CHECK(nlohmann::json::parse(a.out).empty());

    std::string x = temp_json("a", to_json(ModuleSpec::bounded(v("1/3,2/5"), v("-1/2,-1/2"))));
    std::string y = temp_json("b", to_json(ModuleSpec::bounded(v("4/3,2/5"), v("-1/2,-1/2"))));
    Run cl = run("classify --a " + x + " --b " + y);
    CHECK(cl.code == 0);
    CHECK_FALSE(cl.out.empty());
    std::ofstream(std::filesystem::temp_directory_path() / "gtsp_cli_bad.json") << "{\"variant\":";
    CHECK(run("classify --a " + x + " --b " + (std::filesystem::temp_directory_path() / "gtsp_cli_bad.json").string())
              .code == 2);
}
