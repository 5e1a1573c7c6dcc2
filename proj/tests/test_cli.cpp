// Runs the command-line tool as a subprocess and checks its output.

#include <doctest.h>
#include <json.hpp>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#ifndef YOUNGBOOK_CLI_PATH
#error "YOUNGBOOK_CLI_PATH must name the built tool"
#endif

namespace {

struct Run {
    std::string out;
    int code = -1;
};

Run run(const std::string& args)
{
    std::string command = std::string(YOUNGBOOK_CLI_PATH) + " " + args + " 2>/dev/null";
    Run result;
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buffer{};
    std::size_t got = 0;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) result.out.append(buffer.data(), got);
    int status = pclose(pipe);
    result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

nlohmann::json run_json(const std::string& args, int expected_code = 0)
{
    Run r = run(args + " --json");
    CHECK(r.code == expected_code);
    auto j = nlohmann::json::parse(r.out);
    for (const char* key : {"command", "params", "value", "factorization", "cases"}) CHECK(j.contains(key));
    CHECK(j["value"].is_string());
    for (const auto& [key, value] : j["params"].items()) CHECK(value.is_string());
    return j;
}

}  // namespace

TEST_CASE("cli: counts")
{
    auto j = run_json("count yb -n 3 -m 1");
    CHECK(j["command"] == "count yb");
    CHECK(j["value"] == "2");
    CHECK(j["params"]["n"] == "3");

    j = run_json("count book --book \"book:[shifted:6,2,1;shifted:5,4,1;shifted:5,2,1;shifted:4,2,1]\" --kind young");
    CHECK(j["value"] == "102954644948400");
    CHECK(j["factorization"] == "2^4·3·5^2·7·17·19·23·1649819");

    CHECK(run_json("count sp -n 2 -r 1 -s 1 -m 1")["value"] == "18");
    CHECK(run_json("count syt --shape \"skew:3,3/1\"")["value"] == "5");
    CHECK(run_json("count yb-nrs -n 1 -r 0,0 -s 0,0")["value"] == "1");
    CHECK(run_json("count yb-ars -k 2 -n 1 -r 0 -s 0")["value"] == "1");
    CHECK(run_json("count book --shape shifted:3,2,1 --kind selberg --gaps 0,2,1,0")["value"] == "2");

    Run human = run("count yb -n 3 -m 1");
    CHECK(human.code == 0);
    CHECK(human.out.find("value: 2") != std::string::npos);
}

TEST_CASE("cli: selberg, genfun and enumerate")
{
    CHECK(run_json("selberg -n 2 --alpha 1 --beta 1 --gamma 1/2")["value"] == "1/3");
    auto g = run_json("genfun sb -n 3 -m 1");
    CHECK(g["value"] == "1 * t1^2 t2 + 1 * t1 t2^2");
    CHECK(g["terms"].size() == 2);
    CHECK(g["terms"][0]["numerator"] == "1");
    CHECK(run_json("genfun sb -n 3 -m 1 --gaps 2,1")["value"] == "2");
    CHECK(run_json("genfun sb-nrs -n 2 -r 1 -s 1 --minus")["params"]["minus"] == "true");

    auto e = run_json("enumerate --shape shifted:3,2,1");
    CHECK(e["value"] == "2");
    CHECK(e["items"][0] == "1 2 4 / 3 5 / 6");
    CHECK(run_json("enumerate sp -n 2 -r 1 -s 1 -m 1 --limit 5")["items"].size() == 5);
}

TEST_CASE("cli: verify")
{
    auto j = run_json("verify erratum-notes --max-n 2");
    CHECK(j["value"] == "pass");
    CHECK(j["cases"].size() == 5);
    CHECK(j["cases"][0]["status"] == "erratum");
    CHECK(j["warning"] == true);
    auto again = run_json("verify erratum-notes --max-n 2");
    CHECK(again == j);
    CHECK(run_json("verify skew-9173")["cases"][0]["status"] == "pass");
}

TEST_CASE("cli: errors")
{
    CHECK(run("count").code == 2);
    CHECK(run("count yb -n 3").code == 2);
    CHECK(run("count bogus -n 3 -m 1").code == 2);
    CHECK(run("frobnicate").code == 2);
    CHECK(run("count syt --shape circle:3").code == 3);
    CHECK(run("count book --book \"book:[shifted:6,2,1;shifted:5,4,1]\" --budget 10").code == 3);
    CHECK(run("verify not-an-identity").code == 3);
    CHECK(run("--help").code == 0);
}
