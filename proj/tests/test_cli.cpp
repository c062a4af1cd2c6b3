#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <memory>
#include <string>

#include <doctest.h>
#include <json.hpp>

namespace {

struct Run {
    int status = -1;
    std::string out;
};

/// Runs the CLI with stderr merged into stdout.
Run run(const std::string& args, const std::string& env = "") {
    const std::string command = env + " " + VANDINT_CLI_PATH + " " + args + " 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    Run r;
    std::array<char, 4096> buffer{};
    std::size_t got = 0;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) r.out.append(buffer.data(), got);
    const int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

nlohmann::json json_of(const Run& r) { return nlohmann::json::parse(r.out); }

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("divdiff examples") {
    const auto quadratic = run("divdiff --points 1,2,3 --function poly:0,0,1");
    CHECK(quadratic.status == 0);
    CHECK(json_of(quadratic)["value"] == "1");
    CHECK(json_of(quadratic)["route"] == "table");

    const auto e = run("divdiff --points 0,1 --function exp:1");
    CHECK(e.status == 0);
    CHECK(json_of(e)["value"].get<double>() == doctest::Approx(1.718281828459045).epsilon(1e-15));

    const auto constant = run("divdiff --points 1,2,3 --function poly:5");
    CHECK(constant.status == 0);
    CHECK(json_of(constant)["value"] == "0");

    const auto via = run("divdiff --points 1,2,3 --function poly:0,0,1/2 --via-integral");
    CHECK(via.status == 0);
    CHECK(json_of(via)["value"].get<double>() == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("divdiff cross-check exit codes") {
    const auto good = run("divdiff --points 1,2,3,5 --function exp:1 --check");
    CHECK(good.status == 0);
    CHECK(json_of(good)[0]["passed"] == true);
    const auto coarse = run("divdiff --points 1,2,3,5 --function exp:1 --check --order 1");
    CHECK(coarse.status == 1);
    CHECK(json_of(coarse)[0]["passed"] == false);
}

TEST_CASE("identity command examples") {
    const auto symbolic = run("theorem1 --x 0,1,2 --function poly:0,0,1/2 --symbolic");
    CHECK(symbolic.status == 0);
    const auto s = json_of(symbolic)[0];
    CHECK(s["passed"] == true);
    CHECK(s["lhs"] == "1");
    CHECK(s["rhs"] == "1");

    const auto numeric = run("theorem1 --x 0,1,2 --function exp:1 --order 24");
    CHECK(numeric.status == 0);
    CHECK(json_of(numeric)[0]["rel_err"].get<double>() < 1e-10);
    CHECK(json_of(numeric)[0]["config"]["order"] == 24);

    const auto repeated = run("theorem1 --x 0,1,1");
    CHECK(repeated.status == 2);
    CHECK(contains(repeated.out, "points must be strictly increasing"));

    const auto transcendental = run("theorem1 --x 0,1,2 --function exp:1 --symbolic");
    CHECK(transcendental.status == 2);

    const auto failing = run("theorem1 --x 0,1,2 --function exp:1 --order 2 --format text");
    CHECK(failing.status == 1);
    CHECK(failing.out.rfind("FAIL integral_identity", 0) == 0);
}

TEST_CASE("near-pole warning") {
    const auto near = run("theorem1 --x -1.9,0.54,1.54,2.23,2.63,2.995 --function recip:10 --format text");
    CHECK(near.status == 1);
    CHECK(contains(near.out, "warning: pole of recip:10 is close to the summed range"));
    const auto far = run("theorem1 --x 0,1,2 --function recip:10 --format text");
    CHECK(far.status == 0);
    CHECK_FALSE(contains(far.out, "warning"));
}

TEST_CASE("floating points echo exactly") {
    const auto r = run("theorem1 --x -1.9017959385362468,0.5 --function exp:1");
    CHECK(json_of(r)[0]["config"]["points"] == "-1.9017959385362468,0.5");
}

TEST_CASE("integral command") {
    const auto exact = run("integral --x 0,1,2 --function poly:0,0,1/2 --symbolic");
    CHECK(exact.status == 0);
    CHECK(json_of(exact)["value"] == "1");
    const auto numeric = run("integral --x 0,1 --function exp:1");
    CHECK(numeric.status == 0);
    CHECK(json_of(numeric)["value"].get<double>() == doctest::Approx(1.718281828459045).epsilon(1e-14));
}

TEST_CASE("vandermonde integral command") {
    const auto one = run("corollary --n 2");
    CHECK(one.status == 0);
    CHECK(json_of(one).size() == 1);
    const auto range = run("corollary --n-max 3 --format text");
    CHECK(range.status == 0);
    CHECK(contains(range.out, "PASS vandermonde_integral n=3"));
    CHECK(run("corollary --n 2 --n-max 3").status == 2);
}

TEST_CASE("lemma suite command") {
    const auto four = run("verify-lemmas --n-max 4");
    CHECK(four.status == 0);
    for (const auto& r : json_of(four)) CHECK(r["passed"] == true);

    const auto one = run("verify-lemmas --n-max 1 --format text");
    CHECK(one.status == 0);
    CHECK_FALSE(contains(one.out, "FAIL"));

    const auto newton = run("verify-lemmas --only newton --n-max 3");
    CHECK(newton.status == 0);
    const auto reports = json_of(newton);
    CHECK(reports.size() == 6);
    for (const auto& r : reports) CHECK(r["name"] == "newton");

    CHECK(run("verify-lemmas --only nonsense").status == 2);
    CHECK(run("lemmas --n-max 2").status == 0);
}

TEST_CASE("transform examples") {
    const auto forward = run("transform --x 0,1,2");
    CHECK(forward.status == 0);
    const auto f = json_of(forward);
    CHECK(f["y"] == nlohmann::json::array({"1", "2", "3"}));
    CHECK(f["vandermonde_x"] == "2");
    CHECK(f["vandermonde_y"] == "2");
    CHECK(f["equal"] == true);

    const auto inverse = run("transform --inverse --y 1,2,3");
    CHECK(inverse.status == 0);
    CHECK(json_of(inverse)["x"] == nlohmann::json::array({"0", "1", "2"}));

    const auto single = run("transform --x 0,1");
    CHECK(json_of(single)["y"] == nlohmann::json::array({"0", "1"}));

    CHECK(run("transform --x 2,1").status == 2);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run("").status == 2);
    CHECK(run("bogus").status == 2);
    CHECK(run("divdiff --points 1,2,3").status == 2);
    CHECK(run("divdiff --points 1,x,3 --function exp:1").status == 2);
    CHECK(run("divdiff --points 1,2,3 --function wave:1").status == 2);
    CHECK(run("theorem1 --x 0,1,2 --function exp:1 --order 0").status == 2);
    CHECK(run("theorem1 --x 0,1,2 --function exp:1 --format xml").status == 2);
    CHECK(run("theorem1 --x 0,1,2 --function recip:1").status == 2);
    CHECK(run("--help").status == 0);
}

TEST_CASE("environment overrides") {
    const auto coarse = run("theorem1 --x 0,1,2 --function exp:1", "VANDINT_ORDER=2");
    CHECK(coarse.status == 1);
    CHECK(json_of(coarse)[0]["config"]["order"] == 2);
    const auto flag_wins = run("theorem1 --x 0,1,2 --function exp:1 --order 20", "VANDINT_ORDER=2");
    CHECK(flag_wins.status == 0);
    const auto loose = run("theorem1 --x 0,1,2 --function exp:1 --order 2", "VANDINT_TOLERANCE=1e-2");
    CHECK(loose.status == 0);
    const auto seeded = run("verify-lemmas --n-max 2 --only chain", "VANDINT_SEED=9");
    CHECK(json_of(seeded)[0]["seed"] == 9);
}

TEST_CASE("json output is byte-identical across runs") {
    for (const std::string args : {"verify-lemmas --n-max 3 --seed 5", "theorem1 --x -1,0.5,2 --function sin:2,1"}) {
        const auto first = run(args);
        CHECK(first.status == 0);
        CHECK(run(args).out == first.out);
        CHECK(run(args + " --workers 2").out == first.out);
    }
    CHECK(run("verify-lemmas --n-max 3 --seed 6").out != run("verify-lemmas --n-max 3 --seed 5").out);
}
