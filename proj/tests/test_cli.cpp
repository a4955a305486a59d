#include "doctest.h"

#include <filesystem>
#include <sstream>

#include "stepup/certificate.hpp"
#include "stepup/cli.hpp"
#include "stepup/io.hpp"

using namespace stepup;

namespace {

struct Run {
    int code = 0;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args, const std::string& input = "")
{
    std::istringstream in(input);
    std::ostringstream out;
    std::ostringstream err;
    Run r;
    r.code = run_cli(args, in, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

Json certificate(const std::string& text)
{
    return Json::parse(text);
}

std::filesystem::path temp_file(const std::string& name)
{
    return std::filesystem::temp_directory_path() / name;
}

} // namespace

TEST_CASE("usage errors exit with 2")
{
    CHECK(run({}).code == exit_usage);
    CHECK(run({"no-such-command"}).code == exit_usage);
    CHECK(run({"search-phi", "6"}).code == exit_usage);
    const auto missing = run({"verify", "alpha", "/nonexistent/file", "--s", "4"});
    CHECK(missing.code == exit_usage);
    CHECK(missing.err.find("cannot open") != std::string::npos);
}

TEST_CASE("parse errors report the line")
{
    const auto r = run({"verify", "alpha", "-", "--s", "4"}, "hypergraph 3 5\n0 1 2\n0 1 9\n");
    CHECK(r.code == exit_usage);
    CHECK(r.err.find("<stdin>:3:") != std::string::npos);
}

TEST_CASE("alpha of the empty hypergraph")
{
    const auto r = run({"verify", "alpha", "-", "--s", "6"}, "hypergraph 3 7\n");
    CHECK(r.code == exit_pass);
    const auto cert = certificate(r.out);
    CHECK(cert["task"] == "verify-alpha");
    CHECK(cert["verdict"] == "pass");
    CHECK(cert["details"]["alpha"] == 7);

    const auto bounded = run({"verify", "alpha", "-", "--s", "6", "--max", "6"}, "hypergraph 3 7\n");
    CHECK(bounded.code == exit_property_fail);
    CHECK(certificate(bounded.out)["verdict"] == "fail");
}

TEST_CASE("search-phi then lift and verify")
{
    const auto phi = run({"--seed", "3", "search-phi", "6", "4"});
    REQUIRE(phi.code == exit_pass);
    CHECK(phi.out.rfind("coloring 3 6\n", 0) == 0);
    CHECK(certificate(phi.err)["verdict"] == "pass");

    const auto again = run({"--seed", "3", "search-phi", "6", "4"});
    CHECK(again.out == phi.out);
    CHECK(again.err == phi.err);

    const auto base = run({"verify", "base-phi", "-", "--n", "4"}, phi.out);
    CHECK(base.code == exit_pass);

    const auto lift = run({"lift-coloring", "-"}, phi.out);
    REQUIRE(lift.code == exit_pass);
    CHECK(lift.out.rfind("lift 4 6\n", 0) == 0);

    const auto red = run({"verify", "red-density", "-", "--p", "5", "--max-red", "3", "--scope", "window:0:24"},
                         lift.out);
    CHECK(red.code == exit_pass);
    const auto cert = certificate(red.out);
    CHECK(cert["scope"]["kind"] == "window");
    CHECK(cert["scope"]["hi"] == 24);
    CHECK(cert["construction"]["rule"] == "lift");
}

TEST_CASE("piped and file input give identical certificates")
{
    const std::string text = "hypergraph 4 6\n0 1 2 3\n1 2 3 4\n";
    const auto path = temp_file("stepup_cli_base.txt");
    write_file(path.string(), text);
    const auto piped = run({"lift-er", "5", "-"}, text);
    const auto filed = run({"lift-er", "5", path.string()});
    CHECK(piped.code == exit_pass);
    CHECK(piped.out == filed.out);
    CHECK(piped.err == filed.err);

    const auto lifted = piped.out;
    const auto v1 = run({"verify", "clique-free", "-", "--t", "7", "--scope", "window:0:24"}, lifted);
    write_file(path.string(), lifted);
    const auto v2 = run({"verify", "clique-free", path.string(), "--t", "7", "--scope", "window:0:24"});
    CHECK(v1.code == exit_pass);
    CHECK(v1.out == v2.out);
    std::filesystem::remove(path);
}

TEST_CASE("--out routes the certificate to stdout")
{
    const auto path = temp_file("stepup_cli_phi.txt");
    const auto r = run({"search-phi", "5", "4", "--out", path.string()});
    CHECK(r.code == exit_pass);
    CHECK(certificate(r.out)["task"] == "search-phi");
    CHECK(read_file(path.string()).rfind("coloring 3 5\n", 0) == 0);
    std::filesystem::remove(path);
}

TEST_CASE("wall time only with --time")
{
    const auto plain = run({"verify", "partition", "--k", "5", "--bound", "5"});
    CHECK(plain.code == exit_pass);
    CHECK_FALSE(certificate(plain.out).contains("wall_time_ms"));
    const auto timed = run({"--time", "verify", "partition", "--k", "5", "--bound", "5"});
    CHECK(certificate(timed.out).contains("wall_time_ms"));
}

TEST_CASE("other verifiers")
{
    CHECK(run({"verify", "claims", "--claim", "all", "--bound", "6"}).code == exit_pass);
    CHECK(run({"verify", "claims", "--claim", "mono", "--tuple", "0,2,8,9,16,20"}).code == exit_pass);
    CHECK(run({"verify", "properties", "--N", "5", "--arity", "3,4"}).code == exit_pass);
    CHECK(run({"verify", "blue-clique", "-", "--n", "4"}, "coloring 3 5\n").code == exit_property_fail);
    CHECK(run({"verify", "blue-clique", "-", "--n", "4"}, "coloring 3 4\n0 1 2\n").code == exit_pass);
    CHECK(run({"search-phi", "8", "4", "--budget", "500", "--restarts", "1"}).code == exit_property_fail);

    const auto x = run({"build-x", "--kind", "general", "--k", "7", "--random", "300", "--width", "12"});
    CHECK(x.code == exit_pass);
    const auto bad = run({"build-x", "--kind", "general", "--tuple", "0,1,2,4,8,16,32,64,128,256"});
    CHECK(bad.code == exit_usage);
    CHECK(bad.err.find("insufficient extrema") != std::string::npos);
}
