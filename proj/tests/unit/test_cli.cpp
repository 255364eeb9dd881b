#include "cli/cli.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace entriv;

namespace {

struct Result {
    int code = 0;
    std::string out;
    std::string err;
};

Result run(const std::vector<std::string>& args)
{
    std::ostringstream out, err;
    Result r;
    r.code = cli::run(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::filesystem::path scratch(const std::string& name)
{
    const auto dir = std::filesystem::temp_directory_path() / ("entriv_cli_test_" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

void write(const std::filesystem::path& p, const std::string& text) { std::ofstream(p) << text; }

const std::string kData = ENTRIV_DATA_DIR;

} // namespace

TEST_CASE("basic verbs and exit codes")
{
    const auto ses = run({"extpow", "ses", "--prime", "3", "--n", "2", "--which", "first"});
    CHECK(ses.code == cli::kExitPass);
    const auto report = nlohmann::json::parse(ses.out);
    CHECK(report["verb"] == "extpow ses");
    CHECK(report["parameters"]["prime"] == 3);
    CHECK(report["parameters"]["which"] == "first");
    CHECK(report["pass"] == true);
    CHECK(report["payload"]["degrees"].is_object());

    CHECK(run({"ku-ses", "--prime", "2", "--n", "1"}).code == cli::kExitUsage);
    CHECK(run({"extpow", "ses", "--prime", "3", "--n", "2", "--which", "third"}).code == cli::kExitUsage);
    CHECK(run({"extpow", "--prime", "3", "--n", "2", "--window=4:-2"}).code == cli::kExitUsage);
    CHECK(run({"frobnicate"}).code == cli::kExitUsage);
    CHECK(run({"extpow", "ses", "--prime", "4", "--n", "2", "--which", "first"}).code == cli::kExitUsage);
    CHECK(run({"hh", "--ring", "F4", "--n", "2", "--smax", "2"}).code == cli::kExitUsage);
    CHECK(run({"--help"}).code == cli::kExitPass);
}

TEST_CASE("witness reason and failing verification")
{
    const auto w = run({"witness", "--prime", "2", "--n", "3"});
    CHECK(w.code == cli::kExitPass);
    const auto reason = nlohmann::json::parse(w.out)["payload"]["reason"].get<std::string>();
    CHECK(reason.rfind("k=1 ≥ 1", 0) == 0);
    CHECK(run({"witness", "--prime", "2", "--n", "2"}).code == cli::kExitFail);
}

TEST_CASE("determinism and lossless serialization")
{
    const std::vector<std::string> cmd{"euler", "--m", "2", "--t", "3", "--samples", "2000", "--seed", "42"};
    const auto a = run(cmd), b = run(cmd);
    CHECK(a.code == cli::kExitPass);
    CHECK(a.out == b.out);
    const auto parsed = nlohmann::json::parse(a.out);
    CHECK(parsed.dump(2) + "\n" == a.out);
    CHECK(parsed["parameters"]["seed"] == 42);
    const auto c = run({"euler", "--m", "2", "--t", "3", "--samples", "2000", "--seed", "43"});
    CHECK(c.out != a.out);
}

TEST_CASE("hh and markdown output")
{
    const auto r = run({"hh", "--ring", "Q", "--n", "3", "--smax", "6"});
    CHECK(r.code == cli::kExitPass);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["payload"]["agree"] == true);
    CHECK(j["payload"]["loop_space"]["degrees"]["3"]["free"] == 1);
    const auto md = run({"hh", "--ring", "Z", "--n", "2", "--smax", "3", "--format", "md"});
    CHECK(md.code == cli::kExitPass);
    CHECK(md.out.rfind("# entriv hh", 0) == 0);
    CHECK(md.out.find("Z/2") != std::string::npos);
}

TEST_CASE("compose, suspend and formality on data files")
{
    const auto c = run({"compose", "--input", kData + "/symseq/com4.json", kData + "/symseq/com4.json", "--truncate",
                        "4"});
    CHECK(c.code == cli::kExitPass);
    const auto dims = nlohmann::json::parse(c.out)["payload"]["dimensions"];
    CHECK(dims["3"]["0"] == 5);
    CHECK(dims["4"]["0"] == 15);
    const auto s = run({"suspend", "--input", kData + "/symseq/com4.json", "--k", "1", "--with",
                        kData + "/symseq/sign4.json", "--truncate", "4"});
    CHECK(s.code == cli::kExitPass);
    const auto f = run({"formality", "--input", kData + "/complexes/rp2.json"});
    CHECK(f.code == cli::kExitPass);
    CHECK(nlohmann::json::parse(f.out)["payload"]["homology"]["1"]["torsion"][0] == 2);
    CHECK(run({"compose", "--input", kData + "/missing.json", kData + "/symseq/com4.json", "--truncate", "2"}).code ==
          cli::kExitUsage);
}

TEST_CASE("out file and golden comparison")
{
    const auto dir = scratch("golden");
    const auto out = dir / "theta.json";
    const auto r = run({"theta", "--n", "4", "--prime", "3", "--out", out.string()});
    CHECK(r.code == cli::kExitPass);
    CHECK(r.out.empty());
    std::ifstream in(out);
    const auto report = nlohmann::json::parse(in);
    CHECK(report["payload"]["theta"] == 27);

    write(dir / "good.json", report["payload"].dump());
    auto bad = report["payload"];
    bad["theta"] = 26;
    write(dir / "bad.json", bad.dump());
    CHECK(run({"theta", "--n", "4", "--prime", "3", "--golden", (dir / "good.json").string()}).code ==
          cli::kExitPass);
    const auto mismatch = run({"theta", "--n", "4", "--prime", "3", "--golden", (dir / "bad.json").string()});
    CHECK(mismatch.code == cli::kExitFail);
    CHECK(nlohmann::json::parse(mismatch.out)["golden"]["match"] == false);
}

TEST_CASE("batch manifests")
{
    const auto dir = scratch("batch");
    write(dir / "empty.json", "[]");
    const auto empty = run({"batch", "--manifest", (dir / "empty.json").string()});
    CHECK(empty.code == cli::kExitPass);
    CHECK(nlohmann::json::parse(empty.out)["payload"]["total"] == 0);

    const auto theta = nlohmann::json::parse(run({"theta", "--n", "3", "--prime", "2"}).out)["payload"];
    write(dir / "theta.golden.json", theta.dump());
    auto wrong = theta;
    wrong["theta"] = 5;
    write(dir / "theta.wrong.json", wrong.dump());
    const nlohmann::json good = {
        nlohmann::json::array({"theta", "--n", "3", "--prime", "2"}),
        {{"argv", {"theta", "--n", "3", "--prime", "2"}}, {"golden", "theta.golden.json"}},
        nlohmann::json::array({"steenrod", "witness", "--n", "2"}),
    };
    write(dir / "good.json", good.dump());
    const auto a = run({"batch", "--manifest", (dir / "good.json").string(), "--jobs", "3"});
    CHECK(a.code == cli::kExitPass);
    const auto summary = nlohmann::json::parse(a.out)["payload"];
    CHECK(summary["passed"] == 3);
    CHECK(summary["results"][2]["report"]["verb"] == "steenrod witness");
    const auto b = run({"batch", "--manifest", (dir / "good.json").string(), "--jobs", "1"});
    CHECK(a.out == b.out);

    nlohmann::json perturbed = good;
    perturbed[1]["golden"] = "theta.wrong.json";
    write(dir / "perturbed.json", perturbed.dump());
    const auto p = run({"batch", "--manifest", (dir / "perturbed.json").string()});
    CHECK(p.code == cli::kExitFail);
    CHECK(nlohmann::json::parse(p.out)["payload"]["failed"] == 1);

    write(dir / "malformed.json", "{\"not\": \"a list\"}");
    CHECK(run({"batch", "--manifest", (dir / "malformed.json").string()}).code == cli::kExitUsage);
    write(dir / "nested.json", "[[\"batch\", \"--manifest\", \"x\"]]");
    CHECK(run({"batch", "--manifest", (dir / "nested.json").string()}).code == cli::kExitUsage);
}
