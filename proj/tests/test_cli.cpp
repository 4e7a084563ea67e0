#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <unistd.h>

#include "doctest.h"
#include "hyperlap/dataset_io.hpp"
#include "hyperlap/toy.hpp"

#ifndef HYPERLAP_CLI_PATH
#error "HYPERLAP_CLI_PATH must point at the built binary"
#endif

using namespace hyperlap;
namespace fs = std::filesystem;

namespace {

struct Run {
    int exit_code = -1;
    std::string out;
};

Run run_cli(const std::string& args) {
    const std::string out_file =
        (fs::temp_directory_path() / ("hyperlap-cli-out-" + std::to_string(::getpid()))).string();
    const std::string cmd =
        std::string(HYPERLAP_CLI_PATH) + " " + args + " > " + out_file + " 2>&1";
    const int status = std::system(cmd.c_str());
    Run r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(out_file);
    std::stringstream ss;
    ss << in.rdbuf();
    r.out = ss.str();
    fs::remove(out_file);
    return r;
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("hyperlap-cli-" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string write_toy_native(const TempDir& dir) {
    const std::string path = dir.file("toy.hg");
    write_native_file(toy_hypergraph(), path);
    return path;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("verify-toy passes on a fresh build") {
    Run r = run_cli("verify-toy");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("toy verification passed") != std::string::npos);
}

TEST_CASE("usage errors exit with a distinct code") {
    CHECK(run_cli("no-such-command").exit_code == 2);
    CHECK(run_cli("centrality").exit_code == 2);              // missing --input
    CHECK(run_cli("laplacian --input x --which bogus").exit_code == 2);
}

TEST_CASE("missing input file exits nonzero and names the path") {
    Run r = run_cli("centrality --input /nonexistent/g.hg");
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("/nonexistent/g.hg") != std::string::npos);
}

TEST_CASE("ingest benson and report stats") {
    TempDir dir;
    {
        std::ofstream nv(dir.file("mini-nverts.txt"));
        nv << "2\n3\n2\n";
        std::ofstream sx(dir.file("mini-simplices.txt"));
        sx << "1\n2\n1\n2\n3\n1\n2\n";
    }
    Run r = run_cli("ingest --format benson --prefix " + dir.file("mini") + " --out " +
                    dir.file("mini.hg") + " --dedup multiplicity");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("3 vertices") != std::string::npos);
    CHECK(r.out.find("multiplicity") != std::string::npos);

    SimplexRegistry reg = read_native_file(dir.file("mini.hg"));
    CHECK(reg.vertex_count() == 3);
    CHECK(reg.hyperedge_count() == 2);
    CHECK(reg.simplex(reg.find({1, 2})).weight == 2.0);
}

TEST_CASE("laplacian export matches the reference L0") {
    TempDir dir;
    const std::string hg = write_toy_native(dir);
    Run r = run_cli("laplacian --input " + hg + " --which l0 --format dense");
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("6 6\n", 0) == 0);
    CHECK(r.out.find("5 1 2 2 0 0") != std::string::npos);
    CHECK(r.out.find("2 0 8 3 3 2") != std::string::npos);
}

TEST_CASE("centrality tables carry the reference scores") {
    TempDir dir;
    const std::string hg = write_toy_native(dir);
    Run deg = run_cli("centrality --input " + hg + " --measure degree");
    CHECK(deg.exit_code == 0);
    CHECK(deg.out.find("6\t1,2\tdegree\t7\t11") != std::string::npos);

    Run cls = run_cli("centrality --input " + hg + " --measure closeness");
    CHECK(cls.exit_code == 0);
    CHECK(cls.out.find("0.533333333333") != std::string::npos);

    Run all = run_cli("centrality --input " + hg + " --measure all");
    CHECK(all.exit_code == 0);
    for (const char* name : {"# measure: dff", "# measure: degree",
                             "# measure: betweenness", "# measure: closeness"})
        CHECK(all.out.find(name) != std::string::npos);
}

TEST_CASE("sir is reproducible for a fixed seed") {
    TempDir dir;
    const std::string hg = write_toy_native(dir);
    const std::string args = "sir --input " + hg + " --trials 50 --seed 42 --out ";
    Run a = run_cli(args + dir.file("a.json"));
    Run b = run_cli(args + dir.file("b.json"));
    CHECK(a.exit_code == 0);
    CHECK(b.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(slurp(dir.file("a.json")) == slurp(dir.file("b.json")));
    CHECK(slurp(dir.file("a.json")).find("\"seed\": 42") != std::string::npos);
}

TEST_CASE("evaluate rank-removal writes replayable reports") {
    TempDir dir;
    const std::string hg = write_toy_native(dir);
    const std::string args = "evaluate rank-removal --input " + hg +
                             " --centrality degree --parts 4 --trials 40 --seed 7 --out ";
    Run a = run_cli(args + dir.file("run1"));
    CHECK(a.exit_code == 0);
    CHECK(fs::exists(dir.file("run1/rank_removal.json")));
    CHECK(fs::exists(dir.file("run1/rank_removal.tsv")));
    const std::string tsv = slurp(dir.file("run1/rank_removal.tsv"));
    CHECK(tsv.find("centrality\tstep\tx\tf1\tf2\trs\tstderr\trho") != std::string::npos);
    CHECK(tsv.find("\"seed\":7") != std::string::npos);  // config echo

    Run b = run_cli(args + dir.file("run2"));
    CHECK(b.exit_code == 0);
    CHECK(slurp(dir.file("run1/rank_removal.json")) == slurp(dir.file("run2/rank_removal.json")));
}

TEST_CASE("evaluate sweeps emit curve tables") {
    TempDir dir;
    const std::string hg = write_toy_native(dir);
    Run r = run_cli("evaluate ratio-sweep --input " + hg +
                    " --centrality degree --ratios 0.2,1.0 --trials 30 --seed 5 --out " +
                    dir.file("sw"));
    CHECK(r.exit_code == 0);
    const std::string tsv = slurp(dir.file("sw/ratio_sweep.tsv"));
    CHECK(tsv.find("degree\t0\t0.2") != std::string::npos);
    CHECK(tsv.find("degree\t1\t1") != std::string::npos);

    Run inf = run_cli("evaluate infection-sweep --input " + hg +
                      " --centrality degree --mu-ratios 1.0,1.5 --removal 0.2 --trials 30 "
                      "--seed 5 --out " +
                      dir.file("sw2"));
    CHECK(inf.exit_code == 0);
    CHECK(slurp(dir.file("sw2/infection_sweep.tsv")).find("degree\t1\t1.5") != std::string::npos);

    Run bad = run_cli("evaluate ratio-sweep --input " + hg + " --ratios 2.0 --out " + dir.file("x"));
    CHECK(bad.exit_code == 2);
}

TEST_SUITE_END();
