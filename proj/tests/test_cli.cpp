#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "approxlab/cli.hpp"
#include "approxlab/io.hpp"

using namespace approxlab;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run invoke(std::vector<std::string> args) {
    std::vector<const char*> argv = {"approxlab"};
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

fs::path tmp_file(const std::string& name, const std::string& contents) {
    fs::path p = fs::temp_directory_path() / ("approxlab_cli_" + name);
    std::ofstream f(p);
    f << contents;
    return p;
}

} // namespace

TEST_CASE("group descriptor mini-language") {
    CHECK(parse_group("Z") == GroupDescriptor::int_lattice(1));
    CHECK(parse_group("Z^2") == GroupDescriptor::int_lattice(2));
    CHECK(parse_group("Z/10") == GroupDescriptor::cyclic(10));
    CHECK(parse_group("(Z/5)^3") == GroupDescriptor::mod_lattice(5, 3));
    CHECK(parse_group("H(Z)") == GroupDescriptor::heisenberg_z());
    CHECK(parse_group("H(7)") == GroupDescriptor::heisenberg_mod(7));
    CHECK(parse_group("SL2(7)") == GroupDescriptor::sl2(7));
    CHECK(parse_group("C4*Z") == GroupDescriptor::free_product(4));
    CHECK_THROWS_AS(parse_group("Q8"), ParseError);
    CHECK_THROWS_AS(parse_group("SL2(6)"), InvalidDescriptor);
}

TEST_CASE("set files round trip") {
    auto p = tmp_file("roundtrip.txt", "# a comment\n1,2\n\n3,-4  \n");
    Group z2(GroupDescriptor::int_lattice(2));
    ElementSet s = read_set_file(p.string(), z2);
    CHECK(s.size() == 2);
    CHECK(s.contains(GroupElement{{1, 2}}));
    CHECK(s.contains(GroupElement{{3, -4}}));

    fs::path q = fs::temp_directory_path() / "approxlab_cli_rt2.txt";
    write_set_file(q.string(), s);
    CHECK(read_set_file(q.string(), z2) == s);
}

TEST_CASE("stats on the odd residues") {
    auto p = tmp_file("odds.txt", "1\n3\n5\n7\n9\n");
    auto r = invoke({"stats", "--group", "Z/10", "--set", p.string()});
    CHECK(r.code == 0);
    CHECK(r.out.find("size,doubling_num") != std::string::npos);
    CHECK(r.out.find("5,1,1,,,1,0") != std::string::npos); // doubling exactly 1, symmetric

    auto rt = invoke({"stats", "--group", "Z/10", "--set", p.string(), "--tripling"});
    CHECK(rt.code == 0);
    CHECK(rt.out.find("5,1,1,1,1,1,0") != std::string::npos);
}

TEST_CASE("certify rejects a non-symmetric set with a usage error") {
    auto p = tmp_file("notsym.txt", "1\n2\n");
    auto r = invoke({"certify", "--group", "Z", "--set", p.string(), "--kind", "approx"});
    CHECK(r.code == 2);
    CHECK(!r.err.empty());
}

TEST_CASE("certify produces a verified certificate") {
    auto p = tmp_file("interval.txt", "-2\n-1\n0\n1\n2\n");
    auto r = invoke({"certify", "--group", "Z", "--set", p.string(), "--kind", "ruzsa"});
    CHECK(r.code == 0);
    CHECK(r.out.find("status=ok") != std::string::npos);
    auto ra = invoke({"certify", "--group", "Z", "--set", p.string(), "--kind", "approx",
                      "--power", "4"});
    CHECK(ra.code == 0);
}

TEST_CASE("gen expands specs") {
    auto r = invoke({"gen", "--spec", "prog x=9,2 L=2,1", "--group", "Z"});
    CHECK(r.code == 0);
    // 15 elements plus the header comment
    int lines = 0;
    for (char c : r.out) lines += c == '\n';
    CHECK(lines == 16);
    CHECK(r.out.find("-20\n") != std::string::npos);
    CHECK(r.out.find("20\n") != std::string::npos);

    auto rb = invoke({"gen", "--spec", "box L=2,1"});
    CHECK(rb.code == 0);

    auto rq = invoke({"gen", "--spec", "Q L1=1 L2=1", "--group", "H(Z)"});
    CHECK(rq.code == 0);
    int qlines = 0;
    for (char c : rq.out) qlines += c == '\n';
    CHECK(qlines == 28);

    auto bad = invoke({"gen", "--spec", "prog x=1 L=2,1", "--group", "Z"});
    CHECK(bad.code == 2);
}

TEST_CASE("gen output file feeds back into stats") {
    fs::path p = fs::temp_directory_path() / "approxlab_cli_box.txt";
    auto r = invoke({"gen", "--spec", "box L=1,1", "--out", p.string()});
    CHECK(r.code == 0);
    auto rs = invoke({"stats", "--group", "Z^2", "--set", p.string()});
    CHECK(rs.code == 0);
    CHECK(rs.out.find("9,") != std::string::npos);
}

TEST_CASE("laws run exits by status") {
    auto ok = invoke({"laws", "run", "--law", "q3", "--params", "L1=2,L2=2", "--seed", "1"});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("satisfied") != std::string::npos);

    auto budget = invoke({"laws", "run", "--law", "pluennecke", "--trials", "2", "--seed", "1",
                          "--budget", "5"});
    CHECK(budget.code == 3);
    CHECK(budget.out.find("budget_exceeded") != std::string::npos);

    auto usage = invoke({"laws", "run", "--law", "nonsense"});
    CHECK(usage.code == 2);
}

TEST_CASE("identical invocations give byte-identical output") {
    auto a = invoke({"laws", "run", "--law", "cover", "--trials", "6", "--seed", "9"});
    auto b = invoke({"laws", "run", "--law", "cover", "--trials", "6", "--seed", "9"});
    auto c = invoke({"laws", "run", "--law", "cover", "--trials", "6", "--seed", "9",
                     "--jobs", "4"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);
}

TEST_CASE("cayley subcommands") {
    auto gens = tmp_file("c6gens.txt", "1\n5\n");
    auto ch = invoke({"cayley", "cheeger", "--group", "Z/6", "--gens", gens.string(), "--exact"});
    CHECK(ch.code == 0);
    CHECK(ch.out.find("h=2/3") != std::string::npos);

    fs::path edges = fs::temp_directory_path() / "approxlab_cli_c6.edges";
    auto cb = invoke({"cayley", "build", "--group", "Z/6", "--gens", gens.string(), "--out",
                      edges.string()});
    CHECK(cb.code == 0);
    std::ifstream ef(edges);
    int nedges = 0;
    std::string line;
    while (std::getline(ef, line))
        if (!line.empty()) ++nedges;
    CHECK(nedges == 6); // 6-cycle
    CHECK(fs::exists(edges.string() + ".map"));

    auto pr = invoke({"cayley", "probe", "--p", "3", "--trials", "4", "--seed", "2",
                      "--epsilon", "0.05"});
    CHECK(pr.code == 0);
    CHECK(pr.out.find("trial,seed,p,") == 0);

    auto bad = invoke({"cayley", "cheeger", "--group", "Z/6", "--gens", gens.string(),
                      "--heuristic", "--iters", "100"});
    CHECK(bad.code == 0);
    CHECK(bad.out.find("heuristic_upper_bound") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
    CHECK(invoke({"frobnicate"}).code == 2);
    CHECK(invoke({"stats", "--group", "Q8", "--set", "/nonexistent"}).code == 2);
    CHECK(invoke({"stats", "--group", "Z", "--set", "/nonexistent/file.txt"}).code == 2);
    CHECK(invoke({}).code == 2);
}
