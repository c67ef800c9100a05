#include "doctest.h"

#include <cstdlib>
#include <sys/wait.h>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "icol/families.hpp"
#include "icol/io.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

fs::path scratch_dir() {
    fs::path dir = fs::temp_directory_path() / "icol_cli_tests";
    fs::create_directories(dir);
    return dir;
}

RunResult run_cli(const std::string& args) {
    const char* bin = std::getenv("ICOL_BIN");
    REQUIRE_MESSAGE(bin != nullptr, "ICOL_BIN must point at the icol binary");
    fs::path out = scratch_dir() / "stdout.txt";
    fs::path err = scratch_dir() / "stderr.txt";
    std::string cmd = std::string(bin) + " " + args + " > " + out.string() + " 2> " +
                      err.string();
    int raw = std::system(cmd.c_str());
    int code = raw < 0 ? raw : WEXITSTATUS(raw);
    return {code, slurp(out), slurp(err)};
}

} // namespace

TEST_CASE("gen output matches the library serialization") {
    fs::path out = scratch_dir() / "c6.graph";
    RunResult r = run_cli("gen --family cycle --d 3 -o " + out.string());
    CHECK(r.code == 0);
    CHECK(slurp(out) == icol::write_graph(icol::build_cycle_family(3).graph));

    // basic generators cover graphs outside the families
    fs::path c5 = scratch_dir() / "c5.graph";
    CHECK(run_cli("gen --family cycle-n --n 5 -o " + c5.string()).code == 0);
    CHECK(slurp(c5) == icol::write_graph(icol::make_cycle(5)));
}

TEST_CASE("color then verify round trips through files") {
    fs::path g = scratch_dir() / "gdd3.graph";
    fs::path c = scratch_dir() / "gdd3.icol";
    RunResult color =
        run_cli("color --family gdd-3 --delta 4 --out-graph " + g.string() +
                " --out-coloring " + c.string());
    CHECK(color.code == 0);

    RunResult verify = run_cli("verify --graph " + g.string() + " --coloring " + c.string());
    CHECK(verify.code == 0);
    CHECK(verify.out == "valid interval coloring: t = 10\n");

    // tampering flips the verdict and the exit code
    icol::EdgeColoring tampered = icol::load_coloring(c);
    tampered.assignment.begin()->second = 12;
    icol::write_file(c, icol::write_coloring(tampered));
    RunResult bad = run_cli("verify --graph " + g.string() + " --coloring " + c.string());
    CHECK(bad.code == 1);
    CHECK(bad.out.find("invalid coloring") != std::string::npos);
}

TEST_CASE("verify exit code distinguishes malformed input") {
    fs::path g = scratch_dir() / "broken.graph";
    icol::write_file(g, "g 3 2\ne 0 1\n"); // header promises two edges
    fs::path c = scratch_dir() / "broken.icol";
    icol::write_file(c, "c 1\nk 0 1 1\n");
    RunResult r = run_cli("verify --graph " + g.string() + " --coloring " + c.string());
    CHECK(r.code == 3);
    CHECK(r.err.find("line 2") != std::string::npos);
}

TEST_CASE("solve exit codes: feasible, infeasible, unknown") {
    fs::path c6 = scratch_dir() / "c6.graph";
    run_cli("gen --family cycle --d 3 -o " + c6.string());

    fs::path cert = scratch_dir() / "c6cert.icol";
    RunResult yes = run_cli("solve --graph " + c6.string() + " --t 4 --certificate " +
                            cert.string());
    CHECK(yes.code == 0);
    CHECK(yes.out == "feasible\n");
    CHECK(icol::validate_interval(icol::load_graph(c6), icol::load_coloring(cert)).valid);

    CHECK(run_cli("solve --graph " + c6.string() + " --t 5").code == 1);

    fs::path k8 = scratch_dir() / "k8.graph";
    run_cli("gen --family complete --n 8 -o " + k8.string());
    RunResult unknown = run_cli("solve --graph " + k8.string() + " --t 11 --max-nodes 5");
    CHECK(unknown.code == 2);
    CHECK(unknown.out == "unknown\n");

    RunResult w = run_cli("solve --graph " + c6.string() + " --w --format records");
    CHECK(w.code == 0);
    CHECK(w.out.find("status=feasible w=4") == 0);
}

TEST_CASE("bounds subcommand") {
    fs::path c6 = scratch_dir() / "c6b.graph";
    run_cli("gen --family cycle --d 3 -o " + c6.string());
    RunResult r = run_cli("bounds --graph " + c6.string());
    CHECK(r.code == 0);
    CHECK(r.out.find("bipartite diameter bound: 4") != std::string::npos);

    fs::path split = scratch_dir() / "split.graph";
    icol::write_file(split, "g 4 2\ne 0 1\ne 2 3\n");
    RunResult refused = run_cli("bounds --graph " + split.string());
    CHECK(refused.code == 1);
    CHECK(refused.err.find("disconnected") != std::string::npos);
}

TEST_CASE("table records expose the gap formula inputs") {
    RunResult r = run_cli("table --family gdq --d 3..4 --q 2 --format records");
    CHECK(r.code == 0);
    CHECK(r.out.find("family=gdq d=3 q=2 delta=- t=12 bound_general=17") !=
          std::string::npos);
    CHECK(r.out.find("gap=5") != std::string::npos);
}

TEST_CASE("family preconditions are usage errors") {
    fs::path out = scratch_dir() / "x.graph";
    RunResult r = run_cli("gen --family gdd-even --d 5 --delta 3 -o " + out.string());
    CHECK(r.code == 64);
    CHECK(r.err.find("even") != std::string::npos);

    CHECK(run_cli("gen --family nosuch --d 3 -o " + out.string()).code == 64);
}

TEST_CASE("solve needs exactly one goal and table only its own axes") {
    fs::path g = scratch_dir() / "p4.graph";
    run_cli("gen --family path --n 4 -o " + g.string());
    CHECK(run_cli("solve --graph " + g.string()).code == 64);
    CHECK(run_cli("solve --graph " + g.string() + " --t 3 --w").code == 64);
    CHECK(run_cli("table --family cycle --d 2..3 --q 1..2").code == 64);
    CHECK(run_cli("table --family cycle").code == 64);
}

TEST_CASE("degenerate gdd parameters route to the covering family") {
    fs::path g = scratch_dir() / "routed.graph";
    fs::path c = scratch_dir() / "routed.icol";
    RunResult r = run_cli("color --family gdd-even --d 2 --delta 4 --out-graph " +
                          g.string() + " --out-coloring " + c.string() +
                          " --format records");
    CHECK(r.code == 0);
    CHECK(r.out.find("family=kbb") == 0);
    CHECK(r.err.find("note:") != std::string::npos);
    CHECK(run_cli("verify --graph " + g.string() + " --coloring " + c.string()).code == 0);

    RunResult cyc = run_cli("color --family gdd-odd --d 5 --delta 2 --out-graph " +
                            g.string() + " --out-coloring " + c.string() +
                            " --format records");
    CHECK(cyc.code == 0);
    CHECK(cyc.out.find("family=cycle") == 0);
}

TEST_CASE("identical invocations produce identical bytes") {
    fs::path g1 = scratch_dir() / "det1.graph";
    fs::path g2 = scratch_dir() / "det2.graph";
    fs::path c1 = scratch_dir() / "det1.icol";
    fs::path c2 = scratch_dir() / "det2.icol";
    RunResult a = run_cli("color --family gdq --d 4 --q 2 --out-graph " + g1.string() +
                          " --out-coloring " + c1.string() + " --format records");
    RunResult b = run_cli("color --family gdq --d 4 --q 2 --out-graph " + g2.string() +
                          " --out-coloring " + c2.string() + " --format records");
    CHECK(a.code == 0);
    CHECK(b.code == 0);
    CHECK(a.out == b.out);
    CHECK(slurp(g1) == slurp(g2));
    CHECK(slurp(c1) == slurp(c2));

    RunResult s1 = run_cli("solve --graph " + g1.string() + " --t 16 --format records");
    RunResult s2 = run_cli("solve --graph " + g1.string() + " --t 16 --format records");
    CHECK(s1.out == s2.out);
}

TEST_CASE("gen output reparses and reserializes byte-identically") {
    fs::path out = scratch_dir() / "roundtrip.graph";
    run_cli("gen --family gdd-odd --d 5 --delta 4 -o " + out.string());
    std::string bytes = slurp(out);
    icol::Graph g = icol::parse_graph(bytes);
    CHECK(icol::write_graph(g) == bytes);
}
