// Golden tests for the command-line tool: exit codes and byte-exact outputs.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>
#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

int failures = 0;

#define CHECK_MSG(cond, msg)                                                                       \
    do {                                                                                           \
        if (!(cond)) {                                                                             \
            ++failures;                                                                            \
            std::cerr << "FAILED: " << msg << " (line " << __LINE__ << ")\n";                      \
        }                                                                                          \
    } while (0)

struct RunResult {
    int exit_code;
    std::string out;
};

fs::path work_dir;

RunResult run(const std::string& args) {
    fs::path out_file = work_dir / "stdout.txt";
    std::string cmd = std::string(DEGPART_CLI_PATH) + " " + args + " > " + out_file.string() + " 2> " +
                      (work_dir / "stderr.txt").string();
    int status = std::system(cmd.c_str());
    RunResult res;
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(out_file);
    std::stringstream ss;
    ss << in.rdbuf();
    res.out = ss.str();
    return res;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string stderr_text() { return slurp(work_dir / "stderr.txt"); }

void write_file(const fs::path& p, const std::string& content) {
    std::ofstream out(p);
    out << content;
}

} // namespace

int main() {
    work_dir = fs::temp_directory_path() / "degpart_cli_test";
    fs::remove_all(work_dir);
    fs::create_directories(work_dir);
    auto path = [&](const char* name) { return (work_dir / name).string(); };

    // gen: named graph, byte-exact and deterministic
    RunResult petersen = run("gen --name petersen");
    CHECK_MSG(petersen.exit_code == 0, "gen petersen exit");
    CHECK_MSG(petersen.out.substr(0, 13) == "p edge 10 15\n", "gen petersen header");
    CHECK_MSG(run("gen --name petersen").out == petersen.out, "gen deterministic");
    write_file(path("petersen.col"), petersen.out);

    RunResult gen_seeded = run("gen --n 16 --k 3 --seed 9");
    CHECK_MSG(gen_seeded.exit_code == 0, "gen random exit");
    CHECK_MSG(run("gen --n 16 --k 3 --seed 9").out == gen_seeded.out, "gen random deterministic");
    CHECK_MSG(run("gen --n 5 --k 3 --seed 1").exit_code == 2, "gen infeasible exit 2");
    CHECK_MSG(run("gen").exit_code == 2, "gen without parameters exit 2");

    // partition + validate pipeline
    RunResult part = run("partition --graph " + path("petersen.col") + " --spec 1,0 --out " +
                         path("petersen.part"));
    CHECK_MSG(part.exit_code == 0, "partition exit");
    RunResult validate = run("validate --graph " + path("petersen.col") + " --partition " +
                             path("petersen.part"));
    CHECK_MSG(validate.exit_code == 0, "validate exit");
    CHECK_MSG(validate.out == "valid\n", "validate output");

    // deterministic partition output with counters
    RunResult counted = run("partition --graph " + path("petersen.col") + " --spec 1,0 --counters");
    CHECK_MSG(counted.exit_code == 0, "partition --counters exit");
    CHECK_MSG(counted.out.find("c ops ") != std::string::npos, "counters comment present");
    CHECK_MSG(run("partition --graph " + path("petersen.col") + " --spec 1,0 --counters").out ==
                  counted.out,
              "partition deterministic");

    // error paths carry exit 2 and a diagnostic
    write_file(path("k4.col"), run("gen --name k4").out);
    RunResult k4_fail = run("partition --graph " + path("k4.col") + " --spec 1,0");
    CHECK_MSG(k4_fail.exit_code == 2, "K_{k+1} exit 2");
    CHECK_MSG(stderr_text().find("K_{k+1}") != std::string::npos, "K_{k+1} diagnostic");
    RunResult bound_fail = run("partition --graph " + path("petersen.col") + " --spec 0,0");
    CHECK_MSG(bound_fail.exit_code == 2, "bound violation exit 2");
    CHECK_MSG(stderr_text().find("bound violated") != std::string::npos, "bound diagnostic");

    // corrupted partition: move one triangle vertex into the independent set
    write_file(path("c3.col"), "p edge 3 3\ne 1 2\ne 1 3\ne 2 3\n");
    write_file(path("c3.part"), "p partition 2 1 0\nv 1 1\nv 2 2\nv 3 2\n");
    RunResult invalid = run("validate --graph " + path("c3.col") + " --partition " + path("c3.part"));
    CHECK_MSG(invalid.exit_code == 1, "invalid partition exit 1");
    CHECK_MSG(invalid.out.find("invalid\nclass 2 core: 2 3") != std::string::npos, "core listing");

    // thin wrappers
    CHECK_MSG(run("degeneracy --graph " + path("petersen.col")).out == "3\n", "degeneracy output");
    write_file(path("bowtie.col"), run("gen --name bowtie").out);
    RunResult blocks = run("blocks --graph " + path("bowtie.col"));
    CHECK_MSG(blocks.out == "blocks 2 cut_vertices 1\nblock 1 2 3\nblock 3 4 5\ncut 3\n",
              "blocks output");
    RunResult pair = run("eligible-pair --graph " + path("petersen.col"));
    CHECK_MSG(pair.exit_code == 0, "eligible-pair exit");
    {
        std::istringstream ss(pair.out);
        int x = 0, y = 0;
        ss >> x >> y;
        CHECK_MSG(x >= 1 && x <= 10 && y >= 1 && y <= 10 && x != y, "eligible-pair range");
    }
    CHECK_MSG(run("eligible-pair --graph " + path("k4.col")).exit_code == 2, "eligible-pair K4 exit 2");

    // oracle exit codes
    CHECK_MSG(run("oracle --graph " + path("petersen.col") + " --spec 1,0").exit_code == 0,
              "oracle found exit 0");
    RunResult oracle_none = run("oracle --graph " + path("k4.col") + " --spec 1,0");
    CHECK_MSG(oracle_none.exit_code == 1, "oracle none exit 1");
    CHECK_MSG(oracle_none.out == "none\n", "oracle none output");
    write_file(path("big.col"), run("gen --n 26 --k 3 --seed 4").out);
    RunResult oracle_budget = run("oracle --graph " + path("big.col") + " --spec 0,0 --budget 5");
    CHECK_MSG(oracle_budget.exit_code == 3, "oracle budget exit 3");

    // reduce golden: both clauses repeat every variable
    write_file(path("two.cnf"), "p cnf 4 2\n1 2 3 4 0\n-1 2 -3 4 0\n");
    CHECK_MSG(run("reduce --cnf " + path("two.cnf") + " --out " + path("two.rsat")).exit_code == 0,
              "reduce exit");
    CHECK_MSG(slurp(path("two.rsat")) ==
                  "p cnf 8 10\n1 3 5 7 0\n-2 4 -6 8 0\n1 -2 0\n2 -1 0\n3 -4 0\n4 -3 0\n"
                  "5 -6 0\n6 -5 0\n7 -8 0\n8 -7 0\n",
              "reduce golden");
    write_file(path("three.cnf"), "p cnf 3 1\n1 2 3 0\n");
    CHECK_MSG(run("reduce --cnf " + path("three.cnf") + " --out " + path("x.rsat")).exit_code == 2,
              "reduce arity exit 2");

    // gadget / extend / decode pipeline
    write_file(path("one2.cnf"), "p cnf 2 1\n1 2 0\n");
    CHECK_MSG(run("gadget --cnf " + path("one2.cnf") + " --k 5 --target H --out " + path("inst"))
                      .exit_code == 0,
              "gadget exit");
    CHECK_MSG(slurp(path("inst.col")).substr(0, 14) == "p edge 72 166\n", "gadget col header");
    CHECK_MSG(slurp(path("inst.map")).substr(0, 17) == "p gadgetmap 5 H\nm", "gadget map header");
    write_file(path("asg.txt"), "v 1 0\nv 2 1\n");
    CHECK_MSG(run("extend --cnf " + path("one2.cnf") + " --assignment " + path("asg.txt") +
                  " --k 5 --case 2 --out " + path("ext.part"))
                      .exit_code == 0,
              "extend exit");
    CHECK_MSG(run("validate --graph " + path("inst.col") + " --partition " + path("ext.part"))
                      .exit_code == 0,
              "extended partition validates");
    RunResult decoded = run("decode --map " + path("inst.map") + " --partition " + path("ext.part") +
                            " --case 2");
    CHECK_MSG(decoded.exit_code == 0, "decode exit");
    CHECK_MSG(decoded.out == "v 1 0\nv 2 1\n", "decode round-trip");

    // oracle-found partition decodes to a satisfying assignment
    RunResult oracle_found = run("oracle --graph " + path("inst.col") + " --spec 0,2 --out " +
                                 path("orc.part"));
    CHECK_MSG(oracle_found.exit_code == 0, "oracle --out exit");
    CHECK_MSG(run("validate --graph " + path("inst.col") + " --partition " + path("orc.part"))
                      .exit_code == 0,
              "oracle partition validates");
    RunResult orc_decoded = run("decode --map " + path("inst.map") + " --partition " +
                                path("orc.part") + " --case 2");
    CHECK_MSG(orc_decoded.exit_code == 0, "oracle partition decodes");
    CHECK_MSG(orc_decoded.out == "v 1 1\nv 2 0\n" || orc_decoded.out == "v 1 0\nv 2 1\n",
              "decoded assignment has exactly one true literal");

    // the other two parameter regimes round-trip through files as well
    write_file(path("asg1.txt"), "v 1 1\nv 2 0\n");
    CHECK_MSG(run("gadget --cnf " + path("one2.cnf") + " --k 6 --target G --out " + path("inst6"))
                      .exit_code == 0,
              "gadget k=6 exit");
    CHECK_MSG(run("extend --cnf " + path("one2.cnf") + " --assignment " + path("asg1.txt") +
                  " --k 6 --case 1 --out " + path("ext6.part"))
                      .exit_code == 0,
              "extend case 1 exit");
    CHECK_MSG(run("validate --graph " + path("inst6.col") + " --partition " + path("ext6.part"))
                      .exit_code == 0,
              "case 1 partition validates");
    CHECK_MSG(run("decode --map " + path("inst6.map") + " --partition " + path("ext6.part") +
                  " --case 1")
                      .out == "v 1 1\nv 2 0\n",
              "case 1 decode round-trip");
    CHECK_MSG(run("gadget --cnf " + path("one2.cnf") + " --k 7 --target H --out " + path("inst7"))
                      .exit_code == 0,
              "gadget k=7 exit");
    CHECK_MSG(run("extend --cnf " + path("one2.cnf") + " --assignment " + path("asg1.txt") +
                  " --k 7 --case 3 --out " + path("ext7.part"))
                      .exit_code == 0,
              "extend case 3 exit");
    CHECK_MSG(run("validate --graph " + path("inst7.col") + " --partition " + path("ext7.part"))
                      .exit_code == 0,
              "case 3 partition validates");
    CHECK_MSG(run("decode --map " + path("inst7.map") + " --partition " + path("ext7.part") +
                  " --case 3")
                      .out == "v 1 1\nv 2 0\n",
              "case 3 decode round-trip");
    // out-of-range case parameters are rejected
    CHECK_MSG(run("extend --cnf " + path("one2.cnf") + " --assignment " + path("asg1.txt") +
                  " --k 5 --case 1 --out " + path("bad.part"))
                      .exit_code == 2,
              "case 1 with k=5 exit 2");

    // bench: header, row count, deterministic op counts
    RunResult bench = run("bench --family regular3 --sizes 512,1024 --seed 3");
    CHECK_MSG(bench.exit_code == 0, "bench exit");
    {
        std::istringstream ss(bench.out);
        std::string header, row1, row2, rest;
        std::getline(ss, header);
        std::getline(ss, row1);
        std::getline(ss, row2);
        CHECK_MSG(header == "n,m,ops,wall_ms", "bench header");
        CHECK_MSG(row1.substr(0, 8) == "512,768,", "bench first row");
        CHECK_MSG(row2.substr(0, 9) == "1024,1536", "bench second row");
        CHECK_MSG(!std::getline(ss, rest), "bench row count");
        // ops column deterministic across runs
        RunResult again = run("bench --family regular3 --sizes 512,1024 --seed 3");
        auto ops_of = [](const std::string& text) {
            std::vector<std::string> ops;
            std::istringstream lines(text);
            std::string line;
            std::getline(lines, line);
            while (std::getline(lines, line)) {
                size_t a = line.find(',', line.find(',') + 1);
                size_t b = line.find(',', a + 1);
                ops.push_back(line.substr(a + 1, b - a - 1));
            }
            return ops;
        };
        CHECK_MSG(ops_of(bench.out) == ops_of(again.out), "bench ops deterministic");
    }
    CHECK_MSG(run("bench --family regular3 --sizes 1024,512 --seed 3").exit_code == 2,
              "bench non-ascending exit 2");
    CHECK_MSG(run("bench --family regular3 --sizes '' --seed 3").exit_code == 2,
              "bench empty sizes exit 2");
    CHECK_MSG(run("bench --family er --sizes 512 --seed 3").exit_code == 2,
              "bench unknown family exit 2");

    // usage errors
    CHECK_MSG(run("").exit_code == 2, "missing subcommand exit 2");
    CHECK_MSG(run("partition --graph " + path("missing.col") + " --spec 1,0").exit_code == 2,
              "missing file exit 2");

    if (failures == 0) std::cout << "cli tests passed\n";
    return failures == 0 ? 0 : 1;
}
