// Command-line front end: partitioning, validation, SAT reductions, gadget
// instance generation, brute-force oracle runs, generators and the linearity
// benchmark. Exit codes: 0 success, 1 negative answer, 2 usage/input error,
// 3 oracle budget exhausted.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "degpart/block_cut.hpp"
#include "degpart/degeneracy.hpp"
#include "degpart/forest_partition.hpp"
#include "degpart/gadget.hpp"
#include "degpart/generators.hpp"
#include "degpart/graph.hpp"
#include "degpart/oracle.hpp"
#include "degpart/partition.hpp"
#include "degpart/rsat.hpp"

namespace {

using namespace degpart;

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << content;
}

std::vector<long long> parse_sizes(const std::string& csv) {
    std::vector<long long> sizes;
    std::string item;
    std::istringstream ss(csv);
    while (std::getline(ss, item, ',')) {
        size_t used = 0;
        long long value = std::stoll(item, &used);
        if (used != item.size() || value <= 0) throw std::invalid_argument("bad size '" + item + "'");
        sizes.push_back(value);
    }
    if (sizes.empty()) throw std::invalid_argument("empty size list");
    for (size_t i = 1; i < sizes.size(); ++i)
        if (sizes[i] <= sizes[i - 1]) throw std::invalid_argument("sizes must be ascending");
    return sizes;
}

int run_partition(const std::string& graph_path, const std::string& spec_csv,
                  const std::string& out_path, bool counters) {
    Graph g = parse_graph_file(graph_path);
    PartitionSpec spec = PartitionSpec::parse(spec_csv);
    OpCounter ops;
    Partition part = degenerate_partition(g, spec, counters ? &ops : nullptr);
    std::string text = serialize_partition(part);
    if (counters) text += "c ops " + std::to_string(ops.total()) + "\n";
    write_output(out_path, text);
    return 0;
}

int run_validate(const std::string& graph_path, const std::string& partition_path) {
    Graph g = parse_graph_file(graph_path);
    Partition part = parse_partition_file(partition_path, g.vertex_count());
    ValidationReport report = validate_partition(g, part);
    if (report.ok) {
        std::cout << "valid\n";
        return 0;
    }
    std::cout << "invalid\n";
    for (const auto& fail : report.failures) {
        std::cout << "class " << fail.class_index + 1 << " core:";
        for (int v : fail.core) std::cout << ' ' << v + 1;
        std::cout << '\n';
    }
    return 1;
}

int run_degeneracy(const std::string& graph_path) {
    Graph g = parse_graph_file(graph_path);
    std::cout << degeneracy_ordering(g).degeneracy << '\n';
    return 0;
}

int run_blocks(const std::string& graph_path) {
    Graph g = parse_graph_file(graph_path);
    BlockDecomposition d = block_cut_tree(g);
    std::cout << "blocks " << d.blocks.size() << " cut_vertices " << d.cut_vertices.size() << '\n';
    for (const auto& block : d.blocks) {
        std::cout << "block";
        for (int v : block) std::cout << ' ' << v + 1;
        std::cout << '\n';
    }
    for (int v : d.cut_vertices) std::cout << "cut " << v + 1 << '\n';
    return 0;
}

int run_eligible_pair(const std::string& graph_path) {
    Graph g = parse_graph_file(graph_path);
    EligiblePair pair = find_eligible_pair(g);
    std::cout << pair.x + 1 << ' ' << pair.y + 1 << '\n';
    return 0;
}

int run_reduce(const std::string& cnf_path, const std::string& out_path) {
    CnfFormula f = parse_cnf_file(cnf_path);
    ReductionResult res = reduce_to_rsat(f);
    write_output(out_path, serialize_cnf(res.instance.to_cnf()));
    return 0;
}

int run_gadget(const std::string& cnf_path, int k, const std::string& target,
               const std::string& prefix) {
    if (target != "G" && target != "H") throw std::invalid_argument("target must be G or H");
    RSatInstance inst = RSatInstance::from_cnf(parse_cnf_file(cnf_path));
    auto [g, map] = build_instance(inst, k, target == "G" ? GadgetTarget::G : GadgetTarget::H);
    write_output(prefix + ".col", serialize_graph(g));
    write_output(prefix + ".map", serialize_gadget_map(map));
    return 0;
}

int run_extend(const std::string& cnf_path, const std::string& assignment_path, int k, int case_id,
               const std::string& out_path) {
    RSatInstance inst = RSatInstance::from_cnf(parse_cnf_file(cnf_path));
    Assignment asg = parse_assignment_file(assignment_path, inst.num_vars);
    Partition part = extend_assignment(inst, asg, k, case_id);
    write_output(out_path, serialize_partition(part));
    return 0;
}

int run_decode(const std::string& map_path, const std::string& partition_path, int case_id) {
    GadgetMap map = parse_gadget_map_file(map_path);
    Partition part = parse_partition_file(partition_path, map.total_vertices);
    Assignment asg = decode_partition(map, part, case_id);
    std::cout << serialize_assignment(asg);
    return 0;
}

int run_oracle(const std::string& graph_path, const std::string& spec_csv, long long budget_nodes,
               const std::string& out_path) {
    Graph g = parse_graph_file(graph_path);
    PartitionSpec spec = PartitionSpec::parse(spec_csv);
    SearchBudget budget;
    if (budget_nodes > 0) budget.node_limit = budget_nodes;
    SearchResult res = find_partition_bruteforce(g, spec, budget);
    switch (res.status) {
    case SearchStatus::Found:
        write_output(out_path, serialize_partition(*res.partition));
        return 0;
    case SearchStatus::None:
        std::cout << "none\n";
        return 1;
    case SearchStatus::BudgetExceeded:
        std::cout << "budget exceeded\n";
        return 3;
    }
    return 2;
}

int run_gen(int n, int k, std::uint64_t seed, const std::string& name) {
    if (!name.empty()) {
        if (n != 0 || k != 0) throw std::invalid_argument("--name excludes --n/--k");
        std::cout << serialize_graph(named_graph(name));
        return 0;
    }
    if (n <= 0 || k < 0) throw std::invalid_argument("need --name or both --n and --k");
    std::cout << serialize_graph(random_regular(n, k, seed));
    return 0;
}

int run_bench(const std::string& family, const std::string& sizes_csv, std::uint64_t seed) {
    if (family != "regular3") throw std::invalid_argument("unknown family '" + family + "'");
    std::vector<long long> sizes = parse_sizes(sizes_csv);
    PartitionSpec spec = PartitionSpec::parse("1,0");
    std::cout << "n,m,ops,wall_ms\n";
    for (long long n : sizes) {
        if (n % 2 != 0) throw std::invalid_argument("regular3 sizes must be even");
        Graph g = random_regular(static_cast<int>(n), 3, seed);
        OpCounter ops;
        auto start = std::chrono::steady_clock::now();
        Partition part = degenerate_partition(g, spec, &ops);
        auto stop = std::chrono::steady_clock::now();
        double wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
        if (!validate_partition(g, part).ok) throw std::logic_error("bench partition invalid");
        std::cout << n << ',' << g.edge_count() << ',' << ops.total() << ',';
        std::cout.setf(std::ios::fixed);
        std::cout.precision(3);
        std::cout << wall_ms << '\n';
        std::cout.unsetf(std::ios::fixed);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"degenerate vertex partition toolkit"};
    app.require_subcommand(1);
    int rc = 0;

    std::string graph_path, partition_path, spec_csv, out_path, cnf_path, assignment_path;
    std::string map_path, target, prefix, name, family, sizes_csv;
    bool counters = false;
    int k = 0, case_id = 0, gen_n = 0, gen_k = 0;
    long long budget_nodes = 0;
    std::uint64_t seed = 1;

    auto* cmd_partition = app.add_subcommand("partition", "compute a degenerate partition");
    cmd_partition->add_option("--graph", graph_path)->required();
    cmd_partition->add_option("--spec", spec_csv, "comma-separated class bounds, e.g. 1,0")->required();
    cmd_partition->add_option("--out", out_path);
    cmd_partition->add_flag("--counters", counters, "append an operation-count comment");
    cmd_partition->callback([&] { rc = run_partition(graph_path, spec_csv, out_path, counters); });

    auto* cmd_validate = app.add_subcommand("validate", "check a partition against its spec");
    cmd_validate->add_option("--graph", graph_path)->required();
    cmd_validate->add_option("--partition", partition_path)->required();
    cmd_validate->callback([&] { rc = run_validate(graph_path, partition_path); });

    auto* cmd_degeneracy = app.add_subcommand("degeneracy", "print the graph degeneracy");
    cmd_degeneracy->add_option("--graph", graph_path)->required();
    cmd_degeneracy->callback([&] { rc = run_degeneracy(graph_path); });

    auto* cmd_blocks = app.add_subcommand("blocks", "print blocks and cut vertices");
    cmd_blocks->add_option("--graph", graph_path)->required();
    cmd_blocks->callback([&] { rc = run_blocks(graph_path); });

    auto* cmd_pair = app.add_subcommand("eligible-pair", "print an eligible pair");
    cmd_pair->add_option("--graph", graph_path)->required();
    cmd_pair->callback([&] { rc = run_eligible_pair(graph_path); });

    auto* cmd_reduce = app.add_subcommand("reduce", "reduce a 4-CNF to a bounded-occurrence CNF");
    cmd_reduce->add_option("--cnf", cnf_path)->required();
    cmd_reduce->add_option("--out", out_path)->required();
    cmd_reduce->callback([&] { rc = run_reduce(cnf_path, out_path); });

    auto* cmd_gadget = app.add_subcommand("gadget", "build a gadget instance from a CNF");
    cmd_gadget->add_option("--cnf", cnf_path)->required();
    cmd_gadget->add_option("--k", k)->required();
    cmd_gadget->add_option("--target", target, "G or H")->required();
    cmd_gadget->add_option("--out", prefix, "output prefix for .col and .map")->required();
    cmd_gadget->callback([&] { rc = run_gadget(cnf_path, k, target, prefix); });

    auto* cmd_extend = app.add_subcommand("extend", "extend an assignment to a partition");
    cmd_extend->add_option("--cnf", cnf_path)->required();
    cmd_extend->add_option("--assignment", assignment_path)->required();
    cmd_extend->add_option("--k", k)->required();
    cmd_extend->add_option("--case", case_id)->required();
    cmd_extend->add_option("--out", out_path)->required();
    cmd_extend->callback([&] { rc = run_extend(cnf_path, assignment_path, k, case_id, out_path); });

    auto* cmd_decode = app.add_subcommand("decode", "decode a partition back to an assignment");
    cmd_decode->add_option("--map", map_path)->required();
    cmd_decode->add_option("--partition", partition_path)->required();
    cmd_decode->add_option("--case", case_id)->required();
    cmd_decode->callback([&] { rc = run_decode(map_path, partition_path, case_id); });

    auto* cmd_oracle = app.add_subcommand("oracle", "exhaustive partition search");
    cmd_oracle->add_option("--graph", graph_path)->required();
    cmd_oracle->add_option("--spec", spec_csv)->required();
    cmd_oracle->add_option("--budget", budget_nodes, "search node limit");
    cmd_oracle->add_option("--out", out_path);
    cmd_oracle->callback([&] { rc = run_oracle(graph_path, spec_csv, budget_nodes, out_path); });

    auto* cmd_gen = app.add_subcommand("gen", "emit a generated or named graph");
    cmd_gen->add_option("--n", gen_n);
    cmd_gen->add_option("--k", gen_k);
    cmd_gen->add_option("--seed", seed);
    cmd_gen->add_option("--name", name, "petersen, prism, bowtie, q3, k<t>, c<t>");
    cmd_gen->callback([&] { rc = run_gen(gen_n, gen_k, seed, name); });

    auto* cmd_bench = app.add_subcommand("bench", "operation-count benchmark, CSV on stdout");
    cmd_bench->add_option("--family", family)->required();
    cmd_bench->add_option("--sizes", sizes_csv, "ascending comma-separated sizes")->required();
    cmd_bench->add_option("--seed", seed);
    cmd_bench->callback([&] { rc = run_bench(family, sizes_csv, seed); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return rc;
}
