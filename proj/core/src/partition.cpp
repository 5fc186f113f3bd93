#include "degpart/partition.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "degpart/degeneracy.hpp"

namespace degpart {

int PartitionSpec::sum() const { return std::accumulate(targets.begin(), targets.end(), 0); }

bool PartitionSpec::all_zero_one() const {
    return std::all_of(targets.begin(), targets.end(), [](int t) { return t == 0 || t == 1; });
}

int PartitionSpec::ones() const {
    return static_cast<int>(std::count(targets.begin(), targets.end(), 1));
}

PartitionSpec PartitionSpec::parse(const std::string& csv) {
    PartitionSpec spec;
    std::string item;
    std::istringstream ss(csv);
    while (std::getline(ss, item, ',')) {
        size_t used = 0;
        int value;
        try {
            value = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("spec: not an integer: '" + item + "'");
        }
        if (used != item.size()) throw std::invalid_argument("spec: trailing junk in '" + item + "'");
        if (value < 0) throw std::invalid_argument("spec: negative class bound");
        spec.targets.push_back(value);
    }
    if (spec.targets.empty()) throw std::invalid_argument("spec: needs at least one class");
    return spec;
}

std::vector<std::vector<int>> Partition::members() const {
    std::vector<std::vector<int>> out(spec.size());
    for (int v = 0; v < static_cast<int>(class_of.size()); ++v) out[class_of[v]].push_back(v);
    return out;
}

ValidationReport validate_partition(const Graph& g, const Partition& p) {
    int n = g.vertex_count();
    int s = p.spec.size();
    if (static_cast<int>(p.class_of.size()) != n)
        throw std::invalid_argument("validate_partition: partition does not cover the graph");
    for (int c : p.class_of)
        if (c < 0 || c >= s) throw std::invalid_argument("validate_partition: class index out of range");

    ValidationReport report;
    report.ok = true;
    // Peel each class independently at its threshold; whatever survives is
    // the core certifying failure.
    std::vector<int> indeg(n, 0);
    std::vector<char> removed(n, 0);
    std::vector<int> stack;
    auto classes = p.members();
    for (int c = 0; c < s; ++c) {
        int threshold = p.spec.targets[c];
        const auto& verts = classes[c];
        for (int v : verts) {
            int d = 0;
            for (int u : g.neighbors(v)) d += (p.class_of[u] == c);
            indeg[v] = d;
            removed[v] = 0;
        }
        stack.clear();
        for (int v : verts)
            if (indeg[v] <= threshold) {
                stack.push_back(v);
                removed[v] = 1;
            }
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : g.neighbors(v)) {
                if (p.class_of[u] != c || removed[u]) continue;
                if (--indeg[u] <= threshold) {
                    removed[u] = 1;
                    stack.push_back(u);
                }
            }
        }
        std::vector<int> core;
        for (int v : verts)
            if (!removed[v]) core.push_back(v);
        if (!core.empty()) {
            report.ok = false;
            report.failures.push_back({c, std::move(core)});
        }
    }
    return report;
}

std::pair<std::vector<int>, std::vector<int>>
split_forest(const Graph& g, const std::vector<int>& forest_class) {
    std::vector<int> side(g.vertex_count(), -1); // -1 outside, 0/1 = parity
    for (int v : forest_class) {
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("split_forest: vertex out of range");
        side[v] = -2; // member, unvisited
    }
    std::vector<int> queue;
    std::vector<int> parent(g.vertex_count(), -1);
    for (int root : forest_class) {
        if (side[root] != -2) continue;
        side[root] = 0;
        queue.assign(1, root);
        size_t head = 0;
        while (head < queue.size()) {
            int v = queue[head++];
            for (int u : g.neighbors(v)) {
                if (side[u] == -1) continue;
                if (u == parent[v]) continue;
                if (side[u] != -2) throw std::invalid_argument("split_forest: class is not a forest");
                side[u] = 1 - side[v];
                parent[u] = v;
                queue.push_back(u);
            }
        }
    }
    std::pair<std::vector<int>, std::vector<int>> out;
    for (int v : forest_class) (side[v] == 0 ? out.first : out.second).push_back(v);
    return out;
}

Partition refine_partition(const Graph& g, const Partition& p,
                           const std::vector<PartitionSpec>& per_class) {
    int s = p.spec.size();
    if (static_cast<int>(per_class.size()) != s)
        throw std::invalid_argument("refine_partition: need one target spec per class");
    for (int c = 0; c < s; ++c) {
        long long capacity = 0;
        for (int t : per_class[c].targets) capacity += t + 1;
        if (per_class[c].targets.empty())
            throw std::invalid_argument("refine_partition: empty split spec");
        if (capacity < p.spec.targets[c] + 1)
            throw std::invalid_argument(
                "refine_partition: capacity violated, need sum(p_i + 1) >= p + 1 for class " +
                std::to_string(c + 1));
    }
    if (!validate_partition(g, p).ok)
        throw std::invalid_argument("refine_partition: input partition does not validate");

    PartitionSpec refined;
    std::vector<int> base(s, 0);
    for (int c = 0; c < s; ++c) {
        base[c] = refined.size();
        refined.targets.insert(refined.targets.end(), per_class[c].targets.begin(),
                               per_class[c].targets.end());
    }
    Partition out{refined, std::vector<int>(g.vertex_count(), -1)};
    auto classes = p.members();
    for (int c = 0; c < s; ++c) {
        std::vector<int> old_of_new;
        Graph sub = g.induced(classes[c], &old_of_new);
        auto deg = degeneracy_ordering(sub);
        Partition split = greedy_assign(sub, deg.ordering, per_class[c]);
        for (int v = 0; v < sub.vertex_count(); ++v)
            out.class_of[old_of_new[v]] = base[c] + split.class_of[v];
    }
    return out;
}

namespace {

[[noreturn]] void pfail(int line_no, const std::string& what) {
    throw std::runtime_error("partition parse error at line " + std::to_string(line_no) + ": " +
                             what);
}

} // namespace

std::string serialize_partition(const Partition& p) {
    std::ostringstream out;
    out << "p partition " << p.spec.size();
    for (int t : p.spec.targets) out << ' ' << t;
    out << '\n';
    for (size_t v = 0; v < p.class_of.size(); ++v)
        out << "v " << v + 1 << ' ' << p.class_of[v] + 1 << '\n';
    return out.str();
}

Partition parse_partition(std::istream& in, int expected_n) {
    std::string line;
    int line_no = 0;
    bool seen_header = false;
    int s = 0;
    PartitionSpec spec;
    std::vector<std::pair<int, int>> entries;
    int max_vertex = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ss(line);
        std::string tag;
        ss >> tag;
        if (tag == "p") {
            if (seen_header) pfail(line_no, "duplicate header");
            std::string kind;
            if (!(ss >> kind >> s) || kind != "partition" || s < 1)
                pfail(line_no, "malformed header, expected 'p partition <s> <p_1> ... <p_s>'");
            spec.targets.resize(s);
            for (int i = 0; i < s; ++i)
                if (!(ss >> spec.targets[i]) || spec.targets[i] < 0)
                    pfail(line_no, "malformed class bound");
            std::string extra;
            if (ss >> extra) pfail(line_no, "trailing tokens in header");
            seen_header = true;
        } else if (tag == "v") {
            if (!seen_header) pfail(line_no, "vertex line before header");
            int v, c;
            std::string extra;
            if (!(ss >> v >> c) || (ss >> extra)) pfail(line_no, "malformed vertex line");
            if (v < 1) pfail(line_no, "vertex id out of range");
            if (c < 1 || c > s) pfail(line_no, "class index out of range");
            entries.emplace_back(v - 1, c - 1);
            max_vertex = std::max(max_vertex, v);
        } else {
            pfail(line_no, "unknown line type '" + tag + "'");
        }
    }
    if (!seen_header) throw std::runtime_error("partition parse error: missing header");
    int n = expected_n >= 0 ? expected_n : max_vertex;
    Partition p{std::move(spec), std::vector<int>(n, -1)};
    for (auto [v, c] : entries) {
        if (v >= n) throw std::runtime_error("partition parse error: vertex id exceeds graph size");
        if (p.class_of[v] != -1) throw std::runtime_error("partition parse error: repeated vertex");
        p.class_of[v] = c;
    }
    for (int v = 0; v < n; ++v)
        if (p.class_of[v] == -1)
            throw std::runtime_error("partition parse error: vertex " + std::to_string(v + 1) +
                                     " unassigned");
    return p;
}

Partition parse_partition_text(const std::string& text, int expected_n) {
    std::istringstream ss(text);
    return parse_partition(ss, expected_n);
}

Partition parse_partition_file(const std::string& path, int expected_n) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open partition file: " + path);
    return parse_partition(in, expected_n);
}

} // namespace degpart
