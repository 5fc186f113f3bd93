#include "degpart/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace degpart {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    Graph g;
    g.n_ = n;
    g.adj_.assign(n, {});
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loop");
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    g.m_ = static_cast<long long>(edges.size());
    for (auto& list : g.adj_) {
        std::sort(list.begin(), list.end());
        if (std::adjacent_find(list.begin(), list.end()) != list.end())
            throw std::invalid_argument("duplicate edge");
    }
    return g;
}

bool Graph::has_edge(int u, int v) const {
    const auto& list = adj_[u];
    return std::binary_search(list.begin(), list.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<size_t>(m_));
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out; // adjacency is sorted, so this is lexicographic already
}

Graph Graph::induced(const std::vector<int>& vertices, std::vector<int>* old_of_new,
                     std::vector<int>* new_of_old) const {
    std::vector<int> map_new(n_, -1);
    for (size_t i = 0; i < vertices.size(); ++i) {
        int v = vertices[i];
        if (v < 0 || v >= n_) throw std::invalid_argument("induced: vertex out of range");
        if (map_new[v] != -1) throw std::invalid_argument("induced: repeated vertex");
        map_new[v] = static_cast<int>(i);
    }
    std::vector<std::pair<int, int>> sub_edges;
    for (int u : vertices)
        for (int v : adj_[u])
            if (u < v && map_new[v] != -1) sub_edges.emplace_back(map_new[u], map_new[v]);
    Graph g = from_edges(static_cast<int>(vertices.size()), sub_edges);
    if (old_of_new) *old_of_new = vertices;
    if (new_of_old) *new_of_old = std::move(map_new);
    return g;
}

namespace {

[[noreturn]] void parse_fail(int line_no, const std::string& what) {
    throw std::runtime_error("graph parse error at line " + std::to_string(line_no) + ": " + what);
}

} // namespace

Graph parse_graph(std::istream& in) {
    std::string line;
    int line_no = 0;
    long long n = -1, m = -1;
    std::vector<std::pair<int, int>> edges;
    bool seen_header = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ss(line);
        std::string tag;
        ss >> tag;
        if (tag == "p") {
            if (seen_header) parse_fail(line_no, "duplicate header");
            std::string fmt;
            std::string extra;
            if (!(ss >> fmt >> n >> m) || fmt != "edge" || (ss >> extra))
                parse_fail(line_no, "malformed header, expected 'p edge <n> <m>'");
            if (n < 0 || m < 0) parse_fail(line_no, "negative count in header");
            seen_header = true;
        } else if (tag == "e") {
            if (!seen_header) parse_fail(line_no, "edge before header");
            long long u, v;
            std::string extra;
            if (!(ss >> u >> v) || (ss >> extra)) parse_fail(line_no, "malformed edge line");
            if (u == v) parse_fail(line_no, "self-loop");
            if (u < 1 || v < 1 || u > n || v > n) parse_fail(line_no, "vertex id out of range");
            if (u > v) parse_fail(line_no, "edge endpoints must satisfy u < v");
            edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
        } else {
            parse_fail(line_no, "unknown line type '" + tag + "'");
        }
    }
    if (!seen_header) throw std::runtime_error("graph parse error: missing 'p edge' header");
    if (static_cast<long long>(edges.size()) != m)
        throw std::runtime_error("graph parse error: header declares " + std::to_string(m) +
                                 " edges, file has " + std::to_string(edges.size()));
    try {
        return Graph::from_edges(static_cast<int>(n), edges);
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(std::string("graph parse error: ") + e.what());
    }
}

Graph parse_graph_text(const std::string& text) {
    std::istringstream ss(text);
    return parse_graph(ss);
}

Graph parse_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    return parse_graph(in);
}

std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
    return out.str();
}

int max_degree(const Graph& g) {
    int k = 0;
    for (int v = 0; v < g.vertex_count(); ++v) k = std::max(k, g.degree(v));
    return k;
}

bool is_k_regular(const Graph& g, int k) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) != k) return false;
    return true;
}

bool is_complete(const Graph& g) {
    return is_k_regular(g, g.vertex_count() - 1) || g.vertex_count() <= 1;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(n, 0);
    std::vector<int> queue;
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        queue.assign(1, s);
        seen[s] = 1;
        std::vector<int> comp;
        while (!queue.empty()) {
            int v = queue.back();
            queue.pop_back();
            comp.push_back(v);
            for (int u : g.neighbors(v))
                if (!seen[u]) {
                    seen[u] = 1;
                    queue.push_back(u);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

} // namespace degpart
