#include "degpart/gadget.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace degpart {

namespace {

int block_size(int k) { return 18 + 6 * (k - 2); }

VariableGadget layout_gadget(int base, int k) {
    VariableGadget vg;
    for (int i = 0; i < 4; ++i) {
        vg.a[i] = base + i;
        vg.a_prime[i] = base + 4 + i;
        vg.a_star[i] = base + 8 + i;
    }
    vg.hat = base + 12;
    vg.hat_prime = base + 13;
    vg.hat_star = base + 14;
    vg.til = base + 15;
    vg.til_prime = base + 16;
    vg.til_star = base + 17;
    for (int ci = 0; ci < 6; ++ci) {
        vg.clique[ci].resize(k - 2);
        for (int j = 0; j < k - 2; ++j) vg.clique[ci][j] = base + 18 + ci * (k - 2) + j;
    }
    return vg;
}

void add_gadget_edges(const VariableGadget& vg, std::vector<std::pair<int, int>>& edges) {
    auto add = [&](int u, int v) { edges.emplace_back(std::min(u, v), std::max(u, v)); };
    // the ten fixed interconnects
    add(vg.a_prime[0], vg.til_prime);
    add(vg.a_star[0], vg.til_star);
    add(vg.a_prime[1], vg.til_star);
    add(vg.a_star[1], vg.til);
    add(vg.a_prime[2], vg.hat_prime);
    add(vg.a_star[2], vg.hat_star);
    add(vg.a_prime[3], vg.hat_star);
    add(vg.a_star[3], vg.hat);
    add(vg.hat, vg.til);
    add(vg.hat_prime, vg.til_prime);
    // triples attached to their cliques
    for (int i = 0; i < 4; ++i)
        for (int w : vg.clique[i]) {
            add(vg.a[i], w);
            add(vg.a_prime[i], w);
            add(vg.a_star[i], w);
        }
    for (int w : vg.clique[4]) {
        add(vg.hat, w);
        add(vg.hat_prime, w);
        add(vg.hat_star, w);
    }
    for (int w : vg.clique[5]) {
        add(vg.til, w);
        add(vg.til_prime, w);
        add(vg.til_star, w);
    }
    // clique internals
    for (const auto& clique : vg.clique)
        for (size_t i = 0; i < clique.size(); ++i)
            for (size_t j = i + 1; j < clique.size(); ++j) add(clique[i], clique[j]);
}

} // namespace

std::vector<int> GadgetMap::specials(int clause) const {
    std::vector<int> out;
    for (auto [var, slot] : clause_slots.at(clause)) out.push_back(var_gadget[var].a[slot]);
    return out;
}

std::pair<Graph, GadgetMap> build_instance(const RSatInstance& inst, int k, GadgetTarget target) {
    if (k < 5) throw std::invalid_argument("build_instance: k must be at least 5");
    inst.check_valid();

    GadgetMap map;
    map.k = k;
    map.target = target;
    map.num_vars = inst.num_vars;
    map.total_vertices = inst.num_vars * block_size(k);
    for (int x = 0; x < inst.num_vars; ++x)
        map.var_gadget.push_back(layout_gadget(x * block_size(k), k));

    std::vector<std::pair<int, int>> edges;
    for (const auto& vg : map.var_gadget) add_gadget_edges(vg, edges);

    // Slot of each literal occurrence: first/second positive occurrence of a
    // variable goes to slots 1/2, negative occurrences to slots 3/4.
    std::vector<int> pos_seen(inst.num_vars, 0), neg_seen(inst.num_vars, 0);
    auto add = [&](int u, int v) { edges.emplace_back(std::min(u, v), std::max(u, v)); };
    for (const auto& clause : inst.clauses) {
        std::vector<std::pair<int, int>> slots;
        for (int lit : clause) {
            int var = std::abs(lit) - 1;
            int slot = lit > 0 ? pos_seen[var]++ : 2 + neg_seen[var]++;
            slots.emplace_back(var, slot);
        }
        auto a_of = [&](int i) { return map.var_gadget[slots[i].first].a[slots[i].second]; };
        auto ap_of = [&](int i) { return map.var_gadget[slots[i].first].a_prime[slots[i].second]; };
        if (clause.size() == 2) {
            add(a_of(0), a_of(1));
            add(ap_of(0), ap_of(1));
        } else {
            for (int i = 0; i < 4; ++i) add(a_of(i), a_of((i + 1) % 4));
            if (target == GadgetTarget::H) {
                add(ap_of(0), ap_of(2));
                add(ap_of(1), ap_of(3));
            }
        }
        map.clause_slots.push_back(std::move(slots));
    }
    return {Graph::from_edges(map.total_vertices, edges), std::move(map)};
}

std::pair<Graph, GadgetMap> build_variable_gadget(int k) {
    return build_instance(RSatInstance{1, {}}, k, GadgetTarget::G);
}

CaseParams case_params(int case_id, int k) {
    switch (case_id) {
    case 1:
        if (k < 6) throw std::invalid_argument("case 1 needs k >= 6 so that q = k - 4 >= 2");
        return {1, k - 4, GadgetTarget::G, SatVariant::ALL};
    case 2:
        if (k < 5) throw std::invalid_argument("case 2 needs k >= 5 so that q = k - 3 >= 2");
        return {0, k - 3, GadgetTarget::H, SatVariant::EXACT};
    case 3:
        if (k < 7) throw std::invalid_argument("case 3 needs k >= 7 so that both bounds are >= 2");
        return {(k - 3) / 2, (k - 3) - (k - 3) / 2, GadgetTarget::H, SatVariant::NAE};
    default:
        throw std::invalid_argument("case must be 1, 2 or 3");
    }
}

namespace {

// True when the gadget state puts a(x,1), a(x,2) in the p class.
bool state_a1_p(int case_id, bool value) {
    switch (case_id) {
    case 1: return !value; // true literals get colour q
    case 2: return value;  // true literals get colour p
    default: return !value; // case 3 convention: true literals get colour q
    }
}

} // namespace

Partition extend_assignment(const RSatInstance& inst, const Assignment& assignment, int k,
                            int case_id) {
    CaseParams cp = case_params(case_id, k);
    if (static_cast<int>(assignment.size()) != inst.num_vars)
        throw std::invalid_argument("extend_assignment: assignment is not total");
    if (!check_assignment(inst, assignment, cp.variant))
        throw std::invalid_argument("extend_assignment: assignment fails the variant check");

    auto [graph, map] = build_instance(inst, k, cp.target);
    Partition part{PartitionSpec{{cp.p, cp.q}}, std::vector<int>(graph.vertex_count(), -1)};

    const int P = 0, Q = 1;
    for (int x = 0; x < inst.num_vars; ++x) {
        const VariableGadget& vg = map.var_gadget[x];
        bool low_side_p = state_a1_p(case_id, assignment[x]);
        int lo = low_side_p ? P : Q; // colour of the a1/a2 triples, hats
        int hi = low_side_p ? Q : P; // colour of the a3/a4 triples, tildes
        for (int i : {0, 1}) part.class_of[vg.a[i]] = part.class_of[vg.a_prime[i]] =
                                 part.class_of[vg.a_star[i]] = lo;
        for (int i : {2, 3}) part.class_of[vg.a[i]] = part.class_of[vg.a_prime[i]] =
                                 part.class_of[vg.a_star[i]] = hi;
        part.class_of[vg.hat] = part.class_of[vg.hat_prime] = part.class_of[vg.hat_star] = lo;
        part.class_of[vg.til] = part.class_of[vg.til_prime] = part.class_of[vg.til_star] = hi;
        // A clique attached to a p-coloured triple carries exactly p vertices
        // of colour p; attached to a q-coloured triple it carries p + 1.
        for (int ci = 0; ci < 6; ++ci) {
            bool triple_is_p = (ci == 0 || ci == 1 || ci == 4) ? (lo == P) : (hi == P);
            int p_share = triple_is_p ? cp.p : cp.p + 1;
            const auto& clique = vg.clique[ci];
            for (size_t j = 0; j < clique.size(); ++j)
                part.class_of[clique[j]] = (static_cast<int>(j) < p_share) ? P : Q;
        }
    }
    return part;
}

Assignment decode_partition(const GadgetMap& map, const Partition& partition, int case_id) {
    CaseParams cp = case_params(case_id, map.k);
    if (partition.spec.size() != 2 || partition.spec.targets[0] != cp.p ||
        partition.spec.targets[1] != cp.q)
        throw std::invalid_argument("decode_partition: partition spec does not match the case");
    if (static_cast<int>(partition.class_of.size()) != map.total_vertices)
        throw std::invalid_argument("decode_partition: partition does not cover the instance");

    Assignment out(map.num_vars, false);
    for (int x = 0; x < map.num_vars; ++x) {
        const VariableGadget& vg = map.var_gadget[x];
        int c1 = partition.class_of[vg.a[0]], c2 = partition.class_of[vg.a[1]];
        int c3 = partition.class_of[vg.a[2]], c4 = partition.class_of[vg.a[3]];
        if (c1 != c2 || c3 != c4 || c1 == c3)
            throw std::invalid_argument(
                "decode_partition: gadget of variable " + std::to_string(x + 1) +
                " violates the forced pattern");
        bool a1_is_p = (c1 == 0);
        out[x] = (case_id == 2) ? a1_is_p : !a1_is_p;
    }
    return out;
}

std::vector<int> gadget_search_order(const Graph& g, const GadgetMap& map) {
    // Cluster-major: each clique immediately followed by its attached
    // triple, so a cluster's state is forced before the search leaves it.
    int n = g.vertex_count();
    std::vector<int> order;
    order.reserve(n);
    std::vector<char> placed(n, 0);
    auto put = [&](int v) {
        order.push_back(v);
        placed[v] = 1;
    };
    for (const auto& vg : map.var_gadget) {
        auto cluster = [&](int ci, int t1, int t2, int t3) {
            for (int v : vg.clique[ci]) put(v);
            put(t1);
            put(t2);
            put(t3);
        };
        cluster(0, vg.a[0], vg.a_prime[0], vg.a_star[0]);
        cluster(5, vg.til, vg.til_prime, vg.til_star);
        cluster(1, vg.a[1], vg.a_prime[1], vg.a_star[1]);
        cluster(4, vg.hat, vg.hat_prime, vg.hat_star);
        cluster(2, vg.a[2], vg.a_prime[2], vg.a_star[2]);
        cluster(3, vg.a[3], vg.a_prime[3], vg.a_star[3]);
    }
    for (int v = 0; v < n; ++v)
        if (!placed[v]) put(v);
    return order;
}

namespace {

std::string var_token(int x) { return "x" + std::to_string(x + 1); }

} // namespace

std::string serialize_gadget_map(const GadgetMap& m) {
    std::ostringstream out;
    out << "p gadgetmap " << m.k << ' ' << (m.target == GadgetTarget::G ? 'G' : 'H') << '\n';
    auto line = [&](int v, const std::string& label) { out << "m " << v + 1 << ' ' << label << '\n'; };
    static const char* clique_names[6] = {"1", "2", "3", "4", "hat", "til"};
    for (int x = 0; x < m.num_vars; ++x) {
        const VariableGadget& vg = m.var_gadget[x];
        std::string vx = var_token(x);
        for (int i = 0; i < 4; ++i) {
            line(vg.a[i], "a:" + vx + ':' + std::to_string(i + 1));
            line(vg.a_prime[i], "ap:" + vx + ':' + std::to_string(i + 1));
            line(vg.a_star[i], "as:" + vx + ':' + std::to_string(i + 1));
        }
        line(vg.hat, "hat:" + vx);
        line(vg.hat_prime, "hatp:" + vx);
        line(vg.hat_star, "hats:" + vx);
        line(vg.til, "til:" + vx);
        line(vg.til_prime, "tilp:" + vx);
        line(vg.til_star, "tils:" + vx);
        for (int ci = 0; ci < 6; ++ci)
            for (size_t j = 0; j < vg.clique[ci].size(); ++j)
                line(vg.clique[ci][j],
                     std::string("K:") + vx + ':' + clique_names[ci] + ':' + std::to_string(j + 1));
    }
    return out.str();
}

namespace {

[[noreturn]] void map_fail(const std::string& what) {
    throw std::runtime_error("gadget map parse error: " + what);
}

std::vector<std::string> split_label(const std::string& label) {
    std::vector<std::string> parts;
    std::string item;
    std::istringstream ss(label);
    while (std::getline(ss, item, ':')) parts.push_back(item);
    return parts;
}

int parse_var_token(const std::string& token) {
    if (token.size() < 2 || token[0] != 'x') map_fail("bad variable token '" + token + "'");
    return std::stoi(token.substr(1)) - 1;
}

} // namespace

GadgetMap parse_gadget_map(std::istream& in) {
    GadgetMap m;
    std::string line;
    bool seen_header = false;
    struct Pending {
        int vertex;
        std::vector<std::string> parts;
    };
    std::vector<Pending> pending;
    int max_vertex = -1, max_var = -1;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ss(line);
        std::string tag;
        ss >> tag;
        if (tag == "p") {
            std::string kind, target, extra;
            if (!(ss >> kind >> m.k >> target) || kind != "gadgetmap" || (ss >> extra) ||
                (target != "G" && target != "H") || m.k < 5)
                map_fail("malformed header");
            m.target = target == "G" ? GadgetTarget::G : GadgetTarget::H;
            seen_header = true;
        } else if (tag == "m") {
            if (!seen_header) map_fail("entry before header");
            int v;
            std::string label, extra;
            if (!(ss >> v >> label) || (ss >> extra) || v < 1) map_fail("malformed entry");
            auto parts = split_label(label);
            if (parts.size() < 2) map_fail("bad label '" + label + "'");
            max_vertex = std::max(max_vertex, v - 1);
            max_var = std::max(max_var, parse_var_token(parts[1]));
            pending.push_back({v - 1, std::move(parts)});
        } else {
            map_fail("unknown line type '" + tag + "'");
        }
    }
    if (!seen_header) map_fail("missing header");
    m.num_vars = max_var + 1;
    m.total_vertices = max_vertex + 1;
    VariableGadget blank;
    blank.a.fill(-1);
    blank.a_prime.fill(-1);
    blank.a_star.fill(-1);
    for (auto& clique : blank.clique) clique.assign(m.k - 2, -1);
    m.var_gadget.assign(m.num_vars, blank);

    for (const auto& entry : pending) {
        const auto& parts = entry.parts;
        VariableGadget& vg = m.var_gadget[parse_var_token(parts[1])];
        const std::string& kind = parts[0];
        if (kind == "a" || kind == "ap" || kind == "as") {
            if (parts.size() != 3) map_fail("bad label arity");
            int slot = std::stoi(parts[2]) - 1;
            if (slot < 0 || slot > 3) map_fail("slot out of range");
            (kind == "a" ? vg.a : kind == "ap" ? vg.a_prime : vg.a_star)[slot] = entry.vertex;
        } else if (kind == "hat") {
            vg.hat = entry.vertex;
        } else if (kind == "hatp") {
            vg.hat_prime = entry.vertex;
        } else if (kind == "hats") {
            vg.hat_star = entry.vertex;
        } else if (kind == "til") {
            vg.til = entry.vertex;
        } else if (kind == "tilp") {
            vg.til_prime = entry.vertex;
        } else if (kind == "tils") {
            vg.til_star = entry.vertex;
        } else if (kind == "K") {
            if (parts.size() != 4) map_fail("bad clique label arity");
            static const char* clique_names[6] = {"1", "2", "3", "4", "hat", "til"};
            int ci = -1;
            for (int c = 0; c < 6; ++c)
                if (parts[2] == clique_names[c]) ci = c;
            if (ci == -1) map_fail("bad clique name '" + parts[2] + "'");
            size_t j = static_cast<size_t>(std::stoi(parts[3])) - 1;
            if (j >= vg.clique[ci].size()) map_fail("clique position out of range");
            vg.clique[ci][j] = entry.vertex;
        } else {
            map_fail("unknown label kind '" + kind + "'");
        }
    }
    for (const auto& vg : m.var_gadget) {
        for (int i = 0; i < 4; ++i)
            if (vg.a[i] < 0 || vg.a_prime[i] < 0 || vg.a_star[i] < 0) map_fail("incomplete gadget");
        if (vg.hat < 0 || vg.hat_prime < 0 || vg.hat_star < 0 || vg.til < 0 || vg.til_prime < 0 ||
            vg.til_star < 0)
            map_fail("incomplete gadget");
        for (const auto& clique : vg.clique)
            for (int v : clique)
                if (v < 0) map_fail("incomplete gadget clique");
    }
    return m;
}

GadgetMap parse_gadget_map_text(const std::string& text) {
    std::istringstream ss(text);
    return parse_gadget_map(ss);
}

GadgetMap parse_gadget_map_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open gadget map file: " + path);
    return parse_gadget_map(in);
}

} // namespace degpart
