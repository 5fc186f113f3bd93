#include "degpart/generators.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <set>
#include <stdexcept>

namespace degpart {

namespace {

// Fisher-Yates with explicit bounded sampling keeps outputs identical
// across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t threshold = (~bound + 1) % bound; // 2^64 mod bound
        for (;;) {
            std::uint64_t r = engine_();
            if (r >= threshold) return r % bound;
        }
    }

private:
    std::mt19937_64 engine_;
};

template <typename T>
void shuffle(std::vector<T>& v, Rng& rng) {
    for (size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng.below(i)]);
}

Graph petersen() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);          // outer cycle
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        edges.emplace_back(i, 5 + i);                // spokes
    }
    return Graph::from_edges(10, edges);
}

Graph complete(int t) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < t; ++u)
        for (int v = u + 1; v < t; ++v) edges.emplace_back(u, v);
    return Graph::from_edges(t, edges);
}

Graph cycle(int t) {
    if (t < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < t; ++i) edges.emplace_back(std::min(i, (i + 1) % t), std::max(i, (i + 1) % t));
    return Graph::from_edges(t, edges);
}

Graph hypercube3() {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < 8; ++u)
        for (int b = 0; b < 3; ++b) {
            int v = u ^ (1 << b);
            if (u < v) edges.emplace_back(u, v);
        }
    return Graph::from_edges(8, edges);
}

Graph prism() {
    return Graph::from_edges(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {0, 3}, {1, 4}, {2, 5}});
}

Graph bowtie() {
    return Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
}

} // namespace

Graph random_regular(int n, int k, std::uint64_t seed) {
    if (n <= 0) throw std::invalid_argument("random_regular: n must be positive");
    if (k < 0 || k >= n) throw std::invalid_argument("random_regular: need 0 <= k < n");
    if ((static_cast<long long>(n) * k) % 2 != 0)
        throw std::invalid_argument("random_regular: infeasible, n*k is odd");

    Rng rng(seed);
    std::vector<int> stubs(static_cast<size_t>(n) * k);
    for (int v = 0; v < n; ++v)
        for (int j = 0; j < k; ++j) stubs[(size_t)v * k + j] = v;

    const int kMaxAttempts = 200;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        shuffle(stubs, rng);
        std::set<std::pair<int, int>> seen;
        std::vector<std::pair<int, int>> edges;
        edges.reserve(stubs.size() / 2);
        bool ok = true;
        for (size_t i = 0; i + 1 < stubs.size(); i += 2) {
            int u = stubs[i], v = stubs[i + 1];
            if (u == v) {
                ok = false;
                break;
            }
            auto e = std::minmax(u, v);
            if (!seen.insert({e.first, e.second}).second) {
                ok = false;
                break;
            }
            edges.emplace_back(e.first, e.second);
        }
        if (ok) return Graph::from_edges(n, edges);
    }
    throw std::runtime_error("random_regular: rejection budget exceeded");
}

Graph named_graph(const std::string& name) {
    std::string key;
    for (char c : name) key.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (key == "petersen") return petersen();
    if (key == "prism") return prism();
    if (key == "bowtie") return bowtie();
    if (key == "q3") return hypercube3();
    if ((key[0] == 'k' || key[0] == 'c') && key.size() > 1) {
        int t;
        try {
            size_t used = 0;
            t = std::stoi(key.substr(1), &used);
            if (used != key.size() - 1) throw std::invalid_argument("junk");
        } catch (const std::exception&) {
            throw std::invalid_argument("unknown graph name: " + name);
        }
        if (t < 1) throw std::invalid_argument("unknown graph name: " + name);
        return key[0] == 'k' ? complete(t) : cycle(t);
    }
    throw std::invalid_argument("unknown graph name: " + name);
}

} // namespace degpart
