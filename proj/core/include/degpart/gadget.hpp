#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "degpart/graph.hpp"
#include "degpart/partition.hpp"
#include "degpart/rsat.hpp"

namespace degpart {

enum class GadgetTarget { G, H };

/// Vertex ids of one variable gadget S(x, k): four a/a'/a* triples, the
/// hat and tilde triples, and six cliques on k - 2 vertices each
/// (clique[0..3] attach to the a-triples, clique[4] to the hats,
/// clique[5] to the tildes).
struct VariableGadget {
    std::array<int, 4> a{};
    std::array<int, 4> a_prime{};
    std::array<int, 4> a_star{};
    int hat = -1, hat_prime = -1, hat_star = -1;
    int til = -1, til_prime = -1, til_star = -1;
    std::array<std::vector<int>, 6> clique;
};

/// Labels tying instance vertices to gadget roles, plus the occurrence
/// table mapping each clause literal to its slot 1..4 (first/second
/// positive occurrence -> 1/2, negative -> 3/4).
struct GadgetMap {
    int k = 0;
    GadgetTarget target = GadgetTarget::G;
    int num_vars = 0;
    int total_vertices = 0;
    std::vector<VariableGadget> var_gadget;                    // by variable - 1
    std::vector<std::vector<std::pair<int, int>>> clause_slots; // per clause: (var-1, slot-1)

    /// Special vertices of clause c: the a(x, f(l)) of its literals.
    std::vector<int> specials(int clause) const;
};

/// Builds the instance graph (target G or H) with one gadget per variable,
/// 2-clause edges a-a and a'-a', the 4-clause special cycle, and (in H
/// only) the two a'-a' chords. Requires k >= 5.
std::pair<Graph, GadgetMap> build_instance(const RSatInstance& inst, int k,
                                           GadgetTarget target);

/// Standalone single-variable gadget S(x, k).
std::pair<Graph, GadgetMap> build_variable_gadget(int k);

struct CaseParams {
    int p = 0;
    int q = 0;
    GadgetTarget target = GadgetTarget::G;
    SatVariant variant = SatVariant::ALL;
};

/// Parameters of the three reduction cases: 1 -> (1, k-4) on G under ALL
/// (k >= 6); 2 -> (0, k-3) on H under EXACT (k >= 5); 3 -> the balanced
/// split of k-3 on H under NAE, both parts >= 2 (k >= 7).
CaseParams case_params(int case_id, int k);

/// Extends a variant-satisfying assignment to a (p, q)-partition of the
/// case's instance graph, per-gadget: the truth state fixes the colors of
/// all triples and of a fixed share of each clique.
Partition extend_assignment(const RSatInstance& inst, const Assignment& assignment,
                            int k, int case_id);

/// Reads the truth value of each variable off the color of a(x, 1). Throws
/// if some gadget violates the forced pattern ({a1,a2} monochromatic and
/// opposite to {a3,a4}).
Assignment decode_partition(const GadgetMap& map, const Partition& partition,
                            int case_id);

/// Search order placing clique vertices first (then degree descending);
/// used to steer exhaustive partition search on gadget instances.
std::vector<int> gadget_search_order(const Graph& g, const GadgetMap& map);

/// Map file: "p gadgetmap <k> <G|H>" header, then "m <vertex> <label>"
/// lines with labels a:x3:2, ap:x3:2, as:x3:2, hat:x3, hatp:x3, hats:x3,
/// til:x3, tilp:x3, tils:x3, K:x3:<i>:<j> (i in 1..4, hat, til).
std::string serialize_gadget_map(const GadgetMap& m);
GadgetMap parse_gadget_map(std::istream& in);
GadgetMap parse_gadget_map_text(const std::string& text);
GadgetMap parse_gadget_map_file(const std::string& path);

} // namespace degpart
