#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "ntc/codes.hpp"
#include "ntc/group.hpp"
#include "ntc/hamming.hpp"
#include "ntc/wreath.hpp"

namespace ntc {

struct Report {
    std::string property;
    bool verdict = false;
    nlohmann::json witnesses = nlohmann::json::object();
    nlohmann::json counterexample;
    nlohmann::json stats = nlohmann::json::object();

    nlohmann::json to_json() const;
};

Report check_neighbour_transitive(const Code& c, const WreathGroup& x,
                                  unsigned long long orbit_bound = 10000000);
Report check_completely_transitive(const Code& c, const WreathGroup& x,
                                   unsigned long long visit_bound = 100000000,
                                   unsigned long long orbit_bound = 10000000);
Report check_s_regular(const Code& c, int s, unsigned long long visit_bound = 100000000);
Report check_completely_regular(const Code& c, unsigned long long visit_bound = 100000000);

/// Bottom element y with C^y contained in Rep(m,q); exists iff delta = m.
std::optional<WreathElement> rep_equivalence_witness(const Code& c);

/// Stabilizer of a vertex, by Schreier generators over the vertex orbit.
WreathGroup vertex_stabilizer(const WreathGroup& x, const Vertex& v,
                              unsigned long long orbit_bound = 10000000);

/// Wreath element from a permutation of the m*q disjoint alphabet copies that
/// fixes every copy setwise (a base-group element).
WreathElement wreath_from_base_perm(const Permutation& p, int m, int q);

/// Socle of a base subgroup (trivial tops), via its degree-m*q action.
WreathGroup base_socle(const WreathGroup& k, unsigned long long bound = 1000000);

/// Supports of the minimal normal subgroups of socK; verifies they partition
/// the coordinate set and that each factor is a full diagonal subgroup of a
/// nonabelian simple group on its support.
struct SupportPartition {
    std::vector<std::vector<int>> blocks;         // ascending within and across
    std::vector<std::vector<WreathElement>> factor_gens;  // generators of D_i
};
SupportPartition support_partition(const WreathGroup& sock, unsigned long long bound = 1000000);

enum class Form { Form1, Form2 };

struct FormInfo {
    Form form;
    // Per block: one or two consistency classes of coordinates (ascending).
    std::vector<std::vector<std::vector<int>>> classes;
    // Per block, per coordinate: c with conj(phi_leader(d), c) = phi_j(d),
    // leader = first coordinate of the coordinate's class.
    std::vector<std::unordered_map<int, Permutation>> conjugators;
};
FormInfo classify_form(const SupportPartition& sp, int q);

enum class Shape { ProdRep, ProdRepPerm, ProdRepTwisted };

struct Decomposition {
    WreathGroup k;
    WreathGroup sock;
    std::vector<std::vector<int>> supports;
    Form form = Form::Form1;
    std::vector<std::vector<std::vector<int>>> sub_blocks;  // Form2 halves per block
    Code delta_orbit;
    std::vector<WreathElement> translates;  // x with C = disjoint union of Delta^x
    Shape shape = Shape::ProdRep;
    std::optional<PermGroup> t_group;  // T of C(T) / C(T,T^tau); ProdRepPerm+Twisted
    std::optional<PairedAction> pairing;  // ProdRepTwisted
    int p = 0;  // repetition multiplicity; 0 for ProdRep
    std::vector<WreathElement> conjugators_applied;
};

Decomposition decompose(const Code& c, const WreathGroup& x,
                        unsigned long long orbit_bound = 10000000,
                        unsigned long long elem_bound = 1000000);

Report check_projection_structure(const Code& c, const WreathGroup& x,
                                  const std::vector<std::vector<int>>& blocks);
Report check_prop27(const Code& c, const WreathGroup& x,
                    unsigned long long orbit_bound = 10000000);

}  // namespace ntc
