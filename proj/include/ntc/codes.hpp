#pragma once

#include "ntc/group.hpp"
#include "ntc/hamming.hpp"
#include "ntc/wreath.hpp"

namespace ntc {

Code rep_code(int m, int q);

/// All words of length p*q in which every symbol appears exactly p times.
Code all_code(int p, int q, unsigned long long bound = 1000000);

Code injective_code(int m, int q);
Code weight_code(int m);

Code prod_code(const Code& c, int ell, unsigned long long bound = 1000000);
Code rep_l_code(const Code& c, int ell);

/// C(T): one word per element g of T, with j-th symbol g(j).
Code perm_code(const PermGroup& t, unsigned long long bound = 1000000);

/// Two degree-q actions of the same group, given as a generator
/// correspondence. Valid iff the stacked diagonal group on 2q points has the
/// same order as group1 (the correspondence is an isomorphism of actions'
/// abstract group).
struct PairedAction {
    PermGroup group1;
    std::vector<Permutation> group2_images;

    PermGroup diagonal_group() const;  // degree 2q
    void validate(unsigned long long bound = 1000000) const;
};

/// True iff some paired element (g, g^tau) moves different numbers of points;
/// a certificate that the two actions are not related by any relabeling.
bool actions_inequivalent(const PairedAction& pa, unsigned long long bound = 1000000);

/// C(T, T^tau) in H(2q, q): words (alpha(t), alpha(t^tau)).
Code twisted_code(const PairedAction& pa, unsigned long long bound = 1000000);

/// C_o(G) from a multiplication table and an ordering of the elements;
/// the table is verified to be a group.
Code cayley_code(const std::vector<std::vector<int>>& table, const std::vector<int>& ordering);

/// Neighbours of C whose changed coordinate lies in J.
std::vector<Vertex> c1_of_J(const Code& c, const std::vector<int>& J);

}  // namespace ntc
