#pragma once

#include "ntc/codes.hpp"
#include "ntc/group.hpp"
#include "ntc/wreath.hpp"

namespace ntc {

std::vector<Permutation> symmetric_gens(int n);
std::vector<Permutation> alternating_gens(int n);
PermGroup symmetric_group(int n);
PermGroup alternating_group(int n);

PermGroup psl32();    // GL(3,2) on the 7 nonzero vectors of F_2^3
PermGroup psl2_11();  // on the projective line over F_11, infinity = point 11
PermGroup m11();      // degree 11
PermGroup m12();      // degree 12

PairedAction a6_pair();
PairedAction s6_pair();
PairedAction psl2_11_pair();
PairedAction a7_15_pair();
PairedAction m12_pair();

PairedAction paired_action_by_name(const std::string& name);

/// Full fixture validation: diagonal order, both actions transitive and
/// 2-transitive, inequivalence by a fixed-point-count certificate.
void validate_paired_action_strict(const PairedAction& pa, unsigned long long bound = 1000000);

/// Neighbour transitive group for C(T) on H(q,q): Diag_q(T) together with
/// elements x_t sigma(t) for generators t of a 2-transitive normalizing group.
WreathGroup perm_code_nt_group(const PermGroup& t, const PermGroup& normalizer);

struct Example9 {
    Code code;
    WreathGroup group;
};
Example9 example9();  // the H(10,5) code built from S_5 pairs with even quotient

}  // namespace ntc
