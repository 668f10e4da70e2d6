#pragma once

#include <vector>

#include "ntc/group.hpp"
#include "ntc/hamming.hpp"

namespace ntc {

/// Element h·sigma of Aut(H(m,q)) = S_q wr S_m: m bottom permutations of
/// degree q plus a top permutation of degree m. h acts first, then sigma.
class WreathElement {
public:
    WreathElement() = default;
    WreathElement(std::vector<Permutation> bottom, Permutation top);
    static WreathElement identity(int m, int q);

    int m() const { return top_.degree(); }
    int q() const { return bottom_.empty() ? 0 : bottom_[0].degree(); }
    const std::vector<Permutation>& bottom() const { return bottom_; }
    const Permutation& top() const { return top_; }

    bool is_identity() const;

    bool operator==(const WreathElement& o) const {
        return bottom_ == o.bottom_ && top_ == o.top_;
    }
    bool operator!=(const WreathElement& o) const { return !(*this == o); }

private:
    std::vector<Permutation> bottom_;
    Permutation top_;
};

struct WreathElementHash {
    std::size_t operator()(const WreathElement& x) const {
        std::size_t h = 1469598103934665603ull;
        auto mix = [&](int v) {
            h ^= static_cast<std::size_t>(v);
            h *= 1099511628211ull;
        };
        for (const auto& b : x.bottom())
            for (int v : b.images()) mix(v);
        for (int v : x.top().images()) mix(v);
        return h;
    }
};

Vertex apply(const WreathElement& x, const Vertex& v);
Code apply(const WreathElement& x, const Code& c);
WreathElement compose(const WreathElement& x, const WreathElement& y);
WreathElement inverse(const WreathElement& x);

/// Both sides of the neighbour-image identity
/// apply(x, nu(a,i,s)) = nu(apply(x,a), i^sigma, s^{h_i}); throws if unequal.
std::pair<Vertex, Vertex> neighbour_image_check(const WreathElement& x, const Vertex& a, int i,
                                                int s);

Permutation mu(const WreathElement& x);
Permutation phi_i(const WreathElement& x, int i);  // requires top(i) == i

/// Restriction of x to the coordinates J (taken in ascending order);
/// requires the top component to fix J setwise.
WreathElement chi_restrict(const WreathElement& x, const std::vector<int>& J);

/// Faithful permutation image on m*q points: (i,a) -> (top(i), bottom_i(a)),
/// point numbering i*q + a.
Permutation to_point_perm(const WreathElement& x);

class WreathGroup {
public:
    WreathGroup(int m, int q, std::vector<WreathElement> generators);

    int m() const { return m_; }
    int q() const { return q_; }
    const std::vector<WreathElement>& generators() const { return gens_; }

    /// The faithful degree-m*q permutation image; backs order and membership
    /// for elements known to lie in the group generated by base-only data.
    const PermGroup& point_group() const;
    unsigned long long order() const { return point_group().order(); }

    PermGroup top_group() const;

private:
    int m_, q_;
    std::vector<WreathElement> gens_;
    mutable std::shared_ptr<const PermGroup> point_group_;
};

WreathGroup diag_embed(const PermGroup& t, int m);

Code orbit_of_vertex(const WreathGroup& x, const Vertex& v, unsigned long long bound = 10000000);
bool is_orbit(const WreathGroup& x, const Code& s, unsigned long long bound = 10000000);

/// Kernel of the top action, K = X ∩ B: stabilizer chain over the points of M
/// carrying wreath elements; the residue after stabilizing all of M.
WreathGroup base_kernel(const WreathGroup& x, unsigned long long top_bound = 1000000);

WreathGroup entry_stabilizer(const WreathGroup& x, int i);
WreathGroup block_stabilizer(const WreathGroup& x, const std::vector<int>& J,
                             unsigned long long top_bound = 1000000);

/// chi applied to generators of a setwise stabilizer of J.
WreathGroup chi_restrict(const WreathGroup& x, const std::vector<int>& J);

PermGroup alphabet_group(const WreathGroup& x, int i);

/// Drop wreath generators whose point image does not enlarge the group.
std::vector<WreathElement> reduce_wreath_generators(int m, int q,
                                                    const std::vector<WreathElement>& gens);

}  // namespace ntc
