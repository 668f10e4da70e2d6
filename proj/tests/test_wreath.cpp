#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "ntc/codes.hpp"
#include "ntc/fixtures.hpp"
#include "ntc/wreath.hpp"

using namespace ntc;

namespace {

WreathElement bottoms(std::vector<Permutation> b) {
    int m = static_cast<int>(b.size());
    return WreathElement(std::move(b), Permutation(m));
}

WreathElement top_only(int m, int q, const Permutation& top) {
    return WreathElement(std::vector<Permutation>(m, Permutation(q)), top);
}

// Rep(m,q) is preserved by Diag_m(S_q) together with the full top group.
WreathGroup rep_aut_group(int m, int q) {
    std::vector<WreathElement> gens;
    for (const auto& g : symmetric_gens(q))
        gens.push_back(bottoms(std::vector<Permutation>(m, g)));
    for (const auto& s : symmetric_gens(m)) gens.push_back(top_only(m, q, s));
    return WreathGroup(m, q, std::move(gens));
}

}  // namespace

TEST_CASE("wreath element action") {
    // bottom acts per coordinate, then the top moves coordinates
    Permutation swap01 = Permutation::from_cycles(3, {{0, 1}});
    WreathElement x({swap01, Permutation(3), Permutation(3)}, Permutation::from_cycles(3, {{0, 2}}));
    Vertex v({0, 1, 2}, 3);
    Vertex image = apply(x, v);
    CHECK(image == Vertex({2, 1, 1}, 3));

    CHECK(apply(WreathElement::identity(3, 3), v) == v);
    CHECK(x != WreathElement::identity(3, 3));
    CHECK_THROWS_AS(apply(x, Vertex({0, 0}, 3)), error);
}

TEST_CASE("compose and inverse are compatible with the action") {
    WreathElement x({Permutation::from_cycles(2, {{0, 1}}), Permutation(2), Permutation(2)},
                    Permutation::from_cycles(3, {{0, 1, 2}}));
    WreathElement y({Permutation(2), Permutation::from_cycles(2, {{0, 1}}), Permutation(2)},
                    Permutation::from_cycles(3, {{1, 2}}));
    for (int bits = 0; bits < 8; ++bits) {
        Vertex v({bits & 1, (bits >> 1) & 1, (bits >> 2) & 1}, 2);
        CHECK(apply(compose(x, y), v) == apply(y, apply(x, v)));
        CHECK(apply(inverse(x), apply(x, v)) == v);
    }
    CHECK(compose(x, inverse(x)).is_identity());
    CHECK(compose(inverse(x), x).is_identity());
}

TEST_CASE("neighbour image identity") {
    WreathElement x({Permutation::from_cycles(3, {{0, 1, 2}}), Permutation::from_cycles(3, {{1, 2}})},
                    Permutation::from_cycles(2, {{0, 1}}));
    Vertex a({0, 2}, 3);
    auto [lhs, rhs] = neighbour_image_check(x, a, 0, 1);
    CHECK(lhs == rhs);
}

TEST_CASE("mu, phi, chi") {
    Permutation b0 = Permutation::from_cycles(2, {{0, 1}});
    WreathElement x({b0, Permutation(2), Permutation(2), Permutation(2)},
                    Permutation::from_cycles(4, {{2, 3}}));
    CHECK(mu(x) == Permutation::from_cycles(4, {{2, 3}}));
    CHECK(phi_i(x, 0) == b0);
    CHECK(phi_i(x, 1).is_identity());
    CHECK_THROWS_AS(phi_i(x, 2), error);  // coordinate is moved

    WreathElement r = chi_restrict(x, {2, 3});
    CHECK(r.m() == 2);
    CHECK(r.top() == Permutation::from_cycles(2, {{0, 1}}));
    CHECK_THROWS_AS(chi_restrict(x, {0, 2}), error);  // not setwise invariant
}

TEST_CASE("point permutation is a faithful homomorphism") {
    WreathElement x({Permutation::from_cycles(2, {{0, 1}}), Permutation(2)},
                    Permutation::from_cycles(2, {{0, 1}}));
    WreathElement y({Permutation(2), Permutation::from_cycles(2, {{0, 1}})}, Permutation(2));
    CHECK(to_point_perm(compose(x, y)) == compose(to_point_perm(x), to_point_perm(y)));
    CHECK(to_point_perm(WreathElement::identity(2, 2)).is_identity());
    CHECK(to_point_perm(x) != to_point_perm(y));
}

TEST_CASE("wreath group order") {
    // S_2 wr S_2 in H(2,2) has order 8
    WreathGroup w(2, 2,
                  {bottoms({Permutation::from_cycles(2, {{0, 1}}), Permutation(2)}),
                   top_only(2, 2, Permutation::from_cycles(2, {{0, 1}}))});
    CHECK(w.order() == 8);
    CHECK(w.top_group().order() == 2);

    WreathGroup diag = diag_embed(symmetric_group(3), 4);
    CHECK(diag.order() == 6);
    CHECK(diag.top_group().is_trivial());
}

TEST_CASE("vertex orbits") {
    WreathGroup x = rep_aut_group(3, 2);
    Code orb = orbit_of_vertex(x, Vertex({0, 0, 0}, 2));
    CHECK(orb == rep_code(3, 2));
    CHECK(is_orbit(x, rep_code(3, 2)));
    CHECK_FALSE(is_orbit(x, Code(3, 2, {Vertex({0, 0, 0}, 2)})));
    Code n = neighbour_set(rep_code(3, 2));
    CHECK(is_orbit(x, n));
}

TEST_CASE("base kernel") {
    WreathGroup x = rep_aut_group(3, 3);
    WreathGroup k = base_kernel(x);
    for (const auto& g : k.generators()) CHECK(g.top().is_identity());
    // kernel of Diag_3(S_3) x S_3 (top) is the diagonal S_3
    CHECK(k.order() == 6);

    // kernel of a pure top group is trivial
    WreathGroup tops(3, 2, {top_only(3, 2, Permutation::from_cycles(3, {{0, 1, 2}})),
                            top_only(3, 2, Permutation::from_cycles(3, {{0, 1}}))});
    CHECK(base_kernel(tops).order() == 1);

    // independent product group: kernel is everything with trivial top
    std::vector<WreathElement> gens;
    for (const auto& g : symmetric_gens(3)) {
        gens.push_back(WreathElement({g, Permutation(3)}, Permutation(2)));
        gens.push_back(WreathElement({Permutation(3), g}, Permutation(2)));
    }
    gens.push_back(top_only(2, 3, Permutation::from_cycles(2, {{0, 1}})));
    WreathGroup prod(2, 3, std::move(gens));
    CHECK(prod.order() == 72);
    CHECK(base_kernel(prod).order() == 36);
}

TEST_CASE("entry and block stabilizers") {
    WreathGroup x = rep_aut_group(4, 2);
    WreathGroup e0 = entry_stabilizer(x, 0);
    for (const auto& g : e0.generators()) CHECK(g.top()(0) == 0);
    CHECK(e0.order() == 12);  // Diag(S_2) x S_3 on the other coordinates

    WreathGroup b = block_stabilizer(x, {0, 1});
    for (const auto& g : b.generators()) {
        std::set<int> image{g.top()(0), g.top()(1)};
        CHECK(image == std::set<int>{0, 1});
    }
    CHECK(b.order() == 8);  // Diag(S_2) x S_2 x S_2

    WreathGroup restricted = chi_restrict(b, {0, 1});
    CHECK(restricted.m() == 2);
    CHECK(restricted.order() == 4);
}

TEST_CASE("alphabet group") {
    WreathGroup x = rep_aut_group(3, 4);
    PermGroup a = alphabet_group(x, 1);
    CHECK(a.order() == 24);  // induced S_4 on the alphabet of coordinate 1
}

TEST_CASE("generator reduction") {
    WreathGroup x = rep_aut_group(3, 3);
    auto gens = x.generators();
    gens.push_back(compose(gens[0], gens[1]));
    gens.push_back(WreathElement::identity(3, 3));
    auto reduced = reduce_wreath_generators(3, 3, gens);
    CHECK(WreathGroup(3, 3, reduced).order() == x.order());
    CHECK(reduced.size() <= gens.size() - 2);
}
