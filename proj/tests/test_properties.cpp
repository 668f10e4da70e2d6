#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "ntc/analyze.hpp"
#include "ntc/codes.hpp"
#include "ntc/fixtures.hpp"
#include "ntc/wreath.hpp"

using namespace ntc;

namespace {

constexpr int kCases = 1200;

std::mt19937 rng(20240823);

int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Permutation random_perm(int n) {
    std::vector<int> images(n);
    std::iota(images.begin(), images.end(), 0);
    std::shuffle(images.begin(), images.end(), rng);
    return Permutation(std::move(images));
}

Vertex random_vertex(int m, int q) {
    std::vector<int> s(m);
    for (int& v : s) v = pick(0, q - 1);
    return Vertex(std::move(s), q);
}

WreathElement random_wreath(int m, int q) {
    std::vector<Permutation> bottom;
    for (int i = 0; i < m; ++i) bottom.push_back(random_perm(q));
    return WreathElement(std::move(bottom), random_perm(m));
}

Code random_code(int m, int q, int size) {
    std::vector<Vertex> words;
    for (int i = 0; i < size; ++i) words.push_back(random_vertex(m, q));
    return Code(m, q, std::move(words));
}

Code random_code_delta2(int m, int q, int size) {
    while (true) {
        Code c = random_code(m, q, size);
        if (c.size() >= 2 && min_distance(c) >= 2) return c;
    }
}

WreathElement bottoms(std::vector<Permutation> b) {
    int m = static_cast<int>(b.size());
    return WreathElement(std::move(b), Permutation(m));
}

WreathElement top_only(int m, int q, const Permutation& top) {
    return WreathElement(std::vector<Permutation>(m, Permutation(q)), top);
}

WreathGroup rep_aut_group(int m, int q) {
    std::vector<WreathElement> gens;
    for (const auto& g : symmetric_gens(q))
        gens.push_back(bottoms(std::vector<Permutation>(m, g)));
    for (const auto& s : symmetric_gens(m)) gens.push_back(top_only(m, q, s));
    return WreathGroup(m, q, std::move(gens));
}

}  // namespace

TEST_CASE("coinciding neighbours fall into the trichotomy") {
    int coincidences = 0;
    for (int it = 0; it < kCases; ++it) {
        int m = pick(2, 5), q = pick(2, 4);
        Vertex alpha = random_vertex(m, q);
        // bias beta towards distance <= 2 so coincidences actually occur
        Vertex beta = alpha;
        for (int moves = pick(0, 2); moves > 0; --moves)
            beta = beta.with_symbol(pick(0, m - 1), pick(0, q - 1));
        int i = pick(0, m - 1), j = pick(0, m - 1);
        int a = (alpha[i] + pick(1, q - 1)) % q;
        int b = (beta[j] + pick(1, q - 1)) % q;
        if (nu(alpha, i, a) != nu(beta, j, b)) continue;
        ++coincidences;
        bool case1 = alpha == beta && i == j && a == b;
        bool case2 = i == j && a == b && distance(alpha, beta) == 1 && alpha[i] != beta[i];
        bool case3 = distance(alpha, beta) == 2 && i != j && alpha[j] == b && beta[i] == a;
        CHECK((case1 || case2 || case3));
    }
    CHECK(coincidences > 50);  // the sampler found enough nontrivial collisions
}

TEST_CASE("automorphisms map neighbours to neighbours") {
    for (int it = 0; it < kCases; ++it) {
        int m = pick(2, 5), q = pick(2, 5);
        WreathElement x = random_wreath(m, q);
        Vertex alpha = random_vertex(m, q);
        int i = pick(0, m - 1);
        int a = (alpha[i] + pick(1, q - 1)) % q;
        auto [lhs, rhs] = neighbour_image_check(x, alpha, i, a);
        CHECK(lhs == rhs);
        CHECK(distance(apply(x, alpha), lhs) == 1);
    }
}

TEST_CASE("distance partitions are equivariant") {
    for (int it = 0; it < kCases; ++it) {
        int m = pick(2, 4), q = pick(2, 3);
        Code c = random_code(m, q, pick(2, 5));
        WreathElement y = random_wreath(m, q);
        DistancePartition before = distance_partition(c);
        DistancePartition after = distance_partition(apply(y, c));
        REQUIRE(before.cells.size() == after.cells.size());
        for (std::size_t k = 0; k < before.cells.size(); ++k)
            CHECK(apply(y, before.cells[k]) == after.cells[k]);
    }
}

TEST_CASE("wreath composition is compatible with the action") {
    for (int it = 0; it < kCases; ++it) {
        int m = pick(2, 5), q = pick(2, 5);
        WreathElement x = random_wreath(m, q), y = random_wreath(m, q), z = random_wreath(m, q);
        Vertex v = random_vertex(m, q);
        CHECK(apply(compose(x, y), v) == apply(y, apply(x, v)));
        CHECK(apply(inverse(x), apply(x, v)) == v);
        CHECK(compose(compose(x, y), z) == compose(x, compose(y, z)));
        CHECK(to_point_perm(compose(x, y)) == compose(to_point_perm(x), to_point_perm(y)));
    }
}

TEST_CASE("restriction to an invariant block is a homomorphism") {
    for (int it = 0; it < kCases; ++it) {
        int q = pick(2, 4);
        int k = pick(1, 3), rest = pick(1, 3);
        int m = k + rest;
        std::vector<int> J(k);
        std::iota(J.begin(), J.end(), 0);
        auto block_element = [&] {
            std::vector<Permutation> bottom;
            for (int i = 0; i < m; ++i) bottom.push_back(random_perm(q));
            Permutation top = stack(random_perm(k), random_perm(rest));
            return WreathElement(std::move(bottom), std::move(top));
        };
        WreathElement x = block_element(), y = block_element();
        CHECK(chi_restrict(compose(x, y), J) == compose(chi_restrict(x, J), chi_restrict(y, J)));
        // the restriction also commutes with the action on vertices
        Vertex v = random_vertex(m, q);
        CHECK(project(apply(x, v), J) == apply(chi_restrict(x, J), project(v, J)));
    }
}

TEST_CASE("projections of the distance partition do not move outward") {
    for (int it = 0; it < kCases; ++it) {
        int m = pick(3, 4), q = pick(2, 3);
        Code c = random_code_delta2(m, q, pick(2, 4));
        int k = pick(1, m - 1);
        std::vector<int> coords(m);
        std::iota(coords.begin(), coords.end(), 0);
        std::shuffle(coords.begin(), coords.end(), rng);
        std::vector<int> J(coords.begin(), coords.begin() + k);
        std::sort(J.begin(), J.end());

        Code pj = project(c, J);
        DistancePartition dp = distance_partition(c);
        for (std::size_t i = 0; i < dp.cells.size(); ++i)
            for (const auto& v : dp.cells[i].words())
                CHECK(distance_to_code(project(v, J), pj) <= static_cast<int>(i));

        // every projected neighbour is covered by a projected neighbour through J
        if (!pj.is_complete()) {
            VertexSet through_j;
            for (const auto& v : c1_of_J(c, J)) through_j.insert(project(v, J));
            Code n1 = neighbour_set(pj);
            for (const auto& w : n1.words()) CHECK(through_j.count(w) == 1);
        }
    }
}

TEST_CASE("neighbour transitive examples are 1-regular") {
    struct Example {
        Code code;
        WreathGroup group;
    };
    std::vector<Example> examples;
    examples.push_back({rep_code(3, 3), rep_aut_group(3, 3)});
    examples.push_back({rep_code(4, 2), rep_aut_group(4, 2)});
    examples.push_back(
        {perm_code(alternating_group(5)), perm_code_nt_group(alternating_group(5), symmetric_group(5))});
    for (const auto& ex : examples) {
        CHECK(check_neighbour_transitive(ex.code, ex.group).verdict);
        CHECK(check_s_regular(ex.code, 1).verdict);
        if (min_distance(ex.code) >= 3) CHECK(check_prop27(ex.code, ex.group).verdict);
    }
}

TEST_CASE("block projections of a neighbour transitive product code") {
    // Rep(4,2) under a group preserving the partition {0,1},{2,3}
    std::vector<WreathElement> gens;
    for (const auto& g : symmetric_gens(2))
        gens.push_back(bottoms(std::vector<Permutation>(4, g)));
    for (const auto& cyc :
         {std::vector<std::vector<int>>{{0, 1}}, {{2, 3}}, {{0, 2}, {1, 3}}})
        gens.push_back(top_only(4, 2, Permutation::from_cycles(4, cyc)));
    WreathGroup x(4, 2, gens);
    Code c = rep_code(4, 2);
    CHECK(check_neighbour_transitive(c, x).verdict);

    Report r = check_projection_structure(c, x, {{0, 1}, {2, 3}});
    CHECK(r.verdict);
    // equal block distances, both at least 2
    int d0 = min_distance(project(c, {0, 1}));
    int d1 = min_distance(project(c, {2, 3}));
    CHECK(d0 == d1);
    CHECK(d0 >= 2);
}
