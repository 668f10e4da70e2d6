#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "ntc/codes.hpp"
#include "ntc/hamming.hpp"

using namespace ntc;

namespace {

Vertex v(std::vector<int> symbols, int q) { return Vertex(std::move(symbols), q); }

// Independent covering radius oracle: scan the whole vertex set.
int brute_covering_radius(const Code& c) {
    int m = c.length(), q = c.alphabet();
    std::vector<int> cur(m, 0);
    int worst = 0;
    while (true) {
        worst = std::max(worst, distance_to_code(Vertex(cur, q), c));
        int i = 0;
        while (i < m && ++cur[i] == q) cur[i++] = 0;
        if (i == m) break;
    }
    return worst;
}

}  // namespace

TEST_CASE("vertex and distance") {
    Vertex a = v({0, 1, 2}, 3), b = v({0, 2, 2}, 3);
    CHECK(distance(a, a) == 0);
    CHECK(distance(a, b) == 1);
    CHECK(distance(a, v({1, 2, 0}, 3)) == 3);
    CHECK(nu(a, 1, 2) == b);
    CHECK(a.with_symbol(1, 2) == b);
    CHECK_THROWS_AS(v({0, 3}, 3), error);
    CHECK_THROWS_AS(distance(a, v({0, 1}, 3)), error);
}

TEST_CASE("sphere sizes are binomial sums") {
    Vertex a = v({0, 0, 0, 0}, 3);
    CHECK(sphere(a, 0).size() == 1);
    CHECK(sphere(a, 1).size() == 4 * 2);       // C(4,1)*2
    CHECK(sphere(a, 2).size() == 6 * 4);       // C(4,2)*2^2
    auto s1 = sphere(a, 1);
    for (const auto& x : s1) CHECK(distance(a, x) == 1);
    CHECK(std::is_sorted(s1.begin(), s1.end()));
}

TEST_CASE("code canonicalization") {
    Code c(2, 3, {v({2, 2}, 3), v({0, 0}, 3), v({2, 2}, 3), v({1, 1}, 3)});
    CHECK(c.size() == 3);
    CHECK(c.word(0) == v({0, 0}, 3));
    CHECK(c.word(2) == v({2, 2}, 3));
    CHECK(c.contains(v({1, 1}, 3)));
    CHECK_FALSE(c.contains(v({0, 1}, 3)));
    CHECK(c.space_size() == 9);
    CHECK_FALSE(c.is_complete());
    CHECK_THROWS_AS(Code(2, 3, {v({0, 0, 0}, 3)}), error);
}

TEST_CASE("min distance") {
    CHECK(min_distance(rep_code(3, 2)) == 3);
    CHECK(min_distance(rep_code(5, 3)) == 5);
    CHECK(min_distance(all_code(2, 3)) == 2);
    CHECK(min_distance(injective_code(3, 5)) == 1);
    Code singleton(3, 2, {v({0, 1, 0}, 2)});
    CHECK_THROWS_AS(min_distance(singleton), error);

    // threaded scan agrees with serial
    Code big = all_code(2, 4);
    CHECK(min_distance(big, 4) == min_distance(big));
}

TEST_CASE("distance_to_code and neighbour set") {
    Code c = rep_code(3, 2);
    CHECK(distance_to_code(v({0, 0, 0}, 2), c) == 0);
    CHECK(distance_to_code(v({0, 0, 1}, 2), c) == 1);

    Code n = neighbour_set(c);
    CHECK(n.size() == 6);
    for (const auto& w : n.words()) CHECK(distance_to_code(w, c) == 1);

    // the whole space has no neighbours
    Code full(1, 2, {v({0}, 2), v({1}, 2)});
    CHECK_THROWS_AS(neighbour_set(full), error);
}

TEST_CASE("distance partition") {
    Code c = rep_code(4, 2);
    auto dp = distance_partition(c);
    CHECK(dp.rho() == 2);
    CHECK(dp.cells[0] == c);
    std::size_t total = 0;
    for (const auto& cell : dp.cells) total += cell.size();
    CHECK(total == c.space_size());
    for (std::size_t i = 0; i < dp.cells.size(); ++i)
        for (const auto& w : dp.cells[i].words())
            CHECK(distance_to_code(w, c) == static_cast<int>(i));
    CHECK_THROWS_AS(distance_partition(c, 5), error);
}

TEST_CASE("covering radius matches brute force") {
    for (const Code& c : {rep_code(3, 2), rep_code(3, 3), all_code(2, 3), weight_code(3)})
        CHECK(covering_radius(c) == brute_covering_radius(c));
    CHECK(covering_radius(rep_code(4, 2)) == 2);
}

TEST_CASE("projection") {
    Code c(3, 2, {v({0, 1, 0}, 2), v({1, 1, 0}, 2)});
    Code p = project(c, {1, 2});
    CHECK(p.length() == 2);
    CHECK(p.size() == 1);
    CHECK(p.word(0) == v({1, 0}, 2));
    CHECK(project(v({0, 1, 0}, 2), {2, 0}) == v({0, 0}, 2));
    CHECK_THROWS_AS(project(c, {3}), error);
    CHECK_THROWS_AS(project(c, std::vector<int>{}), error);
}
