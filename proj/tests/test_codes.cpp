#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "ntc/codes.hpp"
#include "ntc/fixtures.hpp"
#include "ntc/hamming.hpp"

using namespace ntc;

namespace {

// multiplication tables for the Cayley construction
std::vector<std::vector<int>> z6_table() {
    std::vector<std::vector<int>> t(6, std::vector<int>(6));
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) t[a][b] = (a + b) % 6;
    return t;
}

std::vector<std::vector<int>> s3_table() {
    auto elems = symmetric_group(3).elements();
    std::vector<std::vector<int>> t(6, std::vector<int>(6));
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
            Permutation prod = compose(elems[a], elems[b]);
            t[a][b] =
                static_cast<int>(std::lower_bound(elems.begin(), elems.end(), prod) - elems.begin());
        }
    return t;
}

}  // namespace

TEST_CASE("rep code") {
    Code c = rep_code(4, 3);
    CHECK(c.size() == 3);
    CHECK(c.length() == 4);
    CHECK(min_distance(c) == 4);
    CHECK_THROWS_AS(rep_code(1, 3), error);
}

TEST_CASE("frequency permutation arrays") {
    Code c = all_code(2, 3);
    CHECK(c.length() == 6);
    CHECK(c.size() == 90);  // 6!/(2!)^3
    for (const auto& w : c.words()) {
        std::vector<int> counts(3, 0);
        for (int i = 0; i < 6; ++i) ++counts[w[i]];
        CHECK(counts == std::vector<int>{2, 2, 2});
    }
    CHECK(min_distance(c) == 2);
    CHECK(all_code(1, 4).size() == 24);
    CHECK_THROWS_AS(all_code(5, 5, 1000), error);  // bound exceeded
}

TEST_CASE("injective and weight codes") {
    Code inj = injective_code(2, 4);
    CHECK(inj.size() == 12);
    for (const auto& w : inj.words()) CHECK(w[0] != w[1]);
    CHECK_THROWS_AS(injective_code(4, 4), error);

    Code wt = weight_code(5);
    CHECK(wt.size() == 20);  // C(5,2) + C(5,3)
    for (const auto& w : wt.words()) {
        int weight = 0;
        for (int i = 0; i < 5; ++i) weight += w[i];
        CHECK((weight == 2 || weight == 3));
    }
    CHECK(min_distance(wt) == 1);
    CHECK_THROWS_AS(weight_code(4), error);
}

TEST_CASE("product and repetition of a code") {
    Code base = rep_code(2, 3);
    Code prod = prod_code(base, 2);
    CHECK(prod.length() == 4);
    CHECK(prod.size() == 9);
    CHECK(min_distance(prod) == 2);

    Code repl = rep_l_code(base, 3);
    CHECK(repl.length() == 6);
    CHECK(repl.size() == 3);
    CHECK(min_distance(repl) == 6);
    CHECK(repl == rep_code(6, 3));

    // Rep_l words are the constant block words of Prod_l
    Code prod3 = prod_code(base, 3);
    for (const auto& w : repl.words()) CHECK(prod3.contains(w));
}

TEST_CASE("permutation codes") {
    PermGroup c5(5, {Permutation::from_cycles(5, {{0, 1, 2, 3, 4}})});
    Code code5 = perm_code(c5);
    CHECK(code5.size() == 5);
    CHECK(min_distance(code5) == 5);

    Code ca5 = perm_code(alternating_group(5));
    CHECK(ca5.size() == 60);
    CHECK(min_distance(ca5) == 3);
    CHECK(min_distance(ca5) == alternating_group(5).minimal_degree());

    Code cs5 = perm_code(symmetric_group(5));
    CHECK(min_distance(cs5) == 2);
}

TEST_CASE("paired action validation") {
    PairedAction pa = a6_pair();
    CHECK(pa.diagonal_group().order() == 360);
    CHECK_NOTHROW(pa.validate());
    CHECK(actions_inequivalent(pa));

    // pairing an action with itself is valid but equivalent
    PermGroup a5 = alternating_group(5);
    PairedAction same{a5, a5.generators()};
    CHECK_NOTHROW(same.validate());
    CHECK_FALSE(actions_inequivalent(same));

    // breaking the correspondence breaks the isomorphism
    PairedAction bad = a6_pair();
    bad.group2_images[0] = Permutation(6);
    CHECK_THROWS_AS(bad.validate(), error);
}

TEST_CASE("twisted permutation codes") {
    Code c = twisted_code(a6_pair());
    CHECK(c.length() == 12);
    CHECK(c.alphabet() == 6);
    CHECK(c.size() == 360);
    // each half of a codeword is injective
    for (const auto& w : {c.word(0), c.word(100)}) {
        std::vector<char> seen1(6, 0), seen2(6, 0);
        for (int i = 0; i < 6; ++i) {
            seen1[w[i]] = 1;
            seen2[w[6 + i]] = 1;
        }
        CHECK(std::count(seen1.begin(), seen1.end(), 1) == 6);
        CHECK(std::count(seen2.begin(), seen2.end(), 1) == 6);
    }
}

TEST_CASE("cayley codes") {
    Code z6 = cayley_code(z6_table(), {0, 1, 2, 3, 4, 5});
    CHECK(z6.size() == 6);
    CHECK(min_distance(z6) == 6);  // right translation is fixed-point-free

    Code s3 = cayley_code(s3_table(), {0, 1, 2, 3, 4, 5});
    CHECK(s3.size() == 6);
    CHECK(min_distance(s3) == 6);

    // reordering the rows yields an equivalent code of the same parameters
    Code z6r = cayley_code(z6_table(), {5, 4, 3, 2, 1, 0});
    CHECK(z6r.size() == 6);
    CHECK(min_distance(z6r) == 6);

    auto broken = z6_table();
    broken[1][1] = 1;
    CHECK_THROWS_AS(cayley_code(broken, {0, 1, 2, 3, 4, 5}), error);
    // a Latin square with identity that is not associative (a loop, not a group)
    std::vector<std::vector<int>> loop5{{0, 1, 2, 3, 4},
                                        {1, 0, 3, 4, 2},
                                        {2, 3, 4, 0, 1},
                                        {3, 4, 1, 2, 0},
                                        {4, 2, 0, 1, 3}};
    CHECK_THROWS_AS(cayley_code(loop5, {0, 1, 2, 3, 4}), error);
}

TEST_CASE("neighbours through a coordinate set") {
    Code c = rep_code(3, 2);
    auto all = c1_of_J(c, {0, 1, 2});
    CHECK(all.size() == 6);
    CHECK(std::is_sorted(all.begin(), all.end()));
    auto j0 = c1_of_J(c, {0});
    CHECK(j0.size() == 2);
    for (const auto& w : j0) CHECK(distance_to_code(w, c) == 1);
    CHECK_THROWS_AS(c1_of_J(c, {}), error);
    CHECK_THROWS_AS(c1_of_J(c, {5}), error);
}
