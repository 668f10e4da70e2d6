#include "ntc/fixtures.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <random>
#include <set>

namespace ntc {

std::vector<Permutation> symmetric_gens(int n) {
    if (n < 2) return {};
    std::vector<Permutation> gens{Permutation::from_cycles(n, {{0, 1}})};
    if (n > 2) {
        std::vector<int> cycle(n);
        for (int i = 0; i < n; ++i) cycle[i] = i;
        gens.push_back(Permutation::from_cycles(n, {cycle}));
    }
    return gens;
}

std::vector<Permutation> alternating_gens(int n) {
    if (n < 3) return {};
    std::vector<Permutation> gens{Permutation::from_cycles(n, {{0, 1, 2}})};
    if (n > 3) {
        std::vector<int> cycle;
        for (int i = n % 2 == 0 ? 1 : 0; i < n; ++i) cycle.push_back(i);
        gens.push_back(Permutation::from_cycles(n, {cycle}));
    }
    return gens;
}

PermGroup symmetric_group(int n) { return PermGroup(n, symmetric_gens(n)); }
PermGroup alternating_group(int n) { return PermGroup(n, alternating_gens(n)); }

namespace {

// action of a 3x3 matrix over F_2 (rows as bitmasks) on the 7 nonzero vectors
Permutation gl32_perm(const std::array<int, 3>& rows) {
    std::vector<int> images(7);
    for (int v = 1; v <= 7; ++v) {
        int w = 0;
        for (int r = 0; r < 3; ++r)
            if (__builtin_popcount(rows[r] & v) % 2) w |= 1 << r;
        images[v - 1] = w - 1;
    }
    return Permutation(std::move(images));
}

int mod11(long long v) { return static_cast<int>(((v % 11) + 11) % 11); }

int inv11(int v) {
    for (int w = 1; w < 11; ++w)
        if (v * w % 11 == 1) return w;
    throw error(errc::invalid_argument, "no inverse mod 11");
}

Permutation moebius(std::function<int(int)> on_field, int inf_image, int zero_preimage_unused) {
    (void)zero_preimage_unused;
    std::vector<int> images(12);
    for (int z = 0; z < 11; ++z) images[z] = on_field(z);
    images[11] = inf_image;
    return Permutation(std::move(images));
}

Permutation random_element(const StabilizerChain& chain, std::mt19937& rng) {
    Permutation g(chain.degree());
    for (const auto& level : chain.levels()) {
        std::uniform_int_distribution<std::size_t> pick(0, level.transversal.size() - 1);
        g = compose(g, level.transversal[pick(rng)]);
    }
    return g;
}

bool subgroups_conjugate(const PermGroup& g, const PermGroup& h1, const PermGroup& h2,
                         unsigned long long bound) {
    if (h1.order() != h2.order()) return false;
    for (const auto& e : g.elements(bound)) {
        bool all_in = true;
        for (const auto& gen : h1.generators())
            if (!h2.contains(conjugate(gen, e))) {
                all_in = false;
                break;
            }
        if (all_in) return true;
    }
    return false;
}

/// The 6 one-factorizations of K_6 in canonical form, plus the edge list.
struct FactorizationData {
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<std::vector<int>>> facts;  // each: sorted matchings of edge ids
};

FactorizationData one_factorizations() {
    FactorizationData fd;
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j) fd.edges.emplace_back(i, j);
    int e = static_cast<int>(fd.edges.size());
    std::vector<int> color(e, -1);
    std::vector<std::vector<int>> classes(5);
    std::set<std::vector<std::vector<int>>> found;
    std::function<void(int, int)> rec = [&](int idx, int used) {
        if (idx == e) {
            std::vector<std::vector<int>> fact = classes;
            for (auto& m : fact) std::sort(m.begin(), m.end());
            std::sort(fact.begin(), fact.end());
            found.insert(std::move(fact));
            return;
        }
        auto [a, b] = fd.edges[idx];
        int limit = std::min(used + 1, 5);
        for (int col = 0; col < limit; ++col) {
            bool ok = classes[col].size() < 3;
            for (int ei : classes[col]) {
                auto [x, y] = fd.edges[ei];
                if (x == a || x == b || y == a || y == b) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            classes[col].push_back(idx);
            rec(idx + 1, std::max(used, col + 1));
            classes[col].pop_back();
        }
    };
    rec(0, 0);
    fd.facts.assign(found.begin(), found.end());
    if (fd.facts.size() != 6)
        throw error(errc::verification_failed, "expected 6 one-factorizations of K_6");
    return fd;
}

/// Permutation of the 6 one-factorizations induced by a vertex relabeling.
Permutation factorization_action(const FactorizationData& fd, const Permutation& s) {
    std::map<std::pair<int, int>, int> edge_index;
    for (std::size_t i = 0; i < fd.edges.size(); ++i) edge_index[fd.edges[i]] = static_cast<int>(i);
    std::map<std::vector<std::vector<int>>, int> fact_index;
    for (std::size_t i = 0; i < fd.facts.size(); ++i) fact_index[fd.facts[i]] = static_cast<int>(i);
    std::vector<int> images(fd.facts.size());
    for (std::size_t i = 0; i < fd.facts.size(); ++i) {
        std::vector<std::vector<int>> img;
        for (const auto& matching : fd.facts[i]) {
            std::vector<int> mm;
            for (int ei : matching) {
                auto [a, b] = fd.edges[ei];
                int x = s(a), y = s(b);
                if (x > y) std::swap(x, y);
                mm.push_back(edge_index.at({x, y}));
            }
            std::sort(mm.begin(), mm.end());
            img.push_back(std::move(mm));
        }
        std::sort(img.begin(), img.end());
        auto it = fact_index.find(img);
        if (it == fact_index.end())
            throw error(errc::verification_failed, "relabeling left the factorization set");
        images[i] = it->second;
    }
    return Permutation(std::move(images));
}

PairedAction k6_pair(const std::vector<Permutation>& gens) {
    FactorizationData fd = one_factorizations();
    std::vector<Permutation> images;
    for (const auto& g : gens) images.push_back(factorization_action(fd, g));

    // Relabel the second action so that the generator correspondence is an
    // involution; then swapping the two actions is realized by an element of
    // the ambient wreath product, which twisted-code groups rely on.
    PermGroup source(6, gens);
    for (const auto& c : symmetric_group(6).elements()) {
        std::vector<Permutation> relabeled;
        relabeled.reserve(images.size());
        for (const auto& im : images) relabeled.push_back(conjugate(im, c));
        GroupHom hom(source, relabeled, 6);
        bool involutive = true;
        for (std::size_t i = 0; i < gens.size() && involutive; ++i)
            involutive = hom.map_element(relabeled[i]) == gens[i];
        if (involutive) return PairedAction{std::move(source), std::move(relabeled)};
    }
    throw error(errc::verification_failed, "k6_pair: no involutive pairing found");
}

}  // namespace

PermGroup psl32() {
    return PermGroup(7, {gl32_perm({0b010, 0b100, 0b001}), gl32_perm({0b011, 0b010, 0b100})});
}

PermGroup psl2_11() {
    Permutation shift = moebius([](int z) { return mod11(z + 1); }, 11, 0);
    std::vector<int> neg_inv(12);
    for (int z = 1; z < 11; ++z) neg_inv[z] = mod11(-inv11(z));
    neg_inv[0] = 11;
    neg_inv[11] = 0;
    return PermGroup(12, {shift, Permutation(std::move(neg_inv))});
}

PermGroup m11() {
    return PermGroup(11, {Permutation::from_cycles(11, {{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10}}),
                          Permutation::from_cycles(11, {{2, 6, 10, 7}, {3, 9, 4, 5}})});
}

PermGroup m12() {
    return PermGroup(
        12, {Permutation::from_cycles(12, {{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10}}),
             Permutation::from_cycles(12, {{2, 6, 10, 7}, {3, 9, 4, 5}}),
             Permutation::from_cycles(12, {{0, 11}, {1, 10}, {2, 5}, {3, 7}, {4, 8}, {6, 9}})});
}

PairedAction a6_pair() { return k6_pair(alternating_gens(6)); }
PairedAction s6_pair() { return k6_pair(symmetric_gens(6)); }

PairedAction psl2_11_pair() {
    PermGroup g = psl2_11();
    const StabilizerChain& chain = g.chain();
    std::mt19937 rng(20240811);
    PermGroup h1(12);
    bool have = false;
    for (int trial = 0; trial < 20000 && !have; ++trial) {
        Permutation a = random_element(chain, rng), b = random_element(chain, rng);
        PermGroup h(12, {a, b});
        if (h.order() == 60) {
            h1 = std::move(h);
            have = true;
        }
    }
    if (!have) throw error(errc::verification_failed, "no A_5 subgroup of PSL(2,11) found");
    // conjugating by z -> 2z (an outer element of PGL(2,11)) lands in the
    // other conjugacy class of A_5 subgroups
    Permutation doubler = moebius([](int z) { return mod11(2 * z); }, 11, 0);
    std::vector<Permutation> h2gens;
    for (const auto& gen : h1.generators()) h2gens.push_back(conjugate(gen, doubler));
    PermGroup h2(12, h2gens);
    for (const auto& gen : h2gens)
        if (!g.contains(gen))
            throw error(errc::verification_failed, "conjugated subgroup left PSL(2,11)");
    if (subgroups_conjugate(g, h1, h2, 100000))
        throw error(errc::verification_failed, "A_5 subgroups unexpectedly conjugate");
    CosetAction ca1(g, h1), ca2(g, h2);
    return PairedAction{ca1.action(), ca2.action().generators()};
}

PairedAction a7_15_pair() {
    PermGroup g = alternating_group(7);
    PermGroup h1 = psl32();
    for (const auto& gen : h1.generators())
        if (!g.contains(gen))
            throw error(errc::verification_failed, "PSL(3,2) generators are not even");
    Permutation swap01 = Permutation::from_cycles(7, {{0, 1}});
    std::vector<Permutation> h2gens;
    for (const auto& gen : h1.generators()) h2gens.push_back(conjugate(gen, swap01));
    PermGroup h2(7, h2gens);
    if (subgroups_conjugate(g, h1, h2, 100000))
        throw error(errc::verification_failed, "PSL(3,2) subgroups unexpectedly conjugate in A_7");
    CosetAction ca1(g, h1), ca2(g, h2);
    return PairedAction{ca1.action(), ca2.action().generators()};
}

PairedAction m12_pair() {
    PermGroup g = m12();
    const StabilizerChain& chain = g.chain();
    std::mt19937 rng(20240812);
    for (int trial = 0; trial < 200000; ++trial) {
        Permutation a = random_element(chain, rng), b = random_element(chain, rng);
        PermGroup h(12, {a, b});
        if (h.order() == 7920 && h.is_transitive()) {
            CosetAction ca(g, h);
            return PairedAction{PermGroup(12, g.generators()), ca.action().generators()};
        }
    }
    throw error(errc::verification_failed, "no transitive M_11 subgroup of M_12 found");
}

PairedAction paired_action_by_name(const std::string& name) {
    if (name == "a6_pair") return a6_pair();
    if (name == "s6_pair") return s6_pair();
    if (name == "psl2_11_pair") return psl2_11_pair();
    if (name == "a7_15_pair") return a7_15_pair();
    if (name == "m12_pair") return m12_pair();
    throw error(errc::invalid_argument,
                "unknown fixture (available: a6_pair, s6_pair, psl2_11_pair, a7_15_pair, "
                "m12_pair)");
}

void validate_paired_action_strict(const PairedAction& pa, unsigned long long bound) {
    pa.validate(bound);
    PermGroup g2(pa.group1.degree(), pa.group2_images);
    if (!pa.group1.is_transitive() || !g2.is_transitive())
        throw error(errc::verification_failed, "paired action: an action is not transitive");
    if (!pa.group1.is_2transitive() || !g2.is_2transitive())
        throw error(errc::verification_failed, "paired action: an action is not 2-transitive");
    if (!actions_inequivalent(pa, bound))
        throw error(errc::verification_failed, "paired action: actions appear equivalent");
}

WreathGroup perm_code_nt_group(const PermGroup& t, const PermGroup& normalizer) {
    int q = t.degree();
    if (normalizer.degree() != q)
        throw error(errc::invalid_argument, "perm_code_nt_group: degree mismatch");
    std::vector<WreathElement> gens;
    for (const auto& h : t.generators())
        gens.emplace_back(std::vector<Permutation>(q, h), Permutation(q));
    for (const auto& s : normalizer.generators())
        gens.emplace_back(std::vector<Permutation>(q, s), s);
    return WreathGroup(q, q, std::move(gens));
}

namespace {

int permutation_sign(const Permutation& p) {
    int s = 1;
    for (const auto& cyc : p.cycles())
        if (cyc.size() % 2 == 0) s = -s;
    return s;
}

}  // namespace

Example9 example9() {
    const int q = 5, m = 10;
    std::vector<WreathElement> gens;
    Permutation top_id(m);
    Permutation bot_id(q);
    auto block_top = [&](const Permutation& s, bool both) {
        std::vector<int> images(m);
        for (int b = 0; b < 2; ++b)
            for (int a = 0; a < q; ++a)
                images[b * q + a] = b * q + (b == 0 || both ? s(a) : a);
        return Permutation(std::move(images));
    };
    for (const auto& h : symmetric_gens(q))
        gens.emplace_back(std::vector<Permutation>(m, h), top_id);
    for (const auto& u : alternating_gens(q)) {
        std::vector<Permutation> bottom(m, bot_id);
        for (int a = 0; a < q; ++a) bottom[a] = u;
        gens.emplace_back(std::move(bottom), top_id);
    }
    for (const auto& s : symmetric_gens(q))
        gens.emplace_back(std::vector<Permutation>(m, bot_id), block_top(s, true));
    for (const auto& u : alternating_gens(q))
        gens.emplace_back(std::vector<Permutation>(m, bot_id), block_top(u, false));
    gens.emplace_back(std::vector<Permutation>(m, bot_id),
                      Permutation::from_cycles(m, {{0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}}));
    WreathGroup x(m, q, std::move(gens));

    auto s5 = symmetric_group(q).elements();
    std::vector<Vertex> words;
    for (const auto& t1 : s5)
        for (const auto& t2 : s5) {
            if (permutation_sign(t1) != permutation_sign(t2)) continue;
            std::vector<int> symbols;
            symbols.reserve(m);
            symbols.insert(symbols.end(), t1.images().begin(), t1.images().end());
            symbols.insert(symbols.end(), t2.images().begin(), t2.images().end());
            words.emplace_back(std::move(symbols), q);
        }
    return Example9{Code(m, q, std::move(words)), std::move(x)};
}

}  // namespace ntc
