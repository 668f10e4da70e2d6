#include "ntc/analyze.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <unordered_set>

namespace ntc {

nlohmann::json Report::to_json() const {
    return nlohmann::json{{"property", property},
                          {"verdict", verdict},
                          {"witnesses", witnesses},
                          {"counterexample", counterexample},
                          {"stats", stats}};
}

namespace {

nlohmann::json vertex_json(const Vertex& v) { return nlohmann::json(v.symbols()); }

bool is_simple_nonabelian(const PermGroup& g, unsigned long long bound) {
    if (g.order() < 60) return false;
    bool nonabelian = false;
    for (std::size_t i = 0; i < g.generators().size() && !nonabelian; ++i)
        for (std::size_t j = i + 1; j < g.generators().size() && !nonabelian; ++j)
            if (compose(g.generators()[i], g.generators()[j]) !=
                compose(g.generators()[j], g.generators()[i]))
                nonabelian = true;
    if (!nonabelian) return false;
    auto mns = g.minimal_normal_subgroups(bound);
    return mns.size() == 1 && mns[0].order() == g.order();
}

}  // namespace

Report check_neighbour_transitive(const Code& c, const WreathGroup& x,
                                  unsigned long long orbit_bound) {
    if (c.is_complete())
        throw error(errc::invalid_argument, "neighbour transitivity: code is complete");
    Report r;
    r.property = "neighbour_transitive";
    r.stats["code_size"] = c.size();

    for (std::size_t gi = 0; gi < x.generators().size(); ++gi)
        for (const auto& w : c.words()) {
            Vertex img = apply(x.generators()[gi], w);
            if (!c.contains(img)) {
                r.verdict = false;
                r.counterexample = {{"reason", "generator does not preserve the code"},
                                    {"generator", gi},
                                    {"word", vertex_json(w)},
                                    {"image", vertex_json(img)}};
                return r;
            }
        }

    Code orb_c = orbit_of_vertex(x, c.word(0), orbit_bound);
    if (!(orb_c == c)) {
        r.verdict = false;
        for (const auto& w : c.words())
            if (!orb_c.contains(w)) {
                r.counterexample = {{"reason", "code is not a single orbit"},
                                    {"word", vertex_json(w)}};
                break;
            }
        return r;
    }
    Code c1 = neighbour_set(c);
    r.stats["neighbour_size"] = c1.size();
    Code orb_n = orbit_of_vertex(x, c1.word(0), orbit_bound);
    if (!(orb_n == c1)) {
        r.verdict = false;
        nlohmann::json bad;
        for (const auto& w : c1.words())
            if (!orb_n.contains(w)) {
                bad = vertex_json(w);
                break;
            }
        if (bad.is_null())
            for (const auto& w : orb_n.words())
                if (!c1.contains(w)) {
                    bad = vertex_json(w);
                    break;
                }
        r.counterexample = {{"reason", "neighbour set is not a single orbit"}, {"word", bad}};
        return r;
    }
    r.verdict = true;
    r.witnesses["code_orbit_representative"] = vertex_json(c.word(0));
    r.witnesses["neighbour_orbit_representative"] = vertex_json(c1.word(0));
    return r;
}

Report check_completely_transitive(const Code& c, const WreathGroup& x,
                                   unsigned long long visit_bound,
                                   unsigned long long orbit_bound) {
    Report r;
    r.property = "completely_transitive";
    DistancePartition dp = distance_partition(c, visit_bound);
    r.stats["cells"] = dp.cells.size();
    r.stats["covering_radius"] = dp.rho();
    for (std::size_t i = 0; i < dp.cells.size(); ++i) {
        if (!is_orbit(x, dp.cells[i], orbit_bound)) {
            r.verdict = false;
            r.counterexample = {{"reason", "cell is not a single orbit"}, {"cell", i}};
            return r;
        }
    }
    r.verdict = true;
    return r;
}

Report check_s_regular(const Code& c, int s, unsigned long long visit_bound) {
    Report r;
    r.property = "s_regular";
    r.stats["s"] = s;
    DistancePartition dp = distance_partition(c, visit_bound);
    r.stats["covering_radius"] = dp.rho();
    int top = std::min<int>(s, dp.rho());
    for (int i = 0; i <= top; ++i) {
        const auto& cell = dp.cells[i].words();
        std::vector<int> ref;
        for (std::size_t vi = 0; vi < cell.size(); ++vi) {
            std::vector<int> hist(c.length() + 1, 0);
            for (const auto& w : c.words()) ++hist[distance(cell[vi], w)];
            if (vi == 0) {
                ref = hist;
            } else if (hist != ref) {
                r.verdict = false;
                r.counterexample = {{"reason", "sphere intersection counts differ within a cell"},
                                    {"cell", i},
                                    {"vertex", vertex_json(cell[vi])},
                                    {"reference_vertex", vertex_json(cell[0])}};
                return r;
            }
        }
    }
    r.verdict = true;
    return r;
}

Report check_completely_regular(const Code& c, unsigned long long visit_bound) {
    Report r = check_s_regular(c, c.length(), visit_bound);
    r.property = "completely_regular";
    return r;
}

std::optional<WreathElement> rep_equivalence_witness(const Code& c) {
    if (c.size() < 2)
        throw error(errc::invalid_argument, "rep_equivalence_witness: need at least 2 words");
    if (min_distance(c) != c.length()) return std::nullopt;
    int m = c.length(), q = c.alphabet();
    std::vector<Permutation> bottom;
    bottom.reserve(m);
    for (int i = 0; i < m; ++i) {
        std::vector<int> images(q, -1);
        std::vector<char> used(q, 0);
        for (const auto& w : c.words()) {
            images[w[i]] = w[0];
            used[w[0]] = 1;
        }
        int next = 0;
        for (int s = 0; s < q; ++s) {
            if (images[s] >= 0) continue;
            while (used[next]) ++next;
            images[s] = next;
            used[next] = 1;
        }
        bottom.emplace_back(std::move(images));
    }
    WreathElement y(std::move(bottom), Permutation(m));
    Code rep = rep_code(m, q);
    for (const auto& w : c.words())
        if (!rep.contains(apply(y, w)))
            throw error(errc::verification_failed, "rep_equivalence_witness: construction failed");
    return y;
}

WreathGroup vertex_stabilizer(const WreathGroup& x, const Vertex& v,
                              unsigned long long orbit_bound) {
    std::vector<Vertex> orbit{v};
    std::unordered_map<Vertex, std::size_t, VertexHash> index{{v, 0}};
    std::vector<WreathElement> trans{WreathElement::identity(x.m(), x.q())};
    for (std::size_t head = 0; head < orbit.size(); ++head) {
        for (const auto& g : x.generators()) {
            Vertex img = apply(g, orbit[head]);
            if (index.emplace(img, orbit.size()).second) {
                if (orbit.size() + 1 > orbit_bound)
                    throw error(errc::bound_exceeded, "vertex_stabilizer: orbit bound exceeded");
                trans.push_back(compose(trans[head], g));
                orbit.push_back(std::move(img));
            }
        }
    }
    std::unordered_set<WreathElement, WreathElementHash> seen;
    std::vector<WreathElement> gens;
    for (std::size_t i = 0; i < orbit.size(); ++i)
        for (const auto& g : x.generators()) {
            std::size_t t = index.at(apply(g, orbit[i]));
            WreathElement sg = compose(compose(trans[i], g), inverse(trans[t]));
            if (sg.is_identity()) continue;
            if (seen.insert(sg).second) gens.push_back(std::move(sg));
        }
    return WreathGroup(x.m(), x.q(), reduce_wreath_generators(x.m(), x.q(), gens));
}

WreathElement wreath_from_base_perm(const Permutation& p, int m, int q) {
    if (p.degree() != m * q)
        throw error(errc::invalid_argument, "wreath_from_base_perm: degree mismatch");
    std::vector<Permutation> bottom;
    bottom.reserve(m);
    for (int i = 0; i < m; ++i) bottom.push_back(restrict_block(p, i * q, q));
    return WreathElement(std::move(bottom), Permutation(m));
}

WreathGroup base_socle(const WreathGroup& k, unsigned long long bound) {
    for (const auto& g : k.generators())
        if (!g.top().is_identity())
            throw error(errc::invalid_argument, "base_socle: group is not in the base group");
    PermGroup soc = k.point_group().socle(bound);
    std::vector<WreathElement> gens;
    for (const auto& p : soc.generators()) gens.push_back(wreath_from_base_perm(p, k.m(), k.q()));
    return WreathGroup(k.m(), k.q(), std::move(gens));
}

SupportPartition support_partition(const WreathGroup& sock, unsigned long long bound) {
    for (const auto& g : sock.generators())
        if (!g.top().is_identity())
            throw error(errc::invalid_argument, "support_partition: group is not in the base group");
    int m = sock.m(), q = sock.q();
    auto factors = sock.point_group().minimal_normal_subgroups(bound);
    SupportPartition sp;
    std::vector<char> covered(m, 0);
    for (const auto& d : factors) {
        std::vector<int> support;
        for (int i = 0; i < m; ++i) {
            bool moves = false;
            for (const auto& p : d.generators())
                for (int a = 0; a < q && !moves; ++a)
                    if (p(i * q + a) != i * q + a) moves = true;
            if (moves) support.push_back(i);
        }
        if (support.empty())
            throw error(errc::verification_failed, "support_partition: trivial factor");
        for (int i : support) {
            if (covered[i])
                throw error(errc::verification_failed, "support_partition: supports overlap");
            covered[i] = 1;
        }
        std::vector<WreathElement> dgens;
        for (const auto& p : d.generators()) dgens.push_back(wreath_from_base_perm(p, m, q));
        // full diagonal factor on its support, over a nonabelian simple group
        for (int j : support) {
            std::vector<Permutation> proj;
            for (const auto& g : dgens) proj.push_back(g.bottom()[j]);
            PermGroup pg(q, std::move(proj));
            if (pg.order() != d.order() || !is_simple_nonabelian(pg, bound))
                throw error(errc::verification_failed,
                            "support_partition: factor is not a full diagonal subgroup of a "
                            "nonabelian simple group");
        }
        sp.blocks.push_back(std::move(support));
        sp.factor_gens.push_back(std::move(dgens));
    }
    for (int i = 0; i < m; ++i)
        if (!covered[i])
            throw error(errc::verification_failed, "support_partition: supports do not cover M");
    // canonical order: by least coordinate
    std::vector<std::size_t> order(sp.blocks.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return sp.blocks[a][0] < sp.blocks[b][0]; });
    SupportPartition out;
    for (std::size_t i : order) {
        out.blocks.push_back(std::move(sp.blocks[i]));
        out.factor_gens.push_back(std::move(sp.factor_gens[i]));
    }
    return out;
}

FormInfo classify_form(const SupportPartition& sp, int q) {
    FormInfo fi;
    fi.form = Form::Form1;
    bool form_set = false;
    for (std::size_t b = 0; b < sp.blocks.size(); ++b) {
        const auto& block = sp.blocks[b];
        const auto& dgens = sp.factor_gens[b];
        auto proj = [&](int j) {
            std::vector<Permutation> out;
            for (const auto& g : dgens) out.push_back(g.bottom()[j]);
            return out;
        };
        std::unordered_map<int, Permutation> conj;
        std::vector<int> class1{block[0]}, leftover;
        conj.emplace(block[0], Permutation(q));
        auto lead1 = proj(block[0]);
        for (std::size_t t = 1; t < block.size(); ++t) {
            int j = block[t];
            if (auto c = action_conjugator(lead1, proj(j), q)) {
                class1.push_back(j);
                conj.emplace(j, std::move(*c));
            } else {
                leftover.push_back(j);
            }
        }
        Form block_form = Form::Form1;
        std::vector<std::vector<int>> classes{class1};
        if (!leftover.empty()) {
            block_form = Form::Form2;
            std::vector<int> class2{leftover[0]};
            conj.emplace(leftover[0], Permutation(q));
            auto lead2 = proj(leftover[0]);
            for (std::size_t t = 1; t < leftover.size(); ++t) {
                int j = leftover[t];
                auto c = action_conjugator(lead2, proj(j), q);
                if (!c)
                    throw error(errc::verification_failed,
                                "classify_form: more than two consistency classes in a block");
                class2.push_back(j);
                conj.emplace(j, std::move(*c));
            }
            if (class2.size() != class1.size())
                throw error(errc::verification_failed,
                            "classify_form: consistency classes of unequal size");
            classes.push_back(std::move(class2));
        }
        if (!form_set) {
            fi.form = block_form;
            form_set = true;
        } else if (fi.form != block_form) {
            throw error(errc::verification_failed, "classify_form: blocks have mixed forms");
        }
        fi.classes.push_back(std::move(classes));
        fi.conjugators.push_back(std::move(conj));
    }
    return fi;
}

namespace {

Permutation read_block_perm(const Vertex& w, const std::vector<int>& coords, int q) {
    std::vector<int> images(q);
    std::vector<char> seen(q, 0);
    for (int s = 0; s < q; ++s) {
        int v = w[coords[s]];
        if (seen[v]) throw error(errc::verification_failed, "decompose: block word not injective");
        seen[v] = 1;
        images[s] = v;
    }
    return Permutation(std::move(images));
}

/// Top normalization: within `coords`, send the r-th occurrence (ascending) of
/// symbol s in alpha to coords[r*q + s]; each symbol must occur exactly p times.
void fill_rep_normalizer(std::vector<int>& sigma, const Vertex& alpha,
                         const std::vector<int>& coords, int q, int p) {
    std::vector<int> seen(q, 0);
    for (int j : coords) {
        int s = alpha[j];
        if (seen[s] == p)
            throw error(errc::verification_failed,
                        "decompose: block is not a frequency permutation array");
        sigma[j] = coords[seen[s] * q + s];
        ++seen[s];
    }
}

}  // namespace

Decomposition decompose(const Code& c, const WreathGroup& x, unsigned long long orbit_bound,
                        unsigned long long elem_bound) {
    int m = c.length(), q = c.alphabet();
    Report nt = check_neighbour_transitive(c, x, orbit_bound);
    if (!nt.verdict)
        throw error(errc::verification_failed, "decompose: code is not neighbour transitive");
    if (min_distance(c) < 3)
        throw error(errc::invalid_argument, "decompose: minimum distance below 3");
    WreathGroup k = base_kernel(x);
    if (k.generators().empty() || k.order() == 1)
        throw error(errc::verification_failed, "decompose: kernel of the top action is trivial");
    PermGroup alpha_grp = alphabet_group(x, 0);
    if (!alpha_grp.is_2transitive())
        throw error(errc::verification_failed, "decompose: alphabet group is not 2-transitive");
    if (!is_simple_nonabelian(alpha_grp.socle(elem_bound), elem_bound))
        throw error(errc::verification_failed, "decompose: alphabet group is not almost simple");

    WreathGroup sock = base_socle(k, elem_bound);
    SupportPartition sp = support_partition(sock, elem_bound);
    FormInfo fi = classify_form(sp, q);

    int ell = static_cast<int>(sp.blocks.size());
    int ksize = m / ell;
    for (const auto& b : sp.blocks)
        if (static_cast<int>(b.size()) != ksize)
            throw error(errc::verification_failed, "decompose: support blocks of unequal size");

    Vertex alpha = c.word(0);
    Code delta = orbit_of_vertex(sock, alpha, orbit_bound);

    // X-translates of delta covering C, via orbit transversal bookkeeping
    std::vector<Vertex> orbit{alpha};
    std::unordered_map<Vertex, std::size_t, VertexHash> index{{alpha, 0}};
    std::vector<WreathElement> trans{WreathElement::identity(m, q)};
    for (std::size_t head = 0; head < orbit.size(); ++head)
        for (const auto& g : x.generators()) {
            Vertex img = apply(g, orbit[head]);
            if (index.emplace(img, orbit.size()).second) {
                trans.push_back(compose(trans[head], g));
                orbit.push_back(std::move(img));
            }
        }
    VertexSet covered(delta.words().begin(), delta.words().end());
    std::vector<WreathElement> translates{WreathElement::identity(m, q)};
    for (const auto& w : c.words()) {
        if (covered.count(w)) continue;
        const WreathElement& y = trans[index.at(w)];
        for (const auto& d : delta.words()) {
            Vertex img = apply(y, d);
            if (!covered.insert(img).second)
                throw error(errc::verification_failed, "decompose: translates are not disjoint");
            if (!c.contains(img))
                throw error(errc::verification_failed, "decompose: translate leaves the code");
        }
        translates.push_back(y);
    }
    if (covered.size() != c.size())
        throw error(errc::verification_failed, "decompose: translates do not cover the code");

    // shape classification
    Shape shape;
    std::optional<PermGroup> t_group;
    std::optional<PairedAction> pairing;
    int p = 0;
    std::vector<WreathElement> applied;

    Code repk = rep_code(ksize, q);
    bool all_rep = true;
    for (const auto& b : sp.blocks)
        if (!(project(delta, b) == repk)) {
            all_rep = false;
            break;
        }

    if (all_rep) {
        shape = Shape::ProdRep;
        unsigned long long want = 1;
        for (int i = 0; i < ell; ++i) want *= static_cast<unsigned long long>(q);
        if (delta.size() != want)
            throw error(errc::verification_failed, "decompose: Rep product has wrong size");
        if (!(delta == c))
            throw error(errc::verification_failed,
                        "decompose: all-repetition case must have a single translate");
    } else {
        // bottom conjugator aligning each factor into diagonal position
        std::vector<Permutation> ybottom(m, Permutation(q));
        for (std::size_t b = 0; b < sp.blocks.size(); ++b)
            for (const auto& [j, cj] : fi.conjugators[b]) ybottom[j] = cj.inverse();
        WreathElement y(ybottom, Permutation(m));
        applied.push_back(y);
        Code delta1 = apply(y, delta);

        auto conjugated_proj = [&](std::size_t b, int j) {
            std::vector<Permutation> out;
            for (const auto& g : sp.factor_gens[b])
                out.push_back(conjugate(g.bottom()[j], ybottom[j]));
            return out;
        };

        if (fi.form == Form::Form1) {
            shape = Shape::ProdRepPerm;
            if (ksize % q != 0)
                throw error(errc::verification_failed, "decompose: block size not a multiple of q");
            p = ksize / q;
            PermGroup t(q, conjugated_proj(0, sp.blocks[0][0]));
            for (std::size_t b = 1; b < sp.blocks.size(); ++b) {
                PermGroup tb(q, conjugated_proj(b, sp.blocks[b][0]));
                if (!t.same_group(tb))
                    throw error(errc::verification_failed,
                                "decompose: block groups differ after conjugation");
            }
            t_group = t;

            Vertex a1 = delta1.word(0);
            std::vector<int> sigma(m);
            for (const auto& b : sp.blocks) fill_rep_normalizer(sigma, a1, b, q, p);
            WreathElement se(std::vector<Permutation>(m, Permutation(q)),
                             Permutation(std::move(sigma)));
            applied.push_back(se);
            Code delta2 = apply(se, delta1);

            unsigned long long want = 1;
            for (int i = 0; i < ell; ++i) want *= t.order();
            if (delta2.size() != want)
                throw error(errc::verification_failed, "decompose: orbit size mismatch");
            for (const auto& w : delta2.words())
                for (const auto& b : sp.blocks) {
                    Permutation tb = read_block_perm(w, b, q);
                    if (!t.contains(tb))
                        throw error(errc::verification_failed,
                                    "decompose: block word outside C(T)");
                    for (int r = 1; r < p; ++r)
                        for (int s = 0; s < q; ++s)
                            if (w[b[r * q + s]] != w[b[s]])
                                throw error(errc::verification_failed,
                                            "decompose: block word is not a repetition");
                }
            for (const auto& w : delta2.words()) {
                std::vector<int> freq(q, 0);
                for (int s : w.symbols()) ++freq[s];
                for (int s = 0; s < q; ++s)
                    if (freq[s] != ell * p)
                        throw error(errc::verification_failed,
                                    "decompose: orbit is not a frequency permutation array");
            }
        } else {
            shape = Shape::ProdRepTwisted;
            if (ksize % (2 * q) != 0)
                throw error(errc::verification_failed,
                            "decompose: block size not a multiple of 2q");
            p = ksize / (2 * q);
            int lead1 = fi.classes[0][0][0], lead2 = fi.classes[0][1][0];
            PairedAction pa{PermGroup(q, conjugated_proj(0, lead1)), conjugated_proj(0, lead2)};
            pa.validate(elem_bound);
            PermGroup diag = pa.diagonal_group();
            for (std::size_t b = 1; b < sp.blocks.size(); ++b) {
                PermGroup diag_b(2 * q, [&] {
                    std::vector<Permutation> gens;
                    auto g1 = conjugated_proj(b, fi.classes[b][0][0]);
                    auto g2 = conjugated_proj(b, fi.classes[b][1][0]);
                    for (std::size_t a = 0; a < g1.size(); ++a)
                        gens.push_back(stack(g1[a], g2[a]));
                    return gens;
                }());
                if (!diag.same_group(diag_b))
                    throw error(errc::verification_failed,
                                "decompose: block pairings differ after conjugation");
            }
            t_group = pa.group1;
            pairing = pa;

            Vertex a1 = delta1.word(0);
            std::vector<int> sigma(m);
            for (std::size_t b = 0; b < sp.blocks.size(); ++b) {
                fill_rep_normalizer(sigma, a1, fi.classes[b][0], q, p);
                fill_rep_normalizer(sigma, a1, fi.classes[b][1], q, p);
            }
            WreathElement se(std::vector<Permutation>(m, Permutation(q)),
                             Permutation(std::move(sigma)));
            applied.push_back(se);
            Code delta2 = apply(se, delta1);

            unsigned long long want = 1;
            for (int i = 0; i < ell; ++i) want *= pa.group1.order();
            if (delta2.size() != want)
                throw error(errc::verification_failed, "decompose: orbit size mismatch");
            for (const auto& w : delta2.words())
                for (std::size_t b = 0; b < sp.blocks.size(); ++b) {
                    const auto& h1 = fi.classes[b][0];
                    const auto& h2 = fi.classes[b][1];
                    Permutation t1 = read_block_perm(w, h1, q);
                    Permutation t2 = read_block_perm(w, h2, q);
                    if (!diag.contains(stack(t1, t2)))
                        throw error(errc::verification_failed,
                                    "decompose: half words outside C(T,T^tau)");
                    for (int r = 1; r < p; ++r)
                        for (int s = 0; s < q; ++s)
                            if (w[h1[r * q + s]] != w[h1[s]] || w[h2[r * q + s]] != w[h2[s]])
                                throw error(errc::verification_failed,
                                            "decompose: half word is not a repetition");
                }
            for (const auto& w : delta2.words()) {
                std::vector<int> freq(q, 0);
                for (int s : w.symbols()) ++freq[s];
                for (int s = 0; s < q; ++s)
                    if (freq[s] != 2 * ell * p)
                        throw error(errc::verification_failed,
                                    "decompose: orbit is not a frequency permutation array");
            }
        }
    }

    std::vector<std::vector<std::vector<int>>> sub_blocks;
    if (fi.form == Form::Form2) sub_blocks = fi.classes;

    return Decomposition{std::move(k),
                         std::move(sock),
                         sp.blocks,
                         fi.form,
                         std::move(sub_blocks),
                         std::move(delta),
                         std::move(translates),
                         shape,
                         std::move(t_group),
                         std::move(pairing),
                         p,
                         std::move(applied)};
}

Report check_projection_structure(const Code& c, const WreathGroup& x,
                                  const std::vector<std::vector<int>>& blocks) {
    Report r;
    r.property = "projection_structure";
    std::vector<std::set<int>> block_sets;
    for (const auto& b : blocks) block_sets.emplace_back(b.begin(), b.end());
    for (const auto& g : x.generators())
        for (const auto& b : block_sets) {
            std::set<int> img;
            for (int j : b) img.insert(g.top()(j));
            if (std::find(block_sets.begin(), block_sets.end(), img) == block_sets.end())
                throw error(errc::invalid_argument,
                            "projection_structure: partition is not invariant");
        }

    int q = c.alphabet();
    std::optional<int> common_delta;
    r.witnesses["blocks"] = nlohmann::json::array();
    for (const auto& b : blocks) {
        Code pj = project(c, b);
        int kk = static_cast<int>(b.size());
        nlohmann::json info;
        info["coords"] = b;
        std::string kind = "other";
        if (pj.is_complete()) {
            kind = "complete";
        } else if (kk >= 2 && pj == rep_code(kk, q)) {
            kind = "rep";
        } else if (kk % q == 0) {
            bool all_freq = true;
            for (const auto& w : pj.words()) {
                std::vector<int> freq(q, 0);
                for (int s : w.symbols()) ++freq[s];
                for (int s = 0; s < q && all_freq; ++s)
                    if (freq[s] != kk / q) all_freq = false;
                if (!all_freq) break;
            }
            if (all_freq) kind = "subset_of_all";
        }
        info["kind"] = kind;
        if (pj.size() >= 2) {
            int d = min_distance(pj);
            info["min_distance"] = d;
            if (!pj.is_complete() && d < 2) {
                r.verdict = false;
                r.counterexample = {{"reason", "projected minimum distance below 2"},
                                    {"coords", b}};
                return r;
            }
            if (common_delta && *common_delta != d) {
                r.verdict = false;
                r.counterexample = {{"reason", "projected minimum distances differ"},
                                    {"coords", b}};
                return r;
            }
            common_delta = d;
        }
        if (!pj.is_complete()) {
            Code n1 = neighbour_set(pj);
            VertexSet projected;
            for (const auto& v : c1_of_J(c, b)) projected.insert(project(v, b));
            bool dichotomy = n1.size() == projected.size();
            for (const auto& w : n1.words())
                if (!projected.count(w)) {
                    dichotomy = false;
                    break;
                }
            info["dichotomy"] = dichotomy;
            if (!dichotomy) {
                r.verdict = false;
                r.counterexample = {{"reason", "projected neighbour set mismatch"}, {"coords", b}};
                return r;
            }
        }
        r.witnesses["blocks"].push_back(info);
    }
    r.verdict = true;
    return r;
}

Report check_prop27(const Code& c, const WreathGroup& x, unsigned long long orbit_bound) {
    Report r;
    r.property = "prop27";
    Report nt = check_neighbour_transitive(c, x, orbit_bound);
    if (!nt.verdict) throw error(errc::invalid_argument, "prop27: code is not neighbour transitive");
    if (min_distance(c) < 3)
        throw error(errc::invalid_argument, "prop27: minimum distance below 3");

    Vertex alpha = c.word(0);
    WreathGroup stab = vertex_stabilizer(x, alpha, orbit_bound);

    // (i) the vertex stabilizer is transitive on the neighbours of alpha and on M
    int first_other = alpha[0] == 0 ? 1 : 0;
    Code nb_orbit = orbit_of_vertex(stab, nu(alpha, 0, first_other), orbit_bound);
    auto nbrs = sphere(alpha, 1);
    bool part1 = nb_orbit.size() == nbrs.size();
    for (const auto& v : nbrs)
        if (!nb_orbit.contains(v)) {
            part1 = false;
            break;
        }
    if (part1) part1 = stab.top_group().is_transitive();
    if (!part1) {
        r.verdict = false;
        r.counterexample = {{"reason", "vertex stabilizer not transitive on neighbours or M"}};
        return r;
    }

    // (ii) the entry stabilizer is transitive on C
    WreathGroup xi = entry_stabilizer(x, 0);
    Code c_orbit = orbit_of_vertex(xi, alpha, orbit_bound);
    if (!(c_orbit == c)) {
        r.verdict = false;
        r.counterexample = {{"reason", "entry stabilizer not transitive on the code"}};
        return r;
    }

    // (iii) the alphabet group is 2-transitive
    if (!alphabet_group(x, 0).is_2transitive()) {
        r.verdict = false;
        r.counterexample = {{"reason", "alphabet group not 2-transitive"}};
        return r;
    }
    r.verdict = true;
    r.witnesses["vertex_stabilizer_generators"] = stab.generators().size();
    return r;
}

}  // namespace ntc
