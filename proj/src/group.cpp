#include "ntc/group.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <unordered_set>

namespace ntc {

Word inverse_word(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it - 1);
    return out;
}

namespace {

Word concat(const Word& a, const Word& b) {
    Word out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

int smallest_moved_point(const std::vector<Permutation>& gens) {
    int best = -1;
    for (const auto& g : gens)
        for (int i = 0; i < g.degree(); ++i)
            if (g(i) != i && (best < 0 || i < best)) {
                best = i;
                break;  // per generator the first moved point is the smallest
            }
    return best;
}

}  // namespace

StabilizerChain::StabilizerChain(int degree, const std::vector<Permutation>& generators,
                                 bool with_words, const std::vector<int>& forced_base)
    : degree_(degree), with_words_(with_words) {
    std::unordered_set<Permutation, PermutationHash> seen;
    for (std::size_t i = 0; i < generators.size(); ++i) {
        const auto& g = generators[i];
        if (g.degree() != degree) throw error(errc::invalid_argument, "generator degree mismatch");
        if (g.is_identity() || !seen.insert(g).second) continue;
        top_gens_.push_back(g);
        if (with_words) top_words_.push_back(Word{static_cast<int32_t>(i)});
    }

    std::vector<Permutation> cur = top_gens_;
    std::vector<Word> cur_words = top_words_;
    std::size_t forced_used = 0;

    while (!cur.empty() || forced_used < forced_base.size()) {
        int base;
        if (forced_used < forced_base.size()) {
            base = forced_base[forced_used++];
            if (base < 0 || base >= degree)
                throw error(errc::invalid_argument, "base point out of range");
        } else {
            base = smallest_moved_point(cur);
            if (base < 0) break;  // only identities left
        }

        Level lvl;
        lvl.base = base;
        lvl.gens = cur;
        if (with_words) lvl.gen_words = cur_words;

        // orbit and transversal, deterministic BFS
        lvl.orbit.push_back(base);
        lvl.orbit_index[base] = 0;
        lvl.transversal.push_back(Permutation(degree));
        if (with_words) lvl.transversal_words.push_back(Word{});
        for (std::size_t qi = 0; qi < lvl.orbit.size(); ++qi) {
            int p = lvl.orbit[qi];
            for (std::size_t si = 0; si < lvl.gens.size(); ++si) {
                int t = lvl.gens[si](p);
                if (lvl.orbit_index.count(t)) continue;
                lvl.orbit_index[t] = static_cast<int>(lvl.orbit.size());
                lvl.orbit.push_back(t);
                lvl.transversal.push_back(compose(lvl.transversal[qi], lvl.gens[si]));
                if (with_words)
                    lvl.transversal_words.push_back(
                        concat(lvl.transversal_words[qi], lvl.gen_words[si]));
            }
        }

        // Schreier generators for the next level
        std::vector<Permutation> next;
        std::vector<Word> next_words;
        std::unordered_set<Permutation, PermutationHash> next_seen;
        for (std::size_t qi = 0; qi < lvl.orbit.size(); ++qi) {
            for (std::size_t si = 0; si < lvl.gens.size(); ++si) {
                int t = lvl.gens[si](lvl.orbit[qi]);
                int ti = lvl.orbit_index.at(t);
                Permutation schreier = compose(compose(lvl.transversal[qi], lvl.gens[si]),
                                               lvl.transversal[ti].inverse());
                if (schreier.is_identity() || !next_seen.insert(schreier).second) continue;
                if (with_words)
                    next_words.push_back(concat(
                        concat(lvl.transversal_words[qi], lvl.gen_words[si]),
                        inverse_word(lvl.transversal_words[ti])));
                next.push_back(std::move(schreier));
            }
        }

        levels_.push_back(std::move(lvl));
        cur = std::move(next);
        cur_words = std::move(next_words);
    }

    // one sentinel level of leftover generators so level_generators() can see them
    if (!cur.empty())
        throw error(errc::invalid_argument, "stabilizer chain did not terminate");
}

unsigned long long StabilizerChain::order() const {
    unsigned long long ord = 1;
    for (const auto& lvl : levels_) {
        unsigned long long sz = lvl.orbit.size();
        if (ord > std::numeric_limits<unsigned long long>::max() / 4 / sz)
            throw error(errc::bound_exceeded, "group order exceeds 64-bit range");
        ord *= sz;
    }
    return ord;
}

bool StabilizerChain::contains(const Permutation& p, Word* word) const {
    if (p.degree() != degree_) throw error(errc::invalid_argument, "contains: degree mismatch");
    Permutation residue = p;
    std::vector<const Word*> used;
    for (const auto& lvl : levels_) {
        int img = residue(lvl.base);
        auto it = lvl.orbit_index.find(img);
        if (it == lvl.orbit_index.end()) return false;
        residue = compose(residue, lvl.transversal[it->second].inverse());
        if (word && with_words_) used.push_back(&lvl.transversal_words[it->second]);
    }
    if (!residue.is_identity()) return false;
    if (word) {
        if (!with_words_) throw error(errc::invalid_argument, "chain built without words");
        word->clear();
        for (auto it = used.rbegin(); it != used.rend(); ++it)
            word->insert(word->end(), (*it)->begin(), (*it)->end());
    }
    return true;
}

std::vector<Permutation> StabilizerChain::level_generators(std::size_t k) const {
    if (k == 0) return top_gens_;
    if (k > levels_.size()) return {};
    if (k == levels_.size()) return {};  // trivial stabilizer
    return levels_[k].gens;
}

PermGroup::PermGroup(int degree) : degree_(degree) {
    if (degree < 1) throw error(errc::invalid_argument, "group degree must be positive");
}

PermGroup::PermGroup(int degree, std::vector<Permutation> generators)
    : degree_(degree), gens_(std::move(generators)) {
    if (degree < 1) throw error(errc::invalid_argument, "group degree must be positive");
    for (const auto& g : gens_)
        if (g.degree() != degree)
            throw error(errc::invalid_argument, "generator degree mismatch");
}

const StabilizerChain& PermGroup::chain() const {
    if (!chain_) chain_ = std::make_shared<StabilizerChain>(degree_, gens_, false);
    return *chain_;
}

const StabilizerChain& PermGroup::chain_with_words() const {
    if (!word_chain_) word_chain_ = std::make_shared<StabilizerChain>(degree_, gens_, true);
    return *word_chain_;
}

StabilizerChain PermGroup::chain_with_base(const std::vector<int>& forced_base) const {
    return StabilizerChain(degree_, gens_, false, forced_base);
}

bool PermGroup::contains(const Permutation& p) const {
    if (p.degree() != degree_) throw error(errc::invalid_argument, "contains: degree mismatch");
    return chain().contains(p);
}

std::vector<int> PermGroup::orbit(int point) const {
    if (point < 0 || point >= degree_)
        throw error(errc::invalid_argument, "orbit: point out of range");
    std::vector<int> orb{point};
    std::vector<char> seen(degree_, 0);
    seen[point] = 1;
    for (std::size_t i = 0; i < orb.size(); ++i)
        for (const auto& g : gens_) {
            int t = g(orb[i]);
            if (!seen[t]) {
                seen[t] = 1;
                orb.push_back(t);
            }
        }
    std::sort(orb.begin(), orb.end());
    return orb;
}

std::vector<std::vector<int>> PermGroup::orbits() const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(degree_, 0);
    for (int p = 0; p < degree_; ++p) {
        if (seen[p]) continue;
        auto orb = orbit(p);
        for (int x : orb) seen[x] = 1;
        out.push_back(std::move(orb));
    }
    return out;
}

bool PermGroup::is_transitive() const { return static_cast<int>(orbit(0).size()) == degree_; }

bool PermGroup::is_2transitive() const {
    if (degree_ < 2) throw error(errc::invalid_argument, "2-transitivity needs degree >= 2");
    // single orbit on ordered pairs of distinct points
    const long long n = degree_;
    std::vector<char> seen(static_cast<std::size_t>(n) * n, 0);
    std::vector<std::pair<int, int>> queue{{0, 1}};
    seen[1] = 1;  // pair (0,1)
    std::size_t count = 1;
    for (std::size_t i = 0; i < queue.size(); ++i) {
        auto [a, b] = queue[i];
        for (const auto& g : gens_) {
            int ga = g(a), gb = g(b);
            std::size_t key = static_cast<std::size_t>(ga) * n + gb;
            if (!seen[key]) {
                seen[key] = 1;
                ++count;
                queue.push_back({ga, gb});
            }
        }
    }
    return count == static_cast<std::size_t>(n) * (n - 1);
}

bool PermGroup::is_semiregular() const {
    unsigned long long ord = order();
    for (int p = 0; p < degree_; ++p)
        if (orbit(p).size() != ord) return false;
    return true;
}

bool PermGroup::is_regular() const { return is_transitive() && is_semiregular(); }

std::vector<Permutation> PermGroup::elements(unsigned long long bound) const {
    if (order() > bound) throw error(errc::bound_exceeded, "element enumeration bound exceeded");
    std::vector<Permutation> out{Permutation(degree_)};
    const auto& levels = chain().levels();
    for (auto it = levels.rbegin(); it != levels.rend(); ++it) {
        std::vector<Permutation> next;
        next.reserve(out.size() * it->transversal.size());
        for (const auto& deep : out)
            for (const auto& u : it->transversal) next.push_back(compose(deep, u));
        out = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

PermGroup PermGroup::point_stabilizer(int point) const {
    if (point < 0 || point >= degree_)
        throw error(errc::invalid_argument, "point_stabilizer: point out of range");
    auto ch = chain_with_base({point});
    return PermGroup(degree_, reduce_generators(degree_, ch.level_generators(1)));
}

PermGroup PermGroup::setwise_stabilizer(const std::vector<int>& points,
                                        unsigned long long bound) const {
    std::vector<char> in_set(degree_, 0);
    for (int p : points) {
        if (p < 0 || p >= degree_)
            throw error(errc::invalid_argument, "setwise_stabilizer: point out of range");
        in_set[p] = 1;
    }
    std::vector<Permutation> stab;
    for (const auto& g : elements(bound)) {
        bool ok = true;
        for (int p : points)
            if (!in_set[g(p)]) {
                ok = false;
                break;
            }
        if (ok) stab.push_back(g);
    }
    return PermGroup(degree_, reduce_generators(degree_, stab));
}

int PermGroup::minimal_degree(unsigned long long bound) const {
    if (order() <= 1) throw error(errc::invalid_argument, "minimal_degree of trivial group");
    int best = degree_ + 1;
    for (const auto& g : elements(bound)) {
        int moved = g.moved_points();
        if (moved > 0 && moved < best) best = moved;
    }
    return best;
}

PermGroup PermGroup::normal_closure(const std::vector<Permutation>& elems) const {
    for (const auto& e : elems)
        if (!contains(e))
            throw error(errc::invalid_argument, "normal_closure: element not in group");
    std::vector<Permutation> closure_gens;
    PermGroup h(degree_);
    std::deque<Permutation> queue(elems.begin(), elems.end());
    while (!queue.empty()) {
        Permutation g = std::move(queue.front());
        queue.pop_front();
        if (g.is_identity() || h.contains(g)) continue;
        closure_gens.push_back(g);
        h = PermGroup(degree_, closure_gens);
        for (const auto& s : gens_) {
            queue.push_back(conjugate(closure_gens.back(), s));
            queue.push_back(conjugate(closure_gens.back(), s.inverse()));
        }
    }
    return h;
}

std::vector<PermGroup> PermGroup::minimal_normal_subgroups(unsigned long long bound) const {
    auto elems = elements(bound);
    std::unordered_set<Permutation, PermutationHash> classified;
    std::vector<Permutation> class_reps;
    std::vector<Permutation> conj_gens;
    for (const auto& g : gens_) {
        conj_gens.push_back(g);
        conj_gens.push_back(g.inverse());
    }
    for (const auto& e : elems) {
        if (e.is_identity() || classified.count(e)) continue;
        class_reps.push_back(e);
        std::vector<Permutation> queue{e};
        classified.insert(e);
        for (std::size_t i = 0; i < queue.size(); ++i)
            for (const auto& s : conj_gens) {
                Permutation c = conjugate(queue[i], s);
                if (classified.insert(c).second) queue.push_back(c);
            }
    }

    std::vector<PermGroup> candidates;
    for (const auto& rep : class_reps) {
        PermGroup n = normal_closure({rep});
        bool dup = false;
        for (const auto& c : candidates)
            if (c.order() == n.order() && c.contains_subgroup(n)) {
                dup = true;
                break;
            }
        if (!dup) candidates.push_back(std::move(n));
    }
    std::vector<PermGroup> minimal;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        bool is_min = true;
        for (std::size_t j = 0; j < candidates.size(); ++j) {
            if (i == j) continue;
            if (candidates[j].order() < candidates[i].order() &&
                candidates[i].contains_subgroup(candidates[j])) {
                is_min = false;
                break;
            }
        }
        if (is_min) minimal.push_back(candidates[i]);
    }
    return minimal;
}

PermGroup PermGroup::socle(unsigned long long bound) const {
    if (order() == 1) return PermGroup(degree_);
    std::vector<Permutation> gens;
    for (const auto& n : minimal_normal_subgroups(bound))
        for (const auto& g : n.generators()) gens.push_back(g);
    return PermGroup(degree_, reduce_generators(degree_, gens));
}

bool PermGroup::contains_subgroup(const PermGroup& h) const {
    for (const auto& g : h.generators())
        if (!contains(g)) return false;
    return true;
}

bool PermGroup::same_group(const PermGroup& h) const {
    return order() == h.order() && contains_subgroup(h);
}

std::vector<Permutation> reduce_generators(int degree, const std::vector<Permutation>& gens) {
    std::vector<Permutation> out;
    PermGroup h(degree);
    for (const auto& g : gens) {
        if (g.is_identity() || h.contains(g)) continue;
        out.push_back(g);
        h = PermGroup(degree, out);
    }
    return out;
}

GroupHom::GroupHom(PermGroup source, std::vector<Permutation> target_images, int target_degree)
    : source_(std::move(source)),
      target_images_(std::move(target_images)),
      target_degree_(target_degree) {
    if (target_images_.size() != source_.generators().size())
        throw error(errc::invalid_argument, "GroupHom: one image per source generator required");
    for (const auto& p : target_images_)
        if (p.degree() != target_degree_)
            throw error(errc::invalid_argument, "GroupHom: target image degree mismatch");
}

Permutation GroupHom::map_element(const Permutation& g) const {
    Word w;
    if (!source_.chain_with_words().contains(g, &w))
        throw error(errc::invalid_argument, "map_element: element not in source group");
    Permutation out(target_degree_);
    for (int32_t letter : w) {
        if (letter >= 0)
            out = compose(out, target_images_[letter]);
        else
            out = compose(out, target_images_[-letter - 1].inverse());
    }
    return out;
}

CosetAction::CosetAction(const PermGroup& g, const PermGroup& h, unsigned long long index_bound)
    : h_(h), action_(1) {
    if (g.degree() != h.degree())
        throw error(errc::invalid_argument, "coset_action: degree mismatch");
    if (!g.contains_subgroup(h))
        throw error(errc::invalid_argument, "coset_action: H is not a subgroup of G");
    unsigned long long index = g.order() / h.order();
    if (index > index_bound) throw error(errc::bound_exceeded, "coset_action: index bound exceeded");

    reps_.push_back(Permutation(g.degree()));
    for (std::size_t i = 0; i < reps_.size(); ++i)
        for (const auto& s : g.generators()) {
            Permutation t = compose(reps_[i], s);
            if (coset_of(t) < 0) reps_.push_back(std::move(t));
        }
    if (reps_.size() != index)
        throw error(errc::verification_failed, "coset enumeration did not match index");

    std::vector<Permutation> action_gens;
    for (const auto& s : g.generators()) action_gens.push_back(image_of(s));
    action_ = PermGroup(static_cast<int>(index), std::move(action_gens));
}

int CosetAction::coset_of(const Permutation& g) const {
    for (std::size_t j = 0; j < reps_.size(); ++j)
        if (h_.contains(compose(g, reps_[j].inverse()))) return static_cast<int>(j);
    return -1;
}

std::optional<Permutation> action_conjugator(const std::vector<Permutation>& gens1,
                                             const std::vector<Permutation>& gens2, int degree) {
    if (gens1.size() != gens2.size())
        throw error(errc::invalid_argument, "action_conjugator: generator count mismatch");
    for (int c0 = 0; c0 < degree; ++c0) {
        std::vector<int> map(degree, -1);
        map[0] = c0;
        std::vector<int> queue{0};
        bool ok = true;
        for (std::size_t head = 0; head < queue.size() && ok; ++head) {
            int p = queue[head];
            for (std::size_t a = 0; a < gens1.size(); ++a) {
                int p2 = gens1[a](p);
                int t2 = gens2[a](map[p]);
                if (map[p2] < 0) {
                    map[p2] = t2;
                    queue.push_back(p2);
                } else if (map[p2] != t2) {
                    ok = false;
                    break;
                }
            }
        }
        if (!ok || static_cast<int>(queue.size()) != degree) continue;
        std::vector<char> hit(degree, 0);
        for (int v : map) {
            if (hit[v]) {
                ok = false;
                break;
            }
            hit[v] = 1;
        }
        if (!ok) continue;
        Permutation c(map);
        for (std::size_t a = 0; a < gens1.size() && ok; ++a)
            if (conjugate(gens1[a], c) != gens2[a]) ok = false;
        if (ok) return c;
    }
    return std::nullopt;
}

Permutation CosetAction::image_of(const Permutation& g) const {
    std::vector<int> images(reps_.size());
    for (std::size_t i = 0; i < reps_.size(); ++i) {
        int j = coset_of(compose(reps_[i], g));
        if (j < 0) throw error(errc::invalid_argument, "image_of: element not in G");
        images[i] = j;
    }
    return Permutation(std::move(images));
}

}  // namespace ntc
