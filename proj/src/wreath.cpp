#include "ntc/wreath.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>
#include <unordered_set>

namespace ntc {

WreathElement::WreathElement(std::vector<Permutation> bottom, Permutation top)
    : bottom_(std::move(bottom)), top_(std::move(top)) {
    if (static_cast<int>(bottom_.size()) != top_.degree())
        throw error(errc::invalid_argument, "wreath element: bottom count must equal top degree");
    if (bottom_.empty()) throw error(errc::invalid_argument, "wreath element: empty context");
    for (const auto& b : bottom_)
        if (b.degree() != bottom_[0].degree())
            throw error(errc::invalid_argument, "wreath element: inconsistent bottom degrees");
}

WreathElement WreathElement::identity(int m, int q) {
    return WreathElement(std::vector<Permutation>(m, Permutation(q)), Permutation(m));
}

bool WreathElement::is_identity() const {
    if (!top_.is_identity()) return false;
    for (const auto& b : bottom_)
        if (!b.is_identity()) return false;
    return true;
}

namespace {

void check_context(const WreathElement& x, const WreathElement& y) {
    if (x.m() != y.m() || x.q() != y.q())
        throw error(errc::invalid_argument, "wreath elements: context mismatch");
}

}  // namespace

Vertex apply(const WreathElement& x, const Vertex& v) {
    if (x.m() != v.length() || x.q() != v.alphabet())
        throw error(errc::invalid_argument, "apply: context mismatch");
    std::vector<int> out(x.m());
    for (int i = 0; i < x.m(); ++i) out[x.top()(i)] = x.bottom()[i](v[i]);
    return Vertex(std::move(out), x.q());
}

Code apply(const WreathElement& x, const Code& c) {
    std::vector<Vertex> words;
    words.reserve(c.size());
    for (const auto& w : c.words()) words.push_back(apply(x, w));
    return Code(c.length(), c.alphabet(), std::move(words));
}

WreathElement compose(const WreathElement& x, const WreathElement& y) {
    check_context(x, y);
    std::vector<Permutation> bottom;
    bottom.reserve(x.m());
    for (int i = 0; i < x.m(); ++i)
        bottom.push_back(compose(x.bottom()[i], y.bottom()[x.top()(i)]));
    return WreathElement(std::move(bottom), compose(x.top(), y.top()));
}

WreathElement inverse(const WreathElement& x) {
    Permutation top_inv = x.top().inverse();
    std::vector<Permutation> bottom;
    bottom.reserve(x.m());
    for (int j = 0; j < x.m(); ++j) bottom.push_back(x.bottom()[top_inv(j)].inverse());
    return WreathElement(std::move(bottom), std::move(top_inv));
}

std::pair<Vertex, Vertex> neighbour_image_check(const WreathElement& x, const Vertex& a, int i,
                                                int s) {
    Vertex lhs = apply(x, nu(a, i, s));
    Vertex rhs = nu(apply(x, a), x.top()(i), x.bottom()[i](s));
    if (lhs != rhs) throw error(errc::verification_failed, "neighbour image identity failed");
    return {lhs, rhs};
}

Permutation mu(const WreathElement& x) { return x.top(); }

Permutation phi_i(const WreathElement& x, int i) {
    if (i < 0 || i >= x.m()) throw error(errc::invalid_argument, "phi_i: coordinate out of range");
    if (x.top()(i) != i)
        throw error(errc::invalid_argument, "phi_i: element does not fix the coordinate");
    return x.bottom()[i];
}

WreathElement chi_restrict(const WreathElement& x, const std::vector<int>& J) {
    std::vector<int> j = J;
    std::sort(j.begin(), j.end());
    j.erase(std::unique(j.begin(), j.end()), j.end());
    if (j.empty() || j.front() < 0 || j.back() >= x.m())
        throw error(errc::invalid_argument, "chi_restrict: bad coordinate set");
    std::unordered_map<int, int> pos;
    for (std::size_t k = 0; k < j.size(); ++k) pos[j[k]] = static_cast<int>(k);
    std::vector<int> top(j.size());
    std::vector<Permutation> bottom;
    bottom.reserve(j.size());
    for (std::size_t k = 0; k < j.size(); ++k) {
        int img = x.top()(j[k]);
        auto it = pos.find(img);
        if (it == pos.end())
            throw error(errc::invalid_argument, "chi_restrict: set not fixed setwise");
        top[k] = it->second;
        bottom.push_back(x.bottom()[j[k]]);
    }
    return WreathElement(std::move(bottom), Permutation(std::move(top)));
}

Permutation to_point_perm(const WreathElement& x) {
    int m = x.m(), q = x.q();
    std::vector<int> images(m * q);
    for (int i = 0; i < m; ++i)
        for (int a = 0; a < q; ++a) images[i * q + a] = x.top()(i) * q + x.bottom()[i](a);
    return Permutation(std::move(images));
}

WreathGroup::WreathGroup(int m, int q, std::vector<WreathElement> generators)
    : m_(m), q_(q), gens_(std::move(generators)) {
    if (m < 1 || q < 2) throw error(errc::invalid_argument, "wreath group: bad context");
    for (const auto& g : gens_)
        if (g.m() != m || g.q() != q)
            throw error(errc::invalid_argument, "wreath group: generator context mismatch");
}

const PermGroup& WreathGroup::point_group() const {
    if (!point_group_) {
        std::vector<Permutation> images;
        images.reserve(gens_.size());
        for (const auto& g : gens_) images.push_back(to_point_perm(g));
        point_group_ = std::make_shared<PermGroup>(m_ * q_, std::move(images));
    }
    return *point_group_;
}

PermGroup WreathGroup::top_group() const {
    std::vector<Permutation> tops;
    tops.reserve(gens_.size());
    for (const auto& g : gens_) tops.push_back(g.top());
    return PermGroup(m_, std::move(tops));
}

WreathGroup diag_embed(const PermGroup& t, int m) {
    std::vector<WreathElement> gens;
    for (const auto& h : t.generators())
        gens.emplace_back(std::vector<Permutation>(m, h), Permutation(m));
    return WreathGroup(m, t.degree(), std::move(gens));
}

Code orbit_of_vertex(const WreathGroup& x, const Vertex& v, unsigned long long bound) {
    if (v.length() != x.m() || v.alphabet() != x.q())
        throw error(errc::invalid_argument, "orbit_of_vertex: context mismatch");
    VertexSet seen{v};
    std::deque<Vertex> queue{v};
    std::vector<Vertex> out{v};
    while (!queue.empty()) {
        Vertex cur = std::move(queue.front());
        queue.pop_front();
        for (const auto& g : x.generators()) {
            Vertex img = apply(g, cur);
            if (seen.insert(img).second) {
                if (seen.size() > bound)
                    throw error(errc::bound_exceeded, "orbit_of_vertex: bound exceeded");
                out.push_back(img);
                queue.push_back(std::move(img));
            }
        }
    }
    return Code(x.m(), x.q(), std::move(out));
}

bool is_orbit(const WreathGroup& x, const Code& s, unsigned long long bound) {
    Code orbit = orbit_of_vertex(x, s.word(0), bound);
    return orbit == s;
}

namespace {

using ElemSet = std::unordered_set<WreathElement, WreathElementHash>;

std::vector<WreathElement> dedup_nonidentity(const std::vector<WreathElement>& gens) {
    ElemSet seen;
    std::vector<WreathElement> out;
    for (const auto& g : gens) {
        if (g.is_identity()) continue;
        if (seen.insert(g).second) out.push_back(g);
    }
    return out;
}

/// One labelled Schreier-Sims level over the top action: the returned
/// Schreier generators generate the stabilizer of base inside <gens>.
std::vector<WreathElement> schreier_level(const std::vector<WreathElement>& gens, int base,
                                          unsigned long long gen_bound) {
    std::unordered_map<int, WreathElement> transversal;
    std::vector<int> orbit{base};
    transversal.emplace(base, WreathElement::identity(gens[0].m(), gens[0].q()));
    for (std::size_t head = 0; head < orbit.size(); ++head) {
        int p = orbit[head];
        for (const auto& s : gens) {
            int t = s.top()(p);
            if (!transversal.count(t)) {
                transversal.emplace(t, compose(transversal.at(p), s));
                orbit.push_back(t);
            }
        }
    }
    ElemSet seen;
    std::vector<WreathElement> out;
    for (int p : orbit) {
        const auto& u_p = transversal.at(p);
        for (const auto& s : gens) {
            WreathElement sg = compose(compose(u_p, s), inverse(transversal.at(s.top()(p))));
            if (sg.is_identity()) continue;
            if (seen.insert(sg).second) {
                out.push_back(sg);
                if (out.size() > gen_bound)
                    throw error(errc::bound_exceeded, "stabilizer chain: generator bound exceeded");
            }
        }
    }
    return out;
}

int smallest_top_moved(const std::vector<WreathElement>& gens) {
    int best = -1;
    for (const auto& g : gens)
        for (int i = 0; i < g.m(); ++i)
            if (g.top()(i) != i) {
                if (best < 0 || i < best) best = i;
                break;
            }
    return best;
}

}  // namespace

std::vector<WreathElement> reduce_wreath_generators(int m, int q,
                                                    const std::vector<WreathElement>& gens) {
    std::vector<WreathElement> kept;
    std::vector<Permutation> images;
    std::shared_ptr<StabilizerChain> chain;
    for (const auto& x : gens) {
        Permutation p = to_point_perm(x);
        if (p.is_identity()) continue;
        if (chain && chain->contains(p)) continue;
        kept.push_back(x);
        images.push_back(std::move(p));
        chain = std::make_shared<StabilizerChain>(m * q, images, false);
    }
    return kept;
}

WreathGroup base_kernel(const WreathGroup& x, unsigned long long top_bound) {
    std::vector<WreathElement> cur = dedup_nonidentity(x.generators());
    while (true) {
        int base = smallest_top_moved(cur);
        if (base < 0) break;
        cur = schreier_level(cur, base, top_bound);
    }
    return WreathGroup(x.m(), x.q(), reduce_wreath_generators(x.m(), x.q(), cur));
}

WreathGroup entry_stabilizer(const WreathGroup& x, int i) {
    if (i < 0 || i >= x.m())
        throw error(errc::invalid_argument, "entry_stabilizer: coordinate out of range");
    std::vector<WreathElement> cur = dedup_nonidentity(x.generators());
    if (cur.empty()) return WreathGroup(x.m(), x.q(), {});
    auto stab = schreier_level(cur, i, 1000000);
    return WreathGroup(x.m(), x.q(), reduce_wreath_generators(x.m(), x.q(), stab));
}

WreathGroup block_stabilizer(const WreathGroup& x, const std::vector<int>& J,
                             unsigned long long top_bound) {
    std::vector<Permutation> tops;
    for (const auto& g : x.generators()) tops.push_back(g.top());
    StabilizerChain top_chain(x.m(), tops, true);
    PermGroup top_group(x.m(), tops);
    PermGroup setwise = top_group.setwise_stabilizer(J, top_bound);

    std::vector<WreathElement> gens;
    for (const auto& t : setwise.generators()) {
        Word word;
        if (!top_chain.contains(t, &word))
            throw error(errc::verification_failed, "block_stabilizer: lift failed");
        WreathElement lift = WreathElement::identity(x.m(), x.q());
        for (int32_t k : word) {
            const WreathElement& g = x.generators()[k >= 0 ? k : -(k + 1)];
            lift = compose(lift, k >= 0 ? g : inverse(g));
        }
        if (mu(lift) != t) throw error(errc::verification_failed, "block_stabilizer: bad lift");
        gens.push_back(std::move(lift));
    }
    WreathGroup kernel = base_kernel(x, top_bound);
    for (const auto& g : kernel.generators()) gens.push_back(g);
    return WreathGroup(x.m(), x.q(), reduce_wreath_generators(x.m(), x.q(), gens));
}

WreathGroup chi_restrict(const WreathGroup& x, const std::vector<int>& J) {
    std::vector<int> j = J;
    std::sort(j.begin(), j.end());
    std::vector<WreathElement> gens;
    gens.reserve(x.generators().size());
    for (const auto& g : x.generators()) gens.push_back(chi_restrict(g, j));
    return WreathGroup(static_cast<int>(j.size()), x.q(), std::move(gens));
}

PermGroup alphabet_group(const WreathGroup& x, int i) {
    WreathGroup stab = entry_stabilizer(x, i);
    std::vector<Permutation> gens;
    gens.reserve(stab.generators().size());
    for (const auto& g : stab.generators()) gens.push_back(phi_i(g, i));
    return PermGroup(x.q(), std::move(gens));
}

}  // namespace ntc
