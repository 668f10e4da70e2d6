#include "ntc/codes.hpp"

#include <algorithm>
#include <functional>

namespace ntc {

Code rep_code(int m, int q) {
    if (m < 2 || q < 2) throw error(errc::invalid_argument, "rep_code: need m,q >= 2");
    std::vector<Vertex> words;
    words.reserve(q);
    for (int a = 0; a < q; ++a) words.emplace_back(std::vector<int>(m, a), q);
    return Code(m, q, std::move(words));
}

namespace {

unsigned long long multinomial(int p, int q, unsigned long long bound) {
    // (pq)! / (p!)^q, computed as a product of binomials
    unsigned long long total = 1;
    int remaining = p * q;
    for (int sym = 0; sym < q; ++sym) {
        // choose p positions out of remaining
        unsigned long long binom = 1;
        for (int i = 1; i <= p; ++i) {
            binom = binom * (remaining - p + i) / i;
            if (binom > bound) return bound + 1;
        }
        remaining -= p;
        if (total > bound / binom) return bound + 1;
        total *= binom;
    }
    return total;
}

}  // namespace

Code all_code(int p, int q, unsigned long long bound) {
    if (p < 1 || q < 2) throw error(errc::invalid_argument, "all_code: need p >= 1, q >= 2");
    if (multinomial(p, q, bound) > bound)
        throw error(errc::bound_exceeded, "all_code: enumeration bound exceeded");
    int m = p * q;
    std::vector<Vertex> words;
    std::vector<int> counts(q, 0), cur(m, 0);
    std::function<void(int)> rec = [&](int i) {
        if (i == m) {
            words.emplace_back(cur, q);
            return;
        }
        for (int s = 0; s < q; ++s) {
            if (counts[s] == p) continue;
            ++counts[s];
            cur[i] = s;
            rec(i + 1);
            --counts[s];
        }
    };
    rec(0);
    return Code(m, q, std::move(words));
}

Code injective_code(int m, int q) {
    if (m < 1 || m >= q) throw error(errc::invalid_argument, "injective_code: need 1 <= m < q");
    std::vector<Vertex> words;
    std::vector<char> used(q, 0);
    std::vector<int> cur(m, 0);
    std::function<void(int)> rec = [&](int i) {
        if (i == m) {
            words.emplace_back(cur, q);
            return;
        }
        for (int s = 0; s < q; ++s) {
            if (used[s]) continue;
            used[s] = 1;
            cur[i] = s;
            rec(i + 1);
            used[s] = 0;
        }
    };
    rec(0);
    return Code(m, q, std::move(words));
}

Code weight_code(int m) {
    if (m < 3 || m % 2 == 0) throw error(errc::invalid_argument, "weight_code: need odd m >= 3");
    std::vector<Vertex> words;
    for (int mask = 0; mask < (1 << m); ++mask) {
        int w = __builtin_popcount(mask);
        if (w != (m - 1) / 2 && w != (m + 1) / 2) continue;
        std::vector<int> cur(m);
        for (int i = 0; i < m; ++i) cur[i] = (mask >> i) & 1;
        words.emplace_back(std::move(cur), 2);
    }
    return Code(m, 2, std::move(words));
}

Code prod_code(const Code& c, int ell, unsigned long long bound) {
    if (ell < 1) throw error(errc::invalid_argument, "prod_code: need ell >= 1");
    unsigned long long size = 1;
    for (int i = 0; i < ell; ++i) {
        if (size > bound / c.size())
            throw error(errc::bound_exceeded, "prod_code: enumeration bound exceeded");
        size *= c.size();
    }
    std::vector<Vertex> words;
    words.reserve(size);
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int block) {
        if (block == ell) {
            words.emplace_back(cur, c.alphabet());
            return;
        }
        for (const auto& w : c.words()) {
            cur.insert(cur.end(), w.symbols().begin(), w.symbols().end());
            rec(block + 1);
            cur.resize(cur.size() - w.symbols().size());
        }
    };
    rec(0);
    return Code(c.length() * ell, c.alphabet(), std::move(words));
}

Code rep_l_code(const Code& c, int ell) {
    if (ell < 1) throw error(errc::invalid_argument, "rep_l_code: need ell >= 1");
    std::vector<Vertex> words;
    words.reserve(c.size());
    for (const auto& w : c.words()) {
        std::vector<int> cur;
        cur.reserve(c.length() * ell);
        for (int i = 0; i < ell; ++i)
            cur.insert(cur.end(), w.symbols().begin(), w.symbols().end());
        words.emplace_back(std::move(cur), c.alphabet());
    }
    return Code(c.length() * ell, c.alphabet(), std::move(words));
}

Code perm_code(const PermGroup& t, unsigned long long bound) {
    std::vector<Vertex> words;
    for (const auto& g : t.elements(bound)) words.emplace_back(g.images(), t.degree());
    return Code(t.degree(), t.degree(), std::move(words));
}

PermGroup PairedAction::diagonal_group() const {
    if (group2_images.size() != group1.generators().size())
        throw error(errc::invalid_argument, "paired action: generator count mismatch");
    int q = group1.degree();
    std::vector<Permutation> gens;
    for (std::size_t i = 0; i < group2_images.size(); ++i) {
        if (group2_images[i].degree() != q)
            throw error(errc::invalid_argument, "paired action: degree mismatch");
        gens.push_back(stack(group1.generators()[i], group2_images[i]));
    }
    return PermGroup(2 * q, std::move(gens));
}

void PairedAction::validate(unsigned long long bound) const {
    PermGroup diag = diagonal_group();
    if (diag.order() != group1.order())
        throw error(errc::verification_failed,
                    "paired action: generator correspondence is not an isomorphism");
    (void)bound;
}

bool actions_inequivalent(const PairedAction& pa, unsigned long long bound) {
    int q = pa.group1.degree();
    for (const auto& e : pa.diagonal_group().elements(bound)) {
        int fix1 = 0, fix2 = 0;
        for (int i = 0; i < q; ++i) {
            if (e(i) == i) ++fix1;
            if (e(q + i) == q + i) ++fix2;
        }
        if (fix1 != fix2) return true;
    }
    // fixed-point counts can agree everywhere for inequivalent actions
    // (PSL(2,11) on 11 points); decide by searching for an intertwiner
    if (!pa.group1.is_transitive()) return false;
    return !action_conjugator(pa.group1.generators(), pa.group2_images, q).has_value();
}

Code twisted_code(const PairedAction& pa, unsigned long long bound) {
    pa.validate(bound);
    int q = pa.group1.degree();
    std::vector<Vertex> words;
    for (const auto& e : pa.diagonal_group().elements(bound)) {
        std::vector<int> cur(2 * q);
        for (int i = 0; i < q; ++i) {
            cur[i] = e(i);
            cur[q + i] = e(q + i) - q;
        }
        words.emplace_back(std::move(cur), q);
    }
    return Code(2 * q, q, std::move(words));
}

Code cayley_code(const std::vector<std::vector<int>>& table, const std::vector<int>& ordering) {
    int q = static_cast<int>(table.size());
    if (q < 2) throw error(errc::invalid_argument, "cayley_code: table too small");
    for (const auto& row : table)
        if (static_cast<int>(row.size()) != q)
            throw error(errc::invalid_argument, "cayley_code: table not square");
    // Latin square
    for (int i = 0; i < q; ++i) {
        std::vector<char> row_seen(q, 0), col_seen(q, 0);
        for (int j = 0; j < q; ++j) {
            int r = table[i][j], c = table[j][i];
            if (r < 0 || r >= q || c < 0 || c >= q || row_seen[r] || col_seen[c])
                throw error(errc::invalid_argument, "cayley_code: table is not a Latin square");
            row_seen[r] = col_seen[c] = 1;
        }
    }
    // two-sided identity
    int e = -1;
    for (int i = 0; i < q && e < 0; ++i) {
        bool ok = true;
        for (int j = 0; j < q; ++j)
            if (table[i][j] != j || table[j][i] != j) {
                ok = false;
                break;
            }
        if (ok) e = i;
    }
    if (e < 0) throw error(errc::invalid_argument, "cayley_code: table has no identity");
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b)
            for (int c = 0; c < q; ++c)
                if (table[table[a][b]][c] != table[a][table[b][c]])
                    throw error(errc::invalid_argument, "cayley_code: table is not associative");
    Permutation order_check(ordering);  // validates it is a permutation of 0..q-1
    (void)order_check;

    std::vector<Vertex> words;
    words.reserve(q);
    for (int g = 0; g < q; ++g) {
        std::vector<int> cur(q);
        for (int j = 0; j < q; ++j) cur[j] = table[ordering[j]][g];
        words.emplace_back(std::move(cur), q);
    }
    return Code(q, q, std::move(words));
}

std::vector<Vertex> c1_of_J(const Code& c, const std::vector<int>& J) {
    if (J.empty()) throw error(errc::invalid_argument, "c1_of_J: empty coordinate set");
    VertexSet seen;
    std::vector<Vertex> out;
    for (const auto& w : c.words())
        for (int j : J) {
            if (j < 0 || j >= c.length())
                throw error(errc::invalid_argument, "c1_of_J: coordinate out of range");
            for (int b = 0; b < c.alphabet(); ++b) {
                if (b == w[j]) continue;
                Vertex n = w.with_symbol(j, b);
                if (c.contains(n)) continue;
                if (seen.insert(n).second) out.push_back(std::move(n));
            }
        }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace ntc
