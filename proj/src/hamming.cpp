#include "ntc/hamming.hpp"

#include <algorithm>
#include <functional>
#include <thread>

namespace ntc {

Vertex::Vertex(std::vector<int> symbols, int q) : symbols_(std::move(symbols)), q_(q) {
    if (q < 2) throw error(errc::invalid_argument, "alphabet size must be at least 2");
    for (int s : symbols_)
        if (s < 0 || s >= q) throw error(errc::invalid_argument, "symbol out of alphabet range");
}

Vertex Vertex::with_symbol(int coordinate, int symbol) const {
    if (coordinate < 0 || coordinate >= length())
        throw error(errc::invalid_argument, "coordinate out of range");
    if (symbol < 0 || symbol >= q_)
        throw error(errc::invalid_argument, "symbol out of alphabet range");
    Vertex out = *this;
    out.symbols_[coordinate] = symbol;
    return out;
}

int distance(const Vertex& a, const Vertex& b) {
    if (a.length() != b.length() || a.alphabet() != b.alphabet())
        throw error(errc::invalid_argument, "distance: context mismatch");
    int d = 0;
    for (int i = 0; i < a.length(); ++i)
        if (a[i] != b[i]) ++d;
    return d;
}

Vertex nu(const Vertex& a, int coordinate, int symbol) { return a.with_symbol(coordinate, symbol); }

std::vector<Vertex> sphere(const Vertex& a, int radius) {
    if (radius < 0 || radius > a.length())
        throw error(errc::invalid_argument, "sphere: radius out of range");
    std::vector<Vertex> out;
    std::vector<int> coords(radius);
    // choose the differing coordinates, then the replacement symbols
    std::function<void(int, Vertex&)> fill_symbols = [&](int idx, Vertex& v) {
        if (idx == radius) {
            out.push_back(v);
            return;
        }
        int c = coords[idx];
        int orig = a[c];
        for (int s = 0; s < a.alphabet(); ++s) {
            if (s == orig) continue;
            Vertex w = v.with_symbol(c, s);
            fill_symbols(idx + 1, w);
        }
    };
    std::function<void(int, int)> pick_coords = [&](int start, int idx) {
        if (idx == radius) {
            Vertex v = a;
            fill_symbols(0, v);
            return;
        }
        for (int c = start; c < a.length(); ++c) {
            coords[idx] = c;
            pick_coords(c + 1, idx + 1);
        }
    };
    pick_coords(0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

Code::Code(int m, int q, std::vector<Vertex> words) : m_(m), q_(q), words_(std::move(words)) {
    if (words_.empty()) throw error(errc::invalid_argument, "code must be nonempty");
    for (const auto& w : words_)
        if (w.length() != m || w.alphabet() != q)
            throw error(errc::invalid_argument, "codeword context mismatch");
    std::sort(words_.begin(), words_.end());
    words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
    index_.insert(words_.begin(), words_.end());
}

bool Code::contains(const Vertex& v) const { return index_.count(v) > 0; }

unsigned long long Code::space_size() const {
    unsigned long long n = 1;
    for (int i = 0; i < m_; ++i) {
        if (n > 1ull << 62) return 1ull << 62;  // saturate; only compared against |C|
        n *= static_cast<unsigned long long>(q_);
    }
    return n;
}

bool Code::is_complete() const { return size() == space_size(); }

int min_distance(const Code& c) { return min_distance(c, 1); }

int min_distance(const Code& c, int threads) {
    if (c.size() < 2) throw error(errc::invalid_argument, "min_distance needs at least 2 words");
    const auto& w = c.words();
    auto scan = [&](std::size_t lo, std::size_t hi) {
        int best = c.length() + 1;
        for (std::size_t i = lo; i < hi; ++i)
            for (std::size_t j = i + 1; j < w.size(); ++j) {
                int d = distance(w[i], w[j]);
                if (d < best) best = d;
            }
        return best;
    };
    if (threads <= 1 || w.size() < 256) return scan(0, w.size());
    std::vector<int> results(threads, c.length() + 1);
    std::vector<std::thread> pool;
    std::size_t chunk = (w.size() + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
        std::size_t lo = std::min(w.size(), t * chunk);
        std::size_t hi = std::min(w.size(), lo + chunk);
        pool.emplace_back([&, t, lo, hi] { results[t] = scan(lo, hi); });
    }
    for (auto& th : pool) th.join();
    return *std::min_element(results.begin(), results.end());
}

int distance_to_code(const Vertex& v, const Code& c) {
    if (v.length() != c.length() || v.alphabet() != c.alphabet())
        throw error(errc::invalid_argument, "distance_to_code: context mismatch");
    int best = c.length();
    for (const auto& w : c.words()) {
        int d = distance(v, w);
        if (d < best) best = d;
        if (best == 0) break;
    }
    return best;
}

namespace {

/// All vertices adjacent to members of `from`, excluding `excluded` sets.
std::vector<Vertex> expand_frontier(const std::vector<Vertex>& from,
                                    const std::vector<const VertexSet*>& excluded, int q) {
    VertexSet seen;
    std::vector<Vertex> out;
    for (const auto& v : from)
        for (int i = 0; i < v.length(); ++i)
            for (int s = 0; s < q; ++s) {
                if (s == v[i]) continue;
                Vertex n = v.with_symbol(i, s);
                if (seen.count(n)) continue;
                bool skip = false;
                for (const auto* ex : excluded)
                    if (ex->count(n)) {
                        skip = true;
                        break;
                    }
                if (skip) continue;
                seen.insert(n);
                out.push_back(std::move(n));
            }
    return out;
}

VertexSet as_set(const std::vector<Vertex>& v) { return VertexSet(v.begin(), v.end()); }

}  // namespace

Code neighbour_set(const Code& c) {
    VertexSet cset = as_set(c.words());
    auto frontier = expand_frontier(c.words(), {&cset}, c.alphabet());
    if (frontier.empty())
        throw error(errc::invalid_argument, "neighbour_set: code is the complete code");
    return Code(c.length(), c.alphabet(), std::move(frontier));
}

DistancePartition distance_partition(const Code& c, unsigned long long visit_bound) {
    DistancePartition dp;
    dp.cells.push_back(c);
    VertexSet prev;  // C_{i-1}
    VertexSet cur = as_set(c.words());
    unsigned long long visited = c.size();
    while (true) {
        auto frontier = expand_frontier(dp.cells.back().words(), {&cur, &prev}, c.alphabet());
        if (frontier.empty()) break;
        visited += frontier.size();
        if (visited > visit_bound)
            throw error(errc::bound_exceeded, "distance_partition: visit bound exceeded");
        prev = std::move(cur);
        cur = as_set(frontier);
        dp.cells.push_back(Code(c.length(), c.alphabet(), std::move(frontier)));
    }
    return dp;
}

int covering_radius(const Code& c, unsigned long long visit_bound) {
    return distance_partition(c, visit_bound).rho();
}

Vertex project(const Vertex& v, const std::vector<int>& coords) {
    std::vector<int> symbols;
    symbols.reserve(coords.size());
    for (int c : coords) {
        if (c < 0 || c >= v.length())
            throw error(errc::invalid_argument, "project: coordinate out of range");
        symbols.push_back(v[c]);
    }
    return Vertex(std::move(symbols), v.alphabet());
}

Code project(const Code& c, const std::vector<int>& coords) {
    if (coords.empty()) throw error(errc::invalid_argument, "project: empty coordinate set");
    std::vector<Vertex> words;
    words.reserve(c.size());
    for (const auto& w : c.words()) words.push_back(project(w, coords));
    return Code(static_cast<int>(coords.size()), c.alphabet(), std::move(words));
}

}  // namespace ntc
