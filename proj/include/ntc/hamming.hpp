#pragma once

#include <cstdint>
#include <optional>
#include <unordered_set>
#include <vector>

#include "ntc/permutation.hpp"

namespace ntc {

/// An m-tuple over the alphabet {0,...,q-1}.
class Vertex {
public:
    Vertex() = default;
    Vertex(std::vector<int> symbols, int q);

    int length() const { return static_cast<int>(symbols_.size()); }
    int alphabet() const { return q_; }
    int operator[](int i) const { return symbols_[i]; }
    const std::vector<int>& symbols() const { return symbols_; }

    Vertex with_symbol(int coordinate, int symbol) const;  // nu(alpha, i, a)

    bool operator==(const Vertex& o) const { return q_ == o.q_ && symbols_ == o.symbols_; }
    bool operator!=(const Vertex& o) const { return !(*this == o); }
    bool operator<(const Vertex& o) const { return symbols_ < o.symbols_; }

private:
    std::vector<int> symbols_;
    int q_ = 0;
};

struct VertexHash {
    std::size_t operator()(const Vertex& v) const {
        std::size_t h = 1469598103934665603ull;
        for (int s : v.symbols()) {
            h ^= static_cast<std::size_t>(s);
            h *= 1099511628211ull;
        }
        return h;
    }
};

using VertexSet = std::unordered_set<Vertex, VertexHash>;

int distance(const Vertex& a, const Vertex& b);
Vertex nu(const Vertex& a, int coordinate, int symbol);
std::vector<Vertex> sphere(const Vertex& a, int radius);

/// A finite, deduplicated, lexicographically ordered set of vertices of H(m,q).
class Code {
public:
    Code(int m, int q, std::vector<Vertex> words);  // canonicalizes

    int length() const { return m_; }
    int alphabet() const { return q_; }
    std::size_t size() const { return words_.size(); }
    const std::vector<Vertex>& words() const { return words_; }
    const Vertex& word(std::size_t i) const { return words_[i]; }

    bool contains(const Vertex& v) const;
    bool is_complete() const;  // |C| == q^m
    unsigned long long space_size() const;

    bool operator==(const Code& o) const {
        return m_ == o.m_ && q_ == o.q_ && words_ == o.words_;
    }

private:
    int m_, q_;
    std::vector<Vertex> words_;
    VertexSet index_;
};

struct DistancePartition {
    std::vector<Code> cells;  // cells[0] == C
    int rho() const { return static_cast<int>(cells.size()) - 1; }
};

int min_distance(const Code& c);
int min_distance(const Code& c, int threads);
int distance_to_code(const Vertex& v, const Code& c);

/// Neighbour set C_1, built by frontier expansion; empty if C is complete.
Code neighbour_set(const Code& c);

DistancePartition distance_partition(const Code& c, unsigned long long visit_bound = 100000000);
int covering_radius(const Code& c, unsigned long long visit_bound = 100000000);

Code project(const Code& c, const std::vector<int>& coords);
Vertex project(const Vertex& v, const std::vector<int>& coords);

}  // namespace ntc
