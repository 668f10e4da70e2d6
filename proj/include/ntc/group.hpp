#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <unordered_map>
#include <vector>

#include "ntc/permutation.hpp"

namespace ntc {

/// Word in the group's original generators: value k means generator k,
/// value -(k+1) means its inverse. Applied left to right.
using Word = std::vector<int32_t>;

Word inverse_word(const Word& w);

/// Stabilizer chain built by deterministic Schreier-Sims with full Schreier
/// generator closure per level. Transversal words (in the original
/// generators) are kept only when requested; they back GroupHom::map_element.
class StabilizerChain {
public:
    struct Level {
        int base = -1;
        std::vector<Permutation> gens;  // generators of this level's group
        std::vector<Word> gen_words;
        std::vector<int> orbit;  // BFS order, orbit[0] == base
        std::unordered_map<int, int> orbit_index;
        std::vector<Permutation> transversal;  // transversal[i] maps base -> orbit[i]
        std::vector<Word> transversal_words;
    };

    StabilizerChain(int degree, const std::vector<Permutation>& generators, bool with_words,
                    const std::vector<int>& forced_base = {});

    unsigned long long order() const;
    const std::vector<Level>& levels() const { return levels_; }
    int degree() const { return degree_; }
    bool with_words() const { return with_words_; }

    /// True iff p sifts to the identity. On success and when words are kept,
    /// *word receives a factorization of p in the original generators.
    bool contains(const Permutation& p, Word* word = nullptr) const;

    /// Generators (with words if kept) of the stabilizer of forced_base[0..k-1];
    /// level k of the chain. k=0 returns the whole group's generators.
    std::vector<Permutation> level_generators(std::size_t k) const;

private:
    int degree_;
    bool with_words_;
    std::vector<Level> levels_;
    std::vector<Permutation> top_gens_;  // original (deduplicated) generators
    std::vector<Word> top_words_;
};

/// Finite permutation group given by generators; stabilizer chain built lazily.
class PermGroup {
public:
    explicit PermGroup(int degree);  // trivial group
    PermGroup(int degree, std::vector<Permutation> generators);

    int degree() const { return degree_; }
    const std::vector<Permutation>& generators() const { return gens_; }

    const StabilizerChain& chain() const;
    const StabilizerChain& chain_with_words() const;
    StabilizerChain chain_with_base(const std::vector<int>& forced_base) const;

    unsigned long long order() const { return chain().order(); }
    bool is_trivial() const { return order() == 1; }
    bool contains(const Permutation& p) const;

    std::vector<int> orbit(int point) const;
    std::vector<std::vector<int>> orbits() const;
    bool is_transitive() const;
    bool is_2transitive() const;
    bool is_semiregular() const;
    bool is_regular() const;

    /// All elements, lexicographically ordered by image array.
    std::vector<Permutation> elements(unsigned long long bound = 1000000) const;

    PermGroup point_stabilizer(int point) const;
    PermGroup setwise_stabilizer(const std::vector<int>& points,
                                 unsigned long long bound = 1000000) const;

    int minimal_degree(unsigned long long bound = 1000000) const;

    PermGroup normal_closure(const std::vector<Permutation>& elems) const;
    std::vector<PermGroup> minimal_normal_subgroups(unsigned long long bound = 1000000) const;
    PermGroup socle(unsigned long long bound = 1000000) const;

    /// Subgroup test: every generator of h lies in *this.
    bool contains_subgroup(const PermGroup& h) const;
    bool same_group(const PermGroup& h) const;

private:
    int degree_;
    std::vector<Permutation> gens_;
    mutable std::shared_ptr<const StabilizerChain> chain_;        // default base
    mutable std::shared_ptr<const StabilizerChain> word_chain_;   // default base + words
};

/// Drop generators that do not enlarge the group; keeps first occurrences.
std::vector<Permutation> reduce_generators(int degree, const std::vector<Permutation>& gens);

/// Relabeling c with conjugate(gens1[i], c) == gens2[i] for all i, if one
/// exists; requires <gens1> transitive. Found by propagating the image of
/// point 0 along the orbit and verifying.
std::optional<Permutation> action_conjugator(const std::vector<Permutation>& gens1,
                                             const std::vector<Permutation>& gens2, int degree);

/// Generator-correspondence map between two permutation actions.
/// Well-definedness (word independence) is the caller's obligation; it is
/// spot-checked by tests, and PairedAction validation implies it.
class GroupHom {
public:
    GroupHom(PermGroup source, std::vector<Permutation> target_images, int target_degree);

    const PermGroup& source() const { return source_; }
    const std::vector<Permutation>& target_images() const { return target_images_; }
    int target_degree() const { return target_degree_; }

    Permutation map_element(const Permutation& g) const;

private:
    PermGroup source_;
    std::vector<Permutation> target_images_;
    int target_degree_;
};

/// Transitive action of G on the right cosets of H, with coset H at point 0.
class CosetAction {
public:
    CosetAction(const PermGroup& g, const PermGroup& h, unsigned long long index_bound = 10000);

    const PermGroup& action() const { return action_; }
    int index() const { return action_.degree(); }
    const std::vector<Permutation>& coset_reps() const { return reps_; }

    /// Image in the coset action of an arbitrary element of G.
    Permutation image_of(const Permutation& g) const;

private:
    int coset_of(const Permutation& g) const;  // index of coset H*g

    PermGroup h_;
    std::vector<Permutation> reps_;
    PermGroup action_;
};

}  // namespace ntc
