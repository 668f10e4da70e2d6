#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ntc {

/// Error kinds map onto CLI exit codes (see README).
enum class errc { invalid_argument, bound_exceeded, parse_error, verification_failed };

class error : public std::runtime_error {
public:
    error(errc kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    errc kind() const { return kind_; }

private:
    errc kind_;
};

/// A permutation of {0,...,n-1}, stored as an image array.
/// Composition convention project-wide: compose(p, r) applies p first, then r.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(int degree);                 // identity
    explicit Permutation(std::vector<int> images);    // validates bijection

    static Permutation from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

    int degree() const { return static_cast<int>(images_.size()); }
    int operator()(int point) const { return images_[point]; }
    const std::vector<int>& images() const { return images_; }

    bool is_identity() const;
    int moved_points() const;                         // count of non-fixed points
    int fixed_points() const { return degree() - moved_points(); }
    Permutation inverse() const;

    std::vector<std::vector<int>> cycles() const;     // nontrivial cycles, canonical order
    std::string to_cycle_string() const;

    bool operator==(const Permutation& o) const { return images_ == o.images_; }
    bool operator!=(const Permutation& o) const { return images_ != o.images_; }
    bool operator<(const Permutation& o) const { return images_ < o.images_; }

private:
    std::vector<int> images_;
};

/// apply lhs first, then rhs
Permutation compose(const Permutation& lhs, const Permutation& rhs);

/// rhs^-1 * lhs * rhs, i.e. the conjugate of lhs by rhs
Permutation conjugate(const Permutation& lhs, const Permutation& rhs);

/// act on the disjoint union: lhs on [0,lhs.degree()), rhs shifted above it
Permutation stack(const Permutation& lhs, const Permutation& rhs);

/// restriction to [offset, offset+length), which the permutation must fix setwise
Permutation restrict_block(const Permutation& p, int offset, int length);

struct PermutationHash {
    std::size_t operator()(const Permutation& p) const {
        std::size_t h = 1469598103934665603ull;
        for (int v : p.images()) {
            h ^= static_cast<std::size_t>(v);
            h *= 1099511628211ull;
        }
        return h;
    }
};

}  // namespace ntc
