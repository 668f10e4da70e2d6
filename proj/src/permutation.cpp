#include "ntc/permutation.hpp"

#include <algorithm>
#include <sstream>

namespace ntc {

Permutation::Permutation(int degree) {
    if (degree < 0) throw error(errc::invalid_argument, "negative permutation degree");
    images_.resize(degree);
    for (int i = 0; i < degree; ++i) images_[i] = i;
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<char> seen(images_.size(), 0);
    for (int v : images_) {
        if (v < 0 || v >= degree() || seen[v])
            throw error(errc::invalid_argument, "image array is not a bijection");
        seen[v] = 1;
    }
}

Permutation Permutation::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
    Permutation p(degree);
    for (const auto& cyc : cycles) {
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            int from = cyc[i];
            int to = cyc[(i + 1) % cyc.size()];
            if (from < 0 || from >= degree)
                throw error(errc::invalid_argument, "cycle point out of range");
            if (p.images_[from] != from)
                throw error(errc::invalid_argument, "point repeated across cycles");
            p.images_[from] = to;
        }
    }
    return Permutation(std::move(p.images_));  // re-validate
}

bool Permutation::is_identity() const {
    for (int i = 0; i < degree(); ++i)
        if (images_[i] != i) return false;
    return true;
}

int Permutation::moved_points() const {
    int n = 0;
    for (int i = 0; i < degree(); ++i)
        if (images_[i] != i) ++n;
    return n;
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(images_.size());
    for (int i = 0; i < degree(); ++i) inv[images_[i]] = i;
    Permutation p;
    p.images_ = std::move(inv);
    return p;
}

std::vector<std::vector<int>> Permutation::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(images_.size(), 0);
    for (int start = 0; start < degree(); ++start) {
        if (seen[start] || images_[start] == start) continue;
        std::vector<int> cyc;
        for (int p = start; !seen[p]; p = images_[p]) {
            seen[p] = 1;
            cyc.push_back(p);
        }
        out.push_back(std::move(cyc));
    }
    return out;
}

std::string Permutation::to_cycle_string() const {
    auto cycs = cycles();
    if (cycs.empty()) return "()";
    std::ostringstream os;
    for (const auto& cyc : cycs) {
        os << '(';
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            if (i) os << ' ';
            os << cyc[i];
        }
        os << ')';
    }
    return os.str();
}

Permutation compose(const Permutation& lhs, const Permutation& rhs) {
    if (lhs.degree() != rhs.degree())
        throw error(errc::invalid_argument, "compose: degree mismatch");
    std::vector<int> images(lhs.degree());
    for (int i = 0; i < lhs.degree(); ++i) images[i] = rhs(lhs(i));
    return Permutation(std::move(images));
}

Permutation conjugate(const Permutation& lhs, const Permutation& rhs) {
    return compose(compose(rhs.inverse(), lhs), rhs);
}

Permutation stack(const Permutation& lhs, const Permutation& rhs) {
    std::vector<int> images(lhs.degree() + rhs.degree());
    for (int i = 0; i < lhs.degree(); ++i) images[i] = lhs(i);
    for (int i = 0; i < rhs.degree(); ++i) images[lhs.degree() + i] = lhs.degree() + rhs(i);
    return Permutation(std::move(images));
}

Permutation restrict_block(const Permutation& p, int offset, int length) {
    std::vector<int> images(length);
    for (int i = 0; i < length; ++i) {
        int img = p(offset + i);
        if (img < offset || img >= offset + length)
            throw error(errc::invalid_argument, "restrict_block: block not fixed setwise");
        images[i] = img - offset;
    }
    return Permutation(std::move(images));
}

}  // namespace ntc
