#include "gblab/basis.hpp"

#include <algorithm>
#include <stdexcept>

namespace gblab {

FockBasis::FockBasis(std::vector<Mode> modes, int n_max, std::size_t dimension_bound)
    : modes_(std::move(modes)), n_max_(n_max) {
    if (modes_.empty()) {
        throw std::invalid_argument("FockBasis: mode list is empty");
    }
    if (n_max_ < 1) {
        throw std::invalid_argument("FockBasis: n_max must be positive");
    }
    for (std::size_t i = 0; i < modes_.size(); ++i) {
        for (std::size_t j = i + 1; j < modes_.size(); ++j) {
            if (modes_[i] == modes_[j]) {
                throw std::invalid_argument("FockBasis: duplicate mode in basis");
            }
        }
    }
    const std::size_t radix = static_cast<std::size_t>(n_max_) + 1;
    std::size_t dim = 1;
    for (std::size_t i = 0; i < modes_.size(); ++i) {
        if (dim > dimension_bound / radix) {
            throw std::length_error("FockBasis: dimension bound exceeded");
        }
        dim *= radix;
    }
    dim_ = dim;
    strides_.resize(modes_.size());
    std::size_t s = dim_;
    for (std::size_t i = 0; i < modes_.size(); ++i) {
        s /= radix;
        strides_[i] = s;
    }
}

std::vector<int> FockBasis::occupations(std::size_t state) const {
    std::vector<int> out(modes_.size());
    for (std::size_t i = 0; i < modes_.size(); ++i) {
        out[i] = occupation(state, i);
    }
    return out;
}

std::size_t FockBasis::index_of(std::span<const int> occupations) const {
    if (occupations.size() != modes_.size()) {
        throw std::invalid_argument("FockBasis: occupation vector length mismatch");
    }
    std::size_t idx = 0;
    for (std::size_t i = 0; i < modes_.size(); ++i) {
        if (occupations[i] < 0 || occupations[i] > n_max_) {
            throw std::out_of_range("FockBasis: occupation outside cutoff");
        }
        idx += static_cast<std::size_t>(occupations[i]) * strides_[i];
    }
    return idx;
}

std::size_t FockBasis::mode_index(const Mode& m) const {
    if (auto i = find_mode(m)) return *i;
    throw std::invalid_argument("FockBasis: unknown mode");
}

std::optional<std::size_t> FockBasis::find_mode(const Mode& m) const {
    const auto it = std::find(modes_.begin(), modes_.end(), m);
    if (it == modes_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - modes_.begin());
}

std::optional<std::size_t> FockBasis::find_mode(const Vec3& k, Polarization p) const {
    for (std::size_t i = 0; i < modes_.size(); ++i) {
        if (modes_[i].momentum == k && modes_[i].pol == p) return i;
    }
    return std::nullopt;
}

BasisPtr build_basis(std::vector<Mode> modes, int n_max, std::size_t dimension_bound) {
    return std::make_shared<const FockBasis>(std::move(modes), n_max, dimension_bound);
}

std::vector<Mode> all_polarizations(std::span<const Vec3> momenta) {
    std::vector<Mode> out;
    out.reserve(momenta.size() * 4);
    for (const Vec3& k : momenta) {
        for (int l = 0; l < 4; ++l) {
            out.emplace_back(k, static_cast<Polarization>(l));
        }
    }
    return out;
}

std::vector<Mode> scalar_longitudinal_pair(std::span<const Vec3> momenta) {
    std::vector<Mode> out;
    out.reserve(momenta.size() * 2);
    for (const Vec3& k : momenta) {
        out.emplace_back(k, Polarization::scalar);
        out.emplace_back(k, Polarization::longitudinal);
    }
    return out;
}

}  // namespace gblab
