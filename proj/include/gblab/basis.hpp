#ifndef GBLAB_BASIS_HPP
#define GBLAB_BASIS_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "gblab/mode.hpp"

namespace gblab {

// Truncated multi-mode occupation basis. States are ordered
// lexicographically in the occupation vector (first mode is the most
// significant digit), so the layout is reproducible bit for bit.
class FockBasis {
public:
    static constexpr std::size_t default_dimension_bound = std::size_t{1} << 22;

    FockBasis(std::vector<Mode> modes, int n_max,
              std::size_t dimension_bound = default_dimension_bound);

    const std::vector<Mode>& modes() const { return modes_; }
    std::size_t n_modes() const { return modes_.size(); }
    int n_max() const { return n_max_; }
    std::size_t dim() const { return dim_; }
    std::size_t stride(std::size_t mode_index) const { return strides_[mode_index]; }

    // occupation of one mode in the given basis state
    int occupation(std::size_t state, std::size_t mode_index) const {
        return static_cast<int>((state / strides_[mode_index]) %
                                static_cast<std::size_t>(n_max_ + 1));
    }
    std::vector<int> occupations(std::size_t state) const;
    std::size_t index_of(std::span<const int> occupations) const;

    std::size_t mode_index(const Mode& m) const;  // throws if unknown
    std::optional<std::size_t> find_mode(const Mode& m) const;
    std::optional<std::size_t> find_mode(const Vec3& k, Polarization p) const;
    bool contains(const Vec3& k, Polarization p) const {
        return find_mode(k, p).has_value();
    }

private:
    std::vector<Mode> modes_;
    int n_max_;
    std::size_t dim_;
    std::vector<std::size_t> strides_;
};

using BasisPtr = std::shared_ptr<const FockBasis>;

BasisPtr build_basis(std::vector<Mode> modes, int n_max,
                     std::size_t dimension_bound = FockBasis::default_dimension_bound);

// Convenience: the four polarizations of each momentum, in enum order.
std::vector<Mode> all_polarizations(std::span<const Vec3> momenta);
// The indefinite/longitudinal pair (lambda = 0, 3) of each momentum.
std::vector<Mode> scalar_longitudinal_pair(std::span<const Vec3> momenta);

}  // namespace gblab

#endif
