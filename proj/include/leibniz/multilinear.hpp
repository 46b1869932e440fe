#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "leibniz/rational.hpp"

namespace leibniz {

/// Dense multilinear map Q^{d_1} x ... x Q^{d_k} -> Q^out. Coefficients are
/// stored with the input multi-index row-major and the output coordinate last.
class MultilinearMap {
public:
    MultilinearMap() = default;
    MultilinearMap(std::vector<std::size_t> input_dims, std::size_t output_dim);

    const std::vector<std::size_t>& input_dims() const noexcept { return input_dims_; }
    std::size_t arity() const noexcept { return input_dims_.size(); }
    std::size_t output_dim() const noexcept { return output_dim_; }
    std::span<const Rational> data() const noexcept { return data_; }

    /// Value on a tuple of basis vectors.
    std::span<const Rational> at(std::span<const std::size_t> idx) const;
    std::span<Rational> at(std::span<const std::size_t> idx);
    std::span<const Rational> at(std::initializer_list<std::size_t> idx) const {
        return at(std::span<const std::size_t>(idx.begin(), idx.size()));
    }
    std::span<Rational> at(std::initializer_list<std::size_t> idx) {
        return at(std::span<const std::size_t>(idx.begin(), idx.size()));
    }
    void set(std::span<const std::size_t> idx, std::span<const Rational> value);

    /// Multilinear extension to arbitrary arguments.
    Vector apply(std::span<const Vector> args) const;

    bool is_zero() const { return leibniz::is_zero(std::span<const Rational>(data_)); }
    bool operator==(const MultilinearMap& rhs) const = default;

private:
    std::size_t offset(std::span<const std::size_t> idx) const;

    std::vector<std::size_t> input_dims_;
    std::size_t output_dim_ = 0;
    std::vector<Rational> data_;
};

}  // namespace leibniz
