#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "leibniz/rational.hpp"

namespace leibniz {

/// n^k, throwing InputError on overflow.
std::size_t tuple_count(std::size_t n, std::size_t k);

/// Lexicographic index of a basis tuple (i_1, ..., i_k) in [n]^k, and back.
std::size_t encode_tuple(std::span<const std::size_t> tuple, std::size_t n);
void decode_tuple(std::size_t index, std::size_t n, std::span<std::size_t> tuple);

/// A k-linear map g^{⊗k} -> V with dim g = n and dim V = m, stored densely:
/// coefficient of value coordinate a on the basis tuple t lives at
/// encode_tuple(t) * m + a. Degree 0 is a single vector of V.
class Cochain {
public:
    Cochain() = default;
    Cochain(std::size_t degree, std::size_t n, std::size_t m);
    Cochain(std::size_t degree, std::size_t n, std::size_t m, std::vector<Rational> coeffs);

    /// The basis cochain with a single 1 at flat position `flat_index`.
    static Cochain basis(std::size_t degree, std::size_t n, std::size_t m, std::size_t flat_index);

    std::size_t degree() const noexcept { return degree_; }
    std::size_t n() const noexcept { return n_; }
    std::size_t m() const noexcept { return m_; }
    std::size_t size() const noexcept { return coeffs_.size(); }

    std::span<const Rational> coeffs() const noexcept { return coeffs_; }
    std::span<Rational> coeffs() noexcept { return coeffs_; }

    std::span<const Rational> value(std::span<const std::size_t> tuple) const;
    std::span<Rational> value(std::span<const std::size_t> tuple);
    std::span<const Rational> value_at(std::size_t tuple_index) const {
        return {coeffs_.data() + tuple_index * m_, m_};
    }
    std::span<Rational> value_at(std::size_t tuple_index) {
        return {coeffs_.data() + tuple_index * m_, m_};
    }

    /// Multilinear extension to arbitrary arguments in Q^n.
    Vector evaluate(std::span<const Vector> args) const;

    bool is_zero() const { return leibniz::is_zero(std::span<const Rational>(coeffs_)); }

    Cochain& operator+=(const Cochain& rhs);
    Cochain& operator-=(const Cochain& rhs);
    friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
    friend Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }
    friend Cochain operator*(const Rational& s, Cochain c);
    bool operator==(const Cochain& rhs) const = default;

private:
    void require_same_shape(const Cochain& rhs) const;

    std::size_t degree_ = 0;
    std::size_t n_ = 0;
    std::size_t m_ = 0;
    std::vector<Rational> coeffs_;
};

}  // namespace leibniz
