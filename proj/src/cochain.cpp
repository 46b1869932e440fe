#include "leibniz/cochain.hpp"

#include <functional>
#include <limits>

#include "leibniz/errors.hpp"

namespace leibniz {

std::size_t tuple_count(std::size_t n, std::size_t k) {
    std::size_t out = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (n != 0 && out > std::numeric_limits<std::size_t>::max() / n)
            throw InputError("tuple_count: n^k overflows");
        out *= n;
    }
    return out;
}

std::size_t encode_tuple(std::span<const std::size_t> tuple, std::size_t n) {
    std::size_t idx = 0;
    for (auto t : tuple) idx = idx * n + t;
    return idx;
}

void decode_tuple(std::size_t index, std::size_t n, std::span<std::size_t> tuple) {
    for (std::size_t p = tuple.size(); p-- > 0;) {
        tuple[p] = index % n;
        index /= n;
    }
}

Cochain::Cochain(std::size_t degree, std::size_t n, std::size_t m)
    : degree_(degree), n_(n), m_(m), coeffs_(tuple_count(n, degree) * m) {}

Cochain::Cochain(std::size_t degree, std::size_t n, std::size_t m, std::vector<Rational> coeffs)
    : degree_(degree), n_(n), m_(m), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != tuple_count(n, degree) * m)
        throw InputError("Cochain: coefficient count must be n^k * m");
}

Cochain Cochain::basis(std::size_t degree, std::size_t n, std::size_t m, std::size_t flat_index) {
    Cochain c(degree, n, m);
    c.coeffs_.at(flat_index) = 1;
    return c;
}

std::span<const Rational> Cochain::value(std::span<const std::size_t> tuple) const {
    if (tuple.size() != degree_) throw InputError("Cochain::value: wrong tuple length");
    return value_at(encode_tuple(tuple, n_));
}

std::span<Rational> Cochain::value(std::span<const std::size_t> tuple) {
    if (tuple.size() != degree_) throw InputError("Cochain::value: wrong tuple length");
    return value_at(encode_tuple(tuple, n_));
}

Vector Cochain::evaluate(std::span<const Vector> args) const {
    if (args.size() != degree_) throw InputError("Cochain::evaluate: wrong arity");
    for (const auto& a : args)
        if (a.size() != n_) throw InputError("Cochain::evaluate: dimension mismatch");
    Vector out(m_);
    std::vector<std::size_t> idx(degree_);
    std::function<void(std::size_t, const Rational&)> recurse = [&](std::size_t p, const Rational& coeff) {
        if (p == degree_) {
            axpy(out, coeff, value(std::span<const std::size_t>(idx)));
            return;
        }
        for (std::size_t i = 0; i < n_; ++i) {
            if (sgn(args[p][i]) == 0) continue;
            idx[p] = i;
            recurse(p + 1, coeff * args[p][i]);
        }
    };
    recurse(0, Rational(1));
    return out;
}

void Cochain::require_same_shape(const Cochain& rhs) const {
    if (degree_ != rhs.degree_ || n_ != rhs.n_ || m_ != rhs.m_)
        throw InputError("Cochain: shape mismatch");
}

Cochain& Cochain::operator+=(const Cochain& rhs) {
    require_same_shape(rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (sgn(rhs.coeffs_[i]) != 0) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

Cochain& Cochain::operator-=(const Cochain& rhs) {
    require_same_shape(rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (sgn(rhs.coeffs_[i]) != 0) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

Cochain operator*(const Rational& s, Cochain c) {
    for (auto& q : c.coeffs_) q *= s;
    return c;
}

}  // namespace leibniz
