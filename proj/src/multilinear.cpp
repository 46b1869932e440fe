#include "leibniz/multilinear.hpp"

#include <functional>

#include "leibniz/errors.hpp"

namespace leibniz {

MultilinearMap::MultilinearMap(std::vector<std::size_t> input_dims, std::size_t output_dim)
    : input_dims_(std::move(input_dims)), output_dim_(output_dim) {
    std::size_t size = output_dim_;
    for (auto d : input_dims_) size *= d;
    data_.resize(size);
}

std::size_t MultilinearMap::offset(std::span<const std::size_t> idx) const {
    if (idx.size() != input_dims_.size()) throw InputError("MultilinearMap: wrong arity");
    std::size_t off = 0;
    for (std::size_t p = 0; p < idx.size(); ++p) {
        if (idx[p] >= input_dims_[p]) throw InputError("MultilinearMap: index out of range");
        off = off * input_dims_[p] + idx[p];
    }
    return off * output_dim_;
}

std::span<const Rational> MultilinearMap::at(std::span<const std::size_t> idx) const {
    return {data_.data() + offset(idx), output_dim_};
}

std::span<Rational> MultilinearMap::at(std::span<const std::size_t> idx) {
    return {data_.data() + offset(idx), output_dim_};
}

void MultilinearMap::set(std::span<const std::size_t> idx, std::span<const Rational> value) {
    if (value.size() != output_dim_) throw InputError("MultilinearMap::set: wrong value length");
    auto slot = at(idx);
    std::copy(value.begin(), value.end(), slot.begin());
}

Vector MultilinearMap::apply(std::span<const Vector> args) const {
    if (args.size() != arity()) throw InputError("MultilinearMap::apply: wrong arity");
    for (std::size_t p = 0; p < args.size(); ++p) {
        if (args[p].size() != input_dims_[p]) throw InputError("MultilinearMap::apply: dimension mismatch");
    }
    Vector out(output_dim_);
    std::vector<std::size_t> idx(arity());
    std::function<void(std::size_t, const Rational&)> recurse = [&](std::size_t p, const Rational& coeff) {
        if (p == idx.size()) {
            axpy(out, coeff, at(std::span<const std::size_t>(idx)));
            return;
        }
        for (std::size_t i = 0; i < input_dims_[p]; ++i) {
            if (sgn(args[p][i]) == 0) continue;
            idx[p] = i;
            recurse(p + 1, coeff * args[p][i]);
        }
    };
    recurse(0, Rational(1));
    return out;
}

}  // namespace leibniz
