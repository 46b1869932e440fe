#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace leibniz {

/// Exact rational scalar. GMP keeps every value canonical (positive
/// denominator, reduced) after each arithmetic operation.
using Rational = mpq_class;

/// Dense coordinate vector.
using Vector = std::vector<Rational>;

/// Parses "p/q", "p" or "-p/q". Throws InputError on anything else,
/// including a zero denominator.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when q == 1.
std::string format_rational(const Rational& q);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

bool is_zero(std::span<const Rational> v);

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);

Vector& axpy(Vector& y, const Rational& a, std::span<const Rational> x);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Rational& s, const Vector& v);

std::string format_vector(std::span<const Rational> v);

}  // namespace leibniz
