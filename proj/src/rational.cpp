#include "leibniz/rational.hpp"

#include <algorithm>
#include <cctype>

#include "leibniz/errors.hpp"

namespace leibniz {
namespace {

bool is_integer_literal(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    return !s.empty() &&
           std::all_of(s.begin(), s.end(), [](unsigned char ch) { return std::isdigit(ch) != 0; });
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"}
                                                                 : text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' ||
        den.front() == '+') {
        throw InputError("malformed rational \"" + std::string(text) + "\"");
    }
    // mpz_class rejects a leading '+'.
    const std::string_view num_digits = num.front() == '+' ? num.substr(1) : num;
    mpz_class p(std::string{num_digits}, 10);
    mpz_class q(std::string{den}, 10);
    if (q == 0) throw InputError("zero denominator in \"" + std::string(text) + "\"");
    Rational r(p, q);
    r.canonicalize();
    return r;
}

std::string format_rational(const Rational& value) {
    Rational q = value;
    q.canonicalize();
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

bool is_zero(std::span<const Rational> v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& q) { return sgn(q) == 0; });
}

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t i) {
    Vector v(n);
    v.at(i) = 1;
    return v;
}

Vector& axpy(Vector& y, const Rational& a, std::span<const Rational> x) {
    if (y.size() != x.size()) throw InputError("axpy: length mismatch");
    if (sgn(a) == 0) return y;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (sgn(x[i]) != 0) y[i] += a * x[i];
    }
    return y;
}

Vector operator+(const Vector& a, const Vector& b) {
    Vector out = a;
    return axpy(out, 1, b);
}

Vector operator-(const Vector& a, const Vector& b) {
    Vector out = a;
    return axpy(out, -1, b);
}

Vector operator*(const Rational& s, const Vector& v) {
    Vector out(v.size());
    if (sgn(s) == 0) return out;
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
    return out;
}

std::string format_vector(std::span<const Rational> v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += format_rational(v[i]);
    }
    return out + ")";
}

}  // namespace leibniz
