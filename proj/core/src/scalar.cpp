#include "netreal/scalar.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace netreal {

Scalar Scalar::integer(std::int64_t n) {
    Scalar s;
    s.exact_ = true;
    s.num_ = n;
    s.den_ = 1;
    s.value_ = static_cast<double>(n);
    return s;
}

Scalar Scalar::rational(std::int64_t num, std::int64_t den) {
    if (den == 0)
        throw std::invalid_argument("rational entry with zero denominator");
    if (num == std::numeric_limits<std::int64_t>::min() ||
        den == std::numeric_limits<std::int64_t>::min())
        throw std::invalid_argument("rational entry out of range");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    Scalar s;
    s.exact_ = true;
    s.num_ = num;
    s.den_ = den;
    s.value_ = static_cast<double>(num) / static_cast<double>(den);
    return s;
}

Scalar Scalar::real(double v) {
    if (!std::isfinite(v))
        throw std::invalid_argument("matrix entries must be finite");
    Scalar s;
    s.exact_ = false;
    s.num_ = 0;
    s.den_ = 1;
    s.value_ = v;
    return s;
}

bool Scalar::nonzero(double tol) const {
    if (exact_ && tol == 0.0)
        return num_ != 0;
    return std::fabs(value_) > tol;
}

Scalar Scalar::negated() const {
    Scalar s = *this;
    s.num_ = -s.num_;
    s.value_ = -s.value_;
    return s;
}

bool Scalar::operator==(const Scalar& other) const {
    if (exact_ && other.exact_)
        return num_ == other.num_ && den_ == other.den_;
    return value_ == other.value_;
}

std::string Scalar::to_string() const {
    if (exact_) {
        std::string out = std::to_string(num_);
        if (den_ != 1) {
            out += '/';
            out += std::to_string(den_);
        }
        return out;
    }
    return format_double(value_);
}

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

} // namespace netreal
