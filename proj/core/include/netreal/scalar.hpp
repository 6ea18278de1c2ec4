#pragma once

#include <cstdint>
#include <string>

namespace netreal {

/// A matrix entry that is either an exact rational (entered as an integer or
/// num/den pair) or a floating-point value. Structural analysis only ever asks
/// whether an entry is zero, so exact entries make the zero pattern of a
/// coefficient matrix independent of rounding.
class Scalar {
public:
    Scalar() = default;

    static Scalar integer(std::int64_t n);
    /// Throws std::invalid_argument if den == 0.
    static Scalar rational(std::int64_t num, std::int64_t den);
    /// Throws std::invalid_argument on non-finite input.
    static Scalar real(double v);

    bool exact() const { return exact_; }
    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    double value() const { return value_; }

    /// |x| > tol. An exact entry with tol == 0 is tested symbolically.
    bool nonzero(double tol) const;
    bool is_integer() const { return exact_ && den_ == 1; }

    Scalar negated() const;

    /// Exact scalars compare as rationals, otherwise by floating value.
    bool operator==(const Scalar& other) const;
    bool operator!=(const Scalar& other) const { return !(*this == other); }

    /// Canonical text: "3", "-7/2", or a shortest round-trip double.
    std::string to_string() const;

private:
    bool exact_ = true;
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    double value_ = 0.0;
};

/// Shortest decimal text that parses back to exactly the same double.
std::string format_double(double v);

} // namespace netreal
