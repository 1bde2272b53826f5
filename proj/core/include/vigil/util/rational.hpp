#pragma once

#include <cstdint>
#include <string>

namespace vigil {

// Exact rational arithmetic for the evaluation metrics. Numerators and
// denominators stay tiny (path counts per project, project counts per
// dataset), so int64 with gcd reduction is plenty.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d = 1);

    static Rational zero() { return Rational(0, 1); }

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;
    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const;

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    // "65.00" style formatting with the given number of decimals, rounding
    // half away from zero.
    std::string format(int decimals) const;
    // format(value * 100, decimals) — percentage without the % sign.
    std::string format_percent(int decimals) const;
};

}  // namespace vigil
