#pragma once

// Exact arithmetic in the field Q[sqrt(3)] = {a + b sqrt(3)}, built on
// boost's arbitrary-precision rationals. The expansion kernels are rational
// in their inputs except for explicit sqrt(3) factors, which they take as a
// parameter, so instantiating them with this type evaluates them without
// any rounding at all. Used by tests to pin kernel values independently of
// floating-point effects.

#include <cmath>

#include <boost/multiprecision/cpp_int.hpp>

namespace tristab::testing {

using Rational = boost::multiprecision::cpp_rational;

class Sqrt3Rational {
public:
    Sqrt3Rational() = default;
    Sqrt3Rational(int v) : a_(v) {}                    // NOLINT(google-explicit-constructor)
    Sqrt3Rational(long long v) : a_(v) {}              // NOLINT(google-explicit-constructor)
    Sqrt3Rational(Rational rational) : a_(std::move(rational)) {} // NOLINT(google-explicit-constructor)
    Sqrt3Rational(Rational rational_part, Rational sqrt3_part)
        : a_(std::move(rational_part)), b_(std::move(sqrt3_part)) {}

    static Sqrt3Rational sqrt3() { return Sqrt3Rational(Rational(0), Rational(1)); }

    const Rational& rational_part() const { return a_; }
    const Rational& sqrt3_part() const { return b_; }

    friend Sqrt3Rational operator+(const Sqrt3Rational& l,
                                   const Sqrt3Rational& r) {
        return Sqrt3Rational(l.a_ + r.a_, l.b_ + r.b_);
    }
    friend Sqrt3Rational operator-(const Sqrt3Rational& l,
                                   const Sqrt3Rational& r) {
        return Sqrt3Rational(l.a_ - r.a_, l.b_ - r.b_);
    }
    Sqrt3Rational operator-() const { return Sqrt3Rational(-a_, -b_); }

    friend Sqrt3Rational operator*(const Sqrt3Rational& l,
                                   const Sqrt3Rational& r) {
        return Sqrt3Rational(l.a_ * r.a_ + 3 * l.b_ * r.b_,
                             l.a_ * r.b_ + l.b_ * r.a_);
    }
    friend Sqrt3Rational operator/(const Sqrt3Rational& l,
                                   const Sqrt3Rational& r) {
        // Multiply by the conjugate: norm (c + d sqrt3)(c - d sqrt3) is
        // rational and nonzero for any nonzero element of the field.
        const Rational norm = r.a_ * r.a_ - 3 * r.b_ * r.b_;
        return Sqrt3Rational((l.a_ * r.a_ - 3 * l.b_ * r.b_) / norm,
                             (l.b_ * r.a_ - l.a_ * r.b_) / norm);
    }

    friend bool operator==(const Sqrt3Rational& l, const Sqrt3Rational& r) {
        return l.a_ == r.a_ && l.b_ == r.b_;
    }
    friend bool operator!=(const Sqrt3Rational& l, const Sqrt3Rational& r) {
        return !(l == r);
    }

    double to_double() const {
        return a_.convert_to<double>() +
               b_.convert_to<double>() * std::sqrt(3.0);
    }

private:
    Rational a_;
    Rational b_;
};

} // namespace tristab::testing
