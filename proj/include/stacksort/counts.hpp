#pragma once

#include <cstdint>
#include <string>

#include "stacksort/errors.hpp"

namespace stacksort {

// Exact counting is done in signed 128-bit integers with overflow detection;
// C_m already needs more than 64 bits for modest m.
using int128 = __int128;

int128 checked_add(int128 a, int128 b);
int128 checked_mul(int128 a, int128 b);

std::string count_to_string(int128 v);

std::uint64_t factorial_u64(int n); // n <= 20

// binomial(n, k) is 0 for k < 0 or k > n (the convention used by the
// ballot-probability formula for out-of-range parameters).
int128 binomial128(int n, int k);
int128 catalan128(int m);

// Exact fraction with a positive denominator, always stored reduced.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(int128 num, int128 den); // throws std::invalid_argument on den == 0

    int128 num() const { return num_; }
    int128 den() const { return den_; }

    double to_double() const;
    std::string str() const; // "num/den", or just "num" when den == 1

    Rational operator+(const Rational& other) const;
    Rational operator-(const Rational& other) const;
    Rational operator*(const Rational& other) const;

    friend bool operator==(const Rational& a, const Rational& b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator<(const Rational& a, const Rational& b);
    friend bool operator<=(const Rational& a, const Rational& b)
    {
        return a < b || a == b;
    }

private:
    int128 num_;
    int128 den_;
};

} // namespace stacksort
