#include "stacksort/counts.hpp"

#include <stdexcept>

namespace stacksort {

int128 checked_add(int128 a, int128 b)
{
    int128 r;
    if (__builtin_add_overflow(a, b, &r))
        throw CountOverflowError("128-bit count overflow in addition");
    return r;
}

int128 checked_mul(int128 a, int128 b)
{
    int128 r;
    if (__builtin_mul_overflow(a, b, &r))
        throw CountOverflowError("128-bit count overflow in multiplication");
    return r;
}

std::string count_to_string(int128 v)
{
    if (v == 0)
        return "0";
    const bool neg = v < 0;
    // Negate digit by digit to dodge the INT128_MIN edge case.
    std::string digits;
    while (v != 0) {
        int d = static_cast<int>(v % 10);
        if (d < 0)
            d = -d;
        digits.push_back(static_cast<char>('0' + d));
        v /= 10;
    }
    if (neg)
        digits.push_back('-');
    return std::string(digits.rbegin(), digits.rend());
}

std::uint64_t factorial_u64(int n)
{
    if (n < 0 || n > 20)
        throw std::out_of_range("factorial_u64: n must be in [0, 20]");
    std::uint64_t r = 1;
    for (int i = 2; i <= n; ++i)
        r *= static_cast<std::uint64_t>(i);
    return r;
}

int128 binomial128(int n, int k)
{
    if (k < 0 || k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    int128 r = 1;
    for (int i = 1; i <= k; ++i) {
        r = checked_mul(r, n - k + i);
        r /= i; // exact: r is C(n-k+i, i) after this step
    }
    return r;
}

int128 catalan128(int m)
{
    if (m < 0)
        throw std::out_of_range("catalan128: m must be nonnegative");
    return binomial128(2 * m, m) / (m + 1);
}

namespace {

int128 gcd128(int128 a, int128 b)
{
    if (a < 0)
        a = -a;
    if (b < 0)
        b = -b;
    while (b != 0) {
        int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

} // namespace

Rational::Rational(int128 num, int128 den) : num_(num), den_(den)
{
    if (den_ == 0)
        throw std::invalid_argument("Rational: zero denominator");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    int128 g = gcd128(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

double Rational::to_double() const
{
    return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::str() const
{
    if (den_ == 1)
        return count_to_string(num_);
    return count_to_string(num_) + "/" + count_to_string(den_);
}

Rational Rational::operator+(const Rational& other) const
{
    return Rational(checked_add(checked_mul(num_, other.den_), checked_mul(other.num_, den_)),
                    checked_mul(den_, other.den_));
}

Rational Rational::operator-(const Rational& other) const
{
    return Rational(checked_add(checked_mul(num_, other.den_), -checked_mul(other.num_, den_)),
                    checked_mul(den_, other.den_));
}

Rational Rational::operator*(const Rational& other) const
{
    return Rational(checked_mul(num_, other.num_), checked_mul(den_, other.den_));
}

bool operator<(const Rational& a, const Rational& b)
{
    // Reduced forms with positive denominators; cross-multiply.
    return checked_mul(a.num_, b.den_) < checked_mul(b.num_, a.den_);
}

} // namespace stacksort
