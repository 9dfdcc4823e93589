#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace posetlab {

// Nonnegative arbitrary-precision integer. Base 2^32 limbs, little endian.
// Schoolbook arithmetic throughout; operands stay small (a few hundred bits)
// in every workload this library runs.
class Natural {
public:
    Natural() = default;
    Natural(std::uint64_t v);
    static Natural from_u128(unsigned __int128 v);
    static Natural from_decimal(std::string_view s);

    bool is_zero() const { return limbs_.empty(); }
    bool fits_u64() const { return limbs_.size() <= 2; }
    std::uint64_t to_u64() const; // requires fits_u64()
    std::string to_decimal() const;
    double to_double() const;

    Natural& operator+=(const Natural& o);
    Natural& operator-=(const Natural& o); // requires *this >= o
    Natural operator*(const Natural& o) const;
    Natural& operator*=(const Natural& o) { *this = *this * o; return *this; }

    static void divmod(const Natural& a, const Natural& d, Natural& q, Natural& r);
    Natural operator/(const Natural& d) const;
    Natural operator%(const Natural& d) const;
    static Natural gcd(Natural a, Natural b);

    friend Natural operator+(Natural a, const Natural& b) { a += b; return a; }
    friend Natural operator-(Natural a, const Natural& b) { a -= b; return a; }

    friend int cmp(const Natural& a, const Natural& b);
    friend bool operator==(const Natural& a, const Natural& b) { return cmp(a, b) == 0; }
    friend bool operator!=(const Natural& a, const Natural& b) { return cmp(a, b) != 0; }
    friend bool operator<(const Natural& a, const Natural& b) { return cmp(a, b) < 0; }
    friend bool operator<=(const Natural& a, const Natural& b) { return cmp(a, b) <= 0; }
    friend bool operator>(const Natural& a, const Natural& b) { return cmp(a, b) > 0; }
    friend bool operator>=(const Natural& a, const Natural& b) { return cmp(a, b) >= 0; }

private:
    std::vector<std::uint32_t> limbs_;

    void trim();
    std::size_t bit_length() const;
    bool bit(std::size_t i) const;
    void set_bit(std::size_t i);
    void shl1_or(bool low_bit);              // *this = *this*2 + low_bit
    std::uint32_t div_small(std::uint32_t d); // in place /= d, returns remainder
    void mul_small_add(std::uint32_t m, std::uint32_t a);
};

// Exact rational, reduced, positive denominator.
class Rational {
public:
    Rational() : neg_(false), num_(0), den_(1) {}
    Rational(std::int64_t v);
    Rational(std::int64_t num, std::uint64_t den);
    Rational(bool neg, Natural num, Natural den);

    const Natural& num() const { return num_; }
    const Natural& den() const { return den_; }
    bool negative() const { return neg_; }
    bool is_zero() const { return num_.is_zero(); }

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;

    friend int cmp(const Rational& a, const Rational& b);
    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a, b) == 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return cmp(a, b) != 0; }
    friend bool operator<(const Rational& a, const Rational& b) { return cmp(a, b) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a, b) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return cmp(a, b) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a, b) >= 0; }

    double to_double() const;
    std::string str() const; // "p/q" (denominator always printed), "-p/q" when negative

private:
    bool neg_;
    Natural num_, den_;
    void reduce();
};

} // namespace posetlab
