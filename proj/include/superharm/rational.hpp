#pragma once

// Exact rational numbers with an inline 64-bit fast path.
//
// Values whose reduced numerator and denominator both fit in int64 are stored
// inline; anything larger spills into a heap-allocated mpq_class. The
// representation is canonical: a value that fits is always stored inline, so
// structural equality is value equality.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <memory>
#include <ostream>
#include <string>
#include <string_view>

namespace superharm {

class Rational {
public:
    Rational() = default;
    Rational(long long v);  // NOLINT: implicit by design of numeric literals
    Rational(long long num, long long den);
    explicit Rational(const mpq_class& q);
    explicit Rational(const mpz_class& z);

    Rational(const Rational& other);
    Rational(Rational&& other) noexcept = default;
    Rational& operator=(const Rational& other);
    Rational& operator=(Rational&& other) noexcept = default;
    ~Rational() = default;

    /// Parses "p", "-p" or "p/q" (arbitrary length digits).
    static Rational parse(std::string_view text);

    bool is_zero() const { return !big_ && num_ == 0; }
    bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
    bool is_integer() const;
    bool is_small() const { return !big_; }
    int sign() const;

    mpq_class to_mpq() const;
    std::string to_string() const;
    Rational abs() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    /// this += a * b, the inner step of elimination and operator expansion.
    void add_product(const Rational& a, const Rational& b);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& a, const Rational& b);
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    friend std::ostream& operator<<(std::ostream& os, const Rational& q) {
        return os << q.to_string();
    }

private:
    void assign_big(mpq_class q);
    void set_from_wide(__int128 num, __int128 den);

    // Inline value, meaningful only when big_ is null. den_ > 0, gcd == 1,
    // and num_ != INT64_MIN so negation never overflows.
    long long num_ = 0;
    long long den_ = 1;
    std::unique_ptr<mpq_class> big_;
};

/// n choose k as an exact integer; 0 when k < 0 or k > n.
Rational binomial(long long n, long long k);

/// x (x - 1) ... (x - k + 1).
Rational falling_factorial(long long x, int k);

}  // namespace superharm
