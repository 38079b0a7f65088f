#include "superharm/rational.hpp"

#include <limits>
#include <stdexcept>

namespace superharm {

namespace {

constexpr long long kMin = std::numeric_limits<long long>::min();

bool fits_inline(__int128 v) {
    return v > static_cast<__int128>(kMin) &&
           v <= static_cast<__int128>(std::numeric_limits<long long>::max());
}

unsigned __int128 uabs(__int128 v) {
    return v < 0 ? static_cast<unsigned __int128>(-(v + 1)) + 1
                 : static_cast<unsigned __int128>(v);
}

unsigned __int128 gcd128(unsigned __int128 a, unsigned __int128 b) {
    while (b != 0) {
        unsigned __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

mpz_class to_mpz(__int128 v) {
    unsigned __int128 mag = uabs(v);
    auto hi = static_cast<unsigned long>(mag >> 64);
    auto lo = static_cast<unsigned long>(mag & 0xffffffffffffffffULL);
    mpz_class z = hi;
    z <<= 64;
    z += lo;
    if (v < 0) z = -z;
    return z;
}

mpq_class small_to_mpq(long long num, long long den) {
    mpq_class q;
    mpz_set_si(q.get_num_mpz_t(), num);
    mpz_set_si(q.get_den_mpz_t(), den);
    return q;
}

}  // namespace

Rational::Rational(long long v) {
    if (v == kMin) {
        assign_big(small_to_mpq(v, 1));
    } else {
        num_ = v;
    }
}

Rational::Rational(long long num, long long den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    set_from_wide(num, den);
}

Rational::Rational(const mpq_class& q) {
    mpq_class c = q;
    c.canonicalize();
    assign_big(std::move(c));
}

Rational::Rational(const mpz_class& z) { assign_big(mpq_class(z)); }

Rational::Rational(const Rational& other)
    : num_(other.num_),
      den_(other.den_),
      big_(other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr) {}

Rational& Rational::operator=(const Rational& other) {
    if (this != &other) {
        num_ = other.num_;
        den_ = other.den_;
        big_ = other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr;
    }
    return *this;
}

void Rational::assign_big(mpq_class q) {
    if (mpz_fits_slong_p(q.get_num_mpz_t()) && mpz_fits_slong_p(q.get_den_mpz_t())) {
        long long n = mpz_get_si(q.get_num_mpz_t());
        if (n != kMin) {
            num_ = n;
            den_ = mpz_get_si(q.get_den_mpz_t());
            big_.reset();
            return;
        }
    }
    if (big_) {
        *big_ = std::move(q);
    } else {
        big_ = std::make_unique<mpq_class>(std::move(q));
    }
}

void Rational::set_from_wide(__int128 num, __int128 den) {
    if (den < 0) {
        num = -num;
        den = -den;
    }
    if (num == 0) {
        num_ = 0;
        den_ = 1;
        big_.reset();
        return;
    }
    unsigned __int128 g = gcd128(uabs(num), static_cast<unsigned __int128>(den));
    if (g > 1) {
        num /= static_cast<__int128>(g);
        den /= static_cast<__int128>(g);
    }
    if (fits_inline(num) && fits_inline(den)) {
        num_ = static_cast<long long>(num);
        den_ = static_cast<long long>(den);
        big_.reset();
        return;
    }
    mpq_class q(to_mpz(num), to_mpz(den));
    q.canonicalize();
    assign_big(std::move(q));
}

Rational Rational::parse(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("Rational::parse: empty string");
    std::string s(text);
    if (s.front() == '+') s.erase(0, 1);
    std::size_t digits_from = (!s.empty() && s.front() == '-') ? 1 : 0;
    bool seen_slash = false;
    bool seen_digit = false;
    for (std::size_t i = digits_from; i < s.size(); ++i) {
        char c = s[i];
        if (c == '/') {
            if (seen_slash || !seen_digit || i + 1 == s.size())
                throw std::invalid_argument("Rational::parse: malformed '" + s + "'");
            seen_slash = true;
            seen_digit = false;
        } else if (c >= '0' && c <= '9') {
            seen_digit = true;
        } else {
            throw std::invalid_argument("Rational::parse: malformed '" + s + "'");
        }
    }
    if (!seen_digit) throw std::invalid_argument("Rational::parse: malformed '" + s + "'");
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("Rational::parse: malformed '" + s + "'");
    if (q.get_den() == 0) throw std::domain_error("Rational::parse: zero denominator");
    q.canonicalize();
    Rational r;
    r.assign_big(std::move(q));
    return r;
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const {
    if (big_) return sgn(*big_);
    return (num_ > 0) - (num_ < 0);
}

mpq_class Rational::to_mpq() const { return big_ ? *big_ : small_to_mpq(num_, den_); }

std::string Rational::to_string() const {
    if (big_) return big_->get_str();
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational Rational::operator-() const {
    Rational r;
    if (big_) {
        r.assign_big(-*big_);
    } else {
        r.num_ = -num_;
        r.den_ = den_;
    }
    return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
    if (!big_ && !rhs.big_) {
        if (den_ == 1 && rhs.den_ == 1) {
            long long out;
            if (!__builtin_add_overflow(num_, rhs.num_, &out) && out != kMin) {
                num_ = out;
                return *this;
            }
            set_from_wide(static_cast<__int128>(num_) + rhs.num_, 1);
            return *this;
        }
        __int128 n = static_cast<__int128>(num_) * rhs.den_ + static_cast<__int128>(rhs.num_) * den_;
        __int128 d = static_cast<__int128>(den_) * rhs.den_;
        set_from_wide(n, d);
        return *this;
    }
    assign_big(to_mpq() + rhs.to_mpq());
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
    if (!big_ && !rhs.big_) {
        if (den_ == 1 && rhs.den_ == 1) {
            long long out;
            if (!__builtin_mul_overflow(num_, rhs.num_, &out) && out != kMin) {
                num_ = out;
                return *this;
            }
        }
        __int128 n = static_cast<__int128>(num_) * rhs.num_;
        __int128 d = static_cast<__int128>(den_) * rhs.den_;
        set_from_wide(n, d);
        return *this;
    }
    assign_big(to_mpq() * rhs.to_mpq());
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw std::domain_error("Rational: division by zero");
    if (!big_ && !rhs.big_) {
        __int128 n = static_cast<__int128>(num_) * rhs.den_;
        __int128 d = static_cast<__int128>(den_) * rhs.num_;
        set_from_wide(n, d);
        return *this;
    }
    assign_big(to_mpq() / rhs.to_mpq());
    return *this;
}

void Rational::add_product(const Rational& a, const Rational& b) {
    if (!big_ && !a.big_ && !b.big_ && den_ == 1 && a.den_ == 1 && b.den_ == 1) {
        long long prod;
        long long out;
        if (!__builtin_mul_overflow(a.num_, b.num_, &prod) &&
            !__builtin_add_overflow(num_, prod, &out) && out != kMin) {
            num_ = out;
            return;
        }
    }
    *this += a * b;
}

bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;  // canonical: a big value never equals an inline one
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
        __int128 l = static_cast<__int128>(a.num_) * b.den_;
        __int128 r = static_cast<__int128>(b.num_) * a.den_;
        return l <=> r;
    }
    int c = cmp(a.to_mpq(), b.to_mpq());
    return c <=> 0;
}

Rational binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return Rational(0);
    mpz_class z;
    mpz_bin_uiui(z.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(z);
}

Rational falling_factorial(long long x, int k) {
    Rational r(1);
    for (int i = 0; i < k; ++i) r *= Rational(x - i);
    return r;
}

}  // namespace superharm
