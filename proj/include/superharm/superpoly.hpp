#pragma once

// Sparse polynomials in commuting x_1..x_n and anticommuting theta_1..theta_n
// with exact rational coefficients.
//
// Terms are kept sorted in the canonical monomial order (graded
// lexicographic on the x-exponent vector, then the theta set read as a
// bitmask integer) with no stored zeros. Every operation returns a new value.

#include "superharm/rational.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace superharm {

inline constexpr int kMaxVars = 20;

struct Monomial {
    std::array<std::uint8_t, kMaxVars> x{};  // x[i - 1] = exponent of x_i
    std::uint16_t deg = 0;                   // sum of x
    std::uint32_t theta = 0;                 // bit i - 1 set iff theta_i present

    static Monomial make(std::span<const int> exponents, std::span<const int> thetas = {});

    int exponent(int i) const { return x[i - 1]; }
    bool has_theta(int i) const { return (theta >> (i - 1)) & 1U; }
    int theta_degree() const { return __builtin_popcount(theta); }
    std::vector<int> theta_indices() const;

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.theta == b.theta && a.x == b.x;
    }
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept;
};

struct Term {
    Monomial mono;
    Rational coeff;
};

struct ThetaNormalForm {
    int sign = 1;                // +1, -1, or 0 when an index repeats
    std::vector<int> canonical;  // sorted distinct indices; empty when sign == 0
};

/// Sorts a theta word, tracking the sign of the sorting permutation.
ThetaNormalForm normalize_theta(std::span<const int> word);

/// Sign picked up when theta_{lhs} * theta_{rhs} is rewritten in increasing
/// order; 0 if the sets intersect.
int theta_merge_sign(std::uint32_t lhs, std::uint32_t rhs);

class SuperPolynomial {
public:
    explicit SuperPolynomial(int n = 0);

    /// Arbitrary terms: sorted, like terms merged, zeros dropped.
    static SuperPolynomial from_terms(int n, std::vector<Term> terms);
    /// Terms already in strictly increasing canonical order with nonzero coefficients.
    static SuperPolynomial from_sorted(int n, std::vector<Term> terms);

    static SuperPolynomial constant(int n, const Rational& c);
    static SuperPolynomial monomial(int n, const Monomial& m, const Rational& c = Rational(1));
    static SuperPolynomial x(int n, int i);
    static SuperPolynomial theta(int n, int i);

    /// Parses the canonical text format (see to_string) for an ambient n.
    static SuperPolynomial parse(std::string_view text, int n);

    int n() const { return n_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(const Monomial& m) const;

    /// (x-degree, theta-degree) when bi-homogeneous; nullopt for zero or mixed input.
    std::optional<std::pair<int, int>> bidegree() const;
    std::map<std::pair<int, int>, SuperPolynomial> homogeneous_components() const;

    /// Terms in canonical order, e.g. "-t1 + t2" or "2 x1 x2^3 t4 - 1/2 t1".
    std::string to_string() const;

    SuperPolynomial operator-() const;
    SuperPolynomial scaled(const Rational& c) const;
    /// this += c * other, by a linear merge.
    void add_scaled(const SuperPolynomial& other, const Rational& c);

    SuperPolynomial& operator+=(const SuperPolynomial& rhs);
    SuperPolynomial& operator-=(const SuperPolynomial& rhs);
    friend SuperPolynomial operator+(SuperPolynomial lhs, const SuperPolynomial& rhs) { return lhs += rhs; }
    friend SuperPolynomial operator-(SuperPolynomial lhs, const SuperPolynomial& rhs) { return lhs -= rhs; }
    friend SuperPolynomial operator*(const SuperPolynomial& lhs, const SuperPolynomial& rhs);
    friend bool operator==(const SuperPolynomial& a, const SuperPolynomial& b);

private:
    int n_;
    std::vector<Term> terms_;
};

SuperPolynomial add(const SuperPolynomial& p, const SuperPolynomial& q);
SuperPolynomial mul(const SuperPolynomial& p, const SuperPolynomial& q);

/// Merges sorted streams into one canonical term list.
std::vector<Term> merge_sorted(std::vector<Term> a, std::vector<Term> b);

void check_variable_count(int n);
void check_same_n(const SuperPolynomial& p, const SuperPolynomial& q);

}  // namespace superharm
