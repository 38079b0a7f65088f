#pragma once

// Tanisaki witness relations: the Generic Pieri family, the extreme hook
// family, a few explicit relations, and the shifted Vandermonde identity.

#include "superharm/combinatorics.hpp"
#include "superharm/permutation.hpp"
#include "superharm/superpoly.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace superharm {

/// coeff * partial_{e_r(x_1..x_{n-m})} d_J Delta_n.
struct RelationTerm {
    Rational coeff;
    int r = 0;
    int m = 0;
    std::vector<int> J;

    friend bool operator==(const RelationTerm&, const RelationTerm&) = default;
};

std::vector<RelationTerm> generic_pieri_terms(const SubsetOfRange& I);
/// Throws when I is not an extreme hook or u is outside [0, s].
std::vector<RelationTerm> hook_terms(const SubsetOfRange& I, int u);

struct GoldenRelation {
    std::string label;
    int n = 0;
    std::vector<RelationTerm> terms;
};
/// "n3k1", "n3k1-zero", "n7k2", "n8k3".
const std::vector<GoldenRelation>& golden_relations();
const GoldenRelation& golden_relation(std::string_view label);

/// Exact value of a single term.
SuperPolynomial term_value(int n, const RelationTerm& t);

struct Expansion {
    SuperPolynomial sum;
    std::size_t max_intermediate_terms = 0;
};
/// Sums all terms, sharing d_J Delta_n between terms with equal J. Work is
/// split across `jobs` threads; the result does not depend on `jobs`.
Expansion expand_relation(int n, const std::vector<RelationTerm>& terms, int jobs = 1);

struct RelationReport {
    std::string relation;  // "pieri", "hook" or "golden"
    std::string label;     // golden label, empty otherwise
    int n = 0;
    std::optional<SubsetOfRange> I;
    std::optional<int> u;
    bool is_zero = false;
    std::size_t term_count = 0;
    std::size_t max_intermediate_terms = 0;
    double wall_time = 0.0;  // seconds

    nlohmann::json to_json(bool with_time = false) const;
};

RelationReport verify_generic_pieri(const SubsetOfRange& I, int jobs = 1);
RelationReport verify_hook(const SubsetOfRange& I, int u, int jobs = 1);
RelationReport verify_golden(std::string_view label, int jobs = 1);

/// sigma .^alpha Gamma = sigma . (Gamma + alpha) - alpha.
std::vector<int> shift_action(const Permutation& sigma, const std::vector<int>& alpha,
                              const std::vector<int>& gamma);

/// prod_{v < w} (a_w - a_v).
Rational vandermonde_value(const std::vector<int>& a);
/// The binomial C(top, u) read as a degree-u polynomial in top.
Rational binomial_poly(long long top, int u);

/// sum over sigma in S_s and M subset of Pi of
/// (-1)^|M| sgn(sigma) Delta_s(sigma .^alpha Gamma - 1_M) C(v - |M| + u, u).
/// Pi holds positions in [s]; throws std::invalid_argument when |Pi| <= u.
Rational shifted_vandermonde_sum(const std::vector<int>& gamma, const std::vector<int>& alpha,
                                 const std::vector<int>& Pi, int u, long long v);
/// The same double sum with |M|^u in place of the binomial.
Rational shifted_vandermonde_power_sum(const std::vector<int>& gamma, const std::vector<int>& alpha,
                                       const std::vector<int>& Pi, int u);
/// sum over M subset of [p] of (-1)^|M| |M|^u.
Rational alternating_power_sum(int p, int u);

struct ShiftedVandermondeReport {
    std::uint64_t seed = 0;
    std::size_t cases = 0;           // (Gamma, alpha, Pi, u, v) tuples evaluated
    std::size_t failures = 0;
    std::size_t scalar_cases = 0;    // (p, u) pairs with p > u
    std::size_t scalar_failures = 0;
    bool pass() const { return failures == 0 && scalar_failures == 0; }
    nlohmann::json to_json() const;
};

/// Random Gamma, alpha in [-5, 5]^s for s = 1..4, every nonempty Pi, every
/// u < |Pi| and v in [-3, 3]; then alternating_power_sum(p, u) = 0 for
/// u < p <= 8. `trials` draws per s.
ShiftedVandermondeReport shifted_vandermonde_suite(std::uint64_t seed, int trials = 6);

}  // namespace superharm
