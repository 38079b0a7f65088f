#pragma once

// Strong compositions, subsets of [n-1], their degree statistics, the
// bijection Psi_n / Phi_n, and Tanisaki ideal generators.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace superharm {

struct Composition {
    std::vector<int> parts;

    Composition() = default;
    explicit Composition(std::vector<int> p);

    int n() const;
    int length() const { return static_cast<int>(parts.size()); }
    /// Comma list, e.g. "1,3,2,1,3,1"; "" for the empty composition.
    std::string to_string() const;
    static Composition parse(std::string_view text);

    friend auto operator<=>(const Composition&, const Composition&) = default;
};

/// A subset of {1, ..., n-1}, kept strictly increasing.
struct SubsetOfRange {
    int n = 0;
    std::vector<int> elems;

    SubsetOfRange() = default;
    SubsetOfRange(int n, std::vector<int> elems);

    int k() const { return static_cast<int>(elems.size()); }
    int sum() const;
    /// "{2,4,5,7,9}@n=11".
    std::string to_string() const;
    /// Plain comma list without the ambient size, e.g. "2,4,5,7,9".
    std::string to_list() const;
    static SubsetOfRange parse(std::string_view text);
    /// Comma list (possibly empty or "{}") inside [n-1].
    static SubsetOfRange from_list(int n, std::string_view text);

    friend auto operator<=>(const SubsetOfRange&, const SubsetOfRange&) = default;
};

/// Parses a comma separated list of integers; "" and "{}" give an empty list.
std::vector<int> parse_int_list(std::string_view text);
std::string join_ints(const std::vector<int>& v, const char* sep = ",");

int coinv(const Composition& alpha);
/// b of the decreasing rearrangement: sum (i-1) mu_i.
int b_stat(const Composition& alpha);
int deg_comp(const Composition& alpha);
Composition bar_comp(const Composition& alpha);
/// Weakly decreasing rearrangement.
std::vector<int> sorted_partition(const Composition& alpha);

int deg_subset(const SubsetOfRange& I);

struct BarSubset {
    int s = 0;
    SubsetOfRange ibar;  // subset of [k-1], ambient size k
};
BarSubset bar_subset(const SubsetOfRange& I);

SubsetOfRange psi(const Composition& alpha);
Composition phi(const SubsetOfRange& I);

struct GfIdentity {
    // (z exponent, q exponent) -> coefficient
    std::map<std::pair<int, int>, long long> lhs, rhs;
    bool equal = false;
};
GfIdentity gf_identity_check(int n);
std::string format_qz_polynomial(const std::map<std::pair<int, int>, long long>& poly);

struct BijectionReport {
    int n = 0;
    std::size_t elements = 0;   // compositions checked
    std::size_t failures = 0;   // elements violating a statistic or the inverse
    bool image_complete = false;
    GfIdentity gf;
    bool pass() const { return failures == 0 && image_complete && gf.equal; }
};
/// Checks, for every composition of n, that Phi inverts Psi, that
/// n - l(alpha) = |I| and deg(alpha) = deg(I), and the generating functions.
BijectionReport bijection_check(int n);

std::vector<Composition> compositions(int n);
/// All subsets of [n-1], ordered by size and then lexicographically.
std::vector<SubsetOfRange> subsets(int n);
/// Size-k subsets of [n-1] in lexicographic order.
std::vector<SubsetOfRange> subsets_of_size(int n, int k);
/// Size-k subsets of {1..m} in lexicographic order.
std::vector<std::vector<int>> k_subsets(int m, int k);

/// Partitions of n in decreasing lexicographic order.
std::vector<std::vector<int>> partitions(int n);
std::vector<int> transpose(const std::vector<int>& mu);
/// n! / prod mu_i!.
long long multinomial(const std::vector<int>& mu);
/// Validates a partition (positive, weakly decreasing) and returns its size.
int partition_size(const std::vector<int>& mu);

struct ElementaryGenerator {
    int r = 0;
    std::vector<int> S;
    friend auto operator<=>(const ElementaryGenerator&, const ElementaryGenerator&) = default;
};

struct TanisakiGeneratorSet {
    std::vector<int> mu;
    std::vector<int> dbar;                       // dbar_0 .. dbar_{mu_1 - 1}
    std::vector<std::pair<int, int>> essential;  // (r, m) meaning e_r({1..m})
};

TanisakiGeneratorSet essential_generators(const std::vector<int>& mu);
/// Every essential generator together with its S_n images e_r(S), |S| = m.
std::vector<ElementaryGenerator> essential_generator_orbits(const std::vector<int>& mu);
/// d_k(mu) = sum of the last k entries of mu' padded to length n.
int d_k(const std::vector<int>& mu, int k);
/// The defining set {e_r(S) : |S| - d_{|S|}(mu) < r <= |S|}.
std::vector<ElementaryGenerator> tanisaki_full_generators(const std::vector<int>& mu);

/// The s of the extreme hook condition, if I satisfies it.
std::optional<int> is_extreme_hook(const SubsetOfRange& I);

}  // namespace superharm
