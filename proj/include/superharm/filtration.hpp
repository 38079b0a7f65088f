#pragma once

// Exact graded linear algebra: spans of d_I Delta_n under the flip action,
// Tanisaki quotient dimensions, annihilation checks and order search.

#include "superharm/combinatorics.hpp"
#include "superharm/superpoly.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace superharm {

/// Reduced row echelon basis of a space of polynomials. Each row has
/// coefficient 1 on its pivot monomial and no other row mentions that pivot.
class EchelonBasis {
public:
    explicit EchelonBasis(int n = 0) : n_(n) {}

    /// p minus its projection onto the pivots; zero iff p lies in the span.
    SuperPolynomial reduce(const SuperPolynomial& p) const;
    /// Adds p; returns the reduced vector that was inserted, or zero if p was
    /// already in the span.
    SuperPolynomial insert(const SuperPolynomial& p);
    bool contains(const SuperPolynomial& p) const { return reduce(p).is_zero(); }

    std::size_t dim() const { return rows_.size(); }
    const std::vector<SuperPolynomial>& rows() const { return rows_; }
    bool is_pivot(const Monomial& m) const { return pivot_.count(m) > 0; }

private:
    int n_;
    std::vector<SuperPolynomial> rows_;
    std::map<Monomial, std::size_t> pivot_;
    std::map<Monomial, std::vector<std::size_t>> occurs_;  // non-pivot monomial -> rows that may contain it
};

using Bidegree = std::pair<int, int>;  // (x-degree, theta-degree)

/// A subspace of superspace split into bihomogeneous slices.
class GradedSpan {
public:
    explicit GradedSpan(int n = 0) : n_(n) {}

    int n() const { return n_; }
    /// Inserts every bihomogeneous component; returns the nonzero reduced
    /// components that enlarged the span.
    std::vector<SuperPolynomial> insert(const SuperPolynomial& p);
    bool contains(const SuperPolynomial& p) const;
    void merge(const GradedSpan& other);

    std::map<Bidegree, std::size_t> dims() const;
    /// Dimension by x-degree, summed over theta-degree.
    std::map<int, std::size_t> hilbert() const;
    std::size_t total_dim() const;

private:
    int n_;
    std::map<Bidegree, EchelonBasis> slices_;
};

/// Closure of d_I Delta_n under all partial_{x_i}.
GradedSpan flip_span(int n, const SubsetOfRange& I);
/// flip_span for each subset, built on up to `jobs` threads.
std::vector<GradedSpan> flip_spans(int n, const std::vector<SubsetOfRange>& list, int jobs = 1);
GradedSpan sum_spans(const std::vector<GradedSpan>& spans);
bool membership(const SuperPolynomial& p, const GradedSpan& span);
std::map<int, std::size_t> hilbert(const GradedSpan& span);

enum class GeneratorSet { Essential, Full };

/// The generators used for I_mu.
std::vector<ElementaryGenerator> tanisaki_generators(const std::vector<int>& mu, GeneratorSet set);

/// dim (Q[x]/I_mu)_d for 0 <= d <= cap.
std::map<int, std::size_t> ideal_graded_dims(const std::vector<int>& mu, int cap,
                                             GeneratorSet set = GeneratorSet::Essential);

/// The partition indexing the composition factor attached to I.
std::vector<int> factor_partition(const SubsetOfRange& I);

struct GeneratorCheck {
    ElementaryGenerator gen;
    bool member = false;
};

struct AnnihilationStep {
    SubsetOfRange I;
    std::vector<int> mu;
    std::vector<GeneratorCheck> checks;
    bool pass() const;
};

struct AnnihilationReport {
    int n = 0, k = 0;
    std::vector<SubsetOfRange> order;
    std::vector<AnnihilationStep> steps;
    bool pass() const;
    nlohmann::json to_json() const;
};

/// Throws std::invalid_argument unless `order` lists every k-subset of [n-1] once.
void validate_order(int n, int k, const std::vector<SubsetOfRange>& order);

AnnihilationReport annihilation_check(int n, int k, const std::vector<SubsetOfRange>& order,
                                      GeneratorSet set = GeneratorSet::Essential, int jobs = 1);

struct FactorStep {
    SubsetOfRange I;
    std::vector<int> mu;
    std::map<int, std::size_t> factor;    // x-degree -> dim of the successive quotient
    std::map<int, std::size_t> expected;  // x-degree -> dim (R_mu)_{deg(I) - x-degree}
    bool graded_match = false;
    bool total_match = false;
};

struct FactorReport {
    std::vector<FactorStep> steps;
    bool graded_match() const;
    bool total_match() const;
    nlohmann::json to_json() const;
};

FactorReport factor_dims_check(int n, int k, const std::vector<SubsetOfRange>& order, int jobs = 1);

/// The order {n-1} < {n-2} < ... < {1} on 1-subsets.
std::vector<SubsetOfRange> descending_order(int n);

enum class SearchStatus { Found, Exhausted, BudgetExceeded };

struct SearchResult {
    SearchStatus status = SearchStatus::Exhausted;
    std::vector<SubsetOfRange> order;  // set when found
    long nodes = 0;                    // candidate checks performed
    nlohmann::json to_json() const;
};

/// Depth-first search over orders; at each step the next subset must pass
/// every generator check against the span of the earlier ones.
SearchResult search_order(int n, int k, long node_budget = 100000, GeneratorSet set = GeneratorSet::Essential);

/// Order files: one subset per line as a comma list, "{}" for the empty set.
/// '#' starts a comment; blank lines are skipped.
std::vector<SubsetOfRange> parse_order(int n, const std::string& text);

}  // namespace superharm
