#pragma once

// Marked n-staircases: columns of distinct heights 0..n-1 decorated with
// top-justified x marks, at most one o per column directly below them, and
// a block of grey columns on the right that may not carry o marks.

#include "superharm/combinatorics.hpp"
#include "superharm/permutation.hpp"
#include "superharm/superpoly.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace superharm {

struct MarkedStaircase {
    int n = 0;
    std::vector<int> heights;  // heights[c - 1] for column c, a permutation of 0..n-1
    std::vector<int> crosses;  // number of x marks in each column
    std::vector<bool> circ;    // whether the column carries an o
    int grey = 0;              // the last `grey` columns are grey

    /// Unmarked staircase with the given heights.
    static MarkedStaircase plain(std::vector<int> heights, int grey = 0);

    bool is_grey(int col) const { return col > n - grey; }
    /// Cells of column `col` that carry no mark.
    int unmarked(int col) const { return heights[col - 1] - crosses[col - 1] - (circ[col - 1] ? 1 : 0); }
    int circ_count() const;
    /// Column with the given height.
    int column_of_height(int h) const;
    /// Nonzero x counts read left to right.
    std::vector<int> cross_word() const;

    /// Throws std::invalid_argument when an invariant fails.
    void validate() const;

    friend bool operator==(const MarkedStaircase&, const MarkedStaircase&) = default;
};

struct StaircaseWeight {
    Rational coeff;  // sign times order; 0 when x counts repeat
    Monomial mono;
};

StaircaseWeight weight(const MarkedStaircase& ms);
/// (-1)^{inversions of the heights} times sgn Delta_k of the x counts.
int staircase_sign(const MarkedStaircase& ms);
/// Product of the heights at which the marks sit.
Rational staircase_order(const MarkedStaircase& ms);

/// Visits every marked n-staircase with r o marks, x counts forming the
/// multiset J (entries >= 1) and the last m columns grey.
void enumerate(int n, int r, const std::vector<int>& J, int m,
               const std::function<void(const MarkedStaircase&)>& visit);
std::vector<MarkedStaircase> enumerate_all(int n, int r, const std::vector<int>& J, int m);

/// Weight generating function of enumerate(n, r, J, m).
SuperPolynomial staircase_gf(int n, int r, const std::vector<int>& J, int m);

/// ASCII picture, tallest row first: 'x' and 'o' for marks, '.' for an
/// unmarked cell, '#' for an unmarked grey cell, ' ' outside the diagram.
std::string render(const MarkedStaircase& ms);

struct RelationMove {
    MarkedStaircase result;
    int factor = 0;  // weight(result) = factor * weight(original) when both are nonzero
};

/// (A) bottom x of a non-grey column with >= 2 x and no o becomes an o.
std::optional<RelationMove> relation_A(const MarkedStaircase& ms, int col);
/// Inverse of (A): the o of a column with x marks becomes an x.
std::optional<RelationMove> relation_A_inverse(const MarkedStaircase& ms, int col);
/// (B) columns of heights v and v-1, both non-grey, the first with an o and the
/// second without: heights swap, each column keeps its x marks, the o moves to
/// the column now of height v.
std::optional<RelationMove> relation_B(const MarkedStaircase& ms, int v);
/// (C) column p has j >= 2 x and no o (non-grey), column q has j-1 x and an o:
/// the last x of p and the o of q trade places.
std::optional<RelationMove> relation_C(const MarkedStaircase& ms, int p, int q);
/// (D) columns p and q both have an x at height H: the x stacks above H trade
/// columns, i.e. heights swap while each column keeps its cells at or below H.
std::optional<RelationMove> relation_D(const MarkedStaircase& ms, int p, int q, int H);
/// Some height at which both columns carry an x.
std::optional<int> common_cross_height(const MarkedStaircase& ms, int p, int q);

struct ActiveData {
    int s = 0;
    int d = 0;
    std::vector<int> active;  // column indices, left to right
    std::vector<int> gamma;   // x counts of the active columns
    std::vector<int> alpha;   // cells without x in the active columns
    std::vector<int> omega;   // positions in [s] with an o
    std::vector<int> pi;      // non-grey positions without an o
    std::vector<int> psi;     // grey positions
    int delta = 0;            // number of o marks
    int eta = 0;              // number of grey columns
};

/// Whether ms lies in M_I for an extreme hook I.
bool in_M_I(const MarkedStaircase& ms, const SubsetOfRange& I);
/// Throws when I is not an extreme hook or ms is not in M_I.
ActiveData active_data(const MarkedStaircase& ms, const SubsetOfRange& I);
/// The S_s action: the sigma(l)-th active column receives the l-th active height.
MarkedStaircase act(const Permutation& sigma, const MarkedStaircase& ms, const SubsetOfRange& I);

}  // namespace superharm
