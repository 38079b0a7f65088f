#include "doctest.h"
#include "superharm/operators.hpp"
#include "superharm/staircase.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>

using namespace superharm;

namespace {

MarkedStaircase worked_example() {
    MarkedStaircase ms{6, {1, 5, 3, 0, 2, 4}, {0, 2, 0, 0, 1, 3}, {true, false, false, false, true, false}, 1};
    ms.validate();
    return ms;
}

// n = 10, I = {1,3,4,8,9}: column c has height c - 1
MarkedStaircase figure_base() {
    std::vector<int> h(10);
    for (int c = 1; c <= 10; ++c) h[c - 1] = c - 1;
    auto ms = MarkedStaircase::plain(h);
    ms.crosses = {0, 0, 0, 1, 0, 4, 3, 0, 8, 9};
    ms.validate();
    return ms;
}

SuperPolynomial as_poly(int n, const StaircaseWeight& w) {
    return SuperPolynomial::from_terms(n, {{w.mono, w.coeff}});
}

std::vector<int> sorted_word(const MarkedStaircase& ms) {
    auto w = ms.cross_word();
    std::sort(w.begin(), w.end());
    return w;
}

// every diagram with the given shape data, for relation checks
std::vector<MarkedStaircase> small_diagrams(int n) {
    std::vector<MarkedStaircase> out;
    std::vector<std::vector<int>> words = {{}};
    for (int k = 1; k <= 3; ++k)
        for (const auto& J : subsets_of_size(n, k)) words.push_back(J.elems);
    for (int j = 1; j < n; ++j) words.push_back({j, j});
    for (int m = 0; m <= 2 && m <= n; ++m)
        for (int r = 0; r <= n; ++r)
            for (const auto& J : words) {
                auto part = enumerate_all(n, r, J, m);
                out.insert(out.end(), part.begin(), part.end());
            }
    return out;
}

void check_move(const MarkedStaircase& before, const std::optional<RelationMove>& mv) {
    if (!mv) return;
    CHECK_NOTHROW(mv->result.validate());
    CHECK(mv->result.cross_word().size() == before.cross_word().size());
    auto w0 = weight(before), w1 = weight(mv->result);
    if (!w0.coeff.is_zero() && !w1.coeff.is_zero()) {
        CHECK(w1.mono == w0.mono);
        CHECK(w1.coeff == w0.coeff * Rational(mv->factor));
    }
}

}  // namespace

TEST_CASE("weight of the worked example") {
    auto ms = worked_example();
    auto w = weight(ms);
    CHECK(w.coeff == Rational(960));
    CHECK(w.mono == Monomial::make(std::vector<int>{0, 3, 3, 0, 0, 1}, std::vector<int>{2, 5, 6}));
    CHECK(staircase_order(ms) == Rational(960));
    CHECK(staircase_sign(ms) == 1);
    CHECK(as_poly(6, w).to_string() == "960 x2^3 x3^3 x6 t2 t5 t6");
}

TEST_CASE("plain and degenerate weights") {
    for (int n = 1; n <= 8; ++n) {
        std::vector<int> h(n), e(n);
        for (int c = 0; c < n; ++c) h[c] = e[c] = c;
        auto w = weight(MarkedStaircase::plain(h));
        CHECK(w.coeff == Rational(1));
        CHECK(w.mono == Monomial::make(e));
    }
    auto ms = MarkedStaircase::plain({0, 1, 2, 3});
    ms.crosses = {0, 0, 2, 2};
    CHECK(weight(ms).coeff.is_zero());
    CHECK_THROWS(MarkedStaircase::plain({0, 0, 1}));
    auto bad = MarkedStaircase::plain({0, 1, 2}, 1);
    bad.circ[2] = true;
    CHECK_THROWS(bad.validate());
}

TEST_CASE("enumeration examples") {
    auto two = enumerate_all(2, 0, {1}, 0);
    CHECK(two.size() == 2);
    CHECK(staircase_gf(2, 0, {1}, 0) == SuperPolynomial::parse("-t1 + t2", 2));
    CHECK(staircase_gf(2, 0, {1}, 0) == d_J_vandermonde(std::vector<int>{1}, 2));
    CHECK(enumerate_all(1, 1, {}, 0).empty());
    CHECK(enumerate_all(3, 3, {}, 0).empty());
    CHECK(staircase_gf(4, 0, {2, 2}, 0).is_zero());
    CHECK(staircase_gf(4, 1, {1, 1, 3}, 1).is_zero());
    CHECK_THROWS(enumerate_all(3, 0, {0}, 0));

    // duplicate free
    for (int n = 2; n <= 4; ++n) {
        auto all = enumerate_all(n, 1, {1, 2}, 1);
        std::set<std::tuple<std::vector<int>, std::vector<int>, std::vector<bool>>> seen;
        for (const auto& ms : all) {
            CHECK_NOTHROW(ms.validate());
            seen.insert({ms.heights, ms.crosses, ms.circ});
        }
        CHECK(seen.size() == all.size());
    }
}

TEST_CASE("generating function equals the operator expansion") {
    CHECK(staircase_gf(3, 1, {2}, 1) == apply_elementary(1, 2, d_J_vandermonde(std::vector<int>{2}, 3)));
    for (int n = 1; n <= 6; ++n)
        for (int m = 0; m <= 2 && m <= n; ++m)
            for (int r = 0; r <= n; ++r)
                for (int k = 0; k <= 3; ++k)
                    for (const auto& J : subsets_of_size(n, k)) {
                        auto lhs = staircase_gf(n, r, J.elems, m);
                        auto rhs = apply_elementary(r, n - m, d_J_vandermonde(J.elems, n));
                        CHECK_MESSAGE(lhs == rhs, "n=" << n << " r=" << r << " m=" << m << " J=" << J.to_list());
                    }
}

TEST_CASE("generating function spot checks at n = 7") {
    std::mt19937_64 rng(7);
    const int n = 7;
    std::uniform_int_distribution<int> rd(0, 3), md(0, 2), kd(1, 3);
    for (int trial = 0; trial < 4; ++trial) {
        int r = rd(rng), m = md(rng), k = kd(rng);
        auto all = subsets_of_size(n, k);
        std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
        auto J = all[pick(rng)].elems;
        auto lhs = staircase_gf(n, r, J, m);
        auto rhs = apply_elementary(r, n - m, d_J_vandermonde(J, n));
        CHECK_MESSAGE(lhs == rhs, "r=" << r << " m=" << m << " J=" << join_ints(J));
    }
}

TEST_CASE("relations are involutions with the stated factors") {
    for (int n = 2; n <= 4; ++n) {
        for (const auto& ms : small_diagrams(n)) {
            for (int c = 1; c <= n; ++c) {
                auto a = relation_A(ms, c);
                check_move(ms, a);
                if (a) {
                    CHECK(a->factor == 1);
                    auto back = relation_A_inverse(a->result, c);
                    REQUIRE(back);
                    CHECK(back->result == ms);
                }
            }
            for (int v = 1; v < n; ++v) {
                auto b = relation_B(ms, v);
                check_move(ms, b);
                if (b) {
                    CHECK(b->factor == -1);
                    auto back = relation_B(b->result, v);
                    REQUIRE(back);
                    CHECK(back->result == ms);
                }
            }
            for (int p = 1; p <= n; ++p)
                for (int q = 1; q <= n; ++q) {
                    auto c = relation_C(ms, p, q);
                    check_move(ms, c);
                    if (c) {
                        CHECK(c->factor == -1);
                        auto back = relation_C(c->result, q, p);
                        REQUIRE(back);
                        CHECK(back->result == ms);
                    }
                    if (p >= q) continue;
                    auto H = common_cross_height(ms, p, q);
                    if (!H) continue;
                    auto d = relation_D(ms, p, q, *H);
                    REQUIRE(d);
                    check_move(ms, d);
                    CHECK(std::abs(d->factor) <= 1);
                    auto back = relation_D(d->result, p, q, *H);
                    REQUIRE(back);
                    CHECK(back->result == ms);
                }
        }
    }
}

TEST_CASE("relation side conditions") {
    auto ms = MarkedStaircase::plain({0, 1, 2, 3}, 1);
    ms.crosses = {0, 0, 0, 2};
    CHECK_FALSE(relation_A(ms, 4));  // grey
    ms.grey = 0;
    REQUIRE(relation_A(ms, 4));
    CHECK(relation_A(ms, 4)->result.crosses[3] == 1);
    CHECK_FALSE(relation_A(ms, 3));
    CHECK_FALSE(relation_B(ms, 3));
    CHECK_FALSE(relation_C(ms, 4, 3));
    CHECK_FALSE(relation_D(ms, 3, 4, 3));
    CHECK_FALSE(relation_A(ms, 0));
}

TEST_CASE("relation D on the figure") {
    auto ms = figure_base();
    auto H = common_cross_height(ms, 9, 10);
    REQUIRE(H);
    auto d = relation_D(ms, 9, 10, *H);
    REQUIRE(d);
    CHECK(d->result.crosses[8] == 9);
    CHECK(d->result.crosses[9] == 8);
    CHECK(weight(d->result).coeff == weight(ms).coeff * Rational(d->factor));
    CHECK(d->factor == 1);
    CHECK_FALSE(relation_D(ms, 4, 9, 8));
}

TEST_CASE("render") {
    auto text = render(figure_base());
    CHECK(text ==
          "         x\n"
          "        xx\n"
          "       .xx\n"
          "      x.xx\n"
          "     xx.xx\n"
          "    .xx.xx\n"
          "   x.x..xx\n"
          "  ...x..xx\n"
          " .......xx\n");
    CHECK(render(worked_example()) ==
          " x\n"
          " x   x\n"
          " ..  x\n"
          " .. xx\n"
          "o.. o#\n");
}

TEST_CASE("active data of the figure") {
    SubsetOfRange I(10, {1, 3, 4, 8, 9});
    auto ms = figure_base();
    REQUIRE(in_M_I(ms, I));
    auto a = active_data(ms, I);
    CHECK(a.s == 3);
    CHECK(a.d == 0);
    CHECK(a.active == std::vector<int>{6, 9, 10});
    CHECK(a.gamma == std::vector<int>{4, 8, 9});
    CHECK(a.alpha == std::vector<int>{1, 0, 0});
    CHECK(a.pi == std::vector<int>{1, 2, 3});
    CHECK(a.omega.empty());
    CHECK(a.psi.empty());
    CHECK_FALSE(in_M_I(ms, SubsetOfRange(10, {1, 3, 4, 8})));
    CHECK_THROWS(active_data(MarkedStaircase::plain({0, 1, 2, 3, 4, 5, 6, 7, 8, 9}), I));
}

TEST_CASE("the figure orbit") {
    SubsetOfRange I(10, {1, 3, 4, 8, 9});
    auto base = figure_base();
    // label written under each panel is sigma^{-1}
    std::vector<std::pair<const char*, std::vector<int>>> panels = {
        {"123", {4, 8, 9}}, {"132", {4, 9, 8}}, {"213", {7, 5, 9}},
        {"231", {7, 9, 5}}, {"312", {8, 5, 8}}, {"321", {8, 8, 5}}};
    std::map<std::vector<int>, int> multisets;
    for (const auto& [label, gamma] : panels) {
        auto sigma = Permutation::parse(label).inverse();
        auto img = act(sigma, base, I);
        REQUIRE(in_M_I(img, I));
        CHECK(active_data(img, I).gamma == gamma);
        CHECK(active_data(img, I).alpha == std::vector<int>{1, 0, 0});
        ++multisets[sorted_word(img)];
    }
    CHECK(act(Permutation::parse("312"), base, I).crosses == std::vector<int>{0, 0, 0, 1, 0, 7, 3, 0, 9, 5});
    CHECK(multisets.size() == 3);
    CHECK(multisets[{1, 3, 4, 8, 9}] == 2);
    CHECK(multisets[{1, 3, 5, 7, 9}] == 2);
    CHECK(multisets[{1, 3, 5, 8, 8}] == 2);
    CHECK(act(Permutation::identity(3), base, I) == base);
    CHECK_THROWS(act(Permutation::identity(2), base, I));
}

TEST_CASE("action axioms and the weight identity") {
    // all members of M_I with at most one o, for hooks at small n and the figure
    std::vector<std::pair<SubsetOfRange, std::vector<MarkedStaircase>>> cases;
    for (int n = 3; n <= 5; ++n)
        for (const auto& I : subsets(n)) {
            if (!is_extreme_hook(I)) continue;
            std::vector<MarkedStaircase> members;
            int s = *is_extreme_hook(I);
            int k = I.k();
            // top entries range over multisets of [n-1] with d >= 0
            std::function<void(int, int, std::vector<int>&)> rec = [&](int pos, int lo, std::vector<int>& J) {
                if (pos == k) {
                    int d = 0;
                    for (int t = k - s; t < k; ++t) d += J[t] - I.elems[t];
                    if (d < 0) return;
                    for (int m = 0; m <= 1; ++m)
                        for (int r = 0; r <= 1; ++r)
                            enumerate(n, r, J, m, [&](const MarkedStaircase& ms) {
                                if (in_M_I(ms, I)) members.push_back(ms);
                            });
                    return;
                }
                for (int v = lo; v <= n - 1; ++v) {
                    J.push_back(v);
                    rec(pos + 1, v, J);
                    J.pop_back();
                }
            };
            std::vector<int> J(I.elems.begin(), I.elems.begin() + (k - s));
            rec(k - s, k - s > 0 ? J.back() : 1, J);
            cases.push_back({I, members});
        }
    std::size_t total = 0;
    for (const auto& [I, members] : cases) {
        int s = *is_extreme_hook(I);
        auto perms = all_permutations(s);
        for (const auto& ms : members) {
            ++total;
            auto a0 = active_data(ms, I);
            auto w0 = weight(ms);
            for (const auto& sigma : perms) {
                auto img = act(sigma, ms, I);
                REQUIRE(in_M_I(img, I));
                auto a1 = active_data(img, I);
                CHECK(a1.alpha == a0.alpha);
                CHECK(a1.d == a0.d);
                CHECK(a1.omega.size() == a0.omega.size());
                // Gamma transforms by the shifted action
                for (int l = 1; l <= s; ++l) {
                    int src = sigma.inverse()(l);
                    CHECK(a1.gamma[l - 1] == a0.gamma[src - 1] + a0.alpha[src - 1] - a0.alpha[l - 1]);
                }
                auto w1 = weight(img);
                CHECK(w1.mono == w0.mono);
                CHECK(w1.coeff * Rational(vandermonde_sign(a0.gamma)) ==
                      w0.coeff * Rational(sigma.sign() * vandermonde_sign(a1.gamma)));
                for (const auto& tau : perms) CHECK(act(tau, img, I) == act(tau * sigma, ms, I));
            }
        }
    }
    CHECK(total > 0);
}

TEST_CASE("active columns bound the mark placements") {
    // place the k marked columns at distinct heights and check the
    // lexicographic bound and d < min active height
    auto check_hook = [](const SubsetOfRange& I) {
        const int n = I.n, k = I.k();
        const int s = *is_extreme_hook(I);
        long placements = 0;
        std::vector<int> J(I.elems.begin(), I.elems.begin() + (k - s));
        std::function<void(int, int)> rec = [&](int pos, int lo) {
            if (pos == k) {
                int d = 0;
                for (int t = k - s; t < k; ++t) d += J[t] - I.elems[t];
                if (d < 0) return;
                std::vector<int> h(k, 0);
                std::vector<bool> used(n, false);
                std::function<void(int)> place = [&](int t) {
                    if (t == k) {
                        ++placements;
                        std::vector<int> top(J.begin() + (k - s), J.end());
                        std::vector<int> itop(I.elems.begin() + (k - s), I.elems.end());
                        CHECK(top >= itop);
                        if (d > 0) CHECK(J[k - s] > I.elems[k - s]);
                        if (J[k - s] == I.elems[k - s]) CHECK(J == I.elems);
                        int minh = *std::min_element(h.begin() + (k - s), h.end());
                        CHECK(d < minh);
                        return;
                    }
                    for (int v = J[t]; v <= n - 1; ++v) {
                        if (used[v]) continue;
                        used[v] = true;
                        h[t] = v;
                        place(t + 1);
                        used[v] = false;
                    }
                };
                place(0);
                return;
            }
            for (int v = lo; v <= n - 1; ++v) {
                J.push_back(v);
                rec(pos + 1, v);
                J.pop_back();
            }
        };
        rec(k - s, k - s > 0 ? J.back() : 1);
        return placements;
    };
    CHECK(check_hook(SubsetOfRange(10, {1, 3, 4, 8, 9})) > 0);
    // d = 0 does not force J = I: the figure orbit contains {1,3,5,7,9}
    SubsetOfRange I(10, {1, 3, 4, 8, 9});
    auto img = act(Permutation::parse("213"), figure_base(), I);
    CHECK(active_data(img, I).d == 0);
    CHECK(sorted_word(img) == std::vector<int>{1, 3, 5, 7, 9});
    for (int n = 2; n <= 7; ++n)
        for (const auto& I : subsets(n))
            if (is_extreme_hook(I)) CHECK(check_hook(I) > 0);
}
