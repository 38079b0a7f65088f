// Acceptance suite: one PASS/FAIL line per criterion.

#include "superharm/combinatorics.hpp"
#include "superharm/filtration.hpp"
#include "superharm/operators.hpp"
#include "superharm/relations.hpp"
#include "superharm/staircase.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <thread>

using namespace superharm;

namespace {

// Every comparison below is between exact rationals: a quantity passes only
// if it is identically zero, or identically equal to its expected value.
constexpr const char* kTolerance = "exact";
constexpr std::uint64_t kSeed = 20240611;
constexpr int kShiftedTrials = 6;  // 343 cases per trial

struct Outcome {
    bool pass = true;
    std::string detail;
};

int jobs = 1;

// runs f(i) for i in [0, count) on `jobs` threads; f must only touch slot i
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& f) {
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i; (i = next++) < count;) f(i);
    };
    std::vector<std::thread> pool;
    for (int w = 1; w < jobs; ++w) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
}

long long factorial(int n) {
    long long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

std::size_t total(const std::map<int, std::size_t>& m) {
    std::size_t t = 0;
    for (auto [d, v] : m) t += v;
    return t;
}

Outcome all_zero(const std::vector<std::function<RelationReport()>>& runs) {
    std::vector<char> zero(runs.size(), 0);
    parallel_for(runs.size(), [&](std::size_t i) { zero[i] = runs[i]().is_zero; });
    std::size_t bad = 0;
    for (char z : zero) bad += !z;
    return {bad == 0, std::to_string(runs.size()) + " relations, " + std::to_string(bad) + " nonzero"};
}

Outcome pieri() {
    std::vector<std::function<RelationReport()>> runs;
    for (int n = 2; n <= 7; ++n)
        for (const auto& I : subsets(n)) runs.push_back([I] { return verify_generic_pieri(I); });
    return all_zero(runs);
}

Outcome hooks() {
    std::vector<std::function<RelationReport()>> runs;
    for (int n = 2; n <= 7; ++n)
        for (const auto& I : subsets(n))
            if (auto s = is_extreme_hook(I))
                for (int u = 0; u <= *s; ++u) runs.push_back([I, u] { return verify_hook(I, u); });
    return all_zero(runs);
}

Outcome goldens() {
    Outcome o;
    for (const auto& g : golden_relations()) {
        bool z = verify_golden(g.label, jobs).is_zero;
        o.pass = o.pass && z;
        o.detail += (o.detail.empty() ? "" : ", ") + g.label + (z ? " zero" : " NONZERO");
    }
    return o;
}

Outcome bijection() {
    Outcome o;
    std::size_t elements = 0;
    for (int n = 1; n <= 12; ++n) {
        auto rep = bijection_check(n);
        elements += rep.elements;
        if (!rep.pass()) {
            o.pass = false;
            o.detail += "n=" + std::to_string(n) + " fails; ";
        }
    }
    o.detail += std::to_string(elements) + " compositions, n = 1..12";
    return o;
}

Outcome staircase_oracle() {
    struct Case {
        int n, r, m;
        std::vector<int> J;
    };
    std::vector<Case> cases;
    for (int n = 1; n <= 6; ++n)
        for (int m = 0; m <= 2 && m <= n; ++m)
            for (int r = 0; r <= n; ++r)
                for (int k = 0; k <= 3; ++k)
                    for (const auto& J : subsets_of_size(n, k)) cases.push_back({n, r, m, J.elems});
    std::vector<char> ok(cases.size(), 0);
    parallel_for(cases.size(), [&](std::size_t i) {
        const auto& c = cases[i];
        ok[i] = staircase_gf(c.n, c.r, c.J, c.m) == apply_elementary(c.r, c.n - c.m, d_J_vandermonde(c.J, c.n));
    });
    std::size_t bad = 0;
    for (char v : ok) bad += !v;
    return {bad == 0, std::to_string(cases.size()) + " (n, r, J, m) cases, " + std::to_string(bad) + " mismatches"};
}

Outcome dimensions() {
    Outcome o;
    for (int n = 3; n <= 5; ++n) {
        std::vector<SubsetOfRange> ones;
        for (int i = 1; i < n; ++i) ones.push_back(SubsetOfRange(n, {i}));
        auto dim = sum_spans(flip_spans(n, ones, jobs)).total_dim();
        auto want = static_cast<std::size_t>((n - 1) * factorial(n) / 2);
        o.pass = o.pass && dim == want;
        o.detail += "n=" + std::to_string(n) + ": " + std::to_string(dim) + "/" + std::to_string(want) + "; ";
    }
    std::size_t checked = 0, bad = 0;
    for (int n = 1; n <= 5; ++n)
        for (const auto& mu : partitions(n)) {
            ++checked;
            if (total(ideal_graded_dims(mu, n * (n - 1) / 2 + 1)) != static_cast<std::size_t>(multinomial(mu))) ++bad;
        }
    o.pass = o.pass && bad == 0;
    o.detail += std::to_string(checked) + " partitions, " + std::to_string(bad) + " wrong totals";
    return o;
}

Outcome one_forms() {
    Outcome o;
    for (int n = 3; n <= 5; ++n) {
        auto order = descending_order(n);
        bool ann = annihilation_check(n, 1, order, GeneratorSet::Essential, jobs).pass();
        auto fac = factor_dims_check(n, 1, order, jobs);
        // expected dims come from R_(2,1^{n-2}) reflected into degrees n-1-i .. deg(d_i Delta_n)
        std::vector<int> hook(n - 1, 1);
        hook[0] = 2;
        auto ref = ideal_graded_dims(hook, n * (n - 1) / 2 + 1);
        bool shifted = true;
        for (const auto& s : fac.steps) {
            const int i = s.I.elems[0];
            const int top = n * (n - 1) / 2 - i;
            std::map<int, std::size_t> want;
            for (auto [e, v] : ref)
                if (v) want[top - e] = v;
            std::map<int, std::size_t> got;
            for (auto [d, v] : s.factor)
                if (v) got[d] = v;
            shifted = shifted && got == want && got.begin()->first == n - 1 - i;
        }
        bool pass = ann && fac.graded_match() && shifted;
        o.pass = o.pass && pass;
        o.detail += "n=" + std::to_string(n) + (pass ? " ok" : " FAIL") + (n < 5 ? ", " : "");
    }
    return o;
}

Outcome shifted_vandermonde() {
    auto rep = shifted_vandermonde_suite(kSeed, kShiftedTrials);
    bool enough = rep.cases >= 500;
    return {rep.pass() && enough, std::to_string(rep.cases) + " cases, " + std::to_string(rep.failures) + " nonzero; " +
                                      std::to_string(rep.scalar_cases) + " scalar cases, " +
                                      std::to_string(rep.scalar_failures) + " nonzero"};
}

// property suites ------------------------------------------------------

SuperPolynomial random_poly(std::mt19937_64& rng, int n, int max_terms, int max_exp, int theta_deg = -1) {
    std::uniform_int_distribution<int> nterms(0, max_terms), ex(0, max_exp), coef(-5, 5), bit(0, 1);
    std::vector<Term> terms;
    int count = nterms(rng);
    for (int t = 0; t < count; ++t) {
        std::vector<int> e(n), th;
        for (int i = 0; i < n; ++i) e[i] = ex(rng);
        if (theta_deg < 0) {
            for (int i = 1; i <= n; ++i)
                if (bit(rng)) th.push_back(i);
        } else {
            std::vector<int> all(n);
            for (int i = 0; i < n; ++i) all[i] = i + 1;
            std::shuffle(all.begin(), all.end(), rng);
            th.assign(all.begin(), all.begin() + theta_deg);
            std::sort(th.begin(), th.end());
        }
        terms.push_back({Monomial::make(e, th), Rational(coef(rng))});
    }
    return SuperPolynomial::from_terms(n, std::move(terms));
}

SuperPolynomial theta(int n, int i) { return theta_times(i, SuperPolynomial::parse("1", n)); }

bool algebra_laws(std::string& why) {
    const int n = 4;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            auto a = theta(n, i) * theta(n, j), b = theta(n, j) * theta(n, i);
            if (a != -b || (i == j && !a.is_zero())) return why = "anticommutation", false;
        }
    std::mt19937_64 rng(kSeed);
    std::uniform_int_distribution<int> deg(0, n);
    for (int it = 0; it < 60; ++it) {
        int dp = deg(rng);
        auto p = random_poly(rng, n, 6, 3, dp), q = random_poly(rng, n, 6, 3);
        const Rational sign(dp % 2 ? -1 : 1);
        for (int i = 1; i <= n; ++i) {
            if (partial_x(i, p * q) != partial_x(i, p) * q + p * partial_x(i, q)) return why = "Leibniz", false;
            // odd derivations: interior products and d_1
            if (interior_theta(i, p * q) != interior_theta(i, p) * q + (p * interior_theta(i, q)).scaled(sign))
                return why = "interior product", false;
            if (i == 1 && d_op(1, p * q) != d_op(1, p) * q + (p * d_op(1, q)).scaled(sign))
                return why = "d_1 derivation", false;
            if (!d_op(i, d_op(i, p)).is_zero()) return why = "d_i^2", false;
            for (int j = 1; j <= n; ++j)
                if (d_op(i, d_op(j, p)) != -d_op(j, d_op(i, p))) return why = "d_i d_j", false;
        }
    }
    return true;
}

bool harmonicity(std::string& why) {
    for (int n = 2; n <= 5; ++n)
        for (const auto& I : subsets(n)) {
            auto w = d_I_vandermonde(I.elems, n);
            for (int r = 1; r <= n; ++r) {
                if (!apply_elementary(r, n, w).is_zero()) return why = "e_r at " + I.to_string(), false;
                if (!apply_diff_operator(d_op(1, elementary(n, r, n)), w).is_zero())
                    return why = "d e_r at " + I.to_string(), false;
            }
        }
    return true;
}

bool move_ok(const MarkedStaircase& before, const std::optional<RelationMove>& mv) {
    if (!mv) return true;
    auto w0 = weight(before), w1 = weight(mv->result);
    if (w0.coeff.is_zero() || w1.coeff.is_zero()) return true;
    return w1.mono == w0.mono && w1.coeff == w0.coeff * Rational(mv->factor);
}

bool staircase_relations(std::string& why, std::size_t& diagrams) {
    for (int n = 2; n <= 4; ++n) {
        std::vector<std::vector<int>> words = {{}};
        for (int k = 1; k <= 3; ++k)
            for (const auto& J : subsets_of_size(n, k)) words.push_back(J.elems);
        for (int j = 1; j < n; ++j) words.push_back({j, j});
        for (int m = 0; m <= 2 && m <= n; ++m)
            for (int r = 0; r <= n; ++r)
                for (const auto& J : words)
                    for (const auto& ms : enumerate_all(n, r, J, m)) {
                        ++diagrams;
                        for (int c = 1; c <= n; ++c) {
                            auto a = relation_A(ms, c);
                            if (!move_ok(ms, a) || (a && a->factor != 1)) return why = "relation A", false;
                        }
                        for (int v = 1; v < n; ++v) {
                            auto b = relation_B(ms, v);
                            if (!move_ok(ms, b) || (b && b->factor != -1)) return why = "relation B", false;
                        }
                        for (int p = 1; p <= n; ++p)
                            for (int q = 1; q <= n; ++q) {
                                auto c = relation_C(ms, p, q);
                                if (!move_ok(ms, c) || (c && c->factor != -1)) return why = "relation C", false;
                                if (p >= q) continue;
                                if (auto H = common_cross_height(ms, p, q)) {
                                    auto d = relation_D(ms, p, q, *H);
                                    if (!d || !move_ok(ms, d)) return why = "relation D", false;
                                    auto back = relation_D(d->result, p, q, *H);
                                    if (!back || back->result != ms) return why = "relation D inverse", false;
                                }
                            }
                    }
    }
    return true;
}

bool shift_axioms(std::string& why) {
    std::mt19937_64 rng(kSeed + 1);
    std::uniform_int_distribution<int> val(-5, 5);
    for (int s = 1; s <= 4; ++s) {
        auto perms = all_permutations(s);
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<int> a(s), g(s);
            for (int i = 0; i < s; ++i) a[i] = val(rng), g[i] = val(rng);
            if (shift_action(Permutation::identity(s), a, g) != g) return why = "shifted identity", false;
            for (const auto& sigma : perms)
                for (const auto& tau : perms)
                    if (shift_action(tau, a, shift_action(sigma, a, g)) != shift_action(tau * sigma, a, g))
                        return why = "shifted composition", false;
        }
    }
    return true;
}

// members of M_I with r, m <= 1 for every extreme hook with n in [3, 4]
bool staircase_axioms(std::string& why) {
    for (int n = 3; n <= 4; ++n)
        for (const auto& I : subsets(n)) {
            auto hs = is_extreme_hook(I);
            if (!hs) continue;
            const int s = *hs, k = I.k();
            std::vector<MarkedStaircase> members;
            std::function<void(int, int, std::vector<int>&)> rec = [&](int pos, int lo, std::vector<int>& J) {
                if (pos == k) {
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
            auto perms = all_permutations(s);
            for (const auto& ms : members) {
                if (act(Permutation::identity(s), ms, I) != ms) return why = "staircase identity", false;
                for (const auto& sigma : perms) {
                    auto img = act(sigma, ms, I);
                    if (!in_M_I(img, I)) return why = "staircase closure", false;
                    for (const auto& tau : perms)
                        if (act(tau, img, I) != act(tau * sigma, ms, I)) return why = "staircase composition", false;
                }
            }
        }
    return true;
}

bool figure_orbit(std::string& why) {
    SubsetOfRange I(10, {1, 3, 4, 8, 9});
    std::vector<int> h(10);
    for (int c = 1; c <= 10; ++c) h[c - 1] = c - 1;
    auto base = MarkedStaircase::plain(h);
    base.crosses = {0, 0, 0, 1, 0, 4, 3, 0, 8, 9};
    const std::vector<int> alpha{1, 0, 0}, gamma{4, 8, 9};
    // the panel showing (7,9,5) carries the label 231, the inverse of the acting permutation
    auto sigma = Permutation::parse("231").inverse();
    if (shift_action(sigma, alpha, gamma) != std::vector<int>{7, 9, 5}) return why = "shifted orbit", false;
    if (active_data(act(sigma, base, I), I).gamma != std::vector<int>{7, 9, 5}) return why = "staircase orbit", false;
    std::set<std::vector<int>> orbit, want{{4, 8, 9}, {4, 9, 8}, {7, 5, 9}, {7, 9, 5}, {8, 5, 8}, {8, 8, 5}};
    for (const auto& p : all_permutations(3)) orbit.insert(active_data(act(p, base, I), I).gamma);
    if (orbit != want) return why = "orbit set", false;
    return true;
}

Outcome properties() {
    Outcome o;
    std::string why;
    std::size_t diagrams = 0;
    std::vector<std::pair<const char*, std::function<bool()>>> suites = {
        {"algebra laws", [&] { return algebra_laws(why); }},
        {"harmonicity", [&] { return harmonicity(why); }},
        {"relations A-D", [&] { return staircase_relations(why, diagrams); }},
        {"shifted action", [&] { return shift_axioms(why); }},
        {"staircase action", [&] { return staircase_axioms(why); }},
        {"figure orbit", [&] { return figure_orbit(why); }},
    };
    for (const auto& [name, run] : suites) {
        why.clear();
        bool ok = run();
        o.pass = o.pass && ok;
        o.detail += std::string(o.detail.empty() ? "" : ", ") + name + (ok ? " ok" : " FAIL (" + why + ")");
    }
    o.detail += "; " + std::to_string(diagrams) + " diagrams";
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"acceptance suite"};
    std::set<int> only;
    app.add_option("--jobs", jobs)->check(CLI::Range(1, 256));
    app.add_option("--only", only, "run only these criteria")->delimiter(',');
    CLI11_PARSE(app, argc, argv);

    std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"generic Pieri relations vanish, all I, n = 2..7", pieri},
        {"extreme hook relations vanish, all u, n <= 7", hooks},
        {"displayed relations vanish", goldens},
        {"bijection statistics and generating functions, n <= 12", bijection},
        {"staircase generating function equals operator expansion, n <= 6", staircase_oracle},
        {"1-form dimensions and Tanisaki quotient totals", dimensions},
        {"1-form filtration: annihilation and graded factors, n = 3..5", one_forms},
        {"shifted Vandermonde identity and scalar identity", shifted_vandermonde},
        {"property suites", properties},
    };

    std::printf("tolerance: %s\n", kTolerance);
    int failed = 0;
    for (std::size_t c = 0; c < criteria.size(); ++c) {
        const int id = static_cast<int>(c) + 1;
        if (!only.empty() && !only.count(id)) continue;
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[c].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        failed += !o.pass;
        std::printf("%s criterion %d: %s (%s) [%.1fs]\n", o.pass ? "PASS" : "FAIL", id, criteria[c].first,
                    o.detail.c_str(), secs);
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
