#include "superharm/relations.hpp"

#include "superharm/operators.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>
#include <thread>

namespace superharm {

std::vector<RelationTerm> generic_pieri_terms(const SubsetOfRange& I) {
    const int n = I.n, k = I.k();
    std::vector<RelationTerm> out;
    std::vector<int> J(k);
    std::function<void(int, int)> rec = [&](int t, int d) {
        if (t == k) {
            int r = n - k - d;
            if (r < 0) throw std::logic_error("generic_pieri_terms: negative elementary degree");
            out.push_back({Rational(d % 2 == 0 ? 1 : -1), r, 1, J});
            return;
        }
        int hi = t + 1 < k ? I.elems[t + 1] - 1 : n - 1;
        for (int j = I.elems[t]; j <= hi; ++j) {
            J[t] = j;
            rec(t + 1, d + j - I.elems[t]);
        }
    };
    rec(0, 0);
    return out;
}

std::vector<RelationTerm> hook_terms(const SubsetOfRange& I, int u) {
    auto hook = is_extreme_hook(I);
    if (!hook) throw std::invalid_argument("hook_terms: " + I.to_string() + " is not an extreme hook");
    const int s = *hook;
    if (u < 0 || u > s) throw std::invalid_argument("hook_terms: u must lie in [0, s]");
    const int n = I.n, k = I.k();
    int itop = 0;
    for (int t = k - s; t < k; ++t) itop += I.elems[t];

    std::vector<RelationTerm> out;
    std::vector<int> J(I.elems.begin(), I.elems.begin() + (k - s));
    std::function<void(int, int)> rec = [&](int t, int lo) {
        if (t == k) {
            int sum = 0;
            for (int p = k - s; p < k; ++p) sum += J[p];
            int d = sum - itop;
            if (d < 0 || n - s - d < 0) return;
            std::vector<int> top(J.begin() + (k - s), J.end());
            Rational c = vandermonde_value(top) * binomial_poly(d + u, u);
            if (d % 2) c = -c;
            out.push_back({c, n - s - d, s - u, J});
            return;
        }
        for (int j = lo; j <= n - 1; ++j) {
            J.push_back(j);
            rec(t + 1, j + 1);
            J.pop_back();
        }
    };
    rec(k - s, k - s > 0 ? J.back() + 1 : 1);
    return out;
}

const std::vector<GoldenRelation>& golden_relations() {
    static const std::vector<GoldenRelation> table = {
        {"n3k1", 3, {{1, 2, 1, {1}}, {-1, 1, 1, {2}}}},
        {"n3k1-zero", 3, {{1, 2, 1, {2}}}},
        {"n7k2",
         7,
         {{5, 5, 2, {1, 6}},
          {-4, 4, 2, {2, 6}},
          {3, 3, 2, {3, 6}},
          {-2, 2, 2, {4, 6}},
          {1, 1, 2, {5, 6}},
          {3, 5, 2, {2, 5}},
          {-2, 4, 2, {3, 5}},
          {1, 3, 2, {4, 5}},
          {1, 5, 2, {3, 4}}}},
        {"n8k3",
         8,
         {{4, 6, 2, {3, 5, 6}},
          {-8, 5, 2, {3, 5, 7}},
          {4, 4, 2, {3, 6, 7}},
          {-3, 5, 2, {4, 5, 6}},
          {6, 4, 2, {4, 5, 7}},
          {-3, 3, 2, {4, 6, 7}}}},
    };
    return table;
}

const GoldenRelation& golden_relation(std::string_view label) {
    for (const auto& g : golden_relations())
        if (g.label == label) return g;
    throw std::invalid_argument("unknown golden relation '" + std::string(label) + "'");
}

SuperPolynomial term_value(int n, const RelationTerm& t) {
    auto base = d_J_vandermonde(t.J, n);
    return apply_elementary(t.r, n - t.m, base).scaled(t.coeff);
}

Expansion expand_relation(int n, const std::vector<RelationTerm>& terms, int jobs) {
    for (const auto& t : terms)
        if (t.m < 0 || t.m > n) throw std::invalid_argument("expand_relation: grey count out of range");
    std::map<std::vector<int>, std::vector<std::size_t>> by_J;
    for (std::size_t i = 0; i < terms.size(); ++i) by_J[terms[i].J].push_back(i);
    std::vector<const std::pair<const std::vector<int>, std::vector<std::size_t>>*> groups;
    for (const auto& g : by_J) groups.push_back(&g);

    jobs = std::max(1, std::min<int>(jobs, static_cast<int>(groups.size())));
    std::vector<SuperPolynomial> partial(jobs, SuperPolynomial(n));
    std::vector<std::size_t> widest(jobs, 0);
    auto work = [&](int w) {
        for (std::size_t g = w; g < groups.size(); g += jobs) {
            auto base = d_J_vandermonde(groups[g]->first, n);
            widest[w] = std::max(widest[w], base.size());
            for (std::size_t idx : groups[g]->second) {
                const auto& t = terms[idx];
                auto v = apply_elementary(t.r, n - t.m, base);
                widest[w] = std::max(widest[w], v.size());
                partial[w].add_scaled(v, t.coeff);
            }
            widest[w] = std::max(widest[w], partial[w].size());
        }
    };
    if (jobs == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < jobs; ++w) pool.emplace_back(work, w);
        for (auto& th : pool) th.join();
    }
    Expansion e{SuperPolynomial(n), 0};
    for (int w = 0; w < jobs; ++w) {
        e.sum += partial[w];
        e.max_intermediate_terms = std::max(e.max_intermediate_terms, widest[w]);
    }
    return e;
}

nlohmann::json RelationReport::to_json(bool with_time) const {
    nlohmann::json j;
    j["relation"] = relation;
    if (!label.empty()) j["label"] = label;
    j["n"] = n;
    if (I) j["I"] = I->elems;
    if (u) j["u"] = *u;
    j["isZero"] = is_zero;
    j["termCount"] = term_count;
    j["maxIntermediateTerms"] = max_intermediate_terms;
    if (with_time) j["wallTime"] = wall_time;
    return j;
}

namespace {

RelationReport run(RelationReport rep, const std::vector<RelationTerm>& terms, int jobs) {
    auto start = std::chrono::steady_clock::now();
    auto e = expand_relation(rep.n, terms, jobs);
    rep.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    rep.is_zero = e.sum.is_zero();
    rep.term_count = terms.size();
    rep.max_intermediate_terms = e.max_intermediate_terms;
    return rep;
}

}  // namespace

RelationReport verify_generic_pieri(const SubsetOfRange& I, int jobs) {
    RelationReport rep;
    rep.relation = "pieri";
    rep.n = I.n;
    rep.I = I;
    return run(std::move(rep), generic_pieri_terms(I), jobs);
}

RelationReport verify_hook(const SubsetOfRange& I, int u, int jobs) {
    RelationReport rep;
    rep.relation = "hook";
    rep.n = I.n;
    rep.I = I;
    rep.u = u;
    return run(std::move(rep), hook_terms(I, u), jobs);
}

RelationReport verify_golden(std::string_view label, int jobs) {
    const auto& g = golden_relation(label);
    RelationReport rep;
    rep.relation = "golden";
    rep.label = g.label;
    rep.n = g.n;
    return run(std::move(rep), g.terms, jobs);
}

std::vector<int> shift_action(const Permutation& sigma, const std::vector<int>& alpha,
                              const std::vector<int>& gamma) {
    const int s = sigma.size();
    if (static_cast<int>(alpha.size()) != s || static_cast<int>(gamma.size()) != s)
        throw std::invalid_argument("shift_action: length mismatch");
    auto inv = sigma.inverse();
    std::vector<int> out(s);
    for (int l = 1; l <= s; ++l) {
        int src = inv(l);
        out[l - 1] = gamma[src - 1] + alpha[src - 1] - alpha[l - 1];
    }
    return out;
}

Rational vandermonde_value(const std::vector<int>& a) {
    Rational prod(1);
    for (std::size_t w = 0; w < a.size(); ++w)
        for (std::size_t v = 0; v < w; ++v) {
            if (a[w] == a[v]) return Rational(0);
            prod *= Rational(a[w] - a[v]);
        }
    return prod;
}

Rational binomial_poly(long long top, int u) {
    if (u < 0) throw std::invalid_argument("binomial_poly: negative u");
    Rational num(1), den(1);
    for (int i = 0; i < u; ++i) {
        num *= Rational(top - i);
        den *= Rational(i + 1);
    }
    return num / den;
}

namespace {

template <class Weight>
Rational shifted_sum(const std::vector<int>& gamma, const std::vector<int>& alpha, const std::vector<int>& Pi,
                     Weight weight_of_size) {
    const int s = static_cast<int>(gamma.size());
    if (static_cast<int>(alpha.size()) != s) throw std::invalid_argument("shifted Vandermonde: length mismatch");
    for (int p : Pi)
        if (p < 1 || p > s) throw std::invalid_argument("shifted Vandermonde: Pi must lie in [s]");
    const int p = static_cast<int>(Pi.size());
    Rational total(0);
    for (const auto& sigma : all_permutations(s)) {
        auto base = shift_action(sigma, alpha, gamma);
        for (unsigned mask = 0; mask < (1U << p); ++mask) {
            auto v = base;
            int size = 0;
            for (int b = 0; b < p; ++b)
                if (mask >> b & 1U) {
                    v[Pi[b] - 1] -= 1;
                    ++size;
                }
            Rational term = vandermonde_value(v) * weight_of_size(size);
            if ((size + (sigma.sign() < 0 ? 1 : 0)) % 2) term = -term;
            total += term;
        }
    }
    return total;
}

}  // namespace

Rational shifted_vandermonde_sum(const std::vector<int>& gamma, const std::vector<int>& alpha,
                                 const std::vector<int>& Pi, int u, long long v) {
    if (u < 0 || static_cast<int>(Pi.size()) <= u)
        throw std::invalid_argument("shifted_vandermonde_sum: requires |Pi| > u >= 0");
    return shifted_sum(gamma, alpha, Pi, [&](int size) { return binomial_poly(v - size + u, u); });
}

Rational shifted_vandermonde_power_sum(const std::vector<int>& gamma, const std::vector<int>& alpha,
                                       const std::vector<int>& Pi, int u) {
    if (u < 0 || static_cast<int>(Pi.size()) <= u)
        throw std::invalid_argument("shifted_vandermonde_power_sum: requires |Pi| > u >= 0");
    return shifted_sum(gamma, alpha, Pi, [&](int size) {
        Rational r(1);
        for (int i = 0; i < u; ++i) r *= Rational(size);
        return r;
    });
}

Rational alternating_power_sum(int p, int u) {
    if (p < 0 || u < 0) throw std::invalid_argument("alternating_power_sum: negative argument");
    Rational total(0), binom(1);
    for (int k = 0; k <= p; ++k) {
        Rational pw(1);
        for (int i = 0; i < u; ++i) pw *= Rational(k);
        total += k % 2 ? -(binom * pw) : binom * pw;
        binom = binom * Rational(p - k) / Rational(k + 1);
    }
    return total;
}

nlohmann::json ShiftedVandermondeReport::to_json() const {
    return {{"seed", seed},
            {"cases", cases},
            {"failures", failures},
            {"scalarCases", scalar_cases},
            {"scalarFailures", scalar_failures},
            {"pass", pass()}};
}

ShiftedVandermondeReport shifted_vandermonde_suite(std::uint64_t seed, int trials) {
    ShiftedVandermondeReport rep;
    rep.seed = seed;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> val(-5, 5);
    for (int s = 1; s <= 4; ++s)
        for (int trial = 0; trial < trials; ++trial) {
            std::vector<int> g(s), a(s);
            for (int i = 0; i < s; ++i) g[i] = val(rng), a[i] = val(rng);
            for (unsigned mask = 1; mask < (1U << s); ++mask) {
                std::vector<int> Pi;
                for (int b = 0; b < s; ++b)
                    if (mask >> b & 1U) Pi.push_back(b + 1);
                for (int u = 0; u < static_cast<int>(Pi.size()); ++u)
                    for (int v = -3; v <= 3; ++v) {
                        ++rep.cases;
                        if (!shifted_vandermonde_sum(g, a, Pi, u, v).is_zero()) ++rep.failures;
                    }
            }
        }
    for (int p = 1; p <= 8; ++p)
        for (int u = 0; u < p; ++u) {
            ++rep.scalar_cases;
            if (!alternating_power_sum(p, u).is_zero()) ++rep.scalar_failures;
        }
    return rep;
}

}  // namespace superharm
