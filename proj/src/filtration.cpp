#include "superharm/filtration.hpp"

#include "superharm/operators.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace superharm {

SuperPolynomial EchelonBasis::reduce(const SuperPolynomial& p) const {
    SuperPolynomial out = p;
    // rows are fully reduced, so the pivot coefficients of p can be cleared in one pass
    for (const auto& t : p.terms()) {
        auto it = pivot_.find(t.mono);
        if (it != pivot_.end()) out.add_scaled(rows_[it->second], -t.coeff);
    }
    return out;
}

SuperPolynomial EchelonBasis::insert(const SuperPolynomial& p) {
    SuperPolynomial v = reduce(p);
    if (v.is_zero()) return v;
    const Monomial pivot = v.terms().front().mono;
    const Rational lead = v.terms().front().coeff;
    if (!(lead == Rational(1))) v = v.scaled(Rational(1) / lead);

    auto occ = occurs_.find(pivot);
    if (occ != occurs_.end()) {
        std::vector<std::size_t> touched = std::move(occ->second);
        occurs_.erase(occ);
        std::sort(touched.begin(), touched.end());
        touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
        for (std::size_t idx : touched) {
            Rational c = rows_[idx].coefficient(pivot);
            if (c.is_zero()) continue;
            rows_[idx].add_scaled(v, -c);
            for (const auto& t : v.terms())
                if (!(t.mono == pivot)) occurs_[t.mono].push_back(idx);
        }
    }
    const std::size_t idx = rows_.size();
    for (const auto& t : v.terms())
        if (!(t.mono == pivot)) occurs_[t.mono].push_back(idx);
    pivot_.emplace(pivot, idx);
    rows_.push_back(v);
    return v;
}

std::vector<SuperPolynomial> GradedSpan::insert(const SuperPolynomial& p) {
    if (p.n() != n_) throw std::invalid_argument("GradedSpan::insert: variable count mismatch");
    std::vector<SuperPolynomial> added;
    for (const auto& [deg, comp] : p.homogeneous_components()) {
        auto [it, fresh] = slices_.try_emplace(deg, n_);
        auto v = it->second.insert(comp);
        if (!v.is_zero()) added.push_back(std::move(v));
    }
    return added;
}

bool GradedSpan::contains(const SuperPolynomial& p) const {
    for (const auto& [deg, comp] : p.homogeneous_components()) {
        auto it = slices_.find(deg);
        if (it == slices_.end() || !it->second.contains(comp)) return false;
    }
    return true;
}

void GradedSpan::merge(const GradedSpan& other) {
    if (other.n_ != n_) throw std::invalid_argument("GradedSpan::merge: variable count mismatch");
    for (const auto& [deg, basis] : other.slices_) {
        auto [it, fresh] = slices_.try_emplace(deg, n_);
        for (const auto& row : basis.rows()) it->second.insert(row);
    }
}

std::map<Bidegree, std::size_t> GradedSpan::dims() const {
    std::map<Bidegree, std::size_t> out;
    for (const auto& [deg, basis] : slices_)
        if (basis.dim() > 0) out[deg] = basis.dim();
    return out;
}

std::map<int, std::size_t> GradedSpan::hilbert() const {
    std::map<int, std::size_t> out;
    for (const auto& [deg, basis] : slices_)
        if (basis.dim() > 0) out[deg.first] += basis.dim();
    return out;
}

std::size_t GradedSpan::total_dim() const {
    std::size_t total = 0;
    for (const auto& [deg, basis] : slices_) total += basis.dim();
    return total;
}

GradedSpan flip_span(int n, const SubsetOfRange& I) {
    if (I.n != n) throw std::invalid_argument("flip_span: subset has a different ambient size");
    GradedSpan span(n);
    auto frontier = span.insert(d_I_vandermonde(I.elems, n));
    while (!frontier.empty()) {
        std::vector<SuperPolynomial> next;
        for (const auto& v : frontier)
            for (int i = 1; i <= n; ++i) {
                auto dv = partial_x(i, v);
                if (dv.is_zero()) continue;
                for (auto& a : span.insert(dv)) next.push_back(std::move(a));
            }
        frontier = std::move(next);
    }
    return span;
}

std::vector<GradedSpan> flip_spans(int n, const std::vector<SubsetOfRange>& list, int jobs) {
    std::vector<GradedSpan> out(list.size(), GradedSpan(n));
    jobs = std::max(1, std::min<int>(jobs, static_cast<int>(list.size())));
    auto work = [&](int w) {
        for (std::size_t i = w; i < list.size(); i += jobs) out[i] = flip_span(n, list[i]);
    };
    if (jobs == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < jobs; ++w) pool.emplace_back(work, w);
        for (auto& th : pool) th.join();
    }
    return out;
}

GradedSpan sum_spans(const std::vector<GradedSpan>& spans) {
    if (spans.empty()) return GradedSpan(0);
    GradedSpan out(spans.front().n());
    for (const auto& s : spans) out.merge(s);
    return out;
}

bool membership(const SuperPolynomial& p, const GradedSpan& span) { return span.contains(p); }

std::map<int, std::size_t> hilbert(const GradedSpan& span) { return span.hilbert(); }

std::vector<ElementaryGenerator> tanisaki_generators(const std::vector<int>& mu, GeneratorSet set) {
    return set == GeneratorSet::Full ? tanisaki_full_generators(mu) : essential_generator_orbits(mu);
}

namespace {

std::size_t monomial_count(int n, int d) {
    // C(n - 1 + d, d)
    std::size_t c = 1;
    for (int i = 1; i <= d; ++i) c = c * (n - 1 + i) / i;
    return c;
}

SuperPolynomial times_x(const SuperPolynomial& p, int i) {
    std::vector<Term> terms;
    terms.reserve(p.size());
    for (const auto& t : p.terms()) {
        Term u = t;
        u.mono.x[i - 1] += 1;
        u.mono.deg += 1;
        terms.push_back(std::move(u));
    }
    return SuperPolynomial::from_terms(p.n(), std::move(terms));
}

}  // namespace

std::map<int, std::size_t> ideal_graded_dims(const std::vector<int>& mu, int cap, GeneratorSet set) {
    const int n = partition_size(mu);
    check_variable_count(n);
    if (cap < 0) throw std::invalid_argument("ideal_graded_dims: negative degree cap");
    auto gens = tanisaki_generators(mu, set);
    std::map<int, std::size_t> out;
    out[0] = 1;
    EchelonBasis prev(n);
    for (int d = 1; d <= cap; ++d) {
        if (out[d - 1] == 0) {
            out[d] = 0;
            continue;
        }
        // I_d = x_1 I_{d-1} + ... + x_n I_{d-1} + (generators of degree d)
        EchelonBasis cur(n);
        for (const auto& row : prev.rows())
            for (int i = 1; i <= n; ++i) cur.insert(times_x(row, i));
        for (const auto& g : gens)
            if (g.r == d) cur.insert(elementary(n, g.r, g.S));
        out[d] = monomial_count(n, d) - cur.dim();
        prev = std::move(cur);
    }
    return out;
}

std::vector<int> factor_partition(const SubsetOfRange& I) { return sorted_partition(phi(I)); }

bool AnnihilationStep::pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.member; });
}

bool AnnihilationReport::pass() const {
    return std::all_of(steps.begin(), steps.end(), [](const auto& s) { return s.pass(); });
}

nlohmann::json AnnihilationReport::to_json() const {
    nlohmann::json j;
    j["n"] = n;
    j["k"] = k;
    j["order"] = nlohmann::json::array();
    for (const auto& I : order) j["order"].push_back(I.elems);
    j["steps"] = nlohmann::json::array();
    for (const auto& s : steps) {
        nlohmann::json step;
        step["I"] = s.I.elems;
        step["mu"] = s.mu;
        step["generators"] = nlohmann::json::array();
        for (const auto& c : s.checks)
            step["generators"].push_back({{"r", c.gen.r}, {"S", c.gen.S}, {"member", c.member}});
        step["pass"] = s.pass();
        j["steps"].push_back(step);
    }
    j["pass"] = pass();
    return j;
}

void validate_order(int n, int k, const std::vector<SubsetOfRange>& order) {
    auto all = subsets_of_size(n, k);
    std::set<SubsetOfRange> want(all.begin(), all.end()), seen;
    for (const auto& I : order) {
        if (I.n != n || I.k() != k || !want.count(I))
            throw std::invalid_argument("order entry " + I.to_string() + " is not a " + std::to_string(k) +
                                        "-subset of [" + std::to_string(n - 1) + "]");
        if (!seen.insert(I).second) throw std::invalid_argument("order repeats " + I.to_string());
    }
    if (seen.size() != want.size()) throw std::invalid_argument("order does not list every subset");
}

namespace {

AnnihilationStep check_step(const SubsetOfRange& I, const GradedSpan& earlier, GeneratorSet set) {
    AnnihilationStep step;
    step.I = I;
    step.mu = factor_partition(I);
    auto base = d_I_vandermonde(I.elems, I.n);
    for (const auto& g : tanisaki_generators(step.mu, set)) {
        auto p = apply_elementary(g.r, g.S, base);
        step.checks.push_back({g, p.is_zero() || earlier.contains(p)});
    }
    return step;
}

}  // namespace

AnnihilationReport annihilation_check(int n, int k, const std::vector<SubsetOfRange>& order, GeneratorSet set,
                                      int jobs) {
    validate_order(n, k, order);
    AnnihilationReport rep;
    rep.n = n;
    rep.k = k;
    rep.order = order;
    auto spans = flip_spans(n, order, jobs);
    GradedSpan earlier(n);
    for (std::size_t m = 0; m < order.size(); ++m) {
        rep.steps.push_back(check_step(order[m], earlier, set));
        earlier.merge(spans[m]);
    }
    return rep;
}

bool FactorReport::graded_match() const {
    return std::all_of(steps.begin(), steps.end(), [](const auto& s) { return s.graded_match; });
}

bool FactorReport::total_match() const {
    return std::all_of(steps.begin(), steps.end(), [](const auto& s) { return s.total_match; });
}

nlohmann::json FactorReport::to_json() const {
    nlohmann::json j = nlohmann::json::array();
    auto as_obj = [](const std::map<int, std::size_t>& m) {
        nlohmann::json o = nlohmann::json::object();
        for (auto [d, v] : m) o[std::to_string(d)] = v;
        return o;
    };
    for (const auto& s : steps)
        j.push_back({{"I", s.I.elems},
                     {"mu", s.mu},
                     {"factor", as_obj(s.factor)},
                     {"expected", as_obj(s.expected)},
                     {"gradedMatch", s.graded_match},
                     {"totalMatch", s.total_match}});
    return j;
}

FactorReport factor_dims_check(int n, int k, const std::vector<SubsetOfRange>& order, int jobs) {
    validate_order(n, k, order);
    auto spans = flip_spans(n, order, jobs);
    FactorReport rep;
    GradedSpan cumulative(n);
    auto before = cumulative.hilbert();
    const int top = n * (n - 1) / 2;
    for (std::size_t m = 0; m < order.size(); ++m) {
        cumulative.merge(spans[m]);
        auto after = cumulative.hilbert();
        FactorStep step;
        step.I = order[m];
        step.mu = factor_partition(order[m]);
        std::size_t got_total = 0, want_total = 0;
        for (auto [d, v] : after) {
            std::size_t prior = before.count(d) ? before.at(d) : 0;
            if (v > prior) step.factor[d] = v - prior;
            got_total += v - prior;
        }
        const int deg = deg_subset(order[m]);
        for (auto [e, v] : ideal_graded_dims(step.mu, top)) {
            if (v == 0) continue;
            step.expected[deg - e] = v;
            want_total += v;
        }
        step.graded_match = step.factor == step.expected;
        step.total_match = got_total == want_total;
        rep.steps.push_back(std::move(step));
        before = std::move(after);
    }
    return rep;
}

std::vector<SubsetOfRange> descending_order(int n) {
    std::vector<SubsetOfRange> out;
    for (int i = n - 1; i >= 1; --i) out.emplace_back(n, std::vector<int>{i});
    return out;
}

nlohmann::json SearchResult::to_json() const {
    nlohmann::json j;
    j["status"] = status == SearchStatus::Found       ? "found"
                  : status == SearchStatus::Exhausted ? "exhausted"
                                                      : "budget-exceeded";
    j["nodes"] = nodes;
    if (status == SearchStatus::Found) {
        j["order"] = nlohmann::json::array();
        for (const auto& I : order) j["order"].push_back(I.elems);
    }
    return j;
}

SearchResult search_order(int n, int k, long node_budget, GeneratorSet set) {
    auto all = subsets_of_size(n, k);
    std::reverse(all.begin(), all.end());
    if (all.size() > 62) throw std::invalid_argument("search_order: too many subsets");
    auto spans = flip_spans(n, all);

    SearchResult res;
    std::set<std::uint64_t> dead;
    std::vector<std::size_t> chosen;
    bool out_of_budget = false;

    std::function<bool(std::uint64_t, const GradedSpan&)> dfs = [&](std::uint64_t mask, const GradedSpan& span) {
        if (chosen.size() == all.size()) return true;
        if (dead.count(mask)) return false;
        for (std::size_t c = 0; c < all.size(); ++c) {
            if (mask >> c & 1U) continue;
            if (res.nodes >= node_budget) {
                out_of_budget = true;
                return false;
            }
            ++res.nodes;
            if (!check_step(all[c], span, set).pass()) continue;
            GradedSpan next = span;
            next.merge(spans[c]);
            chosen.push_back(c);
            if (dfs(mask | (std::uint64_t{1} << c), next)) return true;
            chosen.pop_back();
            if (out_of_budget) return false;
        }
        dead.insert(mask);
        return false;
    };

    if (dfs(0, GradedSpan(n))) {
        res.status = SearchStatus::Found;
        for (auto c : chosen) res.order.push_back(all[c]);
    } else {
        res.status = out_of_budget ? SearchStatus::BudgetExceeded : SearchStatus::Exhausted;
    }
    return res;
}

std::vector<SubsetOfRange> parse_order(int n, const std::string& text) {
    std::vector<SubsetOfRange> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        auto last = line.find_last_not_of(" \t\r");
        out.push_back(SubsetOfRange::from_list(n, line.substr(first, last - first + 1)));
    }
    return out;
}

}  // namespace superharm
