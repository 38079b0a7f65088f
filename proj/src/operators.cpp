#include "superharm/operators.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace superharm {

namespace {

void check_index(int i, int n, const char* what) {
    if (i < 1 || i > n)
        throw std::out_of_range(std::string(what) + ": index " + std::to_string(i) + " outside [1, " +
                                std::to_string(n) + "]");
}

int bits_below(std::uint32_t mask, int i) {
    return __builtin_popcount(mask & ((1U << (i - 1)) - 1U));
}

Rational falling(int x, int k) {
    long long v = 1;
    for (int t = 0; t < k; ++t) v *= (x - t);
    return Rational(v);
}

std::vector<Term> merge_all(std::vector<std::vector<Term>> streams) {
    if (streams.empty()) return {};
    while (streams.size() > 1) {
        std::vector<std::vector<Term>> next;
        next.reserve((streams.size() + 1) / 2);
        for (std::size_t i = 0; i + 1 < streams.size(); i += 2)
            next.push_back(merge_sorted(std::move(streams[i]), std::move(streams[i + 1])));
        if (streams.size() % 2 == 1) next.push_back(std::move(streams.back()));
        streams = std::move(next);
    }
    return std::move(streams.front());
}

// partial_g applied to p for a single operator monomial g; the map on
// monomials is injective and order preserving, so the output stays sorted.
std::vector<Term> apply_monomial(const Monomial& g, const Rational& c, const SuperPolynomial& p) {
    std::vector<Term> out;
    const int n = p.n();
    for (const auto& t : p.terms()) {
        if ((t.mono.theta & g.theta) != g.theta) continue;
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) ok = t.mono.x[i] >= g.x[i];
        if (!ok) continue;
        Term r{t.mono, t.coeff * c};
        for (int i = 0; i < n; ++i) {
            if (g.x[i] == 0) continue;
            r.coeff *= falling(t.mono.x[i], g.x[i]);
            r.mono.x[i] = static_cast<std::uint8_t>(t.mono.x[i] - g.x[i]);
        }
        r.mono.deg = static_cast<std::uint16_t>(t.mono.deg - g.deg);
        int flips = 0;
        std::uint32_t rest = g.theta;
        while (rest) {
            int b = __builtin_ctz(rest) + 1;
            rest &= rest - 1;
            flips += bits_below(r.mono.theta, b);
            r.mono.theta &= ~(1U << (b - 1));
        }
        if (flips % 2) r.coeff = -r.coeff;
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace

SuperPolynomial partial_x(int i, const SuperPolynomial& p) { return partial_x_power(i, 1, p); }

SuperPolynomial partial_x_power(int i, int e, const SuperPolynomial& p) {
    check_index(i, p.n(), "partial_x");
    if (e < 0) throw std::invalid_argument("partial_x: negative order");
    if (e == 0) return p;
    std::vector<Term> out;
    for (const auto& t : p.terms()) {
        int a = t.mono.x[i - 1];
        if (a < e) continue;
        Term r{t.mono, t.coeff * falling(a, e)};
        r.mono.x[i - 1] = static_cast<std::uint8_t>(a - e);
        r.mono.deg = static_cast<std::uint16_t>(r.mono.deg - e);
        out.push_back(std::move(r));
    }
    return SuperPolynomial::from_sorted(p.n(), std::move(out));
}

SuperPolynomial interior_theta(int i, const SuperPolynomial& p) {
    check_index(i, p.n(), "interior_theta");
    std::vector<Term> out;
    const std::uint32_t bit = 1U << (i - 1);
    for (const auto& t : p.terms()) {
        if (!(t.mono.theta & bit)) continue;
        Term r = t;
        r.mono.theta &= ~bit;
        if (bits_below(t.mono.theta, i) % 2) r.coeff = -r.coeff;
        out.push_back(std::move(r));
    }
    return SuperPolynomial::from_sorted(p.n(), std::move(out));
}

SuperPolynomial theta_times(int i, const SuperPolynomial& p) {
    check_index(i, p.n(), "theta_times");
    std::vector<Term> out;
    const std::uint32_t bit = 1U << (i - 1);
    for (const auto& t : p.terms()) {
        if (t.mono.theta & bit) continue;
        Term r = t;
        r.mono.theta |= bit;
        if (bits_below(t.mono.theta, i) % 2) r.coeff = -r.coeff;
        out.push_back(std::move(r));
    }
    return SuperPolynomial::from_sorted(p.n(), std::move(out));
}

SuperPolynomial apply_diff_operator(const SuperPolynomial& g, const SuperPolynomial& p) {
    check_same_n(g, p);
    std::vector<std::vector<Term>> streams;
    streams.reserve(g.size());
    for (const auto& t : g.terms()) {
        auto s = apply_monomial(t.mono, t.coeff, p);
        if (!s.empty()) streams.push_back(std::move(s));
    }
    return SuperPolynomial::from_sorted(p.n(), merge_all(std::move(streams)));
}

SuperPolynomial vandermonde(int n) {
    check_variable_count(n);
    if (n < 1) throw std::invalid_argument("vandermonde: n must be positive");
    std::vector<Term> terms;
    std::vector<int> exps(n);
    for (const auto& sigma : all_permutations(n)) {
        for (int i = 1; i <= n; ++i) exps[i - 1] = sigma(i) - 1;
        terms.push_back({Monomial::make(exps), Rational(sigma.sign())});
    }
    return SuperPolynomial::from_terms(n, std::move(terms));
}

SuperPolynomial elementary(int n, int r, std::span<const int> S) {
    check_variable_count(n);
    std::vector<int> set(S.begin(), S.end());
    std::sort(set.begin(), set.end());
    if (std::adjacent_find(set.begin(), set.end()) != set.end())
        throw std::invalid_argument("elementary: repeated index in S");
    for (int s : set) check_index(s, n, "elementary");
    const int size = static_cast<int>(set.size());
    if (r < 0 || r > size) return SuperPolynomial(n);
    std::vector<Term> terms;
    std::vector<int> exps(n, 0);
    std::vector<bool> pick(size, false);
    std::fill(pick.begin(), pick.begin() + r, true);
    do {
        std::fill(exps.begin(), exps.end(), 0);
        for (int a = 0; a < size; ++a)
            if (pick[a]) exps[set[a] - 1] = 1;
        terms.push_back({Monomial::make(exps), Rational(1)});
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return SuperPolynomial::from_terms(n, std::move(terms));
}

SuperPolynomial elementary(int n, int r, int m) {
    std::vector<int> S(std::max(m, 0));
    for (int i = 0; i < m; ++i) S[i] = i + 1;
    return elementary(n, r, S);
}

SuperPolynomial apply_elementary(int r, std::span<const int> S, const SuperPolynomial& p) {
    for (int s : S) check_index(s, p.n(), "apply_elementary");
    const int size = static_cast<int>(S.size());
    if (r < 0 || r > size) return SuperPolynomial(p.n());
    if (r == 0) return p;
    // E[t] = sum over t-subsets T of the processed prefix of partial_T p
    std::vector<SuperPolynomial> E(r + 1, SuperPolynomial(p.n()));
    E[0] = p;
    int processed = 0;
    for (int s : S) {
        ++processed;
        for (int t = std::min(r, processed); t >= 1; --t) {
            if (E[t - 1].is_zero()) continue;
            E[t] += partial_x(s, E[t - 1]);
        }
    }
    return E[r];
}

SuperPolynomial apply_elementary(int r, int m, const SuperPolynomial& p) {
    std::vector<int> S(std::max(m, 0));
    for (int i = 0; i < m; ++i) S[i] = i + 1;
    return apply_elementary(r, S, p);
}

SuperPolynomial d_op(int i, const SuperPolynomial& p) {
    if (i < 1) throw std::invalid_argument("d_op: order must be positive");
    const int n = p.n();
    std::vector<std::vector<Term>> streams;
    for (int j = 1; j <= n; ++j) {
        const std::uint32_t bit = 1U << (j - 1);
        std::vector<Term> s;
        for (const auto& t : p.terms()) {
            int a = t.mono.x[j - 1];
            if (a < i || (t.mono.theta & bit)) continue;
            Term r{t.mono, t.coeff * falling(a, i)};
            r.mono.x[j - 1] = static_cast<std::uint8_t>(a - i);
            r.mono.deg = static_cast<std::uint16_t>(r.mono.deg - i);
            r.mono.theta |= bit;
            if (bits_below(t.mono.theta, j) % 2) r.coeff = -r.coeff;
            s.push_back(std::move(r));
        }
        if (!s.empty()) streams.push_back(std::move(s));
    }
    return SuperPolynomial::from_sorted(n, merge_all(std::move(streams)));
}

SuperPolynomial d_word(std::span<const int> word, const SuperPolynomial& p) {
    std::vector<int> sorted(word.begin(), word.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return SuperPolynomial(p.n());
    SuperPolynomial cur = p;
    for (auto it = word.rbegin(); it != word.rend() && !cur.is_zero(); ++it) cur = d_op(*it, cur);
    return cur;
}

SuperPolynomial d_I_vandermonde(std::span<const int> I, int n) {
    for (std::size_t a = 0; a < I.size(); ++a) {
        if (I[a] < 1 || I[a] > n - 1)
            throw std::invalid_argument("d_I_vandermonde: entry " + std::to_string(I[a]) + " outside [1, " +
                                        std::to_string(n - 1) + "]");
        if (a > 0 && I[a] <= I[a - 1])
            throw std::invalid_argument("d_I_vandermonde: I must be strictly increasing");
    }
    return d_word(I, vandermonde(n));
}

SuperPolynomial d_J_vandermonde(std::span<const int> J, int n) {
    for (std::size_t a = 0; a < J.size(); ++a) {
        if (J[a] < 1 || J[a] > n - 1)
            throw std::invalid_argument("d_J_vandermonde: entry outside [1, n-1]");
        if (a > 0 && J[a] < J[a - 1])
            throw std::invalid_argument("d_J_vandermonde: J must be non-decreasing");
        if (a > 0 && J[a] == J[a - 1]) return SuperPolynomial(n);
    }
    return d_word(J, vandermonde(n));
}

SuperPolynomial permute_variables(const Permutation& sigma, const SuperPolynomial& p) {
    const int n = p.n();
    if (sigma.size() != n) throw std::invalid_argument("permute_variables: permutation size mismatch");
    std::vector<Term> out;
    out.reserve(p.size());
    std::vector<int> word;
    for (const auto& t : p.terms()) {
        Monomial m;
        m.deg = t.mono.deg;
        for (int a = 1; a <= n; ++a) m.x[sigma(a) - 1] = t.mono.x[a - 1];
        word.clear();
        for (int a = 1; a <= n; ++a)
            if (t.mono.has_theta(a)) word.push_back(sigma(a));
        auto nf = normalize_theta(word);
        for (int c : nf.canonical) m.theta |= 1U << (c - 1);
        out.push_back({m, nf.sign < 0 ? -t.coeff : t.coeff});
    }
    return SuperPolynomial::from_terms(n, std::move(out));
}

}  // namespace superharm
