#include "superharm/combinatorics.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace superharm {

std::vector<int> parse_int_list(std::string_view text) {
    std::string s;
    for (char c : text)
        if (c != ' ' && c != '\t') s += c;
    if (!s.empty() && s.front() == '{') {
        if (s.back() != '}') throw std::invalid_argument("unbalanced braces in '" + std::string(text) + "'");
        s = s.substr(1, s.size() - 2);
    }
    std::vector<int> out;
    if (s.empty()) return out;
    std::size_t pos = 0;
    while (true) {
        std::size_t next = s.find(',', pos);
        std::string tok = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        int v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
            throw std::invalid_argument("bad integer list '" + std::string(text) + "'");
        out.push_back(v);
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return out;
}

std::string join_ints(const std::vector<int>& v, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(v[i]);
    }
    return out;
}

Composition::Composition(std::vector<int> p) : parts(std::move(p)) {
    for (int v : parts)
        if (v < 1) throw std::invalid_argument("Composition: parts must be positive");
}

int Composition::n() const {
    int s = 0;
    for (int v : parts) s += v;
    return s;
}

std::string Composition::to_string() const { return join_ints(parts); }

Composition Composition::parse(std::string_view text) { return Composition(parse_int_list(text)); }

SubsetOfRange::SubsetOfRange(int n_, std::vector<int> e) : n(n_), elems(std::move(e)) {
    if (n < 0) throw std::invalid_argument("SubsetOfRange: negative n");
    for (std::size_t a = 0; a < elems.size(); ++a) {
        if (elems[a] < 1 || elems[a] > n - 1)
            throw std::invalid_argument("SubsetOfRange: element " + std::to_string(elems[a]) + " outside [1, " +
                                        std::to_string(n - 1) + "]");
        if (a > 0 && elems[a] <= elems[a - 1])
            throw std::invalid_argument("SubsetOfRange: elements must be strictly increasing");
    }
}

int SubsetOfRange::sum() const {
    int s = 0;
    for (int v : elems) s += v;
    return s;
}

std::string SubsetOfRange::to_string() const { return "{" + join_ints(elems) + "}@n=" + std::to_string(n); }

std::string SubsetOfRange::to_list() const { return join_ints(elems); }

SubsetOfRange SubsetOfRange::parse(std::string_view text) {
    auto at = text.find("@n=");
    if (at == std::string_view::npos) throw std::invalid_argument("SubsetOfRange: expected '{...}@n=<n>'");
    std::string_view body = text.substr(0, at);
    if (body.empty() || body.front() != '{') throw std::invalid_argument("SubsetOfRange: expected '{'");
    std::string_view tail = text.substr(at + 3);
    int n = 0;
    auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), n);
    if (ec != std::errc() || ptr != tail.data() + tail.size())
        throw std::invalid_argument("SubsetOfRange: bad n in '" + std::string(text) + "'");
    return SubsetOfRange(n, parse_int_list(body));
}

SubsetOfRange SubsetOfRange::from_list(int n, std::string_view text) {
    auto v = parse_int_list(text);
    std::sort(v.begin(), v.end());
    return SubsetOfRange(n, std::move(v));
}

int coinv(const Composition& alpha) {
    int c = 0;
    const auto& p = alpha.parts;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] < p[j]) ++c;
    return c;
}

std::vector<int> sorted_partition(const Composition& alpha) {
    auto mu = alpha.parts;
    std::sort(mu.begin(), mu.end(), std::greater<>());
    return mu;
}

int b_stat(const Composition& alpha) {
    auto mu = sorted_partition(alpha);
    int b = 0;
    for (std::size_t i = 0; i < mu.size(); ++i) b += static_cast<int>(i) * mu[i];
    return b;
}

int deg_comp(const Composition& alpha) {
    int l = alpha.length();
    return coinv(alpha) + 2 * b_stat(alpha) - l * (l - 1) / 2;
}

Composition bar_comp(const Composition& alpha) {
    std::vector<int> out;
    for (int v : alpha.parts)
        if (v > 1) out.push_back(v - 1);
    return Composition(std::move(out));
}

int deg_subset(const SubsetOfRange& I) { return I.n * (I.n - 1) / 2 - I.sum(); }

BarSubset bar_subset(const SubsetOfRange& I) {
    const int k = I.k();
    if (k == 0) return {0, SubsetOfRange(0, {})};
    int s = 0;
    while (s < k && I.elems[s] <= I.n - k) ++s;
    std::vector<int> rest;
    for (int j = s; j < k; ++j) rest.push_back(I.elems[j] - I.n + k);
    return {s, SubsetOfRange(k, std::move(rest))};
}

SubsetOfRange psi(const Composition& alpha) {
    const auto& a = alpha.parts;
    const int n = alpha.n();
    const int width = a.empty() ? 0 : *std::max_element(a.begin(), a.end());
    std::vector<int> out;
    for (int t = 1; t < width; ++t) {
        int m_t = 0;
        for (int v : a) m_t += std::min(v, t);
        int pos = 0;
        for (int v : a) {
            if (v < t) continue;
            ++pos;
            if (v >= t + 1) out.push_back(m_t - pos + 1);
        }
    }
    std::sort(out.begin(), out.end());
    return SubsetOfRange(n, std::move(out));
}

Composition phi(const SubsetOfRange& I) {
    const int n = I.n;
    const int k = I.k();
    if (k == 0) return Composition(std::vector<int>(n, 1));
    auto [s, ibar] = bar_subset(I);
    Composition beta = phi(ibar);
    std::vector<int> alpha(n - k, 1);
    for (int t = 1; t <= s; ++t) {
        int j = n - k + 1 - I.elems[s - t];
        alpha[j - 1] = beta.parts[t - 1] + 1;
    }
    return Composition(std::move(alpha));
}

GfIdentity gf_identity_check(int n) {
    if (n < 1) throw std::invalid_argument("gf_identity_check: n must be positive");
    GfIdentity g;
    for (const auto& alpha : compositions(n)) g.lhs[{n - alpha.length(), deg_comp(alpha)}] += 1;
    for (const auto& I : subsets(n)) g.rhs[{I.k(), deg_subset(I)}] += 1;
    g.equal = g.lhs == g.rhs;
    return g;
}

BijectionReport bijection_check(int n) {
    BijectionReport rep;
    rep.n = n;
    std::set<SubsetOfRange> image;
    for (const auto& alpha : compositions(n)) {
        ++rep.elements;
        auto I = psi(alpha);
        bool ok = phi(I) == alpha && I.k() == n - alpha.length() && deg_comp(alpha) == deg_subset(I);
        if (!ok) ++rep.failures;
        image.insert(I);
    }
    rep.image_complete = image.size() == subsets(n).size();
    rep.gf = gf_identity_check(n);
    return rep;
}

std::string format_qz_polynomial(const std::map<std::pair<int, int>, long long>& poly) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : poly) {
        if (c == 0) continue;
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << '-';
        first = false;
        long long mag = c < 0 ? -c : c;
        std::vector<std::string> f;
        if (key.first == 1) f.push_back("z");
        if (key.first > 1) f.push_back("z^" + std::to_string(key.first));
        if (key.second == 1) f.push_back("q");
        if (key.second > 1) f.push_back("q^" + std::to_string(key.second));
        bool show = f.empty() || mag != 1;
        if (show) os << mag;
        for (std::size_t i = 0; i < f.size(); ++i) os << ((i || show) ? " " : "") << f[i];
    }
    if (first) os << '0';
    return os.str();
}

std::vector<Composition> compositions(int n) {
    std::vector<Composition> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    for (unsigned mask = 0; mask < (1U << (n - 1)); ++mask) {
        std::vector<int> parts;
        int run = 1;
        for (int i = 1; i < n; ++i) {
            if (mask >> (i - 1) & 1U) {
                parts.push_back(run);
                run = 1;
            } else {
                ++run;
            }
        }
        parts.push_back(run);
        out.emplace_back(std::move(parts));
    }
    return out;
}

std::vector<std::vector<int>> k_subsets(int m, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > m) return out;
    std::vector<int> cur(k);
    for (int i = 0; i < k; ++i) cur[i] = i + 1;
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == m - k + i + 1) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

std::vector<SubsetOfRange> subsets_of_size(int n, int k) {
    std::vector<SubsetOfRange> out;
    for (auto& s : k_subsets(std::max(n - 1, 0), k)) out.emplace_back(n, std::move(s));
    return out;
}

std::vector<SubsetOfRange> subsets(int n) {
    std::vector<SubsetOfRange> out;
    for (int k = 0; k <= std::max(n - 1, 0); ++k)
        for (auto& s : subsets_of_size(n, k)) out.push_back(std::move(s));
    return out;
}

std::vector<std::vector<int>> partitions(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rest, int cap) {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(rest, cap); p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

int partition_size(const std::vector<int>& mu) {
    int n = 0;
    for (std::size_t i = 0; i < mu.size(); ++i) {
        if (mu[i] < 1) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && mu[i] > mu[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
        n += mu[i];
    }
    return n;
}

std::vector<int> transpose(const std::vector<int>& mu) {
    partition_size(mu);
    std::vector<int> out;
    if (mu.empty()) return out;
    for (int c = 1; c <= mu.front(); ++c) {
        int len = 0;
        for (int v : mu)
            if (v >= c) ++len;
        out.push_back(len);
    }
    return out;
}

long long multinomial(const std::vector<int>& mu) {
    int n = 0;
    for (int v : mu) n += v;
    if (n > 20) throw std::overflow_error("multinomial: n too large");
    unsigned __int128 r = 1;
    int placed = 0;
    for (int v : mu) {
        // times C(placed + v, v), one exact step at a time
        for (int t = 1; t <= v; ++t) r = r * static_cast<unsigned>(placed + t) / static_cast<unsigned>(t);
        placed += v;
    }
    return static_cast<long long>(r);
}

TanisakiGeneratorSet essential_generators(const std::vector<int>& mu) {
    const int n = partition_size(mu);
    if (n == 0) throw std::invalid_argument("essential_generators: empty partition");
    auto mt = transpose(mu);
    TanisakiGeneratorSet g;
    g.mu = mu;
    g.dbar.push_back(1);
    for (int i = 1; i <= mu.front() - 1; ++i) g.dbar.push_back(g.dbar.back() + mt[i - 1] - 1);
    for (int i = 1; i <= mu.front() - 1; ++i) g.essential.emplace_back(g.dbar[i], n - i);
    for (int r = 1; r <= n; ++r) g.essential.emplace_back(r, n);
    return g;
}

std::vector<ElementaryGenerator> essential_generator_orbits(const std::vector<int>& mu) {
    const int n = partition_size(mu);
    std::vector<ElementaryGenerator> out;
    for (auto [r, m] : essential_generators(mu).essential)
        for (auto& S : k_subsets(n, m)) out.push_back({r, std::move(S)});
    return out;
}

int d_k(const std::vector<int>& mu, int k) {
    const int n = partition_size(mu);
    auto mt = transpose(mu);
    mt.resize(n, 0);
    int s = 0;
    for (int i = n - k; i < n; ++i) s += mt[i];
    return s;
}

std::vector<ElementaryGenerator> tanisaki_full_generators(const std::vector<int>& mu) {
    const int n = partition_size(mu);
    std::vector<ElementaryGenerator> out;
    for (int size = 1; size <= n; ++size) {
        int lo = size - d_k(mu, size);
        for (auto& S : k_subsets(n, size))
            for (int r = std::max(lo + 1, 1); r <= size; ++r) out.push_back({r, S});
    }
    return out;
}

std::optional<int> is_extreme_hook(const SubsetOfRange& I) {
    const int n = I.n;
    const int k = I.k();
    const auto& e = I.elems;
    for (int s = 1; s <= k; ++s) {
        if (e[k - s] > n - k) continue;  // i_{k-s+1} <= n-k, hence all earlier too
        bool ok = true;
        for (int t = k - s + 2; t <= k && ok; ++t) ok = e[t - 1] == n - s + 1 + (t - (k - s + 2));
        if (ok) return s;
    }
    return std::nullopt;
}

}  // namespace superharm
