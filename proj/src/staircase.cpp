#include "superharm/staircase.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace superharm {

MarkedStaircase MarkedStaircase::plain(std::vector<int> heights, int grey) {
    MarkedStaircase ms;
    ms.n = static_cast<int>(heights.size());
    ms.heights = std::move(heights);
    ms.crosses.assign(ms.n, 0);
    ms.circ.assign(ms.n, false);
    ms.grey = grey;
    ms.validate();
    return ms;
}

int MarkedStaircase::circ_count() const {
    return static_cast<int>(std::count(circ.begin(), circ.end(), true));
}

int MarkedStaircase::column_of_height(int h) const {
    for (int c = 1; c <= n; ++c)
        if (heights[c - 1] == h) return c;
    throw std::out_of_range("no column of height " + std::to_string(h));
}

std::vector<int> MarkedStaircase::cross_word() const {
    std::vector<int> out;
    for (int x : crosses)
        if (x > 0) out.push_back(x);
    return out;
}

void MarkedStaircase::validate() const {
    if (n < 1 || n > kMaxVars) throw std::invalid_argument("MarkedStaircase: n out of range");
    if (static_cast<int>(heights.size()) != n || static_cast<int>(crosses.size()) != n ||
        static_cast<int>(circ.size()) != n)
        throw std::invalid_argument("MarkedStaircase: field lengths must equal n");
    if (grey < 0 || grey > n) throw std::invalid_argument("MarkedStaircase: grey count out of range");
    std::vector<bool> seen(n, false);
    for (int h : heights) {
        if (h < 0 || h >= n || seen[h]) throw std::invalid_argument("MarkedStaircase: heights must permute 0..n-1");
        seen[h] = true;
    }
    for (int c = 1; c <= n; ++c) {
        if (crosses[c - 1] < 0) throw std::invalid_argument("MarkedStaircase: negative x count");
        if (unmarked(c) < 0) throw std::invalid_argument("MarkedStaircase: marks exceed column height");
        if (circ[c - 1] && is_grey(c)) throw std::invalid_argument("MarkedStaircase: o in a grey column");
    }
}

int staircase_sign(const MarkedStaircase& ms) {
    int s = count_inversions(ms.heights) % 2 == 0 ? 1 : -1;
    return s * vandermonde_sign(ms.cross_word());
}

Rational staircase_order(const MarkedStaircase& ms) {
    Rational r(1);
    for (int c = 1; c <= ms.n; ++c) {
        int marks = ms.crosses[c - 1] + (ms.circ[c - 1] ? 1 : 0);
        long long f = 1;
        for (int t = 0; t < marks; ++t) f *= ms.heights[c - 1] - t;
        if (f != 1) r *= Rational(f);
    }
    return r;
}

StaircaseWeight weight(const MarkedStaircase& ms) {
    StaircaseWeight w;
    int sign = staircase_sign(ms);
    w.coeff = sign == 0 ? Rational(0) : staircase_order(ms) * Rational(sign);
    int deg = 0;
    for (int c = 1; c <= ms.n; ++c) {
        int g = ms.unmarked(c);
        w.mono.x[c - 1] = static_cast<std::uint8_t>(g);
        deg += g;
        if (ms.crosses[c - 1] > 0) w.mono.theta |= 1U << (c - 1);
    }
    w.mono.deg = static_cast<std::uint16_t>(deg);
    return w;
}

void enumerate(int n, int r, const std::vector<int>& J, int m,
               const std::function<void(const MarkedStaircase&)>& visit) {
    if (n < 1 || n > kMaxVars) throw std::invalid_argument("enumerate: n out of range");
    if (m < 0 || m > n) throw std::invalid_argument("enumerate: grey count out of range");
    if (r < 0) throw std::invalid_argument("enumerate: negative o count");
    for (int j : J)
        if (j < 1) throw std::invalid_argument("enumerate: x counts must be positive");
    if (static_cast<int>(J.size()) > n) return;
    for (int j : J)
        if (j > n - 1) return;

    // distinct x counts, largest first, with multiplicities
    std::vector<int> sorted = J;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    std::vector<std::pair<int, int>> groups;
    for (int j : sorted) {
        if (!groups.empty() && groups.back().first == j) ++groups.back().second;
        else groups.emplace_back(j, 1);
    }

    MarkedStaircase ms;
    ms.n = n;
    ms.heights.resize(n);
    std::iota(ms.heights.begin(), ms.heights.end(), 0);
    ms.crosses.assign(n, 0);
    ms.circ.assign(n, false);
    ms.grey = m;
    const int window = n - m;

    std::function<void(int, int)> place_circ = [&](int from, int left) {
        if (left == 0) {
            visit(ms);
            return;
        }
        for (int c = from; c <= window - left + 1; ++c) {
            if (ms.crosses[c - 1] + 1 > ms.heights[c - 1]) continue;
            ms.circ[c - 1] = true;
            place_circ(c + 1, left - 1);
            ms.circ[c - 1] = false;
        }
    };

    std::function<void(std::size_t, int, int)> place_cross = [&](std::size_t g, int from, int left) {
        if (g == groups.size()) {
            place_circ(1, r);
            return;
        }
        if (left == 0) {
            place_cross(g + 1, 1, g + 1 < groups.size() ? groups[g + 1].second : 0);
            return;
        }
        const int v = groups[g].first;
        for (int c = from; c <= n; ++c) {
            if (ms.crosses[c - 1] != 0 || ms.heights[c - 1] < v) continue;
            ms.crosses[c - 1] = v;
            place_cross(g, c + 1, left - 1);
            ms.crosses[c - 1] = 0;
        }
    };

    do {
        place_cross(0, 1, groups.empty() ? 0 : groups[0].second);
    } while (std::next_permutation(ms.heights.begin(), ms.heights.end()));
}

std::vector<MarkedStaircase> enumerate_all(int n, int r, const std::vector<int>& J, int m) {
    std::vector<MarkedStaircase> out;
    enumerate(n, r, J, m, [&](const MarkedStaircase& ms) { out.push_back(ms); });
    return out;
}

SuperPolynomial staircase_gf(int n, int r, const std::vector<int>& J, int m) {
    std::vector<Term> terms;
    enumerate(n, r, J, m, [&](const MarkedStaircase& ms) {
        auto w = weight(ms);
        if (!w.coeff.is_zero()) terms.push_back({w.mono, std::move(w.coeff)});
    });
    return SuperPolynomial::from_terms(n, std::move(terms));
}

std::string render(const MarkedStaircase& ms) {
    std::string out;
    for (int y = ms.n - 1; y >= 1; --y) {
        std::string row;
        for (int c = 1; c <= ms.n; ++c) {
            int h = ms.heights[c - 1];
            int x = ms.crosses[c - 1];
            char ch = ' ';
            if (y <= h) {
                if (y > h - x) ch = 'x';
                else if (ms.circ[c - 1] && y == h - x) ch = 'o';
                else ch = ms.is_grey(c) ? '#' : '.';
            }
            row += ch;
        }
        while (!row.empty() && row.back() == ' ') row.pop_back();
        out += row;
        out += '\n';
    }
    return out;
}

namespace {

bool valid_column(const MarkedStaircase& ms, int c) { return c >= 1 && c <= ms.n; }

}  // namespace

std::optional<RelationMove> relation_A(const MarkedStaircase& ms, int col) {
    if (!valid_column(ms, col) || ms.is_grey(col)) return std::nullopt;
    if (ms.crosses[col - 1] < 2 || ms.circ[col - 1]) return std::nullopt;
    RelationMove mv{ms, 1};
    mv.result.crosses[col - 1] -= 1;
    mv.result.circ[col - 1] = true;
    return mv;
}

std::optional<RelationMove> relation_A_inverse(const MarkedStaircase& ms, int col) {
    if (!valid_column(ms, col) || !ms.circ[col - 1] || ms.crosses[col - 1] < 1) return std::nullopt;
    RelationMove mv{ms, 1};
    mv.result.crosses[col - 1] += 1;
    mv.result.circ[col - 1] = false;
    return mv;
}

std::optional<RelationMove> relation_B(const MarkedStaircase& ms, int v) {
    if (v < 1 || v > ms.n - 1) return std::nullopt;
    int p = ms.column_of_height(v);
    int q = ms.column_of_height(v - 1);
    if (ms.is_grey(p) || ms.is_grey(q)) return std::nullopt;
    if (!ms.circ[p - 1] || ms.circ[q - 1]) return std::nullopt;
    RelationMove mv{ms, -1};
    std::swap(mv.result.heights[p - 1], mv.result.heights[q - 1]);
    mv.result.circ[p - 1] = false;
    mv.result.circ[q - 1] = true;
    return mv;
}

std::optional<RelationMove> relation_C(const MarkedStaircase& ms, int p, int q) {
    if (!valid_column(ms, p) || !valid_column(ms, q) || p == q) return std::nullopt;
    int j = ms.crosses[p - 1];
    if (j < 2 || ms.circ[p - 1] || ms.is_grey(p)) return std::nullopt;
    if (ms.crosses[q - 1] != j - 1 || !ms.circ[q - 1]) return std::nullopt;
    RelationMove mv{ms, -1};
    mv.result.crosses[p - 1] = j - 1;
    mv.result.circ[p - 1] = true;
    mv.result.crosses[q - 1] = j;
    mv.result.circ[q - 1] = false;
    return mv;
}

std::optional<int> common_cross_height(const MarkedStaircase& ms, int p, int q) {
    if (!valid_column(ms, p) || !valid_column(ms, q) || p == q) return std::nullopt;
    int hp = ms.heights[p - 1], hq = ms.heights[q - 1];
    int lo = std::max(hp - ms.crosses[p - 1] + 1, hq - ms.crosses[q - 1] + 1);
    int hi = std::min(hp, hq);
    if (lo > hi) return std::nullopt;
    return hi;
}

std::optional<RelationMove> relation_D(const MarkedStaircase& ms, int p, int q, int H) {
    if (!valid_column(ms, p) || !valid_column(ms, q) || p == q) return std::nullopt;
    auto has_cross_at = [&](int c) {
        int h = ms.heights[c - 1];
        return H <= h && H > h - ms.crosses[c - 1];
    };
    if (!has_cross_at(p) || !has_cross_at(q)) return std::nullopt;
    RelationMove mv{ms, 0};
    auto& r = mv.result;
    int hp = ms.heights[p - 1], hq = ms.heights[q - 1];
    r.heights[p - 1] = hq;
    r.heights[q - 1] = hp;
    r.crosses[p - 1] = ms.crosses[p - 1] + (hq - hp);
    r.crosses[q - 1] = ms.crosses[q - 1] + (hp - hq);
    int before = vandermonde_sign(ms.cross_word());
    int after = vandermonde_sign(r.cross_word());
    // the height swap is a transposition, so the staircase sign flips
    mv.factor = -before * after;
    return mv;
}

bool in_M_I(const MarkedStaircase& ms, const SubsetOfRange& I) {
    if (ms.n != I.n) return false;
    auto s = is_extreme_hook(I);
    if (!s) return false;
    const int k = I.k();
    auto J = ms.cross_word();
    if (static_cast<int>(J.size()) != k) return false;
    std::sort(J.begin(), J.end());
    for (int t = 0; t < k - *s; ++t)
        if (J[t] != I.elems[t]) return false;
    int d = 0;
    for (int t = k - *s; t < k; ++t) d += J[t] - I.elems[t];
    return d >= 0;
}

ActiveData active_data(const MarkedStaircase& ms, const SubsetOfRange& I) {
    auto s = is_extreme_hook(I);
    if (!s) throw std::invalid_argument("active_data: I is not an extreme hook");
    if (!in_M_I(ms, I)) throw std::invalid_argument("active_data: staircase is not in M_I");
    const int k = I.k();
    const int threshold = I.elems[k - *s];
    ActiveData a;
    a.s = *s;
    a.delta = ms.circ_count();
    a.eta = ms.grey;
    for (int c = 1; c <= ms.n; ++c) {
        if (ms.crosses[c - 1] < threshold) continue;
        a.active.push_back(c);
        a.gamma.push_back(ms.crosses[c - 1]);
        a.alpha.push_back(ms.heights[c - 1] - ms.crosses[c - 1]);
        int pos = static_cast<int>(a.active.size());
        if (ms.circ[c - 1]) a.omega.push_back(pos);
        else if (ms.is_grey(c)) a.psi.push_back(pos);
        else a.pi.push_back(pos);
    }
    if (static_cast<int>(a.active.size()) != *s)
        throw std::logic_error("active_data: expected exactly s active columns");
    auto J = ms.cross_word();
    std::sort(J.begin(), J.end());
    for (int t = k - *s; t < k; ++t) a.d += J[t] - I.elems[t];
    return a;
}

MarkedStaircase act(const Permutation& sigma, const MarkedStaircase& ms, const SubsetOfRange& I) {
    ActiveData a = active_data(ms, I);
    if (sigma.size() != a.s) throw std::invalid_argument("act: permutation size must equal s");
    MarkedStaircase out = ms;
    auto inv = sigma.inverse();
    for (int pos = 1; pos <= a.s; ++pos) {
        int src = inv(pos);
        int h = ms.heights[a.active[src - 1] - 1];
        int col = a.active[pos - 1];
        out.heights[col - 1] = h;
        out.crosses[col - 1] = h - a.alpha[pos - 1];
    }
    return out;
}

}  // namespace superharm
