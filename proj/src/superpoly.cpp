#include "superharm/superpoly.hpp"

#include <algorithm>
#include <cstring>
#include <sstream>
#include <stdexcept>

namespace superharm {

void check_variable_count(int n) {
    if (n < 0 || n > kMaxVars)
        throw std::invalid_argument("variable count must lie in [0, " + std::to_string(kMaxVars) + "]");
}

void check_same_n(const SuperPolynomial& p, const SuperPolynomial& q) {
    if (p.n() != q.n())
        throw std::invalid_argument("mismatched variable counts: " + std::to_string(p.n()) + " vs " +
                                    std::to_string(q.n()));
}

Monomial Monomial::make(std::span<const int> exponents, std::span<const int> thetas) {
    if (exponents.size() > static_cast<std::size_t>(kMaxVars))
        throw std::invalid_argument("Monomial: too many variables");
    Monomial m;
    int deg = 0;
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        if (exponents[i] < 0 || exponents[i] > 255)
            throw std::invalid_argument("Monomial: exponent out of range");
        m.x[i] = static_cast<std::uint8_t>(exponents[i]);
        deg += exponents[i];
    }
    m.deg = static_cast<std::uint16_t>(deg);
    for (int t : thetas) {
        if (t < 1 || t > kMaxVars) throw std::invalid_argument("Monomial: theta index out of range");
        if (m.has_theta(t)) throw std::invalid_argument("Monomial: repeated theta index");
        m.theta |= 1U << (t - 1);
    }
    return m;
}

std::vector<int> Monomial::theta_indices() const {
    std::vector<int> out;
    for (int i = 1; i <= kMaxVars; ++i)
        if (has_theta(i)) out.push_back(i);
    return out;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (a.deg != b.deg) return a.deg <=> b.deg;
    int c = std::memcmp(a.x.data(), b.x.data(), kMaxVars);
    if (c != 0) return c <=> 0;
    return a.theta <=> b.theta;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
    std::uint64_t h = 1469598103934665603ULL ^ m.theta;
    for (auto e : m.x) {
        h ^= e;
        h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
}

ThetaNormalForm normalize_theta(std::span<const int> word) {
    ThetaNormalForm out;
    std::vector<int> w(word.begin(), word.end());
    // insertion sort: each adjacent swap is one transposition
    for (std::size_t i = 1; i < w.size(); ++i) {
        for (std::size_t j = i; j > 0 && w[j - 1] >= w[j]; --j) {
            if (w[j - 1] == w[j]) return {0, {}};
            std::swap(w[j - 1], w[j]);
            out.sign = -out.sign;
        }
    }
    out.canonical = std::move(w);
    return out;
}

int theta_merge_sign(std::uint32_t lhs, std::uint32_t rhs) {
    if (lhs & rhs) return 0;
    int crossings = 0;
    std::uint32_t r = rhs;
    while (r) {
        int j = __builtin_ctz(r);
        r &= r - 1;
        std::uint32_t above = j >= 31 ? 0U : (lhs >> (j + 1));
        crossings += __builtin_popcount(above);
    }
    return crossings % 2 == 0 ? 1 : -1;
}

SuperPolynomial::SuperPolynomial(int n) : n_(n) { check_variable_count(n); }

SuperPolynomial SuperPolynomial::from_terms(int n, std::vector<Term> terms) {
    SuperPolynomial p(n);
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.mono < b.mono; });
    std::vector<Term> out;
    out.reserve(terms.size());
    for (auto& t : terms) {
        if (!out.empty() && out.back().mono == t.mono) {
            out.back().coeff += t.coeff;
        } else {
            if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
            out.push_back(std::move(t));
        }
    }
    if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
    p.terms_ = std::move(out);
    return p;
}

SuperPolynomial SuperPolynomial::from_sorted(int n, std::vector<Term> terms) {
    SuperPolynomial p(n);
    p.terms_ = std::move(terms);
    return p;
}

SuperPolynomial SuperPolynomial::constant(int n, const Rational& c) {
    SuperPolynomial p(n);
    if (!c.is_zero()) p.terms_.push_back({Monomial{}, c});
    return p;
}

SuperPolynomial SuperPolynomial::monomial(int n, const Monomial& m, const Rational& c) {
    SuperPolynomial p(n);
    for (int i = n + 1; i <= kMaxVars; ++i)
        if (m.exponent(i) != 0 || m.has_theta(i))
            throw std::invalid_argument("monomial uses a variable beyond n");
    if (!c.is_zero()) p.terms_.push_back({m, c});
    return p;
}

SuperPolynomial SuperPolynomial::x(int n, int i) {
    if (i < 1 || i > n) throw std::out_of_range("x index out of range");
    Monomial m;
    m.x[i - 1] = 1;
    m.deg = 1;
    return monomial(n, m);
}

SuperPolynomial SuperPolynomial::theta(int n, int i) {
    if (i < 1 || i > n) throw std::out_of_range("theta index out of range");
    Monomial m;
    m.theta = 1U << (i - 1);
    return monomial(n, m);
}

Rational SuperPolynomial::coefficient(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& key) { return t.mono < key; });
    if (it != terms_.end() && it->mono == m) return it->coeff;
    return Rational(0);
}

std::optional<std::pair<int, int>> SuperPolynomial::bidegree() const {
    if (terms_.empty()) return std::nullopt;
    std::pair<int, int> bd{terms_.front().mono.deg, terms_.front().mono.theta_degree()};
    for (const auto& t : terms_)
        if (t.mono.deg != bd.first || t.mono.theta_degree() != bd.second) return std::nullopt;
    return bd;
}

std::map<std::pair<int, int>, SuperPolynomial> SuperPolynomial::homogeneous_components() const {
    std::map<std::pair<int, int>, std::vector<Term>> buckets;
    for (const auto& t : terms_) buckets[{t.mono.deg, t.mono.theta_degree()}].push_back(t);
    std::map<std::pair<int, int>, SuperPolynomial> out;
    for (auto& [key, ts] : buckets) out.emplace(key, from_sorted(n_, std::move(ts)));
    return out;
}

std::string SuperPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        bool negative = t.coeff.sign() < 0;
        if (first) {
            if (negative) os << '-';
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        std::vector<std::string> factors;
        for (int i = 1; i <= n_; ++i) {
            int e = t.mono.exponent(i);
            if (e == 1) factors.push_back("x" + std::to_string(i));
            if (e > 1) factors.push_back("x" + std::to_string(i) + "^" + std::to_string(e));
        }
        for (int i = 1; i <= n_; ++i)
            if (t.mono.has_theta(i)) factors.push_back("t" + std::to_string(i));
        Rational mag = t.coeff.abs();
        bool show_coeff = factors.empty() || !mag.is_one();
        if (show_coeff) os << mag;
        for (std::size_t f = 0; f < factors.size(); ++f) {
            if (f > 0 || show_coeff) os << ' ';
            os << factors[f];
        }
    }
    return os.str();
}

namespace {

int parse_index(std::string_view s, std::string_view whole) {
    if (s.empty()) throw std::invalid_argument("parse: missing index in '" + std::string(whole) + "'");
    int v = 0;
    for (char c : s) {
        if (c < '0' || c > '9') throw std::invalid_argument("parse: bad index in '" + std::string(whole) + "'");
        v = v * 10 + (c - '0');
        if (v > 100000) throw std::invalid_argument("parse: index too large");
    }
    return v;
}

struct PendingTerm {
    int sign = 1;
    Rational coeff{1};
    std::vector<int> exps;
    std::vector<int> thetas;
    bool has_coeff = false;
    bool has_factor = false;
    bool touched() const { return has_coeff || has_factor; }
};

}  // namespace

SuperPolynomial SuperPolynomial::parse(std::string_view text, int n) {
    check_variable_count(n);
    std::vector<std::string> tokens;
    {
        std::istringstream is{std::string(text)};
        std::string tok;
        while (is >> tok) tokens.push_back(tok);
    }
    if (tokens.empty()) throw std::invalid_argument("parse: empty polynomial text");

    std::vector<Term> out;
    PendingTerm cur;
    cur.exps.assign(n, 0);
    bool expecting_term = true;

    auto flush = [&]() {
        if (!cur.touched()) throw std::invalid_argument("parse: dangling operator");
        auto nf = normalize_theta(cur.thetas);
        Monomial m = Monomial::make(cur.exps, nf.canonical);
        Rational c = cur.coeff * Rational(cur.sign * nf.sign);
        out.push_back({m, c});
        cur = PendingTerm{};
        cur.exps.assign(n, 0);
    };

    for (const auto& raw : tokens) {
        if (raw == "+" || raw == "-") {
            if (expecting_term && out.empty() && !cur.touched() && raw == "-") {
                cur.sign = -cur.sign;
                continue;
            }
            flush();
            cur.sign = raw == "-" ? -1 : 1;
            expecting_term = true;
            continue;
        }
        std::string_view tok = raw;
        if (tok.front() == '-') {
            if (cur.touched()) throw std::invalid_argument("parse: unexpected '-' inside term");
            cur.sign = -cur.sign;
            tok.remove_prefix(1);
        }
        if (tok.empty()) throw std::invalid_argument("parse: bad token");
        char head = tok.front();
        if (head >= '0' && head <= '9') {
            if (cur.touched()) throw std::invalid_argument("parse: coefficient must lead its term");
            cur.coeff = Rational::parse(tok);
            cur.has_coeff = true;
        } else if (head == 'x') {
            auto caret = tok.find('^');
            int idx = parse_index(tok.substr(1, caret == std::string_view::npos ? tok.npos : caret - 1), raw);
            int e = caret == std::string_view::npos ? 1 : parse_index(tok.substr(caret + 1), raw);
            if (idx < 1 || idx > n) throw std::invalid_argument("parse: x index out of range in '" + raw + "'");
            cur.exps[idx - 1] += e;
            cur.has_factor = true;
        } else if (head == 't') {
            int idx = parse_index(tok.substr(1), raw);
            if (idx < 1 || idx > n) throw std::invalid_argument("parse: theta index out of range in '" + raw + "'");
            cur.thetas.push_back(idx);
            cur.has_factor = true;
        } else {
            throw std::invalid_argument("parse: unexpected token '" + raw + "'");
        }
        expecting_term = false;
    }
    flush();
    return from_terms(n, std::move(out));
}

SuperPolynomial SuperPolynomial::operator-() const {
    SuperPolynomial p = *this;
    for (auto& t : p.terms_) t.coeff = -t.coeff;
    return p;
}

SuperPolynomial SuperPolynomial::scaled(const Rational& c) const {
    if (c.is_zero()) return SuperPolynomial(n_);
    SuperPolynomial p = *this;
    if (!c.is_one())
        for (auto& t : p.terms_) t.coeff *= c;
    return p;
}

void SuperPolynomial::add_scaled(const SuperPolynomial& other, const Rational& c) {
    check_same_n(*this, other);
    if (c.is_zero() || other.is_zero()) return;
    std::vector<Term> out;
    out.reserve(terms_.size() + other.terms_.size());
    auto a = terms_.begin();
    auto b = other.terms_.begin();
    while (a != terms_.end() || b != other.terms_.end()) {
        if (b == other.terms_.end() || (a != terms_.end() && a->mono < b->mono)) {
            out.push_back(std::move(*a++));
        } else if (a == terms_.end() || b->mono < a->mono) {
            out.push_back({b->mono, b->coeff * c});
            ++b;
        } else {
            Term t = std::move(*a++);
            t.coeff.add_product(b->coeff, c);
            ++b;
            if (!t.coeff.is_zero()) out.push_back(std::move(t));
        }
    }
    terms_ = std::move(out);
}

SuperPolynomial& SuperPolynomial::operator+=(const SuperPolynomial& rhs) {
    add_scaled(rhs, Rational(1));
    return *this;
}

SuperPolynomial& SuperPolynomial::operator-=(const SuperPolynomial& rhs) {
    add_scaled(rhs, Rational(-1));
    return *this;
}

SuperPolynomial operator*(const SuperPolynomial& lhs, const SuperPolynomial& rhs) {
    check_same_n(lhs, rhs);
    std::vector<Term> raw;
    raw.reserve(lhs.size() * rhs.size());
    for (const auto& a : lhs.terms_) {
        for (const auto& b : rhs.terms_) {
            int s = theta_merge_sign(a.mono.theta, b.mono.theta);
            if (s == 0) continue;
            Monomial m;
            int deg = 0;
            for (int i = 0; i < lhs.n_; ++i) {
                int e = a.mono.x[i] + b.mono.x[i];
                if (e > 255) throw std::overflow_error("mul: exponent exceeds 255");
                m.x[i] = static_cast<std::uint8_t>(e);
                deg += e;
            }
            m.deg = static_cast<std::uint16_t>(deg);
            m.theta = a.mono.theta | b.mono.theta;
            Rational c = a.coeff * b.coeff;
            if (s < 0) c = -c;
            raw.push_back({m, std::move(c)});
        }
    }
    return SuperPolynomial::from_terms(lhs.n_, std::move(raw));
}

bool operator==(const SuperPolynomial& a, const SuperPolynomial& b) {
    if (a.n_ != b.n_ || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (!(a.terms_[i].mono == b.terms_[i].mono) || !(a.terms_[i].coeff == b.terms_[i].coeff)) return false;
    return true;
}

SuperPolynomial add(const SuperPolynomial& p, const SuperPolynomial& q) { return p + q; }
SuperPolynomial mul(const SuperPolynomial& p, const SuperPolynomial& q) { return p * q; }

std::vector<Term> merge_sorted(std::vector<Term> a, std::vector<Term> b) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() || j != b.end()) {
        if (j == b.end() || (i != a.end() && i->mono < j->mono)) {
            out.push_back(std::move(*i++));
        } else if (i == a.end() || j->mono < i->mono) {
            out.push_back(std::move(*j++));
        } else {
            Term t = std::move(*i++);
            t.coeff += j->coeff;
            ++j;
            if (!t.coeff.is_zero()) out.push_back(std::move(t));
        }
    }
    return out;
}

}  // namespace superharm
