#include "superharm/combinatorics.hpp"
#include "superharm/filtration.hpp"
#include "superharm/operators.hpp"
#include "superharm/relations.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

using namespace superharm;
using nlohmann::json;

namespace {

struct Options {
    std::string output = "text";
    int jobs = 1;
    std::uint64_t seed = 1;

    bool as_json() const { return output == "json"; }
};

// "a..b" or a single integer
std::pair<int, int> parse_range(const std::string& text) {
    auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            int v = std::stoi(text);
            return {v, v};
        }
        int a = std::stoi(text.substr(0, dots)), b = std::stoi(text.substr(dots + 2));
        if (a > b) throw std::invalid_argument("empty range");
        return {a, b};
    } catch (const std::logic_error&) {
        throw std::invalid_argument("bad range '" + text + "', expected N or A..B");
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

GeneratorSet parse_generators(const std::string& s) { return s == "full" ? GeneratorSet::Full : GeneratorSet::Essential; }

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string map_text(const std::map<int, std::size_t>& m) {
    std::string out;
    for (auto [d, v] : m) {
        if (!out.empty()) out += " ";
        out += std::to_string(d) + ":" + std::to_string(v);
    }
    return out;
}

// expand ----------------------------------------------------------------

struct ExpandArgs {
    int n = 0;
    std::string I;
    std::optional<int> e;
    std::optional<std::string> S;
};

int cmd_expand(const ExpandArgs& a, const Options& o) {
    auto I = SubsetOfRange::from_list(a.n, a.I);
    auto p = d_I_vandermonde(I.elems, a.n);
    std::vector<int> S;
    if (a.e) {
        if (a.S) {
            S = parse_int_list(*a.S);
        } else {
            for (int i = 1; i <= a.n; ++i) S.push_back(i);
        }
        for (int v : S)
            if (v < 1 || v > a.n) throw std::invalid_argument("--S entries must lie in [1, n]");
        p = apply_elementary(*a.e, S, p);
    }
    if (o.as_json()) {
        json j{{"n", a.n}, {"I", I.elems}, {"polynomial", p.to_string()}, {"terms", p.size()}};
        if (a.e) {
            j["e"] = *a.e;
            j["S"] = S;
        }
        print_json(j);
    } else {
        std::cout << p.to_string() << "\n";
    }
    return 0;
}

// verify ----------------------------------------------------------------

struct VerifyArgs {
    std::string family;
    std::optional<std::string> n;
    std::optional<std::string> I;
    std::optional<std::string> u;
    std::optional<std::string> label;
    bool all = false;
    bool timing = false;
    bool progress = false;
    int trials = 6;
};

struct Instance {
    std::string kind;
    SubsetOfRange I;
    int u = 0;
    std::string label;
};

RelationReport run_instance(const Instance& in, int jobs) {
    if (in.kind == "pieri") return verify_generic_pieri(in.I, jobs);
    if (in.kind == "hook") return verify_hook(in.I, in.u, jobs);
    return verify_golden(in.label, jobs);
}

std::vector<Instance> verify_instances(const VerifyArgs& a) {
    std::vector<Instance> out;
    if (a.family == "golden") {
        if (a.label) {
            golden_relation(*a.label);
            out.push_back({"golden", {}, 0, *a.label});
        } else {
            for (const auto& g : golden_relations()) out.push_back({"golden", {}, 0, g.label});
        }
        return out;
    }
    if (!a.n) throw std::invalid_argument("--n is required for " + a.family);
    auto [n0, n1] = parse_range(*a.n);
    if (n0 < 1) throw std::invalid_argument("--n must be positive");
    if (a.all == a.I.has_value()) throw std::invalid_argument("give exactly one of --I and --all");
    for (int n = n0; n <= n1; ++n) {
        std::vector<SubsetOfRange> list = a.all ? subsets(n) : std::vector<SubsetOfRange>{SubsetOfRange::from_list(n, *a.I)};
        for (const auto& I : list) {
            if (a.family == "pieri") {
                out.push_back({"pieri", I, 0, ""});
                continue;
            }
            auto s = is_extreme_hook(I);
            if (!s) {
                if (a.all) continue;
                throw std::invalid_argument(I.to_string() + " is not an extreme hook");
            }
            auto [u0, u1] = a.u ? parse_range(*a.u) : std::pair<int, int>{0, *s};
            if (u0 < 0 || u1 > *s) {
                if (!a.all) throw std::invalid_argument("--u must lie in [0, " + std::to_string(*s) + "]");
                u0 = std::max(u0, 0);
                u1 = std::min(u1, *s);
            }
            for (int u = u0; u <= u1; ++u) out.push_back({"hook", I, u, ""});
        }
    }
    return out;
}

int cmd_verify_shifted(const VerifyArgs& a, const Options& o) {
    auto rep = shifted_vandermonde_suite(o.seed, a.trials);
    if (o.as_json()) {
        auto j = rep.to_json();
        j["family"] = "shiftedvdm";
        print_json(j);
    } else {
        std::cout << (rep.pass() ? "pass" : "FAIL") << " shiftedvdm seed=" << rep.seed << " cases=" << rep.cases
                  << " failures=" << rep.failures << " scalar=" << rep.scalar_cases
                  << " scalarFailures=" << rep.scalar_failures << "\n";
    }
    return rep.pass() ? 0 : 1;
}

int cmd_verify(const VerifyArgs& a, const Options& o) {
    if (a.family == "shiftedvdm") return cmd_verify_shifted(a, o);
    auto instances = verify_instances(a);

    // one instance: threads go to the term expansion; several: one instance per worker
    std::vector<RelationReport> reports(instances.size());
    std::atomic<std::size_t> next{0}, done{0};
    std::mutex err;
    const int inner = instances.size() == 1 ? o.jobs : 1;
    const int outer = std::max(1, std::min<int>(o.jobs, static_cast<int>(instances.size())));
    auto work = [&] {
        for (std::size_t i; (i = next++) < instances.size();) {
            reports[i] = run_instance(instances[i], inner);
            if (a.progress) {
                std::lock_guard lock(err);
                std::cerr << "[" << ++done << "/" << instances.size() << "] " << reports[i].relation << " "
                          << (instances[i].label.empty() ? instances[i].I.to_string() : instances[i].label)
                          << (reports[i].is_zero ? " zero" : " NONZERO") << "\n";
            }
        }
    };
    if (outer == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < outer; ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }

    bool pass = true;
    for (const auto& r : reports) pass = pass && r.is_zero;
    if (o.as_json()) {
        json j{{"family", a.family}, {"pass", pass}, {"reports", json::array()}};
        for (const auto& r : reports) j["reports"].push_back(r.to_json(a.timing));
        print_json(j);
    } else {
        for (const auto& r : reports) {
            std::cout << (r.is_zero ? "pass" : "FAIL") << " " << r.relation;
            if (!r.label.empty()) std::cout << " " << r.label;
            std::cout << " n=" << r.n;
            if (r.I) std::cout << " I={" << r.I->to_list() << "}";
            if (r.u) std::cout << " u=" << *r.u;
            std::cout << " terms=" << r.term_count << " maxIntermediate=" << r.max_intermediate_terms;
            if (a.timing) std::cout << " time=" << r.wall_time << "s";
            std::cout << "\n";
        }
        std::cout << reports.size() << " relation(s), " << (pass ? "all zero" : "some nonzero") << "\n";
    }
    return pass ? 0 : 1;
}

// bijection -------------------------------------------------------------

int cmd_bijection(int n, const Options& o) {
    if (n < 1) throw std::invalid_argument("--n must be positive");
    auto rep = bijection_check(n);
    if (o.as_json()) {
        print_json({{"n", n},
                    {"elements", rep.elements},
                    {"failures", rep.failures},
                    {"imageComplete", rep.image_complete},
                    {"identity", rep.gf.equal},
                    {"lhs", format_qz_polynomial(rep.gf.lhs)},
                    {"rhs", format_qz_polynomial(rep.gf.rhs)},
                    {"pass", rep.pass()}});
    } else {
        std::cout << "n=" << n << ": " << rep.elements << " compositions, " << rep.failures << " failures, image "
                  << (rep.image_complete ? "complete" : "INCOMPLETE") << "\n";
        std::cout << (rep.gf.equal ? "identity holds" : "identity FAILS") << "\n";
        std::cout << "compositions: " << format_qz_polynomial(rep.gf.lhs) << "\n";
        std::cout << "subsets:      " << format_qz_polynomial(rep.gf.rhs) << "\n";
    }
    return rep.pass() ? 0 : 1;
}

// filtration ------------------------------------------------------------

struct FiltrationArgs {
    int n = 0, k = 1;
    std::optional<std::string> order_file;
    std::string generators = "essential";
    bool factors = false;
    long budget = 100000;
};

int cmd_filtration(const FiltrationArgs& a, const Options& o) {
    if (a.n < 2) throw std::invalid_argument("--n must be at least 2");
    if (a.k < 0 || a.k > a.n - 1) throw std::invalid_argument("--k must lie in [0, n-1]");
    const auto set = parse_generators(a.generators);
    std::vector<SubsetOfRange> order;
    if (a.order_file) {
        order = parse_order(a.n, read_file(*a.order_file));
    } else if (a.k == 1) {
        order = descending_order(a.n);
    } else {
        auto found = search_order(a.n, a.k, a.budget, set);
        if (found.status != SearchStatus::Found) {
            if (o.as_json()) {
                print_json({{"n", a.n}, {"k", a.k}, {"search", found.to_json()}, {"pass", false}});
            } else {
                std::cout << "no order: search " << found.to_json()["status"].get<std::string>() << " after "
                          << found.nodes << " checks\n";
            }
            return 1;
        }
        order = found.order;
    }
    validate_order(a.n, a.k, order);
    auto rep = annihilation_check(a.n, a.k, order, set, o.jobs);
    bool pass = rep.pass();
    std::optional<FactorReport> fac;
    if (a.factors) {
        fac = factor_dims_check(a.n, a.k, order, o.jobs);
        pass = pass && fac->total_match();
    }
    if (o.as_json()) {
        auto j = rep.to_json();
        if (fac) {
            j["factors"] = fac->to_json();
            j["gradedMatch"] = fac->graded_match();
            j["totalMatch"] = fac->total_match();
        }
        j["pass"] = pass;
        print_json(j);
    } else {
        for (std::size_t i = 0; i < rep.steps.size(); ++i) {
            const auto& s = rep.steps[i];
            int members = 0;
            for (const auto& c : s.checks) members += c.member;
            std::cout << (s.pass() ? "pass" : "FAIL") << " I={" << s.I.to_list() << "} mu=" << join_ints(s.mu)
                      << " generators " << members << "/" << s.checks.size() << "\n";
            for (const auto& c : s.checks)
                if (!c.member) std::cout << "  e_" << c.gen.r << "(" << join_ints(c.gen.S) << ") does not annihilate\n";
            if (fac) {
                const auto& f = fac->steps[i];
                std::cout << "  factor   " << map_text(f.factor) << "\n  expected " << map_text(f.expected)
                          << (f.graded_match ? "  graded match" : f.total_match ? "  total match only" : "  MISMATCH")
                          << "\n";
            }
        }
        std::cout << (pass ? "all steps pass" : "some steps fail") << "\n";
    }
    return pass ? 0 : 1;
}

// hilbert ---------------------------------------------------------------

int cmd_hilbert(const std::string& mu_text, std::optional<int> cap, const std::string& gens, const Options& o) {
    auto mu = parse_int_list(mu_text);
    if (mu.empty()) throw std::invalid_argument("--mu must be a nonempty partition");
    for (std::size_t i = 0; i < mu.size(); ++i)
        if (mu[i] < 1 || (i > 0 && mu[i] > mu[i - 1])) throw std::invalid_argument("--mu must be a weakly decreasing list of positive parts");
    const int n = partition_size(mu);
    const int c = cap.value_or(n * (n - 1) / 2 + 1);
    if (c < 0) throw std::invalid_argument("--degree-cap must be nonnegative");
    auto dims = ideal_graded_dims(mu, c, parse_generators(gens));
    std::size_t total = 0;
    for (auto [d, v] : dims) total += v;
    if (o.as_json()) {
        json by = json::object();
        for (auto [d, v] : dims) by[std::to_string(d)] = v;
        print_json({{"mu", mu}, {"degreeCap", c}, {"dims", by}, {"total", total}, {"expectedTotal", multinomial(mu)}});
    } else {
        for (auto [d, v] : dims) std::cout << "degree " << d << ": " << v << "\n";
        std::cout << "total " << total << "\n";
    }
    return 0;
}

// order-search ----------------------------------------------------------

int cmd_order_search(int n, int k, long budget, const std::string& gens, const Options& o) {
    if (n < 2) throw std::invalid_argument("--n must be at least 2");
    if (k < 0 || k > n - 1) throw std::invalid_argument("--k must lie in [0, n-1]");
    if (budget < 1) throw std::invalid_argument("--budget must be positive");
    auto r = search_order(n, k, budget, parse_generators(gens));
    if (o.as_json()) {
        auto j = r.to_json();
        j["n"] = n;
        j["k"] = k;
        print_json(j);
    } else {
        std::cout << "status " << r.to_json()["status"].get<std::string>() << " after " << r.nodes << " checks\n";
        for (const auto& I : r.order) std::cout << (I.elems.empty() ? "{}" : I.to_list()) << "\n";
    }
    return r.status == SearchStatus::Found ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Super-harmonic polynomial toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--output", o.output, "text or json")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--jobs", o.jobs, "worker threads")->check(CLI::Range(1, 256));
    app.add_option("--seed", o.seed, "seed for randomized suites");

    ExpandArgs ea;
    auto* expand = app.add_subcommand("expand", "print d_I Delta_n, or e_r(S)(partial) applied to it");
    expand->add_option("--n", ea.n, "number of variables")->required()->check(CLI::Range(1, 20));
    expand->add_option("--I", ea.I, "subset of [n-1] as a comma list")->required();
    expand->add_option("--e", ea.e, "elementary degree r")->check(CLI::NonNegativeNumber);
    expand->add_option("--S", ea.S, "variables of the elementary operator (default 1..n)");

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "expand relations and check that they vanish");
    verify->add_option("family", va.family, "pieri, hook, golden or shiftedvdm")
        ->required()
        ->check(CLI::IsMember({"pieri", "hook", "golden", "shiftedvdm"}));
    verify->add_option("--n", va.n, "n or a range A..B");
    verify->add_option("--I", va.I, "a single subset");
    verify->add_flag("--all", va.all, "every subset (every extreme hook for hook)");
    verify->add_option("--u", va.u, "u or a range A..B (default 0..s)");
    verify->add_option("--label", va.label, "golden relation label (default all)");
    verify->add_option("--trials", va.trials, "random draws per s for shiftedvdm")->check(CLI::Range(1, 10000));
    verify->add_flag("--timing", va.timing, "report wall time");
    verify->add_flag("--progress", va.progress, "per-relation progress on stderr");

    int bn = 0;
    auto* bij = app.add_subcommand("bijection", "check the composition/subset bijection");
    bij->add_option("--n", bn, "size")->required()->check(CLI::Range(1, 20));

    FiltrationArgs fa;
    auto* filt = app.add_subcommand("filtration", "annihilation checks along an order of k-subsets");
    filt->add_option("--n", fa.n)->required()->check(CLI::Range(2, 12));
    filt->add_option("--k", fa.k)->required();
    filt->add_option("--order-file", fa.order_file, "one subset per line");
    filt->add_option("--generators", fa.generators)->check(CLI::IsMember({"essential", "full"}));
    filt->add_flag("--factors", fa.factors, "also compare successive quotient dimensions");
    filt->add_option("--budget", fa.budget, "search budget when no order is given and k > 1");

    std::string mu;
    std::optional<int> cap;
    std::string hgens = "essential";
    auto* hil = app.add_subcommand("hilbert", "graded dimensions of Q[x]/I_mu");
    hil->add_option("--mu", mu, "partition as a comma list")->required();
    hil->add_option("--degree-cap", cap);
    hil->add_option("--generators", hgens)->check(CLI::IsMember({"essential", "full"}));

    int sn = 0, sk = 1;
    long budget = 100000;
    std::string sgens = "essential";
    auto* search = app.add_subcommand("order-search", "search for an order whose checks all pass");
    search->add_option("--n", sn)->required()->check(CLI::Range(2, 12));
    search->add_option("--k", sk)->required();
    search->add_option("--budget", budget);
    search->add_option("--generators", sgens)->check(CLI::IsMember({"essential", "full"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*expand) return cmd_expand(ea, o);
        if (*verify) return cmd_verify(va, o);
        if (*bij) return cmd_bijection(bn, o);
        if (*filt) return cmd_filtration(fa, o);
        if (*hil) return cmd_hilbert(mu, cap, hgens, o);
        if (*search) return cmd_order_search(sn, sk, budget, sgens, o);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
