#pragma once

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "complement.hpp"
#include "kary.hpp"
#include "lattice.hpp"
#include "numbers.hpp"
#include "partition.hpp"
#include "series.hpp"
#include "shelling.hpp"
#include "tree.hpp"

namespace nccp {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = true;
    std::vector<std::string> notes;  // failures first, then informational lines
    double seconds = 0;
};

struct VerifyOptions {
    int max_n = 99;             // lowers every per-criterion bound
    std::string hasse4_edges;     // "lower upper" lines, '#' comments
    std::string kreweras4_pairing;   // "pair a b" and "edge a b" lines
    std::function<void(const std::string&)> progress = [](const std::string&) {};
};

namespace detail {

class Checker {
public:
    explicit Checker(CriterionResult& r) : r_(r) {}

    // Records a failure; keeps the first few per criterion.
    bool expect(bool ok, const std::string& what)
    {
        if (!ok) {
            r_.pass = false;
            if (++fails_ <= 8)
                r_.notes.push_back("FAIL " + what);
        }
        return ok;
    }
    void note(const std::string& s) { r_.notes.push_back(s); }

private:
    CriterionResult& r_;
    int fails_ = 0;
};

template <class A, class B>
std::string eq_text(const A& got, const B& want)
{
    std::ostringstream os;
    os << "got " << got << ", want " << want;
    return os.str();
}

inline std::vector<std::vector<std::string>> fixture_rows(const std::string& text)
{
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#')
            continue;
        std::istringstream ls(line);
        std::vector<std::string> row;
        for (std::string tok; ls >> tok;)
            row.push_back(tok);
        if (!row.empty())
            rows.push_back(std::move(row));
    }
    return rows;
}

template <class F>
CriterionResult run_criterion(int id, std::string name, const VerifyOptions& opt, F&& body)
{
    CriterionResult r;
    r.id = id;
    r.name = std::move(name);
    opt.progress("criterion " + std::to_string(id) + ": " + r.name);
    const auto t0 = std::chrono::steady_clock::now();
    Checker c(r);
    try {
        body(c);
    } catch (const std::exception& e) {
        c.expect(false, std::string("exception: ") + e.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

} // namespace detail

inline CriterionResult verify_counts(const VerifyOptions& opt)
{
    return detail::run_criterion(1, "counting suite", opt, [&](detail::Checker& c) {
        const auto t0 = std::chrono::steady_clock::now();
        const int N = std::min(7, opt.max_n);
        for (int n = 1; n <= N; ++n) {
            const auto all = enumerate(n, Family::nccp);
            const auto ncp = enumerate(n, Family::ncp);
            const std::string at = " at n=" + std::to_string(n);
            c.expect(Int(all.size()) == factorial(n), "|NCCP|" + at);
            c.expect(Int(ncp.size()) == catalan(n), "|NCP|" + at);
            c.expect(Int(enumerate(n, Family::nccp312).size()) == catalan(n), "|NCCP;312|" + at);
            c.expect(Int(enumerate(n, Family::nccp132).size()) == catalan(n), "|NCCP;132|" + at);
            std::vector<Int> by_blocks(n + 1, 0), ncp_blocks(n + 1, 0);
            for (const auto& p : all)
                ++by_blocks[p.block_count()];
            for (const auto& p : ncp)
                ++ncp_blocks[p.block_count()];
            for (int l = 1; l <= n; ++l) {
                c.expect(by_blocks[l] == eulerian(n, l) && eulerian(n, l) == eulerian_recurrence(n, l),
                         "Eulerian census" + at + " l=" + std::to_string(l));
                c.expect(ncp_blocks[l] == narayana(n, l), "Narayana census" + at + " l=" + std::to_string(l));
            }
        }
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        c.expect(s < 5.0, "runtime " + std::to_string(s) + " s exceeds 5 s");
    });
}

inline CriterionResult verify_type_counts(const VerifyOptions& opt)
{
    return detail::run_criterion(2, "type counts", opt, [&](detail::Checker& c) {
        const int N = std::min(6, opt.max_n);
        for (int n = 1; n <= N; ++n) {
            std::map<Composition, Int> census;
            for (const auto& p : enumerate(n, Family::nccp))
                ++census[p.type()];
            for (const auto& s : compositions(n)) {
                const Int t = type_count_T(s);
                c.expect(t == census[s], "T" + to_string(s) + " vs census: " + detail::eq_text(t, census[s]));
                c.expect(t == path_count(build_composition_lattice(s)), "T" + to_string(s) + " vs path count");
                Composition rev(s.rbegin(), s.rend());
                c.expect(t == type_count_T(rev), "T" + to_string(s) + " vs reverse");
            }
        }
        c.expect(type_count_T({1, 3, 1}) == 11, "T(1,3,1) = 11");
        const std::map<Composition, int> table{{{1, 1, 1, 1}, 1}, {{1, 1, 2}, 3}, {{1, 2, 1}, 5}, {{1, 3}, 3},
                                               {{2, 1, 1}, 3},    {{2, 2}, 5},    {{3, 1}, 3},    {{4}, 1}};
        for (const auto& [s, v] : table)
            c.expect(type_count_T(s) == v, "n=4 table entry T" + to_string(s));
        const auto L = build_composition_lattice({1, 3, 1});
        c.expect(L.nodes.size() == 11, "L(1,3,1) has 11 nodes");
    });
}

inline CriterionResult verify_lattice(const VerifyOptions& opt)
{
    return detail::run_criterion(3, "lattice structure", opt, [&](detail::Checker& c) {
        const int N = std::min(6, opt.max_n);
        std::mt19937 rng(20240607);
        for (int n = 1; n <= N; ++n) {
            const std::string at = " at n=" + std::to_string(n);
            const auto& L = lattice_for(n);
            const auto& h = L.diagram();
            for (const auto& e : h.edges)
                if (!c.expect(h.rank(e.upper) == h.rank(e.lower) + 1, "cover changes rank by one" + at))
                    break;
            c.expect(h.elements[h.bottom] == bottom(n) && h.elements[h.top] == top(n), "bottom/top elements" + at);
            bool bounded = true;
            for (int z = 0; z < static_cast<int>(L.size()); ++z)
                bounded &= L.leq(h.bottom, z) && L.leq(z, h.top);
            c.expect(bounded, "every element between bottom and top" + at);

            // Pairs to test: all of them up to n=4, a seeded sample beyond.
            std::vector<std::pair<int, int>> pairs;
            const int size = static_cast<int>(L.size());
            if (n <= 4) {
                for (int a = 0; a < size; ++a)
                    for (int b = 0; b < size; ++b)
                        pairs.emplace_back(a, b);
            } else {
                std::uniform_int_distribution<int> pick(0, size - 1);
                for (int i = 0; i < (n == 5 ? 2000 : 300); ++i)
                    pairs.emplace_back(pick(rng), pick(rng));
            }
            int no_lub = 0, no_glb = 0, bad_join = 0, bad_meet = 0;
            std::string example;
            for (auto [a, b] : pairs) {
                const int u = L.least_upper_bound(a, b), d = L.greatest_lower_bound(a, b);
                if (u < 0 && example.empty())
                    example = to_string(L.at(a), true) + " and " + to_string(L.at(b), true);
                no_lub += u < 0;
                no_glb += d < 0;
                bad_join += u < 0 || L.join(a, b) != u;
                bad_meet += d < 0 || L.meet(a, b) != d;
            }
            const std::string stats = std::to_string(no_lub) + " pairs without a least upper bound, " +
                                      std::to_string(no_glb) + " without a greatest lower bound, join wrong on " +
                                      std::to_string(bad_join) + ", meet wrong on " + std::to_string(bad_meet) +
                                      " of " + std::to_string(pairs.size()) + " pairs";
            if (c.expect(no_lub + no_glb + bad_join + bad_meet == 0, "lattice axioms" + at + ": " + stats) &&
                n >= 4)
                c.note("lattice axioms" + at + ": ok on " + std::to_string(pairs.size()) + " pairs");
            if (!example.empty())
                c.note("n=" + std::to_string(n) + ": no least upper bound for " + example);
        }
        if (N >= 4) {
            std::set<std::pair<std::string, std::string>> want, got;
            for (const auto& row : detail::fixture_rows(opt.hasse4_edges))
                want.emplace(to_string(parse(row.at(0)), true), to_string(parse(row.at(1)), true));
            const auto& h = lattice_for(4).diagram();
            for (const auto& e : h.edges)
                got.emplace(to_string(h.elements[e.lower], true), to_string(h.elements[e.upper], true));
            std::set<std::string> nodes;
            for (const auto& [a, b] : want)
                nodes.insert({a, b});
            c.expect(!want.empty(), "n=4 diagram fixture is present");
            c.expect(nodes.size() == h.elements.size(), "n=4 node set matches the fixture");
            c.expect(got == want, "n=4 cover edges match the fixture: " + detail::eq_text(got.size(), want.size()));
        }
    });
}

inline CriterionResult verify_kreweras(const VerifyOptions& opt)
{
    return detail::run_criterion(4, "Kreweras isomorphism", opt, [&](detail::Checker& c) {
        const int N = std::min(6, opt.max_n);
        for (int n = 1; n <= N; ++n)
            c.expect(kreweras_iso_check(n), "varphi is an order isomorphism at n=" + std::to_string(n));
        if (N < 4)
            return;
        int pairs = 0;
        std::set<std::pair<std::string, std::string>> edges;
        for (const auto& row : detail::fixture_rows(opt.kreweras4_pairing)) {
            const Partition a = parse(row.at(1)), b = parse(row.at(2));
            if (row[0] == "pair") {
                ++pairs;
                c.expect(avoids(a, Pattern::p312) && varphi(a) == b,
                         "pairing " + row[1] + " -> " + row[2] + ": got " + to_string(varphi(a), true));
            } else {
                edges.emplace(to_string(a, true), to_string(b, true));
            }
        }
        c.expect(pairs == 14, "n=4 pairing fixture has all 14 elements");
        const auto h = build_hasse(4, Family::nccp312);
        std::set<std::pair<std::string, std::string>> got;
        for (const auto& e : h.edges)
            got.emplace(to_string(h.elements[e.lower], true), to_string(h.elements[e.upper], true));
        c.expect(got == edges, "n=4 restricted covers match the fixture: " + detail::eq_text(got.size(), edges.size()));
    });
}

inline CriterionResult verify_el_labeling(const VerifyOptions& opt)
{
    return detail::run_criterion(5, "EL-labeling and Moebius", opt, [&](detail::Checker& c) {
        const int N = std::min(6, opt.max_n);
        for (int n = 1; n <= N; ++n) {
            const std::string at = " at n=" + std::to_string(n);
            const auto& L = lattice_for(n);
            const auto& h = L.diagram();
            auto f = el_check(h, L.order(), n <= 4);
            c.expect(!f, std::string(n <= 4 ? "el_check on every interval" : "el_check on [bottom,top]") + at +
                             (f ? ": " + to_string(L.at(f->x), true) + " < " + to_string(L.at(f->y), true) + ", " +
                                      f->reason
                                : ""));
            const Int rec = moebius_recursive(h, L.order(), h.bottom, h.top);
            const Int via = moebius_via_chains(h, L.order(), h.bottom, h.top);
            const Int want = moebius_closed_form(n);
            c.expect(rec == want, "recursive mu" + at + ": " + detail::eq_text(rec, want));
            c.expect(via == want, "falling-chain mu" + at + ": " + detail::eq_text(via, want));

            const auto r = build_hasse(n, Family::nccp312);
            const OrderTable le(r);
            const Int rrec = moebius_recursive(r, le, r.bottom, r.top);
            const Int rwant = kreweras_moebius_closed_form(n);
            c.expect(rrec == rwant, "restricted mu" + at + ": " + detail::eq_text(rrec, rwant));
        }
    });
}

inline CriterionResult verify_chains(const VerifyOptions& opt)
{
    return detail::run_criterion(6, "chains", opt, [&](detail::Checker& c) {
        for (int n = 1; n <= std::min(6, opt.max_n); ++n) {
            const Int got = count_maximal_chains(lattice_for(n).diagram());
            c.expect(got == power(factorial(n - 1), 2), "maximal chains at n=" + std::to_string(n));
        }
        for (int n = 1; n <= std::min(7, opt.max_n); ++n) {
            const Int got = count_maximal_chains(build_hasse(n, Family::nccp312));
            c.expect(got == (n < 2 ? Int(1) : power(Int(n), n - 2)),
                     "restricted maximal chains at n=" + std::to_string(n) + ": " + str(got));
        }
        for (int n = 2; n <= std::min(5, opt.max_n); ++n) {
            const auto& L = lattice_for(n);
            std::set<LabeledParkingFunction> seen;
            bool all_valid = true;
            for_each_maximal_chain(L.diagram(), L.order(), L.diagram().bottom, L.diagram().top,
                                   [&](const std::vector<int>& ch) {
                                       auto f = chain_to_lpf(L.diagram(), ch);
                                       all_valid &= is_labeled_parking_function(f);
                                       seen.insert(std::move(f));
                                   });
            const auto lpf = labeled_parking_functions(n - 1);
            c.expect(all_valid && seen == std::set<LabeledParkingFunction>(lpf.begin(), lpf.end()),
                     "refined labels biject onto labeled parking functions at n=" + std::to_string(n));
        }
        for (int n = 1; n <= std::min(5, opt.max_n); ++n) {
            const auto& L = lattice_for(n);
            const auto r = build_hasse(n, Family::nccp312);
            const OrderTable rle(r);
            for (int k = 2; k <= 4; ++k) {
                const std::string at = " at n=" + std::to_string(n) + " k=" + std::to_string(k);
                const Int full = count_k_chains(L.diagram(), L.order(), k);
                const Int restricted = count_k_chains(r, rle, k);
                const auto trees = all_kary_trees(n, k);
                Int canonical = 0, chains = 0;
                for (const auto& t : trees) {
                    canonical += is_canonical_kary(t);
                    const auto ps = chi_partitions(t);
                    bool ok = true;
                    for (std::size_t j = 0; j + 1 < ps.size(); ++j)
                        ok &= leq(ps[j], ps[j + 1]);
                    chains += ok;
                }
                c.expect(full == kary_product(n, k), "k-chains" + at + ": " + detail::eq_text(full, kary_product(n, k)));
                c.expect(restricted == fuss_catalan(n, k), "restricted k-chains" + at);
                c.expect(Int(trees.size()) == kary_product(n, k), "labeled k-ary trees" + at);
                c.expect(canonical == restricted, "canonical k-ary trees equal restricted k-chains" + at);
                c.expect(chains == Int(trees.size()),
                         "chi sends every tree to a chain" + at + ": " + detail::eq_text(chains, trees.size()));
            }
        }
    });
}

inline CriterionResult verify_multiplicities(const VerifyOptions& opt)
{
    return detail::run_criterion(7, "multiplicities", opt, [&](detail::Checker& c) {
        for (int n = 1; n <= std::min(6, opt.max_n); ++n) {
            bool ok = true;
            for_each_permutation(n, [&](const Perm& w) { ok &= count_M(w) == multiplicity(gamma_type(w)); });
            c.expect(ok, "M(w) = m(gamma(w)) for all w of length " + std::to_string(n));
        }
        for (int n = 2; n <= std::min(7, opt.max_n); ++n) {
            Int s = 0;
            for (const auto& g : gamma_prime(n - 1))
                s += multiplicity(g);
            c.expect(s == odd_double_factorial(n - 1),
                     "sum of m over sequences of length " + std::to_string(n - 1) + ": " +
                         detail::eq_text(s, odd_double_factorial(n - 1)));
        }
        c.expect(gamma_to_string(gamma_type({6, 1, 4, 3, 2, 5})) == "*1**25", "gamma(614325) = *1**25");
        c.expect(multiplicity(parse_gamma("12*3")) == 9, "m(12*3) = 9");
    });
}

inline CriterionResult verify_maps(const VerifyOptions& opt)
{
    return detail::run_criterion(8, "complement maps", opt, [&](detail::Checker& c) {
        for (int n = 1; n <= std::min(6, opt.max_n); ++n) {
            const std::string at = " at n=" + std::to_string(n);
            bool invol = true, blocks = true, reversing = true;
            for (const auto& l : enumerate(n, Family::ncp)) {
                const Partition a = alpha_prime(l);
                invol &= alpha_prime(a) == l;
                blocks &= l.block_count() + a.block_count() == n + 1;
            }
            const auto g = kreweras_graph(n);
            for (auto [lo, hi] : g.edges) {
                const Partition a = alpha_prime(g.nodes[hi]), b = alpha_prime(g.nodes[lo]);
                const auto cov = refinement_covers(a);
                reversing &= std::find(cov.begin(), cov.end(), b) != cov.end();
            }
            c.expect(invol, "alpha' is an involution" + at);
            c.expect(blocks, "blocks(l) + blocks(alpha'(l)) = n+1" + at);
            c.expect(reversing, "alpha' reverses covers" + at);
            c.expect(alpha_diagram_check(n), "alpha' o varphi = bar = varphi o alpha" + at);
            c.expect(beta_diagram_check(n), "c o varphi = beta" + at);
        }
        c.expect(alpha_prime(parse("5/3/124")) == parse("5/34/12"), "alpha'(5/3/124) = 5/34/12");
        c.expect(kreweras_c(parse("78/5/23/146")) == parse("7/68/45/2/13"), "c(78/5/23/146) = 7/68/45/2/13");
        c.expect(varphi_inv(parse("78/5/23/146")) == parse("23/15/478/6"), "varphi^-1(78/5/23/146) = 23/15/478/6");
        c.expect(beta(parse("23/15/478/6")).value == parse("7/68/45/2/13"), "beta(23/15/478/6) = 7/68/45/2/13");
        c.expect(bar(parse("1,5/4,6/2,3")) == parse("6/2,3/1,5/4"), "bar(1,5/4,6/2,3) = 6/2,3/1,5/4");
        c.note("rank identity checked in block-count form: blocks(l) + blocks(alpha'(l)) = n+1");
    });
}

inline CriterionResult verify_tilings(const VerifyOptions& opt)
{
    return detail::run_criterion(9, "Dyck tilings", opt, [&](detail::Checker& c) {
        const int N = std::min(6, opt.max_n);
        for (int k = 2; k <= 4; ++k)
            for (int n = 1; n <= N; ++n) {
                const std::string at = " at n=" + std::to_string(n) + " k=" + std::to_string(k);
                // The largest case is sampled: every 4th sequence plus a seeded draw.
                const bool sample = n == 6 && k == 4;
                std::mt19937 rng(n * 10 + k);
                long idx = 0, trivial_only = 0, tested = 0;
                bool round = true, tree_round = true, predicate = true, additive = true;
                for_each_height(n, k, [&](const std::vector<int>& h) {
                    const bool nontrivial = has_nontrivial_tiles(h, k);
                    trivial_only += !nontrivial;
                    const auto t = tree_from_height(h, k);
                    tree_round &= height_sequence(t) == h;
                    if (n <= 5)
                        tree_round &= chi_inv(chi(t)) == t;
                    if (auto a = height_additivity_check(t))
                        additive &= *a;
                    if (sample && idx++ % 4 != 0 && rng() % 64 != 0)
                        return;
                    ++tested;
                    const auto tiling = tiling_from_height(h, k);
                    round &= height_from_tiling(tiling) == h && tiling_to_chain(tiling) == chi_partitions(t);
                    predicate &= has_nontrivial_tile(tiling) == nontrivial;
                });
                c.expect(round, "height -> tiling -> height/chain round trip" + at);
                c.expect(tree_round, "height -> tree -> height and chi round trip" + at);
                c.expect(predicate, "non-trivial tile predicate matches the tiling" + at);
                c.expect(Int(trivial_only) == fuss_catalan(n, k), "trivial-only tilings" + at);
                c.expect(additive, "height additivity on path-shaped trees" + at);
                if (sample)
                    c.note("n=6 k=4: tilings built for " + std::to_string(tested) + " of " +
                           str(kary_product(6, 4)) + " height sequences");
            }
        const auto five = tiling_from_height({0, 0, 3, 6, 6}, 3);
        std::vector<DyckTile> want{{0, 1, 0}, {0, 2, 1}, {1, 1, 2}};
        for (int x = 2; x <= 7; ++x)
            want.push_back({x, 4, 0});
        auto got = five.tiles;
        std::sort(got.begin(), got.end());
        std::sort(want.begin(), want.end());
        c.expect(got == want, "tiling of h=(0,0,3,6,6)");
        const auto t = tree_from_height({0, 2, 1}, 3);
        c.expect(component_height_sum(t) == std::vector<int>{0, 2, 2} && height_sequence(t) != component_height_sum(t),
                 "h=(0,2,1) breaks additivity with component sum (0,2,2)");
    });
}

inline CriterionResult verify_series(const VerifyOptions& opt)
{
    return detail::run_criterion(10, "generating functions", opt, [&](detail::Checker& c) {
        const int order = std::min(7, opt.max_n);
        const Series a = series_C(order, SeriesMethod::recurrence);
        c.expect(a == series_C(order, SeriesMethod::direct), "recurrence = direct sum to order " + std::to_string(order));
        c.expect(a == series_C(order, SeriesMethod::dyck), "recurrence = Dyck sum to order " + std::to_string(order));
        for (int n = 0; n <= order; ++n)
            c.expect(a.coeff[n].evaluate_at_one() == catalan(n), "Catalan at t=q=1, n=" + std::to_string(n));
        const std::vector<Poly> want{
            tq_monomial(1, 0),
            tq_monomial(1, 0) + tq_monomial(2, 1),
            tq_monomial(1, 0) + tq_monomial(2, 1, 2) + tq_monomial(2, 2) + tq_monomial(3, 3),
        };
        for (int n = 1; n <= std::min(3, order); ++n)
            c.expect(a.coeff[n] == want[n - 1], "coefficient of r^" + std::to_string(n) + ": " +
                                                    a.coeff[n].to_string("tq"));
        for (int n = 1; n <= std::min(5, opt.max_n); ++n)
            c.expect(gen_I_product(n) == gen_I_direct(n), "I_n product = parking sum at n=" + std::to_string(n));
        c.expect(gen_I_product(3).evaluate_at_one() == 36, "I_3(1,1) = 36");
        c.expect(parking_functions(3).size() == 16, "16 parking functions at n=3");
    });
}

// ---------------------------------------------------------------------------

inline const std::map<std::string, std::vector<int>>& verify_suites()
{
    static const std::map<std::string, std::vector<int>> s{
        {"all", {1, 2, 3, 4, 5, 6, 7, 8, 9, 10}},
        {"counts", {1, 2, 10}},
        {"lattice", {3, 4}},
        {"labels", {5, 7}},
        {"maps", {8}},
        {"chains", {6}},
        {"tilings", {9}},
    };
    return s;
}

inline CriterionResult run_criterion_by_id(int id, const VerifyOptions& opt)
{
    switch (id) {
    case 1: return verify_counts(opt);
    case 2: return verify_type_counts(opt);
    case 3: return verify_lattice(opt);
    case 4: return verify_kreweras(opt);
    case 5: return verify_el_labeling(opt);
    case 6: return verify_chains(opt);
    case 7: return verify_multiplicities(opt);
    case 8: return verify_maps(opt);
    case 9: return verify_tilings(opt);
    case 10: return verify_series(opt);
    default: throw std::invalid_argument("no criterion " + std::to_string(id));
    }
}

inline std::vector<CriterionResult> run_suite(const std::string& suite, const VerifyOptions& opt)
{
    auto it = verify_suites().find(suite);
    if (it == verify_suites().end())
        throw std::invalid_argument("unknown suite: " + suite);
    std::vector<CriterionResult> out;
    for (int id : it->second)
        out.push_back(run_criterion_by_id(id, opt));
    return out;
}

inline std::string format_result(const CriterionResult& r)
{
    std::ostringstream os;
    os << (r.pass ? "PASS" : "FAIL") << "  criterion " << r.id << " (" << r.name << ")";
    os.setf(std::ios::fixed);
    os.precision(2);
    os << "  [" << r.seconds << " s]";
    return os.str();
}

} // namespace nccp
