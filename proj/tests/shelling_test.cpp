#include <algorithm>
#include <functional>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "nccp/shelling.hpp"

using namespace nccp;

namespace {

// Philip Hall: mu(x,y) = sum over chains x = z0 < ... < zk = y of (-1)^k.
Int hall_moebius(const HasseDiagram& h, const OrderTable& le, int x, int y)
{
    const int size = static_cast<int>(h.elements.size());
    std::vector<int> order;
    for (int z = 0; z < size; ++z)
        if (le(x, z) && le(z, y))
            order.push_back(z);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return h.rank(a) < h.rank(b); });
    const int len = h.rank(y) - h.rank(x);
    // chains[z][k]: chains from x to z with k steps
    std::vector<std::vector<Int>> chains(size, std::vector<Int>(len + 1, 0));
    chains[x][0] = 1;
    for (int z : order)
        for (int w : order)
            if (w != z && le(w, z))
                for (int k = 0; k < len; ++k)
                    chains[z][k + 1] += chains[w][k];
    Int mu = 0;
    for (int k = 0; k <= len; ++k)
        mu += k % 2 ? Int(-chains[y][k]) : chains[y][k];
    return mu;
}

// Weakly increasing a with a_i <= min(i, w_i), by listing all sequences.
long brute_M(const Perm& w)
{
    const int n = static_cast<int>(w.size());
    long c = 0;
    std::vector<int> a(n, 1);
    std::function<void(int)> go = [&](int i) {
        if (i == n) {
            ++c;
            return;
        }
        for (int v = i ? a[i - 1] : 1; v <= std::min(i + 1, w[i]); ++v) {
            a[i] = v;
            go(i + 1);
        }
    };
    go(0);
    return c;
}

} // namespace

TEST(Moebius, RecursionMatchesChainSum)
{
    for (int n = 1; n <= 5; ++n) {
        const auto& L = lattice_for(n);
        const auto& h = L.diagram();
        for (std::size_t x = 0; x < L.size(); x += 3)
            for (std::size_t y = 0; y < L.size(); ++y)
                if (L.leq(static_cast<int>(x), static_cast<int>(y)))
                    ASSERT_EQ(moebius_recursive(h, L.order(), x, y), hall_moebius(h, L.order(), x, y));
    }
}

// Frozen from the recursion and the chain sum. The closed form
// (-1)^(n-1) (2n-3)!! holds up to n = 4 only.
TEST(Moebius, BottomToTopValues)
{
    const std::vector<Int> observed{1, -1, 3, -15, 100, -791};
    for (int n = 1; n <= 6; ++n) {
        const auto& L = lattice_for(n);
        const auto& h = L.diagram();
        EXPECT_EQ(moebius_recursive(h, L.order(), h.bottom, h.top), observed[n - 1]) << "n=" << n;
        EXPECT_EQ(count_falling_chains(h, L.order(), h.bottom, h.top), odd_double_factorial(n - 1));
        if (n <= 4)
            EXPECT_EQ(moebius_via_chains(h, L.order(), h.bottom, h.top), moebius_closed_form(n));
    }
    EXPECT_EQ(moebius_closed_form(5), 105);
    EXPECT_EQ(moebius_closed_form(6), -945);
}

TEST(Moebius, RestrictedValues)
{
    for (int n = 1; n <= 6; ++n) {
        const auto r = build_hasse(n, Family::nccp312);
        const OrderTable le(r);
        EXPECT_EQ(moebius_recursive(r, le, r.bottom, r.top), kreweras_moebius_closed_form(n));
        EXPECT_EQ(hall_moebius(r, le, r.bottom, r.top), kreweras_moebius_closed_form(n));
    }
}

TEST(ElLabeling, HoldsOnSmallPosets)
{
    for (int n = 1; n <= 4; ++n) {
        const auto& L = lattice_for(n);
        EXPECT_FALSE(el_check(L.diagram(), L.order()).has_value()) << "n=" << n;
    }
    for (int n = 5; n <= 6; ++n) {
        const auto& L = lattice_for(n);
        EXPECT_FALSE(el_check(L.diagram(), L.order(), false).has_value()) << "n=" << n;
    }
}

TEST(ElLabeling, FailsOnAFiveElementInterval)
{
    const auto& L = lattice_for(5);
    const int x = L.index(parse("3/25/4/1")), y = L.index(parse("24/135"));
    auto f = el_check_interval(L.diagram(), L.order(), x, y);
    ASSERT_TRUE(f.has_value());
    EXPECT_EQ(f->reason, "0 rising chains");
}

TEST(Chains, MaximalChains)
{
    for (int n = 1; n <= 6; ++n)
        EXPECT_EQ(count_maximal_chains(lattice_for(n).diagram()), power(factorial(n - 1), 2));
    for (int n = 2; n <= 7; ++n)
        EXPECT_EQ(count_maximal_chains(build_hasse(n, Family::nccp312)), power(Int(n), n - 2));
}

TEST(Chains, MultichainCounts)
{
    for (int n = 1; n <= 4; ++n) {
        const auto& L = lattice_for(n);
        for (int k = 1; k <= 4; ++k)
            EXPECT_EQ(count_k_chains(L.diagram(), L.order(), k), kary_product(n, k)) << n << " " << k;
    }
    const auto& L5 = lattice_for(5);
    EXPECT_EQ(count_k_chains(L5.diagram(), L5.order(), 3), 950);
    EXPECT_EQ(count_k_chains(L5.diagram(), L5.order(), 4), 3660);
    const auto& L6 = lattice_for(6);
    EXPECT_EQ(count_k_chains(L6.diagram(), L6.order(), 3), 10588);
    for (int n = 1; n <= 5; ++n) {
        const auto r = build_hasse(n, Family::nccp312);
        const OrderTable le(r);
        for (int k = 2; k <= 4; ++k)
            EXPECT_EQ(count_k_chains(r, le, k), fuss_catalan(n, k));
    }
}

TEST(ParkingFunctions, Counts)
{
    for (int n = 0; n <= 6; ++n)
        EXPECT_EQ(Int(parking_functions(n).size()), power(Int(n + 1), n - 1 < 0 ? 0 : n - 1));
    EXPECT_EQ(parking_functions(3).size(), 16u);
    for (int n = 1; n <= 5; ++n) {
        EXPECT_EQ(Int(labeled_parking_functions(n).size()), power(factorial(n), 2));
        EXPECT_EQ(gen_I_product(n), gen_I_direct(n));
    }
    EXPECT_EQ(gen_I(3).evaluate_at_one(), 36);
}

TEST(ParkingFunctions, RefinedLabelsBiject)
{
    for (int n = 2; n <= 5; ++n) {
        const auto& L = lattice_for(n);
        std::set<LabeledParkingFunction> seen;
        for_each_maximal_chain(L.diagram(), L.order(), L.diagram().bottom, L.diagram().top,
                               [&](const std::vector<int>& c) {
                                   auto f = chain_to_lpf(L.diagram(), c);
                                   ASSERT_TRUE(is_labeled_parking_function(f));
                                   seen.insert(f);
                               });
        EXPECT_EQ(Int(seen.size()), power(factorial(n - 1), 2));
    }
}

TEST(Multiplicities, WorkedValues)
{
    EXPECT_EQ(gamma_to_string(gamma_type({6, 1, 4, 3, 2, 5})), "*1**25");
    EXPECT_EQ(multiplicity(parse_gamma("12*3")), 9);
    EXPECT_EQ(parse_gamma("*1**25"), (GammaType{0, 1, 0, 0, 2, 5}));
    EXPECT_THROW(parse_gamma("12*"), std::invalid_argument);
}

TEST(Multiplicities, CountMatchesBruteForce)
{
    for (int n = 1; n <= 6; ++n)
        for_each_permutation(n, [&](const Perm& w) {
            ASSERT_EQ(count_M(w), brute_M(w));
            ASSERT_EQ(count_M(w), multiplicity(gamma_type(w)));
        });
    for (int n = 2; n <= 7; ++n) {
        Int s = 0;
        for (const auto& g : gamma_prime(n - 1))
            s += multiplicity(g);
        EXPECT_EQ(s, odd_double_factorial(n - 1));
    }
}

TEST(DecreasingSequences, SizesMatchFallingChains)
{
    for (int n = 1; n <= 5; ++n) {
        auto d = decreasing_sequences(n);
        Int total = 0;
        for (const auto& a : d.A)
            total += d.B[a].size();
        EXPECT_EQ(total, odd_double_factorial(n - 1)) << "n=" << n;
    }
}
