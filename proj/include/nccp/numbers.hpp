#pragma once

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace nccp {

using Int = boost::multiprecision::cpp_int;

inline Int factorial(int n)
{
    Int r = 1;
    for (int i = 2; i <= n; ++i)
        r *= i;
    return r;
}

// (2m-1)!! with the convention (-1)!! = 1
inline Int odd_double_factorial(int m)
{
    Int r = 1;
    for (int j = 1; j < 2 * m; j += 2)
        r *= j;
    return r;
}

inline Int binomial(int n, int k)
{
    if (k < 0 || k > n || n < 0)
        return 0;
    Int r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

inline Int catalan(int n) { return binomial(2 * n, n) / (n + 1); }

// (1/(kn+1)) * C(kn+1, n)
inline Int fuss_catalan(int n, int k) { return binomial(k * n + 1, n) / (k * n + 1); }

// prod_{j=0}^{n-1} ((k-1) j + 1)
inline Int kary_product(int n, int k)
{
    Int r = 1;
    for (int j = 0; j < n; ++j)
        r *= (k - 1) * j + 1;
    return r;
}

inline Int power(Int base, int e)
{
    Int r = 1;
    for (int i = 0; i < e; ++i)
        r *= base;
    return r;
}

// Sign-carrying closed form of the full Möbius value: (-1)^(n-1) (2n-3)!!
inline Int moebius_closed_form(int n)
{
    Int v = odd_double_factorial(n - 1);
    return (n - 1) % 2 ? Int(-v) : v;
}

inline Int kreweras_moebius_closed_form(int n)
{
    Int v = catalan(n - 1);
    return (n - 1) % 2 ? Int(-v) : v;
}

inline std::string str(const Int& v) { return v.str(); }

} // namespace nccp
