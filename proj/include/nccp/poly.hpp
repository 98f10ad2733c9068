#pragma once

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "numbers.hpp"

namespace nccp {

// Sparse multivariate polynomial; exponent vectors all share one length.
class Poly {
public:
    using Exp = std::vector<int>;

    explicit Poly(int vars = 1) : vars_(vars) {}

    static Poly constant(int vars, const Int& c)
    {
        Poly p(vars);
        p.add(Exp(vars, 0), c);
        return p;
    }

    static Poly monomial(const Exp& e, const Int& c = 1)
    {
        Poly p(static_cast<int>(e.size()));
        p.add(e, c);
        return p;
    }

    int vars() const { return vars_; }
    const std::map<Exp, Int>& terms() const { return terms_; }

    void add(const Exp& e, const Int& c)
    {
        if (c == 0)
            return;
        auto& slot = terms_[e];
        slot += c;
        if (slot == 0)
            terms_.erase(e);
    }

    Int coeff(const Exp& e) const
    {
        auto it = terms_.find(e);
        return it == terms_.end() ? Int(0) : it->second;
    }

    Poly& operator+=(const Poly& o)
    {
        for (const auto& [e, c] : o.terms_)
            add(e, c);
        return *this;
    }

    Poly& operator-=(const Poly& o)
    {
        for (const auto& [e, c] : o.terms_)
            add(e, -c);
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

    friend Poly operator*(const Poly& a, const Poly& b)
    {
        Poly r(a.vars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exp e(ea);
                for (std::size_t i = 0; i < e.size(); ++i)
                    e[i] += eb[i];
                r.add(e, ca * cb);
            }
        return r;
    }

    // Drops every term whose exponent in variable v exceeds max_degree.
    Poly truncated(int v, int max_degree) const
    {
        Poly r(vars_);
        for (const auto& [e, c] : terms_)
            if (e[v] <= max_degree)
                r.terms_.emplace(e, c);
        return r;
    }

    Int evaluate_at_one() const
    {
        Int s = 0;
        for (const auto& [e, c] : terms_)
            s += c;
        return s;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

    // Terms in ascending exponent order, variables named by `names`.
    std::string to_string(const std::string& names) const
    {
        if (terms_.empty())
            return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            Int mag = c < 0 ? Int(-c) : c;
            if (first)
                os << (c < 0 ? "-" : "");
            else
                os << (c < 0 ? " - " : " + ");
            first = false;
            bool any = false;
            for (std::size_t i = 0; i < e.size(); ++i)
                any |= e[i] != 0;
            if (mag != 1 || !any)
                os << mag;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (!e[i])
                    continue;
                os << names[i];
                if (e[i] > 1)
                    os << '^' << e[i];
            }
        }
        return os.str();
    }

private:
    int vars_;
    std::map<Exp, Int> terms_;
};

} // namespace nccp
