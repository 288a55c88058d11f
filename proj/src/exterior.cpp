#include "superhom/exterior.hpp"

namespace superhom {

ExteriorElement wedge(const ExteriorElement& f, const ExteriorElement& g) {
    f.require_same_rank(g);
    ExteriorElement out(f.n);
    for (const auto& [ma, ca] : f.terms)
        for (const auto& [mb, cb] : g.terms) {
            if (ma & mb)
                continue; // xi_i^2 = 0
            // sign: inversions between the sorted index sequences of ma and mb
            int inv = 0;
            uint32_t rest = mb;
            while (rest) {
                int t = std::countr_zero(rest);
                rest &= rest - 1;
                inv += std::popcount(ma >> (t + 1));
            }
            GaussianRational c = ca * cb;
            if (inv & 1)
                c = -c;
            out.add_term(ma | mb, c);
        }
    return out;
}

ExteriorElement partial(const ExteriorElement& f, int j) {
    if (j < 1 || j > f.n)
        throw Error("partial derivative index out of range");
    uint32_t bit = 1u << (j - 1);
    ExteriorElement out(f.n);
    for (const auto& [m, c] : f.terms) {
        if (!(m & bit))
            continue;
        int below = std::popcount(m & (bit - 1)); // indices smaller than j in the monomial
        GaussianRational v = c;
        if (below & 1)
            v = -v;
        out.add_term(m & ~bit, v);
    }
    return out;
}

std::string monomial_str(uint32_t mask) {
    if (mask == 0)
        return "1";
    std::string s;
    uint32_t rest = mask;
    while (rest) {
        int t = std::countr_zero(rest);
        rest &= rest - 1;
        s += "x" + std::to_string(t + 1);
    }
    return s;
}

std::string ExteriorElement::str() const {
    if (terms.empty())
        return "0";
    std::string out;
    for (const auto& [m, c] : terms) {
        std::string coeff = c.str();
        bool minus = c.is_real() && c.re() == Rational(-1);
        if (c.is_one())
            coeff.clear();
        if (!out.empty() && !(coeff.size() && coeff[0] == '-'))
            out += '+';
        if (minus && m != 0)
            out += '-';
        else if (!coeff.empty() || m == 0) {
            std::string cc = coeff.empty() ? "1" : coeff;
            bool parens = cc.find('+') != std::string::npos || cc.find('-', 1) != std::string::npos;
            out += parens ? "(" + cc + ")" : cc;
            if (m != 0)
                out += "*";
        }
        if (m != 0)
            out += monomial_str(m);
    }
    return out;
}

} // namespace superhom
