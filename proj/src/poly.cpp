#include "superhom/poly.hpp"

#include <cassert>

namespace superhom {

void Poly::prune_zeros() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second.is_zero())
            it = terms_.erase(it);
        else
            ++it;
    }
}

void Poly::compress_vars() {
    if (vars_.empty())
        return;
    std::vector<bool> used(vars_.size(), false);
    for (const auto& [e, c] : terms_)
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0)
                used[i] = true;
    if (std::all_of(used.begin(), used.end(), [](bool b) { return b; }))
        return;
    std::vector<std::string> nv;
    std::vector<size_t> keep;
    for (size_t i = 0; i < vars_.size(); ++i)
        if (used[i]) {
            nv.push_back(vars_[i]);
            keep.push_back(i);
        }
    TermMap nt;
    for (const auto& [e, c] : terms_) {
        Exponents ne(keep.size());
        for (size_t i = 0; i < keep.size(); ++i) ne[i] = e[keep[i]];
        nt[std::move(ne)] = c;
    }
    vars_ = std::move(nv);
    terms_ = std::move(nt);
}

void Poly::align(const Poly& a, const Poly& b, std::vector<std::string>& vars,
                 std::vector<size_t>& map_a, std::vector<size_t>& map_b) {
    vars.clear();
    std::set_union(a.vars_.begin(), a.vars_.end(), b.vars_.begin(), b.vars_.end(),
                   std::back_inserter(vars));
    auto build = [&vars](const std::vector<std::string>& own, std::vector<size_t>& map) {
        map.resize(own.size());
        for (size_t i = 0; i < own.size(); ++i)
            map[i] = static_cast<size_t>(
                std::lower_bound(vars.begin(), vars.end(), own[i]) - vars.begin());
    };
    build(a.vars_, map_a);
    build(b.vars_, map_b);
}

Poly::Exponents Poly::remap(const Exponents& e, const std::vector<size_t>& map,
                            size_t arity) const {
    Exponents ne(arity, 0);
    for (size_t i = 0; i < e.size(); ++i) ne[map[i]] = e[i];
    return ne;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.is_zero())
        return *this;
    if (vars_ == o.vars_) {
        for (const auto& [e, c] : o.terms_) {
            auto [it, fresh] = terms_.emplace(e, c);
            if (!fresh) {
                it->second += c;
                if (it->second.is_zero())
                    terms_.erase(it);
            }
        }
        compress_vars();
        return *this;
    }
    std::vector<std::string> vars;
    std::vector<size_t> ma, mb;
    align(*this, o, vars, ma, mb);
    TermMap nt;
    for (const auto& [e, c] : terms_) nt[remap(e, ma, vars.size())] = c;
    for (const auto& [e, c] : o.terms_) {
        auto key = o.remap(e, mb, vars.size());
        auto [it, fresh] = nt.emplace(std::move(key), c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero())
                nt.erase(it);
        }
    }
    vars_ = std::move(vars);
    terms_ = std::move(nt);
    compress_vars();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly& Poly::operator*=(const Poly& o) {
    if (is_zero())
        return *this;
    if (o.is_zero()) {
        vars_.clear();
        terms_.clear();
        return *this;
    }
    std::vector<std::string> vars;
    std::vector<size_t> ma, mb;
    align(*this, o, vars, ma, mb);
    TermMap nt;
    for (const auto& [ea, ca] : terms_) {
        Exponents base = remap(ea, ma, vars.size());
        for (const auto& [eb, cb] : o.terms_) {
            Exponents e = base;
            for (size_t i = 0; i < eb.size(); ++i) e[mb[i]] += eb[i];
            GaussianRational c = ca * cb;
            auto it = nt.find(e);
            if (it == nt.end()) {
                nt.emplace(std::move(e), std::move(c));
            } else {
                it->second += c;
                if (it->second.is_zero())
                    nt.erase(it);
            }
        }
    }
    vars_ = std::move(vars);
    terms_ = std::move(nt);
    prune_zeros();
    compress_vars();
    return *this;
}

Poly& Poly::operator*=(const GaussianRational& c) {
    if (c.is_zero()) {
        vars_.clear();
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

GaussianRational Poly::evaluate(const std::map<std::string, GaussianRational>& assignment) const {
    std::vector<GaussianRational> values(vars_.size());
    for (size_t i = 0; i < vars_.size(); ++i) {
        auto it = assignment.find(vars_[i]);
        if (it == assignment.end())
            throw UnboundParameterError("unbound parameter '" + vars_[i] + "'");
        values[i] = it->second;
    }
    GaussianRational acc(0);
    for (const auto& [e, c] : terms_) {
        GaussianRational t = c;
        for (size_t i = 0; i < e.size(); ++i)
            for (unsigned k = 0; k < e[i]; ++k) t *= values[i];
        acc += t;
    }
    return acc;
}

Poly Poly::substitute(const std::string& name, const Poly& value) const {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end())
        return *this;
    size_t idx = static_cast<size_t>(it - vars_.begin());
    Poly acc;
    for (const auto& [e, c] : terms_) {
        Poly term = Poly::constant(c);
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            if (i == idx) {
                for (unsigned k = 0; k < e[i]; ++k) term *= value;
            } else {
                term *= Poly::variable(vars_[i], e[i]);
            }
        }
        acc += term;
    }
    return acc;
}

std::string Poly::str() const {
    if (terms_.empty())
        return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        bool has_monomial = false;
        for (unsigned k : e)
            if (k > 0)
                has_monomial = true;

        std::string coeff;
        bool negative = false;
        if (c.is_real()) {
            Rational r = c.re();
            if (r.sign() < 0) {
                negative = true;
                r = -r;
            }
            if (!(r.is_one() && has_monomial))
                coeff = r.str();
        } else if (c.re().is_zero()) {
            Rational im = c.im();
            if (im.sign() < 0) {
                negative = true;
                im = -im;
            }
            coeff = GaussianRational(Rational(0), im).str();
        } else {
            coeff = "(" + c.str() + ")";
        }

        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? "-" : "+";

        std::string mono;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            if (!mono.empty())
                mono += '*';
            mono += vars_[i];
            if (e[i] > 1) {
                mono += '^';
                mono += std::to_string(e[i]);
            }
        }
        if (coeff.empty())
            out += mono;
        else if (mono.empty())
            out += coeff;
        else
            out += coeff + "*" + mono;
    }
    return out;
}

} // namespace superhom
