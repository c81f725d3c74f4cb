#pragma once

#include <map>
#include <string>

#include "skewcell/errors.hpp"

namespace skewcell {

// Z[t, t^-1] with integer coefficients; no stored zero terms.
class Laurent {
public:
    Laurent() = default;
    static Laurent t(long k, long long coeff = 1) {
        Laurent f;
        if (coeff != 0) f.terms_[k] = coeff;
        return f;
    }
    static Laurent constant(long long v) { return t(0, v); }
    static Laurent one() { return constant(1); }

    const std::map<long, long long>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const { return terms_.size() == 1 && terms_.count(0) && terms_.at(0) == 1; }
    bool nonneg() const {
        for (auto& [k, c] : terms_)
            if (c < 0) return false;
        return true;
    }

    void add_term(long k, long long c) {
        if (c == 0) return;
        long long& slot = terms_[k];
        require(!__builtin_add_overflow(slot, c, &slot), "Overflow", "Laurent coefficient overflow");
        if (slot == 0) terms_.erase(k);
    }

    Laurent operator+(const Laurent& o) const {
        Laurent r = *this;
        for (auto& [k, c] : o.terms_) r.add_term(k, c);
        return r;
    }
    Laurent operator-(const Laurent& o) const {
        Laurent r = *this;
        for (auto& [k, c] : o.terms_) r.add_term(k, -c);
        return r;
    }
    Laurent operator*(const Laurent& o) const {
        Laurent r;
        for (auto& [k1, c1] : terms_)
            for (auto& [k2, c2] : o.terms_) {
                long long p;
                require(!__builtin_mul_overflow(c1, c2, &p), "Overflow",
                        "Laurent coefficient overflow");
                r.add_term(k1 + k2, p);
            }
        return r;
    }
    bool operator==(const Laurent& o) const { return terms_ == o.terms_; }
    bool operator!=(const Laurent& o) const { return !(*this == o); }

    // t -> t^-1
    Laurent bar() const {
        Laurent r;
        for (auto& [k, c] : terms_) r.terms_[-k] = c;
        return r;
    }
    long long eval_one() const {
        long long s = 0;
        for (auto& [k, c] : terms_)
            require(!__builtin_add_overflow(s, c, &s), "Overflow", "Laurent evaluation overflow");
        return s;
    }

    // ascending exponents, constant bare, '1*' omitted: "t^-1+2+t^3"
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (auto& [k, c] : terms_) {
            std::string term;
            if (k == 0)
                term = std::to_string(c);
            else {
                std::string mag = std::to_string(c < 0 ? -c : c);
                std::string body =
                    ((c == 1 || c == -1) ? "" : mag + "*") + "t^" + std::to_string(k);
                term = (c < 0 ? "-" : "") + body;
            }
            if (!first && term[0] != '-') out += "+";
            out += term;
            first = false;
        }
        return out;
    }

    static Laurent parse(const std::string& text) {
        std::string s;
        for (char ch : text)
            if (!isspace((unsigned char)ch)) s += ch;
        require(!s.empty(), "ParseError", "empty Laurent polynomial");
        Laurent r;
        size_t i = 0;
        while (i < s.size()) {
            int sign = 1;
            if (s[i] == '+' || s[i] == '-') {
                sign = s[i] == '-' ? -1 : 1;
                ++i;
            }
            long long coeff = 1;
            bool have = false;
            size_t j = i;
            while (j < s.size() && isdigit((unsigned char)s[j])) ++j;
            if (j > i) {
                coeff = std::stoll(s.substr(i, j - i));
                have = true;
                i = j;
                if (i < s.size() && s[i] == '*') ++i;
            }
            long expo = 0;
            if (i < s.size() && s[i] == 't') {
                ++i;
                expo = 1;
                if (i < s.size() && s[i] == '^') {
                    ++i;
                    size_t k = i;
                    if (k < s.size() && s[k] == '-') ++k;
                    while (k < s.size() && isdigit((unsigned char)s[k])) ++k;
                    require(k > i, "ParseError", "bad exponent in '" + text + "'");
                    expo = std::stol(s.substr(i, k - i));
                    i = k;
                }
            } else {
                require(have, "ParseError", "expected term in '" + text + "'");
            }
            r.add_term(expo, sign * coeff);
        }
        return r;
    }

private:
    std::map<long, long long> terms_;
};

inline Laurent laurent_arith(const Laurent& f, const Laurent& g, const std::string& op) {
    if (op == "add") return f + g;
    if (op == "mul") return f * g;
    if (op == "bar") return f.bar();
    fail("BadOp", "unknown Laurent operation '" + op + "'");
}

} // namespace skewcell
