#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "skewcell/errors.hpp"

namespace skewcell {

using Rat = mpq_class;
using Int = mpz_class;

enum class FieldKind { rational, cyclotomic, prime, cyclotomic_prime };

struct FieldDescriptor {
    FieldKind kind = FieldKind::rational;
    long p = 0; // root-of-unity order (cyclotomic kinds)
    long c = 0; // characteristic (prime kinds)

    bool operator==(const FieldDescriptor& o) const {
        return kind == o.kind && p == o.p && c == o.c;
    }
    std::string str() const {
        switch (kind) {
        case FieldKind::rational: return "rational";
        case FieldKind::cyclotomic: return "cyclotomic:" + std::to_string(p);
        case FieldKind::prime: return "fp:" + std::to_string(c);
        case FieldKind::cyclotomic_prime:
            return "fpc:" + std::to_string(p) + "," + std::to_string(c);
        }
        return "?";
    }
};

inline bool is_prime_long(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace detail {

using Poly = std::vector<Rat>; // coefficient k = coefficient of x^k

inline void poly_trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

// Exact division of integer polynomials, used to build cyclotomic polynomials.
inline Poly poly_div_exact(Poly num, const Poly& den) {
    Poly q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, Rat(0));
    while (num.size() >= den.size() && !num.empty()) {
        Rat lead = num.back() / den.back();
        size_t shift = num.size() - den.size();
        q[shift] = lead;
        for (size_t i = 0; i < den.size(); ++i) num[shift + i] -= lead * den[i];
        poly_trim(num);
    }
    require(num.empty(), "InternalError", "non-exact polynomial division");
    return q;
}

inline const Poly& cyclotomic_poly(long n) {
    static std::vector<Poly> cache; // index by n
    if (n < (long)cache.size() && !cache[n].empty()) return cache[n];
    if (n >= (long)cache.size()) cache.resize(n + 1);
    Poly f(n + 1, Rat(0));
    f[0] = -1;
    f[n] = 1; // x^n - 1
    for (long d = 1; d < n; ++d)
        if (n % d == 0) f = poly_div_exact(std::move(f), cyclotomic_poly(d));
    cache[n] = f;
    return cache[n];
}

inline long euler_phi(long n) {
    long r = n;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            while (n % d == 0) n /= d;
            r -= r / d;
        }
    if (n > 1) r -= r / n;
    return r;
}

inline long mul_order_mod(long a, long m) {
    require(m > 1, "InternalError", "order modulo 1");
    long x = a % m;
    if (x < 0) x += m;
    long k = 1, y = x;
    while (y != 1) {
        y = (y * x) % m;
        ++k;
        require(k <= m, "InternalError", "element not invertible mod m");
    }
    return k;
}

} // namespace detail

// Immutable description of one member of the coefficient tower
// {Q, Q(eps_p), F_c, F_{p,c}}, with the reduction data precomputed.
class Field;
using FieldPtr = std::shared_ptr<const Field>;

class Field : public std::enable_shared_from_this<Field> {
public:
    FieldDescriptor desc;
    long deg = 1;              // length of the coefficient vector
    std::vector<Rat> modulus;  // monic, size deg+1 (extension kinds only)
    Int cz;                    // characteristic as mpz (prime kinds)

    static FieldPtr make(const FieldDescriptor& d) {
        auto f = std::shared_ptr<Field>(new Field());
        f->desc = d;
        switch (d.kind) {
        case FieldKind::rational:
            f->deg = 1;
            break;
        case FieldKind::prime:
            require(is_prime_long(d.c), "BadDescriptor", "characteristic must be prime");
            f->deg = 1;
            f->cz = d.c;
            break;
        case FieldKind::cyclotomic: {
            require(d.p >= 2, "BadDescriptor", "cyclotomic order must be >= 2");
            f->modulus = detail::cyclotomic_poly(d.p);
            f->deg = (long)f->modulus.size() - 1;
            break;
        }
        case FieldKind::cyclotomic_prime: {
            require(is_prime_long(d.c), "BadDescriptor", "characteristic must be prime");
            require(d.p >= 2, "BadDescriptor", "cyclotomic order must be >= 2");
            require(d.p % d.c != 0, "BadDescriptor", "characteristic divides root order");
            f->cz = d.c;
            long r = detail::mul_order_mod(d.c, d.p);
            f->deg = r;
            f->modulus = least_factor_of_cyclotomic(d.p, d.c, r);
            break;
        }
        }
        return f;
    }

    bool modular() const {
        return desc.kind == FieldKind::prime || desc.kind == FieldKind::cyclotomic_prime;
    }
    bool extension() const {
        return desc.kind == FieldKind::cyclotomic || desc.kind == FieldKind::cyclotomic_prime;
    }
    long characteristic() const { return modular() ? desc.c : 0; }

    // base-coefficient arithmetic (Q or F_c)
    Rat breduce(const Rat& x) const {
        if (!modular()) return x;
        Int den = x.get_den();
        Int g;
        mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), cz.get_mpz_t());
        require(g == 1, "BadDenominator", "denominator divisible by the characteristic");
        Int inv;
        int ok = mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), cz.get_mpz_t());
        require(ok != 0, "InternalError", "no modular inverse");
        Int v = (x.get_num() * inv) % cz;
        if (v < 0) v += cz;
        return Rat(v);
    }
    Rat binv(const Rat& x) const {
        if (!modular()) {
            require(x != 0, "DivisionByZero", "inverse of zero");
            return 1 / x;
        }
        Rat r = breduce(x);
        require(r != 0, "DivisionByZero", "inverse of zero");
        Int inv;
        mpz_invert(inv.get_mpz_t(), r.get_num().get_mpz_t(), cz.get_mpz_t());
        return Rat(inv);
    }

private:
    Field() = default;

    // Lexicographically least monic degree-r divisor of Phi_p over F_c,
    // coefficients compared from the constant term up. Every irreducible
    // factor has degree exactly r, so any degree-r divisor is irreducible.
    static std::vector<Rat> least_factor_of_cyclotomic(long p, long c, long r) {
        const detail::Poly& phi = detail::cyclotomic_poly(p);
        std::vector<long> phic(phi.size());
        for (size_t i = 0; i < phi.size(); ++i) {
            Int v = phi[i].get_num() % c;
            if (v < 0) v += c;
            phic[i] = v.get_si();
        }
        std::vector<long> a(r, 0); // candidate g = x^r + sum a_i x^i
        auto divides = [&]() {
            std::vector<long> rem = phic;
            for (long k = (long)rem.size() - 1; k >= r; --k) {
                long lead = rem[k] % c;
                if (lead == 0) continue;
                rem[k] = 0;
                for (long i = 0; i < r; ++i) {
                    long idx = k - r + i;
                    rem[idx] = ((rem[idx] - lead * a[i]) % c + c * c) % c;
                }
            }
            for (long i = 0; i < r; ++i)
                if (rem[i] % c != 0) return false;
            return true;
        };
        while (true) {
            if (divides()) break;
            long i = r - 1;
            while (i >= 0 && a[i] == c - 1) a[i--] = 0;
            require(i >= 0, "InternalError", "no degree-r factor of Phi_p mod c");
            ++a[i];
        }
        // lexicographic order with constant term major: iterate a_0 outermost.
        // The loop above increments a_{r-1} fastest, i.e. a_0 is major. OK.
        std::vector<Rat> g(r + 1, Rat(0));
        for (long i = 0; i < r; ++i) g[i] = a[i];
        g[r] = 1;
        return g;
    }
};

inline FieldPtr rationals() { return Field::make({FieldKind::rational, 0, 0}); }
inline FieldPtr cyclotomics(long p) { return Field::make({FieldKind::cyclotomic, p, 0}); }
inline FieldPtr prime_field(long c) { return Field::make({FieldKind::prime, 0, c}); }
inline FieldPtr cyclotomic_prime_field(long p, long c) {
    return Field::make({FieldKind::cyclotomic_prime, p, c});
}

// Element of one tower field: canonical coefficient vector over the base.
class Scalar {
public:
    Scalar() = default;
    Scalar(FieldPtr f, std::vector<Rat> co) : f_(std::move(f)), co_(std::move(co)) {
        canonicalize();
    }
    static Scalar zero(const FieldPtr& f) { return Scalar(f, std::vector<Rat>(f->deg, Rat(0))); }
    static Scalar one(const FieldPtr& f) {
        std::vector<Rat> v(f->deg, Rat(0));
        v[0] = 1;
        return Scalar(f, std::move(v));
    }
    static Scalar of(const FieldPtr& f, const Rat& x) {
        std::vector<Rat> v(f->deg, Rat(0));
        v[0] = x;
        return Scalar(f, std::move(v));
    }
    static Scalar of_int(const FieldPtr& f, long x) { return of(f, Rat(x)); }

    const FieldPtr& field() const { return f_; }
    const std::vector<Rat>& coeffs() const { return co_; }

    bool is_zero() const {
        for (const auto& x : co_)
            if (x != 0) return false;
        return true;
    }
    bool is_one() const { return *this == one(f_); }

    bool operator==(const Scalar& o) const {
        check_same(o);
        return co_ == o.co_;
    }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    Scalar operator-() const {
        std::vector<Rat> v(co_.size());
        for (size_t i = 0; i < co_.size(); ++i) v[i] = f_->breduce(-co_[i]);
        return raw(f_, std::move(v));
    }
    Scalar operator+(const Scalar& o) const {
        check_same(o);
        std::vector<Rat> v(co_.size());
        for (size_t i = 0; i < co_.size(); ++i) v[i] = f_->breduce(co_[i] + o.co_[i]);
        return raw(f_, std::move(v));
    }
    Scalar operator-(const Scalar& o) const { return *this + (-o); }
    Scalar operator*(const Scalar& o) const {
        check_same(o);
        if (f_->deg == 1) {
            std::vector<Rat> v{f_->breduce(co_[0] * o.co_[0])};
            return raw(f_, std::move(v));
        }
        std::vector<Rat> prod(2 * f_->deg - 1, Rat(0));
        for (long i = 0; i < f_->deg; ++i) {
            if (co_[i] == 0) continue;
            for (long j = 0; j < f_->deg; ++j) {
                if (o.co_[j] == 0) continue;
                prod[i + j] += co_[i] * o.co_[j];
            }
        }
        reduce_mod(prod, *f_);
        prod.resize(f_->deg, Rat(0));
        for (auto& x : prod) x = f_->breduce(x);
        return raw(f_, std::move(prod));
    }
    Scalar inv() const {
        require(!is_zero(), "DivisionByZero", "inverse of zero");
        if (!f_->extension()) return raw(f_, {f_->binv(co_[0])});
        // extended Euclid: s0 * this == gcd (mod modulus)
        std::vector<Rat> r0 = f_->modulus, r1 = co_;
        trim(r1);
        std::vector<Rat> s0{}, s1{Rat(1)};
        while (!r1.empty()) {
            auto [q, r2] = divmod(r0, r1, *f_);
            auto s2 = sub_poly(s0, mul_poly(q, s1, *f_), *f_);
            r0 = std::move(r1);
            r1 = std::move(r2);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
        require(r0.size() == 1, "InternalError", "modulus not coprime to element");
        Rat u = f_->binv(r0[0]);
        for (auto& x : s0) x = f_->breduce(x * u);
        reduce_mod(s0, *f_);
        s0.resize(f_->deg, Rat(0));
        for (auto& x : s0) x = f_->breduce(x);
        return raw(f_, std::move(s0));
    }
    Scalar operator/(const Scalar& o) const { return *this * o.inv(); }

    Scalar pow(long k) const {
        if (k < 0) return inv().pow(-k);
        Scalar acc = one(f_), base = *this;
        while (k) {
            if (k & 1) acc = acc * base;
            base = base * base;
            k >>= 1;
        }
        return acc;
    }

    // multiplicative order, or 0 if it exceeds the given bound
    long order(long bound = 1024) const {
        if (is_zero()) return 0;
        Scalar x = *this;
        for (long k = 1; k <= bound; ++k) {
            if (x.is_one()) return k;
            x = x * *this;
        }
        return 0;
    }

    std::string str() const;

private:
    FieldPtr f_;
    std::vector<Rat> co_;

    static Scalar raw(const FieldPtr& f, std::vector<Rat> v) {
        Scalar s;
        s.f_ = f;
        s.co_ = std::move(v);
        return s;
    }
    void check_same(const Scalar& o) const {
        require(f_ && o.f_ && f_->desc == o.f_->desc, "DescriptorMismatch",
                "operands live in different fields");
    }
    void canonicalize() {
        require((long)co_.size() == f_->deg, "BadCoefficients", "wrong coefficient count");
        for (auto& x : co_) {
            x.canonicalize();
            x = f_->breduce(x);
        }
    }
    static void trim(std::vector<Rat>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    }
    static std::vector<Rat> mul_poly(const std::vector<Rat>& a, const std::vector<Rat>& b,
                                     const Field& f) {
        if (a.empty() || b.empty()) return {};
        std::vector<Rat> r(a.size() + b.size() - 1, Rat(0));
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = 0; j < b.size(); ++j) r[i + j] = f.breduce(r[i + j] + a[i] * b[j]);
        trim(r);
        return r;
    }
    static std::vector<Rat> sub_poly(std::vector<Rat> a, const std::vector<Rat>& b,
                                     const Field& f) {
        if (a.size() < b.size()) a.resize(b.size(), Rat(0));
        for (size_t i = 0; i < b.size(); ++i) a[i] = f.breduce(a[i] - b[i]);
        trim(a);
        return a;
    }
    static std::pair<std::vector<Rat>, std::vector<Rat>> divmod(std::vector<Rat> num,
                                                                const std::vector<Rat>& den,
                                                                const Field& f) {
        std::vector<Rat> q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, Rat(0));
        Rat dinv = f.binv(den.back());
        while (num.size() >= den.size() && !num.empty()) {
            Rat lead = f.breduce(num.back() * dinv);
            size_t shift = num.size() - den.size();
            q[shift] = lead;
            for (size_t i = 0; i < den.size(); ++i)
                num[shift + i] = f.breduce(num[shift + i] - lead * den[i]);
            trim(num);
        }
        return {std::move(q), std::move(num)};
    }
    static void reduce_mod(std::vector<Rat>& v, const Field& f) {
        long d = f.deg;
        for (long k = (long)v.size() - 1; k >= d; --k) {
            Rat lead = v[k];
            if (lead == 0) continue;
            v[k] = 0;
            for (long i = 0; i < d; ++i) v[k - d + i] -= lead * f.modulus[i];
        }
        v.resize(std::max<size_t>(v.size(), d), Rat(0));
    }

    friend Scalar scalar_from_poly(const FieldPtr&, std::vector<Rat>);
};

inline Scalar scalar_from_poly(const FieldPtr& f, std::vector<Rat> v) {
    if (f->extension()) {
        Scalar::reduce_mod(v, *f);
        v.resize(f->deg, Rat(0));
    } else {
        require(v.size() <= 1, "BadCoefficients", "polynomial in a degree-1 field");
        v.resize(1, Rat(0));
    }
    for (auto& x : v) x = f->breduce(x);
    return Scalar(f, std::move(v));
}

// Distinguished primitive p-th root of unity (class of x).
inline Scalar primitive_root(const FieldPtr& f) {
    require(f->desc.kind == FieldKind::cyclotomic || f->desc.kind == FieldKind::cyclotomic_prime,
            "NoRoot", "descriptor carries no root order");
    std::vector<Rat> v(2, Rat(0));
    v[1] = 1;
    return scalar_from_poly(f, std::move(v));
}

// Some element of multiplicative order exactly m, deterministic choice.
inline Scalar root_of_order(const FieldPtr& f, long m) {
    require(m >= 1, "BadRootOrder", "order must be positive");
    if (m == 1) return Scalar::one(f);
    switch (f->desc.kind) {
    case FieldKind::rational:
        require(m == 2, "BadRootOrder", "Q has no root of order " + std::to_string(m));
        return Scalar::of_int(f, -1);
    case FieldKind::prime: {
        for (long a = 2; a < f->desc.c; ++a) {
            Scalar s = Scalar::of_int(f, a);
            if (s.order(m) == m) return s;
        }
        fail("BadRootOrder", "F_" + std::to_string(f->desc.c) + " has no root of order " +
                                 std::to_string(m));
    }
    case FieldKind::cyclotomic:
    case FieldKind::cyclotomic_prime: {
        if (f->desc.p % m == 0) return primitive_root(f).pow(f->desc.p / m);
        if (m == 2) {
            Scalar s = Scalar::of_int(f, -1);
            if (!(s == Scalar::one(f))) return s;
        }
        fail("BadRootOrder", f->desc.str() + " has no canonical root of order " +
                                 std::to_string(m));
    }
    }
    fail("BadRootOrder", "unreachable");
}

// pi : Q(eps_p) -> F_{p,c}, the ring homomorphism with pi(eps) = eps_F.
inline Scalar reduce_pi(const Scalar& z, long c) {
    require(z.field()->desc.kind == FieldKind::cyclotomic, "DescriptorMismatch",
            "reduce_pi needs a cyclotomic argument");
    FieldPtr tgt = cyclotomic_prime_field(z.field()->desc.p, c);
    std::vector<Rat> v(z.coeffs().size());
    for (size_t i = 0; i < v.size(); ++i) v[i] = tgt->breduce(z.coeffs()[i]);
    return scalar_from_poly(tgt, std::move(v));
}

// ---- text syntax: polynomial in E with rational coefficients -------------

inline std::string rat_str(const Rat& x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

inline std::string Scalar::str() const {
    if (!f_->extension()) return rat_str(co_[0]);
    std::string out;
    bool first = true;
    for (long k = f_->deg - 1; k >= 0; --k) {
        const Rat& a = co_[k];
        if (a == 0) continue;
        Rat mag = abs(a);
        bool neg = a < 0;
        std::string term;
        if (k == 0)
            term = rat_str(mag);
        else {
            std::string epart = (k == 1) ? "E" : "E^" + std::to_string(k);
            term = (mag == 1) ? epart : rat_str(mag) + "*" + epart;
        }
        if (first) {
            out = (neg ? "-" : "") + term;
            first = false;
        } else {
            out += (neg ? " - " : " + ") + term;
        }
    }
    return first ? "0" : out;
}

inline Scalar parse_scalar(const std::string& text, const FieldPtr& f) {
    std::string s;
    for (char ch : text)
        if (!isspace((unsigned char)ch)) s += ch;
    require(!s.empty(), "ParseError", "empty scalar");
    std::vector<Rat> poly;
    size_t i = 0;
    auto bump = [&](long k, const Rat& v) {
        if ((long)poly.size() <= k) poly.resize(k + 1, Rat(0));
        poly[k] += v;
    };
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        }
        require(i < s.size(), "ParseError", "dangling sign in '" + text + "'");
        Rat coeff(1);
        bool have_coeff = false;
        if (isdigit((unsigned char)s[i])) {
            size_t j = i;
            while (j < s.size() && (isdigit((unsigned char)s[j]) || s[j] == '/')) ++j;
            Rat r;
            require(r.set_str(s.substr(i, j - i), 10) == 0, "ParseError",
                    "bad rational in '" + text + "'");
            r.canonicalize();
            coeff = r;
            have_coeff = true;
            i = j;
            if (i < s.size() && s[i] == '*') ++i;
        }
        long expo = 0;
        if (i < s.size() && s[i] == 'E') {
            ++i;
            expo = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                size_t j = i;
                if (j < s.size() && s[j] == '-') ++j;
                while (j < s.size() && isdigit((unsigned char)s[j])) ++j;
                require(j > i, "ParseError", "bad exponent in '" + text + "'");
                expo = std::stol(s.substr(i, j - i));
                require(expo >= 0, "ParseError", "negative E exponent");
                i = j;
            }
        } else {
            require(have_coeff, "ParseError", "expected term in '" + text + "'");
        }
        bump(expo, sign * coeff);
    }
    if (poly.empty()) poly.assign(1, Rat(0));
    return scalar_from_poly(f, std::move(poly));
}

// pointwise field_arith entry point used by the CLI and tests
inline Scalar field_arith(const Scalar& a, const Scalar& b, const std::string& op) {
    if (op == "add") return a + b;
    if (op == "sub") return a - b;
    if (op == "mul") return a * b;
    if (op == "div") return a / b;
    fail("BadOp", "unknown field operation '" + op + "'");
}

} // namespace skewcell
