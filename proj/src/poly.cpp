#include "pcpoly/poly.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

namespace pcpoly {

// ---------------------------------------------------------------- basics

IntPoly::IntPoly(std::vector<Int> coeffs) : c(std::move(coeffs)) { trim(); }

IntPoly IntPoly::constant(const Int& a) { return IntPoly({a}); }

IntPoly IntPoly::monomial(const Int& a, int k) {
    std::vector<Int> v(k + 1, Int(0));
    v[k] = a;
    return IntPoly(std::move(v));
}

IntPoly IntPoly::from_descending(const std::vector<long>& coeffs) {
    std::vector<Int> v;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v.emplace_back(*it);
    return IntPoly(std::move(v));
}

void IntPoly::trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

RatPoly::RatPoly(std::vector<Rat> coeffs) : c(std::move(coeffs)) {
    for (auto& x : c) x.canonicalize();
    trim();
}

RatPoly::RatPoly(const IntPoly& p) {
    for (const auto& x : p.c) c.emplace_back(x);
}

void RatPoly::trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<Int> v(std::max(a.c.size(), b.c.size()), Int(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) v[i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) v[i] += b.c[i];
    return IntPoly(std::move(v));
}

IntPoly operator-(const IntPoly& a) {
    IntPoly r = a;
    for (auto& x : r.c) x = -x;
    return r;
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Int> v(a.c.size() + b.c.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.c.size(); ++i)
        if (a.c[i] != 0)
            for (std::size_t j = 0; j < b.c.size(); ++j) v[i + j] += a.c[i] * b.c[j];
    return IntPoly(std::move(v));
}

IntPoly operator*(const Int& s, const IntPoly& a) {
    IntPoly r = a;
    for (auto& x : r.c) x *= s;
    r.trim();
    return r;
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
    std::vector<Rat> v(std::max(a.c.size(), b.c.size()), Rat(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) v[i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) v[i] += b.c[i];
    return RatPoly(std::move(v));
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) { return a + Rat(-1) * b; }

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rat> v(a.c.size() + b.c.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j) v[i + j] += a.c[i] * b.c[j];
    return RatPoly(std::move(v));
}

RatPoly operator*(const Rat& s, const RatPoly& a) {
    RatPoly r = a;
    for (auto& x : r.c) x *= s;
    r.trim();
    return r;
}

IntPoly derivative(const IntPoly& p) {
    if (p.c.size() <= 1) return {};
    std::vector<Int> v(p.c.size() - 1);
    for (std::size_t i = 1; i < p.c.size(); ++i) v[i - 1] = p.c[i] * static_cast<unsigned long>(i);
    return IntPoly(std::move(v));
}

RatPoly derivative(const RatPoly& p) {
    if (p.c.size() <= 1) return {};
    std::vector<Rat> v(p.c.size() - 1);
    for (std::size_t i = 1; i < p.c.size(); ++i) v[i - 1] = p.c[i] * static_cast<unsigned long>(i);
    return RatPoly(std::move(v));
}

Int content(const IntPoly& p) {
    Int g = 0;
    for (const auto& x : p.c) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly primitive_part(const IntPoly& p) {
    if (p.is_zero()) return {};
    Int g = content(p);
    if (p.lead() < 0) g = -g;
    IntPoly r = p;
    for (auto& x : r.c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return r;
}

IntPoly clear_denominators(const RatPoly& p) {
    Int l = 1;
    for (const auto& x : p.c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    std::vector<Int> v;
    for (const auto& x : p.c) v.emplace_back(x.get_num() * (l / x.get_den()));
    IntPoly r(std::move(v));
    Int g = content(r);
    if (g > 1)
        for (auto& x : r.c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return r;
}

IntPoly power(const IntPoly& p, int e) {
    IntPoly r = IntPoly::constant(1), b = p;
    while (e > 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

IntPoly reversed(const IntPoly& p, int d) {
    if (p.degree() > d) throw PolyError("reversal degree below polynomial degree");
    std::vector<Int> v(d + 1, Int(0));
    for (std::size_t i = 0; i < p.c.size(); ++i) v[d - i] = p.c[i];
    return IntPoly(std::move(v));
}

IntPoly substitute_power(const IntPoly& p, int L) {
    if (p.is_zero()) return {};
    std::vector<Int> v(p.degree() * L + 1, Int(0));
    for (std::size_t i = 0; i < p.c.size(); ++i) v[i * L] = p.c[i];
    return IntPoly(std::move(v));
}

Rat eval(const IntPoly& p, const Rat& x) {
    Rat r = 0;
    for (auto it = p.c.rbegin(); it != p.c.rend(); ++it) r = r * x + *it;
    return r;
}

Rat eval(const RatPoly& p, const Rat& x) {
    Rat r = 0;
    for (auto it = p.c.rbegin(); it != p.c.rend(); ++it) r = r * x + *it;
    return r;
}

Int eval(const IntPoly& p, const Int& x) {
    Int r = 0;
    for (auto it = p.c.rbegin(); it != p.c.rend(); ++it) r = r * x + *it;
    return r;
}

int sign_at(const IntPoly& p, const Rat& x) {
    // homogeneous Horner: den^d p(num/den) stays integral and keeps the sign
    if (p.is_zero()) return 0;
    const Int& num = x.get_num();
    const Int& den = x.get_den();
    Int r = p.c.back(), pw = 1;
    for (int i = p.degree() - 1; i >= 0; --i) {
        pw *= den;
        r *= num;
        if (p.c[i] != 0) r += p.c[i] * pw;
    }
    return sgn(r);
}

std::pair<RatPoly, RatPoly> divrem(const RatPoly& a, const RatPoly& b) {
    if (b.is_zero()) throw PolyError("division by zero polynomial");
    if (a.degree() < b.degree()) return {RatPoly{}, a};
    std::vector<Rat> r = a.c, q(a.degree() - b.degree() + 1, Rat(0));
    for (int i = a.degree(); i >= b.degree(); --i) {
        if (r[i] == 0) continue;
        Rat f = r[i] / b.lead();
        q[i - b.degree()] = f;
        for (int j = 0; j <= b.degree(); ++j) r[i - b.degree() + j] -= f * b.c[j];
    }
    return {RatPoly(std::move(q)), RatPoly(std::move(r))};
}

RatPoly exact_quotient(const IntPoly& a, const IntPoly& b) {
    auto [q, r] = divrem(RatPoly(a), RatPoly(b));
    if (!r.is_zero()) throw PolyError("inexact polynomial division");
    return q;
}

bool divides(const IntPoly& b, const IntPoly& a) {
    if (b.is_zero()) return a.is_zero();
    return divrem(RatPoly(a), RatPoly(b)).second.is_zero();
}

namespace {

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
    IntPoly r = a;
    const Int& l = b.lead();
    int e = a.degree() - b.degree() + 1;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int shift = r.degree() - b.degree();
        Int s = r.lead();
        for (auto& x : r.c) x *= l;
        for (int j = 0; j <= b.degree(); ++j) r.c[shift + j] -= s * b.c[j];
        r.trim();
        --e;
    }
    if (e > 0) {
        Int f;
        mpz_pow_ui(f.get_mpz_t(), l.get_mpz_t(), e);
        r = f * r;
    }
    return r;
}

Int ipow(const Int& b, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

} // namespace

IntPoly gcd(const IntPoly& a0, const IntPoly& b0) {
    if (a0.is_zero()) return primitive_part(b0);
    if (b0.is_zero()) return primitive_part(a0);
    IntPoly a = primitive_part(a0), b = primitive_part(b0);
    if (a.degree() < b.degree()) std::swap(a, b);
    Int g = 1, h = 1;
    while (true) {
        int delta = a.degree() - b.degree();
        IntPoly r = pseudo_remainder(a, b);
        if (r.is_zero()) break;
        if (r.degree() == 0) return IntPoly::constant(1);
        a = b;
        Int div = g * ipow(h, delta);
        for (auto& x : r.c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), div.get_mpz_t());
        b = r;
        g = a.lead();
        if (delta == 0) {
            // h stays
        } else {
            Int num = ipow(g, delta), den = ipow(h, delta - 1);
            mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        }
    }
    return primitive_part(b);
}

std::vector<IntPoly> squarefree_factors(const IntPoly& p) {
    if (p.is_zero()) throw PolyError("squarefree decomposition of zero polynomial");
    std::vector<IntPoly> out;
    IntPoly a = primitive_part(p);
    if (a.degree() == 0) return out;
    // Yun's algorithm over Q; every factor is kept primitive over Z
    auto qgcd = [](const RatPoly& x, const RatPoly& y) {
        if (y.is_zero()) return RatPoly(primitive_part(clear_denominators(x)));
        if (x.is_zero()) return RatPoly(primitive_part(clear_denominators(y)));
        return RatPoly(gcd(clear_denominators(x), clear_denominators(y)));
    };
    auto qdiv = [](const RatPoly& x, const RatPoly& y) {
        auto [q, r] = divrem(x, y);
        if (!r.is_zero()) throw PolyError("inexact division in squarefree decomposition");
        return q;
    };
    RatPoly A(a), dA = derivative(A);
    RatPoly b = qgcd(A, dA);
    RatPoly c = qdiv(A, b);
    RatPoly d = qdiv(dA, b) - derivative(c);
    while (c.degree() > 0) {
        RatPoly f = qgcd(c, d);
        out.push_back(clear_denominators(f));
        c = qdiv(c, f);
        d = qdiv(d, f) - derivative(c);
    }
    while (!out.empty() && out.back().degree() == 0) out.pop_back();
    return out;
}

IntPoly squarefree_part(const IntPoly& p) {
    if (p.is_zero()) throw PolyError("squarefree part of zero polynomial");
    IntPoly a = primitive_part(p);
    if (a.degree() <= 0) return a;
    return clear_denominators(exact_quotient(a, gcd(a, derivative(a))));
}

namespace {

template <class C>
std::string poly_string(const std::vector<C>& c, const std::string& var) {
    if (c.empty()) return "0";
    std::string out;
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
        if (c[i] == 0) continue;
        C a = c[i];
        bool neg = a < 0;
        if (neg) a = -a;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        bool unit = (a == 1);
        if (!unit || i == 0) out += a.get_str();
        if (i > 0) {
            if (!unit) out += "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

} // namespace

std::string to_string(const IntPoly& p, const std::string& var) { return poly_string(p.c, var); }
std::string to_string(const RatPoly& p, const std::string& var) { return poly_string(p.c, var); }

std::vector<std::string> descending_coefficients(const IntPoly& p) {
    std::vector<std::string> out;
    for (auto it = p.c.rbegin(); it != p.c.rend(); ++it) out.push_back(it->get_str());
    return out;
}

// ---------------------------------------------------------------- numbers

Rat default_width() {
    Int d;
    mpz_ui_pow_ui(d.get_mpz_t(), 10, 12);
    return Rat(Int(1), d);
}

Rat numeric_equality_floor() {
    Int d;
    mpz_ui_pow_ui(d.get_mpz_t(), 10, 30);
    return Rat(Int(1), d);
}

Rat rat_from_decimal(const std::string& raw) {
    std::string s;
    for (char ch : raw)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw PolyError("empty number");
    if (s.find('/') != std::string::npos) {
        Rat r;
        if (r.set_str(s, 10) != 0 || r.get_den() == 0) throw PolyError("malformed rational '" + raw + "'");
        r.canonicalize();
        return r;
    }
    long exp10 = 0;
    auto epos = s.find_first_of("eE");
    if (epos != std::string::npos) {
        try {
            std::size_t used = 0;
            exp10 = std::stol(s.substr(epos + 1), &used);
            if (used != s.size() - epos - 1) throw PolyError("bad exponent");
        } catch (const std::exception&) {
            throw PolyError("malformed number '" + raw + "'");
        }
        s = s.substr(0, epos);
    }
    bool neg = false;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        neg = s[0] == '-';
        s = s.substr(1);
    }
    std::string digits;
    long frac = 0;
    bool dot = false;
    for (char ch : s) {
        if (ch == '.') {
            if (dot) throw PolyError("malformed number '" + raw + "'");
            dot = true;
        } else if (std::isdigit(static_cast<unsigned char>(ch))) {
            digits.push_back(ch);
            if (dot) ++frac;
        } else {
            throw PolyError("malformed number '" + raw + "'");
        }
    }
    if (digits.empty()) throw PolyError("malformed number '" + raw + "'");
    Int num(digits, 10);
    long e = exp10 - frac;
    Int p10;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(e)));
    Rat r = e >= 0 ? Rat(num * p10) : Rat(num, p10);
    r.canonicalize();
    return neg ? Rat(-r) : r;
}

std::string decimal_string(const Rat& x, int digits) {
    Int scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    Rat y = abs(x) * scale;
    Int q;
    // round half up
    Rat shifted = y + Rat(1, 2);
    mpz_fdiv_q(q.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
    std::string s = q.get_str();
    if (static_cast<int>(s.size()) <= digits) s.insert(0, digits + 1 - s.size(), '0');
    std::string out = s.substr(0, s.size() - digits);
    if (digits > 0) out += "." + s.substr(s.size() - digits);
    if (x < 0 && q != 0) out.insert(0, "-");
    return out;
}

// ---------------------------------------------------------------- Sturm

SturmSequence::SturmSequence(const IntPoly& f) {
    if (f.is_zero()) throw PolyError("Sturm sequence of zero polynomial");
    seq_.push_back(primitive_part(f));
    if (f.degree() == 0) return;
    seq_.push_back(primitive_part(derivative(seq_[0])));
    while (seq_.back().degree() > 0) {
        const IntPoly& a = seq_[seq_.size() - 2];
        const IntPoly& b = seq_.back();
        IntPoly r = pseudo_remainder(a, b);
        // prem = lc(b)^(da-db+1) * rem; fix the sign so r is a positive multiple of rem
        int e = a.degree() - b.degree() + 1;
        if (b.lead() < 0 && (e % 2 == 1)) r = -r;
        if (r.is_zero()) break;
        r = -r;
        Int g = content(r);
        for (auto& x : r.c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
        seq_.push_back(r);
    }
}

int SturmSequence::variations_at(const Rat& x) const {
    int v = 0, last = 0;
    for (const auto& p : seq_) {
        int s = sign_at(p, x);
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

int SturmSequence::variations_at_plus_infinity() const {
    int v = 0, last = 0;
    for (const auto& p : seq_) {
        int s = sgn(p.lead());
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

int SturmSequence::variations_at_minus_infinity() const {
    int v = 0, last = 0;
    for (const auto& p : seq_) {
        int s = sgn(p.lead()) * ((p.degree() % 2) ? -1 : 1);
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

int SturmSequence::count(const Rat& a, const Rat& b) const {
    if (b <= a) return 0;
    return variations_at(a) - variations_at(b);
}

int SturmSequence::count_all() const { return variations_at_minus_infinity() - variations_at_plus_infinity(); }

int real_root_count(const IntPoly& p, const Rat& a, const Rat& b) {
    if (p.is_zero()) throw PolyError("root count of zero polynomial");
    if (p.degree() == 0) return 0;
    return SturmSequence(squarefree_part(p)).count(a, b);
}

int real_root_count(const RatPoly& p, const Rat& a, const Rat& b) {
    if (p.is_zero()) throw PolyError("root count of zero polynomial");
    return real_root_count(clear_denominators(p), a, b);
}

// ---------------------------------------------------------------- isolation

Rat root_bound(const IntPoly& p) {
    // Cauchy: |z| < 1 + max |a_i / a_d|
    Rat m = 0;
    for (int i = 0; i < p.degree(); ++i) {
        Rat q(abs(p.c[i]), abs(p.lead()));
        if (q > m) m = q;
    }
    Rat b = 1 + m;
    Rat t = 1;
    while (t <= b) t *= 2;
    return t;
}

namespace {

// Given (lo, hi] holding exactly one root of squarefree f, move to a closed
// interval with nonzero endpoint signs, or an exact hit.
RootEnclosure normalize(const IntPoly& f, const SturmSequence& st, Rat lo, Rat hi) {
    if (sign_at(f, hi) == 0) return {hi, hi, 1};
    while (sign_at(f, lo) == 0) {
        Rat m = (lo + hi) / 2;
        if (sign_at(f, m) == 0) return {m, m, 1};
        if (st.count(m, hi) == 1)
            lo = m;
        else
            hi = m;
    }
    return {lo, hi, 1};
}

void isolate_squarefree(const IntPoly& f, const SturmSequence& st, Rat lo, Rat hi, int cnt,
                        std::vector<RootEnclosure>& out) {
    if (cnt == 0) return;
    if (cnt == 1) {
        out.push_back(normalize(f, st, lo, hi));
        return;
    }
    Rat m = (lo + hi) / 2;
    int left = st.count(lo, m);
    isolate_squarefree(f, st, lo, m, left, out);
    isolate_squarefree(f, st, m, hi, cnt - left, out);
}

int multiplicity_of(const std::vector<IntPoly>& factors, const RootEnclosure& r) {
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const IntPoly& f = factors[i];
        if (f.degree() <= 0) continue;
        if (r.exact()) {
            if (sign_at(f, r.lo) == 0) return static_cast<int>(i) + 1;
        } else if (sign_at(f, r.hi) == 0 || SturmSequence(f).count(r.lo, r.hi) > 0) {
            return static_cast<int>(i) + 1;
        }
    }
    throw PolyError("root not found among squarefree factors");
}

} // namespace

void refine(const IntPoly& f, RootEnclosure& r, const Rat& w) {
    if (r.exact()) return;
    int slo = sign_at(f, r.lo);
    if (slo == 0) {
        r.hi = r.lo;
        return;
    }
    if (sign_at(f, r.hi) == 0) {
        r.lo = r.hi;
        return;
    }
    while (r.hi - r.lo > w) {
        Rat m = (r.lo + r.hi) / 2;
        int s = sign_at(f, m);
        if (s == 0) {
            r.lo = r.hi = m;
            return;
        }
        if (s == slo)
            r.lo = m;
        else
            r.hi = m;
    }
}

std::vector<RootEnclosure> isolate_real_roots(const IntPoly& p, const Rat& width) {
    if (p.is_zero()) throw PolyError("root isolation of zero polynomial");
    if (width <= 0) throw PolyError("width must be positive");
    std::vector<RootEnclosure> out;
    if (p.degree() == 0) return out;
    IntPoly f = squarefree_part(p);
    SturmSequence st(f);
    Rat b = root_bound(f);
    isolate_squarefree(f, st, -b, b, st.count(-b, b), out);
    auto factors = squarefree_factors(p);
    for (auto& r : out) {
        refine(f, r, width);
        r.multiplicity = multiplicity_of(factors, r);
    }
    std::sort(out.begin(), out.end(), [](const RootEnclosure& x, const RootEnclosure& y) { return x.lo < y.lo; });
    return out;
}

std::vector<RootEnclosure> isolate_real_roots(const RatPoly& p, const Rat& width) {
    if (p.is_zero()) throw PolyError("root isolation of zero polynomial");
    return isolate_real_roots(clear_denominators(p), width);
}

RootEnclosure dominant_real_root(const IntPoly& p, const Rat& width) {
    if (p.is_zero()) throw PolyError("root isolation of zero polynomial");
    if (p.degree() == 0) throw PolyError("polynomial has no real root");
    IntPoly f = squarefree_part(p);
    SturmSequence st(f);
    Rat hi = root_bound(f), lo = -hi;
    int cnt = st.count(lo, hi);
    if (cnt == 0) throw PolyError("polynomial has no real root");
    while (cnt > 1) {
        Rat m = (lo + hi) / 2;
        int right = st.count(m, hi);
        if (right >= 1) {
            lo = m;
            cnt = right;
        } else {
            hi = m;
        }
    }
    RootEnclosure r = normalize(f, st, lo, hi);
    refine(f, r, width);
    r.multiplicity = f.degree() == p.degree() ? 1 : multiplicity_of(squarefree_factors(p), r);
    return r;
}

RootEnclosure dominant_real_root(const RatPoly& p, const Rat& width) {
    if (p.is_zero()) throw PolyError("root isolation of zero polynomial");
    return dominant_real_root(clear_denominators(p), width);
}

int count_real_roots_with_multiplicity(const IntPoly& p) {
    if (p.is_zero()) throw PolyError("root count of zero polynomial");
    int total = 0;
    auto factors = squarefree_factors(p);
    for (std::size_t i = 0; i < factors.size(); ++i)
        if (factors[i].degree() > 0) total += static_cast<int>(i + 1) * SturmSequence(factors[i]).count_all();
    return total;
}

int count_nonreal_roots(const IntPoly& p) {
    if (p.is_zero()) throw PolyError("root count of zero polynomial");
    return p.degree() - count_real_roots_with_multiplicity(p);
}

// ---------------------------------------------------------------- comparison

std::string to_string(Order o) {
    switch (o) {
    case Order::less: return "less";
    case Order::equal: return "equal";
    case Order::greater: return "greater";
    case Order::numerically_equal: return "numerically_equal";
    }
    return "?";
}

namespace {

bool has_root_in(const IntPoly& g, const Rat& lo, const Rat& hi) {
    if (g.degree() <= 0) return false;
    if (sign_at(g, lo) == 0) return true;
    return SturmSequence(squarefree_part(g)).count(lo, hi) > 0;
}

} // namespace

Order compare_roots(const IntPoly& p, const RootEnclosure& a0, const IntPoly& q, const RootEnclosure& b0) {
    IntPoly fp = squarefree_part(p), fq = squarefree_part(q);
    RootEnclosure a = a0, b = b0;
    const Rat floor = numeric_equality_floor();
    while (true) {
        if (a.hi < b.lo) return Order::less;
        if (b.hi < a.lo) return Order::greater;
        if (a.exact() && b.exact()) return Order::equal;
        if (a.width() < floor && b.width() < floor) break;
        Rat w = std::max(a.width(), b.width()) / 4;
        if (w < floor / 2) w = floor / 2;
        refine(fp, a, w);
        refine(fq, b, w);
    }
    Rat lo = std::max(a.lo, b.lo), hi = std::min(a.hi, b.hi);
    if (has_root_in(gcd(fp, fq), lo, hi)) return Order::equal;
    return Order::numerically_equal;
}

Order compare_root_rational(const IntPoly& p, const RootEnclosure& a0, const Rat& r) {
    if (a0.contains(r) && sign_at(p, r) == 0) return Order::equal;
    IntPoly f = squarefree_part(p);
    RootEnclosure a = a0;
    while (a.contains(r)) {
        if (a.exact()) return Order::equal;
        refine(f, a, a.width() / 4);
    }
    return a.hi < r ? Order::less : Order::greater;
}

int sign_at_root(const IntPoly& q, const IntPoly& p, const RootEnclosure& r0) {
    if (q.is_zero()) return 0;
    if (q.degree() == 0) return sgn(q.lead());
    IntPoly f = squarefree_part(p);
    if (r0.exact()) return sign_at(q, r0.lo);
    if (has_root_in(gcd(f, squarefree_part(q)), r0.lo, r0.hi)) return 0;
    RootEnclosure r = r0;
    SturmSequence sq(squarefree_part(q));
    while (sign_at(q, r.lo) == 0 || sq.count(r.lo, r.hi) > 0) {
        refine(f, r, r.width() / 4);
        if (r.exact()) return sign_at(q, r.lo);
    }
    return sign_at(q, r.lo);
}

// ---------------------------------------------------------------- surds

double Surd::approx() const { return (a.get_d() + std::sqrt(b.get_d())) / c.get_d(); }

bool Surd::is_rational() const {
    if (b == 0) return true;
    return mpz_perfect_square_p(b.get_num_mpz_t()) && mpz_perfect_square_p(b.get_den_mpz_t());
}

Rat Surd::rational_value() const {
    Int sn, sd;
    mpz_sqrt(sn.get_mpz_t(), b.get_num_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), b.get_den_mpz_t());
    Rat r = (a + Rat(sn, sd)) / c;
    r.canonicalize();
    return r;
}

IntPoly Surd::quadratic() const {
    RatPoly q({a * a - b, -2 * a * c, c * c});
    return clear_denominators(q);
}

std::string Surd::to_string() const {
    return "(" + a.get_str() + " + sqrt(" + b.get_str() + "))/" + c.get_str();
}

int compare(const Surd& s, const Rat& r) {
    // sqrt(b) vs rc - a
    Rat t = r * s.c - s.a;
    if (t < 0) return 1;
    Rat t2 = t * t;
    return s.b > t2 ? 1 : (s.b < t2 ? -1 : 0);
}

int compare(const Surd& s, const Surd& t) {
    if (s.is_rational()) return -compare(t, s.rational_value());
    if (t.is_rational()) return compare(s, t.rational_value());
    IntPoly qs = s.quadratic(), qt = t.quadratic();
    RootEnclosure es = enclose(s, Rat(1, 1 << 20)), et = enclose(t, Rat(1, 1 << 20));
    Order o = compare_roots(qs, es, qt, et);
    if (o == Order::less) return -1;
    if (o == Order::greater) return 1;
    return 0;
}

bool is_root(const Surd& s, const IntPoly& p) {
    if (s.is_rational()) return sign_at(p, s.rational_value()) == 0;
    // the quadratic is irreducible, so s is a root iff it divides p
    return divides(s.quadratic(), p);
}

bool equals_root(const Surd& s, const IntPoly& p, const RootEnclosure& r) {
    if (!is_root(s, p)) return false;
    // r isolates a single root of p; s is a root of p, so equality iff s lies in r
    if (s.is_rational()) return r.contains(s.rational_value());
    return compare(s, r.lo) >= 0 && compare(s, r.hi) <= 0;
}

RootEnclosure enclose(const Surd& s, const Rat& w) {
    if (s.is_rational()) {
        Rat v = s.rational_value();
        return {v, v, 1};
    }
    // bracket sqrt(b) by bisection, then map through (a + .)/c
    Rat lo = 0, hi = 1;
    while (hi * hi < s.b) hi *= 2;
    Rat tw = w * s.c;
    while (hi - lo > tw) {
        Rat m = (lo + hi) / 2;
        if (m * m < s.b)
            lo = m;
        else
            hi = m;
    }
    return {(s.a + lo) / s.c, (s.a + hi) / s.c, 1};
}

} // namespace pcpoly
