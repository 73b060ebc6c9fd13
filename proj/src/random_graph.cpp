#include "pcpoly/random_graph.hpp"
#include "pcpoly/graph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace pcpoly {

namespace {

Int binom(long n, long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Rat rat_pow(const Rat& x, long e) {
    Rat r = 1;
    for (long i = 0; i < e; ++i) r *= x;
    return r;
}

Int factorial(long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

void check_p(const Rat& p) {
    if (p < 0 || p > 1) throw PolyError("edge probability must lie in [0, 1]");
}

std::vector<RootEnclosure> descending(std::vector<RootEnclosure> v) {
    std::sort(v.begin(), v.end(), [](const RootEnclosure& a, const RootEnclosure& b) { return a.lo > b.lo; });
    return v;
}

void require(bool ok, const char* what) {
    if (!ok) throw std::logic_error(std::string("random-graph structure violated: ") + what);
}

} // namespace

RandomPC pc_random(int n, const Rat& p) {
    if (n < 1) throw PolyError("n must be positive");
    check_p(p);
    std::vector<Rat> c(n + 1);
    for (int k = 0; k <= n; ++k) {
        Rat v = Rat(binom(n, k)) * rat_pow(p, static_cast<long>(k) * (k - 1) / 2);
        c[n - k] = (k & 1) ? Rat(-v) : v;
    }
    return {n, p, RatPoly(c)};
}

RatPoly clique_random(int n, const Rat& p) {
    check_p(p);
    std::vector<Rat> c(n + 1);
    for (int k = 0; k <= n; ++k) c[k] = Rat(binom(n, k)) * rat_pow(p, static_cast<long>(k) * (k - 1) / 2);
    return RatPoly(c);
}

mpf_class random_closed_form(int n, const Rat& p, unsigned bits) {
    check_p(p);
    mpf_class q(p, bits), one(1, bits), two(2, bits), five(5, bits);
    auto root = [&](const mpf_class& v) { return mpf_class(sqrt(v), bits); };
    switch (n) {
    case 1: return one;
    case 2: return one + root(one - q);
    case 3: return one + (one - q) / 2 + root(3 * (one - q) * (3 + q)) / 2;
    case 4: {
        mpf_class s = root(two) * root(two + q);
        return one + (one - q) * root((two + q) / 2) + root((one - q) * (4 + q + q * q + 2 * s) / 2);
    }
    case 5: {
        mpf_class w = root(five + 2 * q + q * q), r5 = root(five);
        mpf_class inner = 5 * (five + q + q * q + q * q * q) + (five - q * q) * r5 * w;
        return one + (one - q * q) / 4 + r5 * (one - q) * w / 4 + root(one - q) * root(inner) / (2 * root(two));
    }
    default: throw PolyError("closed forms exist for n <= 5 only");
    }
}

RandomBeta beta_random(int n, const Rat& p, const Rat& width) {
    RandomPC pc = pc_random(n, p);
    RandomBeta out;
    out.root = dominant_real_root(pc.poly, width);
    if (n <= 5) {
        mpf_class cf = random_closed_form(n, p);
        mpf_class lo(out.root.lo - width, 512), hi(out.root.hi + width, 512);
        require(cf >= lo && cf <= hi, "closed form agrees with the isolated root");
        out.closed_form = cf;
    }
    return out;
}

RootEnclosure random_root_ladder(int n, const Rat& p, int r, const Rat& width) {
    if (!(p > 0 && p < 1)) throw PolyError("the root ladder needs 0 < p < 1");
    if (r < 1 || r > n) throw PolyError("root index out of range");
    RandomPC pc = pc_random(n, p);
    IntPoly f = clear_denominators(pc.poly);
    auto roots = descending(isolate_real_roots(f, width));
    require(static_cast<int>(roots.size()) == n, "all roots real and simple");

    // beta_(i+1) < p beta_i
    for (int i = 0; i + 1 < n; ++i) {
        for (int it = 0; !(roots[i + 1].hi < p * roots[i].lo); ++it) {
            require(it < 200, "interlacing");
            refine(f, roots[i], roots[i].width() / 16);
            refine(f, roots[i + 1], roots[i + 1].width() / 16);
        }
    }
    // x^n PC(p^(n-1)/x) is a multiple of PC
    Rat s = rat_pow(p, n - 1);
    std::vector<Rat> mirrored(n + 1);
    for (int j = 0; j <= n; ++j) mirrored[n - j] = pc.poly.c[j] * rat_pow(s, j);
    RatPoly m(mirrored);
    Rat lambda = m.lead() / pc.poly.lead();
    require(m == lambda * pc.poly, "roots pair up with product p^(n-1)");
    if (n % 2 == 1) {
        Rat mid = rat_pow(p, (n - 1) / 2);
        require(eval(pc.poly, mid) == 0 && roots[(n - 1) / 2].contains(mid), "middle root p^((n-1)/2)");
    }
    for (int i = 0; i < n; ++i) {
        const RootEnclosure& a = roots[i];
        const RootEnclosure& b = roots[n - 1 - i];
        require(s / a.hi <= b.hi && b.lo <= s / a.lo, "paired enclosures");
    }
    return roots[r - 1];
}

RatPoly ladder_polynomial(int t, const Rat& p) {
    std::vector<Rat> c(t + 1);
    for (int i = 0; i <= t; ++i) {
        Rat v = rat_pow(p, static_cast<long>(i) * (i - 1) / 2) / Rat(factorial(i));
        c[t - i] = (i & 1) ? Rat(-v) : v;
    }
    return RatPoly(c);
}

RootEnclosure ladder_limit_roots(int r, const Rat& p, int t, const Rat& width) {
    if (!(p > 0 && p <= 1)) throw PolyError("the ladder needs 0 < p <= 1");
    if (r < 1 || t < 2 * r) throw PolyError("the ladder needs r >= 1 and t >= 2r");
    std::vector<RootEnclosure> pos;
    for (auto& e : isolate_real_roots(ladder_polynomial(t, p), width))
        if (e.lo > 0) pos.push_back(e);
    pos = descending(pos);
    if (static_cast<int>(pos.size()) < r) throw PolyError("P_t has fewer than r positive roots");
    return pos[r - 1];
}

namespace {

// Sign of F(-y) = sum (-y)^i / (i! 2^C(i,2)) for 0 < y <= 2, from partial
// sums and the alternating tail bound; 0 if undecided.
int sign_f_minus(const Rat& y) {
    Rat sum = 0, term = 1;  // term = y^i / (i! 2^C(i,2))
    for (int i = 0; i < 400; ++i) {
        sum += (i & 1) ? Rat(-term) : term;
        Rat next = term * y / (Rat(i + 1) * rat_pow(Rat(2), i));
        if (i >= 1 && abs(sum) > next) return sgn(sum);
        term = next;
    }
    return 0;
}

} // namespace

Beta0 beta0_constant(const Rat& width, int t) {
    if (width <= 0) throw PolyError("width must be positive");
    Beta0 out;
    RootEnclosure a = ladder_limit_roots(1, Rat(1, 2), t - 1, width / 4), b = ladder_limit_roots(1, Rat(1, 2), t, width / 4);
    out.ladder = {std::min(a.lo, b.lo), std::max(a.hi, b.hi), 1};

    Rat lo = 1, hi = 2;
    if (sign_f_minus(lo) <= 0 || sign_f_minus(hi) >= 0) throw PolyError("F(-y) does not change sign on [1, 2]");
    while (1 / lo - 1 / hi > width / 2) {
        Rat m = (lo + hi) / 2;
        int s = sign_f_minus(m);
        if (s == 0) throw PolyError("undecided sign of F(-y)");
        if (s > 0) lo = m;
        else hi = m;
    }
    out.series = {1 / hi, 1 / lo, 1};
    Rat ilo = std::max(out.ladder.lo, out.series.lo), ihi = std::min(out.ladder.hi, out.series.hi);
    if (ilo > ihi) throw PolyError("ladder and series enclosures of beta0 disagree");
    out.value = {ilo, ihi, 1};
    return out;
}

Rat SeriesCoeffs::eval(const Rat& p) const {
    Rat s = 0, pw = 1;
    for (auto& c : coeffs) {
        s += c * pw;
        pw *= p;
    }
    return s;
}

SeriesCoeffs beta_series(int r) {
    SeriesCoeffs s;
    s.r = r;
    if (r == 1) {
        s.coeffs = {Rat(1),          Rat(-1, 2),     Rat(-1, 4),      Rat(-1, 12),      Rat(-1, 16),
                    Rat(-1, 48),     Rat(-7, 288),   Rat(-1, 96),     Rat(-7, 768),     Rat(-49, 6912),
                    Rat(-113, 23040), Rat(-17, 4608), Rat(-293, 92160), Rat(-737, 276480), Rat(-3107, 1658880)};
    } else if (r == 2) {
        // p/2 (1 - p/6 - 5p^2/18 - 29p^3/216 - 85p^4/648 - 163p^5/3888 - 1387p^6/19440)
        const Rat inner[] = {Rat(1), Rat(-1, 6), Rat(-5, 18), Rat(-29, 216), Rat(-85, 648), Rat(-163, 3888), Rat(-1387, 19440)};
        s.coeffs.push_back(0);
        for (auto& c : inner) s.coeffs.push_back(c / 2);
    } else {
        throw PolyError("stored series exist for r = 1, 2");
    }
    return s;
}

IntPoly f_n_polynomial(int n) {
    if (n < 0) throw PolyError("n must be non-negative");
    std::vector<Int> c(static_cast<std::size_t>(n) * (n - 1) / 2 + 1, Int(0));
    for (int k = 0; k <= n; ++k) c[static_cast<std::size_t>(k) * (k - 1) / 2] += binom(n, k);
    return IntPoly(c);
}

bool f_n_divisible(int m) {
    IntPoly d = IntPoly::monomial(Int(1), m) + IntPoly::constant(Int(1));
    return divides(d, f_n_polynomial(2 * m + 1));
}

std::string ladder_csv(int rmax, int steps, int t) {
    std::ostringstream out;
    out << "p,r,value\n";
    for (int i = 1; i < steps; ++i) {
        Rat p(i, steps);
        p.canonicalize();
        for (int r = 1; r <= rmax; ++r) {
            try {
                RootEnclosure e = ladder_limit_roots(r, p, t, Rat(1, 1000000000));
                out << p.get_d() << "," << r << "," << decimal_string(e.midpoint(), 9) << "\n";
            } catch (const PolyError&) {
            }
        }
    }
    return out.str();
}

} // namespace pcpoly
