#pragma once

#include "pcpoly/poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pcpoly {

// Expected PC-polynomial of G(n,p): coefficient of x^(n-k) is
// (-1)^k C(n,k) p^(k(k-1)/2).
struct RandomPC {
    int n = 0;
    Rat p;
    RatPoly poly;
};

RandomPC pc_random(int n, const Rat& p);
// Expected clique polynomial sum C(n,k) p^C(k,2) x^k.
RatPoly clique_random(int n, const Rat& p);

struct RandomBeta {
    RootEnclosure root;
    // printed radical closed form, evaluated in high precision (n <= 5)
    std::optional<mpf_class> closed_form;
};

RandomBeta beta_random(int n, const Rat& p, const Rat& width = default_width());
// Radical closed forms for n = 1..5 at precision `bits`.
mpf_class random_closed_form(int n, const Rat& p, unsigned bits = 512);

// r-th largest root of PC(G(n,p)); checks that every root is real and simple,
// beta_(i+1) < p beta_i, and the pairing beta_i beta_(n+1-i) = p^(n-1).
RootEnclosure random_root_ladder(int n, const Rat& p, int r, const Rat& width = default_width());

// P_t(x) = sum_i (-1)^i p^C(i,2) x^(t-i) / i!
RatPoly ladder_polynomial(int t, const Rat& p);
// r-th largest positive root of P_t: the limit of beta_r(G(n,p))/n.
RootEnclosure ladder_limit_roots(int r, const Rat& p, int t, const Rat& width = default_width());

struct Beta0 {
    RootEnclosure ladder;     // hull of x_(t-1), x_t
    RootEnclosure series;     // 1 / root of the alternating series F(-y)
    RootEnclosure value;      // intersection
};
Beta0 beta0_constant(const Rat& width = Rat(1, 1000000000), int t = 60);

// Printed coefficients of p^j in beta_r/n, r in {1, 2}.
struct SeriesCoeffs {
    int r = 1;
    std::vector<Rat> coeffs;
    Rat eval(const Rat& p) const;
};
SeriesCoeffs beta_series(int r);

// f_n(z) = sum_k C(n,k) z^C(k,2)
IntPoly f_n_polynomial(int n);
// Is f_(2m+1) divisible by z^m + 1?
bool f_n_divisible(int m);

// CSV rows "p,r,value" of ladder roots on a uniform p grid.
std::string ladder_csv(int rmax, int steps, int t);

} // namespace pcpoly
