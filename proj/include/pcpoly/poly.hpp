#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pcpoly {

using Int = mpz_class;
using Rat = mpq_class;

class PolyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Dense integer polynomial, ascending degree, trailing zeros trimmed.
struct IntPoly {
    std::vector<Int> c;

    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs);
    static IntPoly constant(const Int& a);
    static IntPoly monomial(const Int& a, int k);
    // Builds from the highest-degree coefficient down, e.g. {1,-3,1} = x^2-3x+1.
    static IntPoly from_descending(const std::vector<long>& coeffs);

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    const Int& lead() const { return c.back(); }
    Int coeff(int k) const { return (k >= 0 && k < static_cast<int>(c.size())) ? c[k] : Int(0); }
    void trim();

    bool operator==(const IntPoly& o) const { return c == o.c; }
    bool operator!=(const IntPoly& o) const { return c != o.c; }
};

struct RatPoly {
    std::vector<Rat> c;

    RatPoly() = default;
    explicit RatPoly(std::vector<Rat> coeffs);
    explicit RatPoly(const IntPoly& p);

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    const Rat& lead() const { return c.back(); }
    Rat coeff(int k) const { return (k >= 0 && k < static_cast<int>(c.size())) ? c[k] : Rat(0); }
    void trim();

    bool operator==(const RatPoly& o) const { return c == o.c; }
};

IntPoly operator+(const IntPoly& a, const IntPoly& b);
IntPoly operator-(const IntPoly& a, const IntPoly& b);
IntPoly operator-(const IntPoly& a);
IntPoly operator*(const IntPoly& a, const IntPoly& b);
IntPoly operator*(const Int& s, const IntPoly& a);
RatPoly operator+(const RatPoly& a, const RatPoly& b);
RatPoly operator-(const RatPoly& a, const RatPoly& b);
RatPoly operator*(const RatPoly& a, const RatPoly& b);
RatPoly operator*(const Rat& s, const RatPoly& a);

IntPoly derivative(const IntPoly& p);
RatPoly derivative(const RatPoly& p);
Int content(const IntPoly& p);
// Primitive part with positive leading coefficient.
IntPoly primitive_part(const IntPoly& p);
// Positive rational multiple with integer coprime coefficients.
IntPoly clear_denominators(const RatPoly& p);
IntPoly power(const IntPoly& p, int e);
// x^d p(1/x) for d >= deg p.
IntPoly reversed(const IntPoly& p, int d);
// p(x^L)
IntPoly substitute_power(const IntPoly& p, int L);

Rat eval(const IntPoly& p, const Rat& x);
Rat eval(const RatPoly& p, const Rat& x);
Int eval(const IntPoly& p, const Int& x);
int sign_at(const IntPoly& p, const Rat& x);

std::pair<RatPoly, RatPoly> divrem(const RatPoly& a, const RatPoly& b);
// True iff b divides a over Q; the quotient is returned scaled to be primitive-free
// (i.e. exact over Q, then cleared only if already integral).
bool divides(const IntPoly& b, const IntPoly& a);
// Exact quotient a / b over Q; throws if not exact.
RatPoly exact_quotient(const IntPoly& a, const IntPoly& b);

// Subresultant PRS gcd; primitive, positive leading coefficient.
IntPoly gcd(const IntPoly& a, const IntPoly& b);
// Yun's decomposition: result[i] has the roots of multiplicity i+1 (possibly constant).
std::vector<IntPoly> squarefree_factors(const IntPoly& p);
IntPoly squarefree_part(const IntPoly& p);

std::string to_string(const IntPoly& p, const std::string& var = "x");
std::string to_string(const RatPoly& p, const std::string& var = "x");
// Coefficients highest degree first, as decimal strings.
std::vector<std::string> descending_coefficients(const IntPoly& p);

// A closed rational interval holding exactly one distinct real root.
struct RootEnclosure {
    Rat lo, hi;
    int multiplicity = 1;

    bool exact() const { return lo == hi; }
    Rat width() const { return hi - lo; }
    Rat midpoint() const { return (lo + hi) / 2; }
    double approx() const { return midpoint().get_d(); }
    bool contains(const Rat& x) const { return lo <= x && x <= hi; }
};

Rat default_width();           // 10^-12
Rat numeric_equality_floor();  // 10^-30
Rat rat_from_decimal(const std::string& s);  // "1e-12", "0.25", "3/4"
std::string decimal_string(const Rat& x, int digits);

class SturmSequence {
public:
    explicit SturmSequence(const IntPoly& squarefree);
    int variations_at(const Rat& x) const;
    int variations_at_minus_infinity() const;
    int variations_at_plus_infinity() const;
    // Distinct roots in (a, b].
    int count(const Rat& a, const Rat& b) const;
    int count_all() const;

private:
    std::vector<IntPoly> seq_;
};

int real_root_count(const RatPoly& p, const Rat& a, const Rat& b);
int real_root_count(const IntPoly& p, const Rat& a, const Rat& b);

std::vector<RootEnclosure> isolate_real_roots(const IntPoly& p, const Rat& width = default_width());
std::vector<RootEnclosure> isolate_real_roots(const RatPoly& p, const Rat& width = default_width());
RootEnclosure dominant_real_root(const IntPoly& p, const Rat& width = default_width());
RootEnclosure dominant_real_root(const RatPoly& p, const Rat& width = default_width());
int count_nonreal_roots(const IntPoly& p);
int count_real_roots_with_multiplicity(const IntPoly& p);

// Power of two strictly above the modulus of every complex root.
Rat root_bound(const IntPoly& p);

// Shrinks r (a root of squarefree f) to width <= w.
void refine(const IntPoly& f, RootEnclosure& r, const Rat& w);

enum class Order { less, equal, greater, numerically_equal };
std::string to_string(Order o);

// Compares the root of p inside a with the root of q inside b.
Order compare_roots(const IntPoly& p, const RootEnclosure& a, const IntPoly& q, const RootEnclosure& b);
Order compare_root_rational(const IntPoly& p, const RootEnclosure& a, const Rat& r);
// Sign of q at the root of p isolated by r (0 if q vanishes there).
int sign_at_root(const IntPoly& q, const IntPoly& p, const RootEnclosure& r);

// The real number (a + sqrt(b)) / c with b >= 0, c > 0.
struct Surd {
    Rat a, b, c{1};

    double approx() const;
    bool is_rational() const;
    Rat rational_value() const;  // only if is_rational()
    // Monic-free quadratic c^2 x^2 - 2ac x + a^2 - b, primitive over Z.
    IntPoly quadratic() const;
    std::string to_string() const;
};

int compare(const Surd& s, const Rat& r);
int compare(const Surd& s, const Surd& t);
// Exactly: is s a root of p?
bool is_root(const Surd& s, const IntPoly& p);
// Exactly: does s equal the root of p isolated by r?
bool equals_root(const Surd& s, const IntPoly& p, const RootEnclosure& r);
// Rational sandwich of width <= w around s.
RootEnclosure enclose(const Surd& s, const Rat& w);

} // namespace pcpoly
