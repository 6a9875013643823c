#ifndef HASSE_CUBIC_DISC_HPP
#define HASSE_CUBIC_DISC_HPP

#include <string>

#include "hasse/quadratic.hpp"

namespace hasse {

/// x^3 + p x + q.
struct CubicPoly {
    Int p, q;

    Int eval(const Int &x) const { return x * x * x + p * x + q; }
    std::string to_string() const;
    bool operator==(const CubicPoly &) const = default;
};

/// Minimal polynomial x^3 - 3 eps x - 2a of t = v + v', v^3 = a + b sqrt d.
CubicPoly min_poly_of_t(const FundUnit &fu);

/// -4 p^3 - 27 q^2.
Int poly_disc(const CubicPoly &f);

/// Integer root of f, if any (f is irreducible over Q iff there is none).
std::optional<Int> integer_root(const CubicPoly &f);

/// Replace (p, q) by (p / l^2, q / l^3) while some prime l allows it; the
/// stem field is unchanged.
CubicPoly normalize_cubic(const CubicPoly &f);

struct LocalIndex {
    Int prime;
    unsigned disc_valuation = 0;  // v_l(poly disc) of the normalized polynomial
    unsigned index_valuation = 0; // v_l([O_K : Z[theta]])
    unsigned field_valuation = 0; // v_l(D_K)
};

/// v_l of the field discriminant via the l-local rule: primes l >= 5 are
/// tamely ramified and decided from v_l(p), v_l(q), v_l(disc); l = 2, 3 are
/// resolved by enlarging Z[theta] with integral elements of (1/l) O until
/// none remain.
LocalIndex local_index(const CubicPoly &normalized, const Int &prime);

/// l-maximality of Z[theta] by Dedekind's criterion (independent of local_index).
bool dedekind_is_maximal(const CubicPoly &f, const Int &prime);

/// v_l([O_K : Z[theta]]) by exhaustive enlargement with integral elements
/// of (1/l) O; exponential in l, meant for small primes.
unsigned index_valuation_by_search(const CubicPoly &f, const Int &prime);

struct FieldDiscriminant {
    Int field_disc;
    Int index; // poly_disc(f) = field_disc * index^2
};

/// Discriminant of Q[x]/(f). DomainError if f is reducible.
FieldDiscriminant field_discriminant(const CubicPoly &f);

/// n for n = 1 (mod 4), else 4n. n must be squarefree.
Int quad_field_disc(const Int &n);

struct DiscReport {
    Int d;
    std::string theorem; // "1.1" .. "1.4"
    bool in_M = false;
    Int D_F;
    Int predicted;
    Int closed_form; // the explicit value -3d, -12d, -m, -4m, 9 D_F or 81 D_F
    CubicPoly poly;
    Int poly_disc;
    Int field_disc;
    Int index;
    bool pass = false;
};

DiscReport verify_disc_theorems(const Int &d);

} // namespace hasse

#endif
