#ifndef HASSE_IDEALS_HPP
#define HASSE_IDEALS_HPP

#include <string>
#include <vector>

#include "hasse/quadratic.hpp"

namespace hasse {

enum class PrimeKind { Split, Ramified, Inert };

const char *to_string(PrimeKind k);

/// A power of the prime ideal (p, omega - root) of O(d). Inert primes are
/// the ideal (p) itself and carry root 0. For a split p, `second` marks the
/// ideal with the larger of the two roots of omega's minimal polynomial mod p.
struct PrimeIdealPower {
    Int p;
    PrimeKind kind = PrimeKind::Split;
    Int root;
    unsigned exponent = 0;
    bool second = false;

    Int norm() const; // p or p^2, not raised to the exponent
    std::string to_string() const;
    bool operator==(const PrimeIdealPower &) const = default;
};

/// Roots of the minimal polynomial of omega modulo p, ascending and distinct.
std::vector<Int> omega_roots(const Int &d, const Int &p);

PrimeKind prime_kind(const Int &d, const Int &p);

/// Factorization of the principal ideal (u), ordered by (p, second).
std::vector<PrimeIdealPower> factor_principal(const QuadElem &u);

/// (u) = A^3 * q * Q with q squarefree and Q a product of split primes, one
/// above each prime of q.
struct Lemma71Decomposition {
    std::vector<PrimeIdealPower> cube_part; // exponents of A
    Int q = 1;
    std::vector<PrimeIdealPower> q_part;    // Q, exponents 1
};

/// DomainError unless u is in S_d.
Lemma71Decomposition lemma71_decompose(const QuadElem &u);

/// Multiplies the decomposition back out as ideal exponents, in the order
/// used by factor_principal.
std::vector<PrimeIdealPower> reassemble(const Lemma71Decomposition &dec, const Int &d);

} // namespace hasse

#endif
