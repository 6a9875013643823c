#ifndef HASSE_QUADRATIC_HPP
#define HASSE_QUADRATIC_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hasse/arith.hpp"

namespace hasse {

/// Throws UsageError unless d is a squarefree integer > 1.
void require_real_field(const Int &d);

/// An element (x + y*sqrt(d)) / den of the maximal order O(d).
///
/// den is 1 or 2; den == 2 requires d = 1 (mod 4) and x, y odd. Construction
/// canonicalizes (x, y, 2) with both coordinates even to (x/2, y/2, 1), and
/// rejects anything that is not an algebraic integer. d itself is only
/// checked to be > 1 here; squarefreeness is checked at the entry points
/// (require_real_field).
class QuadElem {
public:
    QuadElem(Int d, Int x, Int y, unsigned den = 1);

    /// A + B*omega with omega = sqrt(d) or (1 + sqrt(d))/2.
    static QuadElem from_omega(const Int &d, const Int &a, const Int &b);

    const Int &d() const { return d_; }
    const Int &x() const { return x_; }
    const Int &y() const { return y_; }
    unsigned den() const { return den_; }

    /// Coordinates (A, B) in the integral basis {1, omega}.
    std::pair<Int, Int> omega_coords() const;

    bool is_zero() const { return x_ == 0 && y_ == 0; }
    std::string to_string() const;

    bool operator==(const QuadElem &) const = default;

private:
    Int d_, x_, y_;
    unsigned den_ = 1;
};

QuadElem qmul(const QuadElem &u, const QuadElem &v);
QuadElem qadd(const QuadElem &u, const QuadElem &v);
QuadElem qneg(const QuadElem &u);
QuadElem qconj(const QuadElem &u);
Int qnorm(const QuadElem &u);
Int qtrace(const QuadElem &u);
QuadElem qpow(const QuadElem &u, unsigned long k);
QuadElem qscale(const QuadElem &u, const Int &m);

/// u / m if it lies in O(d).
std::optional<QuadElem> divide_exact(const QuadElem &u, const Int &m);

struct FundUnit {
    QuadElem elem;
    int epsilon = 1; // norm of elem
};

/// Continued fraction of omega = (P0 + sqrt d)/Q0, with the period found by
/// the first repetition of the state (P, Q) after the leading quotient.
struct CfExpansion {
    Int P0, Q0, d;
    std::vector<Int> quotients; // a_0, a_1, ..., a_period
    std::size_t period = 0;
};

CfExpansion expand_cf(const Int &d);

/// Unit p - q*conj(omega) built from the convergent p/q = [a_0; ..., a_{period-1}].
QuadElem unit_from_expansion(const CfExpansion &cf);

/// Smallest unit > 1 of O(d) with positive coordinates.
FundUnit fundamental_unit(const Int &d);

/// (x * den^-1 mod M, y * den^-1 mod M) for odd M.
std::pair<Int, Int> half_residue(const QuadElem &u, const Int &modulus);

/// rho in O(d) with rho^3 == u, found from fixed-point scaled real
/// embeddings and verified by exact cubing.
std::optional<QuadElem> is_cube_in_order(const QuadElem &u);

/// Largest k with p^k | u in O(d), for every rational prime p.
Factorization rational_prime_content(const QuadElem &u);

/// Product of the distinct rational primes dividing u but not d.
Int c_of(const QuadElem &u);
Int odd_part(const Int &c);

} // namespace hasse

#endif
