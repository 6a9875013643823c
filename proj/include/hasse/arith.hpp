#ifndef HASSE_ARITH_HPP
#define HASSE_ARITH_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

namespace hasse {

using Int = mpz_class;

/// Raised when a caller violates an operation's precondition (bad d,
/// mismatched fields, even modulus, ...). The CLI maps it to exit code 2.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when the input is well-formed but outside the mathematical
/// domain of the operation (non-cube norm, reducible polynomial, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

struct PrimePower {
    Int prime;
    unsigned exponent = 0;

    bool operator==(const PrimePower &) const = default;
};

/// sign * prod(prime^exponent), primes strictly increasing.
struct Factorization {
    int sign = 1;
    std::vector<PrimePower> factors;

    Int value() const;
    unsigned exponent_of(const Int &p) const;
    bool empty() const { return factors.empty(); }
};

// Primality rounds above 2^64 draw their bases from this seed. Set once at
// startup (CLI --seed / HASSE_SEED); readers see a consistent value.
void set_primality_seed(std::uint64_t seed);
std::uint64_t primality_seed();

bool is_prime_u64(std::uint64_t n);

/// Deterministic below 2^64 (witnesses 2..37); above, the fixed witnesses
/// plus 64 rounds with seeded random bases (error < 2^-128).
bool is_prime(const Int &n);

/// Trial division to 10^6, then Pollard rho (Brent cycle detection).
Factorization factorize(const Int &n);

/// Kronecker symbol (a/n) with (a/2) = 0, +1, -1 for a even, a = +-1 (8), a = +-3 (8).
int kronecker(const Int &a, const Int &n);

/// Tonelli-Shanks. Returns the smaller of the two roots, or nullopt for a
/// non-residue. p must be an odd prime.
std::optional<Int> sqrt_mod(const Int &a, const Int &p);

bool is_squarefree(const Int &n); // n != 0; sign ignored

// Small helpers shared by the other modules.
Int mod(const Int &a, const Int &m);           // result in [0, m)
Int inverse_mod(const Int &a, const Int &m);   // throws DomainError if not invertible
Int pow_mod(const Int &base, const Int &exp, const Int &m);
unsigned valuation(const Int &n, const Int &p); // n != 0
std::optional<Int> exact_sqrt(const Int &n);
std::optional<Int> exact_cube_root(const Int &n); // signed
Int floor_cbrt(const Int &n);                     // floor of the real cube root, any sign
std::size_t bit_length(const Int &n);

/// Primes below `limit` (sieve of Eratosthenes).
std::vector<std::uint32_t> primes_below(std::uint32_t limit);

} // namespace hasse

#endif
