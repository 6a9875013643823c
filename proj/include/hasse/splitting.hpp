#ifndef HASSE_SPLITTING_HPP
#define HASSE_SPLITTING_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "hasse/quadratic.hpp"

namespace hasse {

/// A prime p = x^2 + 3 d e^2 y^2.
struct RepresentedPrime {
    std::uint64_t p = 0, x = 0, y = 0;
    bool operator==(const RepresentedPrime &) const = default;
};

struct PrimeWitness {
    RepresentedPrime prime;
    std::uint64_t sqrt_d = 0; // sqrt_d^2 = d (mod p)
    std::uint64_t u_p = 0;    // image of u under sqrt(d) -> sqrt_d
    bool cubic = false;       // u_p^((p-1)/3) = 1 (mod p)
};

enum class VerdictKind { NonMember, LikelyMember };

struct Verdict {
    VerdictKind kind = VerdictKind::LikelyMember;
    std::optional<PrimeWitness> witness; // the failing prime for NonMember
    std::size_t trials = 0;              // witnesses examined
};

inline constexpr std::size_t kDefaultTrials = 50;
inline constexpr std::uint64_t kDefaultSearchBound = 10'000'000;

/// Primes p = x^2 + 3 d e^2 y^2 with y >= 1 and p not dividing 6d, in
/// increasing order. Throws DomainError when fewer than `count` exist below
/// `bound`.
std::vector<RepresentedPrime> find_represented_primes(const Int &d, const Int &e, std::size_t count,
                                                      std::uint64_t bound = kDefaultSearchBound);

/// Lazily enumerates the same primes, growing the search window on demand.
class RepresentedPrimeStream {
public:
    RepresentedPrimeStream(const Int &d, const Int &e, std::uint64_t bound);
    std::optional<RepresentedPrime> next();

private:
    void refill();

    std::uint64_t d_ = 0, step_ = 0; // step_ = 3 d e^2
    std::uint64_t bound_ = 0, window_ = 0, covered_ = 0;
    std::vector<RepresentedPrime> buffer_;
    std::size_t pos_ = 0;
};

/// (x + y sqrt_d) * den^-1 mod p.
std::uint64_t reduce_mod_p(const QuadElem &u, std::uint64_t p, std::uint64_t sqrt_d);

/// z^((p-1)/3) == 1 mod p; DomainError for z = 0.
bool is_cubic_residue(std::uint64_t z, std::uint64_t p);

/// Evaluates u at `p` (both square-root branches must agree on residuacity).
PrimeWitness evaluate_witness(const QuadElem &u, const RepresentedPrime &rp);

/// Tests cube-root membership of u in the ring class field M_e of
/// Z[e sqrt(-3d)] at `trials` witness primes, skipping p | 6 d N(u) den.
Verdict membership_test(const QuadElem &u, const Int &e, std::size_t trials = kDefaultTrials,
                        std::uint64_t bound = kDefaultSearchBound);

struct CrosscheckReport {
    Int d;
    bool in_M = false;        // congruence criterion
    Verdict verdict;          // residuacity at e = 1
    bool agree = false;
    bool inconclusive = false; // in_M false but every witness cubic
};

CrosscheckReport thm16_crosscheck(const Int &d, std::size_t trials = kDefaultTrials,
                                  std::uint64_t bound = kDefaultSearchBound);

} // namespace hasse

#endif
