#include "hasse/arith.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <map>
#include <numeric>
#include <random>

namespace hasse {

namespace {

std::atomic<std::uint64_t> g_seed{0x4861737365ULL};

constexpr std::array<std::uint64_t, 12> kWitnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
constexpr std::uint32_t kTrialLimit = 1000000;

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m)
{
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1;
    }
    return r;
}

bool fits_u64(const Int &n)
{
    return sgn(n) >= 0 && mpz_sizeinbase(n.get_mpz_t(), 2) <= 64;
}

std::uint64_t to_u64(const Int &n)
{
    std::uint64_t lo = 0;
    mpz_export(&lo, nullptr, -1, sizeof lo, 0, 0, n.get_mpz_t());
    return lo;
}

Int from_u64(std::uint64_t v)
{
    Int r;
    mpz_import(r.get_mpz_t(), 1, -1, sizeof v, 0, 0, &v);
    return r;
}

bool mr_round(const Int &n, const Int &nm1, const Int &odd, unsigned twos, const Int &a)
{
    Int x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), odd.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == nm1) return true;
    for (unsigned i = 1; i < twos; ++i) {
        x = x * x % n;
        if (x == nm1) return true;
        if (x == 1) return false;
    }
    return false;
}

const std::vector<std::uint32_t> &small_primes()
{
    static const std::vector<std::uint32_t> table = primes_below(kTrialLimit);
    return table;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

// Brent's variant of Pollard rho on a composite n < 2^64.
std::uint64_t rho_u64(std::uint64_t n)
{
    if (n % 2 == 0) return 2;
    for (std::uint64_t c = 1;; ++c) {
        std::uint64_t y = 2, x = 2, g = 1, q = 1, ys = 2;
        const std::uint64_t m = 128;
        std::uint64_t r = 1;
        auto f = [&](std::uint64_t v) { return (mulmod(v, v, n) + c) % n; };
        do {
            x = y;
            for (std::uint64_t i = 0; i < r; ++i) y = f(y);
            std::uint64_t k = 0;
            do {
                ys = y;
                for (std::uint64_t i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    q = mulmod(q, x > y ? x - y : y - x, n);
                }
                g = gcd_u64(q, n);
                k += m;
            } while (k < r && g == 1);
            r <<= 1;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                g = gcd_u64(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

Int rho_big(const Int &n)
{
    if (mpz_even_p(n.get_mpz_t())) return 2;
    for (unsigned long c = 1;; ++c) {
        Int y = 2, x = 2, g = 1, q = 1, ys = 2, t;
        const unsigned long m = 128;
        unsigned long r = 1;
        auto f = [&](const Int &v) { return Int((v * v + c) % n); };
        do {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = f(y);
            unsigned long k = 0;
            do {
                ys = y;
                for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    t = abs(x - y);
                    q = q * t % n;
                }
                g = gcd(q, n);
                k += m;
            } while (k < r && g == 1);
            r <<= 1;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                g = gcd(Int(abs(x - ys)), n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void split_into(const Int &n, std::map<Int, unsigned> &out)
{
    if (n == 1) return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    if (auto r = exact_sqrt(n)) {
        split_into(*r, out);
        split_into(*r, out);
        return;
    }
    Int d = fits_u64(n) ? from_u64(rho_u64(to_u64(n))) : rho_big(n);
    split_into(d, out);
    split_into(Int(n / d), out);
}

} // namespace

Int Factorization::value() const
{
    Int v = sign;
    for (const auto &pp : factors) {
        Int t;
        mpz_pow_ui(t.get_mpz_t(), pp.prime.get_mpz_t(), pp.exponent);
        v *= t;
    }
    return v;
}

unsigned Factorization::exponent_of(const Int &p) const
{
    for (const auto &pp : factors)
        if (pp.prime == p) return pp.exponent;
    return 0;
}

void set_primality_seed(std::uint64_t seed) { g_seed.store(seed, std::memory_order_relaxed); }
std::uint64_t primality_seed() { return g_seed.load(std::memory_order_relaxed); }

std::vector<std::uint32_t> primes_below(std::uint32_t limit)
{
    std::vector<bool> composite(limit, false);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i < limit; ++i) {
        if (composite[i]) continue;
        out.push_back(i);
        for (std::uint64_t j = std::uint64_t(i) * i; j < limit; j += i) composite[j] = true;
    }
    return out;
}

bool is_prime_u64(std::uint64_t n)
{
    if (n < 2) return false;
    for (std::uint64_t p : kWitnesses) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    std::uint64_t odd = n - 1;
    unsigned twos = 0;
    while ((odd & 1) == 0) {
        odd >>= 1;
        ++twos;
    }
    for (std::uint64_t a : kWitnesses) {
        std::uint64_t x = powmod(a, odd, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned i = 1; i < twos; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

bool is_prime(const Int &n)
{
    if (sgn(n) < 0) return false;
    if (fits_u64(n)) return is_prime_u64(to_u64(n));
    for (std::uint64_t p : kWitnesses)
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
    Int nm1 = n - 1;
    Int odd = nm1;
    unsigned twos = 0;
    while (mpz_even_p(odd.get_mpz_t())) {
        odd >>= 1;
        ++twos;
    }
    for (std::uint64_t a : kWitnesses)
        if (!mr_round(n, nm1, odd, twos, Int(static_cast<unsigned long>(a)))) return false;

    // Bases depend only on (seed, n) so results are reproducible across threads.
    std::seed_seq seq{static_cast<std::uint32_t>(primality_seed()),
                      static_cast<std::uint32_t>(primality_seed() >> 32),
                      static_cast<std::uint32_t>(mpz_get_ui(n.get_mpz_t())),
                      static_cast<std::uint32_t>(mpz_sizeinbase(n.get_mpz_t(), 2))};
    std::mt19937_64 rng(seq);
    gmp_randclass draw(gmp_randinit_default);
    draw.seed(static_cast<unsigned long>(rng()));
    Int span = n - 3;
    for (int round = 0; round < 64; ++round) {
        Int a = draw.get_z_range(span) + 2;
        if (!mr_round(n, nm1, odd, twos, a)) return false;
    }
    return true;
}

Factorization factorize(const Int &n)
{
    if (n == 0) throw UsageError("factorize: n must be nonzero");
    Factorization out;
    out.sign = sgn(n) < 0 ? -1 : 1;
    Int rest = abs(n);
    for (std::uint32_t p : small_primes()) {
        if (mpz_cmp_ui(rest.get_mpz_t(), static_cast<unsigned long>(p) * p) < 0) break;
        if (!mpz_divisible_ui_p(rest.get_mpz_t(), p)) continue;
        unsigned e = 0;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
            ++e;
        }
        out.factors.push_back({Int(p), e});
    }
    std::map<Int, unsigned> large;
    split_into(rest, large);
    for (auto &[p, e] : large) out.factors.push_back({p, e});
    std::sort(out.factors.begin(), out.factors.end(),
              [](const PrimePower &a, const PrimePower &b) { return a.prime < b.prime; });
    return out;
}

int kronecker(const Int &a, const Int &n)
{
    if (a == 0 && n == 0) throw UsageError("kronecker: both arguments zero");
    return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t());
}

std::optional<Int> sqrt_mod(const Int &a, const Int &p)
{
    if (p <= 2 || mpz_even_p(p.get_mpz_t())) throw UsageError("sqrt_mod: p must be an odd prime");
    Int x = mod(a, p);
    if (x == 0) return Int(0);
    if (mpz_legendre(x.get_mpz_t(), p.get_mpz_t()) != 1) return std::nullopt;

    // p - 1 = q * 2^s
    Int q = p - 1;
    unsigned s = 0;
    while (mpz_even_p(q.get_mpz_t())) {
        q >>= 1;
        ++s;
    }
    Int z = 2;
    while (mpz_legendre(z.get_mpz_t(), p.get_mpz_t()) != -1) ++z;

    Int c = pow_mod(z, q, p);
    Int r = pow_mod(x, Int((q + 1) / 2), p);
    Int t = pow_mod(x, q, p);
    unsigned m = s;
    while (t != 1) {
        unsigned i = 0;
        Int t2 = t;
        while (t2 != 1) {
            t2 = t2 * t2 % p;
            ++i;
        }
        Int b = c;
        for (unsigned j = 0; j + i + 1 < m; ++j) b = b * b % p;
        r = r * b % p;
        c = b * b % p;
        t = t * c % p;
        m = i;
    }
    Int other = p - r;
    return r < other ? r : other;
}

bool is_squarefree(const Int &n)
{
    if (n == 0) throw UsageError("is_squarefree: n must be nonzero");
    for (const auto &pp : factorize(n).factors)
        if (pp.exponent > 1) return false;
    return true;
}

Int mod(const Int &a, const Int &m)
{
    Int r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

Int inverse_mod(const Int &a, const Int &m)
{
    Int r;
    if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()))
        throw DomainError("inverse_mod: element not invertible");
    return r;
}

Int pow_mod(const Int &base, const Int &exp, const Int &m)
{
    Int r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), m.get_mpz_t());
    return r;
}

unsigned valuation(const Int &n, const Int &p)
{
    if (n == 0) throw UsageError("valuation: n must be nonzero");
    Int t = n;
    return static_cast<unsigned>(mpz_remove(t.get_mpz_t(), t.get_mpz_t(), p.get_mpz_t()));
}

std::optional<Int> exact_sqrt(const Int &n)
{
    if (sgn(n) < 0) return std::nullopt;
    if (!mpz_perfect_square_p(n.get_mpz_t())) return std::nullopt;
    return Int(sqrt(n));
}

std::optional<Int> exact_cube_root(const Int &n)
{
    Int r;
    if (!mpz_root(r.get_mpz_t(), n.get_mpz_t(), 3)) return std::nullopt;
    return r;
}

Int floor_cbrt(const Int &n)
{
    Int r;
    mpz_root(r.get_mpz_t(), n.get_mpz_t(), 3); // truncates toward zero
    if (sgn(n) < 0 && r * r * r != n) r -= 1;
    return r;
}

std::size_t bit_length(const Int &n)
{
    return n == 0 ? 0 : mpz_sizeinbase(n.get_mpz_t(), 2);
}

} // namespace hasse
