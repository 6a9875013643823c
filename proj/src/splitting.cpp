#include "hasse/splitting.hpp"

#include <algorithm>
#include <cmath>

#include "hasse/membership.hpp"

namespace hasse {

namespace {

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

std::uint64_t residue(const Int &a, std::uint64_t p) { return mod(a, Int(static_cast<unsigned long>(p))).get_ui(); }

std::uint64_t isqrt_u64(std::uint64_t n)
{
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
    while (r > 0 && static_cast<u128>(r) * r > n) --r;
    while (static_cast<u128>(r + 1) * (r + 1) <= n) ++r;
    return r;
}

} // namespace

RepresentedPrimeStream::RepresentedPrimeStream(const Int &d, const Int &e, std::uint64_t bound) : bound_(bound)
{
    if (d <= 1) throw UsageError("represented primes: d must exceed 1");
    if (e < 1) throw UsageError("represented primes: e must be positive");
    const Int step = 3 * d * e * e;
    if (step >= Int(static_cast<unsigned long>(bound))) {
        window_ = covered_ = bound_; // nothing representable below the bound
        return;
    }
    d_ = d.get_ui();
    step_ = step.get_ui();
}

void RepresentedPrimeStream::refill()
{
    buffer_.clear();
    pos_ = 0;
    while (buffer_.empty() && covered_ < bound_) {
        window_ = std::min(bound_, std::max<std::uint64_t>(4096, std::max(2 * covered_, step_ * 4)));
        for (std::uint64_t y = 1; step_ * y * y <= window_; ++y) {
            const std::uint64_t base = step_ * y * y;
            // covered_ < x^2 + base <= window_
            std::uint64_t x = base > covered_ ? 0 : isqrt_u64(covered_ - base);
            for (; x * x + base <= window_; ++x) {
                const std::uint64_t p = x * x + base;
                if (p <= covered_ || p <= 3 || d_ % p == 0) continue;
                if (is_prime_u64(p)) buffer_.push_back({p, x, y});
            }
        }
        covered_ = window_;
        std::sort(buffer_.begin(), buffer_.end(), [](const auto &a, const auto &b) { return a.p < b.p; });
        buffer_.erase(std::unique(buffer_.begin(), buffer_.end(), [](const auto &a, const auto &b) { return a.p == b.p; }),
                      buffer_.end());
    }
}

std::optional<RepresentedPrime> RepresentedPrimeStream::next()
{
    if (pos_ >= buffer_.size()) refill();
    if (pos_ >= buffer_.size()) return std::nullopt;
    return buffer_[pos_++];
}

std::vector<RepresentedPrime> find_represented_primes(const Int &d, const Int &e, std::size_t count, std::uint64_t bound)
{
    RepresentedPrimeStream stream(d, e, bound);
    std::vector<RepresentedPrime> out;
    while (out.size() < count) {
        auto rp = stream.next();
        if (!rp)
            throw DomainError("only " + std::to_string(out.size()) + " primes x^2 + 3*" + d.get_str() + "*" + e.get_str() +
                              "^2*y^2 below " + std::to_string(bound));
        out.push_back(*rp);
    }
    return out;
}

std::uint64_t reduce_mod_p(const QuadElem &u, std::uint64_t p, std::uint64_t sqrt_d)
{
    if (p % 2 == 0) throw UsageError("reduce_mod_p: p must be odd");
    const std::uint64_t x = residue(u.x(), p), y = residue(u.y(), p);
    std::uint64_t v = (x + mulmod(y, sqrt_d % p, p)) % p;
    if (u.den() == 2) v = mulmod(v, (p + 1) / 2, p);
    return v;
}

bool is_cubic_residue(std::uint64_t z, std::uint64_t p)
{
    if (z % p == 0) throw DomainError("is_cubic_residue: z is divisible by p");
    return powmod(z, (p - 1) / 3, p) == 1;
}

PrimeWitness evaluate_witness(const QuadElem &u, const RepresentedPrime &rp)
{
    PrimeWitness w;
    w.prime = rp;
    const Int p(static_cast<unsigned long>(rp.p));
    // p = x^2 + 3 d e^2 y^2 with p = 1 (mod 3) makes d a square mod p.
    auto root = sqrt_mod(u.d(), p);
    if (!root) throw std::logic_error("d is not a square modulo the witness prime " + p.get_str());
    w.sqrt_d = root->get_ui();
    w.u_p = reduce_mod_p(u, rp.p, w.sqrt_d);
    w.cubic = is_cubic_residue(w.u_p, rp.p);
    return w;
}

Verdict membership_test(const QuadElem &u, const Int &e, std::size_t trials, std::uint64_t bound)
{
    if (u.is_zero()) throw UsageError("membership_test: u must be nonzero");
    const Int norm = qnorm(u);
    RepresentedPrimeStream stream(u.d(), e, bound);
    Verdict verdict;
    while (verdict.trials < trials) {
        auto rp = stream.next();
        if (!rp)
            throw DomainError("prime search exhausted below " + std::to_string(bound) + " after " +
                              std::to_string(verdict.trials) + " witnesses");
        if (residue(norm, rp->p) == 0) continue;
        PrimeWitness w = evaluate_witness(u, *rp);
        ++verdict.trials;
        if (!w.cubic) {
            verdict.kind = VerdictKind::NonMember;
            verdict.witness = w;
            return verdict;
        }
    }
    verdict.kind = VerdictKind::LikelyMember;
    return verdict;
}

CrosscheckReport thm16_crosscheck(const Int &d, std::size_t trials, std::uint64_t bound)
{
    require_real_field(d);
    CrosscheckReport r;
    r.d = d;
    const FundUnit fu = fundamental_unit(d);
    r.in_M = thm61_in_M(fu);
    r.verdict = membership_test(fu.elem, 1, trials, bound);
    const bool all_cubic = r.verdict.kind == VerdictKind::LikelyMember;
    r.agree = r.in_M == all_cubic;
    r.inconclusive = !r.in_M && all_cubic;
    return r;
}

} // namespace hasse
