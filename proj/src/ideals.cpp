#include "hasse/ideals.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "hasse/membership.hpp"

namespace hasse {

namespace {

bool one_mod_four(const Int &d) { return mod(d, 4) == 1; }

Int field_disc(const Int &d) { return one_mod_four(d) ? d : Int(4 * d); }

// Key for ordering and merging ideal powers.
std::pair<Int, bool> key(const PrimeIdealPower &pp) { return {pp.p, pp.second}; }

void sort_powers(std::vector<PrimeIdealPower> &v)
{
    std::sort(v.begin(), v.end(), [](const auto &a, const auto &b) { return key(a) < key(b); });
}

} // namespace

const char *to_string(PrimeKind k)
{
    switch (k) {
    case PrimeKind::Split: return "split";
    case PrimeKind::Ramified: return "ramified";
    case PrimeKind::Inert: return "inert";
    }
    return "?";
}

Int PrimeIdealPower::norm() const { return kind == PrimeKind::Inert ? Int(p * p) : p; }

std::string PrimeIdealPower::to_string() const
{
    std::string s = "(" + p.get_str();
    if (kind != PrimeKind::Inert) s += ", w - " + root.get_str();
    s += ")";
    if (exponent != 1) s += "^" + std::to_string(exponent);
    return s;
}

PrimeKind prime_kind(const Int &d, const Int &p)
{
    switch (kronecker(field_disc(d), p)) {
    case 1: return PrimeKind::Split;
    case 0: return PrimeKind::Ramified;
    default: return PrimeKind::Inert;
    }
}

std::vector<Int> omega_roots(const Int &d, const Int &p)
{
    // omega^2 - omega - (d-1)/4 for d = 1 (mod 4), omega^2 - d otherwise
    const bool half = one_mod_four(d);
    const Int c = half ? Int(-(d - 1) / 4) : Int(-d);
    const Int b = half ? Int(-1) : Int(0);
    std::vector<Int> roots;
    if (p == 2) {
        for (int x = 0; x < 2; ++x)
            if (mod(Int(x * x) + b * x + c, 2) == 0) roots.emplace_back(x);
        return roots;
    }
    const Int delta = mod(b * b - 4 * c, p);
    Int s = 0;
    if (delta != 0) {
        auto r = sqrt_mod(delta, p);
        if (!r) return roots;
        s = *r;
    }
    const Int inv2 = inverse_mod(2, p);
    roots.push_back(mod((-b + s) * inv2, p));
    roots.push_back(mod((-b - s) * inv2, p));
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

std::vector<PrimeIdealPower> factor_principal(const QuadElem &u)
{
    if (u.is_zero()) throw UsageError("factor_principal: u must be nonzero");
    const Int &d = u.d();
    const Int norm = abs(qnorm(u));
    const Factorization content = rational_prime_content(u);
    std::vector<PrimeIdealPower> out;
    for (const auto &[p, e] : factorize(norm).factors) {
        const unsigned k = content.exponent_of(p);
        const PrimeKind kind = prime_kind(d, p);
        if (kind == PrimeKind::Inert) {
            out.push_back({p, kind, 0, e / 2, false});
            continue;
        }
        const std::vector<Int> roots = omega_roots(d, p);
        if (kind == PrimeKind::Ramified) {
            out.push_back({p, kind, roots.at(0), e, false});
            continue;
        }
        // u = p^k u' with u' divisible by at most one of the two primes above p.
        const unsigned extra = e - 2 * k;
        unsigned exps[2] = {k, k};
        if (extra > 0) {
            Int pk;
            mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), k);
            const auto [A, B] = divide_exact(u, pk).value().omega_coords();
            const bool first = mod(A + B * roots.at(0), p) == 0;
            exps[first ? 0 : 1] += extra;
        }
        for (int i = 0; i < 2; ++i)
            if (exps[i] > 0) out.push_back({p, kind, roots.at(i), exps[i], i == 1});
    }
    return out;
}

Lemma71Decomposition lemma71_decompose(const QuadElem &u)
{
    if (!classify_sd(u).in_Sd) throw DomainError("lemma71_decompose: u is not in S_d");
    const std::vector<PrimeIdealPower> fac = factor_principal(u);
    Lemma71Decomposition dec;
    for (std::size_t i = 0; i < fac.size(); ++i) {
        const PrimeIdealPower &f = fac[i];
        if (f.kind == PrimeKind::Inert) throw std::logic_error("inert prime in the factorization of an S_d element");
        if (f.kind == PrimeKind::Ramified) {
            if (f.exponent % 3) throw std::logic_error("ramified exponent not divisible by 3");
            dec.cube_part.push_back({f.p, f.kind, f.root, f.exponent / 3, false});
            continue;
        }
        // split: gather both conjugates
        const bool pair = i + 1 < fac.size() && fac[i + 1].p == f.p;
        if (!pair) {
            if (f.exponent % 3) throw std::logic_error("split exponent not divisible by 3");
            dec.cube_part.push_back({f.p, f.kind, f.root, f.exponent / 3, f.second});
            continue;
        }
        const PrimeIdealPower &g = fac[i + 1];
        ++i;
        const PrimeIdealPower &big = f.exponent > g.exponent ? f : g;
        const PrimeIdealPower &small = f.exponent > g.exponent ? g : f;
        const unsigned E = big.exponent, c = small.exponent;
        PrimeIdealPower cube = big, rest;
        if (c == 1 && E % 3 == 2) {
            cube.exponent = (E - 2) / 3;
            rest = big;
        } else if (c == 2 && E % 3 == 1 && E >= 4) {
            cube.exponent = (E - 4) / 3 + 1;
            rest = small;
        } else {
            throw std::logic_error("split exponents incompatible with a cube norm");
        }
        rest.exponent = 1;
        if (cube.exponent) dec.cube_part.push_back(cube);
        dec.q *= f.p;
        dec.q_part.push_back(rest);
    }
    return dec;
}

std::vector<PrimeIdealPower> reassemble(const Lemma71Decomposition &dec, const Int &d)
{
    std::map<std::pair<Int, bool>, PrimeIdealPower> acc;
    auto add = [&](PrimeIdealPower pp, unsigned times) {
        pp.exponent *= times;
        auto [it, fresh] = acc.try_emplace(key(pp), pp);
        if (!fresh) it->second.exponent += pp.exponent;
    };
    for (const auto &pp : dec.cube_part) add(pp, 3);
    for (const auto &pp : dec.q_part) add(pp, 1);
    for (const auto &[p, e] : factorize(dec.q).factors) {
        const std::vector<Int> roots = omega_roots(d, p);
        for (int i = 0; i < 2; ++i) add({p, PrimeKind::Split, roots.at(i), e, i == 1}, 1);
    }
    std::vector<PrimeIdealPower> out;
    for (auto &[k, pp] : acc)
        if (pp.exponent) out.push_back(pp);
    sort_powers(out);
    return out;
}

} // namespace hasse
