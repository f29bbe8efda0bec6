#include "az/modular.hpp"

namespace az {

bool is_prime(long n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (long d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::vector<long> prime_range(long lo, long hi) {
    if (lo > hi) throw std::invalid_argument("prime_range: lo > hi");
    std::vector<long> out;
    for (long n = std::max(lo, 2L); n <= hi; ++n)
        if (is_prime(n)) out.push_back(n);
    return out;
}

PrimeModulus::PrimeModulus(long p, int m) : p_(p), m_(m) {
    if (p < 5 || !is_prime(p))
        throw std::domain_error("PrimeModulus: p must be a prime >= 5");
    if (m < 1 || m > 3)
        throw std::domain_error("PrimeModulus: exponent must be 1, 2 or 3");
    modulus_ = pow(Int(p), static_cast<unsigned long>(m));
}

int legendre_symbol(const Int& a, long p) {
    if (p < 3 || !is_prime(p))
        throw std::domain_error("legendre_symbol: p must be an odd prime");
    Int pz(p);
    Int r;
    mpz_mod(r.raw_mut(), a.raw(), pz.raw());
    if (r.is_zero()) return 0;
    Int e((p - 1) / 2);
    Int res;
    mpz_powm(res.raw_mut(), r.raw(), e.raw(), pz.raw());
    return res == Int(1) ? 1 : -1;
}

int legendre_symbol(long a, long p) { return legendre_symbol(Int(a), p); }

Residue fermat_quotient(long a, long p, int k) {
    if (k != 1 && k != 2) throw std::domain_error("fermat_quotient: k must be 1 or 2");
    PrimeModulus pm(p, k);
    if (a % p == 0) throw std::domain_error("fermat_quotient: base divisible by p");
    // a^{p-1} = 1 + p q_p(a) (mod p^{k+1}), so one powmod at exponent k+1
    // recovers q_p(a) mod p^k.
    Int mod_up = pow(Int(p), static_cast<unsigned long>(k + 1));
    Int base(a), e(p - 1), r;
    mpz_mod(base.raw_mut(), base.raw(), mod_up.raw());
    mpz_powm(r.raw_mut(), base.raw(), e.raw(), mod_up.raw());
    r -= Int(1);
    Int q;
    mpz_divexact(q.raw_mut(), r.raw(), Int(p).raw());
    Int v;
    mpz_mod(v.raw_mut(), q.raw(), pm.modulus().raw());
    return Residue{std::move(v), std::move(pm)};
}

Residue reduce_integer(const Int& v, const PrimeModulus& pm) {
    Int r;
    mpz_mod(r.raw_mut(), v.raw(), pm.modulus().raw());
    return Residue{std::move(r), pm};
}

Residue reduce_rational(const Rat& r, const PrimeModulus& pm) {
    Int den = r.den();
    Int inv;
    if (mpz_invert(inv.raw_mut(), den.raw(), pm.modulus().raw()) == 0)
        throw NotPIntegralError("reduce_rational: denominator divisible by p");
    Int v = r.num() * inv;
    Int out;
    mpz_mod(out.raw_mut(), v.raw(), pm.modulus().raw());
    return Residue{std::move(out), pm};
}

}  // namespace az
