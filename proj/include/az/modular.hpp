/**
 * @file modular.hpp
 * @brief Residue arithmetic mod p^m (p prime >= 5, m in {1,2,3}), Legendre
 *        symbols, Fermat quotients, and exact reduction of rationals into
 *        residue rings.
 */
#ifndef AZ_MODULAR_HPP
#define AZ_MODULAR_HPP

#include <stdexcept>
#include <vector>

#include "az/exact.hpp"

namespace az {

/// Thrown when a rational with p in its (reduced) denominator is pushed
/// into Z/p^m: the quantity has negative p-adic valuation and the
/// congruence is ill-posed as stated.
class NotPIntegralError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Deterministic trial division; adequate for the desk-scale p used here.
bool is_prime(long n);

/// All primes in [lo, hi], ascending.
std::vector<long> prime_range(long lo, long hi);

/// A prime p >= 5 together with an exponent m in {1,2,3}; modulus = p^m.
class PrimeModulus {
public:
    PrimeModulus(long p, int m);

    long p() const { return p_; }
    int m() const { return m_; }
    const Int& modulus() const { return modulus_; }

    friend bool operator==(const PrimeModulus& a, const PrimeModulus& b) {
        return a.p_ == b.p_ && a.m_ == b.m_;
    }

private:
    long p_;
    int m_;
    Int modulus_;
};

/// Canonical representative in [0, p^m).
struct Residue {
    Int value;
    PrimeModulus modulus;

    friend bool operator==(const Residue& a, const Residue& b) {
        return a.modulus == b.modulus && a.value == b.value;
    }
};

/// Legendre symbol (a/p) by Euler's criterion; 0 iff p | a. Requires p >= 3 prime.
int legendre_symbol(const Int& a, long p);
int legendre_symbol(long a, long p);

/// q_p(a) = (a^{p-1} - 1)/p reduced mod p^k, computed via a^{p-1} mod p^{k+1}.
/// Requires gcd(a, p) = 1 and k in {1, 2}.
Residue fermat_quotient(long a, long p, int k);

/// num * den^{-1} mod p^m. Throws NotPIntegralError when p divides the
/// (canonical) denominator.
Residue reduce_rational(const Rat& r, const PrimeModulus& pm);
Residue reduce_integer(const Int& v, const PrimeModulus& pm);

}  // namespace az

#endif  // AZ_MODULAR_HPP
