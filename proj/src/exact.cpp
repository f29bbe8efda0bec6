#include "az/exact.hpp"

#include <ostream>

namespace az {

std::ostream& operator<<(std::ostream& os, const Int& v) { return os << v.str(); }
std::ostream& operator<<(std::ostream& os, const Rat& v) { return os << v.str(); }

Int abs(const Int& a) {
    Int r;
    mpz_abs(r.raw_mut(), a.raw());
    return r;
}

Int gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.raw_mut(), a.raw(), b.raw());
    return r;
}

Int pow(const Int& base, unsigned long exp) {
    Int r;
    mpz_pow_ui(r.raw_mut(), base.raw(), exp);
    return r;
}

std::string Rat::str() const {
    std::string s = num().str();
    if (!is_integer()) s += "/" + den().str();
    return s;
}

Rat abs(const Rat& a) { return a.sgn() < 0 ? -a : a; }

Rat pow(const Rat& base, long exp) {
    if (exp >= 0) {
        Rat r(pow(base.num(), static_cast<unsigned long>(exp)),
              pow(base.den(), static_cast<unsigned long>(exp)));
        return r;
    }
    if (base.is_zero()) throw std::domain_error("pow: zero base with negative exponent");
    return Rat(pow(base.den(), static_cast<unsigned long>(-exp)),
               pow(base.num(), static_cast<unsigned long>(-exp)));
}

Int factorial(long n) {
    if (n < 0) throw std::domain_error("factorial: negative argument");
    Int r;
    mpz_fac_ui(r.raw_mut(), static_cast<unsigned long>(n));
    return r;
}

Int binomial(long n, long k) {
    if (n < 0) throw std::domain_error("binomial: negative n");
    if (k < 0 || k > n) return Int(0);
    Int r;
    mpz_bin_uiui(r.raw_mut(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Rat harmonic(long n) {
    if (n < 0) throw std::domain_error("harmonic: negative argument");
    Rat h;
    for (long j = 1; j <= n; ++j) h += Rat(1, j);
    return h;
}

Rat rising_factorial(const Rat& x, long k) {
    if (k < 0) throw std::domain_error("rising_factorial: negative k");
    Rat r(1);
    for (long j = 0; j < k; ++j) r *= x + Rat(j);
    return r;
}

Rat central_term(long k) {
    if (k < 0) throw std::domain_error("central_term: negative k");
    Int den = pow(Int(3), static_cast<unsigned long>(3 * k));
    Int kf = factorial(k);
    den *= kf * kf * kf;
    return Rat(factorial(3 * k), den);
}

Rat power_weighted_sum(std::span<const Int> coeffs, long base) {
    if (base == 0) throw std::domain_error("power_weighted_sum: zero base");
    if (coeffs.empty()) return Rat(0);
    Int b(base);
    Int horner(0);
    for (const Int& c : coeffs) {
        horner *= b;
        horner += c;
    }
    return Rat(horner, pow(b, coeffs.size() - 1));
}

HarmonicTable::HarmonicTable(long max_index) {
    if (max_index < 0) throw std::domain_error("HarmonicTable: negative max index");
    values_.reserve(static_cast<size_t>(max_index) + 1);
    values_.emplace_back(0);
    for (long n = 1; n <= max_index; ++n)
        values_.push_back(values_.back() + Rat(1, n));
}

}  // namespace az
