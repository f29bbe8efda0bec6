/**
 * @file exact.hpp
 * @brief Exact integer and rational arithmetic (GMP-backed) plus the
 *        combinatorial primitives used everywhere else: factorials,
 *        binomial coefficients, harmonic numbers, rising factorials and
 *        the central term (3k)!/(3^{3k} k!^3).
 */
#ifndef AZ_EXACT_HPP
#define AZ_EXACT_HPP

#include <gmp.h>
#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>
#include <iosfwd>

namespace az {

// ---------------------------------------------------------------------------
// Int: arbitrary-precision signed integer, value semantics over mpz_t.
// ---------------------------------------------------------------------------
class Int {
public:
    Int() { mpz_init(z_); }
    Int(long v) { mpz_init_set_si(z_, v); }              // NOLINT: implicit by design
    Int(int v) : Int(static_cast<long>(v)) {}
    explicit Int(const std::string& s) {
        if (mpz_init_set_str(z_, s.c_str(), 10) != 0) {
            mpz_clear(z_);
            throw std::invalid_argument("Int: invalid decimal string: " + s);
        }
    }

    Int(const Int& o) { mpz_init_set(z_, o.z_); }
    Int(Int&& o) noexcept { mpz_init(z_); mpz_swap(z_, o.z_); }
    Int& operator=(const Int& o) {
        if (this != &o) mpz_set(z_, o.z_);
        return *this;
    }
    Int& operator=(Int&& o) noexcept {
        if (this != &o) mpz_swap(z_, o.z_);
        return *this;
    }
    ~Int() { mpz_clear(z_); }

    void swap(Int& o) noexcept { mpz_swap(z_, o.z_); }

    // ---- state ----
    bool is_zero() const { return mpz_sgn(z_) == 0; }
    int sgn() const { return mpz_sgn(z_); }
    bool fits_long() const { return mpz_fits_slong_p(z_) != 0; }
    long to_long() const {
        if (!fits_long()) throw std::overflow_error("Int: value does not fit in long");
        return mpz_get_si(z_);
    }
    std::string str() const {
        char* s = mpz_get_str(nullptr, 10, z_);
        std::string out(s);
        void (*freefn)(void*, size_t);
        mp_get_memory_functions(nullptr, nullptr, &freefn);
        freefn(s, out.size() + 1);
        return out;
    }

    // ---- arithmetic ----
    friend Int operator-(const Int& a) { Int r; mpz_neg(r.z_, a.z_); return r; }
    friend Int operator+(const Int& a, const Int& b) { Int r; mpz_add(r.z_, a.z_, b.z_); return r; }
    friend Int operator-(const Int& a, const Int& b) { Int r; mpz_sub(r.z_, a.z_, b.z_); return r; }
    friend Int operator*(const Int& a, const Int& b) { Int r; mpz_mul(r.z_, a.z_, b.z_); return r; }
    friend Int operator/(const Int& a, const Int& b) {  // truncated
        if (b.is_zero()) throw std::domain_error("Int: division by zero");
        Int r; mpz_tdiv_q(r.z_, a.z_, b.z_); return r;
    }
    friend Int operator%(const Int& a, const Int& b) {
        if (b.is_zero()) throw std::domain_error("Int: modulo by zero");
        Int r; mpz_tdiv_r(r.z_, a.z_, b.z_); return r;
    }
    Int& operator+=(const Int& b) { mpz_add(z_, z_, b.z_); return *this; }
    Int& operator-=(const Int& b) { mpz_sub(z_, z_, b.z_); return *this; }
    Int& operator*=(const Int& b) { mpz_mul(z_, z_, b.z_); return *this; }

    // ---- comparison ----
    friend bool operator==(const Int& a, const Int& b) { return mpz_cmp(a.z_, b.z_) == 0; }
    friend std::strong_ordering operator<=>(const Int& a, const Int& b) {
        int c = mpz_cmp(a.z_, b.z_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    // ---- raw access for GMP-level routines ----
    mpz_srcptr raw() const { return z_; }
    mpz_ptr raw_mut() { return z_; }

private:
    mpz_t z_;
};

std::ostream& operator<<(std::ostream& os, const Int& v);

Int abs(const Int& a);
Int gcd(const Int& a, const Int& b);
Int pow(const Int& base, unsigned long exp);

// ---------------------------------------------------------------------------
// Rat: exact rational, always canonical (gcd(num,den)=1, den>=1, 0 = 0/1).
// ---------------------------------------------------------------------------
class Rat {
public:
    Rat() { mpq_init(q_); }
    Rat(long v) { mpq_init(q_); mpq_set_si(q_, v, 1); }  // NOLINT: implicit by design
    Rat(int v) : Rat(static_cast<long>(v)) {}
    explicit Rat(const Int& v) {
        mpq_init(q_);
        mpq_set_z(q_, v.raw());
    }
    Rat(const Int& num, const Int& den) {
        if (den.is_zero()) throw std::domain_error("Rat: zero denominator");
        mpq_init(q_);
        mpz_set(mpq_numref(q_), num.raw());
        mpz_set(mpq_denref(q_), den.raw());
        mpq_canonicalize(q_);
    }
    Rat(long num, long den) : Rat(Int(num), Int(den)) {}

    Rat(const Rat& o) { mpq_init(q_); mpq_set(q_, o.q_); }
    Rat(Rat&& o) noexcept { mpq_init(q_); mpq_swap(q_, o.q_); }
    Rat& operator=(const Rat& o) {
        if (this != &o) mpq_set(q_, o.q_);
        return *this;
    }
    Rat& operator=(Rat&& o) noexcept {
        if (this != &o) mpq_swap(q_, o.q_);
        return *this;
    }
    ~Rat() { mpq_clear(q_); }

    // ---- accessors (canonical form) ----
    Int num() const { Int r; mpz_set(r.raw_mut(), mpq_numref(q_)); return r; }
    Int den() const { Int r; mpz_set(r.raw_mut(), mpq_denref(q_)); return r; }
    bool is_zero() const { return mpq_sgn(q_) == 0; }
    bool is_integer() const { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }
    int sgn() const { return mpq_sgn(q_); }

    /// "n/d", or just "n" when the denominator is 1.
    std::string str() const;

    // ---- arithmetic ----
    friend Rat operator-(const Rat& a) { Rat r; mpq_neg(r.q_, a.q_); return r; }
    friend Rat operator+(const Rat& a, const Rat& b) { Rat r; mpq_add(r.q_, a.q_, b.q_); return r; }
    friend Rat operator-(const Rat& a, const Rat& b) { Rat r; mpq_sub(r.q_, a.q_, b.q_); return r; }
    friend Rat operator*(const Rat& a, const Rat& b) { Rat r; mpq_mul(r.q_, a.q_, b.q_); return r; }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.is_zero()) throw std::domain_error("Rat: division by zero");
        Rat r; mpq_div(r.q_, a.q_, b.q_); return r;
    }
    Rat& operator+=(const Rat& b) { mpq_add(q_, q_, b.q_); return *this; }
    Rat& operator-=(const Rat& b) { mpq_sub(q_, q_, b.q_); return *this; }
    Rat& operator*=(const Rat& b) { mpq_mul(q_, q_, b.q_); return *this; }

    // ---- comparison ----
    friend bool operator==(const Rat& a, const Rat& b) { return mpq_equal(a.q_, b.q_) != 0; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        int c = mpq_cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    mpq_srcptr raw() const { return q_; }

private:
    mpq_t q_;
};

std::ostream& operator<<(std::ostream& os, const Rat& v);

Rat abs(const Rat& a);

/// base^exp for integer exp; negative exponents invert (0^negative throws).
Rat pow(const Rat& base, long exp);

// ---------------------------------------------------------------------------
// Combinatorial primitives.
// ---------------------------------------------------------------------------

/// n! for n >= 0.
Int factorial(long n);

/// C(n, k) with the vanishing convention: 0 whenever k < 0 or k > n.
/// Requires n >= 0.
Int binomial(long n, long k);

/// H_n = 1 + 1/2 + ... + 1/n, H_0 = 0. Requires n >= 0.
Rat harmonic(long n);

/// Rising factorial (x)_k = x (x+1) ... (x+k-1), with (x)_0 = 1. Requires k >= 0.
Rat rising_factorial(const Rat& x, long k);

/// (3k)!/(3^{3k} k!^3), equal to (1/3)_k (2/3)_k / (1)_k^2. Requires k >= 0.
Rat central_term(long k);

/// sum_k coeffs[k] / base^k as an exact rational, evaluated by a Horner pass
/// over the common denominator base^{len-1}. Requires base != 0.
Rat power_weighted_sum(std::span<const Int> coeffs, long base);

/// Cache of H_0 .. H_max, built once and then read-only.
class HarmonicTable {
public:
    explicit HarmonicTable(long max_index);

    long max_index() const { return static_cast<long>(values_.size()) - 1; }
    const Rat& at(long n) const {
        if (n < 0 || n > max_index())
            throw std::out_of_range("HarmonicTable: index out of range");
        return values_[static_cast<size_t>(n)];
    }

private:
    std::vector<Rat> values_;
};

}  // namespace az

#endif  // AZ_EXACT_HPP
