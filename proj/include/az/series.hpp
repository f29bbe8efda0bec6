/**
 * @file series.hpp
 * @brief High-precision numerical confirmation of the Chan-Verrill series
 *        sum_{k>=0} (4k+1) gamma_k / 81^k = 3 sqrt(3) / (2 pi).
 *
 * Partial sums are accumulated as exact rationals; the only approximation is
 * the final truncation to D decimal digits. pi is computed internally with a
 * Machin arctangent formula (a second formula is exposed for cross-checking)
 * and sqrt(3) with an integer square root of a scaled operand.
 */
#ifndef AZ_SERIES_HPP
#define AZ_SERIES_HPP

#include <span>
#include <string>
#include <vector>

#include "az/exact.hpp"

namespace az {

/// Fixed-point decimal: units * 10^{-digits}. All values produced here are
/// correct to within 1 ulp of the quantity they represent.
class Fixed {
public:
    Fixed(Int units, long digits);

    static Fixed from_rational(const Rat& r, long digits);  // truncation toward zero

    const Int& units() const { return units_; }
    long digits() const { return digits_; }

    /// Drop trailing digits (new_digits <= digits()).
    Fixed truncated_to(long new_digits) const;

    /// True iff |value| < 10^{-e}.
    bool abs_below_pow10(long e) const;

    std::string str() const;

    friend Fixed operator-(const Fixed& a, const Fixed& b);
    friend bool operator==(const Fixed& a, const Fixed& b);
    friend std::strong_ordering operator<=>(const Fixed& a, const Fixed& b);

private:
    Int units_;
    long digits_;
};

Fixed abs(const Fixed& a);

inline constexpr long kMinDigits = 20;
inline constexpr long kMaxDigits = 1000;

/// pi to D digits (Machin: 16 atan(1/5) - 4 atan(1/239)). 20 <= D <= 1000.
Fixed pi_digits(long digits);

/// pi by an independent route (Gauss: 48 atan(1/18) + 32 atan(1/57)
/// - 20 atan(1/239)); used to cross-check pi_digits.
Fixed pi_digits_crosscheck(long digits);

/// sqrt(3) to D digits via integer square root.
Fixed sqrt3_digits(long digits);

/// 3 sqrt(3) / (2 pi) to D digits.
Fixed target_value(long digits);

struct ConvergenceRecord {
    long terms_used;
    Fixed partial_sum;
    Fixed target;
    Fixed abs_error;
};

/// Exact value of sum_{k=0}^{N-1} (4k+1) gamma_k / 81^k; gamma_values must
/// cover indices 0..N-1.
Rat chan_verrill_partial_sum(long terms, std::span<const Int> gamma_values);

/// Partial sum vs target at D digits. The table overload reuses precomputed
/// gamma values; the plain overload computes them.
ConvergenceRecord chan_verrill_partial(long terms, long digits,
                                       std::span<const Int> gamma_values);
ConvergenceRecord chan_verrill_partial(long terms, long digits);

/// Records for N = step, 2*step, ..., max_terms (gamma computed once).
std::vector<ConvergenceRecord> convergence_table(long max_terms, long step, long digits);

}  // namespace az

#endif  // AZ_SERIES_HPP
