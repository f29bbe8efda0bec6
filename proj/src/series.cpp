#include "az/series.hpp"

#include "az/sequences.hpp"

namespace az {

namespace {

constexpr long kGuardDigits = 12;

void require_digits(long digits) {
    if (digits < kMinDigits || digits > kMaxDigits)
        throw std::domain_error("series: digits must lie in [20, 1000]");
}

Int pow10(long e) { return pow(Int(10), static_cast<unsigned long>(e)); }

// scale * arctan(1/x), truncated. The alternating series is summed with
// integer divisions; each step loses < 1 unit, well inside the guard margin.
Int atan_inv_units(long x, const Int& scale) {
    Int power = scale / Int(x);
    Int xx(x * x);
    Int acc(0);
    long k = 0;
    while (!power.is_zero()) {
        Int term = power / Int(2 * k + 1);
        if (k & 1)
            acc -= term;
        else
            acc += term;
        power = power / xx;
        ++k;
    }
    return acc;
}

Int pi_units(const Int& scale) {
    return Int(16) * atan_inv_units(5, scale) - Int(4) * atan_inv_units(239, scale);
}

Int pi_units_crosscheck(const Int& scale) {
    return Int(48) * atan_inv_units(18, scale) + Int(32) * atan_inv_units(57, scale) -
           Int(20) * atan_inv_units(239, scale);
}

Fixed drop_guard(const Int& guarded_units, long digits) {
    return Fixed(guarded_units / pow10(kGuardDigits), digits);
}

}  // namespace

Fixed::Fixed(Int units, long digits) : units_(std::move(units)), digits_(digits) {
    if (digits < 0) throw std::domain_error("Fixed: negative digit count");
}

Fixed Fixed::from_rational(const Rat& r, long digits) {
    Int scaled = r.num() * pow10(digits);
    Int units;
    mpz_tdiv_q(units.raw_mut(), scaled.raw(), r.den().raw());
    return Fixed(std::move(units), digits);
}

Fixed Fixed::truncated_to(long new_digits) const {
    if (new_digits < 0 || new_digits > digits_)
        throw std::domain_error("Fixed: bad truncation target");
    Int units;
    mpz_tdiv_q(units.raw_mut(), units_.raw(), pow10(digits_ - new_digits).raw());
    return Fixed(std::move(units), new_digits);
}

bool Fixed::abs_below_pow10(long e) const {
    if (digits_ < e) throw std::domain_error("Fixed: threshold finer than precision");
    return az::abs(units_) < pow10(digits_ - e);
}

std::string Fixed::str() const {
    Int a = az::abs(units_);
    std::string raw = a.str();
    if (static_cast<long>(raw.size()) <= digits_)
        raw.insert(0, static_cast<size_t>(digits_) - raw.size() + 1, '0');
    std::string out = raw.substr(0, raw.size() - static_cast<size_t>(digits_)) + "." +
                      raw.substr(raw.size() - static_cast<size_t>(digits_));
    if (units_.sgn() < 0) out.insert(0, 1, '-');
    return out;
}

Fixed operator-(const Fixed& a, const Fixed& b) {
    if (a.digits_ != b.digits_)
        throw std::domain_error("Fixed: mixed precisions");
    return Fixed(a.units_ - b.units_, a.digits_);
}

bool operator==(const Fixed& a, const Fixed& b) {
    return a.digits_ == b.digits_ && a.units_ == b.units_;
}

std::strong_ordering operator<=>(const Fixed& a, const Fixed& b) {
    if (a.digits_ != b.digits_)
        throw std::domain_error("Fixed: mixed precisions");
    return a.units_ <=> b.units_;
}

Fixed abs(const Fixed& a) { return Fixed(abs(a.units()), a.digits()); }

Fixed pi_digits(long digits) {
    require_digits(digits);
    return drop_guard(pi_units(pow10(digits + kGuardDigits)), digits);
}

Fixed pi_digits_crosscheck(long digits) {
    require_digits(digits);
    return drop_guard(pi_units_crosscheck(pow10(digits + kGuardDigits)), digits);
}

Fixed sqrt3_digits(long digits) {
    require_digits(digits);
    long guarded = digits + kGuardDigits;
    Int operand = Int(3) * pow10(2 * guarded);
    Int root;
    mpz_sqrt(root.raw_mut(), operand.raw());
    return drop_guard(root, digits);
}

Fixed target_value(long digits) {
    require_digits(digits);
    long guarded = digits + kGuardDigits;
    Int scale = pow10(guarded);
    Int sqrt3 = [&] {
        Int operand = Int(3) * scale * scale;
        Int root;
        mpz_sqrt(root.raw_mut(), operand.raw());
        return root;
    }();
    Int value = (Int(3) * sqrt3 * scale) / (Int(2) * pi_units(scale));
    return drop_guard(value, digits);
}

Rat chan_verrill_partial_sum(long terms, std::span<const Int> gamma_values) {
    if (terms < 1) throw std::domain_error("chan_verrill_partial_sum: need at least one term");
    if (static_cast<long>(gamma_values.size()) < terms)
        throw std::out_of_range("chan_verrill_partial_sum: gamma table too small");
    std::vector<Int> coeffs;
    coeffs.reserve(static_cast<size_t>(terms));
    for (long k = 0; k < terms; ++k)
        coeffs.push_back((4 * k + 1) * gamma_values[static_cast<size_t>(k)]);
    return power_weighted_sum(coeffs, 81);
}

ConvergenceRecord chan_verrill_partial(long terms, long digits,
                                       std::span<const Int> gamma_values) {
    require_digits(digits);
    Rat sum = chan_verrill_partial_sum(terms, gamma_values);
    Fixed partial = Fixed::from_rational(sum, digits);
    Fixed target = target_value(digits);
    Fixed err = abs(partial - target);
    return ConvergenceRecord{terms, std::move(partial), std::move(target), std::move(err)};
}

ConvergenceRecord chan_verrill_partial(long terms, long digits) {
    if (terms < 1) throw std::domain_error("chan_verrill_partial: need at least one term");
    SequenceTable gamma = build_gamma_table(terms - 1);
    return chan_verrill_partial(terms, digits, gamma.values);
}

std::vector<ConvergenceRecord> convergence_table(long max_terms, long step, long digits) {
    require_digits(digits);
    if (step < 1 || max_terms < step)
        throw std::domain_error("convergence_table: bad step or range");
    SequenceTable gamma = build_gamma_table(max_terms - 1);
    std::vector<ConvergenceRecord> out;
    out.reserve(static_cast<size_t>(max_terms / step));
    for (long n = step; n <= max_terms; n += step)
        out.push_back(chan_verrill_partial(n, digits, gamma.values));
    return out;
}

}  // namespace az
