#include "az/sequences.hpp"

#include <stdexcept>

namespace az {

namespace {

void require_nonneg(long n, const char* what) {
    if (n < 0) throw std::domain_error(std::string(what) + ": negative index");
}

// sign * 3^e as an Int; sign_exp controls the sign via (-1)^sign_exp.
Int signed_pow3(long e, long sign_exp) {
    Int r = pow(Int(3), static_cast<unsigned long>(e));
    return (sign_exp & 1) ? -r : r;
}

}  // namespace

Int gamma_by_definition(long n) {
    require_nonneg(n, "gamma_by_definition");
    Int acc(0);
    for (long j = 0; 3 * j <= n; ++j) {
        // (3j)!/j!^3 = C(3j,j) C(2j,j)
        Int multinomial = binomial(3 * j, j) * binomial(2 * j, j);
        Int term = signed_pow3(n - 3 * j, n - j);
        term *= multinomial;
        term *= binomial(n, 3 * j);
        term *= binomial(n + j, j);
        acc += term;
    }
    return acc;
}

Int gamma_by_chan_zudilin(long n) {
    require_nonneg(n, "gamma_by_chan_zudilin");
    Int acc(0);
    for (long i = 0; i <= n; ++i) {
        Int core = binomial(2 * i, i);
        core *= core;
        core *= binomial(4 * i, 2 * i);
        core *= binomial(n + 3 * i, 4 * i);
        acc += core * signed_pow3(3 * (n - i), n - i);
    }
    return acc;
}

Int gamma_by_sun_binomial(long n) {
    require_nonneg(n, "gamma_by_sun_binomial");
    Int acc(0);
    for (long i = 0; 3 * i <= n; ++i) {
        Int core = binomial(2 * i, i);
        core *= core;
        core *= binomial(4 * i, 2 * i);
        core *= binomial(n + i, 4 * i);
        acc += core * signed_pow3(n - 3 * i, n - 3 * i);
    }
    return acc;
}

Int g_number(long n) {
    require_nonneg(n, "g_number");
    Int acc(0);
    for (long k = 0; k <= n; ++k) {
        Int c = binomial(n, k);
        acc += c * c * binomial(2 * k, k);
    }
    return acc;
}

Int gamma_by_sun_g(long n, std::span<const Int> g_values) {
    require_nonneg(n, "gamma_by_sun_g");
    if (static_cast<long>(g_values.size()) <= n)
        throw std::out_of_range("gamma_by_sun_g: g table too small");
    Int acc(0);
    for (long i = 0; i <= n; ++i) {
        // (-9)^{n-i} = (-1)^{n-i} 9^{n-i} = (-1)^{n-i} 3^{2(n-i)}
        Int term = signed_pow3(2 * (n - i), n - i);
        term *= binomial(2 * i, i);
        term *= binomial(n + i, 2 * i);
        term *= g_values[static_cast<size_t>(i)];
        acc += term;
    }
    return acc;
}

Int gamma_by_sun_g(long n) {
    require_nonneg(n, "gamma_by_sun_g");
    std::vector<Int> g;
    g.reserve(static_cast<size_t>(n) + 1);
    for (long i = 0; i <= n; ++i) g.push_back(g_number(i));
    return gamma_by_sun_g(n, g);
}

SequenceTable build_gamma_table(long max_index) {
    require_nonneg(max_index, "build_gamma_table");
    SequenceTable t{SequenceKind::gamma, {}};
    t.values.reserve(static_cast<size_t>(max_index) + 1);
    for (long n = 0; n <= max_index; ++n) t.values.push_back(gamma_by_definition(n));
    return t;
}

SequenceTable build_g_table(long max_index) {
    require_nonneg(max_index, "build_g_table");
    SequenceTable t{SequenceKind::g, {}};
    t.values.reserve(static_cast<size_t>(max_index) + 1);
    for (long n = 0; n <= max_index; ++n) t.values.push_back(g_number(n));
    return t;
}

}  // namespace az
