/**
 * @file sequences.hpp
 * @brief Exact computation of the Almkvist-Zudilin numbers gamma_n (OEIS
 *        A125143) by four independent routes, and of the auxiliary sequence
 *        g_n = sum_k C(n,k)^2 C(2k,k).
 *
 * The four routes:
 *   defining sum   gamma_n = sum_j (-1)^{n-j} 3^{n-3j} (3j)!/j!^3 C(n,3j) C(n+j,j)
 *   Chan-Zudilin   gamma_n = sum_i C(2i,i)^2 C(4i,2i) C(n+3i,4i) (-3)^{3(n-i)}
 *   Sun (floor)    gamma_n = sum_{i<=n/3} C(2i,i)^2 C(4i,2i) C(n+i,4i) (-3)^{n-3i}
 *   Sun (g-sum)    gamma_n = sum_i (-9)^{n-i} C(2i,i) C(n+i,2i) g_i
 *
 * All arithmetic is exact; the (-3)^e factors are evaluated as sign * 3^e
 * with e >= 0 in every reachable term.
 */
#ifndef AZ_SEQUENCES_HPP
#define AZ_SEQUENCES_HPP

#include <span>
#include <vector>

#include "az/exact.hpp"

namespace az {

Int gamma_by_definition(long n);
Int gamma_by_chan_zudilin(long n);
Int gamma_by_sun_binomial(long n);

/// g_n = sum_{k=0}^{n} C(n,k)^2 C(2k,k).
Int g_number(long n);

/// Sun's g-weighted route. The overload taking a table expects g_values[i] = g_i
/// for 0 <= i <= n; the plain overload computes the prefix itself.
Int gamma_by_sun_g(long n, std::span<const Int> g_values);
Int gamma_by_sun_g(long n);

enum class SequenceKind { gamma, g };

/// Exact table of gamma_0..gamma_max or g_0..g_max.
struct SequenceTable {
    SequenceKind kind;
    std::vector<Int> values;

    long max_index() const { return static_cast<long>(values.size()) - 1; }
    const Int& at(long n) const { return values.at(static_cast<size_t>(n)); }
};

/// gamma table built with the defining sum (the cheapest route).
SequenceTable build_gamma_table(long max_index);
SequenceTable build_g_table(long max_index);

}  // namespace az

#endif  // AZ_SEQUENCES_HPP
