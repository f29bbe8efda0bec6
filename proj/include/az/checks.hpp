/**
 * @file checks.hpp
 * @brief Registry of exact identities and congruence targets for the
 *        Almkvist-Zudilin numbers, each executable as a pass/fail check.
 *
 * Exact identities (verified as equalities of rationals, any n):
 *
 *   bb1         sum_i (-1)^i C(n,i) C(n+i,i)          = (-1)^n
 *   bb2         sum_i (-1)^i C(n,i) C(n+i,i) H_i      = 2 (-1)^n H_n
 *   bb3         sum_i (-1)^i C(n,i) C(n+i,i) H_{n+i}  = 2 (-1)^n H_n
 *   tauraso_bb6 P_k sum_{j<k} (1/(1/3+j) + 1/(2/3+j)) = sum_{j<k} P_j/(k-j),
 *               with P_j = (1/3)_j (2/3)_j / (1)_j^2
 *   cc3         sum_{k=i}^{n-1} (4k+1)(-3)^{-k} C(k+3i,4i)
 *                 = (n-i) C(n+3i,4i) (-3)^{1-n}
 *   dd3         sum_{k=i}^{n-1} (-3)^k (4k+3) C(k+i,4i)
 *                 = 3 (n-3i) C(n+i,4i) (-3)^{n-1}
 *   ee3         sum_{k=i}^{n-1} (2k+1) C(k+i,2i) C(2i,i)
 *                 = n^2/(i+1) C(n-1,i) C(n+i,i)
 *   remark_alt  sum_{k=i}^{n-1} (-1)^k (2k+1) C(k+i,2i) C(2i,i)
 *                 = (-1)^{n-1} n C(n-1,i) C(n+i,i)
 *   red_cc4     sum_{k<n} (4k+1) 81^{-k} gamma_k
 *                 = (-3)^{1-n} sum_i (n-i)(-3)^{-3i} C(2i,i)^2 C(4i,2i) C(n+3i,4i)
 *   red_dd      sum_{k<n} (4k+3) gamma_k
 *                 = 3 (-3)^{n-1} sum_{i<=n/3} (n-3i)(-3)^{-3i} C(2i,i)^2 C(4i,2i) C(n+i,4i)
 *   red_ee      sum_{k<n} (2k+1)(-9)^{-k} gamma_k
 *                 = n^2 sum_i g_i (-9)^{-i} (i+1)^{-1} C(n-1,i) C(n+i,i)
 *   red_remark  sum_{k<n} (2k+1) 9^{-k} gamma_k
 *                 = n (-1)^{n-1} sum_i (-1)^i g_i 9^{-i} C(n-1,i) C(n+i,i)
 *
 * Congruence targets, for primes p >= 5 with m = floor(p/3), L = (-3/p) the
 * Legendre symbol, q = q_p(3) the Fermat quotient and c_k = (3k)!/(3^{3k} k!^3):
 *
 *   thm1         (p^3)  sum_{k<p} (4k+1) 81^{-k}  gamma_k  ==  L p
 *   thm2         (p^3)  sum_{k<p} (4k+3)          gamma_k  ==  3 L p
 *   thm3         (p^3)  sum_{k<p} (2k+1)(-9)^{-k} gamma_k  ==  L p
 *   conj_ee6     (p^3)  sum_{k<p} (2k+1) 9^{-k}   gamma_k  ==  L p        [conjecture]
 *   conj_sum_g9  (p^2)  sum_{i<p} g_i 9^{-i}               ==  L          [conjecture]
 *   lemma_bb4    (p)    sum_{k<p} c_k (H_{3k} - H_k)       ==  L q
 *   mortenson    (p^2)  sum_{i<p} c_i                      ==  L
 *   lehmer_bb11  (p^2)  H_m                                == -(3/2) q
 *   sign_bb10    exact  (-1)^m                              =  L
 *   bb9          (p)    c_k == (-1)^k C(m,k) C(m+k,k),                   0 <= k <= m
 *   dd5          (p^2)  c_i == (-1)^i C(m,i) C(m+i,i)
 *                              (1 - (p/3)(H_{m+i} - H_{m-i})),           0 <= i <= m
 *   dd7          (p)    H_{3i} == (H_i + H_{m+i} + H_{m-i} - 2 H_m)/3,   0 <= i <= m
 *   h_reflect    (p)    H_{p-1-j} == H_j,                                0 <= j <= p-1
 *   binom_pm1    (p^2)  C(p-1,i) C(p+i,i) == (-1)^i,                     0 <= i <= p-1
 *   step_cc      (p^3)  (-1)^i (p-i) C(2i,i)^2 C(4i,2i) C(p+3i,4i)
 *                         == p (3i)!/i!^3 (1 + p (H_{3i}-H_i)),          0 <= i <= p-1
 *   step_dd      (p^3)  (-1)^i (p-3i) C(2i,i)^2 C(4i,2i) C(p+i,4i)
 *                         == p (3i)!/i!^3 (1 - p (H_{3i}-H_i)),          0 <= i <= m
 *   jv_reflect   (p)    g_i 9^{-i} == L g_{p-1-i},                       0 <= i <= p-1
 *   sum_g_over_i (p)    sum_{1<=i<p} g_i / i == 0
 *   ee5_vanish   (p)    sum_{i<=p-2} g_i 9^{-i} (i+1)^{-1} == 0
 *   sun_g_pm1    (p^2)  g_{p-1} == L (2 * 3^{p-1} - 1)
 *
 * Congruence left/right sides are evaluated as exact integers/rationals and
 * reduced into [0, p^m) afterwards; a check holds iff the residues agree
 * (multi-index targets must agree at every index).
 */
#ifndef AZ_CHECKS_HPP
#define AZ_CHECKS_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "az/exact.hpp"
#include "az/modular.hpp"
#include "az/sequences.hpp"

namespace az {

enum class IdentityName {
    bb1, bb2, bb3, tauraso_bb6,
    cc3, dd3, ee3, remark_alt,
    red_cc4, red_dd, red_ee, red_remark,
};

enum class CongruenceTarget {
    thm1, thm2, thm3, conj_ee6,
    lemma_bb4, mortenson, lehmer_bb11, sign_bb10,
    bb9, dd5, dd7, h_reflect, binom_pm1,
    step_cc, step_dd, jv_reflect,
    sum_g_over_i, ee5_vanish, sun_g_pm1,
    conj_sum_g9,
};

std::span<const IdentityName> all_identity_names();
std::span<const CongruenceTarget> all_congruence_targets();

std::string to_string(IdentityName name);
std::string to_string(CongruenceTarget target);
std::optional<IdentityName> parse_identity_name(const std::string& token);
std::optional<CongruenceTarget> parse_congruence_target(const std::string& token);

/// True for cc3/dd3/ee3/remark_alt, which take the extra index i.
bool identity_takes_index(IdentityName name);

/// Modulus exponent m of the target (1 for the exact sign identity, whose
/// sides are compared as exact integers and recorded as residues mod p).
int target_modulus_exponent(CongruenceTarget target);

/// Conjectural targets: a failure is a finding rather than a regression,
/// but still counts as a failure for exit-code purposes.
bool target_is_conjecture(CongruenceTarget target);

/// Targets that quantify over an index range for each prime.
bool target_is_multi_index(CongruenceTarget target);

/// Shared read-only tables, built once per run and sized up front.
struct CheckContext {
    SequenceTable gamma;
    SequenceTable g;
    HarmonicTable harmonic;

    /// Sized for congruence sweeps with primes <= max_prime:
    /// gamma, g up to max_prime - 1 and H up to 3 (max_prime - 1).
    static CheckContext for_primes(long max_prime);

    /// Sized for identity checks with n <= max_n:
    /// gamma, g up to max_n - 1 and H up to 2 max_n.
    static CheckContext for_identities(long max_n);

    /// Test double support: add delta to a stored gamma value.
    void perturb_gamma(long index, const Int& delta);
};

struct IdentityResult {
    IdentityName name;
    long n;
    std::optional<long> i;
    Rat lhs;
    Rat rhs;
    bool holds;
};

/// Evaluates both sides exactly. Indexed identities require 0 <= i <= n-1;
/// the others reject a supplied i.
IdentityResult verify_identity(const CheckContext& ctx, IdentityName name, long n,
                               std::optional<long> i = std::nullopt);

struct CongruenceCheck {
    CongruenceTarget target;
    long p;
    int m;
    Residue lhs;
    Residue rhs;
    bool holds;
    /// For multi-index targets: smallest failing index, if any. The recorded
    /// residues belong to that index when failing, to the last index otherwise.
    std::optional<long> first_failing_index;
    bool conjecture;
};

CongruenceCheck verify_congruence(const CheckContext& ctx, CongruenceTarget target, long p);

/// One check per (target, prime in [lo, hi]), target-major, primes ascending.
/// Requires 5 <= lo <= hi and a context sized for hi. Deterministic output
/// independent of the worker count.
std::vector<CongruenceCheck> sweep(const CheckContext& ctx,
                                   std::span<const CongruenceTarget> targets,
                                   long lo, long hi, int jobs = 1);

}  // namespace az

#endif  // AZ_CHECKS_HPP
