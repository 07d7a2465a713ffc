#pragma once

#include <vector>

#include "tapkit/common.hpp"
#include "tapkit/gf2poly.hpp"
#include "tapkit/intpoly.hpp"
#include "tapkit/knots.hpp"

namespace tapkit {

// Deterministic trial division; inputs stay well under 10^6 here.
bool is_prime(long n);

std::vector<long> prime_factors(long n);

long pow_mod(long base, long exp, long mod);

// Multiplicative order of g mod p (p prime), via the divisors of p-1.
long order_mod(long g, long p);

struct PrimeP {
    long p;
    long order_of_2;
    bool primitive;  // order_of_2 == p - 1
};

PrimeP classify_prime(long p);

// True iff g generates (Z/pZ)^*.
bool is_primitive_root(long g, long p);

// p in P2: 2 is a primitive root modulo the odd prime p.
bool in_p2(long p);

// Convenience for composite-tolerant callers: false unless p is an odd
// prime in P2.
bool in_p2_or_false(long p);

// p = 2q + 1 with q a prime congruent to 1 mod 4; a classical sufficient
// condition for p in P2.
bool sophie_germain_sufficient(long p);

std::vector<long> p2_primes_up_to(long max);

// Rabin irreducibility test: f (degree d >= 1) is irreducible over GF(2)
// iff f divides y^(2^d) - y and gcd(f, y^(2^(d/r)) - y) = 1 for every
// prime r dividing d.
bool gf2_irreducible(const GF2Poly& f);

// Exhaustive trial division by every polynomial of degree 1..d/2; the
// independent oracle for gf2_irreducible at small degree.
bool gf2_irreducible_bruteforce(const GF2Poly& f);

// C_p(u) = u^{p-1} + ... + u + 1 over GF(2).
GF2Poly cyclotomic_gf2(long p);

// Verifies (1+u) u^d (S_d + S_{d-1})(u + u^-1) = 1 + u^{2d+1} in GF(2)[u],
// the substitution step connecting the mod-2 Riley polynomial to C_{2d+1}.
bool chebyshev_cyclotomic_bridge(long d);

// S_d(y) + S_{d-1}(y) reduced mod 2, d = deg phi.
GF2Poly chebyshev_sum_mod2(long d);

// phi_K(2,y) = S_d + S_{d-1} in GF(2)[y], d = deg phi.
bool riley_mod2_check(const KnotSpec& spec);

struct ZIrreducibilityReport {
    long p;                    // |4mn - 1|
    bool p_prime;
    bool p_in_p2;
    bool irreducible_mod2;     // observed via the Rabin test
    bool implies_z_irreducible;  // mod-2 irreducible and monic over Z
};

// For J(2m,2n): the mod-2 route to Z-irreducibility of phi(2,y).
ZIrreducibilityReport z_irreducibility_report(const KnotSpec& spec);

}  // namespace tapkit
