#include "tapkit/arith.hpp"

#include <algorithm>
#include <cstdlib>

#include "tapkit/chebyshev.hpp"
#include "tapkit/riley.hpp"

namespace tapkit {

bool is_prime(long n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (long d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::vector<long> prime_factors(long n) {
    std::vector<long> factors;
    for (long d = 2; d * d <= n; d == 2 ? d = 3 : d += 2) {
        if (n % d != 0) continue;
        factors.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) factors.push_back(n);
    return factors;
}

long pow_mod(long base, long exp, long mod) {
    long result = 1 % mod;
    long b = ((base % mod) + mod) % mod;
    while (exp > 0) {
        if (exp & 1) result = result * b % mod;
        b = b * b % mod;
        exp >>= 1;
    }
    return result;
}

long order_mod(long g, long p) {
    if (!is_prime(p)) throw SpecError(std::to_string(p) + " is not prime");
    if (g % p == 0) throw SpecError("order of 0 is undefined");
    long order = p - 1;
    for (long r : prime_factors(p - 1))
        while (order % r == 0 && pow_mod(g, order / r, p) == 1) order /= r;
    return order;
}

PrimeP classify_prime(long p) {
    PrimeP result;
    result.p = p;
    result.order_of_2 = order_mod(2, p);
    result.primitive = result.order_of_2 == p - 1;
    return result;
}

bool is_primitive_root(long g, long p) {
    if (!is_prime(p)) throw SpecError(std::to_string(p) + " is not prime");
    if (g < 1 || g > p - 1) throw SpecError("primitive root candidate out of range");
    return order_mod(g, p) == p - 1;
}

bool in_p2(long p) {
    if (p == 2 || !is_prime(p)) throw SpecError(std::to_string(p) + " is not an odd prime");
    return is_primitive_root(2, p);
}

bool in_p2_or_false(long p) {
    return p > 2 && is_prime(p) && is_primitive_root(2, p);
}

bool sophie_germain_sufficient(long p) {
    if (!is_prime(p) || p == 2) throw SpecError(std::to_string(p) + " is not an odd prime");
    long q = (p - 1) / 2;
    return p == 2 * q + 1 && is_prime(q) && q % 4 == 1;
}

std::vector<long> p2_primes_up_to(long max) {
    std::vector<long> out;
    for (long p = 3; p <= max; p += 2)
        if (is_prime(p) && is_primitive_root(2, p)) out.push_back(p);
    return out;
}

bool gf2_irreducible(const GF2Poly& f) {
    const long d = f.degree();
    if (d < 1) throw SpecError("irreducibility needs degree >= 1");
    if (d == 1) return true;
    if (!f.bit(0)) return false;  // divisible by y
    // f | y^(2^d) - y
    GF2Poly frob = GF2Poly::pow2_frobenius(f, static_cast<unsigned>(d));
    if (frob + GF2Poly::monomial(1).mod(f) != GF2Poly())
        return false;
    // gcd(f, y^(2^(d/r)) - y) = 1 for every prime r | d
    for (long r : prime_factors(d)) {
        GF2Poly sub = GF2Poly::pow2_frobenius(f, static_cast<unsigned>(d / r));
        GF2Poly g = GF2Poly::gcd(f, sub + GF2Poly::monomial(1).mod(f));
        if (g.degree() != 0) return false;
    }
    return true;
}

bool gf2_irreducible_bruteforce(const GF2Poly& f) {
    const long d = f.degree();
    if (d < 1) throw SpecError("irreducibility needs degree >= 1");
    if (d == 1) return true;
    for (long dd = 1; dd <= d / 2; ++dd) {
        // all polynomials of degree dd: top bit set, dd low bits free
        for (unsigned long low = 0; low < (1ul << dd); ++low) {
            std::vector<bool> bits(dd + 1, false);
            bits[dd] = true;
            for (long i = 0; i < dd; ++i) bits[i] = (low >> i) & 1;
            if (f.mod(GF2Poly(std::move(bits))).is_zero()) return false;
        }
    }
    return true;
}

GF2Poly cyclotomic_gf2(long p) {
    if (p == 2 || !is_prime(p)) throw SpecError(std::to_string(p) + " is not an odd prime");
    return GF2Poly::all_ones(static_cast<std::size_t>(p - 1));
}

GF2Poly chebyshev_sum_mod2(long d) {
    const IntPoly y = IntPoly::variable();
    return mod2_reduce(cheb_s(d, y) + cheb_s(d - 1, y));
}

bool chebyshev_cyclotomic_bridge(long d) {
    if (d < 1) throw SpecError("bridge identity needs d >= 1");
    // u^d g(u + u^-1) = sum_j g_j u^{d-j} (u^2 + 1)^j over GF(2)
    const GF2Poly g = chebyshev_sum_mod2(d);
    const GF2Poly u2p1 = GF2Poly::monomial(2) + GF2Poly(1);
    GF2Poly substituted;
    GF2Poly power(1);
    for (long j = 0; j <= g.degree(); ++j) {
        if (g.bit(static_cast<std::size_t>(j)))
            substituted += GF2Poly::monomial(static_cast<std::size_t>(d - j)) * power;
        power *= u2p1;
    }
    const GF2Poly lhs = (GF2Poly::monomial(1) + GF2Poly(1)) * substituted;
    const GF2Poly rhs = GF2Poly::monomial(static_cast<std::size_t>(2 * d + 1)) + GF2Poly(1);
    return lhs == rhs;
}

bool riley_mod2_check(const KnotSpec& spec) {
    const IntPoly phi = riley_parabolic(spec);
    if (phi.degree() < 1) throw SpecError(spec.name() + " has constant phi(2,y)");
    return mod2_reduce(phi) == chebyshev_sum_mod2(phi.degree());
}

ZIrreducibilityReport z_irreducibility_report(const KnotSpec& spec) {
    if (!spec.is_double_twist() || spec.as_double_twist().k % 2 != 0)
        throw SpecError("Z-irreducibility report covers J(2m,2n) only");
    const long m = spec.as_double_twist().k / 2;
    const long n = spec.as_double_twist().n;
    ZIrreducibilityReport report;
    report.p = std::labs(4 * m * n - 1);
    report.p_prime = is_prime(report.p) && report.p > 2;
    report.p_in_p2 = in_p2_or_false(report.p);
    const IntPoly phi = riley_parabolic(spec);
    report.irreducible_mod2 = gf2_irreducible(mod2_reduce(phi));
    report.implies_z_irreducible = report.irreducible_mod2 && phi.leading() == 1;
    return report;
}

}  // namespace tapkit
