#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace packetmult {

using BigInt = boost::multiprecision::cpp_int;

/// Arithmetic invariants of a finite extension F of Q_p.
///
/// The residue field has q = p^f elements, e is the ramification index and
/// `wild_exponent` is the largest a such that F contains all p^a-th roots of
/// unity.  Every cardinality formula in this library depends on the field
/// only through (p, e, f, a); there is no element-level arithmetic.
struct PAdicFieldData {
    long long p = 0;
    long long e = 1;
    long long f = 1;
    long long wild_exponent = 0;

    BigInt residue_card() const;  // q = p^f

    /// Throws std::invalid_argument unless p is prime, e >= 1, f >= 1, a >= 0.
    void validate() const;

    /// Parses the compact text form "p=5,e=1,f=1,a=0".
    static PAdicFieldData parse(const std::string& text);
    std::string to_string() const;
};

/// v_F(n) = e * v_p(n), so that |n|_F = q^{-v_F(n)}.  Requires n != 0.
long long field_valuation(const PAdicFieldData& field, long long n);

/// Number of n-th roots of unity in F: gcd(n, q-1) * p^min(v_p(n), a).
/// Always divides n.
long long mu_card(const PAdicFieldData& field, long long n);

/// |F^x / (F^x)^n| = n * |mu_n(F)| * q^{v_F(n)}.
BigInt coset_card(const PAdicFieldData& field, long long n);

/// Largest A with A^2 | c.  Exact; throws std::runtime_error for inputs whose
/// square part cannot be certified by trial division, perfect-power peeling
/// and a primality test (never reached for coset cardinalities).
BigInt square_divisor_bound(const BigInt& c);

}  // namespace packetmult
