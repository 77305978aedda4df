#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace packetmult {

/// An element of Z[zeta_e], stored as an integer combination of all e-th
/// roots of unity: value = sum_k coeffs[k] * zeta_e^k.  The representation is
/// not reduced modulo the cyclotomic polynomial; equality and integer tests
/// reduce exactly on demand.
struct Cyclotomic {
    long long order = 1;
    std::vector<long long> coeffs;  // length == order

    explicit Cyclotomic(long long e = 1) : order(e), coeffs(static_cast<size_t>(e), 0) {}

    static Cyclotomic integer(long long e, long long v);
    static Cyclotomic root(long long e, long long k, long long mult = 1);

    Cyclotomic operator+(const Cyclotomic& o) const;
    Cyclotomic operator-(const Cyclotomic& o) const;
    Cyclotomic operator*(const Cyclotomic& o) const;  // convolution mod x^e - 1
    Cyclotomic conj() const;                          // zeta^k -> zeta^{-k}
    Cyclotomic scaled(long long s) const;

    bool is_zero() const;  // zero as an element of Z[zeta_e]
    bool operator==(const Cyclotomic& o) const;

    /// If the value is a rational integer, returns it.
    std::optional<long long> as_integer() const;

    std::string to_string() const;
};

/// Coefficients of the e-th cyclotomic polynomial, low degree first (monic,
/// degree phi(e)).
std::vector<long long> cyclotomic_polynomial(long long e);

}  // namespace packetmult
