#pragma once

#include <vector>

#include "packetmult/padic.hpp"  // BigInt

namespace packetmult {

using BigMat = std::vector<std::vector<BigInt>>;  // row-major

/// Diagonalization U*A*V = D over Z/n with U, V invertible mod n.  Only the
/// diagonal and V are returned (enough to describe the kernel mod n).
struct ModDiag {
    std::vector<long long> diag;             // entries in [0, n)
    std::vector<std::vector<long long>> v;   // m x m, invertible mod n
};
ModDiag diagonalize_mod(std::vector<std::vector<long long>> a, long long n);

/// Column-style Hermite basis of the lattice spanned by the columns of `a`
/// (m rows).  Requires full rank m; returns an m x m lower-triangular basis
/// with positive diagonal.
BigMat column_hermite_basis(const BigMat& a);

/// Smith normal form over Z.  diag holds the invariant factors (nonnegative,
/// each dividing the next).  When track_uinv is set, uinv satisfies
/// a = uinv * D * (column transform), i.e. the columns of uinv are a basis
/// adapted to the diagonal.
struct IntSnf {
    std::vector<BigInt> diag;
    BigMat uinv;  // rows x rows
};
IntSnf smith_normal_form(BigMat a, bool track_uinv);

/// Solves lower-triangular h * x = b exactly over Z; throws on non-integral
/// solutions.
std::vector<BigInt> solve_lower_triangular(const BigMat& h, const std::vector<BigInt>& b);

}  // namespace packetmult
