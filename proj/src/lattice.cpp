#include "packetmult/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace packetmult {

namespace {

// Extended gcd: returns g >= 0 with u*a + v*b == g.
long long ext_gcd(long long a, long long b, long long& u, long long& v) {
    if (b == 0) {
        u = (a < 0) ? -1 : 1;
        v = 0;
        return a < 0 ? -a : a;
    }
    long long u1, v1;
    long long g = ext_gcd(b, a % b, u1, v1);
    u = v1;
    v = u1 - (a / b) * v1;
    return g;
}

BigInt big_ext_gcd(const BigInt& a, const BigInt& b, BigInt& u, BigInt& v) {
    if (b == 0) {
        u = (a < 0) ? -1 : 1;
        v = 0;
        return a < 0 ? BigInt(-a) : a;
    }
    BigInt u1, v1;
    BigInt g = big_ext_gcd(b, a % b, u1, v1);
    u = v1;
    v = u1 - (a / b) * v1;
    return g;
}

long long mod_reduce(long long x, long long n) {
    long long r = x % n;
    return r < 0 ? r + n : r;
}

}  // namespace

ModDiag diagonalize_mod(std::vector<std::vector<long long>> a, long long n) {
    if (n < 1) throw std::invalid_argument("modulus must be positive");
    size_t rows = a.size();
    size_t m = rows ? a[0].size() : 0;
    for (auto& row : a)
        for (auto& x : row) x = mod_reduce(x, n);

    ModDiag out;
    out.v.assign(m, std::vector<long long>(m, 0));
    for (size_t j = 0; j < m; ++j) out.v[j][j] = 1;

    // Unimodular 2x2 Bezout combination of rows i1, i2 putting the gcd at
    // (i1, t) and zero at (i2, t).
    // Combine rows/columns so the pivot entry becomes the gcd and the other
    // entry becomes zero.  When the pivot already divides the other entry the
    // transform must be a plain elementary operation that leaves the pivot
    // row/column fixed (the generic Bezout coefficients would swap them and
    // the clearing alternation would never terminate).
    auto row_bezout = [&](size_t i1, size_t i2, size_t t) {
        long long p = a[i1][t], q = a[i2][t];
        if (p != 0 && q % p == 0) {
            long long c = q / p;
            for (size_t j = t; j < m; ++j)
                a[i2][j] = mod_reduce(a[i2][j] - c % n * a[i1][j], n);
            return;
        }
        long long u, v;
        long long g = ext_gcd(p, q, u, v);
        long long p1 = p / g, q1 = q / g;
        for (size_t j = t; j < m; ++j) {
            __int128 x = a[i1][j], y = a[i2][j];
            long long nx = static_cast<long long>(
                (static_cast<__int128>(u) * x + static_cast<__int128>(v) * y) % n);
            long long ny = static_cast<long long>(
                (static_cast<__int128>(p1) * y - static_cast<__int128>(q1) * x) % n);
            a[i1][j] = mod_reduce(nx, n);
            a[i2][j] = mod_reduce(ny, n);
        }
    };
    auto col_bezout = [&](size_t j1, size_t j2, size_t t) {
        long long p = a[t][j1], q = a[t][j2];
        if (p != 0 && q % p == 0) {
            long long c = (q / p) % n;
            for (size_t i = t; i < rows; ++i) a[i][j2] = mod_reduce(a[i][j2] - c * a[i][j1], n);
            for (size_t i = 0; i < m; ++i)
                out.v[i][j2] = mod_reduce(out.v[i][j2] - c * out.v[i][j1], n);
            return;
        }
        long long u, v;
        long long g = ext_gcd(p, q, u, v);
        long long p1 = p / g, q1 = q / g;
        for (size_t i = t; i < rows; ++i) {
            __int128 x = a[i][j1], y = a[i][j2];
            long long nx = static_cast<long long>(
                (static_cast<__int128>(u) * x + static_cast<__int128>(v) * y) % n);
            long long ny = static_cast<long long>(
                (static_cast<__int128>(p1) * y - static_cast<__int128>(q1) * x) % n);
            a[i][j1] = mod_reduce(nx, n);
            a[i][j2] = mod_reduce(ny, n);
        }
        for (size_t i = 0; i < m; ++i) {
            __int128 x = out.v[i][j1], y = out.v[i][j2];
            long long nx = static_cast<long long>(
                (static_cast<__int128>(u) * x + static_cast<__int128>(v) * y) % n);
            long long ny = static_cast<long long>(
                (static_cast<__int128>(p1) * y - static_cast<__int128>(q1) * x) % n);
            out.v[i][j1] = mod_reduce(nx, n);
            out.v[i][j2] = mod_reduce(ny, n);
        }
    };

    size_t limit = std::min(rows, m);
    for (size_t t = 0; t < limit; ++t) {
        // find a nonzero pivot in the trailing submatrix
        size_t pi = rows, pj = m;
        for (size_t i = t; i < rows && pi == rows; ++i)
            for (size_t j = t; j < m; ++j)
                if (a[i][j] != 0) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi == rows) {
            out.diag.resize(limit, 0);
            return out;
        }
        if (pi != t) std::swap(a[pi], a[t]);
        if (pj != t) {
            for (size_t i = 0; i < rows; ++i) std::swap(a[i][pj], a[i][t]);
            for (size_t i = 0; i < m; ++i) std::swap(out.v[i][pj], out.v[i][t]);
        }
        // alternate row/column clearing until both the pivot row and column
        // are zero off the diagonal
        for (;;) {
            bool touched = false;
            for (size_t i = t + 1; i < rows; ++i)
                if (a[i][t] != 0) {
                    row_bezout(t, i, t);
                    touched = true;
                }
            bool row_dirty = false;
            for (size_t j = t + 1; j < m; ++j)
                if (a[t][j] != 0) {
                    col_bezout(t, j, t);
                    row_dirty = true;
                }
            if (!row_dirty && !touched) break;
            if (!row_dirty) {
                bool col_dirty = false;
                for (size_t i = t + 1; i < rows; ++i)
                    if (a[i][t] != 0) col_dirty = true;
                if (!col_dirty) break;
            }
        }
        out.diag.push_back(a[t][t]);
    }
    out.diag.resize(limit, 0);
    return out;
}

BigMat column_hermite_basis(const BigMat& a) {
    size_t m = a.size();
    size_t c = m ? a[0].size() : 0;
    // store as columns
    std::vector<std::vector<BigInt>> cols(c, std::vector<BigInt>(m));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < c; ++j) cols[j][i] = a[i][j];

    size_t piv = 0;  // next pivot slot
    for (size_t r = 0; r < m; ++r) {
        // combine all columns >= piv so that only cols[piv] has a nonzero
        // entry in row r
        size_t lead = c;
        for (size_t j = piv; j < c; ++j)
            if (cols[j][r] != 0) {
                lead = j;
                break;
            }
        if (lead == c) throw std::logic_error("column lattice is not full rank");
        std::swap(cols[piv], cols[lead]);
        for (size_t j = piv + 1; j < c; ++j) {
            if (cols[j][r] == 0) continue;
            BigInt u, v;
            BigInt g = big_ext_gcd(cols[piv][r], cols[j][r], u, v);
            BigInt p1 = cols[piv][r] / g, q1 = cols[j][r] / g;
            for (size_t i = r; i < m; ++i) {
                BigInt x = cols[piv][i], y = cols[j][i];
                cols[piv][i] = u * x + v * y;
                cols[j][i] = p1 * y - q1 * x;
            }
        }
        if (cols[piv][r] < 0)
            for (size_t i = r; i < m; ++i) cols[piv][i] = -cols[piv][i];
        // reduce earlier pivot columns against this one for a canonical basis
        for (size_t j = 0; j < piv; ++j) {
            BigInt q = cols[j][r] / cols[piv][r];
            if (cols[j][r] - q * cols[piv][r] < 0) q -= 1;
            if (q == 0) continue;
            for (size_t i = r; i < m; ++i) cols[j][i] -= q * cols[piv][i];
        }
        ++piv;
    }

    BigMat h(m, std::vector<BigInt>(m));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) h[i][j] = cols[j][i];
    return h;
}

IntSnf smith_normal_form(BigMat a, bool track_uinv) {
    size_t rows = a.size();
    size_t cols = rows ? a[0].size() : 0;
    IntSnf out;
    if (track_uinv) {
        out.uinv.assign(rows, std::vector<BigInt>(rows, 0));
        for (size_t i = 0; i < rows; ++i) out.uinv[i][i] = 1;
    }

    auto swap_rows = [&](size_t i, size_t j) {
        std::swap(a[i], a[j]);
        if (track_uinv)
            for (size_t k = 0; k < rows; ++k) std::swap(out.uinv[k][i], out.uinv[k][j]);
    };
    auto row_bezout = [&](size_t i1, size_t i2, size_t t) {
        BigInt p = a[i1][t], q = a[i2][t];
        if (p != 0 && q % p == 0) {
            // elementary op keeping the pivot row fixed (see diagonalize_mod)
            BigInt c = q / p;
            for (size_t j = 0; j < cols; ++j) a[i2][j] -= c * a[i1][j];
            if (track_uinv)
                for (size_t k = 0; k < rows; ++k) out.uinv[k][i1] += c * out.uinv[k][i2];
            return;
        }
        BigInt u, v;
        BigInt g = big_ext_gcd(p, q, u, v);
        BigInt p1 = p / g, q1 = q / g;
        for (size_t j = 0; j < cols; ++j) {
            BigInt x = a[i1][j], y = a[i2][j];
            a[i1][j] = u * x + v * y;
            a[i2][j] = p1 * y - q1 * x;
        }
        if (track_uinv)
            // X' = M X with M = [[u, v], [-q1, p1]]; update uinv by M^{-1} on
            // columns i1, i2: M^{-1} = [[p1, -v], [q1, u]]
            for (size_t k = 0; k < rows; ++k) {
                BigInt x = out.uinv[k][i1], y = out.uinv[k][i2];
                out.uinv[k][i1] = p1 * x + q1 * y;
                out.uinv[k][i2] = u * y - v * x;
            }
    };
    auto row_add = [&](size_t dst, size_t src, const BigInt& cmul) {
        for (size_t j = 0; j < cols; ++j) a[dst][j] += cmul * a[src][j];
        if (track_uinv)
            // row_dst += c * row_src  <=>  col_src -= c * col_dst in uinv
            for (size_t k = 0; k < rows; ++k) out.uinv[k][src] -= cmul * out.uinv[k][dst];
    };
    auto negate_row = [&](size_t i) {
        for (size_t j = 0; j < cols; ++j) a[i][j] = -a[i][j];
        if (track_uinv)
            for (size_t k = 0; k < rows; ++k) out.uinv[k][i] = -out.uinv[k][i];
    };

    size_t limit = std::min(rows, cols);
    size_t rank = 0;
    for (size_t t = 0; t < limit; ++t) {
        size_t pi = rows, pj = cols;
        for (size_t i = t; i < rows && pi == rows; ++i)
            for (size_t j = t; j < cols; ++j)
                if (a[i][j] != 0) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi == rows) break;
        if (pi != t) swap_rows(pi, t);
        if (pj != t)
            for (size_t i = 0; i < rows; ++i) std::swap(a[i][pj], a[i][t]);
        for (;;) {
            for (size_t i = t + 1; i < rows; ++i)
                if (a[i][t] != 0) row_bezout(t, i, t);
            bool row_dirty = false;
            for (size_t j = t + 1; j < cols; ++j)
                if (a[t][j] != 0) {
                    // column Bezout clearing a[t][j]
                    BigInt p = a[t][t], q = a[t][j];
                    if (p != 0 && q % p == 0) {
                        BigInt c = q / p;
                        for (size_t i = t; i < rows; ++i) a[i][j] -= c * a[i][t];
                        continue;  // pivot column untouched
                    }
                    BigInt u, v;
                    BigInt g = big_ext_gcd(p, q, u, v);
                    BigInt p1 = p / g, q1 = q / g;
                    for (size_t i = t; i < rows; ++i) {
                        BigInt x = a[i][t], y = a[i][j];
                        a[i][t] = u * x + v * y;
                        a[i][j] = p1 * y - q1 * x;
                    }
                    row_dirty = true;
                }
            bool col_dirty = false;
            for (size_t i = t + 1; i < rows; ++i)
                if (a[i][t] != 0) col_dirty = true;
            if (!row_dirty && !col_dirty) break;
        }
        if (a[t][t] < 0) negate_row(t);
        // enforce divisibility of the trailing block by the pivot
        bool redo = false;
        for (size_t i = t + 1; i < rows && !redo; ++i)
            for (size_t j = t + 1; j < cols; ++j)
                if (a[i][j] % a[t][t] != 0) {
                    row_add(t, i, 1);
                    redo = true;
                    break;
                }
        if (redo) {
            --t;
            continue;
        }
        ++rank;
    }

    out.diag.assign(limit, 0);
    for (size_t t = 0; t < rank; ++t) out.diag[t] = a[t][t];
    return out;
}

std::vector<BigInt> solve_lower_triangular(const BigMat& h, const std::vector<BigInt>& b) {
    size_t m = h.size();
    if (b.size() != m) throw std::invalid_argument("dimension mismatch");
    std::vector<BigInt> x(m, 0);
    for (size_t i = 0; i < m; ++i) {
        BigInt acc = b[i];
        for (size_t j = 0; j < i; ++j) acc -= h[i][j] * x[j];
        if (h[i][i] == 0) {
            if (acc != 0) throw std::logic_error("singular triangular system");
            x[i] = 0;
            continue;
        }
        if (acc % h[i][i] != 0) throw std::logic_error("non-integral triangular solution");
        x[i] = acc / h[i][i];
    }
    return x;
}

}  // namespace packetmult
