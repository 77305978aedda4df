#include "packetmult/cohomology.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "packetmult/lattice.hpp"

namespace packetmult {

bool Cocycle2::is_cocycle(const FiniteGroup& s) const {
    int sn = s.order();
    if (table.size() != static_cast<size_t>(sn) * sn) return false;
    auto c = [&](int a, int b) { return table[static_cast<size_t>(a) * sn + b]; };
    for (int a = 0; a < sn; ++a)
        for (int b = 0; b < sn; ++b)
            for (int x = 0; x < sn; ++x) {
                long long lhs = c(a, b) + c(s.mul(a, b), x);
                long long rhs = c(b, x) + c(a, s.mul(b, x));
                if ((lhs - rhs) % n != 0) return false;
            }
    return true;
}

bool Cocycle2::is_normalized(const FiniteGroup& s) const {
    int sn = s.order();
    int e = s.identity();
    auto c = [&](int a, int b) { return table[static_cast<size_t>(a) * sn + b]; };
    for (int x = 0; x < sn; ++x)
        if (c(e, x) % n != 0 || c(x, e) % n != 0) return false;
    return true;
}

CentralExtension make_central_extension(const FiniteGroup& total,
                                        const std::vector<int>& central_subgroup) {
    std::vector<int> sorted = central_subgroup;
    std::sort(sorted.begin(), sorted.end());
    if (!total.is_subgroup(sorted)) throw std::invalid_argument("not a subgroup");
    if (!total.is_central_subset(sorted)) throw std::invalid_argument("subgroup is not central");
    auto gen = total.cyclic_generator(sorted);
    if (!gen) throw std::invalid_argument("central subgroup is not cyclic");
    long long n = static_cast<long long>(sorted.size());
    std::vector<int> powers;
    powers.reserve(sorted.size());
    for (long long z = 0; z < n; ++z) powers.push_back(total.power(*gen, z));
    std::vector<int> proj;
    FiniteGroup quot = total.quotient(sorted, &proj);
    return CentralExtension{total, n, powers, *gen, quot, proj};
}

CohomologyGroup second_cohomology(const FiniteGroup& s, long long n) {
    if (s.order() > 16) throw std::invalid_argument("base group too large (limit 16)");
    if (n < 1 || n > 6) throw std::invalid_argument("coefficient modulus out of range (1..6)");
    int sn = s.order();
    size_t m = static_cast<size_t>(sn) * sn;
    CohomologyGroup out;
    if (n == 1) return out;

    auto idx = [&](int a, int b) { return static_cast<size_t>(a) * sn + b; };

    // cocycle equations c(a,b) + c(ab,x) - c(b,x) - c(a,bx) = 0 mod n
    std::set<std::vector<long long>> rowset;
    for (int a = 0; a < sn; ++a)
        for (int b = 0; b < sn; ++b)
            for (int x = 0; x < sn; ++x) {
                std::vector<long long> row(m, 0);
                row[idx(a, b)] += 1;
                row[idx(s.mul(a, b), x)] += 1;
                row[idx(b, x)] -= 1;
                row[idx(a, s.mul(b, x))] -= 1;
                for (auto& v : row) v = ((v % n) + n) % n;
                if (std::any_of(row.begin(), row.end(), [](long long v) { return v != 0; }))
                    rowset.insert(std::move(row));
            }
    std::vector<std::vector<long long>> rows(rowset.begin(), rowset.end());

    ModDiag md = diagonalize_mod(rows, n);

    // kernel lattice Z^m generators: (n/gcd(d_i, n)) * V[:,i] together with n*e_j
    BigMat gk(m, std::vector<BigInt>(2 * m, 0));
    for (size_t i = 0; i < m; ++i) {
        long long d = (i < md.diag.size()) ? md.diag[i] : 0;
        long long mi = n / std::gcd(d, n);
        for (size_t r = 0; r < m; ++r) gk[r][i] = BigInt(mi) * md.v[r][i];
        gk[i][m + i] = n;
    }
    BigMat h = column_hermite_basis(gk);

    // coboundary lattice generators in the same coordinates
    size_t bcols = static_cast<size_t>(sn) + m;
    BigMat x(m, std::vector<BigInt>(bcols, 0));
    for (int t = 0; t < sn; ++t) {
        std::vector<BigInt> col(m, 0);
        for (int a = 0; a < sn; ++a)
            for (int b = 0; b < sn; ++b) {
                long long v = 0;
                if (a == t) v += 1;
                if (b == t) v += 1;
                if (s.mul(a, b) == t) v -= 1;
                col[idx(a, b)] = v;
            }
        auto sol = solve_lower_triangular(h, col);
        for (size_t r = 0; r < m; ++r) x[r][t] = sol[r];
    }
    for (size_t j = 0; j < m; ++j) {
        std::vector<BigInt> col(m, 0);
        col[j] = n;
        auto sol = solve_lower_triangular(h, col);
        for (size_t r = 0; r < m; ++r) x[r][sn + j] = sol[r];
    }

    IntSnf snf = smith_normal_form(x, /*track_uinv=*/true);

    // adapted basis of the kernel lattice: columns of h * uinv
    BigMat basis(m, std::vector<BigInt>(m, 0));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) {
            BigInt acc = 0;
            for (size_t k = 0; k < m; ++k) acc += h[i][k] * snf.uinv[k][j];
            basis[i][j] = acc;
        }

    out.order = 1;
    for (size_t i = 0; i < snf.diag.size(); ++i) {
        if (snf.diag[i] == 0) throw std::logic_error("coboundary lattice has infinite index");
        long long f = snf.diag[i].convert_to<long long>();
        if (f <= 1) continue;
        out.order *= f;
        out.invariant_factors.push_back(f);
        std::vector<long long> gen(m, 0);
        for (size_t r = 0; r < m; ++r) {
            BigInt red = basis[r][i] % n;
            if (red < 0) red += n;
            gen[r] = red.convert_to<long long>();
        }
        out.generator_cocycles.push_back(std::move(gen));
    }
    return out;
}

std::vector<Cocycle2> cocycle_class_representatives(const FiniteGroup& s, long long n) {
    CohomologyGroup h2 = second_cohomology(s, n);
    int sn = s.order();
    size_t m = static_cast<size_t>(sn) * sn;
    size_t k = h2.invariant_factors.size();
    std::vector<long long> tuple(k, 0);
    std::vector<Cocycle2> out;
    for (;;) {
        Cocycle2 c;
        c.n = n;
        c.table.assign(m, 0);
        for (size_t i = 0; i < k; ++i)
            for (size_t r = 0; r < m; ++r)
                c.table[r] = (c.table[r] + tuple[i] * h2.generator_cocycles[i][r]) % n;
        // normalize so that c(e, x) = c(x, e) = 0
        long long shift = c.table[static_cast<size_t>(s.identity()) * sn + s.identity()];
        for (auto& v : c.table) v = ((v - shift) % n + n) % n;
        if (!c.is_cocycle(s) || !c.is_normalized(s))
            throw std::logic_error("generated table is not a normalized cocycle");
        out.push_back(std::move(c));
        // odometer, last coordinate fastest
        size_t pos = k;
        while (pos > 0) {
            --pos;
            if (++tuple[pos] < h2.invariant_factors[pos]) break;
            tuple[pos] = 0;
            if (pos == 0) return out;
        }
        if (k == 0) return out;
    }
}

CentralExtension extension_from_cocycle(const FiniteGroup& s, const Cocycle2& c, int cap) {
    long long n = c.n;
    int sn = s.order();
    if (!c.is_cocycle(s)) throw std::invalid_argument("table is not a 2-cocycle");
    if (!c.is_normalized(s)) throw std::invalid_argument("cocycle is not normalized");
    long long total_order = static_cast<long long>(sn) * n;
    if (total_order > cap) throw std::invalid_argument("extension exceeds order cap");
    int N = static_cast<int>(total_order);
    auto idx = [&](int se, long long z) { return static_cast<int>(se * n + z); };
    std::vector<int> mul(static_cast<size_t>(N) * N);
    for (int s1 = 0; s1 < sn; ++s1)
        for (long long z1 = 0; z1 < n; ++z1)
            for (int s2 = 0; s2 < sn; ++s2)
                for (long long z2 = 0; z2 < n; ++z2) {
                    long long z = (z1 + z2 + c.table[static_cast<size_t>(s1) * sn + s2]) % n;
                    mul[static_cast<size_t>(idx(s1, z1)) * N + idx(s2, z2)] = idx(s.mul(s1, s2), z);
                }
    std::ostringstream label;
    label << "ext(" << (s.label().empty() ? "S" : s.label()) << ",n=" << n << ")";
    FiniteGroup total(N, std::move(mul), idx(s.identity(), 0), label.str(), cap);
    std::vector<int> central;
    central.reserve(static_cast<size_t>(n));
    for (long long z = 0; z < n; ++z) central.push_back(idx(s.identity(), z));
    std::vector<int> proj(static_cast<size_t>(N));
    for (int se = 0; se < sn; ++se)
        for (long long z = 0; z < n; ++z) proj[static_cast<size_t>(idx(se, z))] = se;
    return CentralExtension{std::move(total), n, std::move(central),
                            idx(s.identity(), 1 % n), s, std::move(proj)};
}

std::vector<CentralExtension> enumerate_central_extensions(const FiniteGroup& s, long long n,
                                                           int cap) {
    if (static_cast<long long>(s.order()) * n > cap)
        throw std::invalid_argument("extension order exceeds cap");
    std::vector<CentralExtension> kept;
    for (const auto& c : cocycle_class_representatives(s, n)) {
        CentralExtension ext = extension_from_cocycle(s, c, cap);
        std::vector<int> sub = ext.central_subgroup;
        std::sort(sub.begin(), sub.end());
        bool dup = false;
        for (const auto& k : kept) {
            std::vector<int> ksub = k.central_subgroup;
            std::sort(ksub.begin(), ksub.end());
            if (isomorphic_with_subgroup(ext.total, sub, k.total, ksub)) {
                dup = true;
                break;
            }
        }
        if (!dup) kept.push_back(std::move(ext));
    }
    return kept;
}

FiniteGroup generalized_quaternion(long long order_4k, int cap) {
    if (order_4k < 8 || order_4k % 4 != 0)
        throw std::invalid_argument("generalized quaternion order must be 4k, k >= 2");
    long long k = order_4k / 4;
    long long cyc = 2 * k;  // order of the distinguished cyclic subgroup <a>
    int N = static_cast<int>(order_4k);
    auto idx = [&](long long i, long long j) {
        return static_cast<int>(j * cyc + ((i % cyc) + cyc) % cyc);
    };
    std::vector<int> mul(static_cast<size_t>(N) * N);
    for (long long i1 = 0; i1 < cyc; ++i1)
        for (long long j1 = 0; j1 < 2; ++j1)
            for (long long i2 = 0; i2 < cyc; ++i2)
                for (long long j2 = 0; j2 < 2; ++j2) {
                    // (a^i1 b^j1)(a^i2 b^j2), using b a = a^-1 b, b^2 = a^k
                    int r;
                    if (j1 == 0)
                        r = idx(i1 + i2, j2);
                    else if (j2 == 0)
                        r = idx(i1 - i2, 1);
                    else
                        r = idx(i1 - i2 + k, 0);
                    mul[static_cast<size_t>(idx(i1, j1)) * N + idx(i2, j2)] = r;
                }
    std::ostringstream label;
    label << "Q" << order_4k;
    return FiniteGroup(N, std::move(mul), idx(0, 0), label.str(), cap);
}

namespace {

// SL(2, q) as an explicit table, for tiny prime q.
FiniteGroup sl2_over(int q, const std::string& label, int cap) {
    std::vector<std::array<int, 4>> elems;
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b)
            for (int c = 0; c < q; ++c)
                for (int d = 0; d < q; ++d)
                    if (((a * d - b * c) % q + q) % q == 1) elems.push_back({a, b, c, d});
    std::map<std::array<int, 4>, int> index;
    for (size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<int>(i);
    int N = static_cast<int>(elems.size());
    std::vector<int> mul(static_cast<size_t>(N) * N);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            const auto& x = elems[i];
            const auto& y = elems[j];
            std::array<int, 4> z = {(x[0] * y[0] + x[1] * y[2]) % q, (x[0] * y[1] + x[1] * y[3]) % q,
                                    (x[2] * y[0] + x[3] * y[2]) % q, (x[2] * y[1] + x[3] * y[3]) % q};
            mul[static_cast<size_t>(i) * N + j] = index.at(z);
        }
    return FiniteGroup(N, std::move(mul), index.at({1, 0, 0, 1}), label, cap);
}

// Coefficient (x + y*sqrt(2)) / 2 with integer x, y; enough to express every
// element of the binary octahedral group as a unit quaternion.
struct HalfRt2 {
    long long x = 0, y = 0;
    bool operator<(const HalfRt2& o) const { return std::tie(x, y) < std::tie(o.x, o.y); }
    bool operator==(const HalfRt2& o) const { return x == o.x && y == o.y; }
};

using Quat = std::array<HalfRt2, 4>;

Quat quat_mul(const Quat& p, const Quat& q) {
    // accumulate numerators over denominator 4, then halve exactly
    long long rx[4] = {0, 0, 0, 0}, ry[4] = {0, 0, 0, 0};
    static const int sign[4][4] = {
        {+1, -1, -1, -1}, {+1, +1, +1, -1}, {+1, -1, +1, +1}, {+1, +1, -1, +1}};
    static const int pick[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    for (int out = 0; out < 4; ++out)
        for (int a = 0; a < 4; ++a) {
            int b = pick[out][a];
            const HalfRt2& u = p[a];
            const HalfRt2& v = q[b];
            rx[out] += sign[out][a] * (u.x * v.x + 2 * u.y * v.y);
            ry[out] += sign[out][a] * (u.x * v.y + u.y * v.x);
        }
    Quat r;
    for (int out = 0; out < 4; ++out) {
        if (rx[out] % 2 != 0 || ry[out] % 2 != 0)
            throw std::logic_error("quaternion product left the coefficient lattice");
        r[out] = HalfRt2{rx[out] / 2, ry[out] / 2};
    }
    return r;
}

FiniteGroup quaternion_closure(const std::vector<Quat>& gens, const std::string& label, int cap) {
    std::vector<Quat> elems;
    std::map<Quat, int> index;
    Quat one{HalfRt2{2, 0}, HalfRt2{0, 0}, HalfRt2{0, 0}, HalfRt2{0, 0}};
    elems.push_back(one);
    index[one] = 0;
    for (size_t head = 0; head < elems.size(); ++head) {
        for (const auto& g : gens) {
            Quat next = quat_mul(elems[head], g);
            if (index.emplace(next, static_cast<int>(elems.size())).second) elems.push_back(next);
            if (elems.size() > static_cast<size_t>(cap))
                throw std::invalid_argument("quaternion closure exceeds order cap");
        }
    }
    int N = static_cast<int>(elems.size());
    std::vector<int> mul(static_cast<size_t>(N) * N);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            mul[static_cast<size_t>(i) * N + j] = index.at(quat_mul(elems[i], elems[j]));
    return FiniteGroup(N, std::move(mul), 0, label, cap);
}

}  // namespace

FiniteGroup binary_tetrahedral(int cap) { return sl2_over(3, "2T", cap); }

FiniteGroup binary_icosahedral(int cap) { return sl2_over(5, "2I", cap); }

FiniteGroup binary_octahedral(int cap) {
    Quat qi{HalfRt2{0, 0}, HalfRt2{2, 0}, HalfRt2{0, 0}, HalfRt2{0, 0}};
    Quat qj{HalfRt2{0, 0}, HalfRt2{0, 0}, HalfRt2{2, 0}, HalfRt2{0, 0}};
    Quat w{HalfRt2{1, 0}, HalfRt2{1, 0}, HalfRt2{1, 0}, HalfRt2{1, 0}};  // (1+i+j+k)/2
    Quat s{HalfRt2{0, 1}, HalfRt2{0, 1}, HalfRt2{0, 0}, HalfRt2{0, 0}};  // (1+i)/sqrt(2)
    return quaternion_closure({qi, qj, w, s}, "2O", cap);
}

bool sl2_finite_subgroup_check(const FiniteGroup& a, int cap) {
    if (a.is_cyclic()) return true;
    int involutions = 0;
    for (int x = 0; x < a.order(); ++x)
        if (a.element_order(x) == 2) ++involutions;
    if (involutions != 1) return false;
    long long n = a.order();
    if (n % 4 == 0 && n >= 8 && n <= cap && isomorphic(a, generalized_quaternion(n, cap)))
        return true;
    if (n == 24 && isomorphic(a, binary_tetrahedral(cap))) return true;
    if (n == 48 && isomorphic(a, binary_octahedral(cap))) return true;
    if (n == 120 && isomorphic(a, binary_icosahedral(cap))) return true;
    return false;
}

}  // namespace packetmult
