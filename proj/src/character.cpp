#include "packetmult/character.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "packetmult/numutil.hpp"

namespace packetmult {

namespace {

using u64 = std::uint64_t;

u64 mulmod(u64 a, u64 b, u64 p) { return a * b % p; }

u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

long long find_dixon_prime(long long e, long long order) {
    for (long long p = e + 1;; p += e)
        if (p > 2 * order && is_prime(p)) return p;
}

u64 primitive_root(u64 p) {
    std::vector<u64> prime_factors;
    u64 m = p - 1;
    for (u64 d = 2; d * d <= m; ++d)
        if (m % d == 0) {
            prime_factors.push_back(d);
            while (m % d == 0) m /= d;
        }
    if (m > 1) prime_factors.push_back(m);
    for (u64 g = 2; g < p; ++g) {
        bool ok = true;
        for (u64 r : prime_factors)
            if (powmod(g, (p - 1) / r, p) == 1) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
    throw std::logic_error("no primitive root found");
}

using Vec = std::vector<u64>;
using Mat = std::vector<Vec>;

// Reduced row echelon form; returns pivot column per row.
std::vector<int> rref(Mat& m, u64 p) {
    std::vector<int> pivots;
    size_t rows = m.size();
    if (rows == 0) return pivots;
    size_t cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t pr = r;
        while (pr < rows && m[pr][c] == 0) ++pr;
        if (pr == rows) continue;
        std::swap(m[r], m[pr]);
        u64 inv = invmod(m[r][c], p);
        for (size_t j = c; j < cols; ++j) m[r][j] = mulmod(m[r][j], inv, p);
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            u64 f = m[i][c];
            for (size_t j = c; j < cols; ++j)
                m[i][j] = (m[i][j] + p - mulmod(f, m[r][j], p)) % p;
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    m.resize(r);
    return pivots;
}

// Basis of the right nullspace of m (columns cols), deterministic.
Mat nullspace(Mat m, u64 p) {
    size_t cols = m.empty() ? 0 : m[0].size();
    std::vector<int> pivots = rref(m, p);
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;
    Mat basis;
    for (size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        Vec v(cols, 0);
        v[free_col] = 1;
        for (size_t r = 0; r < pivots.size(); ++r) {
            u64 val = m[r][free_col];
            if (val) v[pivots[r]] = p - val;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

// Characteristic polynomial of a over GF(p) via Hessenberg reduction;
// coefficients low degree first, monic.
Vec charpoly(Mat a, u64 p) {
    size_t n = a.size();
    for (size_t j = 0; j + 2 < n; ++j) {
        size_t piv = j + 1;
        while (piv < n && a[piv][j] == 0) ++piv;
        if (piv == n) continue;
        if (piv != j + 1) {
            std::swap(a[piv], a[j + 1]);
            for (size_t i = 0; i < n; ++i) std::swap(a[i][piv], a[i][j + 1]);
        }
        u64 inv = invmod(a[j + 1][j], p);
        for (size_t i = j + 2; i < n; ++i) {
            u64 f = mulmod(a[i][j], inv, p);
            if (!f) continue;
            for (size_t c = 0; c < n; ++c)
                a[i][c] = (a[i][c] + p - mulmod(f, a[j + 1][c], p)) % p;
            for (size_t r = 0; r < n; ++r)
                a[r][j + 1] = (a[r][j + 1] + mulmod(f, a[r][i], p)) % p;
        }
    }
    // det(xI - H) for the upper Hessenberg H, by the leading-principal-minor
    // recurrence.
    std::vector<Vec> poly(n + 1);
    poly[0] = {1};
    for (size_t m = 1; m <= n; ++m) {
        Vec q(m + 1, 0);
        u64 diag = a[m - 1][m - 1] % p;
        for (size_t t = 0; t < poly[m - 1].size(); ++t) {
            q[t + 1] = (q[t + 1] + poly[m - 1][t]) % p;
            q[t] = (q[t] + p - mulmod(diag, poly[m - 1][t], p)) % p;
        }
        u64 prod = 1;
        for (size_t k = 1; k < m; ++k) {
            prod = mulmod(prod, a[m - k][m - k - 1], p);
            if (!prod) break;
            u64 coeff = mulmod(a[m - 1 - k][m - 1], prod, p);
            if (!coeff) continue;
            for (size_t t = 0; t < poly[m - 1 - k].size(); ++t)
                q[t] = (q[t] + p - mulmod(coeff, poly[m - 1 - k][t], p)) % p;
        }
        poly[m] = std::move(q);
    }
    return poly[n];
}

}  // namespace

std::vector<long long> CharacterTable::degrees() const {
    std::vector<long long> out;
    out.reserve(characters.size());
    for (const auto& chi : characters) out.push_back(chi.degree);
    return out;
}

Cyclotomic CharacterTable::inner_product_times_order(size_t i, size_t j) const {
    Cyclotomic sum(exponent);
    for (size_t c = 0; c < classes.size(); ++c)
        sum = sum + (characters[i].values[c] * characters[j].values[c].conj())
                        .scaled(classes[c].size);
    return sum;
}

void CharacterTable::verify() const {
    if (characters.size() != classes.size())
        throw std::logic_error("character count != class count");
    long long sq = 0;
    for (const auto& chi : characters) sq += chi.degree * chi.degree;
    if (sq != group_order) throw std::logic_error("sum of squared degrees != group order");
    for (size_t i = 0; i < characters.size(); ++i)
        for (size_t j = i; j < characters.size(); ++j) {
            auto val = inner_product_times_order(i, j).as_integer();
            long long want = i == j ? group_order : 0;
            if (!val || *val != want)
                throw std::logic_error("row orthogonality failed at (" + std::to_string(i) +
                                       "," + std::to_string(j) + ")");
        }
}

CharacterTable character_table(const FiniteGroup& g, int cap) {
    if (g.order() > cap)
        throw std::invalid_argument("character_table: group order exceeds cap");
    const int n = g.order();
    auto class_lists = g.conjugacy_classes();
    const size_t k = class_lists.size();
    std::vector<int> class_of(n, -1);
    for (size_t c = 0; c < k; ++c)
        for (int x : class_lists[c]) class_of[x] = static_cast<int>(c);

    const long long e = g.exponent();
    const u64 p = static_cast<u64>(find_dixon_prime(e, n));

    // class sum matrix for class i: entry (j, t) counts x in C_i with
    // x^{-1} rep_t in C_j; the omega vectors are its eigenvectors.
    auto class_matrix = [&](size_t i) {
        Mat m(k, Vec(k, 0));
        for (size_t t = 0; t < k; ++t) {
            int rep = class_lists[t].front();
            for (int x : class_lists[i]) ++m[class_of[g.mul(g.inverse(x), rep)]][t];
        }
        for (auto& row : m)
            for (auto& v : row) v %= p;
        return m;
    };

    // Split the class algebra into common eigenspaces.
    std::vector<Mat> spaces;
    {
        Mat full(k, Vec(k, 0));
        for (size_t i = 0; i < k; ++i) full[i][i] = 1;
        spaces.push_back(std::move(full));
    }
    for (size_t i = 0; i < k; ++i) {
        bool all_split = true;
        for (const auto& s : spaces)
            if (s.size() > 1) all_split = false;
        if (all_split) break;
        if (class_lists[i].size() == 1 && class_lists[i][0] == g.identity()) continue;
        Mat mi = class_matrix(i);
        std::vector<Mat> next;
        for (auto& space : spaces) {
            size_t dim = space.size();
            if (dim <= 1) {
                next.push_back(std::move(space));
                continue;
            }
            std::vector<int> pivots;
            {
                Mat copy = space;
                pivots = rref(copy, p);
                space = std::move(copy);
            }
            // restriction of mi to the invariant subspace, in basis coordinates
            Mat restr(dim, Vec(dim, 0));
            for (size_t b = 0; b < dim; ++b) {
                Vec img(k, 0);
                for (size_t r = 0; r < k; ++r) {
                    u64 acc = 0;
                    for (size_t c = 0; c < k; ++c)
                        if (space[b][c]) acc = (acc + mulmod(mi[r][c], space[b][c], p)) % p;
                    img[r] = acc;
                }
                for (size_t s = 0; s < dim; ++s) restr[s][b] = img[pivots[s]];
                // invariance check
                for (size_t r = 0; r < k; ++r) {
                    u64 acc = 0;
                    for (size_t s = 0; s < dim; ++s)
                        acc = (acc + mulmod(restr[s][b], space[s][r], p)) % p;
                    if (acc != img[r])
                        throw std::logic_error("class-sum subspace is not invariant");
                }
            }
            Vec cp = charpoly(restr, p);
            for (u64 lambda = 0; lambda < p; ++lambda) {
                // Horner evaluation
                u64 val = 0;
                for (size_t t = cp.size(); t-- > 0;) val = (mulmod(val, lambda, p) + cp[t]) % p;
                if (val != 0) continue;
                Mat shifted = restr;
                for (size_t d = 0; d < dim; ++d)
                    shifted[d][d] = (shifted[d][d] + p - lambda) % p;
                Mat kernel = nullspace(std::move(shifted), p);
                if (kernel.empty()) continue;
                Mat sub;
                for (const auto& coords : kernel) {
                    Vec v(k, 0);
                    for (size_t s = 0; s < dim; ++s)
                        if (coords[s])
                            for (size_t c = 0; c < k; ++c)
                                v[c] = (v[c] + mulmod(coords[s], space[s][c], p)) % p;
                    sub.push_back(std::move(v));
                }
                next.push_back(std::move(sub));
            }
        }
        spaces = std::move(next);
    }
    for (const auto& s : spaces)
        if (s.size() != 1)
            throw std::logic_error("class algebra did not split into one-dimensional spaces");
    if (spaces.size() != k) throw std::logic_error("eigenspace count != class count");

    size_t identity_class = static_cast<size_t>(class_of[g.identity()]);
    std::vector<size_t> inverse_class(k);
    for (size_t c = 0; c < k; ++c)
        inverse_class[c] = static_cast<size_t>(class_of[g.inverse(class_lists[c].front())]);

    const u64 w = powmod(primitive_root(p), (p - 1) / static_cast<u64>(e), p);
    // discrete-log table for degree-1 lifts
    std::map<u64, long long> root_log;
    {
        u64 acc = 1;
        for (long long t = 0; t < e; ++t) {
            root_log[acc] = t;
            acc = mulmod(acc, w, p);
        }
    }

    long long max_deg = isqrt_floor(n);
    std::vector<Character> chars;
    for (const auto& space : spaces) {
        Vec v = space[0];
        if (v[identity_class] == 0)
            throw std::logic_error("eigenvector vanishes on the identity class");
        u64 norm = invmod(v[identity_class], p);
        for (auto& x : v) x = mulmod(x, norm, p);
        // degree from the second orthogonality-style norm of the omega vector
        u64 s2 = 0;
        for (size_t c = 0; c < k; ++c)
            s2 = (s2 + mulmod(mulmod(v[c], v[inverse_class[c]], p),
                              invmod(static_cast<u64>(class_lists[c].size()) % p, p), p)) %
                 p;
        u64 d2 = mulmod(static_cast<u64>(n) % p, invmod(s2, p), p);
        long long degree = 0;
        for (long long d = 1; d <= max_deg; ++d)
            if (mulmod(static_cast<u64>(d), static_cast<u64>(d), p) == d2) {
                degree = d;
                break;
            }
        if (degree == 0) throw std::logic_error("no admissible degree for eigenvector");
        // chi mod p on each class
        Vec chi_p(k);
        for (size_t c = 0; c < k; ++c)
            chi_p[c] = mulmod(mulmod(static_cast<u64>(degree), v[c], p),
                              invmod(static_cast<u64>(class_lists[c].size()) % p, p), p);

        Character chi;
        chi.degree = degree;
        chi.values.reserve(k);
        for (size_t c = 0; c < k; ++c) {
            int rep = class_lists[c].front();
            long long o = g.element_order(rep);
            Cyclotomic value(e);
            if (degree == 1) {
                auto it = root_log.find(chi_p[c]);
                if (it == root_log.end())
                    throw std::logic_error("degree-1 value is not a root of unity mod p");
                value.coeffs[static_cast<size_t>(it->second)] = 1;
            } else {
                // eigenvalue multiplicities of rep, recovered by a mod-p DFT
                u64 z = powmod(w, static_cast<u64>(e / o), p);
                u64 zinv = invmod(z, p);
                u64 oinv = invmod(static_cast<u64>(o) % p, p);
                std::vector<u64> chi_pow(o);
                int x = g.identity();
                for (long long t = 0; t < o; ++t) {
                    chi_pow[t] = chi_p[class_of[x]];
                    x = g.mul(x, rep);
                }
                long long total = 0;
                for (long long j = 0; j < o; ++j) {
                    u64 acc = 0, zj = powmod(zinv, static_cast<u64>(j), p), zjt = 1;
                    for (long long t = 0; t < o; ++t) {
                        acc = (acc + mulmod(chi_pow[t], zjt, p)) % p;
                        zjt = mulmod(zjt, zj, p);
                    }
                    u64 mult = mulmod(acc, oinv, p);
                    if (mult > static_cast<u64>(degree))
                        throw std::logic_error("eigenvalue multiplicity exceeds degree");
                    if (mult)
                        value.coeffs[static_cast<size_t>((j * (e / o)) % e)] +=
                            static_cast<long long>(mult);
                    total += static_cast<long long>(mult);
                }
                if (total != degree)
                    throw std::logic_error("eigenvalue multiplicities do not sum to degree");
            }
            chi.values.push_back(std::move(value));
        }
        chars.push_back(std::move(chi));
    }

    std::sort(chars.begin(), chars.end(), [](const Character& a, const Character& b) {
        if (a.degree != b.degree) return a.degree < b.degree;
        for (size_t c = 0; c < a.values.size(); ++c)
            if (a.values[c].coeffs != b.values[c].coeffs)
                return a.values[c].coeffs < b.values[c].coeffs;
        return false;
    });

    CharacterTable table;
    table.group_order = n;
    table.exponent = e;
    for (const auto& cls : class_lists)
        table.classes.push_back({cls.front(), static_cast<int>(cls.size()), cls});
    table.characters = std::move(chars);
    long long sq = 0;
    for (const auto& chi : table.characters) sq += chi.degree * chi.degree;
    if (sq != n) throw std::logic_error("degree check failed after lifting");
    return table;
}

std::vector<long long> irr_with_central_character(const FiniteGroup& g,
                                                  const CharacterTable& table,
                                                  const CentralCharacterQuery& query) {
    const auto& sub = query.subgroup;
    if (!g.is_subgroup(sub)) throw std::domain_error("central character query: not a subgroup");
    if (!g.is_central_subset(sub))
        throw std::domain_error("central character query: subgroup is not central");
    auto gen = g.cyclic_generator(sub);
    if (!gen) throw std::domain_error("central character query: subgroup is not cyclic");
    long long zorder = static_cast<long long>(sub.size());
    long long kexp = ((query.zeta_exponent % zorder) + zorder) % zorder;
    // pick the canonical generator: minimal index among elements of full order
    int zgen = *gen;
    for (int x : sub)
        if (g.element_order(x) == zorder && x < zgen) zgen = x;

    std::vector<int> class_of(g.order(), -1);
    for (size_t c = 0; c < table.classes.size(); ++c)
        for (int x : table.classes[c].elements) class_of[x] = static_cast<int>(c);
    size_t zclass = static_cast<size_t>(class_of[zgen]);
    long long e = table.exponent;
    Cyclotomic want = Cyclotomic::root(e, kexp * (e / zorder));

    std::vector<long long> degrees;
    for (const auto& chi : table.characters) {
        // central elements act by scalars: chi(z) == zeta(z) * chi(1)
        if (chi.values[zclass] == want.scaled(chi.degree)) degrees.push_back(chi.degree);
    }
    return degrees;
}

std::vector<long long> irr_with_central_character(const FiniteGroup& g,
                                                  const CentralCharacterQuery& query) {
    return irr_with_central_character(g, character_table(g), query);
}

}  // namespace packetmult
