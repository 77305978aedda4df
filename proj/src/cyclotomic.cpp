#include "packetmult/cyclotomic.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace packetmult {

namespace {

using boost::multiprecision::cpp_int;

// Exact polynomial division (low-degree-first coefficients); remainder must
// vanish.
std::vector<cpp_int> poly_div_exact(const std::vector<cpp_int>& num,
                                    const std::vector<cpp_int>& den) {
    std::vector<cpp_int> rem = num;
    if (den.empty() || den.back() == 0) throw std::logic_error("bad divisor");
    if (rem.size() < den.size()) throw std::logic_error("bad division");
    std::vector<cpp_int> quot(rem.size() - den.size() + 1, 0);
    for (size_t i = rem.size(); i-- >= den.size();) {
        cpp_int c = rem[i] / den.back();
        if (c * den.back() != rem[i]) throw std::logic_error("inexact poly division");
        quot[i - den.size() + 1] = c;
        for (size_t j = 0; j < den.size(); ++j) rem[i - den.size() + 1 + j] -= c * den[j];
        if (i + 1 == den.size()) break;
    }
    for (const auto& r : rem)
        if (r != 0) throw std::logic_error("nonzero remainder in exact division");
    return quot;
}

std::vector<cpp_int> cyclotomic_big(long long e, std::map<long long, std::vector<cpp_int>>& memo) {
    auto it = memo.find(e);
    if (it != memo.end()) return it->second;
    // x^e - 1 divided by the product of Phi_d over proper divisors d of e
    std::vector<cpp_int> num(static_cast<size_t>(e) + 1, 0);
    num[0] = -1;
    num[static_cast<size_t>(e)] = 1;
    for (long long d = 1; d < e; ++d)
        if (e % d == 0) num = poly_div_exact(num, cyclotomic_big(d, memo));
    memo[e] = num;
    return num;
}

// Reduce a coefficient vector (length e, power basis of x modulo x^e - 1)
// modulo Phi_e; returns coefficients of degree < phi(e).
std::vector<cpp_int> reduce_mod_cyclotomic(const std::vector<long long>& coeffs, long long e) {
    static std::mutex memo_mutex;
    static std::map<long long, std::vector<cpp_int>> memo;  // per-process cache
    std::vector<cpp_int> phi;
    {
        std::lock_guard<std::mutex> lock(memo_mutex);
        phi = cyclotomic_big(e, memo);
    }
    std::vector<cpp_int> p(coeffs.begin(), coeffs.end());
    size_t deg_phi = phi.size() - 1;
    while (p.size() > deg_phi) {
        cpp_int lead = p.back();
        size_t shift = p.size() - 1 - deg_phi;
        if (lead != 0)
            for (size_t j = 0; j < phi.size(); ++j) p[shift + j] -= lead * phi[j];
        p.pop_back();
    }
    return p;
}

}  // namespace

Cyclotomic Cyclotomic::integer(long long e, long long v) {
    Cyclotomic c(e);
    c.coeffs[0] = v;
    return c;
}

Cyclotomic Cyclotomic::root(long long e, long long k, long long mult) {
    Cyclotomic c(e);
    c.coeffs[static_cast<size_t>(((k % e) + e) % e)] = mult;
    return c;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
    if (order != o.order) throw std::invalid_argument("cyclotomic order mismatch");
    Cyclotomic r(order);
    for (long long k = 0; k < order; ++k) r.coeffs[k] = coeffs[k] + o.coeffs[k];
    return r;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const {
    if (order != o.order) throw std::invalid_argument("cyclotomic order mismatch");
    Cyclotomic r(order);
    for (long long k = 0; k < order; ++k) r.coeffs[k] = coeffs[k] - o.coeffs[k];
    return r;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
    if (order != o.order) throw std::invalid_argument("cyclotomic order mismatch");
    Cyclotomic r(order);
    for (long long i = 0; i < order; ++i) {
        if (coeffs[i] == 0) continue;
        for (long long j = 0; j < order; ++j) {
            if (o.coeffs[j] == 0) continue;
            r.coeffs[(i + j) % order] += coeffs[i] * o.coeffs[j];
        }
    }
    return r;
}

Cyclotomic Cyclotomic::conj() const {
    Cyclotomic r(order);
    for (long long k = 0; k < order; ++k) r.coeffs[(order - k) % order] += coeffs[k];
    return r;
}

Cyclotomic Cyclotomic::scaled(long long s) const {
    Cyclotomic r(order);
    for (long long k = 0; k < order; ++k) r.coeffs[k] = coeffs[k] * s;
    return r;
}

bool Cyclotomic::is_zero() const {
    for (const auto& c : reduce_mod_cyclotomic(coeffs, order))
        if (c != 0) return false;
    return true;
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
    return (*this - o).is_zero();
}

std::optional<long long> Cyclotomic::as_integer() const {
    auto red = reduce_mod_cyclotomic(coeffs, order);
    for (size_t i = 1; i < red.size(); ++i)
        if (red[i] != 0) return std::nullopt;
    if (red.empty()) return 0;
    return red[0].convert_to<long long>();
}

std::string Cyclotomic::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (long long k = 0; k < order; ++k) {
        if (coeffs[k] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (k == 0) {
            os << coeffs[k];
        } else {
            if (coeffs[k] != 1) os << coeffs[k] << "*";
            os << "z" << order << "^" << k;
        }
    }
    if (first) os << "0";
    return os.str();
}

std::vector<long long> cyclotomic_polynomial(long long e) {
    std::map<long long, std::vector<boost::multiprecision::cpp_int>> memo;
    auto big = cyclotomic_big(e, memo);
    std::vector<long long> out;
    out.reserve(big.size());
    for (const auto& c : big) out.push_back(c.convert_to<long long>());
    return out;
}

}  // namespace packetmult
