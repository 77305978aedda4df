#include "packetmult/padic.hpp"

#include <boost/multiprecision/miller_rabin.hpp>
#include <map>
#include <sstream>
#include <stdexcept>

#include "packetmult/numutil.hpp"

namespace packetmult {

BigInt PAdicFieldData::residue_card() const {
    BigInt q = 1;
    for (long long i = 0; i < f; ++i) q *= p;
    return q;
}

void PAdicFieldData::validate() const {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime, got " + std::to_string(p));
    if (e < 1) throw std::invalid_argument("ramification index e must be >= 1");
    if (f < 1) throw std::invalid_argument("residue degree f must be >= 1");
    if (wild_exponent < 0) throw std::invalid_argument("wild exponent a must be >= 0");
}

PAdicFieldData PAdicFieldData::parse(const std::string& text) {
    PAdicFieldData fd;
    bool seen_p = false, seen_e = false, seen_f = false, seen_a = false;
    std::stringstream ss(text);
    std::string item;
    size_t pos = 0;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("field descriptor: missing '=' near position " +
                                        std::to_string(pos) + " in \"" + text + "\"");
        std::string key = item.substr(0, eq);
        // trim spaces
        key.erase(0, key.find_first_not_of(" \t"));
        key.erase(key.find_last_not_of(" \t") + 1);
        long long value;
        try {
            value = std::stoll(item.substr(eq + 1));
        } catch (const std::exception&) {
            throw std::invalid_argument("field descriptor: bad integer near position " +
                                        std::to_string(pos) + " in \"" + text + "\"");
        }
        if (key == "p") { fd.p = value; seen_p = true; }
        else if (key == "e") { fd.e = value; seen_e = true; }
        else if (key == "f") { fd.f = value; seen_f = true; }
        else if (key == "a") { fd.wild_exponent = value; seen_a = true; }
        else throw std::invalid_argument("field descriptor: unknown key \"" + key + "\"");
        pos += item.size() + 1;
    }
    if (!seen_p || !seen_e || !seen_f || !seen_a)
        throw std::invalid_argument("field descriptor must set p, e, f and a: \"" + text + "\"");
    fd.validate();
    return fd;
}

std::string PAdicFieldData::to_string() const {
    std::ostringstream os;
    os << "p=" << p << ",e=" << e << ",f=" << f << ",a=" << wild_exponent;
    return os.str();
}

long long field_valuation(const PAdicFieldData& field, long long n) {
    field.validate();
    if (n == 0) throw std::domain_error("field_valuation: n must be nonzero");
    if (n < 0) n = -n;
    long long v = 0;
    while (n % field.p == 0) {
        n /= field.p;
        ++v;
    }
    return field.e * v;
}

long long mu_card(const PAdicFieldData& field, long long n) {
    field.validate();
    if (n < 1) throw std::invalid_argument("mu_card: n must be >= 1");
    BigInt q = field.residue_card();
    BigInt tame = gcd(BigInt(n), q - 1);  // ADL: boost::multiprecision::gcd
    long long vp = 0;
    long long m = n;
    while (m % field.p == 0) {
        m /= field.p;
        ++vp;
    }
    long long wild_pow = std::min(vp, field.wild_exponent);
    BigInt wild = 1;
    for (long long i = 0; i < wild_pow; ++i) wild *= field.p;
    BigInt result = tame * wild;
    return result.convert_to<long long>();  // divides n, so it fits
}

BigInt coset_card(const PAdicFieldData& field, long long n) {
    if (n < 1) throw std::invalid_argument("coset_card: n must be >= 1");
    BigInt q = field.residue_card();
    BigInt qpow = 1;
    long long v = field_valuation(field, n);
    for (long long i = 0; i < v; ++i) qpow *= q;
    return BigInt(n) * mu_card(field, n) * qpow;
}

namespace {

// Exact factorization for desk-scale inputs: trial division by small primes,
// then perfect-power peeling plus Miller-Rabin on the cofactor.
void factor_into(BigInt n, std::map<BigInt, long long>& out, long long multiplier) {
    for (long long d = 2; d <= 100000 && BigInt(d) * d <= n; ++d) {
        while (n % d == 0) {
            out[d] += multiplier;
            n /= d;
        }
    }
    if (n == 1) return;
    if (boost::multiprecision::miller_rabin_test(n, 32)) {
        out[n] += multiplier;
        return;
    }
    for (long long k = 2; BigInt(1) << k <= n; ++k) {
        BigInt root = 0, bit = BigInt(1) << (static_cast<unsigned>(msb(n)) / k + 1);
        while (bit > 0) {  // binary search for floor k-th root
            BigInt cand = root + bit;
            BigInt pw = 1;
            bool over = false;
            for (long long i = 0; i < k && !over; ++i) {
                pw *= cand;
                if (pw > n) over = true;
            }
            if (!over) root = cand;
            bit >>= 1;
        }
        BigInt pw = 1;
        for (long long i = 0; i < k; ++i) pw *= root;
        if (pw == n && root > 1) {
            factor_into(root, out, multiplier * k);
            return;
        }
    }
    throw std::runtime_error("square_divisor_bound: cannot certify square part of cofactor");
}

}  // namespace

BigInt square_divisor_bound(const BigInt& c) {
    if (c < 1) throw std::invalid_argument("square_divisor_bound: input must be >= 1");
    std::map<BigInt, long long> factors;
    factor_into(c, factors, 1);
    BigInt bound = 1;
    for (const auto& [prime, exp] : factors)
        for (long long i = 0; i < exp / 2; ++i) bound *= prime;
    return bound;
}

}  // namespace packetmult
