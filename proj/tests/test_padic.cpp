#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "packetmult/numutil.hpp"
#include "packetmult/padic.hpp"

using namespace packetmult;

namespace {

long long vp(long long n, long long p) {
    long long v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

// |Z_p^x / (Z_p^x)^n| by brute force on units modulo p^K, K large enough for
// the quotient to stabilize.
long long unit_quotient_oracle(long long p, long long n) {
    long long K = 2 * vp(n, p) + 3;
    long long mod = ipow(p, K);
    std::set<long long> powers;
    long long units = 0;
    for (long long u = 1; u < mod; ++u) {
        if (u % p == 0) continue;
        ++units;
        long long acc = 1;
        for (long long i = 0; i < n; ++i) acc = (acc * u) % mod;
        powers.insert(acc);
    }
    return units / static_cast<long long>(powers.size());
}

PAdicFieldData qp(long long p) { return PAdicFieldData{p, 1, 1, p == 2 ? 1 : 0}; }

}  // namespace

TEST_CASE("coset cardinality matches the brute-force unit-group oracle") {
    for (long long p : {2LL, 3LL, 5LL, 7LL})
        for (long long n = 1; n <= 12; ++n) {
            BigInt expect = BigInt(n) * unit_quotient_oracle(p, n);
            CAPTURE(p);
            CAPTURE(n);
            CHECK(coset_card(qp(p), n) == expect);
        }
}

TEST_CASE("squares: coset is 4 for odd p and 8 for p = 2") {
    CHECK(coset_card(qp(3), 2) == 4);
    CHECK(coset_card(qp(5), 2) == 4);
    CHECK(coset_card(qp(7), 2) == 4);
    CHECK(coset_card(qp(2), 2) == 8);
}

TEST_CASE("fourth powers over odd p: coset is 8 or 16 according to q mod 4") {
    // q = 3 mod 4
    CHECK(coset_card(qp(3), 4) == 8);
    CHECK(coset_card(qp(7), 4) == 8);
    // q = 1 mod 4
    CHECK(coset_card(qp(5), 4) == 16);
    CHECK(coset_card(qp(13), 4) == 16);
    // unramified quadratic extension of Q_3 has q = 9 = 1 mod 4
    CHECK(coset_card(PAdicFieldData{3, 1, 2, 0}, 4) == 16);
}

TEST_CASE("roots of unity counts") {
    CHECK(mu_card(qp(5), 4) == 4);   // gcd(4, 4)
    CHECK(mu_card(qp(7), 3) == 3);   // gcd(3, 6)
    CHECK(mu_card(qp(7), 5) == 1);   // gcd(5, 6)
    CHECK(mu_card(qp(2), 2) == 2);   // -1 lives in Q_2
    CHECK(mu_card(qp(3), 3) == 1);   // no wild roots in Q_3
    CHECK(mu_card(PAdicFieldData{3, 1, 1, 1}, 3) == 3);  // a = 1 adjoins them
    for (long long p : {2LL, 3LL, 5LL})
        for (long long n = 1; n <= 10; ++n) CHECK(n % mu_card(qp(p), n) == 0);
}

TEST_CASE("field valuation") {
    CHECK(field_valuation(qp(2), 8) == 3);
    CHECK(field_valuation(PAdicFieldData{2, 2, 1, 1}, 8) == 6);
    CHECK(field_valuation(qp(5), 6) == 0);
    CHECK_THROWS_AS(field_valuation(qp(5), 0), std::domain_error);
}

TEST_CASE("square divisor bound: frozen values") {
    CHECK(square_divisor_bound(1) == 1);
    CHECK(square_divisor_bound(4) == 2);
    CHECK(square_divisor_bound(8) == 2);
    CHECK(square_divisor_bound(16) == 4);
    CHECK(square_divisor_bound(72) == 6);
    CHECK(square_divisor_bound(3600) == 60);
    CHECK(square_divisor_bound(97) == 1);
}

TEST_CASE("square divisor bound: maximality property") {
    for (long long c = 1; c <= 500; ++c) {
        long long b = square_divisor_bound(c).convert_to<long long>();
        CHECK(c % (b * b) == 0);
        for (long long bigger = b + 1; bigger * bigger <= c; ++bigger)
            CHECK(c % (bigger * bigger) != 0);
    }
}

TEST_CASE("field descriptor parsing and validation") {
    PAdicFieldData f = PAdicFieldData::parse("p=5,e=1,f=1,a=0");
    CHECK(f.p == 5);
    CHECK(f.residue_card() == 5);
    CHECK(PAdicFieldData::parse(f.to_string()).p == 5);
    CHECK_THROWS_AS((PAdicFieldData{4, 1, 1, 0}).validate(), std::invalid_argument);
    CHECK_THROWS_AS((PAdicFieldData{5, 0, 1, 0}).validate(), std::invalid_argument);
    CHECK_THROWS_AS(PAdicFieldData::parse("p=abc"), std::invalid_argument);
}
