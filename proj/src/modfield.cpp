#include "fnl/modfield.hpp"

#include <map>
#include <mutex>

namespace fnl {

std::int64_t mod_add(std::int64_t a, std::int64_t b, std::int64_t p) {
    std::int64_t s = a + b;
    return s >= p ? s - p : s;
}

std::int64_t mod_sub(std::int64_t a, std::int64_t b, std::int64_t p) {
    std::int64_t s = a - b;
    return s < 0 ? s + p : s;
}

std::int64_t mod_mul(std::int64_t a, std::int64_t b, std::int64_t p) {
    return static_cast<std::int64_t>(static_cast<__int128>(a) * b % p);
}

std::int64_t mod_pow(std::int64_t a, std::int64_t e, std::int64_t p) {
    std::int64_t r = 1 % p;
    a %= p;
    if (a < 0)
        a += p;
    while (e > 0) {
        if (e & 1)
            r = mod_mul(r, a, p);
        a = mod_mul(a, a, p);
        e >>= 1;
    }
    return r;
}

std::int64_t mod_inv(std::int64_t a, std::int64_t p) {
    a %= p;
    if (a < 0)
        a += p;
    if (a == 0)
        throw std::domain_error("mod_inv: zero");
    return mod_pow(a, p - 2, p);
}

namespace {

bool is_prime(std::int64_t n) {
    Int z(static_cast<long>(n));
    return mpz_probab_prime_p(z.get_mpz_t(), 30) > 0;
}

// Smallest element of multiplicative order exactly n mod p, from ascending
// candidate bases; requires n | p-1.
std::int64_t element_of_order(std::int64_t p, int n) {
    std::vector<int> prime_divs;
    int m = n;
    for (int q = 2; q * q <= m; ++q)
        if (m % q == 0) {
            prime_divs.push_back(q);
            while (m % q == 0)
                m /= q;
        }
    if (m > 1)
        prime_divs.push_back(m);
    for (std::int64_t g = 2;; ++g) {
        std::int64_t w = mod_pow(g, (p - 1) / n, p);
        if (w == 1)
            continue;
        bool exact = true;
        for (int q : prime_divs)
            if (mod_pow(w, n / q, p) == 1) {
                exact = false;
                break;
            }
        if (exact)
            return w;
    }
}

} // namespace

PrimeField PrimeField::nth_for_order(int order, int index) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, PrimeField> memo;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(order, index);
    auto it = memo.find(key);
    if (it != memo.end())
        return it->second;

    const std::int64_t floor = (std::int64_t(1) << 30);
    std::int64_t p = floor - floor % order + 1;
    while (p <= floor)
        p += order;
    int found = 0;
    for (;; p += order) {
        if (!is_prime(p))
            continue;
        if (found == index) {
            PrimeField f{p, element_of_order(p, order), order};
            memo[key] = f;
            return f;
        }
        ++found;
    }
}

std::int64_t reduce_mod_prime(const CycloElem& a, const PrimeField& F) {
    if (!a.attached())
        return 0;
    if (a.order() != F.order)
        throw std::invalid_argument("reduce_mod_prime: field order mismatch");
    auto residue = [&](const Int& z) -> std::int64_t {
        if (mpz_fits_slong_p(z.get_mpz_t())) {
            std::int64_t v = z.get_si() % F.p;
            return v < 0 ? v + F.p : v;
        }
        Int r = z % Int(static_cast<long>(F.p));
        std::int64_t v = r.get_si();
        return v < 0 ? v + F.p : v;
    };
    std::int64_t acc = 0;
    const std::vector<Rat>& c = a.coeffs();
    // Horner evaluation at w of the power-basis polynomial.
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
        acc = mod_mul(acc, F.w, F.p);
        if (c[i] == 0)
            continue;
        std::int64_t n = residue(c[i].get_num());
        std::int64_t d = residue(c[i].get_den());
        if (d == 0)
            throw bad_prime_error("reduce_mod_prime: denominator vanishes mod p");
        acc = mod_add(acc, mod_mul(n, mod_inv(d, F.p), F.p), F.p);
    }
    return acc;
}

} // namespace fnl
