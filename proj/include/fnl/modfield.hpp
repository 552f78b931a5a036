#pragma once

#include "fnl/cyclo.hpp"

#include <cstdint>
#include <vector>

namespace fnl {

/// A prime p = 1 (mod order) together with a fixed element w of
/// multiplicative order exactly `order` mod p. Reduction of Q(zeta_order)
/// sends zeta to w, giving a ring homomorphism wherever denominators are
/// invertible.
struct PrimeField {
    std::int64_t p = 0;
    std::int64_t w = 0;
    int order = 0;

    /// The index-th prime of the deterministic sequence p = 1 (mod order),
    /// p > 2^30, ascending.
    static PrimeField nth_for_order(int order, int index);
};

std::int64_t mod_add(std::int64_t a, std::int64_t b, std::int64_t p);
std::int64_t mod_sub(std::int64_t a, std::int64_t b, std::int64_t p);
std::int64_t mod_mul(std::int64_t a, std::int64_t b, std::int64_t p);
std::int64_t mod_pow(std::int64_t a, std::int64_t e, std::int64_t p);
std::int64_t mod_inv(std::int64_t a, std::int64_t p);

/// Image of a under zeta -> w; throws bad_prime_error if a denominator
/// vanishes mod p.
std::int64_t reduce_mod_prime(const CycloElem& a, const PrimeField& F);

} // namespace fnl
