#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace dsz::gf {

/// Canonical element index in [0, q).  Index i corresponds to the polynomial
/// whose base-p digit expansion is i, constant term least significant.
using Elem = std::uint32_t;

/// Supported field sizes are capped; the constructions stay far below this.
inline constexpr std::uint32_t kMaxFieldOrder = 1u << 16;

bool is_prime(std::uint32_t n);

/// Factors q as p^a with p prime, a >= 1.  Throws std::invalid_argument if q
/// is not a prime power.
std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint32_t q);

/// GF(p^k) with elements represented by their canonical index.  The reduction
/// polynomial is the lexicographically smallest monic irreducible of degree k
/// over GF(p), found by exhaustive enumeration.  Immutable after construction.
class Field {
public:
    Field(std::uint32_t p, std::uint32_t k);

    std::uint32_t p() const { return p_; }
    std::uint32_t k() const { return k_; }
    std::uint32_t q() const { return q_; }

    /// k+1 coefficients, constant term first, leading coefficient 1.
    const std::vector<std::uint32_t>& reduction() const { return reduction_; }

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    Elem pow(Elem a, std::uint64_t e) const;
    Elem inv(Elem a) const;  // throws std::domain_error on a == 0

    /// Horner evaluation of sum_i coeffs[i] * x^i.  coeffs must be non-empty.
    Elem poly_eval(std::span<const Elem> coeffs, Elem x) const;

    /// Length-k coefficient vector of a, constant term first.
    std::vector<std::uint32_t> coeffs(Elem a) const;
    Elem from_coeffs(std::span<const std::uint32_t> c) const;

private:
    std::uint32_t p_, k_, q_;
    std::vector<std::uint32_t> reduction_;
};

/// Spec'd constructor entry point: validates p prime, k >= 1, p^k <= cap.
Field field_new(std::uint32_t p, std::uint32_t k);

}  // namespace dsz::gf
