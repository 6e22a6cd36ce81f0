#include "dsz/gf.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace dsz::gf {

namespace {

// Polynomials over GF(p): coefficient vectors, constant term first, no
// trailing zeros (except the zero polynomial, which is empty).

using Poly = std::vector<std::uint32_t>;

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of f divided by monic g, both over GF(p).
Poly poly_mod(Poly f, const Poly& g, std::uint32_t p) {
    trim(f);
    const std::size_t dg = g.size() - 1;
    while (f.size() > dg) {
        const std::uint32_t lead = f.back();
        const std::size_t shift = f.size() - 1 - dg;
        if (lead != 0) {
            for (std::size_t i = 0; i <= dg; ++i) {
                std::uint64_t v = f[shift + i] + std::uint64_t(p) -
                                  (std::uint64_t(lead) * g[i]) % p;
                f[shift + i] = static_cast<std::uint32_t>(v % p);
            }
        }
        f.pop_back();
        trim(f);
        if (f.size() <= dg) break;
    }
    trim(f);
    return f;
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
    const std::size_t k = f.size() - 1;
    if (k == 1) return true;
    // Trial division by every monic polynomial of degree 1..k/2.
    for (std::size_t d = 1; 2 * d <= k; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t m = 0; m < count; ++m) {
            Poly g(d + 1, 0);
            std::uint64_t rem = m;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = static_cast<std::uint32_t>(rem % p);
                rem /= p;
            }
            g[d] = 1;
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

Poly find_reduction(std::uint32_t p, std::uint32_t k) {
    if (k == 1) return {0, 1};  // x; unused for prime fields
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < k; ++i) count *= p;
    // m enumerates lower coefficients with c_{k-1} most significant, so
    // increasing m is lexicographic order on (c_{k-1},...,c_0).
    for (std::uint64_t m = 0; m < count; ++m) {
        Poly f(k + 1, 0);
        std::uint64_t rem = m;
        for (std::uint32_t i = 0; i < k; ++i) {
            f[i] = static_cast<std::uint32_t>(rem % p);
            rem /= p;
        }
        f[k] = 1;
        if (is_irreducible(f, p)) return f;
    }
    throw std::logic_error("no irreducible polynomial found");  // unreachable
}

}  // namespace

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; std::uint64_t(d) * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint32_t q) {
    if (q < 2) throw std::invalid_argument("not a prime power: " + std::to_string(q));
    for (std::uint32_t p = 2; p <= q; ++p) {
        if (q % p != 0) continue;
        if (!is_prime(p))
            throw std::invalid_argument("not a prime power: " + std::to_string(q));
        std::uint32_t a = 0, r = q;
        while (r % p == 0) { r /= p; ++a; }
        if (r != 1)
            throw std::invalid_argument("not a prime power: " + std::to_string(q));
        return {p, a};
    }
    throw std::invalid_argument("not a prime power: " + std::to_string(q));
}

Field::Field(std::uint32_t p, std::uint32_t k) : p_(p), k_(k) {
    if (!is_prime(p)) throw std::invalid_argument("p is not prime: " + std::to_string(p));
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
        q *= p;
        if (q > kMaxFieldOrder)
            throw std::invalid_argument("field order exceeds cap");
    }
    q_ = static_cast<std::uint32_t>(q);
    reduction_ = find_reduction(p, k);
}

Field field_new(std::uint32_t p, std::uint32_t k) { return Field(p, k); }

Elem Field::add(Elem a, Elem b) const {
    if (k_ == 1) return (a + b) % p_;
    Elem r = 0, base = 1;
    for (std::uint32_t i = 0; i < k_; ++i) {
        r += ((a % p_ + b % p_) % p_) * base;
        a /= p_;
        b /= p_;
        base *= p_;
    }
    return r;
}

Elem Field::neg(Elem a) const {
    if (k_ == 1) return (p_ - a) % p_;
    Elem r = 0, base = 1;
    for (std::uint32_t i = 0; i < k_; ++i) {
        r += ((p_ - a % p_) % p_) * base;
        a /= p_;
        base *= p_;
    }
    return r;
}

Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem Field::mul(Elem a, Elem b) const {
    if (k_ == 1) return static_cast<Elem>((std::uint64_t(a) * b) % p_);
    // Schoolbook product then reduction by the modulus polynomial.
    std::vector<std::uint32_t> ca = coeffs(a), cb = coeffs(b);
    std::vector<std::uint32_t> prod(2 * k_ - 1, 0);
    for (std::uint32_t i = 0; i < k_; ++i) {
        if (ca[i] == 0) continue;
        for (std::uint32_t j = 0; j < k_; ++j)
            prod[i + j] = static_cast<std::uint32_t>(
                (prod[i + j] + std::uint64_t(ca[i]) * cb[j]) % p_);
    }
    for (std::uint32_t d = 2 * k_ - 2; d >= k_; --d) {
        const std::uint32_t c = prod[d];
        if (c != 0) {
            prod[d] = 0;
            for (std::uint32_t i = 0; i < k_; ++i) {
                std::uint64_t v = prod[d - k_ + i] + std::uint64_t(p_) -
                                  (std::uint64_t(c) * reduction_[i]) % p_;
                prod[d - k_ + i] = static_cast<std::uint32_t>(v % p_);
            }
        }
    }
    prod.resize(k_);
    return from_coeffs(prod);
}

Elem Field::pow(Elem a, std::uint64_t e) const {
    Elem r = 1, base = a;
    while (e > 0) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

Elem Field::inv(Elem a) const {
    if (a == 0) throw std::domain_error("division by zero in GF(" + std::to_string(q_) + ")");
    return pow(a, q_ - 2);
}

Elem Field::poly_eval(std::span<const Elem> coeffs, Elem x) const {
    if (coeffs.empty()) throw std::invalid_argument("empty coefficient vector");
    Elem r = coeffs.back();
    for (std::size_t i = coeffs.size() - 1; i-- > 0;)
        r = add(mul(r, x), coeffs[i]);
    return r;
}

std::vector<std::uint32_t> Field::coeffs(Elem a) const {
    std::vector<std::uint32_t> c(k_);
    for (std::uint32_t i = 0; i < k_; ++i) {
        c[i] = a % p_;
        a /= p_;
    }
    return c;
}

Elem Field::from_coeffs(std::span<const std::uint32_t> c) const {
    Elem r = 0, base = 1;
    for (std::uint32_t i = 0; i < k_; ++i) {
        r += (i < c.size() ? c[i] % p_ : 0) * base;
        base *= p_;
    }
    return r;
}

}  // namespace dsz::gf
