#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "revfree/error.hpp"

namespace revfree {

inline bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

/// q = p^e with p prime and e >= 1, or nullopt.
struct PrimePower {
    std::uint32_t prime = 0;
    std::uint32_t exponent = 0;
};

inline std::optional<PrimePower> as_prime_power(std::uint64_t q) {
    if (q < 2) return std::nullopt;
    std::uint64_t p = 2;
    while (q % p != 0) ++p;  // smallest prime factor
    std::uint32_t e = 0;
    while (q % p == 0) {
        q /= p;
        ++e;
    }
    if (q != 1) return std::nullopt;
    return PrimePower{static_cast<std::uint32_t>(p), e};
}

namespace detail {

// Polynomials over GF(p) as coefficient vectors, lowest degree first, no trailing zeros.
using Poly = std::vector<std::uint32_t>;

inline void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::uint32_t inverse_mod_prime(std::uint32_t a, std::uint32_t p) {
    for (std::uint32_t x = 1; x < p; ++x)
        if ((a * x) % p == 1) return x;
    throw invariant_violation("no inverse mod prime");
}

// Remainder of a divided by b (b nonzero) over GF(p).
inline Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
    trim(a);
    const std::uint32_t lead_inv = inverse_mod_prime(b.back(), p);
    while (a.size() >= b.size()) {
        const std::uint32_t factor = (a.back() * lead_inv) % p;
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] = (a[shift + i] + p - (factor * b[i]) % p) % p;
        trim(a);
    }
    return a;
}

// Monic polynomial of the given degree whose lower coefficients are the base-p digits of `code`.
inline Poly monic_from_code(std::uint32_t code, std::uint32_t degree, std::uint32_t p) {
    Poly f(degree + 1, 0);
    for (std::uint32_t i = 0; i < degree; ++i) {
        f[i] = code % p;
        code /= p;
    }
    f[degree] = 1;
    return f;
}

inline std::uint32_t ipow(std::uint32_t base, std::uint32_t e) {
    std::uint32_t r = 1;
    while (e--) r *= base;
    return r;
}

// Irreducible iff no monic factor of degree 1..deg/2 divides it.
inline bool is_irreducible(const Poly& f, std::uint32_t p) {
    const auto degree = static_cast<std::uint32_t>(f.size() - 1);
    for (std::uint32_t d = 1; 2 * d <= degree; ++d) {
        for (std::uint32_t code = 0; code < ipow(p, d); ++code)
            if (poly_mod(f, monic_from_code(code, d, p), p).empty()) return false;
    }
    return true;
}

}  // namespace detail

/**
 * GF(p^e) for e <= 4. Elements are integers 0..q-1 holding polynomial
 * coefficients packed base p (coefficient of x^i is digit i). Addition and
 * multiplication are precomputed tables.
 */
class GaloisField {
public:
    static constexpr std::uint32_t max_degree = 4;

    /// Builds GF(p^e); for e > 1 the modulus is the monic irreducible
    /// polynomial with the smallest packed lower-coefficient code.
    GaloisField(std::uint32_t p, std::uint32_t e) : p_(p), e_(e) {
        detail::require(is_prime(p), "field characteristic " + std::to_string(p) + " is not prime");
        detail::require(e >= 1 && e <= max_degree,
                        "extension degree " + std::to_string(e) + " outside 1..4");
        q_ = detail::ipow(p, e);
        if (e > 1) {
            for (std::uint32_t code = 0; code < detail::ipow(p, e); ++code) {
                auto f = detail::monic_from_code(code, e, p);
                if (detail::is_irreducible(f, p)) {
                    modulus_ = std::move(f);
                    break;
                }
            }
            if (modulus_.empty()) throw invariant_violation("no irreducible polynomial found");
        }
        build_tables();
    }

    /// Field of order q, which must be a prime power with exponent <= 4.
    static GaloisField of_order(std::uint32_t q) {
        const auto pp = as_prime_power(q);
        detail::require(pp.has_value(), "field order " + std::to_string(q) + " is not a prime power");
        return GaloisField(pp->prime, pp->exponent);
    }

    std::uint32_t characteristic() const noexcept { return p_; }
    std::uint32_t degree() const noexcept { return e_; }
    std::uint32_t order() const noexcept { return q_; }

    /// Coefficients lowest degree first, monic, size e+1; empty for prime fields.
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return add_[a * q_ + b]; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return mul_[a * q_ + b]; }
    std::uint32_t neg(std::uint32_t a) const { return neg_[a]; }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

    std::uint32_t inv(std::uint32_t a) const {
        detail::require(a != 0 && a < q_, "inverse of zero or out-of-range element");
        return inv_[a];
    }

private:
    detail::Poly unpack(std::uint32_t a) const {
        detail::Poly out(e_, 0);
        for (std::uint32_t i = 0; i < e_; ++i) {
            out[i] = a % p_;
            a /= p_;
        }
        return out;
    }

    std::uint32_t pack(const detail::Poly& a) const {
        std::uint32_t v = 0;
        for (std::size_t i = a.size(); i-- > 0;) v = v * p_ + a[i];
        return v;
    }

    void build_tables() {
        add_.assign(q_ * q_, 0);
        mul_.assign(q_ * q_, 0);
        neg_.assign(q_, 0);
        inv_.assign(q_, 0);
        for (std::uint32_t a = 0; a < q_; ++a) {
            const auto pa = unpack(a);
            for (std::uint32_t b = 0; b < q_; ++b) {
                const auto pb = unpack(b);
                detail::Poly sum(e_);
                for (std::uint32_t i = 0; i < e_; ++i) sum[i] = (pa[i] + pb[i]) % p_;
                add_[a * q_ + b] = pack(sum);

                detail::Poly prod(2 * e_ - 1, 0);
                for (std::uint32_t i = 0; i < e_; ++i)
                    for (std::uint32_t j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p_;
                if (e_ > 1) prod = detail::poly_mod(prod, modulus_, p_);
                detail::trim(prod);
                mul_[a * q_ + b] = pack(prod);
            }
        }
        for (std::uint32_t a = 0; a < q_; ++a) {
            for (std::uint32_t b = 0; b < q_; ++b) {
                if (add_[a * q_ + b] == 0) neg_[a] = b;
                if (mul_[a * q_ + b] == 1) inv_[a] = b;
            }
        }
    }

    std::uint32_t p_;
    std::uint32_t e_;
    std::uint32_t q_ = 0;
    std::vector<std::uint32_t> modulus_;
    std::vector<std::uint32_t> add_, mul_, neg_, inv_;
};

}  // namespace revfree
