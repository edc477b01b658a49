#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <concepts>
#include <iosfwd>
#include <string>
#include <string_view>

namespace nda {

/// Arbitrary-precision natural number: the universal carrier value.
///
/// Nat is closed under + and *; subtraction and division exist only as
/// named helper functions so a negative or fractional value can never
/// appear by accident. Decimal serialization is exact at any magnitude.
class Nat {
public:
    using backend = boost::multiprecision::cpp_int;

    Nat() = default;

    template <std::unsigned_integral T>
    Nat(T v) : v_(v) {}

    template <std::signed_integral T>
    Nat(T v) : v_(checked(static_cast<long long>(v))) {}

    explicit Nat(backend v);

    /// Parses a decimal numeral. Rejects anything but [0-9]+.
    static Nat from_decimal(std::string_view text);

    std::string to_decimal() const { return v_.str(); }

    const backend& raw() const { return v_; }

    Nat& operator+=(const Nat& o) { v_ += o.v_; return *this; }
    Nat& operator*=(const Nat& o) { v_ *= o.v_; return *this; }
    friend Nat operator+(Nat a, const Nat& b) { a += b; return a; }
    friend Nat operator*(Nat a, const Nat& b) { a *= b; return a; }
    Nat& operator++() { ++v_; return *this; }

    friend bool operator==(const Nat&, const Nat&) = default;
    friend std::strong_ordering operator<=>(const Nat& a, const Nat& b) {
        // cpp_int predates <=>; synthesize it.
        if (a.v_ < b.v_) return std::strong_ordering::less;
        if (b.v_ < a.v_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    bool is_zero() const { return v_.is_zero(); }
    bool fits_ulong() const;

    /// Narrows to unsigned long; throws std::overflow_error when too large.
    unsigned long to_ulong() const;

    friend std::ostream& operator<<(std::ostream& os, const Nat& n);

private:
    static backend checked(long long v);

    backend v_;
};

/// a - b; throws DomainError when b > a.
Nat checked_sub(const Nat& a, const Nat& b);

/// floor(a / b); b >= 1 required.
Nat fdiv(const Nat& a, const Nat& b);

/// ceil(a / b); b >= 1 required.
Nat cdiv(const Nat& a, const Nat& b);

/// a mod b in [0, b); b >= 1 required.
Nat mod(const Nat& a, const Nat& b);

Nat gcd(const Nat& a, const Nat& b);

/// base^exp computed exactly.
Nat pow_u(const Nat& base, unsigned long exp);

/// a * 2^bits.
Nat shl(const Nat& a, unsigned long bits);

/// floor(sqrt(a)).
Nat isqrt(const Nat& a);

/// floor(a^(1/k)); k >= 1 required.
Nat root_floor(const Nat& a, unsigned long k);

}  // namespace nda
