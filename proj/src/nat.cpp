#include "nda/nat.hpp"

#include "nda/errors.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace nda {

namespace mp = boost::multiprecision;

Nat::Nat(backend v) : v_(std::move(v)) {
    if (v_.sign() < 0) throw DomainError("Nat cannot hold a negative value");
}

Nat::backend Nat::checked(long long v) {
    if (v < 0) throw DomainError("Nat cannot hold a negative value");
    return backend(v);
}

Nat Nat::from_decimal(std::string_view text) {
    if (text.empty()) throw ParseError("empty numeral", 0);
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9')
            throw ParseError("invalid character in numeral", i);
    }
    // Leading zeros would make the backend read the numeral as octal.
    std::size_t first = text.find_first_not_of('0');
    if (first == std::string_view::npos) return Nat();
    Nat n;
    n.v_ = backend(std::string(text.substr(first)));
    return n;
}

bool Nat::fits_ulong() const {
    return v_ <= std::numeric_limits<unsigned long>::max();
}

unsigned long Nat::to_ulong() const {
    if (!fits_ulong()) throw std::overflow_error("Nat value does not fit unsigned long");
    return v_.convert_to<unsigned long>();
}

std::ostream& operator<<(std::ostream& os, const Nat& n) { return os << n.v_; }

Nat checked_sub(const Nat& a, const Nat& b) {
    if (b > a) throw DomainError("checked_sub: result would be negative");
    return Nat(Nat::backend(a.raw() - b.raw()));
}

Nat fdiv(const Nat& a, const Nat& b) {
    if (b.is_zero()) throw DomainError("fdiv: division by zero");
    return Nat(Nat::backend(a.raw() / b.raw()));
}

Nat cdiv(const Nat& a, const Nat& b) {
    if (b.is_zero()) throw DomainError("cdiv: division by zero");
    Nat::backend q, r;
    mp::divide_qr(a.raw(), b.raw(), q, r);
    if (!r.is_zero()) ++q;
    return Nat(std::move(q));
}

Nat mod(const Nat& a, const Nat& b) {
    if (b.is_zero()) throw DomainError("mod: division by zero");
    return Nat(Nat::backend(a.raw() % b.raw()));
}

Nat gcd(const Nat& a, const Nat& b) { return Nat(Nat::backend(mp::gcd(a.raw(), b.raw()))); }

Nat pow_u(const Nat& base, unsigned long exp) {
    if (exp > std::numeric_limits<unsigned int>::max())
        throw ResourceLimitError("pow_u: exponent too large for exact evaluation");
    return Nat(Nat::backend(mp::pow(base.raw(), static_cast<unsigned int>(exp))));
}

Nat shl(const Nat& a, unsigned long bits) { return Nat(Nat::backend(a.raw() << bits)); }

Nat isqrt(const Nat& a) { return Nat(Nat::backend(mp::sqrt(a.raw()))); }

Nat root_floor(const Nat& a, unsigned long k) {
    if (k == 0) throw DomainError("root_floor: k must be >= 1");
    if (k == 1 || a.raw() <= 1) return a;
    if (k == 2) return isqrt(a);
    // Bracket by bit length, then bisect on r^k <= a.
    unsigned long bits = mp::msb(a.raw());  // a >= 2 here
    Nat lo(1u);
    Nat hi = shl(Nat(1u), bits / k + 1);
    // Invariant: lo^k <= a < hi^k.
    while (true) {
        Nat gap = checked_sub(hi, lo);
        if (gap <= Nat(1u)) break;
        Nat mid = fdiv(lo + hi, Nat(2u));
        if (pow_u(mid, k) <= a)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

}  // namespace nda
