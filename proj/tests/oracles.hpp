#pragma once

// Test-only reference implementations. Each one is a direct transcription
// of a defining formula, kept deliberately independent of the library's
// computation paths (no bracketing, no interpolation, no caches) so the
// two routes can disagree when one of them is wrong.

#include "nda/arithmetic.hpp"
#include "nda/errors.hpp"
#include "nda/generator.hpp"
#include "nda/nat.hpp"

#include <span>
#include <stdexcept>
#include <vector>

namespace oracle {

using nda::Nat;

// max{m : f_T(m) <= y} by linear scan from 0.
inline Nat naive_coprojector(const nda::Generator& g, const Nat& y,
                             unsigned long cap = 2'000'000) {
    if (g.projector(Nat(0u)) > y) throw nda::BelowRangeError("naive: below range");
    Nat m(0u);
    for (unsigned long i = 0; i < cap; ++i) {
        Nat next = m + Nat(1u);
        try {
            if (g.projector(next) > y) return m;
        } catch (const nda::DomainError&) {
            return m;  // table ran out: m is the last in-domain argument
        }
        m = std::move(next);
    }
    throw std::runtime_error("naive_coprojector: cap exhausted");
}

// Exact ceil characterization: t = ceil(num/den) iff den*(t-1) < num <= den*t.
inline bool is_ceil_of_fraction(const Nat& t, const Nat& num, const Nat& den) {
    if (num > den * t) return false;
    if (t.is_zero()) return true;  // 0 >= num/den iff num == 0 <= 0*den
    return den * nda::checked_sub(t, Nat(1u)) < num;
}

// Square-generator operations via integer square root: f^T(y) = floor(sqrt y).
inline Nat sq_add(const Nat& a, const Nat& b) { return nda::isqrt(a * a + b * b); }
inline Nat sq_mul(const Nat& a, const Nat& b) { return nda::isqrt(a * a * b * b); }
inline Nat sq_sum(std::span<const Nat> xs) {
    Nat acc(0u);
    for (const Nat& x : xs) acc += x * x;
    return nda::isqrt(acc);
}

// Canonical mod-m arithmetic on representatives {1..m}.
inline Nat mod_rep(const Nat& m, const Nat& x) {
    // x >= 1
    return nda::mod(nda::checked_sub(x, Nat(1u)), m) + Nat(1u);
}
inline Nat mod_add(const Nat& m, const Nat& a, const Nat& b) { return mod_rep(m, a + b); }
inline Nat mod_mul(const Nat& m, const Nat& a, const Nat& b) { return mod_rep(m, a * b); }

// Left fold of the binary operation (what sum_n deliberately is not).
inline Nat fold_add(const nda::ProjectiveArithmetic& A, std::span<const Nat> xs) {
    Nat acc = xs[0];
    for (std::size_t i = 1; i < xs.size(); ++i) acc = A.add(acc, xs[i]);
    return acc;
}

// 2^(2^n) by repeated exact squaring.
inline Nat dblexp_ref(unsigned n) {
    Nat v(2u);
    for (unsigned i = 0; i < n; ++i) v = v * v;
    return v;
}

}  // namespace oracle
