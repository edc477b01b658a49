#pragma once

#include "nda/generator.hpp"

#include <initializer_list>
#include <span>
#include <string>
#include <string_view>

namespace nda {

/// A generator together with the operations and order relations it induces
/// on N:
///
///   a (+) b = f^T(f_T(a) + f_T(b))        a (*) b = f^T(f_T(a) * f_T(b))
///   sum_n / prod_n: one coprojection of the conventional sum/product of
///   the projections (deliberately not a fold of the binary operation; the
///   two genuinely differ when addition is non-associative)
///   a << b   iff  b (+) a = b             a <<< b  iff  b (*) a = b
///
/// The carrier order is the usual order on N; elements are plain Nat
/// values and the subscript marker is purely a display convention.
///
/// Construction validates the generator over a stored prefix;
/// is_arithmetic() reports whether all three conditions passed there.
/// Operations are defined either way (prearithmetic mode) and consult
/// nothing but the generator, so every value here is immutable and
/// shareable across threads.
class ProjectiveArithmetic {
public:
    static ProjectiveArithmetic make(Generator gen, const Nat& validation_bound = Nat(1000u));

    const Generator& generator() const { return gen_; }
    const ValidationReport& validation() const { return validation_; }
    bool is_arithmetic() const { return is_arithmetic_; }
    std::string spec_text() const { return gen_.spec_text(); }

    Nat add(const Nat& a, const Nat& b) const;
    Nat mul(const Nat& a, const Nat& b) const;

    /// n-ary sum and product; the list must be non-empty (there is no
    /// guaranteed neutral element to return for the empty case).
    Nat sum_n(std::span<const Nat> xs) const;
    Nat prod_n(std::span<const Nat> xs) const;
    Nat sum_n(std::initializer_list<Nat> xs) const;
    Nat prod_n(std::initializer_list<Nat> xs) const;

    /// a << b: a vanishes against b under addition (b + a = b).
    bool much_less(const Nat& a, const Nat& b) const;

    /// Group variant: xs, b related iff sum_n(xs ++ [b]) = b. xs non-empty.
    bool much_less_group(std::span<const Nat> xs, const Nat& b) const;
    bool much_less_group(std::initializer_list<Nat> xs, const Nat& b) const;

    /// a <<< b: a vanishes against b under multiplication (b * a = b).
    bool much_much_less(const Nat& a, const Nat& b) const;

    bool much_much_less_group(std::span<const Nat> xs, const Nat& b) const;
    bool much_much_less_group(std::initializer_list<Nat> xs, const Nat& b) const;

    /// The next element in the carrier order (inherited from N).
    Nat successor(const Nat& a) const { return a + Nat(1u); }

private:
    ProjectiveArithmetic(Generator gen, ValidationReport validation);

    Generator gen_;
    ValidationReport validation_;
    bool is_arithmetic_;
};

/// Display convention for arithmetic elements: a subscript marker appended
/// to the numeral, "2_u" in ASCII or "2_μ" with unicode enabled.
std::string format_element(const Nat& n, bool unicode = false);

/// Accepts bare numerals and both marker forms; parse(format(n)) = n.
Nat parse_element(std::string_view text);

}  // namespace nda
