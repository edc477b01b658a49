#pragma once

#include "nda/arithmetic.hpp"
#include "nda/verdict.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace nda {

/// Bounded empirical law checks. Every check is an exhaustive scan of the
/// stated range, so a verdict is a decidable statement about that range:
/// holds = true means no counterexample exists below the bound, and
/// holds = false carries a witness that re-derives the violation when
/// substituted into the law's defining equation. Scans run in
/// lexicographic order, so witnesses are the smallest violations.

/// 0 + a = a for all a <= bound. The verdict cross-checks the
/// strict-increase biconditional: the law must agree with the cond2
/// surrogate checked over the same prefix, and any disagreement is named
/// in the notes as a finding.
LawVerdict check_zero_neutral(const ProjectiveArithmetic& A, const Nat& bound);

/// 0 * a = 0 for all a <= bound (the absorbing property). The notes also
/// report on the face-value identity 0 * a = a, which the definitions
/// force to fail for a >= 1 whenever f_T(0) = 0.
LawVerdict check_zero_absorbing(const ProjectiveArithmetic& A, const Nat& bound);

/// (a+b)+c = a+(b+c) over the full cube; the verdict is about addition,
/// multiplication's outcome on the same cube is reported in the notes.
LawVerdict check_associativity(const ProjectiveArithmetic& A, const Nat& bound);

/// sum_n(xs) equals the left fold of binary addition for every tuple of
/// length n with entries <= bound.
LawVerdict check_nary_vs_fold(const ProjectiveArithmetic& A, int n, const Nat& bound);

/// << is transitive and at-most-one-directional on [0, bound]. Totality
/// (is << total on the range?) is reported separately in the notes.
LawVerdict check_much_less_order(const ProjectiveArithmetic& A, const Nat& bound);

/// f_T(a+1) + f_T(a) < f_T(a+2) implies a << a+1, pointwise on [0, bound].
LawVerdict check_successor_absorption(const ProjectiveArithmetic& A, const Nat& bound);

/// Compatibility of relation P with relation Q over [0, bound]^3, read as
///   right: a P b and b Q c  imply  a P c
///   left:  a Q b and b P c  imply  a P c
/// (relation composition "a (P.Q) c iff exists b: a P b and b Q c").
LawVerdict check_compatibility(const ProjectiveArithmetic& A, RelationSpec P, Relation Q,
                               const Nat& bound);

/// Fixed compatibility instances: << against <= from both sides, and
/// <<< against <= from the left.
LawVerdict check_much_less_leq_compat(const ProjectiveArithmetic& A, const Nat& bound);
LawVerdict check_much_much_less_left_compat(const ProjectiveArithmetic& A, const Nat& bound);

/// Evaluates both sides of the propagation biconditional for the units
/// group of length n-1: (i) for a <= b, units <<_n a implies units <<_n b;
/// (ii) successor differences are monotone. holds means the two sides
/// agree on the range; notes describe each side.
LawVerdict check_units_propagation(const ProjectiveArithmetic& A, int n, const Nat& bound);

/// One runnable law instance; drives both the CLI suite and the
/// counterexample sweep.
struct LawRequest {
    LawId id = LawId::associativity;
    int arity = 3;  // nary_vs_fold / units_propagation
    RelationSpec P{Relation::much_much_less, Side::right};
    Relation Q = Relation::lt;  // compatibility only
};

LawVerdict run_law(const ProjectiveArithmetic& A, const LawRequest& req, const Nat& bound);

/// The standard checks in a stable order, as run by `laws ... --law all`.
std::vector<LawRequest> standard_law_suite();

/// Sweeps a generator-family pattern (the substring "{k}" is replaced by
/// each integer in [param_lo, param_hi]), runs one law per instance, and
/// returns the failing verdicts. Mechanized counterexample search for the
/// non-associativity and incompatibility phenomena.
std::vector<LawVerdict> search_counterexample(const LawRequest& req, std::string_view pattern,
                                              const Nat& param_lo, const Nat& param_hi,
                                              const Nat& bound);

/// All M <= bound satisfying M + 1 = M: the set on which a machine-infinity
/// axiom holds without contradiction inside this arithmetic.
struct MachineInfinityReport {
    std::string subject;
    Nat bound;
    std::vector<Nat> members;

    bool operator==(const MachineInfinityReport&) const = default;
};

MachineInfinityReport machine_infinity_demo(const ProjectiveArithmetic& A, const Nat& bound);

}  // namespace nda
