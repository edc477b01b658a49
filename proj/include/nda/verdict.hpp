#pragma once

#include "nda/nat.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace nda {

/// Identifiers for the empirically checkable laws.
enum class LawId {
    zero_neutral,                  // 0 + a = a for all a in range
    zero_absorbing,                // 0 * a = 0 for all a in range
    associativity,                 // (a+b)+c = a+(b+c); multiplication reported in notes
    nary_vs_fold,                  // n-ary sum equals left fold of the binary operation
    much_less_order,               // << is transitive and at-most-one-directional
    successor_absorption,          // f(a+1)+f(a) < f(a+2)  implies  a << a+1
    much_less_leq_compat,          // << compatible (both sides) with <=
    much_much_less_left_compat,    // <<< compatible from the left with <=
    units_propagation,             // units-group absorption vs successor-difference condition
    compatibility,                 // generic P-with-Q compatibility instance
    reverse_projectivity,          // g(h(x)) = x and h(g(y)) = y on a sample
};

std::string_view law_name(LawId id);
LawId law_from_name(std::string_view name);  // throws std::invalid_argument

enum class Relation { leq, lt, much_less, much_much_less };
enum class Side { left, right, both };

std::string_view relation_name(Relation r);
std::string_view side_name(Side s);

/// Which relation a compatibility check targets and from which side.
struct RelationSpec {
    Relation rel = Relation::much_less;
    Side side = Side::both;

    bool operator==(const RelationSpec&) const = default;
};

/// Outcome of one bounded law check.
///
/// When holds is false the witness is a concrete tuple that violates the
/// law's defining equation; re-evaluating the equation at the witness must
/// reproduce the violation.
struct LawVerdict {
    LawId law_id = LawId::zero_neutral;
    std::string subject;      // generator spec text, or a carrier description
    Nat bound;                // inclusive element bound of the tested range
    int arity = 0;            // tuple length for n-ary laws, 0 otherwise
    bool holds = true;
    std::vector<Nat> witness; // empty when holds
    std::string notes;

    bool operator==(const LawVerdict&) const = default;
};

}  // namespace nda
