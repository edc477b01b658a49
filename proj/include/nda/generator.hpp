#pragma once

#include "nda/nat.hpp"

#include <atomic>
#include <deque>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nda {

enum class Family { identity, linear, power, exp, dblexp, piecewise, table };

/// Growth class of the projector; used only to pick the inverse-search
/// strategy inside coprojector().
enum class GrowthClass { linear, polynomial, exponential, tabulated };

std::string_view family_name(Family f);

/// Parsed form of a generator description in the mini-language:
///
///   identity | linear:<k> | power:<k> | exp:<b> | dblexp
///   | piecewise:(x0,y0),(x1,y1),...   (integer breakpoints, x0 = 0,
///     x strictly increasing, y non-decreasing, last segment rising;
///     values between breakpoints are ceil of the exact rational
///     interpolation, extended past the last point with the last slope)
///   | table:<path>                    (one decimal value per line,
///     line i = f_T(i), non-decreasing)
///
/// Parameters k and b are positive integers or exact rationals p/q and are
/// stored reduced. All evaluation derived from a spec is exact; no floating
/// point is involved anywhere.
struct GeneratorSpec {
    Family family = Family::identity;
    Nat num{1u};  // parameter numerator (linear/power/exp)
    Nat den{1u};  // parameter denominator, >= 1
    std::vector<std::pair<Nat, Nat>> breakpoints;  // piecewise
    std::string table_path;                        // table; empty when in-memory
    std::vector<Nat> table_values;                 // table

    /// Canonical mini-language text; parsing it reproduces this value.
    std::string render() const;

    bool operator==(const GeneratorSpec&) const = default;
};

/// Definition-4 condition report over a checked prefix [0, checked_bound].
///
/// cond2 is the integer-point surrogate for strict increase of f (strictness
/// of f between integer points is not decidable from integer samples); a
/// failing condition always carries a concrete witness within the prefix.
struct ValidationReport {
    Nat checked_bound;       // actual prefix checked (may be clamped; see notes)
    bool cond1_zero = true;  // f_T(0) = 0
    bool cond2_strict = true;
    std::optional<Nat> cond2_witness;  // m with f_T(m+1) <= f_T(m)
    bool cond3_convex = true;
    std::optional<std::pair<Nat, Nat>> cond3_witness;  // a < b with d(a) > d(b)
    std::string notes;

    bool all_passed() const { return cond1_zero && cond2_strict && cond3_convex; }
};

/// Exact evaluation of a generator: the projector f_T(n) = ceil(f(n)) and
/// the coprojector f^T(y) = max{m : f_T(m) <= y}.
///
/// The coprojector is computed purely by monotone search over the projector
/// (no symbolic inversion): tabulated specs binary-search the table,
/// exponential-class generators step upward from 0 (a doubling bracket would
/// materialize values like 2^(2^(2m)) long before the answer), and
/// linear/polynomial-class generators bracket through a lazily grown
/// power-of-two checkpoint cache and then narrow by bisection, with exact
/// secant interpolation probes interleaved for the linear class.
///
/// Generators are immutable after construction; evaluations are pure and
/// safe to run from any number of threads. The checkpoint cache is a
/// transparent memo shared across copies.
class Generator {
public:
    static Generator from_spec(GeneratorSpec spec);  // std::invalid_argument on bad specs
    static Generator from_table(std::vector<Nat> values, std::string path = "");

    const GeneratorSpec& spec() const { return *spec_; }
    std::string spec_text() const { return spec_->render(); }
    GrowthClass growth() const { return growth_; }

    Nat projector(const Nat& n) const;

    /// Throws BelowRangeError when y < f_T(0).
    Nat coprojector(const Nat& y) const;

    /// Checks the three projective-arithmetic conditions on [0, bound].
    /// bound >= 2 required. For tables the prefix is clamped to the table,
    /// for dblexp to the largest argument evaluable within the resource cap;
    /// the report records the prefix actually checked.
    ValidationReport validate(const Nat& bound) const;

    /// Largest argument the projector accepts, when such a limit exists.
    std::optional<Nat> max_argument() const;

private:
    explicit Generator(GeneratorSpec spec);

    // pow2[i] = f_T(2^i). Readers only load `ready` (no read locks, so
    // concurrent scans do not bounce a lock line between cores); the deque
    // keeps element references stable while writers append under `mu`.
    struct Cache {
        std::mutex mu;
        std::deque<Nat> pow2;
        std::atomic<std::size_t> ready{0};
    };

    struct BracketHit {
        std::size_t index;  // smallest i with f_T(2^i) > y
        Nat below;          // f_T(2^(i-1)) when i > 0
        Nat above;          // f_T(2^i)
    };

    BracketHit bracket_above(const Nat& y) const;

    std::shared_ptr<const GeneratorSpec> spec_;
    std::shared_ptr<Cache> cache_;
    GrowthClass growth_ = GrowthClass::linear;
};

/// Parses the mini-language (see GeneratorSpec). table: specs read their
/// file eagerly. Throws ParseError with the offending byte offset.
Generator parse_generator_spec(std::string_view text);

}  // namespace nda
