#pragma once

#include "nda/nat.hpp"
#include "nda/verdict.hpp"

#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace nda {

/// Element universe of a prearithmetic: either the full set N or an
/// explicit finite ordered list. No other carrier encodings exist, so
/// membership and enumeration stay decidable.
class CarrierSet {
public:
    static CarrierSet all_nat();
    static CarrierSet finite(std::vector<Nat> elements);  // sorted, deduplicated

    bool is_finite() const { return finite_.has_value(); }
    bool contains(const Nat& x) const;

    /// Finite carriers only.
    const std::vector<Nat>& elements() const;

    std::string describe() const;

    bool operator==(const CarrierSet& o) const { return finite_ == o.finite_; }

private:
    CarrierSet() = default;
    std::optional<std::vector<Nat>> finite_;  // nullopt means all of N
};

/// Total mapping between two carriers; the projector g and coprojector h
/// of the induced-operation construction are CarrierMaps.
class CarrierMap {
public:
    CarrierMap(std::string label, CarrierSet source, CarrierSet target,
               std::function<Nat(const Nat&)> fn);

    static CarrierMap identity(const CarrierSet& on);
    static CarrierMap inclusion(const CarrierSet& source, const CarrierSet& target);

    const std::string& label() const { return label_; }
    const CarrierSet& source() const { return source_; }
    const CarrierSet& target() const { return target_; }

    /// Applies the map; DomainError when x is outside the declared source
    /// or the image escapes the declared target. Never silent.
    Nat apply(const Nat& x) const;

private:
    std::string label_;
    CarrierSet source_;
    CarrierSet target_;
    std::function<Nat(const Nat&)> fn_;
};

/// A carrier with total binary addition and multiplication.
class AbstractPrearithmetic {
public:
    using BinOp = std::function<Nat(const Nat&, const Nat&)>;

    AbstractPrearithmetic(std::string label, CarrierSet carrier, BinOp add, BinOp mul);

    const std::string& label() const { return label_; }
    const CarrierSet& carrier() const { return carrier_; }

    /// Both operations check argument membership and closure of the result.
    Nat add(const Nat& a, const Nat& b) const;
    Nat mul(const Nat& a, const Nat& b) const;

private:
    Nat eval(const BinOp& op, const char* name, const Nat& a, const Nat& b) const;

    std::string label_;
    CarrierSet carrier_;
    BinOp add_;
    BinOp mul_;
};

/// The conventional arithmetic (N; +, *).
AbstractPrearithmetic diophantine_arithmetic();

/// Builds the prearithmetic weakly projective with respect to `base`:
///   a +1 b = h(g(a) +2 g(b)),   a o1 b = h(g(a) o2 g(b)).
/// g must map the new carrier into base's carrier and h back out of it.
AbstractPrearithmetic induce_prearithmetic(const AbstractPrearithmetic& base,
                                           const CarrierMap& g, const CarrierMap& h);

/// The arithmetic of residues modulo m on representatives {1, ..., m},
/// induced from (N; +, *) with g = inclusion and h(n) = ((n-1) mod m) + 1.
/// m >= 1 required.
AbstractPrearithmetic residue_prearithmetic(const Nat& m);

/// Checks g(h(x)) = x over sampled base-carrier elements and h(g(y)) = y
/// over sampled new-carrier elements; witness is the first violation in
/// sample order.
LawVerdict check_reverse_projectivity(const AbstractPrearithmetic& base,
                                      const CarrierMap& g, const CarrierMap& h,
                                      std::span<const Nat> sample);

}  // namespace nda
