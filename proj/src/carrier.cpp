#include "nda/carrier.hpp"

#include "nda/errors.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace nda {

CarrierSet CarrierSet::all_nat() { return CarrierSet{}; }

CarrierSet CarrierSet::finite(std::vector<Nat> elements) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    CarrierSet s;
    s.finite_ = std::move(elements);
    return s;
}

bool CarrierSet::contains(const Nat& x) const {
    if (!finite_) return true;
    return std::binary_search(finite_->begin(), finite_->end(), x);
}

const std::vector<Nat>& CarrierSet::elements() const {
    if (!finite_) throw DomainError("CarrierSet: cannot enumerate all of N");
    return *finite_;
}

std::string CarrierSet::describe() const {
    if (!finite_) return "N";
    std::ostringstream os;
    os << "{";
    const auto& es = *finite_;
    for (std::size_t i = 0; i < es.size(); ++i) {
        if (i == 4 && es.size() > 6) {
            os << ", ..., " << es.back();
            break;
        }
        if (i) os << ", ";
        os << es[i];
    }
    os << "}";
    return os.str();
}

CarrierMap::CarrierMap(std::string label, CarrierSet source, CarrierSet target,
                       std::function<Nat(const Nat&)> fn)
    : label_(std::move(label)),
      source_(std::move(source)),
      target_(std::move(target)),
      fn_(std::move(fn)) {}

CarrierMap CarrierMap::identity(const CarrierSet& on) {
    return CarrierMap("id", on, on, [](const Nat& x) { return x; });
}

CarrierMap CarrierMap::inclusion(const CarrierSet& source, const CarrierSet& target) {
    return CarrierMap("incl", source, target, [](const Nat& x) { return x; });
}

Nat CarrierMap::apply(const Nat& x) const {
    if (!source_.contains(x))
        throw DomainError("map '" + label_ + "' applied outside its source at " +
                          x.to_decimal());
    Nat y = fn_(x);
    if (!target_.contains(y))
        throw DomainError("map '" + label_ + "' escapes its target: " + x.to_decimal() +
                          " -> " + y.to_decimal());
    return y;
}

AbstractPrearithmetic::AbstractPrearithmetic(std::string label, CarrierSet carrier,
                                             BinOp add, BinOp mul)
    : label_(std::move(label)),
      carrier_(std::move(carrier)),
      add_(std::move(add)),
      mul_(std::move(mul)) {}

Nat AbstractPrearithmetic::eval(const BinOp& op, const char* name, const Nat& a,
                                const Nat& b) const {
    if (!carrier_.contains(a) || !carrier_.contains(b))
        throw DomainError(std::string(name) + " in '" + label_ +
                          "' applied outside the carrier");
    Nat r = op(a, b);
    if (!carrier_.contains(r))
        throw DomainError(std::string(name) + " in '" + label_ +
                          "' is not closed: result " + r.to_decimal());
    return r;
}

Nat AbstractPrearithmetic::add(const Nat& a, const Nat& b) const {
    return eval(add_, "add", a, b);
}

Nat AbstractPrearithmetic::mul(const Nat& a, const Nat& b) const {
    return eval(mul_, "mul", a, b);
}

AbstractPrearithmetic diophantine_arithmetic() {
    return AbstractPrearithmetic(
        "N", CarrierSet::all_nat(),
        [](const Nat& a, const Nat& b) { return a + b; },
        [](const Nat& a, const Nat& b) { return a * b; });
}

AbstractPrearithmetic induce_prearithmetic(const AbstractPrearithmetic& base,
                                           const CarrierMap& g, const CarrierMap& h) {
    if (!(g.target() == base.carrier()))
        throw DomainError("induce: g must map the new carrier into the base carrier");
    if (!(h.source() == base.carrier()))
        throw DomainError("induce: h must map the base carrier back out");
    if (!(h.target() == g.source()))
        throw DomainError("induce: h must land in the new carrier");

    // The maps and the base are captured by value; the result is
    // self-contained and freely shareable.
    auto add = [base, g, h](const Nat& a, const Nat& b) {
        return h.apply(base.add(g.apply(a), g.apply(b)));
    };
    auto mul = [base, g, h](const Nat& a, const Nat& b) {
        return h.apply(base.mul(g.apply(a), g.apply(b)));
    };
    return AbstractPrearithmetic(base.label() + " via (" + g.label() + ", " + h.label() + ")",
                                 g.source(), std::move(add), std::move(mul));
}

AbstractPrearithmetic residue_prearithmetic(const Nat& m) {
    if (m.is_zero()) throw std::invalid_argument("residue_prearithmetic: m must be >= 1");
    std::vector<Nat> reps;
    Nat k(1u);
    while (k <= m) {
        reps.push_back(k);
        ++k;
    }
    CarrierSet carrier = CarrierSet::finite(std::move(reps));
    CarrierMap g = CarrierMap::inclusion(carrier, CarrierSet::all_nat());
    CarrierMap h("mod" + m.to_decimal(), CarrierSet::all_nat(), carrier,
                 [m](const Nat& n) {
                     if (n.is_zero()) return m;  // only 0 has no n-1; 0 = m (mod m)
                     return mod(checked_sub(n, Nat(1u)), m) + Nat(1u);
                 });
    auto induced = induce_prearithmetic(diophantine_arithmetic(), g, h);
    return AbstractPrearithmetic("Z/" + m.to_decimal() + " on {1.." + m.to_decimal() + "}",
                                 induced.carrier(),
                                 [induced](const Nat& a, const Nat& b) { return induced.add(a, b); },
                                 [induced](const Nat& a, const Nat& b) { return induced.mul(a, b); });
}

LawVerdict check_reverse_projectivity(const AbstractPrearithmetic& base,
                                      const CarrierMap& g, const CarrierMap& h,
                                      std::span<const Nat> sample) {
    LawVerdict v;
    v.law_id = LawId::reverse_projectivity;
    v.subject = "g=" + g.label() + ", h=" + h.label() + " over " + base.label();
    v.bound = sample.empty() ? Nat(0u) : sample.back();
    for (const Nat& x : sample) {
        bool in_base = h.source().contains(x);
        bool in_new = g.source().contains(x);
        if (!in_base && !in_new)
            throw DomainError("sample element " + x.to_decimal() +
                              " lies in neither carrier");
        if (in_base) {
            Nat back = g.apply(h.apply(x));
            if (back != x) {
                v.holds = false;
                v.witness = {x};
                v.notes = "g(h(" + x.to_decimal() + ")) = " + back.to_decimal();
                return v;
            }
        }
        if (in_new) {
            Nat back = h.apply(g.apply(x));
            if (back != x) {
                v.holds = false;
                v.witness = {x};
                v.notes = "h(g(" + x.to_decimal() + ")) = " + back.to_decimal();
                return v;
            }
        }
    }
    v.notes = "g·h and h·g act as identities on the sample";
    return v;
}

}  // namespace nda
