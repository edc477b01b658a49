#include "nda/arithmetic.hpp"

#include "nda/errors.hpp"

#include <stdexcept>
#include <vector>

namespace nda {

ProjectiveArithmetic::ProjectiveArithmetic(Generator gen, ValidationReport validation)
    : gen_(std::move(gen)),
      validation_(std::move(validation)),
      is_arithmetic_(validation_.all_passed()) {}

ProjectiveArithmetic ProjectiveArithmetic::make(Generator gen, const Nat& validation_bound) {
    ValidationReport report = gen.validate(validation_bound);
    return ProjectiveArithmetic(std::move(gen), std::move(report));
}

Nat ProjectiveArithmetic::add(const Nat& a, const Nat& b) const {
    return gen_.coprojector(gen_.projector(a) + gen_.projector(b));
}

Nat ProjectiveArithmetic::mul(const Nat& a, const Nat& b) const {
    return gen_.coprojector(gen_.projector(a) * gen_.projector(b));
}

Nat ProjectiveArithmetic::sum_n(std::span<const Nat> xs) const {
    if (xs.empty()) throw std::invalid_argument("sum_n: empty list");
    Nat acc = gen_.projector(xs[0]);
    for (std::size_t i = 1; i < xs.size(); ++i) acc += gen_.projector(xs[i]);
    return gen_.coprojector(acc);
}

Nat ProjectiveArithmetic::prod_n(std::span<const Nat> xs) const {
    if (xs.empty()) throw std::invalid_argument("prod_n: empty list");
    Nat acc = gen_.projector(xs[0]);
    for (std::size_t i = 1; i < xs.size(); ++i) acc *= gen_.projector(xs[i]);
    return gen_.coprojector(acc);
}

Nat ProjectiveArithmetic::sum_n(std::initializer_list<Nat> xs) const {
    return sum_n(std::span<const Nat>(xs.begin(), xs.size()));
}

Nat ProjectiveArithmetic::prod_n(std::initializer_list<Nat> xs) const {
    return prod_n(std::span<const Nat>(xs.begin(), xs.size()));
}

bool ProjectiveArithmetic::much_less(const Nat& a, const Nat& b) const {
    return add(b, a) == b;
}

bool ProjectiveArithmetic::much_less_group(std::span<const Nat> xs, const Nat& b) const {
    if (xs.empty()) throw std::invalid_argument("much_less_group: the group must be non-empty");
    std::vector<Nat> all(xs.begin(), xs.end());
    all.push_back(b);
    return sum_n(all) == b;
}

bool ProjectiveArithmetic::much_less_group(std::initializer_list<Nat> xs, const Nat& b) const {
    return much_less_group(std::span<const Nat>(xs.begin(), xs.size()), b);
}

bool ProjectiveArithmetic::much_much_less(const Nat& a, const Nat& b) const {
    return mul(b, a) == b;
}

bool ProjectiveArithmetic::much_much_less_group(std::span<const Nat> xs, const Nat& b) const {
    if (xs.empty())
        throw std::invalid_argument("much_much_less_group: the group must be non-empty");
    std::vector<Nat> all(xs.begin(), xs.end());
    all.push_back(b);
    return prod_n(all) == b;
}

bool ProjectiveArithmetic::much_much_less_group(std::initializer_list<Nat> xs,
                                                const Nat& b) const {
    return much_much_less_group(std::span<const Nat>(xs.begin(), xs.size()), b);
}

std::string format_element(const Nat& n, bool unicode) {
    return n.to_decimal() + (unicode ? "_μ" : "_u");
}

Nat parse_element(std::string_view text) {
    std::string_view digits = text;
    for (std::string_view suffix : {std::string_view("_u"), std::string_view("_μ")}) {
        if (digits.size() > suffix.size() && digits.ends_with(suffix)) {
            digits.remove_suffix(suffix.size());
            break;
        }
    }
    return Nat::from_decimal(digits);
}

}  // namespace nda
