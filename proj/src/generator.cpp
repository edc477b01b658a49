#include "nda/generator.hpp"

#include "nda/errors.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace nda {

namespace {

// Hard caps on exact evaluation. 2^(2^27) occupies 16 MB; anything beyond
// that is past desk scale and gets a ResourceLimitError instead of an
// out-of-memory kill.
constexpr unsigned long kDblexpMaxArg = 27;
constexpr unsigned long kExpMaxBits = 1ul << 28;
constexpr unsigned long kDblexpValidationArg = 20;
constexpr unsigned long kMaxScanBound = 10'000'000;

unsigned long scan_bound(const Nat& bound, const char* what) {
    if (!bound.fits_ulong() || bound.to_ulong() > kMaxScanBound)
        throw std::invalid_argument(std::string(what) + ": bound too large for an exhaustive scan");
    return bound.to_ulong();
}

void check_spec(const GeneratorSpec& s) {
    auto positive_param = [&](const char* family) {
        if (s.num.is_zero() || s.den.is_zero())
            throw std::invalid_argument(std::string(family) + ": parameter must be positive");
        if (!s.num.fits_ulong() || !s.den.fits_ulong())
            throw std::invalid_argument(std::string(family) + ": parameter out of supported range");
    };
    switch (s.family) {
        case Family::identity:
        case Family::dblexp:
            break;
        case Family::linear:
            positive_param("linear");
            break;
        case Family::power:
            positive_param("power");
            break;
        case Family::exp:
            positive_param("exp");
            if (s.num <= s.den)
                throw std::invalid_argument("exp: base must exceed 1, or f_T is eventually constant");
            break;
        case Family::piecewise: {
            const auto& bp = s.breakpoints;
            if (bp.size() < 2)
                throw std::invalid_argument("piecewise: at least two breakpoints required");
            if (!bp.front().first.is_zero())
                throw std::invalid_argument("piecewise: first breakpoint must have x = 0");
            for (std::size_t i = 1; i < bp.size(); ++i) {
                if (!(bp[i - 1].first < bp[i].first))
                    throw std::invalid_argument("piecewise: x coordinates must be strictly increasing");
                if (bp[i].second < bp[i - 1].second)
                    throw std::invalid_argument("piecewise: y coordinates must be non-decreasing");
            }
            if (bp[bp.size() - 2].second == bp.back().second)
                throw std::invalid_argument("piecewise: last segment must rise, or f_T is eventually constant");
            break;
        }
        case Family::table: {
            const auto& t = s.table_values;
            if (t.size() < 2) throw std::invalid_argument("table: at least two values required");
            for (std::size_t i = 1; i < t.size(); ++i)
                if (t[i] < t[i - 1])
                    throw std::invalid_argument("table: values must be non-decreasing");
            break;
        }
    }
}

GrowthClass growth_of(Family f) {
    switch (f) {
        case Family::identity:
        case Family::linear:
        case Family::piecewise:
            return GrowthClass::linear;
        case Family::power:
            return GrowthClass::polynomial;
        case Family::exp:
        case Family::dblexp:
            return GrowthClass::exponential;
        case Family::table:
            return GrowthClass::tabulated;
    }
    return GrowthClass::linear;
}

Nat piecewise_eval(const GeneratorSpec& s, const Nat& n) {
    const auto& bp = s.breakpoints;
    // Last breakpoint at or before n; x0 = 0 guarantees one exists.
    auto it = std::upper_bound(bp.begin(), bp.end(), n,
                               [](const Nat& v, const std::pair<Nat, Nat>& p) {
                                   return v < p.first;
                               });
    std::size_t i = static_cast<std::size_t>(it - bp.begin()) - 1;
    // Slope comes from segment [seg, seg+1]: the interior segment n falls
    // in, or the final segment extended past the last breakpoint.
    std::size_t seg = std::min(i, bp.size() - 2);
    Nat run = checked_sub(bp[seg + 1].first, bp[seg].first);
    Nat rise = checked_sub(bp[seg + 1].second, bp[seg].second);
    // ceil of the exact rational interpolation from the anchor bp[i]
    return bp[i].second + cdiv(rise * checked_sub(n, bp[i].first), run);
}

}  // namespace

std::string_view family_name(Family f) {
    switch (f) {
        case Family::identity: return "identity";
        case Family::linear: return "linear";
        case Family::power: return "power";
        case Family::exp: return "exp";
        case Family::dblexp: return "dblexp";
        case Family::piecewise: return "piecewise";
        case Family::table: return "table";
    }
    return "?";
}

std::string GeneratorSpec::render() const {
    std::ostringstream os;
    os << family_name(family);
    switch (family) {
        case Family::identity:
        case Family::dblexp:
            break;
        case Family::linear:
        case Family::power:
        case Family::exp:
            os << ":" << num;
            if (den != Nat(1u)) os << "/" << den;
            break;
        case Family::piecewise:
            os << ":";
            for (std::size_t i = 0; i < breakpoints.size(); ++i) {
                if (i) os << ",";
                os << "(" << breakpoints[i].first << "," << breakpoints[i].second << ")";
            }
            break;
        case Family::table:
            os << ":" << (table_path.empty() ? "<inline>" : table_path);
            break;
    }
    return os.str();
}

Generator::Generator(GeneratorSpec spec)
    : spec_(std::make_shared<const GeneratorSpec>(std::move(spec))),
      cache_(std::make_shared<Cache>()),
      growth_(growth_of(spec_->family)) {}

Generator Generator::from_spec(GeneratorSpec spec) {
    check_spec(spec);
    return Generator(std::move(spec));
}

Generator Generator::from_table(std::vector<Nat> values, std::string path) {
    GeneratorSpec s;
    s.family = Family::table;
    s.table_values = std::move(values);
    s.table_path = std::move(path);
    return from_spec(std::move(s));
}

std::optional<Nat> Generator::max_argument() const {
    const GeneratorSpec& s = *spec_;
    switch (s.family) {
        case Family::table:
            return Nat(static_cast<unsigned long>(s.table_values.size() - 1));
        case Family::dblexp:
            return Nat(kDblexpMaxArg);
        case Family::exp: {
            unsigned long bits_per_step =
                static_cast<unsigned long>(boost::multiprecision::msb(s.num.raw())) + 1;
            return Nat(kExpMaxBits / bits_per_step);
        }
        default:
            return std::nullopt;
    }
}

Nat Generator::projector(const Nat& n) const {
    const GeneratorSpec& s = *spec_;
    switch (s.family) {
        case Family::identity:
            return n;
        case Family::linear:
            if (s.den == Nat(1u)) return n * s.num;
            return cdiv(n * s.num, s.den);
        case Family::power: {
            unsigned long p = s.num.to_ulong();
            if (s.den == Nat(1u)) return pow_u(n, p);
            unsigned long q = s.den.to_ulong();
            // ceil(n^(p/q)): smallest t with t^q >= n^p
            Nat x = pow_u(n, p);
            Nat r = root_floor(x, q);
            return pow_u(r, q) == x ? r : r + Nat(1u);
        }
        case Family::exp: {
            if (!n.fits_ulong())
                throw ResourceLimitError("exp projector: argument too large for exact evaluation");
            unsigned long e = n.to_ulong();
            if (auto mx = max_argument(); Nat(e) > *mx)
                throw ResourceLimitError("exp projector: value would exceed the resource cap");
            Nat pe = pow_u(s.num, e);
            if (s.den == Nat(1u)) return pe;
            return cdiv(pe, pow_u(s.den, e));
        }
        case Family::dblexp: {
            if (!n.fits_ulong() || n.to_ulong() > kDblexpMaxArg)
                throw ResourceLimitError("dblexp projector: 2^(2^" + n.to_decimal() +
                                         ") exceeds the resource cap");
            return shl(Nat(1u), 1ul << n.to_ulong());
        }
        case Family::piecewise:
            return piecewise_eval(s, n);
        case Family::table: {
            if (!n.fits_ulong() || n.to_ulong() >= s.table_values.size())
                throw DomainError("table projector: argument " + n.to_decimal() +
                                  " beyond the tabulated range");
            return s.table_values[n.to_ulong()];
        }
    }
    throw std::logic_error("unreachable");
}

// Smallest i with f_T(2^i) > y, together with the cached values either side.
// The fast path is a single atomic load plus a binary search over settled
// entries; extension happens under the writer lock and publishes with a
// release store, so readers never see a half-built entry.
Generator::BracketHit Generator::bracket_above(const Nat& y) const {
    Cache& c = *cache_;
    auto locate = [&](std::size_t n) {
        std::size_t lo = 0, hi = n;  // first index with pow2[i] > y
        while (lo < hi) {
            std::size_t mid = (lo + hi) / 2;
            if (c.pow2[mid] <= y)
                lo = mid + 1;
            else
                hi = mid;
        }
        return BracketHit{lo, lo > 0 ? c.pow2[lo - 1] : Nat(0u), c.pow2[lo]};
    };
    std::size_t n = c.ready.load(std::memory_order_acquire);
    if (n > 0 && c.pow2[n - 1] > y) return locate(n);
    std::unique_lock lk(c.mu);
    while (c.pow2.empty() || !(c.pow2.back() > y)) {
        c.pow2.push_back(projector(shl(Nat(1u), c.pow2.size())));
        c.ready.store(c.pow2.size(), std::memory_order_release);
    }
    return locate(c.pow2.size());
}

Nat Generator::coprojector(const Nat& y) const {
    Nat flo = projector(Nat(0u));
    if (flo > y)
        throw BelowRangeError("coprojector: " + y.to_decimal() + " is below f_T(0) = " +
                              flo.to_decimal());

    if (growth_ == GrowthClass::tabulated) {
        const auto& t = spec_->table_values;
        auto it = std::upper_bound(t.begin(), t.end(), y);
        return Nat(static_cast<unsigned long>(it - t.begin()) - 1);
    }

    if (growth_ == GrowthClass::exponential) {
        // Values square (or worse) at every step, so the answer is tiny and
        // stepwise ascent touches nothing larger than f_T(answer + 1).
        // A doubling bracket would evaluate far past the answer.
        Nat m(0u);
        for (;;) {
            Nat next = m + Nat(1u);
            if (projector(next) > y) return m;
            m = std::move(next);
        }
    }

    // Bracket [2^(i-1), 2^i) through the checkpoint cache, then narrow.
    BracketHit hit = bracket_above(y);
    if (hit.index == 0) return Nat(0u);  // f_T(1) > y >= f_T(0)
    std::size_t i = hit.index;
    Nat lo = shl(Nat(1u), i - 1);
    Nat hi = shl(Nat(1u), i);
    flo = std::move(hit.below);
    Nat fhi = std::move(hit.above);

    // Invariant: f_T(lo) <= y < f_T(hi). For linear growth the probes cycle
    // secant / confirm-at-lo+1 / bisect: the exact secant lands on or next
    // to the answer along a straight segment, the confirmation probe then
    // closes the bracket in one evaluation, and the bisection turn keeps
    // the worst case logarithmic. Other growth classes bisect throughout.
    int phase = growth_ == GrowthClass::linear ? 0 : 2;
    for (;;) {
        Nat gap = checked_sub(hi, lo);
        if (gap == Nat(1u)) return lo;
        Nat guess;
        switch (phase) {
            case 0:
                guess = lo + fdiv(checked_sub(y, flo) * gap, checked_sub(fhi, flo));
                if (guess == lo) ++guess;
                if (!(guess < hi)) guess = checked_sub(hi, Nat(1u));
                phase = 1;
                break;
            case 1:
                guess = lo + Nat(1u);
                phase = 2;
                break;
            default:
                guess = fdiv(lo + hi, Nat(2u));
                phase = growth_ == GrowthClass::linear ? 0 : 2;
                break;
        }
        Nat fg = projector(guess);
        if (fg <= y) {
            lo = std::move(guess);
            flo = std::move(fg);
        } else {
            hi = std::move(guess);
            fhi = std::move(fg);
        }
    }
}

ValidationReport Generator::validate(const Nat& bound) const {
    if (bound < Nat(2u)) throw std::invalid_argument("validate: bound must be >= 2");

    ValidationReport rep;
    Nat eff = bound;
    std::optional<Nat> mx = max_argument();
    if (spec_->family == Family::dblexp) mx = Nat(kDblexpValidationArg);
    if (mx && *mx < eff) {
        eff = *mx;
        rep.notes = "prefix clamped to the largest evaluable argument";
    }
    rep.checked_bound = eff;
    unsigned long B = scan_bound(eff, "validate");

    std::vector<Nat> f(B + 1);
    for (unsigned long m = 0; m <= B; ++m) f[m] = projector(Nat(m));

    rep.cond1_zero = f[0].is_zero();

    for (unsigned long m = 0; m < B; ++m) {
        if (!(f[m] < f[m + 1])) {
            rep.cond2_strict = false;
            rep.cond2_witness = Nat(m);
            break;
        }
    }

    // Successor differences must be non-decreasing; find the
    // lexicographically smallest violating pair (a, b).
    if (B >= 2) {
        std::vector<Nat> d(B);
        for (unsigned long m = 0; m < B; ++m) d[m] = checked_sub(f[m + 1], f[m]);
        std::vector<unsigned long> sufmin(B);
        sufmin[B - 1] = B - 1;
        for (unsigned long m = B - 1; m-- > 0;)
            sufmin[m] = d[m] <= d[sufmin[m + 1]] ? m : sufmin[m + 1];
        for (unsigned long a = 0; a + 1 < B; ++a) {
            if (d[sufmin[a + 1]] < d[a]) {
                unsigned long b = a + 1;
                while (!(d[b] < d[a])) ++b;
                rep.cond3_convex = false;
                rep.cond3_witness = {Nat(a), Nat(b)};
                break;
            }
        }
    }
    return rep;
}

namespace {

// ---- mini-language parser ----

struct Cursor {
    std::string_view s;
    std::size_t pos = 0;

    bool done() const { return pos >= s.size(); }
    char peek() const { return s[pos]; }
    bool eat(char c) {
        if (!done() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c, const char* what) {
        if (!eat(c)) throw ParseError(std::string("expected '") + c + "' in " + what, pos);
    }
};

Nat parse_nat(Cursor& c, const char* what) {
    std::size_t start = c.pos;
    while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) ++c.pos;
    if (c.pos == start) throw ParseError(std::string("expected a number in ") + what, c.pos);
    return Nat::from_decimal(c.s.substr(start, c.pos - start));
}

// positive integer or exact rational p/q, reduced
void parse_param(Cursor& c, GeneratorSpec& spec, const char* what) {
    std::size_t at = c.pos;
    spec.num = parse_nat(c, what);
    spec.den = Nat(1u);
    if (c.eat('/')) spec.den = parse_nat(c, what);
    if (spec.num.is_zero() || spec.den.is_zero())
        throw ParseError(std::string(what) + ": parameter must be positive", at);
    Nat g = gcd(spec.num, spec.den);
    spec.num = fdiv(spec.num, g);
    spec.den = fdiv(spec.den, g);
}

std::vector<Nat> load_table_file(const std::string& path, std::size_t path_pos) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open table file '" + path + "'", path_pos);
    std::vector<Nat> values;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
            line.pop_back();
        std::size_t first = line.find_first_not_of(" \t");
        if (first == std::string::npos) continue;  // blank line
        try {
            values.push_back(Nat::from_decimal(std::string_view(line).substr(first)));
        } catch (const ParseError&) {
            throw ParseError("table file '" + path + "': bad value on line " +
                             std::to_string(lineno), path_pos);
        }
    }
    return values;
}

}  // namespace

Generator parse_generator_spec(std::string_view text) {
    Cursor c{text};
    std::size_t word_end = text.find(':');
    std::string_view word = text.substr(0, std::min(word_end, text.size()));
    GeneratorSpec spec;

    auto finish = [&](GeneratorSpec s) {
        try {
            return Generator::from_spec(std::move(s));
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what(), 0);
        }
    };

    if (word == "identity" || word == "dblexp") {
        spec.family = word == "identity" ? Family::identity : Family::dblexp;
        if (word_end != std::string_view::npos)
            throw ParseError(std::string(word) + " takes no parameter", word_end);
        return finish(std::move(spec));
    }
    if (word == "linear" || word == "power" || word == "exp") {
        spec.family = word == "linear"  ? Family::linear
                      : word == "power" ? Family::power
                                        : Family::exp;
        c.pos = word.size();
        c.expect(':', "generator spec");
        parse_param(c, spec, word == "linear" ? "linear" : word == "power" ? "power" : "exp");
        if (!c.done()) throw ParseError("trailing characters after parameter", c.pos);
        return finish(std::move(spec));
    }
    if (word == "piecewise") {
        spec.family = Family::piecewise;
        c.pos = word.size();
        c.expect(':', "generator spec");
        do {
            c.expect('(', "breakpoint");
            Nat x = parse_nat(c, "breakpoint x");
            c.expect(',', "breakpoint");
            Nat y = parse_nat(c, "breakpoint y");
            c.expect(')', "breakpoint");
            spec.breakpoints.emplace_back(std::move(x), std::move(y));
        } while (c.eat(','));
        if (!c.done()) throw ParseError("trailing characters after breakpoints", c.pos);
        return finish(std::move(spec));
    }
    if (word == "table") {
        spec.family = Family::table;
        c.pos = word.size();
        c.expect(':', "generator spec");
        if (c.done()) throw ParseError("expected a file path", c.pos);
        spec.table_path = std::string(text.substr(c.pos));
        spec.table_values = load_table_file(spec.table_path, c.pos);
        return finish(std::move(spec));
    }
    throw ParseError("unknown generator family '" + std::string(word) + "'", 0);
}

}  // namespace nda
