#include "liftlab/rat.hpp"

#include <sstream>

namespace liftlab {

Rat rat_pow(const Rat& x, unsigned long k) {
    Rat acc(1), base = x;
    while (k) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

Rat pow2(long e) {
    if (e >= 0) {
        Int p = Int(1) << static_cast<unsigned>(e);
        return Rat(p);
    }
    Int p = Int(1) << static_cast<unsigned>(-e);
    return Rat(1) / Rat(p);
}

Rat rat_abs(const Rat& x) { return x < 0 ? Rat(-x) : x; }

Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw ParseError("rational with zero denominator: " + s);
        return Rat(num) / Rat(den);  // division canonicalizes
    } catch (const std::runtime_error&) {
        throw ParseError("bad rational literal: " + s);
    }
}

std::string rat_str(const Rat& x) { return x.str(); }

double rat_display(const Rat& x) { return x.convert_to<double>(); }

long ceil_log2_inv(const Rat& eps) {
    if (eps <= 0 || eps > 1) throw InputError("ceil_log2_inv needs eps in (0,1]");
    long m = 0;
    Rat p(1);
    while (p * eps < 1) {
        p *= 2;
        ++m;
    }
    return m;
}

std::uint64_t fnv1a64(const void* data, std::size_t len) {
    const auto* p = static_cast<const unsigned char*>(data);
    std::uint64_t h = 1469598103934665603ULL;
    for (std::size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 1099511628211ULL;
    }
    return h;
}

Rat table_mean(const std::vector<Rat>& v) {
    Rat s(0);
    for (const auto& x : v) s += x;
    return s / Rat(static_cast<unsigned long>(v.size()));
}

}  // namespace liftlab
