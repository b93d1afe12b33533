#include "liftlab/boolfun.hpp"

#include <algorithm>

namespace liftlab {

BooleanFunction::BooleanFunction(int n, std::vector<Rat> values)
    : n_(n), values_(std::move(values)) {
    if (n < 0 || n > 30) throw InputError("BooleanFunction: bad dimension");
    if (values_.size() != (std::size_t(1) << n))
        throw InputError("BooleanFunction: table length must be 2^n");
}

BooleanFunction BooleanFunction::constant(int n, const Rat& c) {
    return BooleanFunction(n, std::vector<Rat>(std::size_t(1) << n, c));
}

bool BooleanFunction::nonneg() const {
    return std::all_of(values_.begin(), values_.end(), [](const Rat& v) { return v >= 0; });
}

BooleanFunction BooleanFunction::operator+(const BooleanFunction& g) const {
    if (n_ != g.n_) throw InputError("dimension mismatch");
    std::vector<Rat> out(values_);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += g.values_[i];
    return BooleanFunction(n_, std::move(out));
}

BooleanFunction BooleanFunction::operator-(const BooleanFunction& g) const {
    if (n_ != g.n_) throw InputError("dimension mismatch");
    std::vector<Rat> out(values_);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] -= g.values_[i];
    return BooleanFunction(n_, std::move(out));
}

BooleanFunction BooleanFunction::operator*(const BooleanFunction& g) const {
    if (n_ != g.n_) throw InputError("dimension mismatch");
    std::vector<Rat> out(values_);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] *= g.values_[i];
    return BooleanFunction(n_, std::move(out));
}

BooleanFunction BooleanFunction::operator*(const Rat& c) const {
    std::vector<Rat> out(values_);
    for (auto& v : out) v *= c;
    return BooleanFunction(n_, std::move(out));
}

BooleanFunction BooleanFunction::operator+(const Rat& c) const {
    std::vector<Rat> out(values_);
    for (auto& v : out) v += c;
    return BooleanFunction(n_, std::move(out));
}

FourierSpectrum::FourierSpectrum(int n, std::map<std::uint32_t, Rat> coeffs)
    : n_(n), coeffs_(std::move(coeffs)) {
    std::erase_if(coeffs_, [](const auto& kv) { return kv.second == 0; });
}

Rat FourierSpectrum::coeff(std::uint32_t S) const {
    auto it = coeffs_.find(S);
    return it == coeffs_.end() ? Rat(0) : it->second;
}

int FourierSpectrum::degree() const {
    int d = 0;
    for (const auto& [S, c] : coeffs_)
        d = std::max(d, __builtin_popcount(S));
    return d;
}

Rat FourierSpectrum::energy() const {
    Rat e(0);
    for (const auto& [S, c] : coeffs_) e += c * c;
    return e;
}

namespace {

// In-place butterfly; the kernel (-1)^{popcount(i & S)} matches chi_S under
// the fixed point order, so no index shuffling is needed.
void wht_inplace(std::vector<Rat>& a) {
    const std::size_t m = a.size();
    for (std::size_t len = 1; len < m; len <<= 1) {
        for (std::size_t i = 0; i < m; i += len << 1) {
            for (std::size_t j = i; j < i + len; ++j) {
                Rat u = a[j], v = a[j + len];
                a[j] = u + v;
                a[j + len] = u - v;
            }
        }
    }
}

}  // namespace

FourierSpectrum fwht(const BooleanFunction& f, int n_cap) {
    if (f.n() > n_cap) throw ResourceError("fwht: dimension over cap");
    std::vector<Rat> a = f.values();
    wht_inplace(a);
    const Rat scale = pow2(-f.n());
    std::map<std::uint32_t, Rat> coeffs;
    for (std::uint32_t S = 0; S < a.size(); ++S)
        if (a[S] != 0) coeffs.emplace(S, a[S] * scale);
    return FourierSpectrum(f.n(), std::move(coeffs));
}

BooleanFunction inverse_fwht(const FourierSpectrum& spec) {
    std::vector<Rat> a(std::size_t(1) << spec.n(), Rat(0));
    for (const auto& [S, c] : spec.coeffs()) a[S] = c;
    wht_inplace(a);
    return BooleanFunction(spec.n(), std::move(a));
}

int fourier_degree(const BooleanFunction& f) { return fwht(f).degree(); }

Rat Conjunction::eval(std::uint32_t idx) const {
    return matches(idx) ? pow2(width()) : Rat(0);
}

BooleanFunction Conjunction::as_function(int n) const {
    std::vector<Rat> vals(std::size_t(1) << n, Rat(0));
    const Rat scale = pow2(width());
    for (std::uint32_t idx = 0; idx < vals.size(); ++idx)
        if (matches(idx)) vals[idx] = scale;
    return BooleanFunction(n, std::move(vals));
}

ConicalJuntaRep::ConicalJuntaRep(std::vector<std::pair<Rat, Conjunction>> terms)
    : terms_(std::move(terms)) {
    for (const auto& [w, c] : terms_)
        if (w < 0) throw InputError("ConicalJuntaRep: negative weight");
}

Rat ConicalJuntaRep::eval(std::uint32_t idx) const {
    Rat s(0);
    for (const auto& [w, c] : terms_)
        if (c.matches(idx)) s += w * pow2(c.width());
    return s;
}

BooleanFunction ConicalJuntaRep::as_function(int n) const {
    std::vector<Rat> vals(std::size_t(1) << n, Rat(0));
    for (const auto& [w, c] : terms_) {
        const Rat t = w * pow2(c.width());
        for (std::uint32_t idx = 0; idx < vals.size(); ++idx)
            if (c.matches(idx)) vals[idx] += t;
    }
    return BooleanFunction(n, std::move(vals));
}

Rat ConicalJuntaRep::total_weight() const {
    Rat s(0);
    for (const auto& [w, c] : terms_) s += w;
    return s;
}

int ConicalJuntaRep::max_width() const {
    int d = 0;
    for (const auto& [w, c] : terms_) d = std::max(d, c.width());
    return d;
}

DecayVerdict is_eps_decaying(const FourierSpectrum& h, const Rat& eps_exponent) {
    // |hhat(S)| <= 2^{-e|S|}  <=>  hhat(S)^{2r} <= 2^{-2p|S|} for e = p/r.
    const Int p = numerator(eps_exponent);
    const unsigned long r = denominator(eps_exponent).convert_to<unsigned long>();
    if (h.coeff(0) != 0) return {false, 0u, h.coeff(0)};

    // Spectrum map is mask-ordered; re-rank by (popcount, mask).
    std::vector<std::pair<std::uint32_t, Rat>> entries(h.coeffs().begin(), h.coeffs().end());
    std::stable_sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
        return __builtin_popcount(a.first) < __builtin_popcount(b.first);
    });
    for (const auto& [S, c] : entries) {
        if (S == 0) continue;
        const long s = __builtin_popcount(S);
        Int exp2 = Int(2) * p * s;  // compare c^{2r} <= 2^{-exp2}
        Rat lhs = rat_pow(c, 2 * r);
        Rat rhs = pow2(-exp2.convert_to<long>());
        if (lhs > rhs) return {false, S, c};
    }
    return {true, std::nullopt, Rat(0)};
}

DecayVerdict is_eps_decaying(const BooleanFunction& h, const Rat& eps_exponent) {
    return is_eps_decaying(fwht(h), eps_exponent);
}

}  // namespace liftlab
