#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "liftlab/rat.hpp"

namespace liftlab {

// Point order for {-1,1}^n, fixed across the whole toolkit and all file
// formats: bit i of the index is 0 for x_{i+1} = +1 and 1 for x_{i+1} = -1,
// little-endian in the variable index.
inline int point_coord(std::uint32_t idx, int i) { return (idx >> i) & 1u ? -1 : +1; }

/// chi_S(x) as +-1 for bitmask S and point index idx.
inline int chi_sign(std::uint32_t S, std::uint32_t idx) {
    return __builtin_popcount(S & idx) & 1 ? -1 : +1;
}

/// Exact rational-valued function on {-1,1}^n stored as its full value table.
class BooleanFunction {
  public:
    BooleanFunction() = default;
    BooleanFunction(int n, std::vector<Rat> values);

    static BooleanFunction constant(int n, const Rat& c);

    int n() const { return n_; }
    std::size_t size() const { return values_.size(); }
    const Rat& value(std::uint32_t idx) const { return values_[idx]; }
    Rat& value(std::uint32_t idx) { return values_[idx]; }
    const std::vector<Rat>& values() const { return values_; }

    Rat mean() const { return table_mean(values_); }
    bool nonneg() const;

    BooleanFunction operator+(const BooleanFunction& g) const;
    BooleanFunction operator-(const BooleanFunction& g) const;
    /// Pointwise product.
    BooleanFunction operator*(const BooleanFunction& g) const;
    BooleanFunction operator*(const Rat& c) const;
    BooleanFunction operator+(const Rat& c) const;
    bool operator==(const BooleanFunction& g) const = default;

  private:
    int n_ = 0;
    std::vector<Rat> values_;
};

/// Sparse exact Fourier spectrum; only nonzero coefficients are stored.
class FourierSpectrum {
  public:
    FourierSpectrum() = default;
    FourierSpectrum(int n, std::map<std::uint32_t, Rat> coeffs);

    int n() const { return n_; }
    Rat coeff(std::uint32_t S) const;
    const std::map<std::uint32_t, Rat>& coeffs() const { return coeffs_; }
    int degree() const;
    /// Sum of squared coefficients (the Parseval side).
    Rat energy() const;

  private:
    int n_ = 0;
    std::map<std::uint32_t, Rat> coeffs_;
};

inline constexpr int kDefaultFwhtCap = 20;

/// Exact Walsh-Hadamard transform; f(x) = sum_S fhat(S) chi_S(x).
FourierSpectrum fwht(const BooleanFunction& f, int n_cap = kDefaultFwhtCap);
BooleanFunction inverse_fwht(const FourierSpectrum& spec);

/// Fourier degree of f (0 for the zero function).
int fourier_degree(const BooleanFunction& f);

/// Mean-1 conjunction C(x) = 2^{|I|} * [x_I = alpha]. `vars` is the bitmask
/// of I; `assign` holds alpha in the point-order encoding restricted to I.
struct Conjunction {
    std::uint32_t vars = 0;
    std::uint32_t assign = 0;

    int width() const { return __builtin_popcount(vars); }
    bool matches(std::uint32_t idx) const { return ((idx ^ assign) & vars) == 0; }
    Rat eval(std::uint32_t idx) const;
    BooleanFunction as_function(int n) const;
    bool operator==(const Conjunction&) const = default;
};

/// Non-negative combination of mean-1 conjunctions.
class ConicalJuntaRep {
  public:
    ConicalJuntaRep() = default;
    explicit ConicalJuntaRep(std::vector<std::pair<Rat, Conjunction>> terms);

    const std::vector<std::pair<Rat, Conjunction>>& terms() const { return terms_; }
    Rat eval(std::uint32_t idx) const;
    BooleanFunction as_function(int n) const;
    Rat total_weight() const;
    int max_width() const;

  private:
    std::vector<std::pair<Rat, Conjunction>> terms_;
};

struct DecayVerdict {
    bool decaying = false;
    // First violating subset in (popcount, mask) order when !decaying.
    std::optional<std::uint32_t> violator;
    Rat coeff;  // offending coefficient
};

/// Checks E[h] = 0 and |hhat(S)| <= eps^{|S|} for eps = 2^{-e}, e rational.
/// Comparisons are cleared to integer powers of two, so fractional e (e.g.
/// b/2) is exact.
DecayVerdict is_eps_decaying(const BooleanFunction& h, const Rat& eps_exponent);
DecayVerdict is_eps_decaying(const FourierSpectrum& h, const Rat& eps_exponent);

}  // namespace liftlab
