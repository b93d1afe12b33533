#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "liftlab/rat.hpp"

namespace liftlab {

// Domain encoding for [q]^n with q = 2^b: a point is sum_i x_i * q^i, i.e.
// coordinate 1 is the lowest base-q digit. Within a block, bit j-1 of the
// block value is the j-th gadget input bit.
inline std::uint64_t block_of(std::uint64_t code, int i, int b) {
    return (code >> (std::uint64_t(i) * b)) & ((std::uint64_t(1) << b) - 1);
}

/// Non-negative mean-1 mass table over [q]^n.
class Density {
  public:
    Density() = default;
    /// `mass` must be non-negative with mean exactly 1 (sum = q^n).
    Density(int b, int n, std::vector<Rat> mass);

    static Density uniform(int b, int n);
    static Density point_mass(int b, int n, std::uint64_t at);
    static Density uniform_on(int b, int n, const std::vector<std::uint64_t>& set);
    /// Normalizes arbitrary non-negative weights to mean 1.
    static Density from_weights(int b, int n, std::vector<Rat> weights);

    int b() const { return b_; }
    int n() const { return n_; }
    std::uint64_t q() const { return std::uint64_t(1) << b_; }
    std::uint64_t domain_size() const { return mass_.size(); }
    const Rat& value(std::uint64_t x) const { return mass_[x]; }
    const std::vector<Rat>& mass() const { return mass_; }
    /// Pr[X = x] = value(x) / q^n.
    Rat prob(std::uint64_t x) const;

    Rat max_mass(std::uint64_t* argmax = nullptr) const;
    Rat max_prob(std::uint64_t* argmax = nullptr) const;

    /// Projection to the coordinates in bitmask I, reindexed ascending.
    Density marginal(std::uint32_t I) const;
    /// Condition on x_F = vals (vals encoded over the F coordinates,
    /// ascending); result lives on the full domain.
    Density condition(std::uint32_t F, std::uint64_t vals) const;
    /// Condition on membership in an explicit set.
    Density condition_on_set(const std::vector<std::uint64_t>& set) const;

    bool operator==(const Density&) const = default;

  private:
    int b_ = 0, n_ = 0;
    std::vector<Rat> mass_;
};

struct EntropyVerdict {
    bool ok = false;
    std::uint64_t witness = 0;  // max-probability point on failure
    Rat max_prob;
};

/// Exact test of H_inf(u) >= k/denom bits via max_x Pr[X=x]^denom <= 2^{-k}.
/// denom must be one of 1, 5, 10, 20.
EntropyVerdict min_entropy_cmp(const Density& u, long k, int denom);

/// Product pair density over [q]^n x [q]^n, stored either as a full table or
/// as a tensor product of two side densities. Products stay products under
/// rectangle conditioning and projection, which keeps large-domain runs
/// within memory.
class PairDensity {
  public:
    struct Dense {
        int b = 0, n = 0;
        std::vector<Rat> mass;  // index x * q^n + y
        bool operator==(const Dense&) const = default;
    };
    struct Product {
        Density u, v;
        bool operator==(const Product&) const = default;
    };

    PairDensity() = default;
    static PairDensity dense(int b, int n, std::vector<Rat> mass);
    static PairDensity product(Density u, Density v);
    static PairDensity uniform(int b, int n);

    int b() const;
    int n() const;
    std::uint64_t q() const { return std::uint64_t(1) << b(); }
    std::uint64_t side_size() const;  // q^n
    bool is_product() const { return std::holds_alternative<Product>(rep_); }
    const Product& as_product() const { return std::get<Product>(rep_); }

    Rat value(std::uint64_t x, std::uint64_t y) const;
    Rat prob(std::uint64_t x, std::uint64_t y) const;

    /// Pr[(X,Y) in A x B].
    Rat rect_prob(const std::vector<std::uint64_t>& A, const std::vector<std::uint64_t>& B) const;
    /// Per-x in A: Pr[X = x, Y in B], aligned with A.
    std::vector<Rat> row_sums(const std::vector<std::uint64_t>& A,
                              const std::vector<std::uint64_t>& B) const;
    std::vector<Rat> col_sums(const std::vector<std::uint64_t>& A,
                              const std::vector<std::uint64_t>& B) const;

    /// Conditioned on A x B (positive mass required), as a pair density.
    PairDensity condition_rect(const std::vector<std::uint64_t>& A,
                               const std::vector<std::uint64_t>& B) const;
    /// Both sides projected to the coordinates in I.
    PairDensity pair_marginal(std::uint32_t I) const;
    Density x_marginal() const;
    Density y_marginal() const;
    Rat max_prob() const;

    bool operator==(const PairDensity&) const = default;

  private:
    std::variant<Dense, Product> rep_;
};

/// Projection / conditioning with renormalization, per-module operation
/// surface. `fix` fixes the listed coordinates to the given block values.
Density marginal_condition(const Density& u, std::uint32_t I,
                           std::optional<std::pair<std::uint32_t, std::uint64_t>> fix);
PairDensity marginal_condition(const PairDensity& mu, std::uint32_t I);

}  // namespace liftlab
