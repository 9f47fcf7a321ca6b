#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "f2cf/poly2.hpp"
#include "f2cf/series.hpp"

namespace f2cf {

struct MinerConfig {
    int max_deg_x = 4;
    int max_deg_coeff = 8;
    /// Vanishing coefficients demanded beyond the number of unknowns.
    int certification_margin = 64;

    int unknowns() const noexcept { return (max_deg_x + 1) * (max_deg_coeff + 1); }
};

/// sum_i coefficients[i] x^i = 0 at the mined series.
struct Relation {
    std::vector<Poly2> coefficients;
    int degree_x = 0;
    /// Residual at the input series vanishes on every certified exponent >= this one.
    Exponent residual_valuation = 0;
    /// Residual is exactly zero (exact input).
    bool residual_exact = false;

    std::string to_string() const;
};

class WindowTooSmall : public std::invalid_argument {
public:
    WindowTooSmall(Exponent required, Exponent available)
        : std::invalid_argument("series window too small for mining: need " + std::to_string(required) +
                                " certified coefficients, have " + std::to_string(available)),
          required_(required),
          available_(available) {}

    Exponent required() const noexcept { return required_; }
    Exponent available() const noexcept { return available_; }

private:
    Exponent required_;
    Exponent available_;
};

/// Divides every entry by the gcd of all entries. A zero vector is returned unchanged.
std::vector<Poly2> normalize_content(std::vector<Poly2> coeffs);

/// sum_i c_i x^i by Horner's rule in series arithmetic.
Series evaluate_relation(std::span<const Poly2> coeffs, const Series& x);

/// Smallest relation (degree in x, then largest coefficient degree, then bit patterns)
/// with degree <= max_deg_x and coefficient degrees <= max_deg_coeff whose series
/// coefficients vanish on the certified window. Returns nullopt when none exists.
/// Throws WindowTooSmall when the window has fewer than unknowns + margin coefficients,
/// std::invalid_argument on a non-positive configuration.
std::optional<Relation> mine(const Series& x, const MinerConfig& cfg);

struct RationalRoot {
    Poly2 num;
    Poly2 den;
};

/// Linear relation den * x + num = 0 with coefficient degrees <= max_deg, i.e. x = num/den.
std::optional<RationalRoot> rational_root_search(const Series& x, int max_deg, int margin = 64);

}  // namespace f2cf
