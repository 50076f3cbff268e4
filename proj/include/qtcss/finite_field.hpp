#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qtcss/errors.hpp"
#include "qtcss/rng.hpp"

namespace qtcss {
class SeededRng;
}

namespace qtcss::gf {

/// Deterministic primality check by trial division; intended for moduli
/// below 2^31, where sqrt(p) < 46341 keeps this instant.
bool is_prime(std::uint32_t n) noexcept;

/// Element of the prime field GF(p). Values are reduced eagerly, so value()
/// is always in [0, p). The modulus is carried per element and must be a
/// prime below 2^31 (products are formed in 64-bit before reduction).
class FieldElement {
public:
    FieldElement(std::uint64_t value, std::uint32_t modulus);

    static FieldElement zero(std::uint32_t modulus) { return {0, modulus}; }
    static FieldElement one(std::uint32_t modulus) { return {1, modulus}; }

    std::uint32_t value() const { return value_; }
    std::uint32_t modulus() const { return p_; }

    FieldElement operator+(FieldElement rhs) const;
    FieldElement operator-(FieldElement rhs) const;
    FieldElement operator*(FieldElement rhs) const;
    FieldElement operator/(FieldElement rhs) const { return *this * rhs.inverse(); }
    FieldElement operator-() const { return {static_cast<std::uint64_t>(p_) - value_, p_}; }

    bool operator==(const FieldElement& rhs) const = default;

    /// Multiplicative inverse via the extended Euclidean algorithm.
    /// Throws Errc::zero_inverse on the zero element.
    FieldElement inverse() const;

    FieldElement pow(std::uint64_t exponent) const;

private:
    std::uint32_t value_;
    std::uint32_t p_;
};

/// Polynomial in one variable over GF(p), coefficient index = degree.
/// The stored slot count is preserved as constructed (a dealt share keeps
/// its full degree even when a leading coefficient happens to be zero);
/// equality and printing ignore zero leading coefficients.
class UnivariatePoly {
public:
    UnivariatePoly(std::vector<std::uint32_t> coefficients, std::uint32_t modulus);

    std::uint32_t modulus() const { return p_; }
    std::size_t coefficient_count() const { return coeffs_.size(); }
    std::size_t degree() const { return coeffs_.size() - 1; }
    FieldElement coefficient(std::size_t k) const;
    const std::vector<std::uint32_t>& coefficients() const { return coeffs_; }

    FieldElement eval(FieldElement x) const;

    /// Copy keeping only coefficients 0..max_degree.
    UnivariatePoly truncated(std::size_t max_degree) const;

    /// Copy with zero leading coefficients removed (the zero polynomial
    /// normalizes to a single zero slot).
    UnivariatePoly trimmed() const;

    bool operator==(const UnivariatePoly& rhs) const;

    std::string to_string(const std::string& variable = "y") const;

private:
    std::vector<std::uint32_t> coeffs_;
    std::uint32_t p_;
};

/// Polynomial in x and y over GF(p). coefficient(i, j) multiplies x^i y^j;
/// the grid has (x_degree+1) x (y_degree+1) slots and coefficient(0, 0) is
/// the dealer's secret in the sharing scheme built on top of this.
class BivariatePoly {
public:
    /// grid[i][j] = coefficient of x^i y^j; all rows must share one length.
    BivariatePoly(std::vector<std::vector<std::uint32_t>> grid, std::uint32_t modulus);

    /// Uniformly random polynomial with the given constant term.
    static BivariatePoly random(FieldElement constant_term, std::size_t x_degree,
                                std::size_t y_degree, SeededRng& rng);

    std::uint32_t modulus() const { return p_; }
    std::size_t x_degree() const { return grid_.size() - 1; }
    std::size_t y_degree() const { return grid_.front().size() - 1; }
    FieldElement coefficient(std::size_t i, std::size_t j) const;

    FieldElement eval(FieldElement x, FieldElement y) const;

    /// F(i, y) as a polynomial in y.
    UnivariatePoly restrict_x(FieldElement i) const;
    /// F(x, i) as a polynomial in x.
    UnivariatePoly restrict_y(FieldElement i) const;

    /// Copy with the top y-degree column removed.
    BivariatePoly truncate_y() const;

    bool operator==(const BivariatePoly& rhs) const = default;

    std::string to_string() const;

private:
    std::vector<std::vector<std::uint32_t>> grid_;
    std::uint32_t p_;
};

/// Value at x0 of the unique interpolating polynomial of degree
/// <= points.size()-1 through the given points. Abscissae must be distinct.
FieldElement lagrange_at(std::span<const std::pair<FieldElement, FieldElement>> points,
                         FieldElement x0);

/// Solves matrix * x = rhs over GF(p) by Gaussian elimination with
/// first-nonzero pivoting. Throws Errc::singular_system if no unique
/// solution exists.
std::vector<FieldElement> solve_linear(std::vector<std::vector<FieldElement>> matrix,
                                       std::vector<FieldElement> rhs);

} // namespace qtcss::gf
