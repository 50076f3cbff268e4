#include "qtcss/finite_field.hpp"

#include <algorithm>
#include <sstream>

namespace qtcss::gf {

namespace {

constexpr std::uint32_t kMaxModulus = 0x7fffffffu; // products must fit in 64 bits

void validate_modulus(std::uint32_t p)
{
    // Amortize the trial division: the same modulus is used for millions of
    // element constructions, so remember the last one that passed.
    thread_local std::uint32_t last_ok = 0;
    if (p == last_ok)
        return;
    if (p > kMaxModulus)
        raise(Errc::bad_parameters, "modulus " + std::to_string(p) + " exceeds 2^31-1");
    if (!is_prime(p))
        raise(Errc::bad_parameters, "modulus " + std::to_string(p) + " is not prime");
    last_ok = p;
}

void check_same_field(const FieldElement& a, const FieldElement& b)
{
    if (a.modulus() != b.modulus())
        raise(Errc::modulus_mismatch,
              "mixed moduli " + std::to_string(a.modulus()) + " and " +
                  std::to_string(b.modulus()));
}

std::string term_to_string(std::uint32_t c, std::size_t power, const std::string& var)
{
    std::string s;
    if (c != 1 || power == 0)
        s += std::to_string(c);
    if (power >= 1)
        s += var;
    if (power >= 2)
        s += "^" + std::to_string(power);
    return s;
}

} // namespace

bool is_prime(std::uint32_t n) noexcept
{
    if (n < 2)
        return false;
    if (n % 2 == 0)
        return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0)
            return false;
    return true;
}

FieldElement::FieldElement(std::uint64_t value, std::uint32_t modulus)
{
    validate_modulus(modulus);
    p_ = modulus;
    value_ = static_cast<std::uint32_t>(value % modulus);
}

FieldElement FieldElement::operator+(FieldElement rhs) const
{
    check_same_field(*this, rhs);
    return {static_cast<std::uint64_t>(value_) + rhs.value_, p_};
}

FieldElement FieldElement::operator-(FieldElement rhs) const
{
    check_same_field(*this, rhs);
    return {static_cast<std::uint64_t>(value_) + p_ - rhs.value_, p_};
}

FieldElement FieldElement::operator*(FieldElement rhs) const
{
    check_same_field(*this, rhs);
    return {static_cast<std::uint64_t>(value_) * rhs.value_, p_};
}

FieldElement FieldElement::inverse() const
{
    if (value_ == 0)
        raise(Errc::zero_inverse, "zero has no inverse in GF(" + std::to_string(p_) + ")");
    // Extended Euclid on (value, p); p prime guarantees gcd 1.
    std::int64_t r0 = value_, r1 = p_;
    std::int64_t s0 = 1, s1 = 0;
    while (r1 != 0) {
        const std::int64_t q = r0 / r1;
        r0 = std::exchange(r1, r0 - q * r1);
        s0 = std::exchange(s1, s0 - q * s1);
    }
    std::int64_t inv = s0 % p_;
    if (inv < 0)
        inv += p_;
    return {static_cast<std::uint64_t>(inv), p_};
}

FieldElement FieldElement::pow(std::uint64_t exponent) const
{
    FieldElement base = *this;
    FieldElement acc = one(p_);
    while (exponent != 0) {
        if (exponent & 1)
            acc = acc * base;
        base = base * base;
        exponent >>= 1;
    }
    return acc;
}

UnivariatePoly::UnivariatePoly(std::vector<std::uint32_t> coefficients, std::uint32_t modulus)
    : coeffs_(std::move(coefficients)), p_(modulus)
{
    validate_modulus(modulus);
    if (coeffs_.empty())
        coeffs_.push_back(0);
    for (auto& c : coeffs_)
        c %= p_;
}

FieldElement UnivariatePoly::coefficient(std::size_t k) const
{
    return {k < coeffs_.size() ? coeffs_[k] : 0, p_};
}

FieldElement UnivariatePoly::eval(FieldElement x) const
{
    check_same_field(x, FieldElement::zero(p_));
    FieldElement acc = FieldElement::zero(p_);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + FieldElement(*it, p_);
    return acc;
}

UnivariatePoly UnivariatePoly::truncated(std::size_t max_degree) const
{
    std::vector<std::uint32_t> kept(coeffs_.begin(),
                                    coeffs_.begin() +
                                        std::min(coeffs_.size(), max_degree + 1));
    return {std::move(kept), p_};
}

UnivariatePoly UnivariatePoly::trimmed() const
{
    std::vector<std::uint32_t> kept = coeffs_;
    while (kept.size() > 1 && kept.back() == 0)
        kept.pop_back();
    return {std::move(kept), p_};
}

bool UnivariatePoly::operator==(const UnivariatePoly& rhs) const
{
    if (p_ != rhs.p_)
        return false;
    const std::size_t n = std::max(coeffs_.size(), rhs.coeffs_.size());
    for (std::size_t k = 0; k < n; ++k)
        if (coefficient(k) != rhs.coefficient(k))
            return false;
    return true;
}

std::string UnivariatePoly::to_string(const std::string& variable) const
{
    const UnivariatePoly t = trimmed();
    std::string s;
    for (std::size_t k = 0; k < t.coeffs_.size(); ++k) {
        if (t.coeffs_[k] == 0 && !(k == 0 && t.coeffs_.size() == 1))
            continue;
        if (!s.empty())
            s += " + ";
        s += term_to_string(t.coeffs_[k], k, variable);
    }
    return s;
}

BivariatePoly::BivariatePoly(std::vector<std::vector<std::uint32_t>> grid, std::uint32_t modulus)
    : grid_(std::move(grid)), p_(modulus)
{
    validate_modulus(modulus);
    if (grid_.empty() || grid_.front().empty())
        raise(Errc::bad_parameters, "empty coefficient grid");
    for (auto& row : grid_) {
        if (row.size() != grid_.front().size())
            raise(Errc::bad_parameters, "ragged coefficient grid");
        for (auto& c : row)
            c %= p_;
    }
}

BivariatePoly BivariatePoly::random(FieldElement constant_term, std::size_t x_degree,
                                    std::size_t y_degree, SeededRng& rng)
{
    const std::uint32_t p = constant_term.modulus();
    std::vector<std::vector<std::uint32_t>> grid(
        x_degree + 1, std::vector<std::uint32_t>(y_degree + 1, 0));
    for (std::size_t i = 0; i <= x_degree; ++i)
        for (std::size_t j = 0; j <= y_degree; ++j)
            grid[i][j] = static_cast<std::uint32_t>(rng.next_below(p));
    grid[0][0] = constant_term.value();
    return {std::move(grid), p};
}

FieldElement BivariatePoly::coefficient(std::size_t i, std::size_t j) const
{
    if (i >= grid_.size() || j >= grid_.front().size())
        raise(Errc::index_out_of_range, "coefficient index outside grid");
    return {grid_[i][j], p_};
}

FieldElement BivariatePoly::eval(FieldElement x, FieldElement y) const
{
    check_same_field(x, FieldElement::zero(p_));
    check_same_field(y, FieldElement::zero(p_));
    // Horner in x of Horner-in-y row evaluations.
    FieldElement acc = FieldElement::zero(p_);
    for (auto row = grid_.rbegin(); row != grid_.rend(); ++row) {
        FieldElement row_val = FieldElement::zero(p_);
        for (auto it = row->rbegin(); it != row->rend(); ++it)
            row_val = row_val * y + FieldElement(*it, p_);
        acc = acc * x + row_val;
    }
    return acc;
}

UnivariatePoly BivariatePoly::restrict_x(FieldElement i) const
{
    check_same_field(i, FieldElement::zero(p_));
    std::vector<std::uint32_t> coeffs(y_degree() + 1, 0);
    for (std::size_t j = 0; j <= y_degree(); ++j) {
        FieldElement c = FieldElement::zero(p_);
        for (std::size_t d = grid_.size(); d-- > 0;)
            c = c * i + FieldElement(grid_[d][j], p_);
        coeffs[j] = c.value();
    }
    return {std::move(coeffs), p_};
}

UnivariatePoly BivariatePoly::restrict_y(FieldElement i) const
{
    check_same_field(i, FieldElement::zero(p_));
    std::vector<std::uint32_t> coeffs(x_degree() + 1, 0);
    for (std::size_t d = 0; d <= x_degree(); ++d) {
        FieldElement c = FieldElement::zero(p_);
        for (std::size_t j = grid_.front().size(); j-- > 0;)
            c = c * i + FieldElement(grid_[d][j], p_);
        coeffs[d] = c.value();
    }
    return {std::move(coeffs), p_};
}

BivariatePoly BivariatePoly::truncate_y() const
{
    if (y_degree() == 0)
        raise(Errc::bad_parameters, "cannot truncate a constant-in-y polynomial");
    std::vector<std::vector<std::uint32_t>> grid = grid_;
    for (auto& row : grid)
        row.pop_back();
    return {std::move(grid), p_};
}

std::string BivariatePoly::to_string() const
{
    std::string s;
    for (std::size_t j = 0; j <= y_degree(); ++j) {
        for (std::size_t i = 0; i <= x_degree(); ++i) {
            const std::uint32_t c = grid_[i][j];
            if (c == 0)
                continue;
            if (!s.empty())
                s += " + ";
            std::string term;
            if (c != 1 || (i == 0 && j == 0))
                term += std::to_string(c);
            if (i >= 1)
                term += "x" + (i >= 2 ? "^" + std::to_string(i) : "");
            if (j >= 1)
                term += "y" + (j >= 2 ? "^" + std::to_string(j) : "");
            s += term;
        }
    }
    return s.empty() ? "0" : s;
}

FieldElement lagrange_at(std::span<const std::pair<FieldElement, FieldElement>> points,
                         FieldElement x0)
{
    if (points.empty())
        raise(Errc::bad_parameters, "interpolation needs at least one point");
    const std::uint32_t p = x0.modulus();
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i].first == points[j].first)
                raise(Errc::duplicate_abscissa,
                      "duplicate abscissa " + std::to_string(points[i].first.value()));

    FieldElement acc = FieldElement::zero(p);
    for (std::size_t i = 0; i < points.size(); ++i) {
        FieldElement num = FieldElement::one(p);
        FieldElement den = FieldElement::one(p);
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (j == i)
                continue;
            num = num * (x0 - points[j].first);
            den = den * (points[i].first - points[j].first);
        }
        acc = acc + points[i].second * num / den;
    }
    return acc;
}

std::vector<FieldElement> solve_linear(std::vector<std::vector<FieldElement>> matrix,
                                       std::vector<FieldElement> rhs)
{
    const std::size_t n = matrix.size();
    if (n == 0 || rhs.size() != n)
        raise(Errc::bad_parameters, "matrix and rhs dimensions disagree");
    for (const auto& row : matrix)
        if (row.size() != n)
            raise(Errc::bad_parameters, "matrix is not square");

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && matrix[pivot][col].value() == 0)
            ++pivot;
        if (pivot == n)
            raise(Errc::singular_system, "no pivot in column " + std::to_string(col));
        std::swap(matrix[pivot], matrix[col]);
        std::swap(rhs[pivot], rhs[col]);

        const FieldElement inv = matrix[col][col].inverse();
        for (std::size_t j = col; j < n; ++j)
            matrix[col][j] = matrix[col][j] * inv;
        rhs[col] = rhs[col] * inv;

        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || matrix[r][col].value() == 0)
                continue;
            const FieldElement f = matrix[r][col];
            for (std::size_t j = col; j < n; ++j)
                matrix[r][j] = matrix[r][j] - f * matrix[col][j];
            rhs[r] = rhs[r] - f * rhs[col];
        }
    }
    return rhs;
}

} // namespace qtcss::gf
