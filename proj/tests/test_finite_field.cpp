#include <doctest.h>

#include <array>
#include <functional>
#include <utility>
#include <vector>

#include "qtcss/finite_field.hpp"
#include "qtcss/rng.hpp"

using namespace qtcss;
using gf::BivariatePoly;
using gf::FieldElement;
using gf::UnivariatePoly;

namespace {

FieldElement fe(std::uint32_t v, std::uint32_t p = 11) { return {v, p}; }

// Independent inverse oracle: exhaustive search.
std::uint32_t brute_force_inverse(std::uint32_t x, std::uint32_t p)
{
    for (std::uint32_t y = 0; y < p; ++y)
        if (x * y % p == 1)
            return y;
    return 0;
}

// The worked-example master polynomial
// F(x,y) = 7 + 2x + 2y + 3xy + 3y^2 + 5xy^2 + 7y^3 + 3xy^3 over GF(11).
BivariatePoly example_f()
{
    return {{{7, 2, 3, 7}, {2, 3, 5, 3}}, 11};
}

Errc code_of(const std::function<void()>& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return Errc::bad_parameters;
}

} // namespace

TEST_CASE("modular inverse matches the exhaustive oracle")
{
    CHECK(fe(1).inverse().value() == 1);
    CHECK(fe(2).inverse().value() == 6);
    CHECK(fe(10).inverse().value() == 10);
    for (std::uint32_t p : {5u, 11u, 13u})
        for (std::uint32_t x = 1; x < p; ++x) {
            const auto inv = FieldElement(x, p).inverse();
            CHECK(inv.value() == brute_force_inverse(x, p));
            CHECK((inv * FieldElement(x, p)).value() == 1);
        }
}

TEST_CASE("inverse of zero is rejected")
{
    CHECK(code_of([] { fe(0).inverse(); }) == Errc::zero_inverse);
}

TEST_CASE("modulus must be prime and in range")
{
    CHECK(code_of([] { FieldElement(3, 10); }) == Errc::bad_parameters);
    CHECK(code_of([] { FieldElement(3, 1); }) == Errc::bad_parameters);
    CHECK(FieldElement(3, 2147483647).modulus() == 2147483647); // 2^31 - 1 is prime
    CHECK(code_of([] { FieldElement(3, 0x80000001u); }) == Errc::bad_parameters);
}

TEST_CASE("field axioms hold on random samples")
{
    SeededRng rng(101);
    for (std::uint32_t p : {11u, 10007u}) {
        for (int i = 0; i < 200; ++i) {
            const FieldElement a(rng.next_below(p), p);
            const FieldElement b(rng.next_below(p), p);
            const FieldElement c(rng.next_below(p), p);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * b == b * a);
            CHECK(a + b == b + a);
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a - a == FieldElement::zero(p));
            if (a.value() != 0)
                CHECK(a * a.inverse() == FieldElement::one(p));
        }
    }
}

TEST_CASE("mixed moduli are rejected")
{
    CHECK(code_of([] { fe(1, 11) + fe(1, 13); }) == Errc::modulus_mismatch);
    CHECK(code_of([] { example_f().eval(fe(1, 13), fe(1, 13)); }) == Errc::modulus_mismatch);
}

TEST_CASE("bivariate evaluation reproduces the worked example")
{
    const auto f = example_f();
    CHECK(f.eval(fe(0), fe(0)).value() == 7);
    CHECK(f.eval(fe(1), fe(1)).value() == 10); // 9+5+8+10 = 32 = 10 mod 11

    const auto truncated = f.truncate_y();
    CHECK(truncated.eval(fe(1), fe(2)).value() == 7);
    CHECK(truncated.y_degree() == 2);
}

TEST_CASE("restrictions match the worked example")
{
    const auto f = example_f();
    CHECK(f.restrict_x(fe(1)) == UnivariatePoly({9, 5, 8, 10}, 11));
    CHECK(f.restrict_y(fe(1)) == UnivariatePoly({8, 2}, 11));
    CHECK(f.restrict_x(fe(0)) == UnivariatePoly({7, 2, 3, 7}, 11));
}

TEST_CASE("restrict-then-evaluate equals direct bivariate evaluation")
{
    SeededRng rng(77);
    for (int trial = 0; trial < 50; ++trial) {
        const std::uint32_t p = 101;
        const auto f = BivariatePoly::random(FieldElement(rng.next_below(p), p), 2, 4, rng);
        const FieldElement x(rng.next_below(p), p);
        const FieldElement y(rng.next_below(p), p);
        CHECK(f.restrict_x(x).eval(y) == f.eval(x, y));
        CHECK(f.restrict_y(y).eval(x) == f.eval(x, y));
    }
}

TEST_CASE("Lagrange interpolation at the worked-example points")
{
    const std::pair<FieldElement, FieldElement> two[] = {{fe(1), fe(9)}, {fe(2), fe(0)}};
    CHECK(gf::lagrange_at(two, fe(0)).value() == 7);

    const std::pair<FieldElement, FieldElement> four[] = {
        {fe(1), fe(8)}, {fe(2), fe(2)}, {fe(3), fe(9)}, {fe(4), fe(5)}};
    CHECK(gf::lagrange_at(four, fe(0)).value() == 7);

    const std::pair<FieldElement, FieldElement> single[] = {{fe(5), fe(3)}};
    CHECK(gf::lagrange_at(single, fe(0)).value() == 3);
    CHECK(gf::lagrange_at(single, fe(8)).value() == 3);
}

TEST_CASE("Lagrange rejects duplicate abscissae")
{
    const std::pair<FieldElement, FieldElement> pts[] = {{fe(1), fe(9)}, {fe(1), fe(2)}};
    CHECK(code_of([&] { gf::lagrange_at(pts, fe(0)); }) == Errc::duplicate_abscissa);
}

TEST_CASE("Lagrange recovers random polynomial values exactly")
{
    SeededRng rng(4242);
    const std::uint32_t p = 997;
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t degree = 1 + rng.next_below(6);
        std::vector<std::uint32_t> coeffs;
        for (std::size_t i = 0; i <= degree; ++i)
            coeffs.push_back(static_cast<std::uint32_t>(rng.next_below(p)));
        const UnivariatePoly poly(coeffs, p);

        std::vector<std::pair<FieldElement, FieldElement>> points;
        std::uint32_t x = 1 + static_cast<std::uint32_t>(rng.next_below(50));
        for (std::size_t i = 0; i <= degree; ++i, x += 1 + rng.next_below(10))
            points.emplace_back(FieldElement(x, p), poly.eval(FieldElement(x, p)));

        const FieldElement x0(rng.next_below(p), p);
        CHECK(gf::lagrange_at(points, x0) == poly.eval(x0));
    }
}

TEST_CASE("the six-equation worked-example system solves to the truncated coefficients")
{
    // Points (1,1),(1,2),(2,3),(2,4),(3,5),(3,6); unknowns ordered
    // (1, x, y, xy, y^2, xy^2); values of the truncated polynomial.
    const std::array<std::pair<std::uint32_t, std::uint32_t>, 6> pts{
        {{1, 1}, {1, 2}, {2, 3}, {2, 4}, {3, 5}, {3, 6}}};
    const std::array<std::uint32_t, 6> values{0, 7, 9, 9, 1, 1};

    std::vector<std::vector<FieldElement>> matrix;
    std::vector<FieldElement> rhs;
    for (std::size_t r = 0; r < pts.size(); ++r) {
        const auto [x, y] = pts[r];
        matrix.push_back({fe(1), fe(x), fe(y), fe(x * y), fe(y * y), fe(x * y * y)});
        rhs.push_back(fe(values[r]));
    }
    const auto solution = gf::solve_linear(matrix, rhs);
    const std::array<std::uint32_t, 6> expected{7, 2, 2, 3, 3, 5};
    REQUIRE(solution.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i)
        CHECK(solution[i].value() == expected[i]);
}

TEST_CASE("identity and 2x2 systems")
{
    std::vector<std::vector<FieldElement>> eye{{fe(1), fe(0)}, {fe(0), fe(1)}};
    const auto v = gf::solve_linear(eye, {fe(4), fe(9)});
    CHECK(v[0].value() == 4);
    CHECK(v[1].value() == 9);

    std::vector<std::vector<FieldElement>> m{{fe(1), fe(1)}, {fe(1), fe(2)}};
    const auto w = gf::solve_linear(m, {fe(9), fe(0)});
    CHECK(w[0].value() == 7);
    CHECK(w[1].value() == 2);
}

TEST_CASE("singular systems are reported")
{
    std::vector<std::vector<FieldElement>> m{{fe(1), fe(2)}, {fe(2), fe(4)}};
    CHECK(code_of([&] { gf::solve_linear(m, {fe(1), fe(2)}); }) == Errc::singular_system);
}

TEST_CASE("solve composed with matrix multiplication is the identity")
{
    SeededRng rng(909);
    const std::uint32_t p = 211;
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 2 + rng.next_below(5);
        std::vector<std::vector<FieldElement>> matrix(n, std::vector<FieldElement>());
        for (auto& row : matrix)
            for (std::size_t c = 0; c < n; ++c)
                row.push_back(FieldElement(rng.next_below(p), p));
        std::vector<FieldElement> rhs;
        for (std::size_t c = 0; c < n; ++c)
            rhs.push_back(FieldElement(rng.next_below(p), p));

        std::vector<FieldElement> solution;
        try {
            solution = gf::solve_linear(matrix, rhs);
        } catch (const Error& e) {
            CHECK(e.code() == Errc::singular_system);
            continue;
        }
        for (std::size_t r = 0; r < n; ++r) {
            FieldElement acc = FieldElement::zero(p);
            for (std::size_t c = 0; c < n; ++c)
                acc = acc + matrix[r][c] * solution[c];
            CHECK(acc == rhs[r]);
        }
    }
}

TEST_CASE("univariate truncation and trimming")
{
    const UnivariatePoly poly({9, 5, 8, 10}, 11);
    CHECK(poly.truncated(2) == UnivariatePoly({9, 5, 8}, 11));
    CHECK(poly.degree() == 3);

    const UnivariatePoly padded({3, 0, 0}, 11);
    CHECK(padded.trimmed().coefficient_count() == 1);
    CHECK(padded == UnivariatePoly({3}, 11));
    CHECK(UnivariatePoly({0, 0}, 11).trimmed().coefficient_count() == 1);
}

TEST_CASE("polynomial rendering")
{
    CHECK(example_f().to_string() == "7 + 2x + 2y + 3xy + 3y^2 + 5xy^2 + 7y^3 + 3xy^3");
    CHECK(UnivariatePoly({9, 5, 8, 10}, 11).to_string() == "9 + 5y + 8y^2 + 10y^3");
    CHECK(UnivariatePoly({0}, 11).to_string() == "0");
}
