#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qtcss/finite_field.hpp"
#include "qtcss/rng.hpp"

namespace qtcss::classical {

/// Party i's share of a bivariate-polynomial dealing: the restrictions
/// F(i, y) and F(x, i). Plain copyable values on purpose — classical
/// copyability is exactly the weakness the quantum scheme removes.
struct ClassicalShare {
    std::uint32_t party_id;
    gf::UnivariatePoly f_row; // F(party_id, y), polynomial in y
    gf::UnivariatePoly f_col; // F(x, party_id), polynomial in x
};

/// Share after the threshold-raising step: the row polynomial with its top
/// y-degree coefficient dropped.
struct TruncatedShare {
    std::uint32_t party_id;
    gf::UnivariatePoly f_row_truncated;
};

enum class AttackMethod {
    column_poly_at_zero, // interpolate F(x, 0) from the old rows at y = 0
    re_truncation,       // truncate the old rows down to the low threshold and solve
};

const char* attack_method_name(AttackMethod m) noexcept;

struct AttackTranscript {
    std::vector<std::uint32_t> colluding_party_ids;
    gf::FieldElement recovered_secret;
    AttackMethod method;
    std::vector<std::string> narrative;
};

struct Dealing {
    gf::BivariatePoly polynomial;
    std::vector<ClassicalShare> shares; // party ids 1..n
};

/// Deals a fresh random polynomial with the given secret as constant term.
/// Requires n < p, x_degree >= 1, y_degree >= x_degree.
Dealing deal(gf::FieldElement secret, std::uint32_t n, std::size_t x_degree,
             std::size_t y_degree, SeededRng& rng);

/// Deterministic override: derives shares from a caller-chosen polynomial.
Dealing deal_fixed(const gf::BivariatePoly& master, std::uint32_t n);

/// The built-in GF(11) demo polynomial
/// F(x,y) = 7 + 2x + 2y + 3xy + 3y^2 + 5xy^2 + 7y^3 + 3xy^3.
gf::BivariatePoly example_polynomial();

/// Low-threshold reconstruction: each share contributes F(i, 0); Lagrange
/// over x at 0 returns the secret.
gf::FieldElement reconstruct_threshold2(const ClassicalShare& a, const ClassicalShare& b);

/// High-threshold reconstruction from at least y_degree+1 shares: each
/// contributes F(0, i); Lagrange over y at 0.
gf::FieldElement reconstruct_threshold4(std::span<const ClassicalShare> shares);

/// Drops the top y-degree coefficient of the row polynomial.
TruncatedShare truncate(const ClassicalShare& share);

/// Intermediate-threshold reconstruction from 3 truncated shares, each
/// evaluated at 2 distinct y points: solves the 6x6 system in the unknown
/// coefficients (1, x, y, xy, y^2, xy^2) and returns the constant term.
/// Throws Errc::singular_system when the chosen points do not determine
/// the system; callers may re-pick points and retry.
gf::FieldElement reconstruct_threshold3(std::span<const TruncatedShare> shares,
                                        std::span<const std::array<std::uint32_t, 2>> eval_points);

/// Default evaluation-point schedule: party i uses y in {2i-1, 2i}.
std::vector<std::array<std::uint32_t, 2>> default_eval_points(std::span<const TruncatedShare> shares);

/// Convenience wrapper: default schedule, retrying with all points shifted
/// by a constant if the system comes out singular.
gf::FieldElement reconstruct_threshold3_default(std::span<const TruncatedShare> shares);

/// Reconstructs the secret from two old untruncated shares, ignoring the
/// declared (raised) threshold. Always succeeds; the transcript records how.
AttackTranscript attack_with_old_shares(const ClassicalShare& a, const ClassicalShare& b,
                                        std::uint32_t declared_threshold,
                                        AttackMethod method = AttackMethod::column_poly_at_zero);

/// Structured text record {party_id, modulus, f_row, f_col} with decimal
/// integer fields; round-trips bit-exactly.
std::string to_record(const ClassicalShare& share);
ClassicalShare share_from_record(const std::string& record);

} // namespace qtcss::classical
