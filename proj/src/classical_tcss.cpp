#include "qtcss/classical_tcss.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

namespace qtcss::classical {

namespace {

using gf::FieldElement;
using gf::UnivariatePoly;

void check_distinct_parties(std::span<const std::uint32_t> ids)
{
    std::set<std::uint32_t> seen;
    for (auto id : ids)
        if (!seen.insert(id).second)
            raise(Errc::duplicate_party, "party " + std::to_string(id) + " appears twice");
}

/// Solves for the coefficients of a truncated master polynomial of x-degree
/// dx and y-degree m-1 from m row polynomials, each evaluated at dx+1
/// points. Returns the constant term. Unknowns are ordered
/// (1, x, .., x^dx, y, xy, ..) so index 0 is the secret.
FieldElement reconstruct_from_rows(std::span<const TruncatedShare> shares, std::size_t x_degree,
                                   std::span<const std::vector<std::uint32_t>> points_per_party)
{
    const std::size_t m = shares.size();
    const std::uint32_t p = shares.front().f_row_truncated.modulus();
    const std::size_t unknowns = (x_degree + 1) * m;

    std::vector<std::vector<FieldElement>> matrix;
    std::vector<FieldElement> rhs;
    matrix.reserve(unknowns);
    rhs.reserve(unknowns);

    for (std::size_t s = 0; s < m; ++s) {
        const auto& share = shares[s];
        if (share.f_row_truncated.coefficient_count() != m)
            raise(Errc::bad_parameters,
                  "truncated share of party " + std::to_string(share.party_id) +
                      " has degree " + std::to_string(share.f_row_truncated.degree()) +
                      ", expected " + std::to_string(m - 1));
        const FieldElement x(share.party_id, p);
        std::set<std::uint32_t> seen;
        for (auto y_raw : points_per_party[s]) {
            const FieldElement y(y_raw, p);
            if (!seen.insert(y.value()).second)
                raise(Errc::duplicate_abscissa,
                      "party " + std::to_string(share.party_id) + " evaluates y=" +
                          std::to_string(y.value()) + " twice");
            std::vector<FieldElement> row;
            row.reserve(unknowns);
            FieldElement y_pow = FieldElement::one(p);
            for (std::size_t j = 0; j < m; ++j) {
                FieldElement x_pow = FieldElement::one(p);
                for (std::size_t i = 0; i <= x_degree; ++i) {
                    row.push_back(x_pow * y_pow);
                    x_pow = x_pow * x;
                }
                y_pow = y_pow * y;
            }
            matrix.push_back(std::move(row));
            rhs.push_back(share.f_row_truncated.eval(y));
        }
    }
    return gf::solve_linear(std::move(matrix), std::move(rhs)).front();
}

std::vector<ClassicalShare> shares_for(const gf::BivariatePoly& master, std::uint32_t n)
{
    const std::uint32_t p = master.modulus();
    if (n == 0 || n >= p)
        raise(Errc::bad_parameters,
              "party count " + std::to_string(n) + " must be in [1, p)");
    std::vector<ClassicalShare> shares;
    shares.reserve(n);
    for (std::uint32_t i = 1; i <= n; ++i) {
        const FieldElement id(i, p);
        shares.push_back({i, master.restrict_x(id), master.restrict_y(id)});
    }
    return shares;
}

} // namespace

const char* attack_method_name(AttackMethod m) noexcept
{
    return m == AttackMethod::column_poly_at_zero ? "column-poly-at-zero" : "re-truncation";
}

Dealing deal(FieldElement secret, std::uint32_t n, std::size_t x_degree, std::size_t y_degree,
             SeededRng& rng)
{
    if (x_degree < 1 || y_degree < x_degree)
        raise(Errc::bad_parameters, "degrees must satisfy 1 <= x_degree <= y_degree");
    auto master = gf::BivariatePoly::random(secret, x_degree, y_degree, rng);
    auto shares = shares_for(master, n);
    return {std::move(master), std::move(shares)};
}

Dealing deal_fixed(const gf::BivariatePoly& master, std::uint32_t n)
{
    return {master, shares_for(master, n)};
}

gf::BivariatePoly example_polynomial()
{
    return {{{7, 2, 3, 7}, {2, 3, 5, 3}}, 11};
}

gf::FieldElement reconstruct_threshold2(const ClassicalShare& a, const ClassicalShare& b)
{
    if (a.party_id == b.party_id)
        raise(Errc::duplicate_party, "both shares belong to party " + std::to_string(a.party_id));
    const std::uint32_t p = a.f_row.modulus();
    const FieldElement zero = FieldElement::zero(p);
    // F(i, 0) is the constant term of each row polynomial.
    const std::pair<FieldElement, FieldElement> points[] = {
        {FieldElement(a.party_id, p), a.f_row.eval(zero)},
        {FieldElement(b.party_id, p), b.f_row.eval(zero)},
    };
    return gf::lagrange_at(points, zero);
}

gf::FieldElement reconstruct_threshold4(std::span<const ClassicalShare> shares)
{
    if (shares.empty())
        raise(Errc::insufficient_shares, "no shares given");
    const std::uint32_t p = shares.front().f_row.modulus();
    const std::size_t needed = shares.front().f_row.degree() + 1;
    if (shares.size() < needed)
        raise(Errc::insufficient_shares,
              std::to_string(shares.size()) + " shares cannot determine a degree " +
                  std::to_string(needed - 1) + " column polynomial");
    std::vector<std::uint32_t> ids;
    for (const auto& s : shares)
        ids.push_back(s.party_id);
    check_distinct_parties(ids);

    const FieldElement zero = FieldElement::zero(p);
    std::vector<std::pair<FieldElement, FieldElement>> points;
    points.reserve(shares.size());
    for (const auto& s : shares)
        points.emplace_back(FieldElement(s.party_id, p), s.f_col.eval(zero)); // F(0, i)
    return gf::lagrange_at(points, zero);
}

TruncatedShare truncate(const ClassicalShare& share)
{
    return {share.party_id, share.f_row.truncated(share.f_row.degree() - 1)};
}

gf::FieldElement reconstruct_threshold3(std::span<const TruncatedShare> shares,
                                        std::span<const std::array<std::uint32_t, 2>> eval_points)
{
    if (shares.size() != 3)
        raise(Errc::insufficient_shares,
              "intermediate threshold needs exactly 3 truncated shares, got " +
                  std::to_string(shares.size()));
    if (eval_points.size() != shares.size())
        raise(Errc::bad_parameters, "one evaluation-point pair required per party");
    std::vector<std::uint32_t> ids;
    for (const auto& s : shares)
        ids.push_back(s.party_id);
    check_distinct_parties(ids);

    std::vector<std::vector<std::uint32_t>> points;
    points.reserve(eval_points.size());
    for (const auto& pair : eval_points)
        points.push_back({pair[0], pair[1]});
    return reconstruct_from_rows(shares, 1, points);
}

std::vector<std::array<std::uint32_t, 2>> default_eval_points(std::span<const TruncatedShare> shares)
{
    std::vector<std::array<std::uint32_t, 2>> points;
    points.reserve(shares.size());
    for (const auto& s : shares)
        points.push_back({2 * s.party_id - 1, 2 * s.party_id});
    return points;
}

gf::FieldElement reconstruct_threshold3_default(std::span<const TruncatedShare> shares)
{
    if (shares.empty())
        raise(Errc::insufficient_shares, "no truncated shares given");
    const std::uint32_t p = shares.front().f_row_truncated.modulus();
    auto points = default_eval_points(shares);
    for (std::uint32_t shift = 0; shift < p; ++shift) {
        try {
            return reconstruct_threshold3(shares, points);
        } catch (const Error& e) {
            if (e.code() != Errc::singular_system)
                throw;
            for (auto& pair : points) {
                pair[0] = (pair[0] + 1) % p;
                pair[1] = (pair[1] + 1) % p;
            }
        }
    }
    raise(Errc::singular_system, "no shift of the default schedule yields a solvable system");
}

AttackTranscript attack_with_old_shares(const ClassicalShare& a, const ClassicalShare& b,
                                        std::uint32_t declared_threshold, AttackMethod method)
{
    if (a.party_id == b.party_id)
        raise(Errc::duplicate_party, "both shares belong to party " + std::to_string(a.party_id));
    const std::uint32_t p = a.f_row.modulus();

    AttackTranscript t{{a.party_id, b.party_id}, FieldElement::zero(p), method, {}};
    t.narrative.push_back("declared threshold is " + std::to_string(declared_threshold) +
                          "; adversary holds old untruncated shares of parties " +
                          std::to_string(a.party_id) + " and " + std::to_string(b.party_id));

    if (method == AttackMethod::column_poly_at_zero) {
        t.narrative.push_back("evaluate each old row polynomial at y=0 to obtain F(i,0)");
        t.recovered_secret = reconstruct_threshold2(a, b);
        t.narrative.push_back("Lagrange interpolation of F(x,0) at x=0 yields the secret " +
                              std::to_string(t.recovered_secret.value()));
    } else {
        t.narrative.push_back("re-truncate both old rows to degree 1 and solve the 4x4 system");
        const TruncatedShare rows[] = {
            {a.party_id, a.f_row.truncated(1)},
            {b.party_id, b.f_row.truncated(1)},
        };
        std::vector<std::vector<std::uint32_t>> points = {
            {2 * a.party_id - 1, 2 * a.party_id},
            {2 * b.party_id - 1, 2 * b.party_id},
        };
        for (std::uint32_t shift = 0;; ++shift) {
            try {
                t.recovered_secret = reconstruct_from_rows(rows, 1, points);
                break;
            } catch (const Error& e) {
                if (e.code() != Errc::singular_system || shift + 1 >= p)
                    throw;
                for (auto& pp : points)
                    for (auto& y : pp)
                        y = (y + 1) % p;
            }
        }
        t.narrative.push_back("constant term of the re-truncated polynomial is the secret " +
                              std::to_string(t.recovered_secret.value()));
    }
    t.narrative.push_back("the changed threshold " + std::to_string(declared_threshold) +
                          " is void");
    return t;
}

std::string to_record(const ClassicalShare& share)
{
    nlohmann::json j{
        {"party_id", share.party_id},
        {"modulus", share.f_row.modulus()},
        {"f_row", share.f_row.coefficients()},
        {"f_col", share.f_col.coefficients()},
    };
    return j.dump();
}

ClassicalShare share_from_record(const std::string& record)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(record);
    } catch (const nlohmann::json::exception& e) {
        raise(Errc::bad_parameters, std::string("unparseable share record: ") + e.what());
    }
    if (!j.is_object() || !j.contains("party_id") || !j.contains("modulus") ||
        !j.contains("f_row") || !j.contains("f_col"))
        raise(Errc::bad_parameters, "share record is missing required fields");
    const auto p = j["modulus"].get<std::uint32_t>();
    return {
        j["party_id"].get<std::uint32_t>(),
        {j["f_row"].get<std::vector<std::uint32_t>>(), p},
        {j["f_col"].get<std::vector<std::uint32_t>>(), p},
    };
}

} // namespace qtcss::classical
