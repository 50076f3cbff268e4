#include "qtcss/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <set>
#include <string>
#include <vector>

#include "qtcss/classical_tcss.hpp"
#include "qtcss/finite_field.hpp"
#include "qtcss/protocol.hpp"
#include "qtcss/quantum_core.hpp"
#include "qtcss/rng.hpp"

namespace qtcss::harness {

namespace {

using nlohmann::json;
using quantum::cplx;

constexpr double kPi = std::numbers::pi;

std::string fmt12(double v)
{
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

[[noreturn]] void invalid(const std::string& field, const std::string& message)
{
    raise(Errc::invalid_scenario, "parameter '" + field + "': " + message);
}

/// Pulls typed fields out of the params object, applying defaults and
/// rejecting unknown names so typos fail loudly instead of silently running
/// with defaults.
class ParamReader {
public:
    explicit ParamReader(const json& params) : src_(params)
    {
        if (!src_.is_object() && !src_.is_null())
            raise(Errc::invalid_scenario, "params must be an object");
    }

    std::uint64_t integer(const std::string& name, std::uint64_t def, std::uint64_t lo,
                          std::uint64_t hi)
    {
        json v = take(name);
        if (v.is_null())
            v = def;
        if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
            invalid(name, "expected a non-negative integer");
        const auto x = v.get<std::uint64_t>();
        if (x < lo || x > hi)
            invalid(name, "value " + std::to_string(x) + " outside [" + std::to_string(lo) +
                              ", " + std::to_string(hi) + "]");
        out_[name] = x;
        return x;
    }

    double real(const std::string& name, double def)
    {
        json v = take(name);
        if (v.is_null())
            v = def;
        if (!v.is_number())
            invalid(name, "expected a number");
        const double x = v.get<double>();
        if (!std::isfinite(x))
            invalid(name, "value must be finite");
        out_[name] = x;
        return x;
    }

    bool boolean(const std::string& name, bool def)
    {
        json v = take(name);
        if (v.is_null())
            v = def;
        if (!v.is_boolean())
            invalid(name, "expected true or false");
        out_[name] = v.get<bool>();
        return v.get<bool>();
    }

    std::string text(const std::string& name, const std::string& def,
                     std::span<const std::string> allowed)
    {
        json v = take(name);
        if (v.is_null())
            v = def;
        if (!v.is_string())
            invalid(name, "expected a string");
        const auto s = v.get<std::string>();
        if (std::find(allowed.begin(), allowed.end(), s) == allowed.end())
            invalid(name, "unsupported value '" + s + "'");
        out_[name] = s;
        return s;
    }

    cplx amplitude(const std::string& name, cplx def)
    {
        json v = take(name);
        if (v.is_null())
            v = json::array({def.real(), def.imag()});
        if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
            invalid(name, "expected [re, im]");
        const cplx a{v[0].get<double>(), v[1].get<double>()};
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
            invalid(name, "components must be finite");
        out_[name] = json::array({a.real(), a.imag()});
        return a;
    }

    bool present(const std::string& name) const { return src_.is_object() && src_.contains(name); }

    json take(const std::string& name)
    {
        seen_.insert(name);
        if (src_.is_object() && src_.contains(name))
            return src_.at(name);
        return nullptr;
    }

    void put(const std::string& name, json value) { out_[name] = std::move(value); }

    json finish()
    {
        if (src_.is_object())
            for (const auto& [key, value] : src_.items())
                if (!seen_.count(key))
                    invalid(key, "unknown parameter for this scenario kind");
        return out_;
    }

private:
    const json& src_;
    json out_ = json::object();
    std::set<std::string> seen_;
};

/// Rewrites the amplitude pair to unit norm and echoes the normalized
/// values back into the params.
std::pair<cplx, cplx> normalized_amplitudes(ParamReader& reader)
{
    const cplx def{1.0 / std::sqrt(2.0), 0.0};
    cplx a = reader.amplitude("amplitude_a", def);
    cplx b = reader.amplitude("amplitude_b", def);
    const double n = std::sqrt(std::norm(a) + std::norm(b));
    if (n < 1e-12)
        invalid("amplitude_a", "amplitudes cannot both be zero");
    a /= n;
    b /= n;
    reader.put("amplitude_a", json::array({a.real(), a.imag()}));
    reader.put("amplitude_b", json::array({b.real(), b.imag()}));
    return {a, b};
}

std::vector<int> subset_sizes(ParamReader& reader, int parties, int max_size)
{
    json v = reader.take("subset_sizes");
    std::vector<int> sizes;
    if (v.is_null()) {
        for (int k = 1; k < parties && k <= max_size; ++k)
            sizes.push_back(k);
    } else {
        if (!v.is_array() || v.empty() || v.size() > 4096)
            invalid("subset_sizes", "expected a nonempty array of at most 4096 sizes");
        for (const auto& e : v) {
            if (!e.is_number_integer())
                invalid("subset_sizes", "sizes must be integers");
            const auto k = e.get<std::int64_t>();
            if (k < 1 || k >= parties || k > max_size)
                invalid("subset_sizes", "size " + std::to_string(k) + " outside [1, " +
                                            std::to_string(std::min(parties - 1, max_size)) + "]");
            sizes.push_back(static_cast<int>(k));
        }
    }
    reader.put("subset_sizes", sizes);
    return sizes;
}

struct ClassicalParams {
    std::uint32_t modulus;
    std::uint32_t parties;
    std::uint32_t x_degree;
    std::uint32_t y_degree;
    std::uint32_t secret;
    bool use_example;
};

ClassicalParams classical_params(ParamReader& reader, std::uint32_t min_parties,
                                 std::uint32_t dy_min, std::uint32_t dy_max)
{
    ClassicalParams p{};
    p.modulus = static_cast<std::uint32_t>(reader.integer("modulus", 11, 3, 0x7fffffffu));
    if (!gf::is_prime(p.modulus))
        invalid("modulus", std::to_string(p.modulus) + " is not prime");
    p.parties = static_cast<std::uint32_t>(
        reader.integer("parties", 5, min_parties, std::min<std::uint64_t>(p.modulus - 1, 4096)));
    p.x_degree = static_cast<std::uint32_t>(reader.integer("dx", 1, 1, 1));
    p.y_degree = static_cast<std::uint32_t>(reader.integer("dy", 3, dy_min, dy_max));
    p.secret = static_cast<std::uint32_t>(reader.integer("secret", 7, 0, p.modulus - 1));

    const bool example_shape =
        p.modulus == 11 && p.secret == 7 && p.x_degree == 1 && p.y_degree == 3;
    p.use_example = reader.boolean("use_example_polynomial", example_shape);
    if (p.use_example && !example_shape)
        invalid("use_example_polynomial",
                "the built-in polynomial requires modulus 11, secret 7, dx 1, dy 3");
    return p;
}

struct ReportBuilder {
    json steps = json::array();
    json verdicts = json::object();
    json tables = json::object();

    void step(const std::string& op, const std::string& detail)
    {
        steps.push_back({{"op", op}, {"detail", detail}});
    }

    void verdict(const std::string& name, bool pass) { verdicts[name] = pass; }

    RunReport finish(const Scenario& scenario) const
    {
        bool all = true;
        for (const auto& [name, pass] : verdicts.items())
            all = all && pass.get<bool>();
        json doc{
            {"scenario",
             {{"kind", scenario_kind_name(scenario.kind)},
              {"seed", scenario.seed},
              {"params", scenario.params}}},
            {"seed", scenario.seed},
            {"steps", steps},
            {"verdicts", verdicts},
            {"tables", tables},
        };
        return {std::move(doc), all};
    }
};

void drain_transcript(const protocol::SharingSession& session, std::size_t& cursor,
                      ReportBuilder& rb)
{
    const auto& events = session.transcript();
    for (; cursor < events.size(); ++cursor)
        rb.step("session/" + events[cursor].op, events[cursor].detail);
}

classical::Dealing deal_classical(const ClassicalParams& p, SeededRng& rng, ReportBuilder& rb)
{
    classical::Dealing dealing =
        p.use_example ? classical::deal_fixed(classical::example_polynomial(), p.parties)
                      : classical::deal(gf::FieldElement(p.secret, p.modulus), p.parties,
                                        p.x_degree, p.y_degree, rng);
    rb.step("deal", "master polynomial F(x,y) = " + dealing.polynomial.to_string() +
                        " over GF(" + std::to_string(p.modulus) + "); " +
                        std::to_string(p.parties) + " shares issued");
    rb.tables["polynomial"] = dealing.polynomial.to_string();
    json shares = json::array();
    for (const auto& s : dealing.shares)
        shares.push_back(json::parse(classical::to_record(s)));
    rb.tables["shares"] = std::move(shares);
    return dealing;
}

RunReport run_classical_demo(const Scenario& scenario)
{
    ParamReader reader(scenario.params);
    const ClassicalParams p = classical_params(reader, 4, 3, 3);
    Scenario effective{scenario.kind, scenario.seed, reader.finish()};

    SeededRng rng(scenario.seed);
    ReportBuilder rb;
    const auto dealing = deal_classical(p, rng, rb);
    const auto secret = dealing.polynomial.coefficient(0, 0);
    const auto& shares = dealing.shares;

    const auto r2 = classical::reconstruct_threshold2(shares[0], shares[1]);
    rb.step("reconstruct-2", "parties {1,2} interpolate F(x,0) at 0 -> " +
                                 std::to_string(r2.value()));
    rb.verdict("threshold2_ok", r2 == secret);

    std::vector<classical::TruncatedShare> truncated;
    for (std::size_t i = 0; i < 3; ++i)
        truncated.push_back(classical::truncate(shares[i]));
    rb.step("truncate", "parties {1,2,3} drop the top y-degree coefficient of their rows");
    const auto r3 = classical::reconstruct_threshold3_default(truncated);
    rb.step("reconstruct-3", "six evaluations of the truncated rows solve the 6x6 system -> " +
                                 std::to_string(r3.value()));
    rb.verdict("threshold3_ok", r3 == secret);

    const std::span<const classical::ClassicalShare> four(shares.data(), p.y_degree + 1);
    const auto r4 = classical::reconstruct_threshold4(four);
    rb.step("reconstruct-4", "parties {1..4} interpolate F(0,y) at 0 -> " +
                                 std::to_string(r4.value()));
    rb.verdict("threshold4_ok", r4 == secret);

    rb.tables["recovered"] = {{"threshold2", r2.value()},
                              {"threshold3", r3.value()},
                              {"threshold4", r4.value()}};
    return rb.finish(effective);
}

RunReport run_classical_attack(const Scenario& scenario)
{
    ParamReader reader(scenario.params);
    const ClassicalParams p = classical_params(reader, 2, 2, 16);

    json colluders_json = reader.take("colluders");
    if (colluders_json.is_null())
        colluders_json = json::array({1, 2});
    if (!colluders_json.is_array() || colluders_json.size() != 2 ||
        !colluders_json[0].is_number_integer() || !colluders_json[1].is_number_integer())
        invalid("colluders", "expected two party ids");
    const auto c0 = colluders_json[0].get<std::uint64_t>();
    const auto c1 = colluders_json[1].get<std::uint64_t>();
    if (c0 < 1 || c0 > p.parties || c1 < 1 || c1 > p.parties || c0 == c1)
        invalid("colluders", "party ids must be distinct and within 1..parties");
    reader.put("colluders", json::array({c0, c1}));

    const auto declared = static_cast<std::uint32_t>(
        reader.integer("declared_threshold", 3, 2, p.y_degree + 1));
    const std::string method_names[] = {"column-poly-at-zero", "re-truncation"};
    const auto method_name = reader.text("method", "column-poly-at-zero", method_names);
    const auto method = method_name == "column-poly-at-zero"
                            ? classical::AttackMethod::column_poly_at_zero
                            : classical::AttackMethod::re_truncation;
    Scenario effective{scenario.kind, scenario.seed, reader.finish()};

    SeededRng rng(scenario.seed);
    ReportBuilder rb;
    const auto dealing = deal_classical(p, rng, rb);
    const auto secret = dealing.polynomial.coefficient(0, 0);

    rb.step("threshold-change", "all parties truncate their rows and declare threshold " +
                                    std::to_string(declared) +
                                    "; the adversary kept the old shares of parties " +
                                    std::to_string(c0) + " and " + std::to_string(c1));
    const auto attack = classical::attack_with_old_shares(
        dealing.shares[c0 - 1], dealing.shares[c1 - 1], declared, method);
    for (const auto& line : attack.narrative)
        rb.step("attack", line);

    const bool succeeded = attack.recovered_secret == secret;
    rb.step("verdict", "secret " + std::to_string(attack.recovered_secret.value()) +
                           " recovered; changed threshold " + std::to_string(declared) +
                           " is void");
    rb.verdict("attack_succeeded", succeeded);
    rb.verdict("changed_threshold_void", succeeded);
    rb.tables["attack"] = {{"colluders", {c0, c1}},
                           {"method", classical::attack_method_name(attack.method)},
                           {"recovered_secret", attack.recovered_secret.value()},
                           {"dealt_secret", secret.value()}};
    return rb.finish(effective);
}

RunReport run_quantum_lifecycle(const Scenario& scenario)
{
    ParamReader reader(scenario.params);
    const int parties = static_cast<int>(reader.integer("parties", 3, 1, 10000));
    const auto [a, b] = normalized_amplitudes(reader);

    json splits_json = reader.take("splits");
    if (splits_json.is_null())
        splits_json = json::array();
    if (!splits_json.is_array() || splits_json.size() > 10000)
        invalid("splits", "expected an array of [handle_index, k] pairs");
    std::vector<std::pair<int, int>> splits;
    for (const auto& e : splits_json) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            invalid("splits", "each split must be [handle_index, k]");
        const auto idx = e[0].get<std::int64_t>();
        const auto k = e[1].get<std::int64_t>();
        if (idx < 0 || k < 2 || k > 10000)
            invalid("splits", "handle_index must be >= 0 and k in [2, 10000]");
        splits.emplace_back(static_cast<int>(idx), static_cast<int>(k));
    }
    reader.put("splits", splits_json);

    const bool attempt_incomplete = reader.boolean("attempt_incomplete", true);
    const bool do_reconstruct = reader.boolean("reconstruct", true);
    Scenario effective{scenario.kind, scenario.seed, reader.finish()};

    ReportBuilder rb;
    const quantum::SecretQubit secret{a, b};
    auto session = protocol::deal_quantum(secret, parties);
    std::size_t cursor = 0;
    drain_transcript(session, cursor, rb);

    std::optional<protocol::HandleId> first_consumed;
    for (const auto& [idx, k] : splits) {
        const auto live = session.live_handles();
        if (static_cast<std::size_t>(idx) >= live.size())
            invalid("splits", "handle_index " + std::to_string(idx) + " exceeds the " +
                                  std::to_string(live.size()) + " live handles");
        if (!first_consumed)
            first_consumed = live[idx];
        session.split(live[idx], k);
        drain_transcript(session, cursor, rb);
    }

    if (attempt_incomplete && session.threshold() >= 2) {
        auto subset = session.live_handles();
        subset.pop_back();
        bool rejected = false;
        try {
            session.reconstruct(subset);
        } catch (const Error& e) {
            rejected = e.code() == Errc::incomplete_quorum;
        }
        drain_transcript(session, cursor, rb);
        rb.verdict("quorum_enforced", rejected);
    }

    if (first_consumed) {
        auto with_consumed = session.live_handles();
        with_consumed.insert(with_consumed.begin(), *first_consumed);
        with_consumed.pop_back(); // keep the set size at the threshold
        bool rejected = false;
        try {
            session.reconstruct(with_consumed);
        } catch (const Error& e) {
            rejected = e.code() == Errc::share_consumed;
        }
        rb.step("old-share-attempt", std::string("reconstruction including consumed handle ") +
                                         std::to_string(*first_consumed) +
                                         (rejected ? " rejected: ShareConsumed" : " unexpectedly passed"));
        rb.verdict("consumed_share_rejected", rejected);
    }

    if (do_reconstruct) {
        const auto result = session.reconstruct(session.live_handles());
        drain_transcript(session, cursor, rb);
        const double overlap = quantum::overlap_magnitude(quantum::StateVector::from_qubit(secret),
                                                          quantum::StateVector::from_qubit(result));
        rb.step("round-trip", "overlap with the dealt secret: " + fmt12(overlap));
        rb.verdict("round_trip_ok", overlap >= 1.0 - quantum::kNormTol);
    }

    rb.tables["session"] = {{"final_threshold", session.threshold()},
                            {"handles_issued", session.handles().size()},
                            {"closed", session.closed()}};
    return rb.finish(effective);
}

RunReport run_leakage_sweep(const Scenario& scenario)
{
    ParamReader reader(scenario.params);
    const int parties = static_cast<int>(reader.integer("parties", 3, 2, 10000));
    const auto [a, b] = normalized_amplitudes(reader);
    const auto sizes = subset_sizes(reader, parties, parties - 1);
    const double step = reader.real("sweep_step", 1e-3);
    if (step <= 0.0 || step > 0.5)
        invalid("sweep_step", "must be in (0, 0.5]");
    Scenario effective{scenario.kind, scenario.seed, reader.finish()};

    ReportBuilder rb;
    const quantum::SecretQubit secret{a, b};
    auto session = protocol::deal_quantum(secret, parties);
    std::size_t cursor = 0;
    drain_transcript(session, cursor, rb);

    json rows = json::array();
    double min_fid = 1.0, max_fid = 0.0;
    bool mixedness_ok = true;
    const bool expect_mixed = std::abs(a) > 1e-9 && std::abs(b) > 1e-9;
    for (const int size : sizes) {
        auto live = session.live_handles();
        live.resize(size);
        const auto report = session.analyze_subset(live);
        rows.push_back({{"subset_size", report.subset_size},
                        {"purity", report.purity},
                        {"fidelity", report.fidelity},
                        {"is_mixed", report.is_mixed}});
        min_fid = std::min(min_fid, report.fidelity);
        max_fid = std::max(max_fid, report.fidelity);
        mixedness_ok = mixedness_ok && (report.is_mixed == expect_mixed);
    }
    drain_transcript(session, cursor, rb);
    rb.tables["leakage"] = std::move(rows);

    const auto sweep = quantum::sweep_subset_fidelity(step);
    rb.tables["fidelity_floor"] = {{"step", step}, {"x_min", sweep.x_min}, {"f_min", sweep.f_min}};
    rb.step("fidelity-floor", "sweep of x^2 + (1-x)^2 finds the minimum " + fmt12(sweep.f_min) +
                                  " at |a|^2 = " + fmt12(sweep.x_min));

    rb.verdict("leakage_constant", max_fid - min_fid <= 1e-10);
    rb.verdict("mixedness_matches_theory", mixedness_ok);
    rb.verdict("floor_at_half",
               std::abs(sweep.x_min - 0.5) <= step + 1e-12 && std::abs(sweep.f_min - 0.5) <= 1e-6);
    return rb.finish(effective);
}

RunReport run_hiding_test(const Scenario& scenario)
{
    ParamReader reader(scenario.params);
    const int parties = static_cast<int>(reader.integer("parties", 3, 2, 12));
    double omega = reader.real("omega", 0.0);
    omega = std::fmod(omega, 2.0 * kPi);
    if (omega < 0.0)
        omega += 2.0 * kPi;
    reader.put("omega", omega);
    const double theta = reader.real("theta", kPi / 2.0);
    if (theta < 0.0 || theta > kPi)
        invalid("theta", "polar angle must lie in [0, pi]");
    const auto trials = reader.integer("trials", 10000, 1, 50000000);
    const auto sizes = subset_sizes(reader, parties, parties - 1);
    Scenario effective{scenario.kind, scenario.seed, reader.finish()};

    ReportBuilder rb;
    const quantum::MeasurementBasis basis(theta, omega);
    const quantum::SecretQubit encoded[2] = {basis.minus_vector(), basis.plus_vector()};
    rb.step("encode", "bit 1 -> plus vector, bit 0 -> minus vector of the (theta=" + fmt12(theta) +
                          ", omega=" + fmt12(omega) + ") basis");

    std::optional<protocol::SharingSession> sessions[2];
    for (int bit = 0; bit < 2; ++bit) {
        sessions[bit] = protocol::deal_quantum(encoded[bit], parties);
        rb.step("deal", "bit " + std::to_string(bit) + " shared to " + std::to_string(parties) +
                            " parties");
    }

    json rows = json::array();
    double max_diff = 0.0;
    for (const int size : sizes) {
        const quantum::DensityMatrix* reduced[2] = {nullptr, nullptr};
        std::optional<protocol::LeakageReport> reports[2];
        for (int bit = 0; bit < 2; ++bit) {
            auto live = sessions[bit]->live_handles();
            live.resize(size);
            reports[bit] = sessions[bit]->analyze_subset(live);
            if (!reports[bit]->reduced_state)
                invalid("subset_sizes", "subset of " + std::to_string(size) +
                                            " is too large to materialize its reduced state");
            reduced[bit] = &*reports[bit]->reduced_state;
        }
        const double diff = protocol::hiding_report(*reduced[0], *reduced[1]);
        max_diff = std::max(max_diff, diff);
        rows.push_back({{"subset_size", size}, {"max_difference", diff}});
    }
    rb.tables["hiding"] = std::move(rows);
    rb.step("hiding", "largest entrywise difference between the bit-0 and bit-1 reduced states: " +
                          fmt12(max_diff));

    const bool equator = std::abs(theta - kPi / 2.0) < 1e-9;
    rb.verdict("hiding_matches_theory", equator ? max_diff < 1e-12 : max_diff > 0.01);

    // Decode statistics on a single leaked particle.
    double p_plus[2];
    for (int bit = 0; bit < 2; ++bit) {
        auto live = sessions[bit]->live_handles();
        live.resize(1);
        const auto report = sessions[bit]->analyze_subset(live);
        p_plus[bit] = quantum::fidelity_with_pure(
            *report.reduced_state, quantum::StateVector::from_qubit(basis.plus_vector()));
    }
    SeededRng rng(scenario.seed);
    std::uint64_t matches = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        const int bit = static_cast<int>(rng.next_below(2));
        const int decoded = rng.next_unit() < p_plus[bit] ? 1 : 0;
        if (decoded == bit)
            ++matches;
    }
    const double freq = static_cast<double>(matches) / static_cast<double>(trials);
    const double expected = 1.0 - std::sin(theta) * std::sin(theta) / 2.0;
    const double sigma3 =
        3.0 * std::sqrt(std::max(expected * (1.0 - expected), 0.0) / static_cast<double>(trials));
    rb.tables["decode"] = {{"trials", trials},
                           {"matches", matches},
                           {"frequency", freq},
                           {"expected_frequency", expected},
                           {"tolerance_3sigma", sigma3}};
    rb.step("decode", "leaked-particle bit recovery frequency " + fmt12(freq) + " vs expected " +
                          fmt12(expected) + " (3-sigma " + fmt12(sigma3) + ")");
    rb.verdict("decode_frequency_ok", std::abs(freq - expected) <= sigma3);
    return rb.finish(effective);
}

void render_value(std::string& out, const json& v)
{
    if (v.is_number_float())
        out += fmt12(v.get<double>());
    else
        out += v.dump();
}

void render_table(std::string& out, const std::string& name, const json& table)
{
    out += "  " + name + ":\n";
    if (table.is_array()) {
        for (const auto& row : table) {
            out += "   ";
            if (row.is_object()) {
                for (const auto& [key, value] : row.items()) {
                    out += " " + key + "=";
                    render_value(out, value);
                }
            } else {
                out += " ";
                render_value(out, row);
            }
            out += "\n";
        }
    } else if (table.is_object()) {
        out += "   ";
        for (const auto& [key, value] : table.items()) {
            out += " " + key + "=";
            render_value(out, value);
        }
        out += "\n";
    } else {
        out += "    ";
        render_value(out, table);
        out += "\n";
    }
}

} // namespace

const char* scenario_kind_name(ScenarioKind kind) noexcept
{
    switch (kind) {
    case ScenarioKind::classical_demo: return "classical-demo";
    case ScenarioKind::classical_attack: return "classical-attack";
    case ScenarioKind::quantum_lifecycle: return "quantum-lifecycle";
    case ScenarioKind::leakage_sweep: return "leakage-sweep";
    case ScenarioKind::hiding_test: return "hiding-test";
    }
    return "unknown";
}

Scenario parse_scenario(const nlohmann::json& document)
{
    if (!document.is_object())
        raise(Errc::invalid_scenario, "scenario document must be a JSON object");
    for (const auto& [key, value] : document.items())
        if (key != "kind" && key != "seed" && key != "params")
            raise(Errc::invalid_scenario, "unknown top-level field '" + key + "'");
    if (!document.contains("kind") || !document["kind"].is_string())
        raise(Errc::invalid_scenario, "missing string field 'kind'");

    const auto kind_name = document["kind"].get<std::string>();
    ScenarioKind kind;
    if (kind_name == "classical-demo")
        kind = ScenarioKind::classical_demo;
    else if (kind_name == "classical-attack")
        kind = ScenarioKind::classical_attack;
    else if (kind_name == "quantum-lifecycle")
        kind = ScenarioKind::quantum_lifecycle;
    else if (kind_name == "leakage-sweep")
        kind = ScenarioKind::leakage_sweep;
    else if (kind_name == "hiding-test")
        kind = ScenarioKind::hiding_test;
    else
        raise(Errc::invalid_scenario, "unknown scenario kind '" + kind_name + "'");

    std::uint64_t seed = 0;
    if (document.contains("seed")) {
        const auto& s = document["seed"];
        if (!s.is_number_unsigned() && !(s.is_number_integer() && s.get<std::int64_t>() >= 0))
            raise(Errc::invalid_scenario, "'seed' must be a non-negative integer");
        seed = s.get<std::uint64_t>();
    }
    return {kind, seed, document.contains("params") ? document["params"] : json::object()};
}

Scenario parse_scenario_text(const std::string& text)
{
    json document;
    try {
        document = json::parse(text);
    } catch (const json::exception& e) {
        raise(Errc::invalid_scenario, std::string("scenario document is not valid JSON: ") +
                                          e.what());
    }
    return parse_scenario(document);
}

RunReport run_scenario(const Scenario& scenario)
{
    switch (scenario.kind) {
    case ScenarioKind::classical_demo: return run_classical_demo(scenario);
    case ScenarioKind::classical_attack: return run_classical_attack(scenario);
    case ScenarioKind::quantum_lifecycle: return run_quantum_lifecycle(scenario);
    case ScenarioKind::leakage_sweep: return run_leakage_sweep(scenario);
    case ScenarioKind::hiding_test: return run_hiding_test(scenario);
    }
    raise(Errc::invalid_scenario, "unhandled scenario kind");
}

std::string emit_report(const RunReport& report, ReportFormat format)
{
    if (format == ReportFormat::structured)
        return report.document.dump(2) + "\n";

    const auto& doc = report.document;
    std::string out;
    out += "=== scenario report: ";
    out += doc["scenario"]["kind"].get<std::string>();
    out += " ===\n";
    out += "seed: " + std::to_string(doc["seed"].get<std::uint64_t>()) + "\n";
    out += "params: " + doc["scenario"]["params"].dump() + "\n\nsteps:\n";
    for (const auto& s : doc["steps"])
        out += "  [" + s["op"].get<std::string>() + "] " + s["detail"].get<std::string>() + "\n";
    out += "\ntables:\n";
    for (const auto& [name, table] : doc["tables"].items())
        render_table(out, name, table);
    out += "\nverdicts:\n";
    bool all = true;
    for (const auto& [name, pass] : doc["verdicts"].items()) {
        out += std::string("  ") + (pass.get<bool>() ? "PASS " : "FAIL ") + name + "\n";
        all = all && pass.get<bool>();
    }
    out += std::string("overall: ") + (all ? "PASS" : "FAIL") + "\n";
    return out;
}

} // namespace qtcss::harness
