#pragma once

#include <complex>
#include <cstdio>
#include <fstream>
#include <future>

#include <json.hpp>

#include "jacobian.hpp"
#include "localization.hpp"
#include "obstruction.hpp"
#include "sectors.hpp"
#include "triangle.hpp"

namespace chenruan {

using json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "0.1.0";

inline std::string fmt_complex(std::complex<double> z) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12e%+.12ei", z.real(), z.imag());
    return buf;
}

inline json json_weight(const EquivariantWeight& w) {
    json arr = json::array();
    for (const auto& c : w) arr.push_back(rat_str(c));
    return arr;
}

inline json json_cyclotomic(const Cyclotomic& c, int promote_order = 20) {
    Cyclotomic e = c.promote(promote_order);
    json coeffs = json::array();
    for (const auto& x : e.coeffs()) coeffs.push_back(rat_str(x));
    return {{"order", e.order()}, {"coeffs", coeffs}};
}

struct GoldenCheck {
    std::string id;
    std::string expected;
    std::string actual;
    bool pass = false;
};

struct ReportBundle {
    json document;
    std::vector<GoldenCheck> goldens;
    bool all_pass() const {
        for (const auto& g : goldens)
            if (!g.pass) return false;
        return true;
    }
};

namespace report_detail {

inline void add_check(ReportBundle& rb, json& section, const std::string& id, const std::string& expected,
                      const std::string& actual) {
    GoldenCheck g{id, expected, actual, expected == actual};
    section["checks"].push_back({{"id", g.id}, {"expected", g.expected}, {"actual", g.actual}, {"pass", g.pass}});
    rb.goldens.push_back(std::move(g));
}

inline json sector_record(const TricyclicSector& s) {
    json rec;
    rec["tau1"] = s.tau1;
    rec["r1"] = s.g1.box_point;
    rec["tau2"] = s.tau2;
    rec["r2"] = s.g2.box_point;
    rec["dim"] = s.dim;
    rec["components"] = s.components;
    rec["shifts"] = {rat_str(s.shifts[0]), rat_str(s.shifts[1]), rat_str(s.shifts[2])};
    rec["obstruction_rank"] = rat_str(s.rank);
    rec["type"] = sector_type_name(s.type);
    rec["nonzero_three_point"] = s.census_nonzero;
    return rec;
}

// Every nonzero 3-point value keyed by sector triple and degree pattern, the
// raw material for structure-constant assembly. Deterministic order: sectors
// come out of the enumeration sorted by cone/box-point keys.
inline json ring_report(const SectorEnumeration& en) {
    json arr = json::array();
    auto degrees_json = [](std::initializer_list<std::pair<int, int>> degs) {
        json out = json::array();
        for (auto [p, q] : degs) out.push_back({p, q});
        return out;
    };
    for (const auto& s : en.sectors) {
        if (s.type == SectorType::Identity) continue;
        std::array<CohomologyDegree, 3> degrees{};
        bool has_pattern = (s.dim == 0 && s.rank == 0) || (s.dim == 1 && s.rank == 1);
        if (s.dim == 1 && s.rank == 0) {
            degrees[2] = {1, 1};
            has_pattern = true;
        }
        if (!has_pattern) continue; // positive-rank point sectors have no nonzero pattern
        ThreePointValue v = three_point(s, degrees);
        if (v.value == 0) continue;
        json entry;
        entry["g1"] = s.g1.box_point;
        entry["g2"] = s.g2.box_point;
        entry["g3"] = s.g3.box_point;
        entry["type"] = sector_type_name(s.type);
        entry["census"] = s.census_nonzero;
        entry["degrees"] = degrees_json({{degrees[0].p, degrees[0].q},
                                         {degrees[1].p, degrees[1].q},
                                         {degrees[2].p, degrees[2].q}});
        entry["value"] = rat_str(v.value);
        arr.push_back(std::move(entry));
    }
    return arr;
}

inline json sectors_section(ReportBundle& rb, const Fan& fan, bool quintic, bool include_records) {
    json sec;
    SectorEnumeration en = enumerate_tricyclic_hypersurface(fan);
    sec["census"] = {{"ordered_nonzero", en.census.ordered_nonzero},
                     {"type_i", en.census.type_i},
                     {"type_ii", en.census.type_ii},
                     {"unordered_nonzero", en.census.unordered_nonzero},
                     {"rank_zero_point_pairs", en.census.rank_zero_pairs},
                     {"curve_sectors", en.census.curve_sectors},
                     {"point_sectors", en.census.point_sectors},
                     {"total_records", en.census.total}};
    if (quintic) {
        json hodge_table;
        auto betti = orbifold_betti(fan, HodgeFixture::mirror_quintic());
        for (const auto& [pq, v] : betti)
            hodge_table["h" + std::to_string(pq.first) + std::to_string(pq.second)] = v;
        sec["orbifold_hodge"] = hodge_table;
        add_check(rb, sec, "sector-census-ordered", "930", std::to_string(en.census.ordered_nonzero));
        add_check(rb, sec, "sector-census-type-i", "810", std::to_string(en.census.type_i));
        add_check(rb, sec, "sector-census-type-ii", "120", std::to_string(en.census.type_ii));
        add_check(rb, sec, "curve-sector-count", "160", std::to_string(en.census.curve_sectors));
        add_check(rb, sec, "orbifold-h11", "101", std::to_string(betti[{1, 1}]));
        add_check(rb, sec, "orbifold-h00", "1", std::to_string(betti[{0, 0}]));
        add_check(rb, sec, "orbifold-h30", "1", std::to_string(betti[{3, 0}]));
    } else {
        long twisted = 0;
        for (const auto& s : en.sectors)
            if (s.type != SectorType::Identity) ++twisted;
        sec["twisted_sectors"] = twisted;
        // only a smooth fan pins this count
        if (fan.smooth()) add_check(rb, sec, "twisted-sector-count", "0", std::to_string(twisted));
    }
    if (quintic) sec["ring"] = ring_report(en);
    if (include_records) {
        json arr = json::array();
        for (const auto& s : en.sectors) arr.push_back(sector_record(s));
        sec["records"] = std::move(arr);
    }
    return sec;
}

inline json periods_section(ReportBundle& rb, int k) {
    json sec;
    sec["k"] = k;
    auto m = monodromy_h1_action(k);
    json mj = json::array();
    for (const auto& row : m) {
        json r = json::array();
        for (const auto& x : row) r.push_back(rat_str(x));
        mj.push_back(r);
    }
    sec["matrix"] = mj;
    PeriodSolveResult res = solve_period_matrix(m);
    json sols = json::array();
    for (const auto& s : res.solutions) {
        sols.push_back({{"p", fmt_complex(s.matrix.pe())},
                        {"q", fmt_complex(s.matrix.qe())},
                        {"s", fmt_complex(s.matrix.se())},
                        {"p_exact", json_cyclotomic(s.matrix.p)},
                        {"q_exact", json_cyclotomic(s.matrix.q)},
                        {"s_exact", json_cyclotomic(s.matrix.s)},
                        {"eigen_pair", {s.eigen_pair.first, s.eigen_pair.second}},
                        {"imP_posdef", s.positive_definite}});
    }
    sec["solutions"] = std::move(sols);
    sec["selected"] = res.selected;
    add_check(rb, sec, "period-solution-count-k" + std::to_string(k), "4", std::to_string(res.solutions.size()));
    long posdef = 0;
    for (const auto& s : res.solutions)
        if (s.positive_definite) ++posdef;
    add_check(rb, sec, "period-posdef-count-k" + std::to_string(k), "1", std::to_string(posdef));

    // tabulated closed forms, embedded numerically
    static const std::map<int, std::array<std::complex<double>, 3>> closed = [] {
        using C = std::complex<double>;
        std::map<int, std::array<C, 3>> m;
        const double s5 = std::sqrt(5.0);
        m[1] = {std::polar(1.0, 3.0 * M_PI / 5.0), C(0.5, 0.5 * std::sqrt(5.0 - 2.0 * s5)),
                std::polar(1.0, 2.0 * M_PI / 5.0)};
        m[2] = {std::polar(std::sqrt((5.0 - s5) / 2.0), 3.0 * M_PI / 10.0),
                std::polar(2.0 * std::sin(M_PI / 10.0), M_PI / 5.0),
                std::polar(std::sqrt((5.0 - s5) / 2.0), 7.0 * M_PI / 10.0)};
        m[3] = {C(0.0, 0.1 * (5.0 + 3.0 * s5) * std::sqrt(5.0 - 2.0 * s5)),
                std::polar(std::sqrt((5.0 - s5) / 10.0), -M_PI / 10.0),
                std::polar(std::sqrt((5.0 + s5) / 10.0), 7.0 * M_PI / 10.0)};
        return m;
    }();
    const auto& cf = closed.at(k);
    PeriodMatrix pm = res.period();
    double err = std::max({std::abs(pm.pe() - cf[0]), std::abs(pm.qe() - cf[1]), std::abs(pm.se() - cf[2])});
    sec["closed_form_error"] = err;
    add_check(rb, sec, "period-closed-form-k" + std::to_string(k), "under-1e-9", err < 1e-9 ? "under-1e-9" : "over");
    return sec;
}

inline json obstruction_section(ReportBundle& rb) {
    json sec;
    // eigen table fixtures per (k, n)
    auto table_vector = [&](int k, int n) -> std::vector<Cyclotomic> {
        Cyclotomic z1 = Cyclotomic::root_power(5, 1), z3 = Cyclotomic::root_power(5, 3);
        Cyclotomic re1 = Cyclotomic::root_power(5, 1) + Cyclotomic::root_power(5, 4);
        Cyclotomic re2 = Cyclotomic::root_power(5, 2) + Cyclotomic::root_power(5, 3);
        Cyclotomic zero(5), one(5, Rational(1));
        auto vec2 = [&](const Cyclotomic& c) { return std::vector<Cyclotomic>{zero, c, zero, zero, one, zero}; };
        auto vec1 = [&](const Cyclotomic& c) { return std::vector<Cyclotomic>{c, zero, zero, one, zero, zero}; };
        switch (k * 10 + n) {
            case 11: return vec2(z3);
            case 12: return vec2(z1);
            case 13: return vec1(z1);
            case 14: return vec1(z3);
            case 21: return vec2(z1);
            case 22: return vec1(z3);
            case 23: return vec2(z3);
            case 24: return vec1(z1);
            case 31: return vec2(re2);
            case 32: return vec2(re1);
            case 33: return vec1(re1);
            case 34: return vec1(re2);
        }
        throw std::logic_error("no eigenvector fixture");
    };
    json grid = json::array();
    bool all_mult_one = true, all_match = true, all_order_five = true;
    for (int k = 1; k <= 3; ++k) {
        PeriodSolveResult pr = solve_period_matrix(monodromy_h1_action(k));
        for (int n = 1; n <= 4; ++n) {
            ObstructionAction act = build_obstruction_matrix(n, k, pr.period());
            auto kernel = eigenspace(act.matrix, Cyclotomic(5, Rational(1)));
            bool mult_one = kernel.size() == 1;
            bool match = false;
            if (mult_one) {
                // table vector must be a scalar multiple of the kernel vector
                auto tv = table_vector(k, n);
                const auto& kv = kernel[0];
                size_t idx = 0;
                while (idx < 6 && kv[idx].is_zero()) ++idx;
                if (idx < 6 && !tv[idx].is_zero()) {
                    Cyclotomic lambda = tv[idx] * kv[idx].inverse();
                    match = true;
                    for (size_t i = 0; i < 6; ++i)
                        if (lambda * kv[i] != tv[i]) match = false;
                }
            }
            bool order5 = mat_pow(act.matrix, 5) == mat_identity<Cyclotomic>(6, Cyclotomic(5));
            all_mult_one &= mult_one;
            all_match &= match;
            all_order_five &= order5;
            grid.push_back({{"n", n}, {"k", k}, {"eigenvalue_one_multiplicity", kernel.size()},
                            {"table_match", match}, {"order_five", order5},
                            {"method", "exact-cyclotomic"}});
        }
    }
    sec["grid"] = std::move(grid);
    add_check(rb, sec, "obstruction-multiplicity-one", "true", all_mult_one ? "true" : "false");
    add_check(rb, sec, "obstruction-table-match", "true", all_match ? "true" : "false");
    add_check(rb, sec, "obstruction-order-five", "true", all_order_five ? "true" : "false");

    // rank consistency across the sector enumeration
    Fan fan = Fan::mirror_quintic();
    SectorEnumeration en = enumerate_tricyclic_hypersurface(fan);
    bool rank_consistent = true;
    for (const auto& s : en.sectors) {
        if (!rat_is_integer(s.rank) || s.rank < 0) rank_consistent = false;
        if (s.dim == 1 && s.tau1 == s.tau2 && !s.g1.is_identity() && !s.g2.is_identity()) {
            long expected = s.g3.is_identity() ? 0 : 1;
            if (s.rank != expected) rank_consistent = false;
        }
    }
    add_check(rb, sec, "rank-formula-consistency", "true", rank_consistent ? "true" : "false");

    // three-point values
    Rational euler = curve_euler_integral(
        [&] {
            for (const auto& s : en.sectors)
                if (s.type == SectorType::Curve && s.rank == 1) return s;
            throw std::logic_error("no curve sector");
        }(),
        local_invariants_curve(1, 1), 1);
    add_check(rb, sec, "curve-euler-integral", "1/25", rat_str(euler));
    for (const auto& s : en.sectors) {
        if (s.census_nonzero) {
            auto v = three_point(s, {CohomologyDegree{0, 0}, CohomologyDegree{0, 0}, CohomologyDegree{0, 0}});
            add_check(rb, sec, "point-three-point", "1/25", rat_str(v.value));
            break;
        }
    }
    for (const auto& s : en.sectors) {
        if (s.type == SectorType::Curve && s.rank == 0 && !s.g1.is_identity()) {
            auto v = three_point(s, {CohomologyDegree{0, 0}, CohomologyDegree{0, 0}, CohomologyDegree{1, 1}});
            add_check(rb, sec, "rational-curve-pairing", "1/5", rat_str(v.value));
            break;
        }
    }
    return sec;
}

inline json localization_section(ReportBundle& rb) {
    json sec;
    Fan fan = Fan::mirror_quintic();
    Cone tau = fan.cone({0, 1});
    QuotientFanData q = quotient_fan(fan, tau);
    auto fps = fixed_points(q);
    auto lw = line_bundle_weights({{2, 5}}, q);      // hypersurface class on the sector surface
    auto fw = transition_lift_weights(4, 5, q);      // reduced obstruction lift, weight 0 on the chart of ray 4
    std::vector<FixedPointDatum> data = fps;
    json fp_json = json::array();
    for (auto& d : data) {
        d.bundle_weights["L"] = lw.at(d.cone);
        d.bundle_weights["F2"] = fw.at(d.cone);
        json tj = json::array();
        for (const auto& w : d.tangent_weights) tj.push_back(json_weight(w));
        fp_json.push_back({{"cone", d.cone},
                           {"order", d.local_order.get_str()},
                           {"tangent_weights", tj},
                           {"bundle_weights", {{"L", json_weight(d.bundle_weights["L"])},
                                                {"F2", json_weight(d.bundle_weights["F2"])}}}});
    }
    sec["fixed_points"] = std::move(fp_json);
    LocalizationResult res = localized_integral(data, {"F2", "L"});
    json contrib = json::array();
    for (const auto& c : res.contributions_at_probe) contrib.push_back(rat_str(c));
    sec["contributions_at_probe"] = std::move(contrib);
    sec["sum"] = rat_str(res.constant);
    add_check(rb, sec, "localization-constant", "1", rat_str(res.constant));
    Rational euler_class_integral = res.constant / Rational(25);
    add_check(rb, sec, "obstruction-euler-number", "1/25", rat_str(euler_class_integral));

    // unimodular basis invariance
    IntMat alt;
    {
        const IntMat& b = q.m_basis;
        IntVec c1(b[0].size()), c2(b[0].size());
        for (size_t i = 0; i < b[0].size(); ++i) {
            c1[i] = 2 * b[0][i] + 1 * b[1][i];
            c2[i] = 1 * b[0][i] + 1 * b[1][i];
        }
        alt = {c1, c2};
    }
    QuotientFanData q2 = quotient_fan(fan, tau, alt);
    auto fps2 = fixed_points(q2);
    auto lw2 = line_bundle_weights({{2, 5}}, q2);
    auto fw2 = transition_lift_weights(4, 5, q2);
    for (auto& d : fps2) {
        d.bundle_weights["L"] = lw2.at(d.cone);
        d.bundle_weights["F2"] = fw2.at(d.cone);
    }
    Rational alt_const = localized_integral(fps2, {"F2", "L"}).constant;
    add_check(rb, sec, "localization-basis-invariance", rat_str(res.constant), rat_str(alt_const));

    // lift invariance: shift one bundle by a global character
    for (auto& d : data) {
        d.bundle_weights["F2"] = weight_add(d.bundle_weights["F2"], EquivariantWeight{Rational(3), Rational(-2)});
    }
    Rational shifted_const = localized_integral(data, {"F2", "L"}).constant;
    add_check(rb, sec, "localization-lift-invariance", rat_str(res.constant), rat_str(shifted_const));

    add_check(rb, sec, "transversal-point-count", "1",
              std::to_string(intersection_check_eta_cubed(fan)));
    return sec;
}

inline json cupprod_section(ReportBundle& rb, const Rational& psi, const MonoOrder& order) {
    json sec;
    sec["psi"] = rat_str(psi);
    Fan fan = Fan::mirror_quintic();
    ChowGrading grading(fan);
    JacobianData jd = jacobian_data(psi, order);
    std::vector<long> ample = {1, 1, 1, 1, 1};

    ResiduePairingContext ctx;
    ctx.subset = {0, 1, 2, 3, 4};
    auto [jpoly, cbeta] = compute_J(jd, fan, ctx.subset, ample);
    ctx.j_polynomial = jpoly;
    ctx.c_beta = cbeta;
    ctx.vol = polytope_volume(ample_polytope_vertices(fan, ample));
    add_check(rb, sec, "subset-determinant", "625", rat_str(cbeta));
    add_check(rb, sec, "ample-volume", "5/24", rat_str(ctx.vol));

    // displayed form of J
    {
        std::vector<Term> terms;
        for (int j = 0; j < 5; ++j) {
            Mono m(5, 5);
            m[j] = 0;
            terms.push_back({std::move(m), psi});
        }
        terms.push_back({Mono(5, 4), Rational(25)});
        Poly display = poly_from_terms(std::move(terms), order);
        add_check(rb, sec, "jacobian-determinant-display", "true", jpoly == display ? "true" : "false");
    }

    Poly one = poly_const(5, Rational(1));
    Poly u3 = poly_monomial(Mono(5, 3));
    PairingValue v03 = pairing_value(one, u3, 0, 3, jd, ctx);
    Rational denom = rat_pow(psi, 5) + Rational(3125);
    add_check(rb, sec, "residue-constant-times-denominator", "125", rat_str(v03.c * denom));
    add_check(rb, sec, "pairing-30-03", "-5000/3", rat_str(v03.pi4_coeff * denom));
    Poly u1 = poly_monomial(Mono(5, 1));
    Poly u2 = poly_monomial(Mono(5, 2));
    PairingValue v12 = pairing_value(u1, u2, 1, 2, jd, ctx);
    add_check(rb, sec, "pairing-21-12", "5000", rat_str(v12.pi4_coeff * denom));
    sec["c"] = rat_str(v03.c);
    sec["pairing_values"] = {{"a0_b3", rat_str(v03.pi4_coeff) + " * pi^4"},
                             {"a1_b2", rat_str(v12.pi4_coeff) + " * pi^4"}};
    json dims;
    for (int a = 0; a <= 3; ++a) {
        long dim = graded_dimension(jd, grading, a);
        dims["degree_" + std::to_string(a) + "beta"] = dim;
        add_check(rb, sec, "graded-dim-" + std::to_string(a) + "beta", "1", std::to_string(dim));
    }
    sec["graded_dims"] = std::move(dims);

    // closed form pinned by exact agreement at several parameters plus the
    // known denominator shape
    json fit = json::array();
    bool fit_consistent = true;
    for (long pl : {1L, 2L, 3L, 7L}) {
        Rational pval = rat(pl);
        Rational cval = (pval == psi) ? v03.c : [&] {
            JacobianData jf = jacobian_data(pval, order);
            auto [jp, cb] = compute_J(jf, fan, ctx.subset, ample);
            ResiduePairingContext cf{ctx.subset, cb, jp, ctx.vol};
            return residue_constant(one, u3, jf, cf);
        }();
        Rational scaled = cval * (rat_pow(pval, 5) + Rational(3125));
        fit.push_back({{"psi", rat_str(pval)}, {"c", rat_str(cval)}, {"c_times_denominator", rat_str(scaled)}});
        fit_consistent &= scaled == 125;
    }
    sec["specializations"] = std::move(fit);
    sec["fitted_c"] = "125/(psi^5 + 3125)";
    sec["assumes_generic_parameter"] = true;
    add_check(rb, sec, "closed-form-fit", "true", fit_consistent ? "true" : "false");
    return sec;
}

inline json triangle_section(ReportBundle& rb) {
    json sec;
    TriangleReport rep = verify_triangle_group();
    sec["vertex"] = rep.vertex;
    sec["circle_center"] = fmt_complex(rep.circle_center);
    sec["circle_radius"] = rep.circle_radius;
    json checks = json::array();
    for (const auto& c : rep.checks)
        checks.push_back({{"name", c.name}, {"defect", c.defect}, {"tolerance", c.tolerance}, {"pass", c.pass}});
    sec["relations"] = std::move(checks);
    add_check(rb, sec, "triangle-relations", "true", rep.all_pass() ? "true" : "false");
    return sec;
}

} // namespace report_detail

// Full batch run over one fan fixture. Sections beyond the sector census are
// specific to the quintic fixture and are skipped (reported empty) elsewhere.
inline ReportBundle run_report(const Fan& fan, const Rational& psi, const std::string& fixture_name,
                               int threads = 1) {
    using namespace report_detail;
    check_psi_smooth(psi);
    ReportBundle rb;
    rb.document["metadata"] = {{"fixture", fixture_name}, {"psi", rat_str(psi)}, {"version", kToolVersion}};
    const bool quintic = fan.same_rays(Fan::mirror_quintic());
    if (quintic) {
        // sections are pure; run them as tasks and merge in a fixed order
        auto policy = threads > 1 ? std::launch::async : std::launch::deferred;
        using Section = std::pair<json, std::vector<GoldenCheck>>;
        auto task = [&](std::function<json(ReportBundle&)> fn) {
            return std::async(policy, [fn] {
                ReportBundle local;
                json sec = fn(local);
                return Section{std::move(sec), std::move(local.goldens)};
            });
        };
        auto f_sectors = task([&fan](ReportBundle& b) { return sectors_section(b, fan, true, false); });
        auto f_periods = task([](ReportBundle& b) {
            json arr = json::array();
            for (int k = 1; k <= 3; ++k) arr.push_back(periods_section(b, k));
            return arr;
        });
        auto f_obs = task([](ReportBundle& b) { return obstruction_section(b); });
        auto f_loc = task([](ReportBundle& b) { return localization_section(b); });
        auto f_cup = task([psi](ReportBundle& b) { return cupprod_section(b, psi, MonoOrder::grevlex()); });
        auto f_tri = task([](ReportBundle& b) { return triangle_section(b); });
        auto merge = [&rb](const char* key, std::future<Section>& f) {
            Section s = f.get();
            rb.document[key] = std::move(s.first);
            for (auto& g : s.second) rb.goldens.push_back(std::move(g));
        };
        merge("sectors", f_sectors);
        merge("periods", f_periods);
        merge("obstruction", f_obs);
        merge("localization", f_loc);
        merge("cupprod", f_cup);
        merge("triangle", f_tri);
    } else {
        rb.document["sectors"] = sectors_section(rb, fan, quintic, false);
        rb.document["periods"] = json::array();
        rb.document["obstruction"] = json::object();
        rb.document["localization"] = json::object();
        rb.document["cupprod"] = json::object();
        rb.document["triangle"] = triangle_section(rb);
    }
    json summary = json::array();
    for (const auto& g : rb.goldens)
        summary.push_back({{"id", g.id}, {"pass", g.pass}});
    rb.document["golden_summary"] = std::move(summary);
    rb.document["all_pass"] = rb.all_pass();
    return rb;
}

// Fan file loader: JSON object {"dim": d, "rays": [[..]], "max_cones": [[..]]}
// with bit-exact integers. Errors carry the offending field.
inline Fan load_fan_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open fan file: " + path);
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("fan file parse error at byte " + std::to_string(e.byte) + ": " + e.what());
    }
    if (!doc.is_object() || !doc.contains("dim") || !doc.contains("rays") || !doc.contains("max_cones"))
        throw std::invalid_argument("fan file must be an object with fields dim, rays, max_cones");
    if (!doc["dim"].is_number_integer()) throw std::invalid_argument("field dim must be an integer");
    int dim = doc["dim"].get<int>();
    IntMat rays;
    for (const auto& r : doc["rays"]) {
        IntVec v;
        for (const auto& x : r) {
            if (!x.is_number_integer()) throw std::invalid_argument("field rays must hold integers only");
            v.push_back(x.get<long>());
        }
        rays.push_back(std::move(v));
    }
    std::vector<ConeKey> max_cones;
    for (const auto& c : doc["max_cones"]) {
        ConeKey k;
        for (const auto& x : c) {
            if (!x.is_number_integer()) throw std::invalid_argument("field max_cones must hold integer indices");
            k.push_back(x.get<int>());
        }
        max_cones.push_back(std::move(k));
    }
    return Fan(dim, std::move(rays), std::move(max_cones));
}

} // namespace chenruan
