#include "satkit/verify.hpp"

#include <atomic>
#include <functional>
#include <random>
#include <sstream>
#include <thread>

#include "satkit/arcjets.hpp"

namespace satkit {

namespace {

using Task = std::function<std::vector<CheckResult>()>;

// Runs a check body; any library error becomes a failed check.
CheckResult guarded(std::string check, std::string input, std::string expected,
                    const std::function<std::pair<std::string, bool>()>& body) {
    CheckResult r{std::move(check), std::move(input), std::move(expected), "", false};
    try {
        std::tie(r.computed, r.pass) = body();
    } catch (const Error& e) {
        r.computed = e.what();
        r.pass = false;
    }
    return r;
}

std::vector<CheckResult> run_tasks(const std::vector<Task>& tasks, unsigned jobs) {
    std::vector<std::vector<CheckResult>> slots(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) slots[i] = tasks[i]();
    };
    const unsigned threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(tasks.size())));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    std::vector<CheckResult> out;
    for (auto& s : slots) out.insert(out.end(), s.begin(), s.end());
    return out;
}

std::vector<long> parameter_values(const VerifyOptions& opt, std::vector<long> defaults) {
    if (opt.n) return {*opt.n};
    return defaults;
}

std::string shape_of(const LaurentPoly& r) {
    std::ostringstream os;
    os << r.term_count() << " terms, constant term " << r.coeff(0).get_str()
       << (r.has_positive_exponents() ? ", positive exponents present" : ", exponents <= 0");
    return os.str();
}

// ---------------------------------------------------------------- table1

std::vector<CheckResult> table1_checks(const CatalogEntry& e) {
    const std::string& label = e.record.label;
    std::vector<CheckResult> out;
    const LaurentPoly& p = e.record.p_gh;
    const LaurentPoly& pe = e.record.p_gh_empty;

    out.push_back(guarded("table1.ratio", label + ": (" + pe.str() + ") / (" + p.str() + ")",
                          e.record.r_empty ? e.record.r_empty->str() : "(no stored value)", [&] {
                              const LaurentPoly r = ratio_r(pe, p);
                              return std::make_pair(r.str(), e.record.r_empty && r == *e.record.r_empty);
                          }));
    out.push_back(guarded("table1.r_shape", label, "2 terms, constant term 1, exponents <= 0", [&] {
        const LaurentPoly r = ratio_r(pe, p);
        const bool ok = r.term_count() == 2 && r.coeff(0) == 1 && !r.has_positive_exponents();
        return std::make_pair(shape_of(r), ok);
    }));
    out.push_back(guarded("table1.horospherical", label + ": (" + pe.str() + ") / (t - 1)", "value 1 at t = 0", [&] {
        const HorosphericalFactor h = horospherical_factor(pe, e.record.rank.value_or(1));
        return std::make_pair(h.factor.str() + ", value " + h.value_at_zero.get_str() + " at t = 0", h.value_at_zero == 1);
    }));
    if (e.closed_orbit) {
        out.push_back(guarded("table1.closed_orbit",
                              label + ": (t - 1) * flag(" + e.closed_orbit->type + ", levi \"" + e.closed_orbit->levi + "\")",
                              pe.str(), [&] {
                                  const LaurentPoly q = e.recompute_p_gh_empty();
                                  return std::make_pair(q.str(), q == pe);
                              }));
    }
    if (e.record.groups && e.connected_h.value_or(false)) {
        const GroupData& g = *e.record.groups;
        out.push_back(guarded("table1.degree_law", label + ": deg R_0 against u_G - u_H",
                              std::to_string(g.u_g - g.u_h), [&] {
                                  const DegreeLawReport rep = check_degree_laws(e.record);
                                  return std::make_pair(std::to_string(rep.degree), rep.pass());
                              }));
        out.push_back(guarded("table1.brion_peyre",
                              label + ": p_gh / (t^" + std::to_string(g.u_g - g.u_h) + " (t - 1)^" +
                                  std::to_string(g.r_g - g.r_h) + ")",
                              "Q with nonnegative coefficients and Q(0) = 1", [&] {
                                  const BrionPeyre bp = brion_peyre_q(p, g.u_g - g.u_h, g.r_g - g.r_h);
                                  return std::make_pair("Q = " + bp.q.str(), bp.nonnegative && bp.q0_is_one);
                              }));
    }
    return out;
}

std::vector<CheckResult> suite_table1(const Catalog& cat, const VerifyOptions& opt) {
    std::vector<Task> tasks;
    for (const auto& id : cat.ids()) {
        if (id.rfind("table1.", 0) != 0) continue;
        const auto range = cat.parameter(id);
        const std::vector<long> ns = range ? parameter_values(opt, {2, 3, 4, 5}) : std::vector<long>{0};
        for (long n : ns) {
            tasks.push_back([&cat, id, n, range] {
                try {
                    return table1_checks(cat.entry(id, range ? std::optional<long>(n) : std::nullopt));
                } catch (const Error& err) {
                    return std::vector<CheckResult>{{"table1.load", id, "entry instantiates", err.what(), false}};
                }
            });
        }
    }
    return run_tasks(tasks, opt.jobs);
}

// ---------------------------------------------------------------- example71

std::vector<CheckResult> suite_example71(const VerifyOptions& opt) {
    const long n = opt.n.value_or(5);
    std::vector<Task> tasks;
    const int r = static_cast<int>(n) - 1;
    for (unsigned long mask = 0; mask < (r >= 0 && r < 20 ? (1ul << r) : 1ul); ++mask) {
        tasks.push_back([n, r, mask] {
            SimpleRootSet s;
            for (int i = 0; i < r; ++i) {
                if (mask & (1ul << i)) s.insert(i + 1);
            }
            const std::string input = "n = " + std::to_string(n) + ", I = " + subset_str(IndexSet(s.begin(), s.end()));
            std::vector<CheckResult> out;
            out.push_back(guarded("example71.shape", input, "integer coefficients, constant term 1, exponents <= 0", [&] {
                const LaurentPoly h = example71_family(static_cast<int>(n), s);
                return std::make_pair(h.str() + " (" + shape_of(h) + ")", !h.has_positive_exponents() && h.coeff(0) == 1);
            }));
            out.push_back(guarded("example71.dual_formula", input, "heights product == degrees quotient", [&] {
                const LaurentPoly h = example71_family(static_cast<int>(n), s);
                const LaurentPoly d = example71_family_degrees(static_cast<int>(n), s);
                return std::make_pair(h == d ? h.str() : h.str() + " vs " + d.str(), h == d);
            }));
            return out;
        });
    }
    return run_tasks(tasks, opt.jobs);
}

// ---------------------------------------------------------------- example72

std::vector<CheckResult> suite_example72(const Catalog& cat) {
    std::vector<CheckResult> out;
    CatalogEntry e;
    try {
        e = cat.entry("example72");
    } catch (const Error& err) {
        return {{"example72.load", "example72", "entry present", err.what(), false}};
    }
    SatelliteFamily fam;
    try {
        fam = e.satellite_family();
    } catch (const Error& err) {
        return {{"example72.family", "example72", "satellite family present", err.what(), false}};
    }
    if (e.r_family.empty()) out.push_back({"example72.ratio", "example72", "stored R_I values", "none stored", false});
    for (const auto& [subset, expected] : e.r_family) {
        out.push_back(guarded("example72.ratio", "R_" + subset_str(subset) + " = P~_I / P~_{G/H}", expected.str(), [&] {
            const LaurentPoly r = ratio_r(fam.at(subset), e.record.p_gh);
            return std::make_pair(r.str(), r == expected);
        }));
    }
    out.push_back(guarded("example72.degree_law", "deg R_0 against u_G - u_H",
                          e.record.groups ? std::to_string(e.record.groups->u_g - e.record.groups->u_h) : "?", [&] {
                              const DegreeLawReport rep = check_degree_laws(e.record);
                              return std::make_pair(std::to_string(rep.degree), rep.pass());
                          }));
    out.push_back(guarded("example72.horospherical",
                          "(" + e.record.p_gh_empty.str() + ") / (t - 1)^" + std::to_string(e.record.rank.value_or(0)),
                          "value 1 at t = 0", [&] {
                              const HorosphericalFactor h = horospherical_factor(e.record.p_gh_empty, e.record.rank.value_or(0));
                              return std::make_pair(h.factor.str(), h.value_at_zero == 1);
                          }));
    return out;
}

// ---------------------------------------------------------------- wonderful

std::vector<LatticeVector> unimodular(std::mt19937_64& rng, int r) {
    std::vector<LatticeVector> m(static_cast<std::size_t>(r), LatticeVector(static_cast<std::size_t>(r), 0));
    for (int i = 0; i < r; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    if (r < 2) return m;
    std::uniform_int_distribution<std::size_t> idx(0, static_cast<std::size_t>(r - 1));
    std::uniform_int_distribution<long> mult(-2, 2);
    for (int s = 0; s < 6; ++s) {
        const std::size_t i = idx(rng);
        const std::size_t j = idx(rng);
        if (i == j) continue;
        const long f = mult(rng);
        for (std::size_t c = 0; c < m.size(); ++c) m[i][c] += f * m[j][c];
    }
    return m;
}

std::vector<CheckResult> suite_wonderful(const Catalog& cat, const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    for (const auto& id : cat.ids()) {
        const auto range = cat.parameter(id);
        const std::vector<long> ns = range ? parameter_values(opt, {2, 3, 4, 5}) : std::vector<long>{0};
        for (long n : ns) {
            CatalogEntry e;
            try {
                e = cat.entry(id, range ? std::optional<long>(n) : std::nullopt);
            } catch (const Error& err) {
                out.push_back({"wonderful.load", id, "entry instantiates", err.what(), false});
                continue;
            }
            if (!e.p_x) continue;
            out.push_back(guarded("wonderful.sum", e.record.label + ": sum over I of P~_I / (t - 1)^(r - |I|)", e.p_x->str(), [&] {
                const LaurentPoly s = wonderful_sum(e.satellite_family());
                return std::make_pair(s.str(), s == *e.p_x);
            }));
        }
    }

    // Synthetic families P~_I = (t - 1)^(r - |I|) * U_I with U_I monic, checked
    // in both forms against sum U_I.
    const int order = 12;
    std::mt19937_64 rng(20240501);
    std::uniform_int_distribution<long> coeff(-3, 3);
    std::uniform_int_distribution<int> deg(0, 4);
    for (int r = 0; r <= 3; ++r) {
        for (int trial = 0; trial < 4; ++trial) {
            const ValuationCone cone(r, unimodular(rng, r));
            SatelliteFamily fam{r, {}};
            LaurentPoly expected;
            for (const auto& face : enumerate_faces(cone)) {
                LaurentPoly u = LaurentPoly::t(deg(rng));
                for (int k = 0; k < u.max_exp(); ++k) u += LaurentPoly::monomial(coeff(rng), k);
                fam.polynomials[face.subset] =
                    u * LaurentPoly::t_power_minus_one(1).pow(static_cast<unsigned>(r - static_cast<int>(face.subset.size())));
                expected += u;
            }
            const std::string input = "synthetic rank " + std::to_string(r) + " family #" + std::to_string(trial + 1);
            out.push_back(guarded("wonderful.synthetic_sum", input, expected.str(), [&] {
                const LaurentPoly s = wonderful_sum(fam);
                return std::make_pair(s.str(), s == expected);
            }));
            out.push_back(guarded("wonderful.series", input + ", lattice points to t^-" + std::to_string(order),
                                  TruncSeries::from_poly(expected, order, SeriesVar::TInverse).str(), [&] {
                                      const TruncSeries s = wonderful_sum_series(fam, cone, order);
                                      return std::make_pair(s.str(), s == TruncSeries::from_poly(expected, order, SeriesVar::TInverse));
                                  }));
        }
    }
    return out;
}

// ---------------------------------------------------------------- arc61

std::string matrix_str(const RationalMatrix& m) {
    std::string s = "[";
    for (std::size_t i = 0; i < m.size(); ++i) {
        s += i ? ", [" : "[";
        for (std::size_t j = 0; j < m[i].size(); ++j) s += (j ? ", " : "") + m[i][j].get_str();
        s += "]";
    }
    return s + "]";
}

std::vector<CheckResult> arc_checks(const SeriesMatrix& g, const std::string& input, int order) {
    std::vector<CheckResult> out;
    out.push_back(guarded("arc61.relations", input, "b = 0, a d = 1, a - d = t^2 c", [&] {
        const IsotropyRelations rel = check_example61_relations(g);
        std::string s = std::string("b = 0: ") + (rel.b_zero ? "yes" : "no") + ", a d = 1: " + (rel.ad_one ? "yes" : "no") +
                        ", a - d = t^2 c: " + (rel.a_minus_d ? "yes" : "no");
        return std::make_pair(s, rel.all());
    }));
    out.push_back(guarded("arc61.fixes", input, "fixes [0:t^-1] and [t:t^-1]", [&] {
        const auto base = example61_base_curves(order);
        const bool f0 = projectively_fixes(g, base[0]);
        const bool f1 = projectively_fixes(g, base[1]);
        return std::make_pair(std::string("[0:t^-1]: ") + (f0 ? "fixed" : "moved") + ", [t:t^-1]: " + (f1 ? "fixed" : "moved"),
                              f0 && f1);
    }));
    out.push_back(guarded("arc61.limit", input, "limit in U_2", [&] {
        const RationalMatrix lim = limit_at_zero(g);
        return std::make_pair(matrix_str(lim), in_u2(lim));
    }));
    return out;
}

std::vector<CheckResult> suite_arc61() {
    const int order = 8;
    std::vector<CheckResult> out;
    for (int sign : {1, -1}) {
        for (int c0 = -3; c0 <= 3; ++c0) {
            const std::string input = "witness sign " + std::to_string(sign) + ", c0 = " + std::to_string(c0) + ", order 8";
            try {
                const SeriesMatrix g = example61_witness(sign, c0, order);
                auto checks = arc_checks(g, input, order);
                out.insert(out.end(), checks.begin(), checks.end());
                out.push_back(guarded("arc61.limit_value", input, "[[" + std::to_string(sign) + ", 0], [" + std::to_string(c0) + ", " + std::to_string(sign) + "]]", [&] {
                    const RationalMatrix lim = limit_at_zero(g);
                    const RationalMatrix want{{sign, 0}, {c0, sign}};
                    return std::make_pair(matrix_str(lim), lim == want);
                }));
            } catch (const Error& err) {
                out.push_back({"arc61.witness", input, "witness constructed", err.what(), false});
            }
        }
    }
    out.push_back(guarded("arc61.corrupted", "witness sign 1, c0 = 2 with b(t) = t", "does not fix [0:t^-1]", [&] {
        const SeriesMatrix w = example61_witness(1, 2, order);
        const SeriesMatrix bad({{w.at(0, 0), TruncSeries::from_poly(LaurentPoly::t(), order)}, {w.at(1, 0), w.at(1, 1)}});
        const bool fixes = projectively_fixes(bad, example61_base_curves(order)[0]);
        return std::make_pair(fixes ? std::string("fixes") : std::string("does not fix"), !fixes);
    }));

    // Reverse direction on random solutions of the constraints.
    std::mt19937_64 rng(61);
    std::uniform_int_distribution<long> num(-5, 5);
    std::uniform_int_distribution<long> den(1, 4);
    for (int trial = 0; trial < 10; ++trial) {
        TruncSeries c(SeriesVar::T, order);
        for (int e = 0; e <= order; ++e) {
            Rational q(num(rng), den(rng));
            q.canonicalize();
            c.set(e, q);
        }
        const int sign = trial % 2 ? -1 : 1;
        const std::string input = "random c(t) = " + c.str() + ", sign " + std::to_string(sign);
        try {
            auto checks = arc_checks(isotropy_curve(sign, c), input, order);
            out.insert(out.end(), checks.begin(), checks.end());
        } catch (const Error& err) {
            out.push_back({"arc61.random", input, "curve constructed", err.what(), false});
        }
    }
    return out;
}

}  // namespace

const std::vector<std::string>& verify_suites() {
    static const std::vector<std::string> names{"table1", "example71", "example72", "wonderful", "arc61", "all"};
    return names;
}

std::vector<CheckResult> run_suite(const std::string& suite, const Catalog& catalog, const VerifyOptions& options) {
    if (suite == "table1") return suite_table1(catalog, options);
    if (suite == "example71") {
        if (options.n && (*options.n < 2 || *options.n > 8)) {
            throw OutOfRange("example71 needs 2 <= n <= 8, got " + std::to_string(*options.n));
        }
        return suite_example71(options);
    }
    if (suite == "example72") return suite_example72(catalog);
    if (suite == "wonderful") return suite_wonderful(catalog, options);
    if (suite == "arc61") return suite_arc61();
    if (suite == "all") {
        std::vector<CheckResult> out;
        for (const auto& name : verify_suites()) {
            if (name == "all") continue;
            auto part = run_suite(name, catalog, name == "example71" ? VerifyOptions{std::nullopt, options.jobs} : options);
            out.insert(out.end(), part.begin(), part.end());
        }
        return out;
    }
    throw OutOfRange("unknown suite \"" + suite + "\"");
}

bool all_passed(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.pass; });
}

nlohmann::ordered_json report_json(const std::vector<CheckResult>& results) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& r : results) {
        out.push_back({{"check", r.check}, {"input", r.input}, {"expected", r.expected}, {"computed", r.computed}, {"pass", r.pass}});
    }
    return out;
}

std::string report_text(const std::vector<CheckResult>& results) {
    std::ostringstream os;
    std::size_t failed = 0;
    for (const auto& r : results) {
        os << (r.pass ? "PASS " : "FAIL ") << r.check << "  " << r.input << "\n";
        if (!r.pass) {
            ++failed;
            os << "     expected: " << r.expected << "\n     computed: " << r.computed << "\n";
        }
    }
    os << results.size() << " checks, " << failed << " failed\n";
    return os.str();
}

}  // namespace satkit
