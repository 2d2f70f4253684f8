#include "satkit/cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "satkit/catalog.hpp"
#include "satkit/sphdata.hpp"
#include "satkit/verify.hpp"

namespace satkit::cli {

namespace {

using nlohmann::ordered_json;

std::string vec_str(const LatticeVector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

std::string set_str(const std::set<int>& s) { return subset_str(IndexSet(s.begin(), s.end())); }

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
    return s;
}

void render_datum_text(std::ostream& out, const SphericalDatum& d) {
    out << "  ambient " << d.ambient() << ", lattice rank " << d.lattice_rank() << "\n";
    out << "  spherical roots:";
    if (d.roots().empty()) out << " none";
    out << "\n";
    for (const auto& r : d.roots()) out << "    " << r.name << " = " << vec_str(r.vector) << " on " << set_str(r.support) << "\n";
    out << "  S^p = " << set_str(d.s_p()) << "\n";
    out << "  colors of type a:";
    if (d.colors().empty()) out << " none";
    out << "\n";
    for (const auto& c : d.colors()) out << "    " << c.id << "  J = " << set_str(c.j_set) << "  rho = " << vec_str(c.rho) << "\n";
}

nlohmann::json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
}

// {"rank": r, "spherical_roots": [[...], ...]}
ValuationCone load_cone(const std::string& path) {
    const auto j = read_json_file(path);
    if (!j.is_object()) throw ParseError(path + ": expected an object");
    if (!j.contains("rank") || !j["rank"].is_number_integer()) throw ParseError(path + ": field \"rank\" must be an integer");
    if (!j.contains("spherical_roots") || !j["spherical_roots"].is_array()) {
        throw ParseError(path + ": field \"spherical_roots\" must be an array of integer vectors");
    }
    std::vector<LatticeVector> roots;
    for (std::size_t i = 0; i < j["spherical_roots"].size(); ++i) {
        const auto& v = j["spherical_roots"][i];
        const std::string field = "spherical_roots[" + std::to_string(i) + "]";
        if (!v.is_array()) throw ParseError(path + ": field \"" + field + "\" must be an integer vector");
        LatticeVector lv;
        for (const auto& x : v) {
            if (!x.is_number_integer()) throw ParseError(path + ": field \"" + field + "\" must be an integer vector");
            lv.push_back(x.get<long>());
        }
        roots.push_back(std::move(lv));
    }
    for (const auto& key : j.items()) {
        if (key.key() != "rank" && key.key() != "spherical_roots") throw ParseError(path + ": unknown field \"" + key.key() + "\"");
    }
    return ValuationCone(j["rank"].get<int>(), roots);
}

struct Context {
    std::string format = "text";
    std::string catalog_path;
    bool json() const { return format == "json"; }
    Catalog catalog() const { return Catalog::load(catalog_path.empty() ? Catalog::default_path() : catalog_path); }
};

int cmd_satellites(const Context& ctx, const std::string& datum_path, const std::optional<std::string>& subset,
                   std::ostream& out) {
    const SphericalDatum d = SphericalDatum::load(datum_path);
    std::vector<IndexSet> subsets;
    if (subset) {
        subsets.push_back(d.resolve(*subset));
    } else {
        for (const auto& f : enumerate_faces(d.cone())) subsets.push_back(f.subset);
    }
    if (ctx.json()) {
        if (subset) {
            out << satellite_datum(d, subsets.front()).to_json().dump(2) << "\n";
            return Ok;
        }
        ordered_json arr = ordered_json::array();
        for (const auto& s : subsets) {
            arr.push_back({{"subset", s}, {"roots", d.names_of(s)}, {"datum", satellite_datum(d, s).to_json()}});
        }
        out << ordered_json{{"count", subsets.size()}, {"satellites", arr}}.dump(2) << "\n";
        return Ok;
    }
    if (!subset) out << subsets.size() << " satellites\n";
    for (const auto& s : subsets) {
        out << "I = " << subset_str(s) << " [" << join(d.names_of(s), ", ") << "]\n";
        render_datum_text(out, satellite_datum(d, s));
    }
    return Ok;
}

int cmd_poincare_flag(const Context& ctx, const std::string& type, std::string levi, std::ostream& out) {
    const std::string suffix = "-embedding";
    if (levi.size() > suffix.size() && levi.compare(levi.size() - suffix.size(), suffix.size(), suffix) == 0) {
        levi.erase(levi.size() - suffix.size());
    }
    const RootSystem rs = RootSystem::parse(type);
    const LeviSubset l = LeviSubset::parse(rs, levi);
    const LaurentPoly p = flag_poincare_degrees(rs, l);
    if (ctx.json()) {
        const std::set<int>& idx = l.indices();
        out << ordered_json{{"type", rs.str()}, {"levi", std::vector<int>(idx.begin(), idx.end())}, {"poincare", p.str()}}.dump(2)
            << "\n";
    } else {
        out << p.str() << "\n";
    }
    return Ok;
}

int cmd_poincare_catalog(const Context& ctx, const std::string& id, std::optional<long> n, std::ostream& out) {
    const Catalog cat = ctx.catalog();
    const CatalogEntry e = cat.entry(id, n);
    const LaurentPoly r = ratio_r(e.record.p_gh_empty, e.record.p_gh);
    if (ctx.json()) {
        ordered_json j{{"id", e.id}, {"label", e.record.label}, {"p_gh", e.record.p_gh.str()},
                       {"p_gh_empty", e.record.p_gh_empty.str()}, {"r_empty", r.str()}};
        out << j.dump(2) << "\n";
    } else {
        out << e.record.p_gh.str() << "\n" << e.record.p_gh_empty.str() << "\n" << r.str() << "\n";
    }
    return Ok;
}

int cmd_faces(const Context& ctx, const std::optional<std::string>& cone_path, const std::optional<std::string>& datum_path,
              std::ostream& out) {
    std::optional<SphericalDatum> d;
    std::optional<ValuationCone> cone;
    if (datum_path) {
        d = SphericalDatum::load(*datum_path);
        cone = d->cone();
    } else {
        cone = load_cone(*cone_path);
    }
    const auto faces = enumerate_faces(*cone);
    if (ctx.json()) {
        ordered_json arr = ordered_json::array();
        for (const auto& f : faces) {
            ordered_json item{{"subset", f.subset}};
            if (d) item["roots"] = d->names_of(f.subset);
            item["dimension"] = cone->rank() - static_cast<int>(f.subset.size());
            arr.push_back(item);
        }
        out << ordered_json{{"rank", cone->rank()}, {"spherical_roots", cone->root_count()},
                            {"wonderful", cone->is_wonderful()}, {"faces", arr}}
                   .dump(2)
            << "\n";
        return Ok;
    }
    out << faces.size() << " faces, rank " << cone->rank() << ", " << cone->root_count() << " spherical roots"
        << (cone->is_wonderful() ? ", wonderful" : "") << "\n";
    for (const auto& f : faces) {
        out << "I = " << subset_str(f.subset);
        if (d) out << " [" << join(d->names_of(f.subset), ", ") << "]";
        out << "  dimension " << cone->rank() - static_cast<int>(f.subset.size()) << "\n";
    }
    return Ok;
}

int cmd_verify(const Context& ctx, const std::string& suite, std::optional<long> n, unsigned jobs, std::ostream& out) {
    const Catalog cat = ctx.catalog();
    VerifyOptions opt;
    opt.n = n;
    opt.jobs = jobs ? jobs : std::max(1u, std::thread::hardware_concurrency());
    const auto results = run_suite(suite, cat, opt);
    if (ctx.json()) {
        out << ordered_json{{"suite", suite}, {"pass", all_passed(results)}, {"checks", report_json(results)}}.dump(2) << "\n";
    } else {
        out << report_text(results);
    }
    return all_passed(results) ? Ok : Failure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Satellites of spherical subgroups: data, faces, Poincare polynomials and checks", "satkit"};
    app.fallthrough();
    app.require_subcommand(1);

    Context ctx;
    app.add_option("--format", ctx.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--catalog", ctx.catalog_path, "Catalog file (default: shipped data/catalog.json)");

    std::string datum_path;
    std::optional<std::string> subset;
    auto* sat = app.add_subcommand("satellites", "Satellite data of a homogeneous spherical datum");
    sat->add_option("--datum", datum_path, "Datum JSON file")->required();
    sat->add_option("--I", subset, "Spherical roots by name or position, comma separated");

    auto* poincare = app.add_subcommand("poincare", "Virtual Poincare polynomials");
    poincare->require_subcommand(1);
    std::string type, levi;
    auto* flag = poincare->add_subcommand("flag", "Flag variety G/P for a Levi subset");
    flag->add_option("--type", type, "Root system, e.g. F4 or A1xA2")->required();
    flag->add_option("--levi", levi, "Levi subset: indices \"1,3..4\" or a type such as B3")->required();
    std::string entry_id;
    std::optional<long> entry_n;
    auto* entry = poincare->add_subcommand("catalog", "Catalog entry: p_gh, p_gh_empty and R");
    entry->add_option("id", entry_id, "Catalog id, e.g. table1.row4")->required();
    entry->add_option("--n", entry_n, "Parameter for parameterized entries");

    std::optional<std::string> cone_path, cone_datum;
    auto* faces = app.add_subcommand("faces", "Faces of a valuation cone");
    auto* cone_opt = faces->add_option("--cone", cone_path, "Cone JSON: {\"rank\": r, \"spherical_roots\": [...]}");
    auto* datum_opt = faces->add_option("--datum", cone_datum, "Datum JSON file");
    cone_opt->excludes(datum_opt);
    faces->require_option(1);

    std::string suite;
    std::optional<long> verify_n;
    unsigned jobs = 0;
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(verify_suites()));
    verify->add_option("--n", verify_n, "Parameter value (default: 2..5, or 5 for example71)");
    verify->add_option("--jobs", jobs, "Worker threads (default: all cores)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n";
        const CLI::App* scope = &app;
        for (const CLI::App* sub = &app; sub;) {
            scope = sub;
            const auto used = sub->get_subcommands();
            sub = used.empty() ? nullptr : used.front();
        }
        err << scope->help();
        return Failure;
    }

    try {
        if (*sat) return cmd_satellites(ctx, datum_path, subset, out);
        if (*flag) return cmd_poincare_flag(ctx, type, levi, out);
        if (*entry) return cmd_poincare_catalog(ctx, entry_id, entry_n, out);
        if (*faces) return cmd_faces(ctx, cone_path, cone_datum, out);
        if (*verify) return cmd_verify(ctx, suite, verify_n, jobs, out);
    } catch (const InternalDivisibility& e) {
        err << "internal error: " << e.what() << "\n";
        return Internal;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return Failure;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return Internal;
    }
    err << app.help();
    return Failure;
}

}  // namespace satkit::cli
