// tableau-forge: exact counting, generating functions, excited diagrams and
// formula-vs-oracle verification sweeps for skew and shifted skew diagrams.
//
// Exit codes: 0 success, 1 verification failure, 2 usage/config error,
// 3 cap exceeded, 4 engine mismatch.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tforge/config.hpp"
#include "tforge/excited.hpp"
#include "tforge/formulas.hpp"
#include "tforge/oracle.hpp"
#include "tforge/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;
constexpr int kExitMismatch = 4;

using namespace tforge;

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string tok;
    std::istringstream is(s);
    while (std::getline(is, tok, sep)) out.push_back(tok);
    return out;
}

std::vector<std::int64_t> parse_ints(const std::string& csv) {
    std::vector<std::int64_t> out;
    for (const std::string& t : split(csv, ',')) out.push_back(std::stoll(t));
    return out;
}

oracle::Kind parse_kind(const std::string& k) {
    if (k == "ssyt") return oracle::Kind::SSYT;
    if (k == "rst") return oracle::Kind::RST;
    if (k == "rpp") return oracle::Kind::RPP;
    throw InvalidParameters("unknown tableau kind '" + k + "' (want ssyt|rst|rpp)");
}

struct ShapeArgs {
    std::string skew, shifted, family, params;

    bool is_family() const { return !family.empty(); }
    int count_given() const {
        return int(!skew.empty()) + int(!shifted.empty()) + int(!family.empty());
    }
};

formulas::MParams m_params(const std::vector<std::int64_t>& v) {
    if (v.size() != 6) throw InvalidParameters("family m takes 6 parameters n,a,b,c,d,m");
    return {v[0], v[1], v[2], v[3], v[4], v[5]};
}

int cmd_count(const ShapeArgs& shape, const std::string& methods_csv) {
    std::vector<std::string> methods = split(methods_csv, ',');
    if (methods.empty()) throw InvalidParameters("no counting method given");
    std::vector<std::pair<std::string, BigInt>> values;

    for (const std::string& m : methods) {
        BigInt v;
        if (m == "oracle") {
            if (!shape.skew.empty())
                v = oracle::count_syt(SkewShape::parse(shape.skew));
            else if (!shape.shifted.empty())
                v = oracle::count_syt(ShiftedSkewShape::parse(shape.shifted));
            else if (shape.family == "rho") {
                auto p = parse_ints(shape.params);
                if (p.size() != 5) throw InvalidParameters("family rho takes n,a,b,c,d");
                v = oracle::count_syt(build_rho(p[0], p[1], p[2], p[3], p[4]));
            } else if (shape.family == "v") {
                auto p = parse_ints(shape.params);
                if (p.size() != 4) throw InvalidParameters("family v takes n,a,b,m");
                v = oracle::count_syt(build_v(p[0], p[1], p[2], p[3]));
            } else if (shape.family == "m") {
                auto p = m_params(parse_ints(shape.params));
                v = oracle::count_syt(build_m(p.n, p.a, p.b, p.c, p.d, p.m));
            } else {
                throw InvalidParameters("unknown family '" + shape.family + "'");
            }
        } else if (m == "naruse") {
            if (shape.skew.empty() && shape.family != "rho" && shape.family != "m")
                throw InvalidParameters("naruse counting needs an unshifted skew shape");
            SkewShape s;
            if (!shape.skew.empty()) {
                s = SkewShape::parse(shape.skew);
            } else if (shape.family == "rho") {
                auto p = parse_ints(shape.params);
                s = build_rho(p[0], p[1], p[2], p[3], p[4]);
            } else {
                auto p = m_params(parse_ints(shape.params));
                s = build_m(p.n, p.a, p.b, p.c, p.d, p.m);
            }
            v = excited::naruse_count(s);
        } else if (m == "formula") {
            if (shape.family == "rho") {
                auto p = parse_ints(shape.params);
                if (p.size() != 5) throw InvalidParameters("family rho takes n,a,b,c,d");
                v = formulas::f_rho({p[0], p[1], p[2], p[3], p[4]});
            } else if (shape.family == "v") {
                auto p = parse_ints(shape.params);
                if (p.size() != 4) throw InvalidParameters("family v takes n,a,b,m");
                formulas::VParams vp{p[0], p[1], p[2], p[3]};
                v = formulas::g_v_hook(vp);
                BigInt closed = formulas::g_v_closed(vp);
                if (v != closed)
                    throw MismatchError("hook and closed V formulas disagree: " + v.get_str() +
                                        " vs " + closed.get_str());
            } else {
                throw InvalidParameters("--method formula needs --family rho or v");
            }
        } else {
            throw InvalidParameters("unknown method '" + m + "' (want oracle|naruse|formula)");
        }
        values.emplace_back(m, v);
    }

    for (std::size_t i = 1; i < values.size(); ++i) {
        if (values[i].second != values[0].second) {
            std::cerr << "mismatch: " << values[0].first << " gives "
                      << values[0].second.get_str() << " but " << values[i].first << " gives "
                      << values[i].second.get_str() << "\n";
            return kExitMismatch;
        }
    }
    std::cout << values[0].second.get_str() << "\n";
    return kExitOk;
}

int cmd_gf(const ShapeArgs& shape, const std::string& kind_name, std::int64_t trunc,
           std::optional<std::int64_t> max_entry, std::optional<std::int64_t> bounded, bool trace,
           const std::string& fixed_diag, const std::string& engine) {
    oracle::Kind kind = parse_kind(kind_name);

    if (trace) {
        if (shape.family != "m")
            throw InvalidParameters("--trace applies to --family m");
        auto p = m_params(parse_ints(shape.params));
        XQSeries s = engine == "formula" ? formulas::trace_gf_formula(p, trunc)
                                         : oracle::gf_trace(p.n, p.a, p.b, p.c, p.d, p.m, trunc);
        std::cout << s.str() << "\n";
        return kExitOk;
    }

    if (!fixed_diag.empty()) {
        StrictPartition outer = StrictPartition::parse(
            shape.shifted.empty() ? "" : split(shape.shifted, '/')[0]);
        if (outer.length() == 0 && shape.shifted.empty())
            throw InvalidParameters("--fixed-diag needs --shifted outer/");
        std::vector<std::int64_t> rdiag = parse_ints(fixed_diag);
        if (engine == "formula") {
            int n = outer.length();
            Partition lam = outer.staircase_complement();
            Partition diag{std::vector<std::int64_t>(rdiag)};
            std::cout << formulas::fixed_diag_rhs(kind, n, lam, diag, trunc).str() << "\n";
        } else {
            std::cout << oracle::gf_fixed_diag(outer, kind, rdiag, trunc).str() << "\n";
        }
        return kExitOk;
    }

    if (bounded) {
        QSeries s;
        if (engine == "formula") {
            if (shape.family != "m")
                throw InvalidParameters("--engine formula with --bounded applies to --family m");
            auto p = m_params(parse_ints(shape.params));
            if (kind != oracle::Kind::SSYT)
                throw InvalidParameters("the bounded product formula is for ssyt");
            s = formulas::s_m_bounded(p, *bounded);
        } else if (!shape.skew.empty()) {
            s = oracle::bounded_polynomial(SkewShape::parse(shape.skew), kind, *bounded);
        } else if (!shape.shifted.empty()) {
            s = oracle::bounded_polynomial(ShiftedSkewShape::parse(shape.shifted), kind, *bounded);
        } else {
            auto p = m_params(parse_ints(shape.params));
            s = oracle::bounded_polynomial(build_m(p.n, p.a, p.b, p.c, p.d, p.m), kind, *bounded);
        }
        std::cout << s.str() << "\n";
        return kExitOk;
    }

    QSeries s;
    if (engine == "formula") {
        if (shape.family != "m")
            throw InvalidParameters("--engine formula series are available for --family m");
        auto p = m_params(parse_ints(shape.params));
        if (kind != oracle::Kind::SSYT)
            throw InvalidParameters("the product formula series is for ssyt");
        s = formulas::s_m_gf(p, trunc);
    } else if (!shape.skew.empty()) {
        s = oracle::gf_tableaux(SkewShape::parse(shape.skew), kind, trunc, max_entry);
    } else if (!shape.shifted.empty()) {
        s = oracle::gf_tableaux(ShiftedSkewShape::parse(shape.shifted), kind, trunc, max_entry);
    } else if (shape.family == "m") {
        auto p = m_params(parse_ints(shape.params));
        s = oracle::gf_tableaux(build_m(p.n, p.a, p.b, p.c, p.d, p.m), kind, trunc, max_entry);
    } else if (shape.family == "v") {
        auto p = parse_ints(shape.params);
        if (p.size() != 4) throw InvalidParameters("family v takes n,a,b,m");
        s = oracle::gf_tableaux(build_v(p[0], p[1], p[2], p[3]), kind, trunc, max_entry);
    } else if (shape.family == "rho") {
        auto p = parse_ints(shape.params);
        if (p.size() != 5) throw InvalidParameters("family rho takes n,a,b,c,d");
        s = oracle::gf_tableaux(build_rho(p[0], p[1], p[2], p[3], p[4]), kind, trunc, max_entry);
    } else {
        throw InvalidParameters("no shape given");
    }
    std::cout << s.str() << "\n";
    return kExitOk;
}

int cmd_excited(const std::string& skew, bool list) {
    excited::ExcitedFamily fam = excited::excited_diagrams(SkewShape::parse(skew));
    if (list) {
        for (const CellSet& d : fam.diagrams) std::cout << d.str() << "\n";
    } else {
        std::cout << fam.diagrams.size() << "\n";
    }
    return kExitOk;
}

int cmd_verify(verify::SweepConfig cfg) {
    verify::SweepResult res = verify::run_sweep(cfg);
    std::cout << cfg.theorem << ": " << res.passed << " pass, " << res.failed << " fail, "
              << res.skipped << " skipped-cap";
    if (!cfg.output.empty()) std::cout << " -> " << cfg.output;
    std::cout << "\n";
    if (res.failed > 0) {
        for (const verify::Record& r : res.records) {
            if (r.status != "fail") continue;
            std::cerr << "first failure: " << verify::to_json_line(r) << "\n";
            break;
        }
        return kExitVerifyFail;
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact tableau counting, q-series and verification sweeps"};
    app.require_subcommand(1);

    if (const char* cap = std::getenv("TABLEAU_FORGE_CAP")) {
        try {
            config::set_cell_cap(std::stoll(cap));
        } catch (...) {
            std::cerr << "bad TABLEAU_FORGE_CAP value '" << cap << "'\n";
            return kExitUsage;
        }
    }

    ShapeArgs shape;
    auto add_shape_opts = [&shape](CLI::App* cmd, bool families) {
        cmd->add_option("--skew", shape.skew, "skew shape outer/inner, e.g. 4,3,1/2,1");
        cmd->add_option("--shifted", shape.shifted, "shifted skew shape outer/inner");
        if (families) {
            cmd->add_option("--family", shape.family, "shape family: rho, v or m");
            cmd->add_option("--params", shape.params, "family parameters, comma separated");
        }
    };

    // count
    auto* count = app.add_subcommand("count", "count standard Young tableaux");
    std::string methods = "oracle";
    add_shape_opts(count, true);
    count->add_option("--method", methods, "oracle|naruse|formula, comma separated");

    // gf
    auto* gf = app.add_subcommand("gf", "generating functions");
    std::string kind = "ssyt";
    std::int64_t trunc = 8;
    std::optional<std::int64_t> max_entry, bounded;
    bool trace = false;
    std::string fixed_diag, engine = "oracle";
    add_shape_opts(gf, true);
    gf->add_option("--kind", kind, "ssyt|rst|rpp (default ssyt)");
    gf->add_option("--trunc", trunc, "series horizon T (default 8)");
    gf->add_option("--max-entry", max_entry, "cap entries at this value");
    gf->add_option("--bounded", bounded, "full bounded-entry polynomial with this entry bound");
    gf->add_flag("--trace", trace, "bivariate trace generating function (family m)");
    gf->add_option("--fixed-diag", fixed_diag, "pin the shifted diagonal to this rdiag vector");
    gf->add_option("--engine", engine, "formula|oracle (default oracle)");

    // excited
    auto* exc = app.add_subcommand("excited", "excited diagrams of a skew shape");
    std::string exc_skew;
    bool exc_list = false, exc_count = false;
    exc->add_option("--skew", exc_skew, "skew shape outer/inner")->required();
    exc->add_flag("--list", exc_list, "print one diagram per line");
    exc->add_flag("--count", exc_count, "print the number of diagrams");

    // verify
    auto* ver = app.add_subcommand("verify", "formula-vs-oracle sweep");
    std::string theorem, out_path, config_path;
    std::vector<std::string> range_args;
    std::int64_t ver_trunc = 8;
    int jobs = 1;
    ver->add_option("--theorem", theorem, "theorem id (see --list-theorems)");
    ver->add_option("--range", range_args, "parameter range name=lo..hi (repeatable)");
    ver->add_option("--trunc", ver_trunc, "series horizon for series-valued sweeps");
    ver->add_option("--jobs", jobs, "worker threads");
    ver->add_option("--out", out_path, "JSON Lines report path");
    ver->add_option("--config", config_path, "sweep config file (key = value / name = lo..hi)");
    bool list_theorems = false;
    ver->add_flag("--list-theorems", list_theorems, "print the registered theorem ids");

    std::int64_t cap_cells = -1;
    app.add_option("--cap", cap_cells, "override the diagram cell cap");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (cap_cells > 0) config::set_cell_cap(cap_cells);

    try {
        if (count->parsed()) {
            if (shape.count_given() != 1)
                throw InvalidParameters("give exactly one of --skew, --shifted, --family");
            return cmd_count(shape, methods);
        }
        if (gf->parsed()) {
            return cmd_gf(shape, kind, trunc, max_entry, bounded, trace, fixed_diag, engine);
        }
        if (exc->parsed()) {
            return cmd_excited(exc_skew, exc_list && !exc_count);
        }
        if (ver->parsed()) {
            if (list_theorems) {
                for (const auto& id : verify::theorem_ids()) std::cout << id << "\n";
                return kExitOk;
            }
            verify::SweepConfig cfg;
            if (!config_path.empty()) {
                cfg = verify::parse_config_file(config_path);
            } else {
                cfg.theorem = theorem;
                for (const std::string& r : range_args) {
                    auto eq = r.find('=');
                    if (eq == std::string::npos)
                        throw InvalidParameters("range must look like name=lo..hi");
                    verify::Range range;
                    range.name = r.substr(0, eq);
                    std::string v = r.substr(eq + 1);
                    auto dots = v.find("..");
                    if (dots == std::string::npos) {
                        range.lo = range.hi = std::stoll(v);
                    } else {
                        range.lo = std::stoll(v.substr(0, dots));
                        range.hi = std::stoll(v.substr(dots + 2));
                    }
                    cfg.ranges.push_back(range);
                }
                cfg.trunc = ver_trunc;
                cfg.jobs = jobs;
                cfg.output = out_path;
            }
            if (cfg.theorem.empty())
                throw InvalidParameters("verify needs --theorem or --config");
            return cmd_verify(cfg);
        }
    } catch (const CapExceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return kExitCap;
    } catch (const MismatchError& e) {
        std::cerr << "mismatch: " << e.what() << "\n";
        return kExitMismatch;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
