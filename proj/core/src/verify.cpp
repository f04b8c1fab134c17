#include "tforge/verify.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <thread>

#include "tforge/excited.hpp"
#include "tforge/formulas.hpp"
#include "tforge/oracle.hpp"

namespace tforge::verify {

namespace {

using Params = std::map<std::string, std::int64_t>;

std::string esc(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

// Partitions with at most n parts, each part <= maxpart, in lexicographic
// order (deterministic grid order for the fixed-diagonal sweeps).
std::vector<Partition> partitions_in_box(int n, std::int64_t maxpart) {
    std::vector<Partition> acc;
    std::vector<std::int64_t> seq;
    auto gen = [&](auto&& self, int slots, std::int64_t hi) -> void {
        acc.emplace_back(Partition(std::vector<std::int64_t>(seq)));
        if (slots == 0) return;
        for (std::int64_t v = hi; v >= 1; --v) {
            seq.push_back(v);
            self(self, slots - 1, v);
            seq.pop_back();
        }
    };
    gen(gen, n, maxpart);
    std::sort(acc.begin(), acc.end());
    acc.erase(std::unique(acc.begin(), acc.end()), acc.end());
    return acc;
}

struct Instance {
    std::vector<std::pair<std::string, std::string>> shown; // serialized params
    std::function<void(Record&)> eval;                      // fills formula/oracle/status
};

void set_values(Record& r, const std::string& f, const std::string& o) {
    r.formula = f;
    r.oracle = o;
    r.status = (f == o) ? "pass" : "fail";
}

std::vector<std::int64_t> padded_parts(const Partition& p, int n) {
    std::vector<std::int64_t> v(std::size_t(n), 0);
    for (int i = 1; i <= n; ++i) v[std::size_t(i - 1)] = p.part(i);
    return v;
}

StrictPartition staircase_plus(const Partition& lam, int n) {
    std::vector<std::int64_t> parts(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) parts[std::size_t(i - 1)] = lam.part(i) + (n + 1 - i);
    return StrictPartition(std::move(parts));
}

struct TheoremDef {
    std::vector<std::string> names;
    // expand one grid point into zero or more instances
    std::function<void(const Params&, std::int64_t trunc, std::vector<Instance>&)> expand;
};

void push_simple(std::vector<Instance>& out,
                 std::vector<std::pair<std::string, std::string>> shown,
                 std::function<void(Record&)> eval) {
    out.push_back(Instance{std::move(shown), std::move(eval)});
}

std::vector<std::pair<std::string, std::string>> show_params(
    const std::vector<std::string>& names, const Params& p) {
    std::vector<std::pair<std::string, std::string>> shown;
    for (const auto& k : names) shown.emplace_back(k, std::to_string(p.at(k)));
    return shown;
}

const std::map<std::string, TheoremDef>& registry() {
    static const std::map<std::string, TheoremDef> defs = [] {
        std::map<std::string, TheoremDef> m;

        m["thm3.1"] = TheoremDef{
            {"n", "a", "b", "c", "d"},
            [](const Params& p, std::int64_t, std::vector<Instance>& out) {
                formulas::RhoParams rp{p.at("n"), p.at("a"), p.at("b"), p.at("c"), p.at("d")};
                if (rp.a < 1 || rp.c < 1) return;
                SkewShape shape;
                try {
                    shape = build_rho(rp.n, rp.a, rp.b, rp.c, rp.d);
                } catch (const InvalidParameters&) {
                    return;
                }
                push_simple(out, show_params({"n", "a", "b", "c", "d"}, p), [rp, shape](Record& r) {
                    set_values(r, formulas::f_rho(rp).get_str(),
                               oracle::count_syt(shape).get_str());
                });
            }};

        m["conj1.1"] = TheoremDef{
            {"a", "n"},
            [](const Params& p, std::int64_t, std::vector<Instance>& out) {
                std::int64_t a = p.at("a"), n = p.at("n");
                if (a < 1) return;
                push_simple(out, show_params({"a", "n"}, p), [a, n](Record& r) {
                    set_values(r, formulas::f_rho_conjecture11(a, n).get_str(),
                               formulas::f_rho({n, a, a, a, a}).get_str());
                });
            }};

        auto v_def = [](bool hook) {
            return TheoremDef{
                {"n", "a", "b", "m"},
                [hook](const Params& p, std::int64_t, std::vector<Instance>& out) {
                    formulas::VParams vp{p.at("n"), p.at("a"), p.at("b"), p.at("m")};
                    if (vp.m < 1) return;
                    push_simple(out, show_params({"n", "a", "b", "m"}, p), [vp, hook](Record& r) {
                        BigInt f = hook ? formulas::g_v_hook(vp) : formulas::g_v_closed(vp);
                        set_values(r, f.get_str(),
                                   oracle::count_syt(build_v(vp.n, vp.a, vp.b, vp.m)).get_str());
                    });
                }};
        };
        m["thm4.1-hook"] = v_def(true);
        m["thm4.1-closed"] = v_def(false);

        m["thm5.1"] = TheoremDef{
            {"n", "a", "b", "c", "d", "N"},
            [](const Params& p, std::int64_t, std::vector<Instance>& out) {
                formulas::MParams mp{p.at("n"), p.at("a"), p.at("b"), p.at("c"), p.at("d"), 1};
                std::int64_t N = p.at("N");
                if (N < 0) return;
                push_simple(out, show_params({"n", "a", "b", "c", "d", "N"}, p),
                            [mp, N](Record& r) {
                                QSeries f = formulas::s_m_bounded(mp, N);
                                QSeries o = oracle::bounded_polynomial(
                                    build_m(mp.n, mp.a, mp.b, mp.c, mp.d, 1), oracle::Kind::SSYT,
                                    N);
                                set_values(r, f.str(), o.str());
                            });
            }};

        m["mpp4.2"] = TheoremDef{
            {"n", "a", "b", "c", "d", "m"},
            [](const Params& p, std::int64_t T, std::vector<Instance>& out) {
                formulas::MParams mp{p.at("n"), p.at("a"), p.at("b"),
                                     p.at("c"), p.at("d"), p.at("m")};
                if (mp.m < 1) return;
                push_simple(out, show_params({"n", "a", "b", "c", "d", "m"}, p),
                            [mp, T](Record& r) {
                                QSeries f = formulas::s_m_gf(mp, T);
                                QSeries o = oracle::gf_tableaux(
                                    build_m(mp.n, mp.a, mp.b, mp.c, mp.d, mp.m),
                                    oracle::Kind::SSYT, T);
                                set_values(r, f.str(), o.str());
                            });
            }};

        m["thm6.1"] = TheoremDef{
            {"n", "a", "b", "c", "d", "m"},
            [](const Params& p, std::int64_t T, std::vector<Instance>& out) {
                formulas::MParams mp{p.at("n"), p.at("a"), p.at("b"),
                                     p.at("c"), p.at("d"), p.at("m")};
                if (mp.m < 1) return;
                push_simple(out, show_params({"n", "a", "b", "c", "d", "m"}, p),
                            [mp, T](Record& r) {
                                XQSeries f = formulas::trace_gf_formula(mp, T);
                                XQSeries o = oracle::gf_trace(mp.n, mp.a, mp.b, mp.c, mp.d, mp.m, T);
                                if (!f.at_x1().equal_through(formulas::s_m_gf(mp, T), T)) {
                                    r.formula = f.str();
                                    r.oracle = o.str();
                                    r.status = "fail";
                                    r.note = "x=1 specialization disagrees with the plain product";
                                    return;
                                }
                                set_values(r, f.str(), o.str());
                            });
            }};

        auto diag_def = [](oracle::Kind kind) {
            return TheoremDef{
                {"n", "lampart", "diagpart"},
                [kind](const Params& p, std::int64_t T, std::vector<Instance>& out) {
                    int n = int(p.at("n"));
                    if (n < 1) return;
                    for (const Partition& lam : partitions_in_box(n, p.at("lampart")))
                        for (const Partition& diag : partitions_in_box(n, p.at("diagpart"))) {
                            std::vector<std::pair<std::string, std::string>> shown{
                                {"n", std::to_string(n)},
                                {"lam", lam.str()},
                                {"diag", diag.str()}};
                            push_simple(out, std::move(shown), [kind, n, lam, diag, T](Record& r) {
                                QSeries f = formulas::fixed_diag_rhs(kind, n, lam, diag, T);
                                QSeries o = oracle::gf_fixed_diag(
                                    staircase_plus(lam, n), kind, padded_parts(diag, n), T);
                                set_values(r, f.str(), o.str());
                            });
                        }
                }};
        };
        m["thm2.3"] = diag_def(oracle::Kind::RPP);
        m["cor2.4-ssyt"] = diag_def(oracle::Kind::SSYT);
        m["cor2.4-rst"] = diag_def(oracle::Kind::RST);

        m["macmahon"] = TheoremDef{
            {"a", "b", "c"},
            [](const Params& p, std::int64_t, std::vector<Instance>& out) {
                std::int64_t a = p.at("a"), b = p.at("b"), c = p.at("c");
                push_simple(out, show_params({"a", "b", "c"}, p), [a, b, c](Record& r) {
                    QSeries f = formulas::macmahon_box(a, b, c).to_polynomial();
                    QSeries o = oracle::count_box_rpp(a, b, c);
                    set_values(r, f.str(), o.str());
                });
            }};

        return m;
    }();
    return defs;
}

} // namespace

const std::vector<std::string>& theorem_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (const auto& [k, def] : registry()) v.push_back(k);
        return v;
    }();
    return ids;
}

std::vector<std::string> param_names(const std::string& theorem) {
    auto it = registry().find(theorem);
    if (it == registry().end())
        throw InvalidParameters("unknown theorem id '" + theorem + "'");
    return it->second.names;
}

SweepResult run_sweep(const SweepConfig& config) {
    auto it = registry().find(config.theorem);
    if (it == registry().end())
        throw InvalidParameters("unknown theorem id '" + config.theorem + "'");
    const TheoremDef& def = it->second;

    std::map<std::string, Range> by_name;
    for (const Range& r : config.ranges) {
        if (std::find(def.names.begin(), def.names.end(), r.name) == def.names.end())
            throw InvalidParameters("theorem " + config.theorem + " has no parameter '" + r.name +
                                    "'");
        if (r.hi < r.lo) throw InvalidParameters("empty range for '" + r.name + "'");
        by_name[r.name] = r;
    }
    for (const std::string& name : def.names)
        if (!by_name.count(name))
            throw InvalidParameters("missing range for parameter '" + name + "'");

    // Expand the grid in canonical (row-major) order.
    std::vector<Instance> instances;
    Params point;
    auto walk = [&](auto&& self, std::size_t k) -> void {
        if (k == def.names.size()) {
            def.expand(point, config.trunc, instances);
            return;
        }
        const Range& r = by_name[def.names[k]];
        for (std::int64_t v = r.lo; v <= r.hi; ++v) {
            point[def.names[k]] = v;
            self(self, k + 1);
        }
    };
    walk(walk, 0);

    SweepResult result;
    result.records.assign(instances.size(), Record{});
    std::atomic<std::size_t> next{0};
    int jobs = std::max(1, config.jobs);
    auto worker = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= instances.size()) break;
            Record& rec = result.records[i];
            rec.theorem = config.theorem;
            rec.params = instances[i].shown;
            try {
                instances[i].eval(rec);
            } catch (const CapExceeded& e) {
                rec.status = "skipped-cap";
                rec.note = e.what();
            } catch (const std::exception& e) {
                rec.status = "fail";
                rec.note = e.what();
            }
        }
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    for (const Record& r : result.records) {
        if (r.status == "pass")
            ++result.passed;
        else if (r.status == "skipped-cap")
            ++result.skipped;
        else
            ++result.failed;
    }

    if (!config.output.empty()) {
        std::ofstream out(config.output, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open report file " + config.output);
        for (const Record& r : result.records) out << to_json_line(r) << "\n";
    }
    return result;
}

std::string to_json_line(const Record& r) {
    std::ostringstream os;
    os << "{\"theorem\":\"" << esc(r.theorem) << "\",\"params\":{";
    for (std::size_t i = 0; i < r.params.size(); ++i) {
        if (i) os << ",";
        os << "\"" << esc(r.params[i].first) << "\":\"" << esc(r.params[i].second) << "\"";
    }
    os << "},\"formula\":\"" << esc(r.formula) << "\",\"oracle\":\"" << esc(r.oracle)
       << "\",\"status\":\"" << esc(r.status) << "\"";
    if (!r.note.empty()) os << ",\"note\":\"" << esc(r.note) << "\"";
    os << "}";
    return os.str();
}

SweepConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidParameters("cannot open config file " + path);
    SweepConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto trim = [](std::string s) {
            auto b = s.find_first_not_of(" \t\r");
            auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        std::string t = trim(line);
        if (t.empty()) continue;
        auto eq = t.find('=');
        if (eq == std::string::npos)
            throw InvalidParameters("config line " + std::to_string(lineno) + ": expected key = value");
        std::string key = trim(t.substr(0, eq));
        std::string value = trim(t.substr(eq + 1));
        if (key == "theorem") {
            cfg.theorem = value;
        } else if (key == "trunc") {
            cfg.trunc = std::stoll(value);
        } else if (key == "jobs") {
            cfg.jobs = int(std::stoll(value));
        } else if (key == "output") {
            cfg.output = value;
        } else {
            auto dots = value.find("..");
            Range r;
            r.name = key;
            if (dots == std::string::npos) {
                r.lo = r.hi = std::stoll(value);
            } else {
                r.lo = std::stoll(value.substr(0, dots));
                r.hi = std::stoll(value.substr(dots + 2));
            }
            cfg.ranges.push_back(r);
        }
    }
    if (cfg.theorem.empty()) throw InvalidParameters("config file missing 'theorem'");
    return cfg;
}

} // namespace tforge::verify
