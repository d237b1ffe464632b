// hnlab: command line front end. Every subcommand reads its arguments from
// flags, falling back to the same keys in a JSON document given by --in or on
// stdin, and prints JSON (SVG or CSV where asked).

#include "hnlab/io.hpp"
#include "hnlab/shadow.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>

using namespace hnlab;
using namespace hnlab::io;
namespace fs = std::filesystem;

namespace {

std::string slurp(std::istream& in) {
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

json parse_text(const std::string& text) { return json::parse(text); }

// A flag value is a path to a JSON file, inline JSON, or a bare string.
json arg_json(const std::string& v) {
    if (!v.empty() && fs::is_regular_file(v)) {
        std::ifstream f(v);
        return parse_text(slurp(f));
    }
    json j = json::parse(v, nullptr, false);
    if (!j.is_discarded()) return j;
    return json(v);
}

struct Input {
    std::string in_path;
    std::optional<json> doc;

    const json& document() {
        if (!doc) {
            if (!in_path.empty()) {
                std::ifstream f(in_path);
                if (!f) throw SchemaError("cannot read " + in_path);
                doc = parse_text(slurp(f));
            } else {
                doc = parse_text(slurp(std::cin));
            }
        }
        return *doc;
    }

    json get(const std::string& flag, const char* key) {
        if (!flag.empty()) return arg_json(flag);
        return field(document(), key);
    }

    std::optional<json> maybe(const std::string& flag, const char* key) {
        if (!flag.empty()) return arg_json(flag);
        if (in_path.empty() && !doc) return std::nullopt;
        const json& d = document();
        if (d.is_object() && d.contains(key)) return d.at(key);
        return std::nullopt;
    }
};

FormalObject to_object(const json& j) {
    if (j.is_string()) {
        std::string name = j.get<std::string>();
        if (name.size() > 5 && name.ends_with(".json")) name.resize(name.size() - 5);
        return catalog_object(fs::path(name).filename().string());
    }
    return object_from(j);
}

StabilityCondition to_condition(const json& j) {
    if (j.is_string() && j.get<std::string>() == "standard") return StabilityCondition::standard();
    return {glplus_from(j)};
}

Int env_bound() {
    const char* v = std::getenv("HNLAB_BOUND");
    if (!v || !*v) return 10000;
    Int b = int_from(json(std::string(v)));
    if (b <= 0) throw DomainError("HNLAB_BOUND must be positive");
    return b;
}

std::size_t to_size(const Int& v, const char* what) {
    if (v <= 0 || v > 100000) throw DomainError(std::string(what) + " out of range");
    return static_cast<std::size_t>(v);
}

json charges(const std::vector<Charge>& cs) {
    json a = json::array();
    for (const auto& c : cs) a.push_back(to_json(c));
    return a;
}

json verdict_json(const HomVerdict& v) { return {{"verdict", to_string(v.kind)}, {"rule", v.rule}}; }

std::string scan_csv(const ScanGrid& g) {
    std::ostringstream o;
    o << "b\\a";
    for (const auto& a : g.as) o << "," << to_string(a);
    o << "\n";
    for (std::size_t j = 0; j < g.bs.size(); ++j) {
        o << to_string(g.bs[j]);
        for (auto s : g.rows[j]) o << "," << to_string(s);
        o << "\n";
    }
    return o.str();
}

json scan_json(const ScanGrid& g) {
    json as = json::array(), bs = json::array(), rows = json::array();
    for (const auto& a : g.as) as.push_back(to_json(a));
    for (const auto& b : g.bs) bs.push_back(to_json(b));
    for (const auto& r : g.rows) {
        json row = json::array();
        for (auto s : r) row.push_back(to_string(s));
        rows.push_back(row);
    }
    return {{"a", as}, {"b", bs}, {"rows", rows}};
}

struct Output {
    std::string path;

    void text(const std::string& s) const {
        if (path.empty()) {
            std::cout << s;
        } else {
            std::ofstream f(path);
            if (!f) throw DomainError("cannot write " + path);
            f << s;
        }
    }
    void emit(const json& j) const { text(j.dump() + "\n"); }
};

int fail(int code, const std::string& kind, const std::string& message) {
    std::cout << json{{"error", kind}, {"message", message}, {"exit", code}}.dump() << "\n";
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations with stability data on a Weierstrass cubic"};
    app.require_subcommand(1);
    app.fallthrough();
    Input input;
    Output out;
    app.add_option("--in", input.in_path, "JSON input document (default: stdin)");
    app.add_option("--out", out.path, "write the result here instead of stdout");

    std::string charge_s, word_s, phase_s, object_s, x_s, y_s, shift_s, phases_s, t_s, cut_s, seed_s, length_s;
    std::string c_s, c1_s, c2_s, obj_s, step_s = "1/2", amax_s = "3", bmax_s = "3", format_s = "json", dir_s;
    bool all_rules = false;
    unsigned long long scan_seed = 0;

    auto* reduce = app.add_subcommand("reduce", "Euclidean reduction of a charge to a torsion class");
    reduce->add_option("--charge", charge_s, "[rk, deg]");

    auto* act = app.add_subcommand("act", "apply an auto-equivalence to a charge, phase or object");
    act->add_option("--g,--word", word_s, "word such as \"TK TO TK\" or {matrix, anchor}");
    act->add_option("--charge", charge_s);
    act->add_option("--phase", phase_s);
    act->add_option("--object", object_s);

    auto* phase = app.add_subcommand("phase", "phase, slope and mass of a charge");
    phase->add_option("--charge", charge_s);
    phase->add_option("--shift", shift_s);

    auto* hom = app.add_subcommand("hom", "Hom(X, Y) vanishing verdict");
    hom->add_option("--x", x_s, "object JSON, file or catalog name");
    hom->add_option("--y", y_s);
    hom->add_flag("--all", all_rules, "list every applicable rule");

    auto* spherical = app.add_subcommand("spherical", "is the object spherical");
    spherical->add_option("--x", x_s);

    auto* connect = app.add_subcommand("connect", "word carrying one spherical object to another");
    connect->add_option("--x", x_s);
    connect->add_option("--y", y_s);

    auto* sd = app.add_subcommand("sd", "S(d) ledger for increasing phases in (0,1)");
    sd->add_option("--phases", phases_s, "JSON array of phases");

    auto* tstruct = app.add_subcommand("tstruct", "t-structures");
    tstruct->require_subcommand(1);
    auto* member = tstruct->add_subcommand("member", "aisle / coaisle / heart membership");
    auto* trunc = tstruct->add_subcommand("truncate", "truncation triangle");
    auto* noeth = tstruct->add_subcommand("noetherian", "is the heart Noetherian");
    auto* witness = tstruct->add_subcommand("witness", "non-Noetherian witness chain");
    auto* epichain = tstruct->add_subcommand("epichain", "chain of epimorphisms in an irrational heart");
    for (auto* s : {member, trunc, noeth, witness}) s->add_option("--t", t_s, "{cut, minus}");
    for (auto* s : {member, trunc}) s->add_option("--x", x_s);
    witness->add_option("--length", length_s);
    epichain->add_option("--cut", cut_s, "{surd:[a,b,c,D], strip}");
    epichain->add_option("--seed", seed_s, "[rk, deg]");
    epichain->add_option("--length", length_s);

    auto* stab = app.add_subcommand("stab", "stability conditions");
    stab->require_subcommand(1);
    auto* solve = stab->add_subcommand("solve", "the translate carrying c1 to c2");
    solve->add_option("--c1", c1_s);
    solve->add_option("--c2", c2_s);
    auto* canon = stab->add_subcommand("canon", "canonical representative modulo auto-equivalences");
    canon->add_option("--c", c_s);
    auto* slice = stab->add_subcommand("slice", "standard phase of a slice");
    slice->add_option("--c", c_s);
    slice->add_option("--phase", phase_s);

    auto* wallsc = app.add_subcommand("walls", "walls of a declared object on the two-component cycle");
    wallsc->add_option("--obj", obj_s);

    auto* scan = app.add_subcommand("scan", "stability verdicts on a grid of (a, b)");
    scan->add_option("--obj", obj_s);
    scan->add_option("--step", step_s);
    scan->add_option("--amax", amax_s);
    scan->add_option("--bmax", bmax_s);
    scan->add_option("--format", format_s)->check(CLI::IsMember({"json", "csv"}));
    scan->add_option("--seed", scan_seed, "row evaluation order");

    auto* shadow = app.add_subcommand("shadow", "SVG picture of an object's shadow");
    shadow->add_option("--x", x_s);
    std::string title;
    shadow->add_option("--title", title);

    auto* cat = app.add_subcommand("catalog", "named example objects");
    cat->add_option("--dir", dir_s, "also write one JSON file per object here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        return fail(2, "usage", e.what());
    }

    try {
        if (*reduce) {
            Charge c = charge_from(input.get(charge_s, "charge"));
            auto r = reduce_to_torsion(c);
            out.emit({{"charge", to_json(c)},
                      {"word", to_json(r.word)},
                      {"result", to_json(r.result)},
                      {"syllables", r.word.syllables()}});
        } else if (*act) {
            AutoEq g = autoeq_from(input.get(word_s, "g"));
            json res{{"g", to_json(g)}};
            bool any = false;
            if (auto c = input.maybe(charge_s, "charge")) {
                res["charge"] = to_json(apply_to_charge(g, charge_from(*c)));
                any = true;
            }
            if (auto p = input.maybe(phase_s, "phase")) {
                res["phase"] = to_json(lift_phase(g, phase_from(*p)));
                any = true;
            }
            if (auto o = input.maybe(object_s, "object")) {
                res["object"] = to_json(apply_autoeq(g, to_object(*o)));
                any = true;
            }
            if (!any) throw SchemaError("act needs a charge, phase or object");
            out.emit(res);
        } else if (*phase) {
            Charge c = charge_from(input.get(charge_s, "charge"));
            if (c.is_zero()) throw DomainError("zero charge has no phase");
            Int n = 0;
            if (auto s = input.maybe(shift_s, "shift")) n = int_from(*s);
            Slope m = slope(c);
            out.emit({{"charge", to_json(c)},
                      {"central_charge", to_json(central_charge(c))},
                      {"phase", to_json(reduced_phase(c).plus(n))},
                      {"slope", m.str()},
                      {"mass_squared", to_json(mass_squared(c))}});
        } else if (*hom) {
            FormalObject x = to_object(input.get(x_s, "x")), y = to_object(input.get(y_s, "y"));
            json res = verdict_json(hom_verdict(x, y));
            if (all_rules) {
                json a = json::array();
                for (const auto& v : hom_rules(x, y)) a.push_back(verdict_json(v));
                res["applicable"] = a;
            }
            out.emit(res);
        } else if (*spherical) {
            auto v = is_spherical(to_object(input.get(x_s, "x")));
            out.emit({{"spherical", v.spherical}, {"reason", v.reason}, {"rule", "Prop 4.10"}});
        } else if (*connect) {
            FormalObject a = to_object(input.get(x_s, "x")), b = to_object(input.get(y_s, "y"));
            auto c = spherical_connect(a, b);
            json res{{"word", to_json(c.word)},
                     {"image_phase", to_json(apply_to_phase(c.word, a.pieces.front().phase))},
                     {"image_charge", to_json(apply_to_charge(c.word, total_charge(a)))},
                     {"relabel", nullptr},
                     {"rule", "Prop 4.2"}};
            if (c.relabel) res["relabel"] = json::array({c.relabel->first, c.relabel->second});
            out.emit(res);
        } else if (*sd) {
            json ps = input.get(phases_s, "phases");
            if (!ps.is_array()) throw SchemaError("phases must be an array");
            std::vector<Phase> phases;
            for (const auto& p : ps) phases.push_back(phase_from(p));
            SdChain s = sd_chain(phases);
            json d0 = json::array();
            for (const auto& v : s.d0) d0.push_back(to_json(v));
            out.emit({{"d0", d0},
                      {"charge", to_json(sd_charge(s.d0))},
                      {"ledger", to_json(s.ledger)},
                      {"type", to_string(classify_type(s.ledger))},
                      {"stability_unverified", s.stability_unverified}});
        } else if (*member) {
            TStructure t = tstructure_from(input.get(t_s, "t"));
            Membership m = membership(t, to_object(input.get(x_s, "x")));
            out.emit({{"leq0", m.leq0}, {"geq1", m.geq1}, {"heart", m.heart}, {"rule", "Prop 5.1"}});
        } else if (*trunc) {
            TStructure t = tstructure_from(input.get(t_s, "t"));
            Truncation tr = truncate(t, to_object(input.get(x_s, "x")));
            out.emit({{"a", to_json(tr.a)}, {"b", to_json(tr.b)}, {"rule", "Prop 5.1"}});
        } else if (*noeth) {
            TStructure t = tstructure_from(input.get(t_s, "t"));
            out.emit({{"noetherian", is_noetherian(t)}, {"rule", "Lemma 5.3"}});
        } else if (*witness) {
            TStructure t = tstructure_from(input.get(t_s, "t"));
            Int len = 4;
            if (auto l = input.maybe(length_s, "length")) len = int_from(*l);
            WitnessChain w = non_noetherian_witness(t, to_size(len, "length"), env_bound());
            out.emit({{"kind", to_string(w.kind)},
                      {"charges", charges(w.charges)},
                      {"normalized", charges(w.normalized)},
                      {"kernels", charges(w.kernels)},
                      {"kernel", w.kernel},
                      {"normalizer", to_json(w.normalizer)},
                      {"rule", "Lemma 5.3"}});
        } else if (*epichain) {
            PhaseCut cut = cut_from(input.get(cut_s, "cut"));
            auto s = std::get_if<SurdCut>(&cut);
            if (!s) throw DomainError("epichain needs an irrational cut");
            Charge seed{1, 0};
            if (auto j = input.maybe(seed_s, "seed")) seed = charge_from(*j);
            Int len = 10;
            if (auto l = input.maybe(length_s, "length")) len = int_from(*l);
            auto chain = epi_chain(seed, *s, to_size(len, "length"), env_bound());
            out.emit({{"chain", charges(chain)}, {"rule", "Lemma 5.3"}});
        } else if (*solve) {
            StabilityCondition a = to_condition(input.get(c1_s, "c1")), b = to_condition(input.get(c2_s, "c2"));
            out.emit({{"g", to_json(solve_transitivity(a, b))}, {"rule", "Prop 5.10"}});
        } else if (*canon) {
            auto c = canonical_form(to_condition(input.get(c_s, "c")));
            out.emit({{"tau", to_json(c.tau)}, {"scale", to_json(c.scale)}, {"reducer", to_json(c.reducer)}});
        } else if (*slice) {
            StabilityCondition s = to_condition(input.get(c_s, "c"));
            Phase t = phase_from(input.get(phase_s, "phase"));
            out.emit({{"phase", to_json(t)}, {"standard_phase", to_json(slicing_phase(s, t))}});
        } else if (*wallsc) {
            json a = json::array();
            for (const auto& w : walls(declared_from(input.get(obj_s, "obj")))) a.push_back(to_json(w));
            out.emit(a);
        } else if (*scan) {
            DeclaredObject o = declared_from(input.get(obj_s, "obj"));
            Rational step = rational_from(arg_json(step_s)), amax = rational_from(arg_json(amax_s)),
                     bmax = rational_from(arg_json(bmax_s));
            ScanGrid probe = wall_scan(DeclaredObject{{0, 1, 0}, {}}, step, amax, bmax);
            std::vector<std::size_t> order(probe.bs.size());
            std::iota(order.begin(), order.end(), 0);
            std::mt19937_64 rng(scan_seed);
            std::shuffle(order.begin(), order.end(), rng);
            ScanGrid g = wall_scan(o, step, amax, bmax, order);
            if (format_s == "csv")
                out.text(scan_csv(g));
            else
                out.emit(scan_json(g));
        } else if (*shadow) {
            out.text(shadow_svg(to_object(input.get(x_s, "x")), title));
        } else if (*cat) {
            json all = json::object();
            for (const auto& [name, x] : catalog()) all[name] = to_json(x);
            if (!dir_s.empty()) {
                fs::create_directories(dir_s);
                for (const auto& [name, x] : catalog()) {
                    std::ofstream f(fs::path(dir_s) / (name + ".json"));
                    f << to_json(x).dump(2) << "\n";
                }
            }
            out.emit(all);
        }
    } catch (const json::exception& e) {
        return fail(2, "malformed_json", e.what());
    } catch (const SchemaError& e) {
        return fail(2, "schema", e.what());
    } catch (const DomainError& e) {
        return fail(3, "domain", e.what());
    } catch (const std::exception& e) {
        return fail(1, "internal", e.what());
    }
    return 0;
}
