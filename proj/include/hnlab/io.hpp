#pragma once

// JSON encodings. Integers are written as numbers when they fit in 64 bits
// and as decimal strings otherwise; rationals are "p/q" strings.

#include "hnlab/autoeq.hpp"
#include "hnlab/multicurve.hpp"
#include "hnlab/objects.hpp"
#include "hnlab/stabcond.hpp"
#include "hnlab/tstruct.hpp"

#include <json.hpp>

#include <cstdint>
#include <limits>
#include <string>

namespace hnlab::io {

using json = nlohmann::ordered_json;

// Structural problems in otherwise well-formed JSON.
class SchemaError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline json to_json(const Int& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return v.str();
}

inline Int int_from(const json& j) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_number_unsigned()) return Int(j.get<std::uint64_t>());
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>());
        } catch (const std::runtime_error&) {
        }
    }
    throw SchemaError("expected an integer, got " + j.dump());
}

inline json to_json(const Rational& r) { return to_string(r); }

inline Rational rational_from(const json& j) {
    if (j.is_number_integer() || j.is_number_unsigned()) return Rational(int_from(j));
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw SchemaError("expected a rational \"p/q\", got " + j.dump());
}

inline const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw SchemaError(std::string("missing field '") + key + "'");
    return j.at(key);
}

inline json to_json(const Charge& c) { return json::array({to_json(c.rk), to_json(c.deg)}); }

inline Charge charge_from(const json& j) {
    if (!j.is_array() || j.size() != 2) throw SchemaError("expected a charge [rk, deg], got " + j.dump());
    return {int_from(j[0]), int_from(j[1])};
}

inline json to_json(const PlaneVector& v) { return json::array({to_json(v.x), to_json(v.y)}); }

inline json to_json(const Phase& p) {
    return {{"dir", to_json(p.dir())}, {"shift", to_json(p.shift())}, {"approx", p.approx()}};
}

// "3/4", 1, {"dir":[x,y],"shift":n} or {"charge":[rk,deg],"shift":n}.
inline Phase phase_from(const json& j) {
    if (j.is_string() || j.is_number_integer()) {
        Rational q = 4 * rational_from(j);
        if (denominator(q) != 1) throw DomainError("phase " + j.dump() + " has no lattice ray");
        return Phase::quarter(numerator(q));
    }
    if (!j.is_object()) throw SchemaError("expected a phase, got " + j.dump());
    Int shift = j.contains("shift") ? int_from(j.at("shift")) : Int(0);
    if (j.contains("charge")) return reduced_phase(charge_from(j.at("charge"))).plus(shift);
    const json& d = field(j, "dir");
    if (!d.is_array() || d.size() != 2) throw SchemaError("phase dir must be [x, y]");
    return Phase({int_from(d[0]), int_from(d[1])}, shift);
}

inline json to_json(const StableLabel& l) { return l.is_extreme() ? json("extreme") : json("smooth:" + l.id); }

inline json to_json(const FormalObject& x) {
    json pieces = json::array();
    for (const auto& p : x.pieces) {
        json jh = json::array();
        for (const auto& e : p.jh) {
            if (e.label.is_extreme())
                jh.push_back(json::array({"extreme", to_json(e.count)}));
            else
                jh.push_back(json::array({"smooth", e.label.id, to_json(e.count)}));
        }
        pieces.push_back({{"phase", to_json(p.phase)}, {"jh", jh}, {"perfect", p.perfect}, {"charge", to_json(p.charge())}});
    }
    json out{{"pieces", pieces}};
    if (x.indecomposable) out["indecomposable"] = *x.indecomposable;
    if (x.perfect) out["perfect"] = *x.perfect;
    return out;
}

inline FormalObject object_from(const json& j) {
    FormalObject x;
    const json& pieces = field(j, "pieces");
    if (!pieces.is_array()) throw SchemaError("'pieces' must be an array");
    for (const auto& pj : pieces) {
        SemistablePiece p;
        p.phase = phase_from(field(pj, "phase"));
        const json& jh = field(pj, "jh");
        if (!jh.is_array()) throw SchemaError("'jh' must be an array");
        for (const auto& e : jh) {
            if (!e.is_array() || e.empty() || !e[0].is_string()) throw SchemaError("bad JH entry " + e.dump());
            std::string kind = e[0].get<std::string>();
            if (kind == "extreme" && e.size() == 2) {
                p.jh.push_back({StableLabel::extreme(), int_from(e[1])});
            } else if (kind == "smooth" && e.size() == 3 && e[1].is_string()) {
                p.jh.push_back({StableLabel::smooth(e[1].get<std::string>()), int_from(e[2])});
            } else {
                throw SchemaError("bad JH entry " + e.dump());
            }
        }
        p.perfect = pj.contains("perfect") ? pj.at("perfect").get<bool>() : p.has_smooth();
        x.pieces.push_back(std::move(p));
    }
    if (j.contains("indecomposable")) x.indecomposable = j.at("indecomposable").get<bool>();
    if (j.contains("perfect")) x.perfect = j.at("perfect").get<bool>();
    validate(x);
    return x;
}

inline json to_json(const GenWord& w) { return w.str(); }

inline json to_json(const IntMatrix2& m) {
    return json::array({json::array({to_json(m.a), to_json(m.b)}), json::array({to_json(m.c), to_json(m.d)})});
}

inline IntMatrix2 int_matrix_from(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_array() || !j[1].is_array() || j[0].size() != 2 || j[1].size() != 2)
        throw SchemaError("expected a 2x2 matrix");
    return {int_from(j[0][0]), int_from(j[0][1]), int_from(j[1][0]), int_from(j[1][1])};
}

inline json to_json(const AutoEq& g) { return {{"matrix", to_json(g.matrix())}, {"anchor", to_json(g.anchor())}}; }

// {"word":"TO tk"} or {"matrix":[[..],[..]],"anchor":phase}; a bare string is a word.
inline AutoEq autoeq_from(const json& j) {
    if (j.is_string()) return normal_form(GenWord::parse(j.get<std::string>()));
    if (j.contains("word")) return normal_form(GenWord::parse(field(j, "word").get<std::string>()));
    return AutoEq(int_matrix_from(field(j, "matrix")), phase_from(field(j, "anchor")));
}

inline json to_json(const QuadSurd& s) {
    return json::array({to_json(s.a), to_json(s.b), to_json(s.c), to_json(s.D)});
}

inline json to_json(const PhaseCut& cut) {
    if (auto r = std::get_if<RationalCut>(&cut)) return {{"phase", to_json(r->phase)}};
    const auto& s = std::get<SurdCut>(cut);
    return {{"surd", to_json(s.slope)}, {"strip", to_json(s.strip)}, {"approx", static_cast<double>(s.approx())}};
}

// {"phase":...} or {"surd":[a,b,c,D],"strip":n}; anything else is read as a phase.
inline PhaseCut cut_from(const json& j) {
    if (j.is_object() && j.contains("surd")) {
        const json& s = j.at("surd");
        if (!s.is_array() || s.size() != 4) throw SchemaError("surd must be [a, b, c, D]");
        Int strip = j.contains("strip") ? int_from(j.at("strip")) : Int(0);
        return SurdCut{QuadSurd(int_from(s[0]), int_from(s[1]), int_from(s[2]), int_from(s[3])), strip};
    }
    if (j.is_object() && j.contains("phase")) return RationalCut{phase_from(j.at("phase"))};
    return RationalCut{phase_from(j)};
}

inline json to_json(const StableSubsetSpec& s) {
    json smooth;
    json ids = json::array();
    for (const auto& id : s.ids) ids.push_back(id);
    switch (s.smooth) {
        case StableSubsetSpec::Smooth::None: smooth = "none"; break;
        case StableSubsetSpec::Smooth::All: smooth = "all"; break;
        case StableSubsetSpec::Smooth::Only: smooth = {{"only", ids}}; break;
        case StableSubsetSpec::Smooth::AllExcept: smooth = {{"all_except", ids}}; break;
    }
    return {{"extreme", s.extreme}, {"smooth", smooth}};
}

inline StableSubsetSpec subset_from(const json& j) {
    StableSubsetSpec s;
    if (!j.is_object()) throw SchemaError("expected a stable subset object");
    if (j.contains("extreme")) s.extreme = j.at("extreme").get<bool>();
    if (!j.contains("smooth")) return s;
    const json& sm = j.at("smooth");
    auto read_ids = [&](const json& a) {
        if (!a.is_array()) throw SchemaError("smooth id list must be an array");
        for (const auto& id : a) s.ids.insert(id.get<std::string>());
    };
    if (sm.is_string()) {
        std::string v = sm.get<std::string>();
        if (v == "none") s.smooth = StableSubsetSpec::Smooth::None;
        else if (v == "all") s.smooth = StableSubsetSpec::Smooth::All;
        else throw SchemaError("smooth must be none, all, {only:[..]} or {all_except:[..]}");
    } else if (sm.is_object() && sm.contains("only")) {
        s.smooth = StableSubsetSpec::Smooth::Only;
        read_ids(sm.at("only"));
    } else if (sm.is_object() && sm.contains("all_except")) {
        s.smooth = StableSubsetSpec::Smooth::AllExcept;
        read_ids(sm.at("all_except"));
    } else {
        throw SchemaError("smooth must be none, all, {only:[..]} or {all_except:[..]}");
    }
    return s;
}

inline json to_json(const TStructure& t) { return {{"cut", to_json(t.cut)}, {"minus", to_json(t.minus)}}; }

inline TStructure tstructure_from(const json& j) {
    StableSubsetSpec minus = j.contains("minus") ? subset_from(j.at("minus")) : StableSubsetSpec{};
    return TStructure(cut_from(field(j, "cut")), minus);
}

inline json to_json(const QComplex& z) { return {{"re", to_json(z.re)}, {"im", to_json(z.im)}}; }

inline json to_json(const RatMatrix2& m) {
    return json::array({json::array({to_json(m.a), to_json(m.b)}), json::array({to_json(m.c), to_json(m.d)})});
}

inline json to_json(const GLPlusTilde& g) { return {{"matrix", to_json(g.matrix())}, {"anchor", to_json(g.anchor())}}; }

// {"matrix":[["p/q",..],..],"anchor":phase}; without an anchor the image of
// 1/2 is taken in (-1/2,3/2] shifted by an optional "winding" of whole turns.
inline GLPlusTilde glplus_from(const json& j) {
    const json& m = field(j, "matrix");
    if (!m.is_array() || m.size() != 2 || !m[0].is_array() || !m[1].is_array() || m[0].size() != 2 || m[1].size() != 2)
        throw SchemaError("expected a 2x2 matrix");
    RatMatrix2 a{rational_from(m[0][0]), rational_from(m[0][1]), rational_from(m[1][0]), rational_from(m[1][1])};
    if (j.contains("anchor")) return GLPlusTilde(a, phase_from(j.at("anchor")));
    if (a.det() <= 0) throw DomainError("matrix must have positive determinant");
    Int winding = j.contains("winding") ? int_from(j.at("winding")) : Int(0);
    PlaneVector image = a.integral().apply(Phase::half().ray());
    return GLPlusTilde(a, next_phase_with_ray(Phase::half().plus(-1), image).plus(2 * winding));
}

inline json to_json(const MultiCharge& c) {
    return json::array({to_json(c.deg), to_json(c.rk1), to_json(c.rk2)});
}

inline MultiCharge multicharge_from(const json& j) {
    if (!j.is_array() || j.size() != 3) throw SchemaError("expected a charge [deg, rk1, rk2]");
    return {int_from(j[0]), int_from(j[1]), int_from(j[2])};
}

inline DeclaredObject declared_from(const json& j) {
    DeclaredObject o{multicharge_from(field(j, "charge")), {}};
    if (j.contains("quotients")) {
        if (!j.at("quotients").is_array()) throw SchemaError("'quotients' must be an array");
        for (const auto& q : j.at("quotients")) o.quotients.push_back(multicharge_from(q));
    }
    o.validate();
    return o;
}

inline json to_json(const DeclaredObject& o) {
    json q = json::array();
    for (const auto& c : o.quotients) q.push_back(to_json(c));
    return {{"charge", to_json(o.charge)}, {"quotients", q}};
}

inline json to_json(const Wall& w) {
    return {{"wall", json::array({to_json(w.alpha), to_json(w.beta), to_json(w.gamma)})},
            {"unstable_side", w.unstable_side < 0 ? "-" : "+"},
            {"quotient", to_json(w.quotient)}};
}

}  // namespace hnlab::io
