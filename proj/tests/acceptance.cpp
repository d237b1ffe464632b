// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "hnlab/hnlab.hpp"
#include "support.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <queue>
#include <set>
#include <sstream>

using namespace hnlab;
using namespace hnlab::testing;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

// number of partial quotients of |a| / |b| (Euclid steps)
int cf_digits(Int a, Int b) {
    a = abs_int(a);
    b = abs_int(b);
    int n = 0;
    while (b != 0) {
        Int r = a % b;
        a = b;
        b = r;
        ++n;
    }
    return n;
}

std::string str(const Charge& c) {
    std::ostringstream o;
    o << c;
    return o.str();
}

Outcome matrix_identities() {
    Outcome o;
    o.require(generator_matrix(Letter::TO) == IntMatrix2{1, 1, 0, 1}, "T_O matrix");
    o.require(generator_matrix(Letter::TK) == IntMatrix2{1, 0, -1, 1}, "T_K matrix");
    IntMatrix2 tk = generator_matrix(Letter::TK), to = generator_matrix(Letter::TO);
    o.require(tk * to * tk == IntMatrix2{0, 1, -1, 0}, "T_K T_O T_K");
    o.require(word_matrix(GenWord::fdual()) == IntMatrix2{0, 1, -1, 0}, "F word matrix");
    o.require(generator_matrix(Letter::Shift) == -IntMatrix2::identity(), "shift matrix");
    if (o.ok) o.detail = "T_O=[[1,1],[0,1]], T_K=[[1,0],[-1,1]], T_K T_O T_K=[[0,1],[-1,0]], SHIFT=-I";
    return o;
}

Outcome phase_rules() {
    Outcome o;
    std::mt19937_64 rng(1001);
    std::uniform_int_distribution<int> s(-4, 4);
    for (int i = 0; i < 1000; ++i) {
        Phase p = reduced_phase(random_charge(rng, 50)).plus(s(rng));
        o.require(apply_to_phase(GenWord::fdual(), p) == p.plus_half(), "F does not add 1/2");
        // value check independent of the representation
        o.require(std::abs(apply_to_phase(GenWord::fdual(), p).approx() - p.approx() - 0.5) < 1e-9, "F value");
    }
    o.require(apply_to_phase(GenWord{{Letter::TK}}, Phase::one()) == Phase::one(), "T_K moves phase 1");
    AutoEq s2 = normal_form(GenWord{{Letter::Shift, Letter::Shift}});
    o.require(s2 == AutoEq(IntMatrix2::identity(), Phase::half().plus(2)), "SHIFT^2 normal form");
    GenWord f4 = GenWord::fdual() * GenWord::fdual() * GenWord::fdual() * GenWord::fdual();
    o.require(normal_form(f4) == s2, "F^4 differs from SHIFT^2");
    if (o.ok) o.detail = "1000 phases +1/2 exactly; SHIFT^2 = F^4 = (I, 5/2)";
    return o;
}

Outcome euclidean_reduction() {
    Outcome o;
    int cases = 0;
    std::size_t worst = 0;
    for (int r = -30; r <= 30; ++r)
        for (int d = -30; d <= 30; ++d) {
            if (r == 0 && d == 0) continue;
            ++cases;
            Charge c{r, d};
            auto t = reduce_to_torsion(c);
            Int g = gcd_int(r, d);
            o.require(t.result.rk == 0 && abs_int(t.result.deg) == g, "result not (0, +-gcd) for " + str(c));
            o.require(apply_matrix(word_matrix(t.word), c) == t.result, "word does not reproduce " + str(c));
            std::size_t bound = 4 * cf_digits(std::max(abs_int(Int(r)), abs_int(Int(d))),
                                              std::min(abs_int(Int(r)), abs_int(Int(d)))) + 4;
            o.require(t.word.syllables() <= bound, "word too long for " + str(c));
            worst = std::max(worst, t.word.syllables());
        }
    if (o.ok)
        o.detail = std::to_string(cases) + " charges, longest word " + std::to_string(worst) + " syllables";
    return o;
}

Outcome transitivity_isotropy() {
    Outcome o;
    // BFS on charges from k(p0) under the generators, inside a box larger than the target
    const int box = 40, target = 10;
    std::set<std::pair<long, long>> seen;
    std::queue<Charge> q;
    q.push({0, 1});
    seen.insert({0, 1});
    while (!q.empty()) {
        Charge c = q.front();
        q.pop();
        for (Letter l : kLetters) {
            Charge n = apply_matrix(generator_matrix(l), c);
            if (abs_int(n.rk) > box || abs_int(n.deg) > box) continue;
            std::pair<long, long> key{static_cast<long>(n.rk), static_cast<long>(n.deg)};
            if (seen.insert(key).second) q.push(n);
        }
    }
    int primitive = 0;
    for (int r = -target; r <= target; ++r)
        for (int d = -target; d <= target; ++d) {
            if (gcd_int(r, d) != 1) continue;
            ++primitive;
            o.require(seen.count({r, d}) == 1, "not reached: " + str(Charge{r, d}));
        }

    std::size_t words = 0, fixing = 0;
    std::vector<GenWord> layer{GenWord{}};
    for (int len = 0; len <= 6; ++len) {
        std::vector<GenWord> next;
        for (const auto& w : layer) {
            ++words;
            if (apply_to_phase(w, Phase::one()) == Phase::one()) {
                ++fixing;
                AutoEq g = normal_form(w);
                Int n = -g.matrix().c;
                o.require(normal_form(GenWord::power(Letter::TK, n)) == g, "stabiliser element not a T_K power: " + w.str());
            }
            if (len < 6)
                for (Letter l : kLetters) next.push_back(GenWord{{l}} * w);
        }
        layer.swap(next);
    }
    if (o.ok)
        o.detail = std::to_string(primitive) + " primitive charges reached; " + std::to_string(fixing) + " of " +
                   std::to_string(words) + " words fix phase 1, all powers of T_K";
    return o;
}

Outcome hom_trichotomy() {
    Outcome o;
    using K = HomVerdict::Kind;
    std::mt19937_64 rng(1005);
    int serre = 0, decided = 0;
    for (int i = 0; i < 10000; ++i) {
        FormalObject x = random_object(rng), y = random_object(rng);
        bool zero = false, nonzero = false;
        for (const auto& v : hom_rules(x, y)) {
            zero |= v.kind == K::Zero;
            nonzero |= v.kind == K::NonZero;
        }
        o.require(!(zero && nonzero), "contradictory rules");
        HomVerdict v = hom_verdict(x, y);
        decided += v.kind != K::Unknown;
        if (v.rule.starts_with("Serre")) {
            ++serre;
            o.require(x.all_pieces_perfect() || y.all_pieces_perfect(), "Serre transport without a perfect argument");
        }
    }
    FormalObject bundle = catalog_object("O"), point = catalog_object("k_x"), ks = catalog_object("k_s");
    o.require(hom_verdict(bundle, point) == HomVerdict{K::NonZero, "Cor 4.4 (iii)"}, "Hom(O, k(x))");
    o.require(hom_verdict(point, bundle) == HomVerdict{K::Zero, "Lemma 3.8"}, "Hom(k(x), O)");
    o.require(hom_verdict(ks, ks) == HomVerdict{K::NonZero, "Cor 4.4 (vi)"}, "Hom(k(s), k(s))");
    if (o.ok)
        o.detail = "10000 pairs, no conflicts, " + std::to_string(decided) + " decided, " + std::to_string(serre) +
                   " via Serre transport; examples reproduce";
    return o;
}

Outcome spherical_suite() {
    Outcome o;
    auto check = [&](const char* name, bool want, const std::string& reason) {
        auto v = is_spherical(catalog_object(name));
        o.require(v.spherical == want && v.reason == reason, std::string("verdict for ") + name + ": " + v.reason);
    };
    check("O", true, "perfect and stable");
    check("k_x", true, "perfect and stable");
    check("k_x_shift3", true, "perfect and stable");
    check("k_s", false, "extreme: Ext^2 != 0");
    check("etale_rank2", false, "not semistable");
    check("band", false, "not stable");
    std::mt19937_64 rng(1006);
    for (int i = 0; i < 100; ++i) {
        FormalObject a = random_spherical(rng), b = random_spherical(rng);
        auto c = spherical_connect(a, b);
        o.require(apply_to_charge(c.word, total_charge(a)) == total_charge(b), "connect charge");
        o.require(apply_to_phase(c.word, a.pieces.front().phase) == b.pieces.front().phase, "connect phase");
    }
    if (o.ok) o.detail = "catalog verdicts as expected; 100 connections exact";
    return o;
}

Outcome etale_example() {
    Outcome o;
    FormalObject e = catalog_object("etale_rank2");
    o.require(e.pieces.size() == 2, "two HN factors");
    if (!o.ok) return o;
    o.require(e.pieces[0].phase == Phase::quarter(3) && e.pieces[0].charge() == Charge{1, 1}, "factor at 3/4");
    o.require(e.pieces[1].phase == Phase::quarter(1) && e.pieces[1].charge() == Charge{1, -1}, "factor at 1/4");
    // Z = -deg + i rk fixes which charge sits at which phase
    o.require(reduced_phase({1, 1}) == Phase::quarter(3) && reduced_phase({1, -1}) == Phase::quarter(1),
              "charge/phase convention");
    o.require(total_charge(e) == Charge{2, 0}, "total charge");
    o.require(!validation_error(e).has_value(), "validator rejects it");
    o.require(e.flagged_indecomposable() && classify_type(e) == IndecomposableType::IV, "not type IV");
    if (o.ok) o.detail = "(1,1)@3/4 + (1,-1)@1/4 = (2,0), valid, indecomposable type IV";
    return o;
}

Outcome noetherian_matrix() {
    Outcome o;
    std::vector<PhaseCut> rational{RationalCut{Phase::one().plus(-1)}, RationalCut{Phase::quarter(1)},
                                   RationalCut{reduced_phase({3, -1}).plus(1)}};
    std::vector<StableSubsetSpec> minus{StableSubsetSpec::empty(),
                                        StableSubsetSpec::extreme_only(),
                                        {false, StableSubsetSpec::Smooth::All, {}},
                                        {false, StableSubsetSpec::Smooth::Only, {"x"}},
                                        {true, StableSubsetSpec::Smooth::AllExcept, {"y"}}};
    std::vector<TStructure> cases;
    for (const auto& c : rational)
        for (const auto& m : minus) cases.emplace_back(c, m);
    std::vector<SurdCut> surds{{QuadSurd(1, 1, 2, 5), -1},
                               {QuadSurd(0, 1, 1, 2), 0},
                               {QuadSurd(-1, 2, 3, 7), 1},
                               {QuadSurd(3, -1, 1, 3), -2},
                               {QuadSurd(0, 1, 2, 3), 2}};
    for (const auto& s : surds) cases.emplace_back(s);

    int witnesses = 0;
    for (const auto& t : cases) {
        bool want = is_rational_cut(t.cut) && t.minus.is_empty();
        o.require(is_noetherian(t) == want, "classification");
        if (want) continue;
        WitnessChain w = non_noetherian_witness(t, 5);
        ++witnesses;
        if (auto r = std::get_if<RationalCut>(&t.cut)) {
            Int step = t.minus.has_smooth() ? 1 : 2;
            for (std::size_t m = 0; m < w.normalized.size(); ++m) {
                o.require(w.normalized[m] == Charge{1, step * Int(m + 1)}, "normalised degree step");
                o.require(apply_to_charge(w.normalizer, w.charges[m]) == w.normalized[m], "normaliser");
            }
            for (const auto& k : w.kernels) {
                PlaneVector z = central_charge(k), up = r->phase.ray();
                o.require(cross(up, z) == 0 && dot(up, z) > 0, "kernel off the cut ray");
            }
        } else {
            const auto& s = std::get<SurdCut>(t.cut);
            for (std::size_t m = 1; m < w.charges.size(); ++m)
                o.require(euler_form(w.charges[m - 1], w.charges[m]) == 1 &&
                              s.cross_sign(central_charge(w.charges[m - 1] - w.charges[m])) > 0,
                          "irrational witness step");
        }
    }
    if (o.ok)
        o.detail = std::to_string(cases.size()) + " t-structures classified, " + std::to_string(witnesses) +
                   " witness chains checked (steps 1 smooth, 2 extreme)";
    return o;
}

Outcome golden_epi_chain() {
    Outcome o;
    SurdCut cut{QuadSurd(1, 1, 2, 5), -1};
    auto chain = epi_chain({1, 0}, cut, 10);
    o.require(chain.size() == 10, "length");
    for (std::size_t i = 0; i < chain.size(); ++i) {
        o.require(cut.cross_sign(central_charge(chain[i])) > 0, "outside the strip");
        if (i == 0) continue;
        const Charge &e = chain[i - 1], &f = chain[i];
        o.require(euler_form(e, f) == 1, "<E,F> != 1");
        o.require(cross(central_charge(e), central_charge(f)) > 0, "phases not increasing");
        o.require(cut.cross_sign(central_charge(e - f)) > 0, "difference outside the strip");
        auto all = brute_partners(e, cut, 5000);
        o.require(all.size() == 1 && all.front() == f, "brute force disagrees at " + str(e));
    }
    if (o.ok) o.detail = "10 charges ending at " + str(chain.back()) + ", brute force agrees";
    return o;
}

GLPlusTilde random_translate(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-6, 6), den(1, 4), turns(-2, 2);
    for (;;) {
        RatMatrix2 m{Rational(num(rng), den(rng)), Rational(num(rng), den(rng)), Rational(num(rng), den(rng)),
                     Rational(num(rng), den(rng))};
        if (m.det() <= 0) continue;
        PlaneVector image = m.integral().apply(Phase::half().ray());
        return {m, next_phase_with_ray(Phase::one().plus(-1), image).plus(2 * turns(rng))};
    }
}

Outcome stability_orbit() {
    Outcome o;
    std::mt19937_64 rng(1010);
    for (int i = 0; i < 200; ++i) {
        StabilityCondition s{random_translate(rng)};
        GLPlusTilde g = random_translate(rng);
        o.require(solve_transitivity(s, act(g, s)) == g, "solve(s, g.s) != g");
    }
    auto c = canonical_form(StabilityCondition::standard());
    o.require(c.tau == QComplex{0, 1} && c.scale == QComplex{1, 0}, "standard canonical form");
    for (int i = 0; i < 10; ++i) {
        StabilityCondition s{random_translate(rng)};
        auto base = canonical_form(s);
        for (int j = 0; j < 20; ++j) {
            auto moved = canonical_form(act_autoeq(normal_form(random_word(rng, 10)), s));
            o.require(moved.tau == base.tau && moved.scale == base.scale, "canonical form moved");
        }
    }
    if (o.ok) o.detail = "200 round trips exact; standard -> (i, 1); invariant under 20 SL(2,Z) changes";
    return o;
}

Outcome c2_walls() {
    Outcome o;
    DeclaredObject l = c2_line_bundle();
    o.require(is_semistable(l, 1, 2) == Stability::Stable, "(1,2)");
    o.require(is_semistable(l, 1, 1) == Stability::StrictlySemistable, "(1,1)");
    o.require(is_semistable(l, 2, 1) == Stability::Unstable, "(2,1)");
    auto ws = walls(l);
    o.require(ws.size() == 1 && ws[0].alpha == -1 && ws[0].beta == 1 && ws[0].gamma == 0 && ws[0].unstable_side < 0,
              "wall b = a");
    for (int d = -3; d <= 3; ++d)
        for (Rational a : {Rational(1, 3), Rational(1), Rational(5, 2)})
            for (Rational b : {Rational(1, 2), Rational(2)}) {
                o.require(w_ab({d + 1, 1, 0}, a, b) == QComplex{Rational(-d - 1), a}, "W(i1* O(d))");
                o.require(w_ab({d + 1, 0, 1}, a, b) == QComplex{Rational(-d - 1), b}, "W(i2* O(d))");
                o.require(w_ab(l.charge, a, b) == QComplex{-2, a + b}, "W(L)");
            }
    if (o.ok) o.detail = "stable / semistable / unstable at (1,2),(1,1),(2,1); single wall -a + b = 0";
    return o;
}

Outcome golden_svgs() {
    Outcome o;
    for (const char* name : {"X1", "X2", "X3", "X4", "X5", "etale_rank2"}) {
        std::ifstream f(std::string(HNLAB_GOLDEN_DIR) + "/" + name + ".svg", std::ios::binary);
        std::stringstream want;
        want << f.rdbuf();
        std::string got = shadow_svg(catalog_object(name), name);
        o.require(!want.str().empty() && got == want.str(), std::string("golden mismatch: ") + name);
        o.require(got == shadow_svg(catalog_object(name), name), "not deterministic");
    }
    if (o.ok) o.detail = "6 SVGs byte-identical";
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"matrix identities", matrix_identities},
        {"phase rules", phase_rules},
        {"Euclidean reduction", euclidean_reduction},
        {"transitivity and isotropy", transitivity_isotropy},
        {"Hom trichotomy", hom_trichotomy},
        {"spherical suite", spherical_suite},
        {"etale rank two bundle", etale_example},
        {"Noetherian classification", noetherian_matrix},
        {"epi chain", golden_epi_chain},
        {"stability orbit", stability_orbit},
        {"two-component walls", c2_walls},
        {"golden shadows", golden_svgs},
    };
    int failed = 0, n = 0;
    for (const auto& [name, run] : criteria) {
        ++n;
        auto t0 = std::chrono::steady_clock::now();
        Outcome r;
        try {
            r = run();
        } catch (const std::exception& e) {
            r = {false, std::string("exception: ") + e.what()};
        }
        double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        failed += !r.ok;
        std::cout << (r.ok ? "PASS" : "FAIL") << "  " << n << ". " << name << " - " << r.detail << " ("
                  << static_cast<int>(ms) << " ms)\n";
    }
    std::cout << (n - failed) << "/" << n << " criteria passed\n";
    return failed ? 1 : 0;
}
