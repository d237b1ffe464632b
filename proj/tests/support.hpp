#pragma once

// Random valid objects and words for the property tests.

#include "hnlab/autoeq.hpp"
#include "hnlab/objects.hpp"
#include "hnlab/tstruct.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <vector>

namespace hnlab::testing {

inline const Letter kLetters[] = {Letter::TO, Letter::TOinv, Letter::TK, Letter::TKinv, Letter::Shift, Letter::ShiftInv};

inline GenWord random_word(std::mt19937_64& rng, int max_len) {
    std::uniform_int_distribution<int> len(0, max_len), pick(0, 5);
    GenWord w;
    for (int n = len(rng); n > 0; --n) w.letters.push_back(kLetters[pick(rng)]);
    return w;
}

inline Charge random_charge(std::mt19937_64& rng, int bound) {
    std::uniform_int_distribution<int> d(-bound, bound);
    Charge c{0, 0};
    while (c.is_zero()) c = {d(rng), d(rng)};
    return c;
}

// Phases from a small set of directions so that equal phases and integer
// offsets between pieces of different objects are common.
inline Phase random_phase(std::mt19937_64& rng) {
    static const Charge dirs[] = {{1, 0}, {0, 1}, {1, 1}, {1, -1}, {2, 1}, {1, 2}, {3, -1}};
    std::uniform_int_distribution<int> pick(0, 6), shift(-2, 2);
    return reduced_phase(dirs[pick(rng)]).plus(shift(rng));
}

inline SemistablePiece random_piece(std::mt19937_64& rng, const Phase& phase, bool single_label) {
    std::uniform_int_distribution<int> coin(0, 1), count(1, 3), labels(1, 3);
    SemistablePiece p{phase, {}, true};
    int n = single_label ? 1 : labels(rng);
    std::vector<StableLabel> pool{StableLabel::extreme(), StableLabel::smooth("a"), StableLabel::smooth("b"),
                                  StableLabel::smooth("c")};
    std::shuffle(pool.begin(), pool.end(), rng);
    for (int i = 0; i < n; ++i) p.jh.push_back({pool[i], count(rng)});
    if (p.all_extreme()) p.perfect = p.is_stable() ? false : coin(rng) == 1;
    return p;
}

inline FormalObject random_object(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> kind(0, 3), npieces(2, 3), coin(0, 1), count(1, 2);
    FormalObject x;
    switch (kind(rng)) {
        case 0: {  // indecomposable semistable
            x.pieces.push_back(random_piece(rng, random_phase(rng), true));
            x.indecomposable = true;
            break;
        }
        case 1: {  // decomposable or unflagged semistable
            x.pieces.push_back(random_piece(rng, random_phase(rng), false));
            if (coin(rng)) x.indecomposable = false;
            break;
        }
        case 2: {  // indecomposable with extreme HN factors
            std::vector<Phase> ps;
            int n = npieces(rng);
            while (static_cast<int>(ps.size()) < n) {
                Phase p = random_phase(rng);
                if (std::find(ps.begin(), ps.end(), p) == ps.end()) ps.push_back(p);
            }
            std::sort(ps.rbegin(), ps.rend());
            for (const auto& p : ps) x.pieces.push_back({p, {{StableLabel::extreme(), count(rng)}}, false});
            x.indecomposable = true;
            if (coin(rng)) x.perfect = coin(rng) == 1;
            break;
        }
        default: {  // arbitrary HN data
            std::vector<Phase> ps;
            int n = npieces(rng);
            while (static_cast<int>(ps.size()) < n) {
                Phase p = random_phase(rng);
                if (std::find(ps.begin(), ps.end(), p) == ps.end()) ps.push_back(p);
            }
            std::sort(ps.rbegin(), ps.rend());
            for (const auto& p : ps) x.pieces.push_back(random_piece(rng, p, false));
            break;
        }
    }
    validate(x);
    return x;
}

inline FormalObject random_spherical(std::mt19937_64& rng) {
    static const char* ids[] = {"p0", "x", "y", "z"};
    std::uniform_int_distribution<int> id(0, 3);
    Phase p = reduced_phase(random_charge(rng, 12));
    std::uniform_int_distribution<int> shift(-3, 3);
    return {{{p.plus(shift(rng)), {{StableLabel::smooth(ids[id(rng)]), 1}}, true}}, true, std::nullopt};
}

// Every F with |rk F| <= bound and |deg F| <= bound, <E,F> = 1 and both Z(F),
// Z(E-F) in the open half-plane of the cut's strip, smallest mass first.
// <E,F> = 1 is linear in F, so scanning one coordinate and solving for the
// other visits every point of the box that can satisfy it.
inline std::vector<Charge> brute_partners(const Charge& e, const SurdCut& cut, long bound) {
    std::vector<Charge> out;
    auto keep = [&](const Charge& f) {
        if (abs_int(f.rk) > bound || abs_int(f.deg) > bound) return;
        if (euler_form(e, f) != 1) return;
        if (cut.cross_sign(central_charge(f)) > 0 && cut.cross_sign(central_charge(e - f)) > 0) out.push_back(f);
    };
    if (e.rk != 0) {
        for (long r = -bound; r <= bound; ++r) {
            Int num = 1 + e.deg * r;  // rk_E deg - deg_E r = 1
            if (num % e.rk == 0) keep({r, num / e.rk});
        }
    } else {
        for (long d = -bound; d <= bound; ++d) {
            Int num = -1;  // -deg_E r = 1
            if (num % e.deg == 0) keep({num / e.deg, d});
        }
    }
    std::sort(out.begin(), out.end(), [](const Charge& a, const Charge& b) {
        Rational ma = mass_squared(a), mb = mass_squared(b);
        if (ma != mb) return ma < mb;
        return a.rk != b.rk ? a.rk < b.rk : a.deg < b.deg;
    });
    return out;
}

}  // namespace hnlab::testing
