#pragma once

// SVG pictures of shadows: every stable JH factor of every HN factor drawn at
// its phase, phases decreasing to the right, the extreme objects on a dashed
// line at the top.

#include "hnlab/objects.hpp"

#include <cstdint>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

namespace hnlab {

// floor of the real phase value.
inline Int phase_floor(const Phase& p) { return p.dir() == PlaneVector{-1, 0} ? p.shift() + 1 : p.shift(); }

inline std::uint32_t fnv1a(const std::string& s) {
    std::uint32_t h = 2166136261u;
    for (unsigned char c : s) {
        h ^= c;
        h *= 16777619u;
    }
    return h;
}

struct ShadowPoint {
    double phase;   // offset from the window start, display only
    int slot;       // -1 on the extreme line, else the smooth band row
    std::string label;
    Int count;
};

struct ShadowScene {
    Int lo;
    Int hi;
    std::vector<ShadowPoint> points;
    std::vector<std::vector<std::size_t>> segments;  // indices into points
};

inline constexpr int kSmoothSlots = 6;

inline ShadowScene shadow_scene(const FormalObject& x) {
    validate(x);
    if (x.empty()) throw DomainError("the zero object has an empty shadow");
    ShadowScene s;
    s.lo = phase_floor(phi_minus(x));
    s.hi = phase_floor(phi_plus(x)) + 1;
    std::vector<std::size_t> path;
    for (const auto& p : x.pieces) {
        double off = p.phase.plus(-s.lo).approx();
        for (std::size_t k = 0; k < p.jh.size(); ++k) {
            const auto& e = p.jh[k];
            int slot = e.label.is_extreme() ? -1 : static_cast<int>(fnv1a(e.label.id) % kSmoothSlots);
            if (k == 0) path.push_back(s.points.size());
            s.points.push_back({off, slot, e.label.is_extreme() ? "" : e.label.id, e.count});
        }
    }
    if (x.flagged_indecomposable() && path.size() > 1) s.segments.push_back(path);
    return s;
}

namespace detail {

inline std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f", v);
    std::string s = buf;
    if (s == "-0.0") s = "0.0";
    return s;
}

}  // namespace detail

inline std::string render_svg(const ShadowScene& s, const std::string& title = {}) {
    constexpr double unit = 160, margin = 40, top = 50, band = 90, row = 14;
    const double width_units = static_cast<double>(s.hi - s.lo);
    const double w = 2 * margin + unit * width_units;
    const double h = band + row * kSmoothSlots + 40;
    auto xpos = [&](double off) { return margin + unit * (width_units - off); };
    auto ypos = [&](int slot) { return slot < 0 ? top : band + row * slot; };
    using detail::fmt;

    std::ostringstream o;
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(w) << "\" height=\"" << fmt(h)
      << "\" viewBox=\"0 0 " << fmt(w) << " " << fmt(h) << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
    o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (!title.empty()) o << "<text x=\"8\" y=\"16\">" << title << "</text>\n";
    o << "<line x1=\"" << fmt(margin) << "\" y1=\"" << fmt(top) << "\" x2=\"" << fmt(w - margin) << "\" y2=\"" << fmt(top)
      << "\" stroke=\"black\" stroke-dasharray=\"6,4\"/>\n";

    const double axis = h - 28;
    for (Int k = s.lo; k <= s.hi; ++k) {
        double x = xpos(static_cast<double>(k - s.lo));
        o << "<line x1=\"" << fmt(x) << "\" y1=\"" << fmt(top - 12) << "\" x2=\"" << fmt(x) << "\" y2=\"" << fmt(axis)
          << "\" stroke=\"#999\"/>\n";
        o << "<text x=\"" << fmt(x) << "\" y=\"" << fmt(axis + 12) << "\" text-anchor=\"middle\">" << k << "</text>\n";
        if (k < s.hi) {
            // phases (k, k+1] are the sheaves shifted by k
            o << "<text x=\"" << fmt(x - unit / 2) << "\" y=\"" << fmt(axis + 24)
              << "\" text-anchor=\"middle\" fill=\"#555\">Coh[" << k << "]</text>\n";
        }
    }

    for (const auto& seg : s.segments) {
        o << "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < seg.size(); ++i) {
            const auto& p = s.points[seg[i]];
            o << (i ? " " : "") << fmt(xpos(p.phase)) << "," << fmt(ypos(p.slot));
        }
        o << "\"/>\n";
    }

    for (const auto& p : s.points) {
        double x = xpos(p.phase), y = ypos(p.slot);
        o << "<circle cx=\"" << fmt(x) << "\" cy=\"" << fmt(y) << "\" r=\"4\" fill=\""
          << (p.slot < 0 ? "black" : "white") << "\" stroke=\"black\"/>\n";
        std::string tag = p.label;
        if (p.count > 1) tag += (tag.empty() ? "" : " ") + std::string("x") + p.count.str();
        if (!tag.empty())
            o << "<text x=\"" << fmt(x + 6) << "\" y=\"" << fmt(y - 6) << "\">" << tag << "</text>\n";
    }
    o << "</svg>\n";
    return o.str();
}

inline std::string shadow_svg(const FormalObject& x, const std::string& title = {}) {
    return render_svg(shadow_scene(x), title);
}

}  // namespace hnlab
