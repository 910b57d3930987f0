#include "wallscan/render.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

namespace wallscan {

namespace {

// fixed 12-decimal formatting keeps the output byte-identical across runs
std::string fmt(double v) {
    if (!std::isfinite(v)) v = 0.0;
    if (v == 0.0) v = 0.0;  // normalize -0
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12f", v);
    return buf;
}

const char* palette(size_t i) {
    static const char* colors[] = {"#2266cc", "#cc4422", "#22aa66", "#8844cc",
                                   "#cc8822", "#2299aa", "#aa2266", "#667722"};
    return colors[i % (sizeof(colors) / sizeof(colors[0]))];
}

struct Mapper {
    double xmin, xmax, ymin, ymax;
    int width, height;
    static constexpr int margin = 40;

    double px(double x) const {
        return margin + (x - xmin) / (xmax - xmin) * (width - 2 * margin);
    }
    double py(double y) const {
        return height - margin - (y - ymin) / (ymax - ymin) * (height - 2 * margin);
    }
    bool in_x(double x) const { return x >= xmin && x <= xmax; }
    bool in_y(double y) const { return y >= ymin && y <= ymax; }
};

void emit_polyline(std::ostringstream& svg, const std::vector<std::pair<double, double>>& pts,
                   const Mapper& m, const char* color) {
    if (pts.size() < 2) return;
    svg << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
    for (size_t i = 0; i < pts.size(); ++i) {
        if (i) svg << ' ';
        svg << fmt(m.px(pts[i].first)) << ',' << fmt(m.py(pts[i].second));
    }
    svg << "\"/>\n";
}

// branches of A s^2 + (B2 u + D1) s + C2 u^2 = 0 solved for s at sampled u
void sample_t0(const WallConic& w, const Mapper& m, int samples, std::ostringstream& svg,
               const char* color) {
    const double A = to_double(w.A), B2 = to_double(w.B2), C2 = to_double(w.C2),
                 D1 = to_double(w.D1);
    std::vector<std::pair<double, double>> lo, hi;
    auto flush = [&](std::vector<std::pair<double, double>>& pts) {
        emit_polyline(svg, pts, m, color);
        pts.clear();
    };
    for (int i = 0; i <= samples; ++i) {
        const double u = m.ymin + (m.ymax - m.ymin) * i / samples;
        const double b = B2 * u + D1;
        if (A == 0.0) {
            if (b != 0.0) {
                const double s = -C2 * u * u / b;
                if (m.in_x(s)) lo.push_back({s, u});
                else flush(lo);
            } else {
                flush(lo);
            }
            continue;
        }
        const double disc = b * b - 4.0 * A * C2 * u * u;
        if (disc < 0.0) {
            flush(lo);
            flush(hi);
            continue;
        }
        const double rt = std::sqrt(disc);
        const double s1 = (-b - rt) / (2.0 * A);
        const double s2 = (-b + rt) / (2.0 * A);
        if (m.in_x(s1)) lo.push_back({s1, u});
        else flush(lo);
        if (m.in_x(s2)) hi.push_back({s2, u});
        else flush(hi);
    }
    flush(lo);
    flush(hi);
}

// upper semicircle of the u-plane slice
void sample_u(const WallConic& w, const Rational& u, const Mapper& m, int samples,
              std::ostringstream& svg, const char* color) {
    const CircleSlice c = pi_u_circle_raw(w, u);
    if (sign(c.radius_sq) <= 0) return;
    const double center = to_double(c.center);
    const double r = std::sqrt(to_double(c.radius_sq));
    static const double pi = std::acos(-1.0);
    std::vector<std::pair<double, double>> pts;
    for (int i = 0; i <= samples; ++i) {
        const double phi = pi * i / samples;
        const double s = center + r * std::cos(phi);
        const double t = r * std::sin(phi);
        if (m.in_x(s) && m.in_y(t)) {
            pts.push_back({s, t});
        } else {
            emit_polyline(svg, pts, m, color);
            pts.clear();
        }
    }
    emit_polyline(svg, pts, m, color);
}

} // namespace

std::string render_svg(const std::vector<RenderWall>& walls, const SliceFrame& frame,
                       const std::vector<Rational>& mu_lines, const RenderSpec& spec) {
    Mapper m{spec.xmin, spec.xmax, spec.ymin, spec.ymax, spec.width, spec.height};
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << spec.width << "\" height=\""
        << spec.height << "\" viewBox=\"0 0 " << spec.width << " " << spec.height << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    // axes
    if (m.in_x(0.0))
        svg << "<line x1=\"" << fmt(m.px(0)) << "\" y1=\"" << fmt(m.py(m.ymin)) << "\" x2=\""
            << fmt(m.px(0)) << "\" y2=\"" << fmt(m.py(m.ymax))
            << "\" stroke=\"#999999\" stroke-width=\"0.8\"/>\n";
    if (m.in_y(0.0))
        svg << "<line x1=\"" << fmt(m.px(m.xmin)) << "\" y1=\"" << fmt(m.py(0)) << "\" x2=\""
            << fmt(m.px(m.xmax)) << "\" y2=\"" << fmt(m.py(0))
            << "\" stroke=\"#999999\" stroke-width=\"0.8\"/>\n";

    for (const auto& mu : mu_lines) {
        const double x = to_double(mu);
        if (!m.in_x(x)) continue;
        svg << "<line x1=\"" << fmt(m.px(x)) << "\" y1=\"" << fmt(m.py(m.ymin)) << "\" x2=\""
            << fmt(m.px(x)) << "\" y2=\"" << fmt(m.py(m.ymax))
            << "\" stroke=\"#bbbbbb\" stroke-width=\"0.8\" stroke-dasharray=\"4,3\"/>\n";
    }

    for (size_t i = 0; i < walls.size(); ++i) {
        const char* color = palette(i);
        const WallConic& w = walls[i].conic;
        if (spec.plane == RenderSpec::Plane::T0)
            sample_t0(w, m, spec.samples, svg, color);
        else
            sample_u(w, spec.u_value, m, spec.samples, svg, color);

        if (spec.annotate_pw && spec.plane == RenderSpec::Plane::T0) {
            try {
                const SpecialPoints sp = special_points(w);
                const double x = to_double(sp.p_w.first), y = to_double(sp.p_w.second);
                if (m.in_x(x) && m.in_y(y))
                    svg << "<circle cx=\"" << fmt(m.px(x)) << "\" cy=\"" << fmt(m.py(y))
                        << "\" r=\"3\" fill=\"" << color << "\"/>\n";
            } catch (const error&) {
                // no distinguished point for this shape
            }
        }
        if (spec.annotate_asymptotes && spec.plane == RenderSpec::Plane::T0) {
            try {
                for (const auto& dir : asymptote_directions(w)) {
                    if (dir.vertical) continue;
                    const double slope = dir.slope.approx();
                    // u = slope * s through the origin, clipped to the view
                    if (slope == 0.0) continue;
                    const double s_at_ymin = m.ymin / slope, s_at_ymax = m.ymax / slope;
                    svg << "<line x1=\"" << fmt(m.px(s_at_ymin)) << "\" y1=\"" << fmt(m.py(m.ymin))
                        << "\" x2=\"" << fmt(m.px(s_at_ymax)) << "\" y2=\"" << fmt(m.py(m.ymax))
                        << "\" stroke=\"" << color
                        << "\" stroke-width=\"0.6\" stroke-dasharray=\"2,4\"/>\n";
                }
            } catch (const error&) {
                // not hyperbolic
            }
        }
        // legend
        svg << "<text x=\"" << fmt(10.0) << "\" y=\"" << fmt(18.0 + 16.0 * i)
            << "\" font-family=\"monospace\" font-size=\"12\" fill=\"" << color << "\">"
            << walls[i].label << "</text>\n";
    }

    if (spec.annotate_mu) {
        for (size_t k = 0; k < mu_lines.size(); ++k) {
            const double x = to_double(mu_lines[k]);
            if (!m.in_x(x)) continue;
            svg << "<text x=\"" << fmt(m.px(x) + 3.0) << "\" y=\"" << fmt(m.py(m.ymax) + 12.0)
                << "\" font-family=\"monospace\" font-size=\"10\" fill=\"#777777\">mu"
                << k << "</text>\n";
        }
    }

    (void)frame;
    svg << "</svg>\n";
    return svg.str();
}

} // namespace wallscan
