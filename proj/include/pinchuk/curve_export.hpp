#ifndef PINCHUK_CURVE_EXPORT_HPP
#define PINCHUK_CURVE_EXPORT_HPP

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "pinchuk/asymptotic.hpp"
#include "pinchuk/errors.hpp"
#include "pinchuk/rational.hpp"

namespace pinchuk {

struct CurveSample {
    BigRational s;
    BigRational P;
    BigRational Q;
};

inline BigRational default_s_min() { return make_rational(-11, 5); }
inline BigRational default_s_max() { return make_rational(11, 5); }
inline constexpr unsigned default_csv_digits = 12;

/// `samples` equally spaced parameter values from s_min to s_max inclusive.
inline std::vector<CurveSample> sample_curve(const BigRational& s_min, const BigRational& s_max, long samples,
                                             const CurveParam& c = s_form())
{
    if (samples < 2) throw InvalidRange("need at least 2 samples, got " + std::to_string(samples));
    if (!(s_min < s_max)) throw InvalidRange("need s_min < s_max, got " + to_string(s_min) + " and " + to_string(s_max));
    std::vector<CurveSample> out;
    out.reserve(static_cast<std::size_t>(samples));
    BigRational step = (s_max - s_min) / BigRational(samples - 1);
    for (long k = 0; k < samples; ++k) {
        BigRational s = k == samples - 1 ? s_max : BigRational(s_min + step * BigRational(k));
        auto [p, q] = curve_point(c, s);
        out.push_back({s, p, q});
    }
    return out;
}

inline std::string to_csv(const std::vector<CurveSample>& samples, unsigned digits = default_csv_digits)
{
    std::string out = "s,P,Q\n";
    for (const auto& r : samples) {
        out += to_decimal(r.s, digits) + "," + to_decimal(r.P, digits) + "," + to_decimal(r.Q, digits) + "\n";
    }
    return out;
}

/// (0, 0), (0, 208), (-1, -163/4).
inline std::vector<std::pair<BigRational, BigRational>> curve_markers()
{
    return {{0, 0}, {0, 208}, {-1, make_rational(-163, 4)}};
}

struct SvgOptions {
    bool square = false;  // one scale for both axes
    unsigned width = 800;
    unsigned height = 600;
    unsigned margin = 40;
};

namespace detail {

struct PlotFrame {
    BigRational p_lo, q_lo;
    BigRational sx, sy;  // pixels per unit
    BigRational ox, oy;  // pixel offsets
    unsigned height;

    std::string x(const BigRational& p) const { return to_decimal(ox + (p - p_lo) * sx, 2); }
    std::string y(const BigRational& q) const { return to_decimal(BigRational(height) - oy - (q - q_lo) * sy, 2); }
};

inline PlotFrame plot_frame(const std::vector<CurveSample>& samples, const SvgOptions& o)
{
    BigRational p_lo = 0, p_hi = 0, q_lo = 0, q_hi = 0;
    auto widen = [&](const BigRational& p, const BigRational& q) {
        p_lo = std::min(p_lo, p);
        p_hi = std::max(p_hi, p);
        q_lo = std::min(q_lo, q);
        q_hi = std::max(q_hi, q);
    };
    for (const auto& r : samples) widen(r.P, r.Q);
    for (const auto& [p, q] : curve_markers()) widen(p, q);
    BigRational pad_p = (p_hi - p_lo) / 20, pad_q = (q_hi - q_lo) / 20;
    p_lo -= pad_p;
    p_hi += pad_p;
    q_lo -= pad_q;
    q_hi += pad_q;

    BigRational w = o.width - 2 * o.margin, h = o.height - 2 * o.margin;
    PlotFrame f{p_lo, q_lo, w / (p_hi - p_lo), h / (q_hi - q_lo), BigRational(o.margin), BigRational(o.margin),
                o.height};
    if (o.square) {
        BigRational s = std::min(f.sx, f.sy);
        f.ox += (w - s * (p_hi - p_lo)) / 2;
        f.oy += (h - s * (q_hi - q_lo)) / 2;
        f.sx = f.sy = s;
    }
    return f;
}

}  // namespace detail

/// Polyline of the samples with both axes and the three marker points.
inline std::string to_svg(const std::vector<CurveSample>& samples, const SvgOptions& o = {})
{
    if (samples.size() < 2) throw InvalidRange("need at least 2 samples to draw a curve");
    detail::PlotFrame f = detail::plot_frame(samples, o);
    std::string w = std::to_string(o.width), h = std::to_string(o.height);
    std::string left = std::to_string(o.margin), right = std::to_string(o.width - o.margin);
    std::string top = std::to_string(o.margin), bottom = std::to_string(o.height - o.margin);

    std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + w + "\" height=\"" + h +
                      "\" viewBox=\"0 0 " + w + " " + h + "\">\n";
    out += "<rect width=\"" + w + "\" height=\"" + h + "\" fill=\"white\"/>\n";
    out += "<line class=\"axis\" x1=\"" + left + "\" y1=\"" + f.y(0) + "\" x2=\"" + right + "\" y2=\"" + f.y(0) +
           "\" stroke=\"gray\"/>\n";
    out += "<line class=\"axis\" x1=\"" + f.x(0) + "\" y1=\"" + top + "\" x2=\"" + f.x(0) + "\" y2=\"" + bottom +
           "\" stroke=\"gray\"/>\n";
    out += "<text x=\"" + right + "\" y=\"" + f.y(0) + "\" font-size=\"14\" dy=\"-4\">P</text>\n";
    out += "<text x=\"" + f.x(0) + "\" y=\"" + top + "\" font-size=\"14\" dx=\"4\">Q</text>\n";

    out += "<polyline class=\"curve\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (i) out += " ";
        out += f.x(samples[i].P) + "," + f.y(samples[i].Q);
    }
    out += "\"/>\n";
    for (const auto& [p, q] : curve_markers()) {
        out += "<circle class=\"marker\" cx=\"" + f.x(p) + "\" cy=\"" + f.y(q) + "\" r=\"4\" fill=\"red\"><title>(" +
               to_string(p) + "," + to_string(q) + ")</title></circle>\n";
    }
    out += "</svg>\n";
    return out;
}

}  // namespace pinchuk

#endif  // PINCHUK_CURVE_EXPORT_HPP
