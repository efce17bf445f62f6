#pragma once
//
// schatten_lab -- report : gap reports, run configuration, JSON/CSV/SVG emission
//
// All float output goes through fmt17() (17 significant digits) so that
// serialized reports round-trip exactly and rerunning a suite with the same
// seed yields byte-identical files regardless of thread count.
//

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdint>
#include <string>
#include <vector>

#include "schatten_lab/config.hpp"

namespace schatten_lab {

enum class Direction { GreaterEq, LessEq };
enum class Verdict { Holds, WithinTolerance, Violated };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Holds: return "holds";
        case Verdict::WithinTolerance: return "within-tolerance";
        default: return "violated";
    }
}

// Evaluated left/right sides of one inequality instance.
// gap is always lhs - rhs; the verdict accounts for the expected direction.
struct GapReport {
    double lhs = 0.0;
    double rhs = 0.0;
    double gap = 0.0;
    Verdict verdict = Verdict::WithinTolerance;
    bool asserted = true;      // false: recorded outside the asserted domain
    std::string context;

    // Directed slack: nonnegative (up to tolerance) when the inequality holds.
    double directed_gap() const { return dir == Direction::GreaterEq ? gap : -gap; }
    Direction dir = Direction::GreaterEq;
};

inline GapReport make_gap_report(double lhs, double rhs, Direction dir, double tol,
                                 std::string context = {}, bool asserted = true) {
    GapReport r;
    r.lhs = lhs;
    r.rhs = rhs;
    r.gap = lhs - rhs;
    r.dir = dir;
    r.asserted = asserted;
    r.context = std::move(context);
    const double g = r.directed_gap();
    if (!std::isfinite(g))
        r.verdict = Verdict::Violated;
    else if (g > tol)
        r.verdict = Verdict::Holds;
    else if (g >= -tol)
        r.verdict = Verdict::WithinTolerance;
    else
        r.verdict = Verdict::Violated;
    return r;
}

struct RunConfig {
    std::uint64_t seed = 42;
    int trials = 200;
    std::vector<int> dims = {2, 3, 4};
    std::vector<double> s_list;
    std::vector<double> p_list;
    Tolerances tols{};
    int grid = 721;
    int threads = -1;  // -1: use SCHATTEN_LAB_THREADS / auto
    std::string out_path;
    std::string format = "json";
};

// ---------------------------------------------------------------------------
// serialization helpers

inline std::string fmt17(double v) {
    if (std::isnan(v)) return "null";
    if (std::isinf(v)) return v > 0 ? "1e999" : "-1e999";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default: out += c;
        }
    }
    return out;
}

// Minimal ordered JSON writer; field order is fixed by call order, which keeps
// report bytes stable across runs.
class JsonWriter {
  public:
    std::string str() const { return buf_; }

    JsonWriter& begin_object() { sep(); buf_ += '{'; fresh_ = true; return *this; }
    JsonWriter& end_object() { buf_ += '}'; fresh_ = false; return *this; }
    JsonWriter& begin_array() { sep(); buf_ += '['; fresh_ = true; return *this; }
    JsonWriter& end_array() { buf_ += ']'; fresh_ = false; return *this; }

    JsonWriter& key(const std::string& k) {
        sep();
        buf_ += '"'; buf_ += json_escape(k); buf_ += "\":";
        fresh_ = true;
        return *this;
    }
    JsonWriter& value(double v) { sep(); buf_ += fmt17(v); fresh_ = false; return *this; }
    JsonWriter& value(int v) { sep(); buf_ += std::to_string(v); fresh_ = false; return *this; }
    JsonWriter& value(std::uint64_t v) { sep(); buf_ += std::to_string(v); fresh_ = false; return *this; }
    JsonWriter& value(bool v) { sep(); buf_ += v ? "true" : "false"; fresh_ = false; return *this; }
    JsonWriter& value(const std::string& v) {
        sep();
        buf_ += '"'; buf_ += json_escape(v); buf_ += '"';
        fresh_ = false;
        return *this;
    }
    JsonWriter& value(const char* v) { return value(std::string(v)); }

  private:
    void sep() {
        if (!fresh_ && !buf_.empty()) {
            char c = buf_.back();
            if (c != '{' && c != '[' && c != ':') buf_ += ',';
        }
        fresh_ = false;
    }
    std::string buf_;
    bool fresh_ = true;
};

inline void write_config_json(JsonWriter& w, const RunConfig& c) {
    w.begin_object();
    w.key("seed").value(c.seed);
    w.key("trials").value(c.trials);
    w.key("dims").begin_array();
    for (int d : c.dims) w.value(d);
    w.end_array();
    w.key("s_list").begin_array();
    for (double s : c.s_list) w.value(s);
    w.end_array();
    w.key("p_list").begin_array();
    for (double p : c.p_list) w.value(p);
    w.end_array();
    w.key("grid").value(c.grid);
    w.key("tolerances").begin_object();
    w.key("sym").value(c.tols.sym);
    w.key("decomp").value(c.tols.decomp);
    w.key("quad").value(c.tols.quad);
    w.key("gap").value(c.tols.gap);
    w.end_object();
    w.end_object();
}

inline void write_gap_report_json(JsonWriter& w, const GapReport& r) {
    w.begin_object();
    w.key("lhs").value(r.lhs);
    w.key("rhs").value(r.rhs);
    w.key("gap").value(r.gap);
    w.key("verdict").value(to_string(r.verdict));
    w.key("asserted").value(r.asserted);
    w.key("context").value(r.context);
    w.end_object();
}

// ---------------------------------------------------------------------------
// sweep output (CSV + SVG)

struct SweepRecord {
    double t = 0.0;
    double s = 0.0;
    double gap = 0.0;     // NaN with singular=true when the antinorm is undefined
    bool singular = false;
};

inline std::string sweep_to_csv(const std::vector<SweepRecord>& recs) {
    std::string out = "t,s,gap\n";
    for (const auto& r : recs) {
        out += fmt17(r.t);
        out += ',';
        out += fmt17(r.s);
        out += ',';
        out += r.singular ? "nan" : fmt17(r.gap);
        out += '\n';
    }
    return out;
}

// Self-contained line chart: one polyline per s, labeled axes, zero line.
inline std::string sweep_to_svg(const std::vector<SweepRecord>& recs) {
    const double W = 800, H = 600, ml = 70, mr = 20, mt = 30, mb = 50;
    double tmin = 0, tmax = 0, gmin = 0, gmax = 0;
    bool first = true;
    std::vector<double> s_values;
    for (const auto& r : recs) {
        if (r.singular || !std::isfinite(r.gap)) continue;
        if (first) { tmin = tmax = r.t; gmin = gmax = r.gap; first = false; }
        tmin = std::min(tmin, r.t); tmax = std::max(tmax, r.t);
        gmin = std::min(gmin, r.gap); gmax = std::max(gmax, r.gap);
    }
    if (first) { tmin = 0; tmax = 1; }
    if (gmin > 0) gmin = 0;
    if (gmax < 0) gmax = 0;
    if (gmax - gmin < 1e-30) { gmax += 1; gmin -= 1; }
    if (tmax - tmin < 1e-30) tmax = tmin + 1;
    for (const auto& r : recs) {
        bool seen = false;
        for (double s : s_values) seen |= (s == r.s);
        if (!seen) s_values.push_back(r.s);
    }
    auto px = [&](double t) { return ml + (t - tmin) / (tmax - tmin) * (W - ml - mr); };
    auto py = [&](double g) { return H - mb - (g - gmin) / (gmax - gmin) * (H - mt - mb); };
    static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                    "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"600\" "
           "viewBox=\"0 0 800 600\">\n";
    svg += "<rect width=\"800\" height=\"600\" fill=\"white\"/>\n";
    // axes
    svg += "<line x1=\"" + fmt17(ml) + "\" y1=\"" + fmt17(H - mb) + "\" x2=\"" + fmt17(W - mr) +
           "\" y2=\"" + fmt17(H - mb) + "\" stroke=\"black\"/>\n";
    svg += "<line x1=\"" + fmt17(ml) + "\" y1=\"" + fmt17(mt) + "\" x2=\"" + fmt17(ml) +
           "\" y2=\"" + fmt17(H - mb) + "\" stroke=\"black\"/>\n";
    // zero line
    svg += "<line x1=\"" + fmt17(ml) + "\" y1=\"" + fmt17(py(0.0)) + "\" x2=\"" + fmt17(W - mr) +
           "\" y2=\"" + fmt17(py(0.0)) + "\" stroke=\"#999999\" stroke-dasharray=\"4 3\"/>\n";
    svg += "<text x=\"" + fmt17((ml + W - mr) / 2) + "\" y=\"" + fmt17(H - 12) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">t</text>\n";
    svg += "<text x=\"18\" y=\"" + fmt17((mt + H - mb) / 2) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\" "
           "transform=\"rotate(-90 18 " + fmt17((mt + H - mb) / 2) + ")\">gap</text>\n";

    int ci = 0;
    for (double s : s_values) {
        std::string pts;
        for (const auto& r : recs) {
            if (r.s != s || r.singular || !std::isfinite(r.gap)) continue;
            pts += fmt17(px(r.t)) + "," + fmt17(py(r.gap)) + " ";
        }
        const char* color = palette[ci % 8];
        svg += "<polyline fill=\"none\" stroke=\"" + std::string(color) +
               "\" stroke-width=\"1.5\" points=\"" + pts + "\"/>\n";
        svg += "<text x=\"" + fmt17(W - mr - 90) + "\" y=\"" + fmt17(mt + 16.0 * (ci + 1)) +
               "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"" + color + "\">s = " +
               fmt17(s) + "</text>\n";
        ++ci;
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace schatten_lab
