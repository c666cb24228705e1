#include "nnpca/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace nnpca {

std::string format_double(double x) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    return out;
}

} // namespace

void write_matrix_file(const std::string& path, const Mat& m) {
    if (m.rows() != m.cols()) throw InvalidParameter("write_matrix_file: matrix must be square");
    auto out = open_out(path);
    const int n = static_cast<int>(m.rows());
    out << n << "\n";
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (j) out << ' ';
            out << format_double(m(i, j));
        }
        out << "\n";
    }
    if (!out) throw std::runtime_error("write failed: " + path);
}

Mat read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    int n = 0;
    if (!(in >> n) || n < 1)
        throw std::runtime_error("bad matrix header in " + path);
    Mat m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!(in >> m(i, j)))
                throw std::runtime_error("truncated matrix data in " + path);
    if (symmetry_gap(m) > 1e-9)
        throw std::runtime_error("matrix in " + path + " is not symmetric (tolerance 1e-9)");
    symmetrize(m);
    return m;
}

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
    auto out = open_out(path);
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (i) out << ',';
        out << header[i];
    }
    out << "\n";
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out << ',';
            out << row[i];
        }
        out << "\n";
    }
    if (!out) throw std::runtime_error("write failed: " + path);
}

namespace {

// Pixel coordinates with fixed precision keep the SVG bytes reproducible.
std::string px(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::fixed, 2);
    return std::string(buf, res.ptr);
}

std::string tick_label(double v) {
    // Trim trailing noise for readable ticks.
    std::ostringstream os;
    os.precision(4);
    os << v;
    return os.str();
}

struct Axis {
    double lo = 0.0, hi = 1.0;
    bool log = false;
    double x0 = 0.0, x1 = 1.0;  // pixel range

    double map(double v) const {
        const double t = log ? (std::log10(v) - std::log10(lo)) / (std::log10(hi) - std::log10(lo))
                             : (v - lo) / (hi - lo);
        return x0 + t * (x1 - x0);
    }

    std::vector<double> ticks() const {
        std::vector<double> out;
        if (log) {
            const int e0 = static_cast<int>(std::floor(std::log10(lo)));
            const int e1 = static_cast<int>(std::ceil(std::log10(hi)));
            for (int e = e0; e <= e1; ++e) {
                const double v = std::pow(10.0, e);
                if (v >= lo * 0.999 && v <= hi * 1.001) out.push_back(v);
            }
            if (out.size() < 2) {
                out = {lo, hi};
            }
        } else {
            const double span = hi - lo;
            const double raw = span / 5.0;
            const double mag = std::pow(10.0, std::floor(std::log10(raw)));
            double step = mag;
            for (double m : {1.0, 2.0, 5.0, 10.0})
                if (raw <= m * mag) {
                    step = m * mag;
                    break;
                }
            const double first = std::ceil(lo / step) * step;
            for (double v = first; v <= hi + 1e-9 * span; v += step) out.push_back(v);
        }
        return out;
    }
};

void span_of(const std::vector<PlotSeries>& series, bool want_y, bool log, double& lo, double& hi) {
    lo = std::numeric_limits<double>::infinity();
    hi = -lo;
    for (const auto& s : series) {
        const auto& vals = want_y ? s.y : s.x;
        for (std::size_t i = 0; i < vals.size(); ++i) {
            double v = vals[i];
            double e = (want_y && s.kind == SeriesKind::error_bars && i < s.yerr.size()) ? s.yerr[i] : 0.0;
            if (log && v - e <= 0.0) {
                if (v > 0.0) lo = std::min(lo, v);
            } else {
                lo = std::min(lo, v - e);
            }
            hi = std::max(hi, v + e);
        }
    }
    if (!std::isfinite(lo) || !std::isfinite(hi)) {
        lo = log ? 0.1 : 0.0;
        hi = 1.0;
    }
    if (lo == hi) {
        lo -= 0.5;
        hi += 0.5;
        if (log) {
            lo = hi / 10.0;
        }
    }
    if (!log) {
        const double pad = 0.05 * (hi - lo);
        lo -= pad;
        hi += pad;
    } else {
        lo /= 1.2;
        hi *= 1.2;
    }
}

} // namespace

void write_svg_plot(const std::string& path, const std::vector<PlotPanel>& panels) {
    const double W = 640.0, PH = 320.0;
    const double ml = 64.0, mr = 16.0, mt = 36.0, mb = 44.0;
    const double H = PH * panels.size();
    auto out = open_out(path);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
        << "\" viewBox=\"0 0 " << W << " " << H << "\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    for (std::size_t p = 0; p < panels.size(); ++p) {
        const auto& panel = panels[p];
        const double top = p * PH;
        Axis ax, ay;
        ax.log = panel.logx;
        ay.log = panel.logy;
        span_of(panel.series, false, ax.log, ax.lo, ax.hi);
        span_of(panel.series, true, ay.log, ay.lo, ay.hi);
        ax.x0 = ml;
        ax.x1 = W - mr;
        ay.x0 = top + PH - mb;  // y axis runs upward in data space
        ay.x1 = top + mt;

        // frame and title
        out << "<rect x=\"" << px(ml) << "\" y=\"" << px(top + mt) << "\" width=\"" << px(W - ml - mr)
            << "\" height=\"" << px(PH - mt - mb) << "\" fill=\"none\" stroke=\"#333\"/>\n";
        out << "<text x=\"" << px(W / 2) << "\" y=\"" << px(top + 20) << "\" text-anchor=\"middle\" "
            << "font-family=\"sans-serif\" font-size=\"14\">" << panel.title << "</text>\n";

        for (double t : ax.ticks()) {
            const double xp = ax.map(t);
            out << "<line x1=\"" << px(xp) << "\" y1=\"" << px(top + PH - mb) << "\" x2=\"" << px(xp)
                << "\" y2=\"" << px(top + PH - mb + 5) << "\" stroke=\"#333\"/>\n";
            out << "<text x=\"" << px(xp) << "\" y=\"" << px(top + PH - mb + 18)
                << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">"
                << tick_label(t) << "</text>\n";
        }
        for (double t : ay.ticks()) {
            const double yp = ay.map(t);
            out << "<line x1=\"" << px(ml - 5) << "\" y1=\"" << px(yp) << "\" x2=\"" << px(ml)
                << "\" y2=\"" << px(yp) << "\" stroke=\"#333\"/>\n";
            out << "<text x=\"" << px(ml - 8) << "\" y=\"" << px(yp + 4)
                << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
                << tick_label(t) << "</text>\n";
        }
        out << "<text x=\"" << px(W / 2) << "\" y=\"" << px(top + PH - 8)
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">"
            << panel.xlabel << "</text>\n";
        out << "<text x=\"14\" y=\"" << px(top + PH / 2)
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\" transform=\"rotate(-90 14 "
            << px(top + PH / 2) << ")\">" << panel.ylabel << "</text>\n";

        double legend_y = top + mt + 16;
        for (const auto& s : panel.series) {
            if (s.kind == SeriesKind::bars) {
                // bars sit on x intervals centered at x[i]; width from spacing
                const double bw = s.x.size() > 1 ? 0.9 * std::abs(ax.map(s.x[1]) - ax.map(s.x[0]))
                                                 : 10.0;
                const double base = ay.map(std::max(ay.lo, 0.0));
                for (std::size_t i = 0; i < s.x.size(); ++i) {
                    const double xc = ax.map(s.x[i]);
                    const double yt = ay.map(s.y[i]);
                    out << "<rect x=\"" << px(xc - bw / 2) << "\" y=\"" << px(std::min(yt, base))
                        << "\" width=\"" << px(bw) << "\" height=\"" << px(std::abs(base - yt))
                        << "\" fill=\"" << s.color << "\" fill-opacity=\"0.7\"/>\n";
                }
            } else {
                out << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.5\" points=\"";
                for (std::size_t i = 0; i < s.x.size(); ++i) {
                    if (i) out << ' ';
                    out << px(ax.map(s.x[i])) << ',' << px(ay.map(s.y[i]));
                }
                out << "\"/>\n";
                for (std::size_t i = 0; i < s.x.size(); ++i) {
                    out << "<circle cx=\"" << px(ax.map(s.x[i])) << "\" cy=\"" << px(ay.map(s.y[i]))
                        << "\" r=\"2.5\" fill=\"" << s.color << "\"/>\n";
                }
                if (s.kind == SeriesKind::error_bars) {
                    for (std::size_t i = 0; i < s.x.size() && i < s.yerr.size(); ++i) {
                        const double xc = ax.map(s.x[i]);
                        double ylo = s.y[i] - s.yerr[i];
                        if (ay.log && ylo <= 0.0) ylo = ay.lo;
                        const double y1p = ay.map(ylo);
                        const double y2p = ay.map(s.y[i] + s.yerr[i]);
                        out << "<line x1=\"" << px(xc) << "\" y1=\"" << px(y1p) << "\" x2=\"" << px(xc)
                            << "\" y2=\"" << px(y2p) << "\" stroke=\"" << s.color << "\"/>\n";
                        out << "<line x1=\"" << px(xc - 4) << "\" y1=\"" << px(y1p) << "\" x2=\"" << px(xc + 4)
                            << "\" y2=\"" << px(y1p) << "\" stroke=\"" << s.color << "\"/>\n";
                        out << "<line x1=\"" << px(xc - 4) << "\" y1=\"" << px(y2p) << "\" x2=\"" << px(xc + 4)
                            << "\" y2=\"" << px(y2p) << "\" stroke=\"" << s.color << "\"/>\n";
                    }
                }
            }
            if (!s.label.empty()) {
                out << "<rect x=\"" << px(ml + 10) << "\" y=\"" << px(legend_y - 9) << "\" width=\"12\" height=\"12\" fill=\""
                    << s.color << "\"/>\n";
                out << "<text x=\"" << px(ml + 27) << "\" y=\"" << px(legend_y + 1)
                    << "\" font-family=\"sans-serif\" font-size=\"11\">" << s.label << "</text>\n";
                legend_y += 16;
            }
        }
    }
    out << "</svg>\n";
    if (!out) throw std::runtime_error("write failed: " + path);
}

} // namespace nnpca
