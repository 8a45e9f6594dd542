// Copyright 2026 The prs-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "prslab/report.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "prslab/errors.hpp"

namespace prslab::lab {

namespace {

std::string fmt(double v) {
    std::ostringstream ss;
    ss.precision(4);
    ss << v;
    return ss.str();
}

std::string escape_xml(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b"};

}  // namespace

nlohmann::json Flag::to_json() const {
    return {{"name", name}, {"pass", pass}, {"value", value}, {"relation", relation}, {"bound", bound}, {"anchor", anchor}};
}

Flag flag_le(std::string name, double value, double bound, std::string anchor) {
    return {std::move(name), value <= bound, value, "<=", bound, std::move(anchor)};
}

Flag flag_ge(std::string name, double value, double bound, std::string anchor) {
    return {std::move(name), value >= bound, value, ">=", bound, std::move(anchor)};
}

Flag flag_eq(std::string name, double value, double target, double tol, std::string anchor) {
    return {std::move(name), std::abs(value - target) <= tol, value, "==", target, std::move(anchor)};
}

std::string render_svg(const Chart& chart) {
    const double W = 640, H = 400, left = 70, right = 170, top = 40, bottom = 50;
    double xmin = INFINITY, xmax = -INFINITY, ymin = INFINITY, ymax = -INFINITY;
    auto ty = [&](double y) { return chart.log_y ? std::log10(std::max(y, 1e-300)) : y; };
    for (const auto& s : chart.series) {
        for (std::size_t i = 0; i < s.x.size() && i < s.y.size(); ++i) {
            if (!std::isfinite(s.y[i]) || (chart.log_y && s.y[i] <= 0)) continue;
            xmin = std::min(xmin, s.x[i]);
            xmax = std::max(xmax, s.x[i]);
            ymin = std::min(ymin, ty(s.y[i]));
            ymax = std::max(ymax, ty(s.y[i]));
        }
    }
    if (!std::isfinite(xmin)) xmin = 0, xmax = 1, ymin = 0, ymax = 1;
    if (xmax == xmin) xmax = xmin + 1;
    if (!chart.log_y) ymin = std::min(ymin, 0.0);
    if (ymax == ymin) ymax = ymin + 1;
    double pad = 0.05 * (ymax - ymin);
    ymax += pad;
    auto px = [&](double x) { return left + (x - xmin) / (xmax - xmin) * (W - left - right); };
    auto py = [&](double y) { return top + (1.0 - (ty(y) - ymin) / (ymax - ymin)) * (H - top - bottom); };

    std::ostringstream o;
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
      << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
    o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    o << "<text x=\"" << W / 2 << "\" y=\"20\" text-anchor=\"middle\" font-size=\"14\">" << escape_xml(chart.title)
      << "</text>\n";
    o << "<line x1=\"" << left << "\" y1=\"" << H - bottom << "\" x2=\"" << W - right << "\" y2=\"" << H - bottom
      << "\" stroke=\"black\"/>\n";
    o << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left << "\" y2=\"" << H - bottom
      << "\" stroke=\"black\"/>\n";
    for (int i = 0; i <= 4; ++i) {
        double fx = xmin + (xmax - xmin) * i / 4.0;
        double fy = ymin + (ymax - ymin) * i / 4.0;
        double yval = chart.log_y ? std::pow(10.0, fy) : fy;
        o << "<text x=\"" << px(fx) << "\" y=\"" << H - bottom + 15 << "\" text-anchor=\"middle\">" << fmt(fx)
          << "</text>\n";
        double yy = top + (1.0 - (fy - ymin) / (ymax - ymin)) * (H - top - bottom);
        o << "<text x=\"" << left - 5 << "\" y=\"" << yy + 4 << "\" text-anchor=\"end\">" << fmt(yval) << "</text>\n";
        o << "<line x1=\"" << left << "\" y1=\"" << yy << "\" x2=\"" << W - right << "\" y2=\"" << yy
          << "\" stroke=\"#eee\"/>\n";
    }
    o << "<text x=\"" << (left + W - right) / 2 << "\" y=\"" << H - 12 << "\" text-anchor=\"middle\">"
      << escape_xml(chart.x_label) << "</text>\n";
    o << "<text transform=\"translate(16," << (top + H - bottom) / 2 << ") rotate(-90)\" text-anchor=\"middle\">"
      << escape_xml(chart.y_label) << "</text>\n";
    for (std::size_t si = 0; si < chart.series.size(); ++si) {
        const auto& s = chart.series[si];
        const char* color = kPalette[si % std::size(kPalette)];
        std::ostringstream pts;
        for (std::size_t i = 0; i < s.x.size() && i < s.y.size(); ++i) {
            if (!std::isfinite(s.y[i]) || (chart.log_y && s.y[i] <= 0)) continue;
            pts << px(s.x[i]) << ',' << py(s.y[i]) << ' ';
            o << "<circle cx=\"" << px(s.x[i]) << "\" cy=\"" << py(s.y[i]) << "\" r=\"3\" fill=\"" << color
              << "\"/>\n";
        }
        o << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"" << pts.str()
          << "\"/>\n";
        double ly = top + 15 * static_cast<double>(si);
        o << "<rect x=\"" << W - right + 10 << "\" y=\"" << ly << "\" width=\"10\" height=\"10\" fill=\"" << color
          << "\"/>\n";
        o << "<text x=\"" << W - right + 25 << "\" y=\"" << ly + 9 << "\">" << escape_xml(s.label) << "</text>\n";
    }
    o << "</svg>\n";
    return o.str();
}

std::string render_csv(const Table& table) {
    std::ostringstream o;
    for (std::size_t i = 0; i < table.header.size(); ++i) o << (i ? "," : "") << csv_cell(table.header[i]);
    o << "\n";
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) o << (i ? "," : "") << csv_cell(row[i]);
        o << "\n";
    }
    return o.str();
}

bool Report::all_pass() const {
    return std::all_of(flags.begin(), flags.end(), [](const Flag& f) { return f.pass; });
}

nlohmann::json Report::to_json(bool include_timing) const {
    nlohmann::json flags_json = nlohmann::json::array();
    for (const auto& f : flags) flags_json.push_back(f.to_json());
    nlohmann::json j = {{"experiment", experiment},
                        {"tool_version", kToolVersion},
                        {"config", config},
                        {"metrics", metrics},
                        {"flags", flags_json},
                        {"all_pass", all_pass()}};
    if (include_timing) j["wall_seconds"] = wall_seconds;
    return j;
}

std::vector<std::filesystem::path> write_report(const Report& report, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    std::vector<std::filesystem::path> written;
    auto put = [&](const std::string& ext, const std::string& body) {
        auto path = dir / (report.experiment + ext);
        std::ofstream out(path);
        if (!out) throw ResourceError("cannot write " + path.string());
        out << body;
        written.push_back(path);
    };
    put(".json", report.to_json().dump(2) + "\n");
    if (report.table) put(".csv", render_csv(*report.table));
    if (report.chart) put(".svg", render_svg(*report.chart));
    return written;
}

}  // namespace prslab::lab
