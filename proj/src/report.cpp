#include "polylap/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace polylap {

namespace {

std::string opt_double(const std::optional<double>& v) {
    return v ? format_double(*v) : "null";
}

std::string opt_bool(const std::optional<bool>& v) {
    if (!v) return "null";
    return *v ? "true" : "false";
}

std::string csv_opt(const std::optional<double>& v) { return v ? format_double(*v) : "na"; }

std::string csv_verdict(const std::optional<bool>& v) {
    if (!v) return "na";
    return *v ? "true" : "false";
}

}  // namespace

DomainRef domain_ref(const DomainSpec& spec) {
    if (std::holds_alternative<LatticeDomain>(spec))
        return DomainRef{&std::get<LatticeDomain>(spec)};
    return DomainRef{&std::get<AmbientGraph>(spec)};
}

DomainSpec parse_domain(const std::string& text) {
    std::string body = text;
    if (body.empty()) throw std::invalid_argument("empty domain description");
    if (body.front() != '{') {
        std::ifstream in(text);
        if (!in) throw std::invalid_argument("cannot open domain file: " + text);
        std::ostringstream ss;
        ss << in.rdbuf();
        body = ss.str();
    }

    try {
        const nlohmann::json j = nlohmann::json::parse(body);
        const std::string kind = j.at("kind").get<std::string>();
        if (kind == "box") {
            const int d = j.at("d").get<int>();
            return make_box(d, j.at("lo").get<Vertex>(), j.at("hi").get<Vertex>());
        }
        if (kind == "ball") {
            const int d = j.at("d").get<int>();
            return make_ball(d, j.at("center").get<Vertex>(), j.at("r").get<int>());
        }
        if (kind == "explicit") {
            const int d = j.at("d").get<int>();
            return LatticeDomain(d, j.at("vertices").get<std::vector<Vertex>>());
        }
        if (kind == "ambient") {
            const int n = j.at("n").get<int>();
            std::vector<std::pair<int, int>> edges;
            for (const auto& e : j.at("edges")) {
                if (!e.is_array() || e.size() != 2)
                    throw std::invalid_argument("each edge must be a [u, v] pair");
                edges.emplace_back(e[0].get<int>(), e[1].get<int>());
            }
            return AmbientGraph(n, edges, j.at("omega").get<std::vector<int>>());
        }
        throw std::invalid_argument("unknown domain kind: " + kind);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("domain JSON error: ") + e.what());
    }
}

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12e", x);
    return buf;
}

std::string spectrum_to_json(const Spectrum& s) {
    std::string out = "{\"eigenvalues\":[";
    for (std::size_t i = 0; i < s.eigenvalues.size(); ++i) {
        if (i) out += ',';
        out += format_double(s.eigenvalues[i]);
    }
    out += "],\"residual_max\":";
    out += s.residuals ? format_double(s.max_residual()) : "null";
    out += "}";
    return out;
}

std::string bounds_to_json(const BoundsReport& rep) {
    std::string out = "{";
    out += "\"d\":" + std::to_string(rep.d);
    out += ",\"l\":" + std::to_string(rep.l);
    out += ",\"omega_size\":" + std::to_string(rep.omega_size);
    out += ",\"boundary\":{\"l\":" + std::to_string(rep.boundary.l);
    out += ",\"exact\":" + format_double(rep.boundary.exact);
    out += ",\"crude\":" + format_double(rep.boundary.crude) + "}";
    out += ",\"rows\":[";
    for (std::size_t i = 0; i < rep.rows.size(); ++i) {
        const BoundRow& r = rep.rows[i];
        if (i) out += ',';
        out += "{\"k\":" + std::to_string(r.k);
        out += ",\"mean_eigs\":" + format_double(r.mean_eigs);
        out += ",\"upper_mean\":" + opt_double(r.upper_mean);
        out += ",\"next_eig\":" + format_double(r.next_eig);
        out += ",\"upper_next\":" + opt_double(r.upper_next);
        out += ",\"lower_mean\":" + opt_double(r.lower_mean);
        out += ",\"ok_upper_mean\":" + opt_bool(r.ok_upper_mean);
        out += ",\"ok_upper_next\":" + opt_bool(r.ok_upper_next);
        out += ",\"ok_lower_mean\":" + opt_bool(r.ok_lower_mean);
        out += "}";
    }
    out += "],\"all_pass\":";
    out += rep.all_pass() ? "true" : "false";
    out += "}";
    return out;
}

std::string bounds_to_csv(const BoundsReport& rep) {
    std::string out = "k,mean_eigs,upper_mean,next_eig,upper_next,lower_mean,"
                      "ok_upper_mean,ok_upper_next,ok_lower_mean\n";
    for (const BoundRow& r : rep.rows) {
        out += std::to_string(r.k);
        out += ',' + format_double(r.mean_eigs);
        out += ',' + csv_opt(r.upper_mean);
        out += ',' + format_double(r.next_eig);
        out += ',' + csv_opt(r.upper_next);
        out += ',' + csv_opt(r.lower_mean);
        out += ',' + csv_verdict(r.ok_upper_mean);
        out += ',' + csv_verdict(r.ok_upper_next);
        out += ',' + csv_verdict(r.ok_lower_mean);
        out += '\n';
    }
    return out;
}

std::string comparison_to_json(const OrderComparison& cmp) {
    std::string out = "{";
    out += "\"l\":" + std::to_string(cmp.l);
    out += ",\"omega_size\":" + std::to_string(cmp.omega_size);
    out += ",\"rows\":[";
    for (std::size_t i = 0; i < cmp.rows.size(); ++i) {
        const OrderComparisonRow& r = cmp.rows[i];
        if (i) out += ',';
        out += "{\"k\":" + std::to_string(r.k);
        out += ",\"lam_l_sq\":" + format_double(r.lam_l_sq);
        out += ",\"lam_2l\":" + format_double(r.lam_2l);
        out += ",\"gap\":" + format_double(r.gap);
        out += "}";
    }
    out += "],\"all_nonnegative\":";
    out += cmp.all_nonnegative() ? "true" : "false";
    out += "}";
    return out;
}

std::string comparison_to_csv(const OrderComparison& cmp) {
    std::string out = "k,lam_l_sq,lam_2l,gap\n";
    for (const OrderComparisonRow& r : cmp.rows) {
        out += std::to_string(r.k);
        out += ',' + format_double(r.lam_l_sq);
        out += ',' + format_double(r.lam_2l);
        out += ',' + format_double(r.gap);
        out += '\n';
    }
    return out;
}

std::string fourier_check_to_json(const FourierCheck& c) {
    std::string out = "{\"lhs\":" + format_double(c.lhs);
    out += ",\"rhs\":" + format_double(c.rhs);
    out += ",\"rel_err\":" + format_double(c.rel_err);
    out += ",\"grid_n\":" + std::to_string(c.grid_n);
    out += ",\"certificate_ok\":";
    out += c.certificate_ok ? "true" : "false";
    out += "}";
    return out;
}

std::string residual_table_to_json(const ResidualTable& t) {
    std::string out = "{\"d\":" + std::to_string(t.d);
    out += ",\"l\":" + std::to_string(t.l);
    out += ",\"lam\":" + format_double(t.lam);
    out += ",\"rows\":[";
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        if (i) out += ',';
        out += "{\"size\":" + std::to_string(t.rows[i].size);
        out += ",\"omega_size\":" + std::to_string(t.rows[i].omega_size);
        out += ",\"residual\":" + format_double(t.rows[i].residual);
        out += "}";
    }
    out += "]}";
    return out;
}

std::string exhaustion_to_json(const ExhaustionResult& r) {
    std::string out = "{\"d\":" + std::to_string(r.d);
    out += ",\"l\":" + std::to_string(r.l);
    out += ",\"k\":" + std::to_string(r.k);
    out += ",\"steps\":[";
    for (std::size_t i = 0; i < r.steps.size(); ++i) {
        const ExhaustionStep& s = r.steps[i];
        if (i) out += ',';
        out += "{\"size\":" + std::to_string(s.size);
        out += ",\"omega_size\":" + std::to_string(s.omega_size);
        out += ",\"lam_l\":" + format_double(s.lam_l);
        out += ",\"lam1_pow_l\":" + format_double(s.lam1_pow_l);
        out += "}";
    }
    out += "],\"non_increasing\":";
    out += r.non_increasing() ? "true" : "false";
    out += "}";
    return out;
}

std::string exhaustion_to_csv(const ExhaustionResult& r) {
    std::string out = "size,omega_size,lam_l,lam1_pow_l\n";
    for (const ExhaustionStep& s : r.steps) {
        out += std::to_string(s.size);
        out += ',' + std::to_string(s.omega_size);
        out += ',' + format_double(s.lam_l);
        out += ',' + format_double(s.lam1_pow_l);
        out += '\n';
    }
    return out;
}

std::string ratio_series_to_json(const RatioSeries& r) {
    std::string out = "{\"k\":" + std::to_string(r.k);
    out += ",\"reference_c_k\":" + format_double(r.reference);
    out += ",\"entries\":[";
    for (std::size_t i = 0; i < r.entries.size(); ++i) {
        if (i) out += ',';
        out += "{\"n\":" + std::to_string(r.entries[i].n);
        out += ",\"ratio\":" + format_double(r.entries[i].ratio);
        out += "}";
    }
    out += "],\"richardson_limit\":" + opt_double(r.richardson);
    out += ",\"all_below_one\":";
    out += r.all_below_one() ? "true" : "false";
    out += "}";
    return out;
}

std::string ratio_series_to_csv(const RatioSeries& r) {
    std::string out = "n,ratio,reference_c_k\n";
    for (const RatioEntry& e : r.entries) {
        out += std::to_string(e.n);
        out += ',' + format_double(e.ratio);
        out += ',' + format_double(r.reference);
        out += '\n';
    }
    return out;
}

namespace {

std::string svg_coord(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", x);
    return buf;
}

}  // namespace

std::string ratio_series_to_svg(const RatioSeries& r) {
    constexpr double width = 640, height = 480;
    constexpr double ml = 70, mr = 20, mt = 30, mb = 50;
    const double pw = width - ml - mr, ph = height - mt - mb;

    double x_lo = std::log2(static_cast<double>(r.entries.front().n));
    double x_hi = std::log2(static_cast<double>(r.entries.back().n));
    if (x_hi <= x_lo) x_hi = x_lo + 1.0;
    double y_lo = 0.0, y_hi = 1.0;

    const auto px = [&](double n) { return ml + (std::log2(n) - x_lo) / (x_hi - x_lo) * pw; };
    const auto py = [&](double v) { return mt + (y_hi - v) / (y_hi - y_lo) * ph; };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"480\" "
           "viewBox=\"0 0 640 480\">\n";
    svg += "<rect x=\"0\" y=\"0\" width=\"640\" height=\"480\" fill=\"white\"/>\n";

    // axes
    svg += "<line x1=\"" + svg_coord(ml) + "\" y1=\"" + svg_coord(mt) + "\" x2=\"" + svg_coord(ml) +
           "\" y2=\"" + svg_coord(mt + ph) + "\" stroke=\"black\"/>\n";
    svg += "<line x1=\"" + svg_coord(ml) + "\" y1=\"" + svg_coord(mt + ph) + "\" x2=\"" +
           svg_coord(ml + pw) + "\" y2=\"" + svg_coord(mt + ph) + "\" stroke=\"black\"/>\n";

    // y ticks at 0, 0.25, 0.5, 0.75, 1
    for (int t = 0; t <= 4; ++t) {
        const double v = 0.25 * t;
        svg += "<line x1=\"" + svg_coord(ml - 4) + "\" y1=\"" + svg_coord(py(v)) + "\" x2=\"" +
               svg_coord(ml) + "\" y2=\"" + svg_coord(py(v)) + "\" stroke=\"black\"/>\n";
        char label[16];
        std::snprintf(label, sizeof label, "%.2f", v);
        svg += "<text x=\"" + svg_coord(ml - 8) + "\" y=\"" + svg_coord(py(v) + 4) +
               "\" text-anchor=\"end\" font-size=\"12\">" + label + "</text>\n";
    }
    // x ticks at the data points
    for (const RatioEntry& e : r.entries) {
        const double x = px(e.n);
        svg += "<line x1=\"" + svg_coord(x) + "\" y1=\"" + svg_coord(mt + ph) + "\" x2=\"" +
               svg_coord(x) + "\" y2=\"" + svg_coord(mt + ph + 4) + "\" stroke=\"black\"/>\n";
        svg += "<text x=\"" + svg_coord(x) + "\" y=\"" + svg_coord(mt + ph + 18) +
               "\" text-anchor=\"middle\" font-size=\"12\">" + std::to_string(e.n) + "</text>\n";
    }

    // reference line c_k
    svg += "<line class=\"reference\" x1=\"" + svg_coord(ml) + "\" y1=\"" + svg_coord(py(r.reference)) +
           "\" x2=\"" + svg_coord(ml + pw) + "\" y2=\"" + svg_coord(py(r.reference)) +
           "\" stroke=\"red\" stroke-dasharray=\"6,4\"/>\n";
    svg += "<text x=\"" + svg_coord(ml + pw - 4) + "\" y=\"" + svg_coord(py(r.reference) - 6) +
           "\" text-anchor=\"end\" font-size=\"12\" fill=\"red\">c_" + std::to_string(r.k) + " = " +
           format_double(r.reference) + "</text>\n";

    // data polyline
    svg += "<polyline fill=\"none\" stroke=\"blue\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < r.entries.size(); ++i) {
        if (i) svg += ' ';
        svg += svg_coord(px(r.entries[i].n)) + "," + svg_coord(py(r.entries[i].ratio));
    }
    svg += "\"/>\n";
    for (const RatioEntry& e : r.entries) {
        svg += "<circle cx=\"" + svg_coord(px(e.n)) + "\" cy=\"" + svg_coord(py(e.ratio)) +
               "\" r=\"2.5\" fill=\"blue\"/>\n";
    }

    svg += "<text x=\"" + svg_coord(ml + pw / 2) + "\" y=\"" + svg_coord(height - 8) +
           "\" text-anchor=\"middle\" font-size=\"13\">path length n</text>\n";
    svg += "<text x=\"16\" y=\"" + svg_coord(mt + ph / 2) +
           "\" text-anchor=\"middle\" font-size=\"13\" transform=\"rotate(-90 16 " +
           svg_coord(mt + ph / 2) + ")\">eigenvalue ratio</text>\n";
    svg += "</svg>\n";
    return svg;
}

}  // namespace polylap
