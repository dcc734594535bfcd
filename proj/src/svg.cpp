#include "cot/svg.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

#include "cot/experiments.hpp"

namespace cot {

using nlohmann::json;

namespace {

std::string num(double v) { return format_g9(v); }

struct Box {
    double lo_x, hi_x, lo_y, hi_y;
};

Box bounding_box(const PointSet& X, const PointSet& Y) {
    Box b{1e300, -1e300, 0.0, 0.0};
    const bool two_d = X.dim() == 2;
    if (two_d) {
        b.lo_y = 1e300;
        b.hi_y = -1e300;
    }
    for (const PointSet* P : {&X, &Y})
        for (std::size_t i = 0; i < P->size(); ++i) {
            const auto pt = P->point(i);
            b.lo_x = std::min(b.lo_x, pt[0]);
            b.hi_x = std::max(b.hi_x, pt[0]);
            if (two_d) {
                b.lo_y = std::min(b.lo_y, pt[1]);
                b.hi_y = std::max(b.hi_y, pt[1]);
            }
        }
    return b;
}

}  // namespace

std::string render_matching(const Matching& m, const PointSet& X, const PointSet& Y) {
    if (X.dim() > 2)
        throw std::invalid_argument("render_matching: supported only for d in {1, 2}");

    const Box b = bounding_box(X, Y);
    const double span_x = std::max(b.hi_x - b.lo_x, 1e-9);
    const double scale = 400.0 / span_x;
    const double pad = 20.0;
    auto sx = [&](double x) { return pad + (x - b.lo_x) * scale; };

    std::string svg;
    const bool one_d = X.dim() == 1;
    double max_r = 0.0;
    for (const auto& e : m.edges) max_r = std::max(max_r, 0.5 * e.dist * scale);

    if (one_d) {
        const double base = pad + max_r + 10.0;
        const double width = 400.0 + 2.0 * pad;
        const double height = base + pad;
        svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " + num(width) + " " +
               num(height) + "\">\n";
        svg += "<line x1=\"" + num(pad) + "\" y1=\"" + num(base) + "\" x2=\"" + num(pad + 400.0) +
               "\" y2=\"" + num(base) + "\" stroke=\"#888\" stroke-width=\"1\"/>\n";
        for (const auto& e : m.edges) {
            const double xa = sx(X.point(static_cast<std::size_t>(e.i))[0]);
            const double xb = sx(Y.point(static_cast<std::size_t>(e.j))[0]);
            const double x0 = std::min(xa, xb), x1 = std::max(xa, xb);
            const double r = 0.5 * (x1 - x0);
            svg += "<path d=\"M " + num(x0) + " " + num(base) + " A " + num(r) + " " + num(r) +
                   " 0 0 1 " + num(x1) + " " + num(base) +
                   "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
        }
        for (std::size_t i = 0; i < X.size(); ++i)
            svg += "<circle cx=\"" + num(sx(X.point(i)[0])) + "\" cy=\"" + num(base) +
                   "\" r=\"3\" fill=\"red\"/>\n";
        for (std::size_t j = 0; j < Y.size(); ++j)
            svg += "<circle cx=\"" + num(sx(Y.point(j)[0])) + "\" cy=\"" + num(base) +
                   "\" r=\"3\" fill=\"blue\"/>\n";
        svg += "</svg>\n";
        return svg;
    }

    const double span_y = std::max(b.hi_y - b.lo_y, 1e-9);
    const double scale_y = scale;  // uniform scale keeps circles circular
    const double width = 400.0 + 2.0 * pad + 2.0 * max_r;
    const double height = span_y * scale_y + 2.0 * pad + 2.0 * max_r;
    const double off = pad + max_r;
    auto px = [&](double x) { return off + (x - b.lo_x) * scale; };
    auto py = [&](double y) { return off + (b.hi_y - y) * scale_y; };

    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " + num(width) + " " +
           num(height) + "\">\n";
    for (const auto& e : m.edges) {
        const auto a = X.point(static_cast<std::size_t>(e.i));
        const auto c = Y.point(static_cast<std::size_t>(e.j));
        svg += "<circle cx=\"" + num(px(0.5 * (a[0] + c[0]))) + "\" cy=\"" +
               num(py(0.5 * (a[1] + c[1]))) + "\" r=\"" + num(0.5 * e.dist * scale) +
               "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
    }
    for (std::size_t i = 0; i < X.size(); ++i) {
        const auto pt = X.point(i);
        svg += "<circle cx=\"" + num(px(pt[0])) + "\" cy=\"" + num(py(pt[1])) +
               "\" r=\"2\" fill=\"red\"/>\n";
    }
    for (std::size_t j = 0; j < Y.size(); ++j) {
        const auto pt = Y.point(j);
        svg += "<circle cx=\"" + num(px(pt[0])) + "\" cy=\"" + num(py(pt[1])) +
               "\" r=\"2\" fill=\"blue\"/>\n";
    }
    svg += "</svg>\n";
    return svg;
}

std::string matching_to_json(const Matching& m, const std::string& cost_label) {
    json j;
    j["version"] = 1;
    j["method"] = method_name(m.method);
    j["cost"] = cost_label;
    j["perm"] = m.perm;
    json edges = json::array();
    for (const auto& e : m.edges)
        edges.push_back({{"i", e.i}, {"j", e.j}, {"dist", e.dist}, {"cost", e.cost}});
    j["edges"] = edges;
    j["total_cost"] = m.total_cost;
    if (!m.step_minima.empty()) j["step_minima"] = m.step_minima;
    return j.dump(2) + "\n";
}

Matching matching_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(std::string("matching parse error: ") + e.what());
    }
    if (!j.contains("version") || j["version"].get<int>() != 1)
        throw std::runtime_error("matching schema error: unsupported version (field 'version')");
    Matching m;
    const std::string method = j.at("method").get<std::string>();
    if (method == "greedy") m.method = Method::Greedy;
    else if (method == "dyck") m.method = Method::Dyck;
    else if (method == "optimal") m.method = Method::Optimal;
    else if (method == "sorted") m.method = Method::Sorted;
    else if (method == "brute_force") m.method = Method::BruteForce;
    else throw std::runtime_error("matching parse error: unknown method '" + method + "'");
    m.perm = j.at("perm").get<std::vector<int>>();
    for (const auto& e : j.at("edges"))
        m.edges.push_back({e.at("i").get<int>(), e.at("j").get<int>(), e.at("dist").get<double>(),
                           e.at("cost").get<double>()});
    m.total_cost = j.at("total_cost").get<double>();
    if (j.contains("step_minima")) m.step_minima = j["step_minima"].get<std::vector<double>>();
    return m;
}

}  // namespace cot
