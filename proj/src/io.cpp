#include "shards/io.hpp"

#include "shards/error.hpp"

#include <set>

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace shards {

using nlohmann::json;

std::string rat_to_string(const Rat& x) {
    std::ostringstream os;
    if (denominator(x) == 1) os << numerator(x);
    else os << numerator(x) << "/" << denominator(x);
    return os.str();
}

Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
    } catch (const std::exception&) {
        fail("InvalidInput", "bad rational: " + s);
    }
}

namespace {

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::string cur;
    for (char ch : s + ",") {
        if (ch == ',') {
            if (!cur.empty()) out.push_back(std::stoi(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    return out;
}

std::string int_list(const std::vector<int>& v) {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(v[i]);
    }
    return out;
}

// "a-b" where a may be negative and b is positive for B representatives;
// for plain type A both are positive
std::pair<int, int> parse_endpoints(const std::string& s) {
    size_t dash = s.find('-', s.empty() || s[0] != '-' ? 0 : 1);
    require(dash != std::string::npos, "InvalidInput", "expected a-b endpoints: " + s);
    try {
        return {std::stoi(s.substr(0, dash)), std::stoi(s.substr(dash + 1))};
    } catch (const std::exception&) {
        fail("InvalidInput", "bad endpoints: " + s);
    }
}

struct ArcParts {
    int a, b;
    std::vector<int> above, below;
};

ArcParts parse_arc_parts(const std::string& s) {
    auto p1 = s.find("|A=");
    auto p2 = s.find("|B=");
    require(p1 != std::string::npos && p2 != std::string::npos && p1 < p2, "InvalidInput",
            "expected a-b|A=..|B=..: " + s);
    ArcParts parts;
    std::tie(parts.a, parts.b) = parse_endpoints(s.substr(0, p1));
    parts.above = parse_int_list(s.substr(p1 + 3, p2 - p1 - 3));
    parts.below = parse_int_list(s.substr(p2 + 3));
    return parts;
}

} // namespace

std::string arc_to_string(const Arc& arc) {
    return std::to_string(arc.a) + "-" + std::to_string(arc.b) +
           "|A=" + int_list(mask_elems(arc.above)) + "|B=" + int_list(mask_elems(arc.below));
}

Arc arc_from_string(const std::string& s, int n) {
    ArcParts p = parse_arc_parts(s);
    Arc arc{p.a, p.b, mask_of(p.above), mask_of(p.below), n};
    validate_arc(arc, true);
    return arc;
}

std::string barc_to_string(const BArc& b) {
    int n = b.nb;
    std::vector<int> above, below;
    for (int e : mask_elems(b.rep.above)) above.push_back(ground_to_signed(e, n));
    for (int e : mask_elems(b.rep.below)) below.push_back(ground_to_signed(e, n));
    return std::to_string(ground_to_signed(b.rep.a, n)) + "-" +
           std::to_string(ground_to_signed(b.rep.b, n)) + "|A=" + int_list(above) +
           "|B=" + int_list(below);
}

BArc barc_from_string(const std::string& s, int n) {
    ArcParts p = parse_arc_parts(s);
    return make_barc(arc_to_ground(p.a, p.b, p.above, p.below, n), n);
}

std::string ideal_to_string(const ArcIdeal& ideal) {
    std::string out;
    for (const Arc& arc : ideal.arcs) out += arc_to_string(arc) + "\n";
    return out;
}

ArcIdeal ideal_from_string(const std::string& text, int n) {
    std::vector<Arc> arcs;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        arcs.push_back(arc_from_string(line, n));
    }
    return make_ideal(n, std::move(arcs));
}

std::string b_ideal_to_string(const BArcIdeal& ideal) {
    std::string out;
    for (const BArc& b : ideal.barcs) out += barc_to_string(b) + "\n";
    return out;
}

BArcIdeal b_ideal_from_string(const std::string& text, int n) {
    std::vector<BArc> barcs;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        barcs.push_back(barc_from_string(line, n));
    }
    return make_b_ideal(n, std::move(barcs));
}

std::string matching_to_string(const Arc& arc, const Matching& m) {
    std::string out;
    std::set<int> used(m.begin(), m.end());
    for (int i = arc.a; i <= arc.b; ++i) {
        bool start = i == arc.a || has(arc.above, i);
        bool end = i == arc.b || has(arc.below, i);
        if (!used.count(i)) out += "·";
        else if (start && !end) out += "●";
        else if (end && !start) out += "○";
        else out += used.count(i) ? "●" : "·";
    }
    return out;
}

std::string polytope_to_json(const VPolytope& v) {
    json j;
    j["n"] = v.n;
    j["kind"] = v.kind == Kind::A ? "A" : "B";
    json verts = json::array();
    for (const Vec& p : v.verts) {
        json row = json::array();
        for (const Rat& x : p) row.push_back(rat_to_string(x));
        verts.push_back(row);
    }
    j["vertices"] = verts;
    const FanFrame& f = FanFrame::get(v.kind, v.n);
    SupportVector s = support_from_vertices(v);
    json sup = json::object();
    for (int r = 0; r < f.num_rays(); ++r) {
        std::vector<int> e(f.ray(r).begin(), f.ray(r).end());
        sup[int_list(e)] = rat_to_string(s.s[r]);
    }
    j["support"] = sup;
    return j.dump(2);
}

VPolytope polytope_from_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    require(!j.is_discarded(), "InvalidInput", "bad polytope JSON");
    require(j.contains("n") && j.contains("kind"), "InvalidInput", "polytope JSON needs n, kind");
    int n = j["n"].get<int>();
    Kind kind = j["kind"].get<std::string>() == "B" ? Kind::B : Kind::A;
    std::vector<Vec> pts;
    if (j.contains("vertices")) {
        for (const auto& row : j["vertices"]) {
            Vec p;
            for (const auto& x : row) p.push_back(rat_from_string(x.get<std::string>()));
            require(int(p.size()) == n, "InvalidInput", "vertex of wrong dimension");
            pts.push_back(std::move(p));
        }
        return hull_of_points(std::move(pts), kind, n);
    }
    require(j.contains("support"), "InvalidInput", "polytope JSON needs vertices or support");
    const FanFrame& f = FanFrame::get(kind, n);
    SupportVector s{&f, std::vector<Rat>(f.num_rays())};
    for (const auto& [key, val] : j["support"].items()) {
        SignedSet set = signed_set_from_string(key);
        s.s[f.ray_index(set)] = rat_from_string(val.get<std::string>());
    }
    return vertices_from_support(s);
}

std::string support_to_json(const SupportVector& s) {
    return polytope_to_json(vertices_from_support(s));
}

std::string coeffs_to_json(const CoeffVector& c) {
    json j;
    j["basis"] = c.basis == BasisKind::s ? "s" : (c.basis == BasisKind::y ? "y" : "z");
    j["n"] = c.n;
    json e = json::object();
    for (Mask k : subsets_ge2_canonical(c.n)) {
        Rat v = c.at(k);
        if (v != 0) e[int_list(mask_elems(k))] = rat_to_string(v);
    }
    j["entries"] = e;
    return j.dump(2);
}

CoeffVector coeffs_from_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    require(!j.is_discarded(), "InvalidInput", "bad coefficient JSON");
    CoeffVector c;
    std::string basis = j["basis"].get<std::string>();
    c.basis = basis == "s" ? BasisKind::s : (basis == "y" ? BasisKind::y : BasisKind::z);
    c.n = j["n"].get<int>();
    for (const auto& [key, val] : j["entries"].items()) {
        Mask m = subset_from_string(key);
        require(popcount(m) >= 2, "InvalidInput", "coefficient keys need size >= 2");
        c.set(m, rat_from_string(val.get<std::string>()));
    }
    return c;
}

std::string subset_fn_to_json(const SubsetFn& f, int n) {
    json j = json::object();
    for (Mask k : subsets_ge2_canonical(n))
        if (f.count(k)) j[int_list(mask_elems(k))] = rat_to_string(f.at(k));
    return j.dump(2);
}

SubsetFn subset_fn_from_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    require(!j.is_discarded(), "InvalidInput", "bad function JSON");
    SubsetFn f;
    for (const auto& [key, val] : j.items())
        f[subset_from_string(key)] = rat_from_string(val.get<std::string>());
    return f;
}

std::string graph_to_json(const ShardGraph& g) {
    json j;
    j["vertices"] = g.num_vertices;
    json edges = json::array();
    for (const auto& e : g.edges) edges.push_back({{"u", e.u}, {"v", e.v}, {"label", e.label}});
    j["edges"] = edges;
    return j.dump(2);
}

std::string signed_set_to_string(const SignedSet& s) {
    return int_list(std::vector<int>(s.begin(), s.end()));
}

SignedSet signed_set_from_string(const std::string& text) {
    SignedSet s = parse_int_list(text);
    std::sort(s.begin(), s.end());
    return s;
}

Mask subset_from_string(const std::string& text) {
    Mask m = 0;
    for (int v : parse_int_list(text)) {
        require(v >= 1, "InvalidInput", "subset elements must be positive");
        m |= bit(v);
    }
    return m;
}

std::string render_arc_svg(const std::vector<Arc>& arcs, int n) {
    int w = 60 * (n + 1), h = 180;
    std::ostringstream os;
    os << "<svg xmlns='http://www.w3.org/2000/svg' width='" << w << "' height='" << h << "'>\n";
    int base = h / 2;
    for (int i = 1; i <= n; ++i)
        os << "<circle cx='" << 60 * i << "' cy='" << base << "' r='4' fill='black'/>\n";
    for (const Arc& arc : arcs) {
        os << "<path d='M " << 60 * arc.a << " " << base;
        for (int i = arc.a + 1; i <= arc.b; ++i) {
            int y = base;
            if (i < arc.b) y = has(arc.above, i) ? base - 40 : base + 40;
            int xm = 60 * i - 30;
            int ym = i == arc.a + 1 && arc.b - arc.a == 1 ? base - 30 : (y + base) / 2 - 10;
            os << " Q " << xm << " " << ym << " " << 60 * i << " " << y;
        }
        os << "' fill='none' stroke='crimson' stroke-width='2'/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

std::string render_polytope2d_svg(const VPolytope& v) {
    // project to the first two coordinates of the slice
    std::vector<std::pair<double, double>> pts;
    for (const Vec& p : v.verts)
        pts.push_back({p[0].convert_to<double>(),
                       v.n >= 2 ? p[1].convert_to<double>() : 0.0});
    double minx = 1e9, maxx = -1e9, miny = 1e9, maxy = -1e9;
    for (auto [x, y] : pts) {
        minx = std::min(minx, x); maxx = std::max(maxx, x);
        miny = std::min(miny, y); maxy = std::max(maxy, y);
    }
    double scale = 320 / std::max({maxx - minx, maxy - miny, 1.0});
    auto tx = [&](double x) { return 40 + (x - minx) * scale; };
    auto ty = [&](double y) { return 40 + (maxy - y) * scale; };
    // sort the points around their centroid for a polygon outline
    double cx = 0, cy = 0;
    for (auto [x, y] : pts) { cx += x; cy += y; }
    cx /= pts.size(); cy /= pts.size();
    std::sort(pts.begin(), pts.end(), [&](auto p, auto q) {
        return std::atan2(p.second - cy, p.first - cx) < std::atan2(q.second - cy, q.first - cx);
    });
    std::ostringstream os;
    os << "<svg xmlns='http://www.w3.org/2000/svg' width='400' height='400'>\n<polygon points='";
    for (auto [x, y] : pts) os << tx(x) << "," << ty(y) << " ";
    os << "' fill='none' stroke='steelblue' stroke-width='2'/>\n";
    for (auto [x, y] : pts)
        os << "<circle cx='" << tx(x) << "' cy='" << ty(y) << "' r='3' fill='black'/>\n";
    os << "</svg>\n";
    return os.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    require(in.good(), "InvalidInput", "cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    require(out.good(), "InvalidInput", "cannot write " + path);
    out << content;
}

} // namespace shards
