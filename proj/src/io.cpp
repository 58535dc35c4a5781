#include "pgcover/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace pgcover {

using nlohmann::json;

json field_to_json(const FieldSpec& spec) {
    return json{{"p", spec.p()}, {"h", spec.h()}, {"modulus", spec.modulus()}};
}

FieldSpec field_from_json(const json& j) {
    if (!j.is_object() || !j.contains("p") || !j.contains("h"))
        throw std::runtime_error("field object needs \"p\" and \"h\"");
    std::optional<std::vector<int>> modulus;
    if (j.contains("modulus")) modulus = j["modulus"].get<std::vector<int>>();
    return FieldSpec::make(j["p"].get<int>(), j["h"].get<int>(), modulus);
}

namespace {

json rows_json(const Geometry& g, const std::vector<int>& indices) {
    json rows = json::array();
    for (int i : indices) rows.push_back(g.coords(i));
    return rows;
}

std::string set_to_json(const Geometry& g, const std::vector<int>& indices,
                        const char* key) {
    json j{{"n", g.n()},
           {"field", field_to_json(g.field())},
           {key, rows_json(g, indices)}};
    return j.dump(2) + "\n";
}

std::string set_to_text(const Geometry& g, const std::vector<int>& indices) {
    std::ostringstream out;
    out << g.n() << ' ' << g.field().p() << ' ' << g.field().h();
    for (int c : g.field().modulus()) out << ' ' << c;
    out << '\n';
    for (int i : indices) {
        const Vec& v = g.coords(i);
        for (int k = 0; k < (int)v.size(); ++k) out << (k ? " " : "") << v[k];
        out << '\n';
    }
    return out.str();
}

LoadedSet parse_json_set(const std::string& content) {
    json j;
    try {
        j = json::parse(content);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(std::string("JSON parse error: ") + e.what());
    }
    LoadedSet s;
    s.n = j.at("n").get<int>();
    s.spec = field_from_json(j.at("field"));
    const char* key;
    if (j.contains("hyperplanes")) {
        key = "hyperplanes";
        s.is_points = false;
    } else if (j.contains("points")) {
        key = "points";
        s.is_points = true;
    } else {
        throw std::runtime_error("file has neither \"hyperplanes\" nor \"points\"");
    }
    for (const auto& row : j.at(key)) {
        Vec v = row.get<Vec>();
        if ((int)v.size() != s.n + 1)
            throw std::runtime_error("coordinate vector length does not match n+1");
        s.rows.push_back(std::move(v));
    }
    return s;
}

LoadedSet parse_text_set(const std::string& content) {
    std::istringstream in(content);
    std::string line;
    if (!std::getline(in, line))
        throw std::runtime_error("line 1: empty file");
    std::istringstream header(line);
    int n, p, h;
    if (!(header >> n >> p >> h))
        throw std::runtime_error("line 1: expected header `n p h modulus...`");
    std::vector<int> modulus;
    int c;
    while (header >> c) modulus.push_back(c);
    LoadedSet s;
    s.n = n;
    s.spec = modulus.empty() ? FieldSpec::make(p, h)
                             : FieldSpec::make(p, h, modulus);
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream row(line);
        Vec v;
        int x;
        while (row >> x) v.push_back(x);
        if (!row.eof())
            throw std::runtime_error("line " + std::to_string(lineno) +
                                     ": non-integer token");
        if ((int)v.size() != n + 1)
            throw std::runtime_error("line " + std::to_string(lineno) +
                                     ": expected " + std::to_string(n + 1) +
                                     " coordinates");
        s.rows.push_back(std::move(v));
    }
    return s;
}

} // namespace

std::string cover_to_json(const Geometry& g, const PartialCover& s) {
    return set_to_json(g, s.hyps, "hyperplanes");
}

std::string points_to_json(const Geometry& g, const PointSet& b) {
    return set_to_json(g, b.pts, "points");
}

std::string cover_to_text(const Geometry& g, const PartialCover& s) {
    return set_to_text(g, s.hyps);
}

std::string points_to_text(const Geometry& g, const PointSet& b) {
    return set_to_text(g, b.pts);
}

LoadedSet parse_set(const std::string& content) {
    for (char ch : content) {
        if (ch == ' ' || ch == '\n' || ch == '\t' || ch == '\r') continue;
        try {
            return ch == '{' ? parse_json_set(content) : parse_text_set(content);
        } catch (const json::exception& e) {
            throw std::runtime_error(std::string("malformed set file: ") + e.what());
        } catch (const std::invalid_argument& e) {
            throw std::runtime_error(std::string("invalid field parameters: ") +
                                     e.what());
        }
    }
    throw std::runtime_error("empty file");
}

std::string recipe_to_json(const Geometry& g, const Recipe& r) {
    json j{{"kind", r.kind},
           {"n", r.n},
           {"field", field_to_json(g.field())},
           {"a", r.a},
           {"seed", r.seed}};
    json center = json::array();
    for (const auto& row : r.center.basis) center.push_back(row);
    j["center"] = center;
    if (r.dropped_hyperplane >= 0)
        j["dropped_hyperplane"] = g.coords(r.dropped_hyperplane);
    if (!r.omitted.empty()) j["omitted"] = rows_json(g, r.omitted);
    if (r.fixed_point >= 0) j["fixed_point"] = g.coords(r.fixed_point);
    j["extras"] = rows_json(g, r.extras);
    return j.dump(2) + "\n";
}

std::string report_to_json(const Geometry& g, const VerifyReport& r) {
    json j{{"theorem", r.theorem},
           {"n", r.n},
           {"q", r.q},
           {"a", r.a},
           {"mode", r.mode == ScanMode::Exhaustive ? "exhaustive" : "sampled"},
           {"seed", r.seed},
           {"sample_count", r.sample_count},
           {"instances_checked", r.instances_checked},
           {"hypothesis_met_count", r.hypothesis_met_count},
           {"hypothesis_met", r.hypothesis_met},
           {"pass", r.pass()},
           {"wall_time_s", r.wall_time_s}};
    json viols = json::array();
    for (const auto& v : r.violations) viols.push_back(rows_json(g, v.hyps));
    j["violations"] = viols;
    json vpts = json::array();
    for (int p : r.violation_points) vpts.push_back(g.coords(p));
    j["violation_points"] = vpts;
    return j.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

} // namespace pgcover
