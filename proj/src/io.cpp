#include "brt/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace brt {
namespace {

double parse_double(const std::string& field, const std::string& path, int line) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(field, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != field.size() || field.empty()) {
        std::ostringstream m;
        m << path << ":" << line << ": cannot parse number \"" << field << "\"";
        throw std::runtime_error(m.str());
    }
    return v;
}

} // namespace

std::vector<Point> read_points_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open points file " + path);
    std::string line;
    int lineno = 0;
    if (!std::getline(in, line)) throw std::runtime_error(path + ": empty points file");
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "x,y") throw std::runtime_error(path + ":1: expected header \"x,y\"");
    std::vector<Point> pts;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto comma = line.find(',');
        if (comma == std::string::npos) {
            std::ostringstream m;
            m << path << ":" << lineno << ": expected \"x,y\" row";
            throw std::runtime_error(m.str());
        }
        pts.push_back({parse_double(line.substr(0, comma), path, lineno),
                       parse_double(line.substr(comma + 1), path, lineno)});
    }
    return pts;
}

void write_points_csv(const std::string& path, const std::vector<Point>& pts) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write points file " + path);
    out << "x,y\n";
    char buf[64];
    for (const auto& p : pts) {
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", p.x, p.y);
        out << buf;
    }
}

Measure read_measure_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open measure file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return Measure::from_json(ss.str());
}

void write_measure_json(const std::string& path, const Measure& m) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write measure file " + path);
    out << m.to_json();
}

} // namespace brt
