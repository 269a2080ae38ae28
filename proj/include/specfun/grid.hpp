#pragma once

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "specfun/errors.hpp"

namespace specfun {

enum class Spacing { linear, log };

struct Grid {
    double min = 1e-3;
    double max = 1e3;
    int count = 100;
    Spacing spacing = Spacing::log;

    Grid() = default;

    Grid(double mn, double mx, int n, Spacing sp) : min(mn), max(mx), count(n), spacing(sp) {
        if (!(min < max)) throw DomainError("grid requires min < max");
        if (count < 2) throw DomainError("grid requires count >= 2");
        if (spacing == Spacing::log && !(min > 0)) throw DomainError("log grid requires min > 0");
    }

    std::vector<double> points() const {
        std::vector<double> p(static_cast<size_t>(count));
        if (spacing == Spacing::linear) {
            double h = (max - min) / (count - 1);
            for (int i = 0; i < count; ++i) p[static_cast<size_t>(i)] = min + h * i;
        } else {
            double la = std::log(min), lb = std::log(max);
            double h = (lb - la) / (count - 1);
            for (int i = 0; i < count; ++i) p[static_cast<size_t>(i)] = std::exp(la + h * i);
        }
        p.front() = min;
        p.back() = max;
        return p;
    }

    std::string to_string() const {
        std::ostringstream os;
        os << min << ":" << max << ":" << count << ":" << (spacing == Spacing::log ? "log" : "lin");
        return os.str();
    }

    static Grid parse(const std::string& text) {
        std::vector<std::string> parts;
        std::string cur;
        for (char c : text) {
            if (c == ':') {
                parts.push_back(cur);
                cur.clear();
            } else {
                cur.push_back(c);
            }
        }
        parts.push_back(cur);
        if (parts.size() != 4) throw UsageError("grid syntax is min:max:count:spacing");
        try {
            double mn = std::stod(parts[0]);
            double mx = std::stod(parts[1]);
            int n = std::stoi(parts[2]);
            Spacing sp;
            if (parts[3] == "log") {
                sp = Spacing::log;
            } else if (parts[3] == "lin" || parts[3] == "linear") {
                sp = Spacing::linear;
            } else {
                throw UsageError("unknown grid spacing '" + parts[3] + "'");
            }
            return Grid(mn, mx, n, sp);
        } catch (const std::invalid_argument&) {
            throw UsageError("malformed grid '" + text + "'");
        } catch (const std::out_of_range&) {
            throw UsageError("grid bounds out of range in '" + text + "'");
        }
    }
};

}  // namespace specfun
