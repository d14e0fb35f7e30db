#include "comptonlab/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "comptonlab/errors.hpp"

namespace comptonlab {

namespace {

void require_finite_value(double v) {
    if (!std::isfinite(v))
        throw tolerance_error("serialize: refusing to write a non-finite value");
}

std::string json_quote(std::string_view s) {
    std::string out;
    out.reserve(s.size() + 2);
    out.push_back('"');
    for (char c : s) {
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        default:
            if (static_cast<unsigned char>(c) < 0x20) {
                char buf[8];
                std::snprintf(buf, sizeof buf, "\\u%04x", c);
                out += buf;
            } else {
                out.push_back(c);
            }
        }
    }
    out.push_back('"');
    return out;
}

void write_metadata_json(std::ostream& os,
                         const std::map<std::string, std::string>& metadata) {
    os << "{";
    bool first = true;
    for (const auto& [key, value] : metadata) {
        if (!first) os << ",";
        first = false;
        os << json_quote(key) << ":" << json_quote(value);
    }
    os << "}";
}

void write_number_array(std::ostream& os, const std::vector<double>& values) {
    os << "[";
    for (std::size_t i = 0; i < values.size(); ++i) {
        require_finite_value(values[i]);
        if (i != 0) os << ",";
        os << format_sig9(values[i]);
    }
    os << "]";
}

void write_axis_json(std::ostream& os, const Axis& axis) {
    os << "{\"name\":" << json_quote(axis.name)
       << ",\"units\":" << json_quote(axis.units) << ",\"values\":";
    write_number_array(os, axis.values);
    os << "}";
}

} // namespace

std::string format_sig9(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

void write_grid_csv(std::ostream& os, const SweepGrid& grid) {
    os << grid.y.name << "," << grid.x.name << "," << grid.value_name << "\n";
    for (std::size_t i = 0; i < grid.y.values.size(); ++i) {
        const std::string yv = format_sig9(grid.y.values[i]);
        for (std::size_t j = 0; j < grid.x.values.size(); ++j) {
            const double v = grid.at(i, j);
            require_finite_value(v);
            os << yv << "," << format_sig9(grid.x.values[j]) << ","
               << format_sig9(v) << "\n";
        }
    }
}

void write_grid_json(std::ostream& os, const SweepGrid& grid) {
    os << "{\"metadata\":";
    write_metadata_json(os, grid.metadata);
    os << ",\"axes\":{\"x\":";
    write_axis_json(os, grid.x);
    os << ",\"y\":";
    write_axis_json(os, grid.y);
    os << "},\"value_name\":" << json_quote(grid.value_name) << ",\"values\":[";
    for (std::size_t i = 0; i < grid.y.values.size(); ++i) {
        if (i != 0) os << ",";
        os << "[";
        for (std::size_t j = 0; j < grid.x.values.size(); ++j) {
            const double v = grid.at(i, j);
            require_finite_value(v);
            if (j != 0) os << ",";
            os << format_sig9(v);
        }
        os << "]";
    }
    os << "]}\n";
}

void write_fig3_csv(std::ostream& os, const Fig3Panel& panel) {
    os << "series,theta0_rad,theta1_rad\n";
    for (const AnglePair& p : panel.equiprobable.pairs)
        os << "equiprobable," << format_sig9(p.theta0) << ","
           << format_sig9(p.theta1) << "\n";
    for (const ContourPolyline& line : panel.contours) {
        const std::string label = "contour_" + format_sig9(line.target);
        for (std::size_t i = 0; i < line.theta0.size(); ++i)
            os << label << "," << format_sig9(line.theta0[i]) << ","
               << format_sig9(line.theta1[i]) << "\n";
    }
}

void write_fig3_json(std::ostream& os, const Fig3Panel& panel) {
    std::map<std::string, std::string> metadata{
        {"artifact", "compton-lab"},
        {"generator", "fig3"},
        {"epsilon", format_sig9(panel.epsilon)},
        {"equiprobable_skipped", std::to_string(panel.equiprobable.skipped)}};

    os << "{\"metadata\":";
    write_metadata_json(os, metadata);
    os << ",\"axes\":{},\"values\":{\"xsection\":{\"theta_rad\":";
    write_number_array(os, panel.theta);
    os << ",\"value\":";
    write_number_array(os, panel.xsection);
    os << "},\"equiprobable\":{\"theta0_rad\":[";
    for (std::size_t i = 0; i < panel.equiprobable.pairs.size(); ++i) {
        if (i != 0) os << ",";
        os << format_sig9(panel.equiprobable.pairs[i].theta0);
    }
    os << "],\"theta1_rad\":[";
    for (std::size_t i = 0; i < panel.equiprobable.pairs.size(); ++i) {
        if (i != 0) os << ",";
        os << format_sig9(panel.equiprobable.pairs[i].theta1);
    }
    os << "],\"delta_lambda_rel\":[";
    for (std::size_t i = 0; i < panel.equiprobable.pairs.size(); ++i) {
        if (i != 0) os << ",";
        os << format_sig9(panel.equiprobable.pairs[i].delta_lambda_rel);
    }
    os << "]},\"contours\":[";
    for (std::size_t k = 0; k < panel.contours.size(); ++k) {
        const ContourPolyline& line = panel.contours[k];
        if (k != 0) os << ",";
        os << "{\"target\":" << format_sig9(line.target) << ",\"theta0_rad\":";
        write_number_array(os, line.theta0);
        os << ",\"theta1_rad\":";
        write_number_array(os, line.theta1);
        os << ",\"skipped\":" << line.skipped << "}";
    }
    os << "]}}\n";
}

void write_record_csv(std::ostream& os, const ScalarRecord& record) {
    for (std::size_t i = 0; i < record.fields.size(); ++i) {
        if (i != 0) os << ",";
        os << record.fields[i].first;
    }
    os << "\n";
    for (std::size_t i = 0; i < record.fields.size(); ++i) {
        if (i != 0) os << ",";
        os << record.fields[i].second;
    }
    os << "\n";
}

void write_record_json(std::ostream& os, const ScalarRecord& record) {
    os << "{\"metadata\":";
    write_metadata_json(os, record.metadata);
    os << ",\"axes\":{},\"values\":{";
    for (std::size_t i = 0; i < record.fields.size(); ++i) {
        if (i != 0) os << ",";
        os << json_quote(record.fields[i].first) << ":";
        // Numeric fields were preformatted by add(); text fields get quoted.
        const std::string& v = record.fields[i].second;
        const bool numeric = !v.empty() && (std::isdigit(static_cast<unsigned char>(v[0])) ||
                                            v[0] == '-' || v[0] == '+');
        os << (numeric ? v : json_quote(v));
    }
    os << "}}\n";
}

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (char c : bytes) {
        hash ^= static_cast<unsigned char>(c);
        hash *= 0x100000001b3ULL;
    }
    return hash;
}

std::string fnv1a64_hex(std::string_view bytes) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fnv1a64(bytes)));
    return buf;
}

} // namespace comptonlab
