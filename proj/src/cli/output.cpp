#include "output.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "sjj/version.hpp"

namespace sjj::cli {

namespace {

nlohmann::ordered_json cell_json(const Cell& c) {
    if (const auto* d = std::get_if<double>(&c)) {
        if (!std::isfinite(*d)) return nullptr;
        return std::stod(format_number(*d));
    }
    if (const auto* i = std::get_if<long long>(&c)) return *i;
    return std::get<std::string>(c);
}

std::string cell_text(const Cell& c) {
    if (const auto* d = std::get_if<double>(&c)) return format_number(*d);
    if (const auto* i = std::get_if<long long>(&c)) return std::to_string(*i);
    return std::get<std::string>(c);
}

}  // namespace

std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (v == 0.0) return "0";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string render_csv(const Document& doc) {
    std::string s = "# sjj " + std::string(kVersion) + " " + doc.command + " " + doc.config.dump() + "\n";
    for (std::size_t i = 0; i < doc.columns.size(); ++i) {
        if (i) s += ',';
        s += doc.columns[i];
    }
    s += '\n';
    for (const auto& row : doc.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) s += ',';
            s += cell_text(row[i]);
        }
        s += '\n';
    }
    return s;
}

std::string render_json(const Document& doc) {
    nlohmann::ordered_json j;
    j["version"] = kVersion;
    j["command"] = doc.command;
    j["config"] = doc.config;
    if (doc.body.is_object()) {
        for (auto it = doc.body.begin(); it != doc.body.end(); ++it) j[it.key()] = it.value();
    } else {
        j["columns"] = doc.columns;
        auto rows = nlohmann::ordered_json::array();
        for (const auto& row : doc.rows) {
            auto r = nlohmann::ordered_json::array();
            for (const auto& c : row) r.push_back(cell_json(c));
            rows.push_back(std::move(r));
        }
        j["rows"] = std::move(rows);
    }
    return j.dump(2) + "\n";
}

void write_file_atomically(const std::string& path, const std::string& content) {
    const std::string partial = path + ".partial";
    {
        std::ofstream f(partial, std::ios::binary | std::ios::trunc);
        if (!f) throw std::runtime_error("cannot open '" + partial + "' for writing");
        f.write(content.data(), static_cast<std::streamsize>(content.size()));
        f.close();
        if (!f) {
            std::error_code ec;
            std::filesystem::remove(partial, ec);
            throw std::runtime_error("failed writing '" + partial + "'");
        }
    }
    std::error_code ec;
    std::filesystem::rename(partial, path, ec);
    if (ec) {
        std::filesystem::remove(partial, ec);
        throw std::runtime_error("cannot rename '" + partial + "' to '" + path + "'");
    }
}

}  // namespace sjj::cli
