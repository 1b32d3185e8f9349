#include "guechan/output.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "guechan/error.hpp"

namespace guechan {

const char* const kVersion = "0.1.0";

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string to_csv(const CurveTable& table) {
    std::ostringstream os;
    os << "t,value";
    if (table.std_error) os << ",std_error";
    if (table.norm) os << "," << (table.norm_label.empty() ? "value_norm" : table.norm_label);
    os << "\n";
    for (std::size_t i = 0; i < table.t.size(); ++i) {
        os << format_double(table.t[i]) << "," << format_double(table.value[i]);
        if (table.std_error) os << "," << format_double((*table.std_error)[i]);
        if (table.norm) os << "," << format_double(table.value[i] / *table.norm);
        os << "\n";
    }
    return os.str();
}

std::string to_json(const CurveTable& table) {
    std::ostringstream os;
    auto arr = [&os](const std::vector<double>& v) {
        os << "[";
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) os << ",";
            os << format_double(v[i]);
        }
        os << "]";
    };
    os << "{\n";
    os << "  \"kind\": \"" << table.kind << "\",\n";
    os << "  \"n\": " << table.n << ",\n";
    os << "  \"grid\": \"" << table.grid << "\",\n";
    os << "  \"seed\": " << table.seed << ",\n";
    os << "  \"version\": \"" << kVersion << "\",\n";
    os << "  \"t\": ";
    arr(table.t);
    os << ",\n  \"value\": ";
    arr(table.value);
    if (table.std_error) {
        os << ",\n  \"std_error\": ";
        arr(*table.std_error);
    }
    if (table.norm) {
        os << ",\n  \"norm\": " << format_double(*table.norm);
    }
    os << "\n}\n";
    return os.str();
}

void write_file_atomic(const std::string& path, const std::string& contents) {
    std::filesystem::path target(path);
    std::filesystem::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot open " + tmp.string() + " for writing");
        out << contents;
        out.flush();
        if (!out) {
            std::error_code ec;
            std::filesystem::remove(tmp, ec);
            throw Error("write failed for " + tmp.string());
        }
    }
    std::filesystem::rename(tmp, target);
}

}  // namespace guechan
