#include "trislice/tables_io.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <system_error>

namespace trislice {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string csv_field(const std::string& raw) {
    if (raw.find_first_of(",\"\n\r") == std::string::npos) return raw;
    std::string quoted = "\"";
    for (char ch : raw) {
        if (ch == '"') quoted += '"';
        quoted += ch;
    }
    quoted += '"';
    return quoted;
}

std::string rows_to_csv(const std::vector<TableRow>& rows) {
    std::string out = "family,k,n,num,den\n";
    for (const TableRow& r : rows)
        out += csv_field(r.family) + "," + std::to_string(r.k) + "," + std::to_string(r.n) + "," +
               r.value.num_str() + "," + r.value.den_str() + "\n";
    return out;
}

std::string rows_to_json(const std::vector<TableRow>& rows) {
    ordered_json arr = ordered_json::array();
    for (const TableRow& r : rows)
        arr.push_back(ordered_json{{"family", r.family},
                                   {"k", r.k},
                                   {"n", r.n},
                                   {"num", r.value.num_str()},
                                   {"den", r.value.den_str()}});
    return dump(arr);
}

std::string oracle_to_csv(const std::vector<OracleRow>& rows) {
    std::string out = "F,k,oracle_count,series_count,match\n";
    for (const OracleRow& r : rows)
        out += std::to_string(r.F) + "," + std::to_string(r.k) + "," +
               std::to_string(r.oracle_count) + "," + r.series_count.num_str() + "," +
               (r.match ? "true" : "false") + "\n";
    return out;
}

std::string oracle_to_json(const std::vector<OracleRow>& rows) {
    ordered_json arr = ordered_json::array();
    for (const OracleRow& r : rows)
        arr.push_back(ordered_json{{"F", r.F},
                                   {"k", r.k},
                                   {"oracle_count", r.oracle_count},
                                   {"series_count", r.series_count.num_str()},
                                   {"match", r.match}});
    return dump(arr);
}

std::string report_to_csv(const std::vector<ReportRow>& rows) {
    std::string out = "check,status,detail\n";
    for (const ReportRow& r : rows)
        out += csv_field(r.check) + "," + (r.pass ? "pass" : "fail") + "," + csv_field(r.detail) +
               "\n";
    return out;
}

std::string report_to_json(const std::vector<ReportRow>& rows) {
    ordered_json arr = ordered_json::array();
    for (const ReportRow& r : rows)
        arr.push_back(ordered_json{
            {"check", r.check}, {"status", r.pass ? "pass" : "fail"}, {"detail", r.detail}});
    return dump(arr);
}

void atomic_write(const std::string& path, const std::string& payload) {
    namespace fs = std::filesystem;
    fs::path target(path);
    fs::path tmp(path + ".tmp");
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        f.write(payload.data(), (std::streamsize)payload.size());
        f.flush();
        if (!f) throw std::runtime_error("write to " + tmp.string() + " failed");
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw std::runtime_error("cannot move table into place at " + target.string());
    }
}

}  // namespace trislice
