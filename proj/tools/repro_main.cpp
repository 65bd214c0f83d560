// sampcard-repro: replays a manifest of CLI invocations and checks each
// recorded expectation against the produced CSV. One report line per check;
// exits nonzero if any check fails.

#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

using json = nlohmann::json;

namespace {

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    for (char c : line) {
        if (c == ',') {
            cells.push_back(cell);
            cell.clear();
        } else if (c != '\r') {
            cell += c;
        }
    }
    cells.push_back(cell);
    return cells;
}

CsvTable parse_csv(const std::string& text) {
    CsvTable table;
    std::istringstream in(text);
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto cells = split_csv_line(line);
        if (first) {
            table.header = std::move(cells);
            first = false;
        } else {
            table.rows.push_back(std::move(cells));
        }
    }
    return table;
}

std::string run_command(const std::string& command_line) {
    std::array<char, 4096> buf;
    std::string out;
    std::unique_ptr<std::FILE, int (*)(std::FILE*)> pipe(popen(command_line.c_str(), "r"), pclose);
    if (!pipe) throw std::runtime_error("cannot launch: " + command_line);
    std::size_t got;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe.get())) > 0) {
        out.append(buf.data(), got);
    }
    return out;
}

std::string shell_quote(const std::string& s) {
    std::string q = "'";
    for (char c : s) {
        if (c == '\'') q += "'\\''";
        else q += c;
    }
    return q + "'";
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    return quoted + "\"";
}

bool cell_matches(const std::string& cell, const json& want) {
    if (want.is_string()) return cell == want.get<std::string>();
    if (want.is_number()) {
        try {
            const double a = std::stod(cell);
            const double b = want.get<double>();
            return std::abs(a - b) <= 1e-9 * std::max({1.0, std::abs(a), std::abs(b)});
        } catch (const std::exception&) {
            return false;
        }
    }
    return false;
}

struct CheckOutcome {
    bool pass = false;
    double value = 0.0;
    std::string detail;
};

CheckOutcome evaluate(const json& check, double value) {
    CheckOutcome out;
    out.value = value;
    const std::string kind = check.at("kind").get<std::string>();
    char detail[160];
    if (kind == "interval") {
        const double lo = check.at("lo").get<double>();
        const double hi = check.at("hi").get<double>();
        out.pass = value >= lo && value <= hi;
        std::snprintf(detail, sizeof detail, "in [%g; %g]", lo, hi);
    } else if (kind == "ratio") {
        const double of = check.at("of").get<double>();
        const double lo = check.at("lo").get<double>();
        const double hi = check.at("hi").get<double>();
        const double ratio = value / of;
        out.pass = ratio >= lo && ratio <= hi;
        std::snprintf(detail, sizeof detail, "ratio %.3f of %g in [%g; %g]", ratio, of, lo, hi);
    } else if (kind == "abs_max") {
        const double mx = check.at("max").get<double>();
        out.pass = std::abs(value) <= mx;
        std::snprintf(detail, sizeof detail, "|value| <= %g", mx);
    } else if (kind == "near") {
        const double of = check.at("of").get<double>();
        const double tol = check.at("tol").get<double>();
        out.pass = std::abs(value - of) <= tol;
        std::snprintf(detail, sizeof detail, "within %g of %g", tol, of);
    } else {
        throw std::runtime_error("unknown check kind: " + kind);
    }
    out.detail = detail;
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"manifest-driven reproduction runner"};
    std::string manifest_path;
    std::string cli_path = "sampcard";
    app.add_option("--manifest", manifest_path, "manifest JSON file")->required();
    app.add_option("--cli", cli_path, "path to the sampcard binary");
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    json manifest;
    {
        std::ifstream in(manifest_path);
        if (!in) {
            std::cerr << "sampcard-repro: cannot open manifest '" << manifest_path << "'\n";
            return 2;
        }
        try {
            in >> manifest;
        } catch (const json::parse_error& e) {
            std::cerr << "sampcard-repro: manifest: " << e.what() << "\n";
            return 2;
        }
    }

    std::map<std::string, CsvTable> outputs;  // command line -> parsed CSV
    std::size_t failures = 0;
    std::size_t total = 0;

    std::cout << "id,metric,value,check,status,source\n";
    for (const json& row : manifest.at("rows")) {
        ++total;
        const std::string id = row.at("id").get<std::string>();
        const std::string source = row.value("source", std::string("model"));

        std::string command_line = shell_quote(cli_path);
        for (const json& arg : row.at("command")) {
            command_line += ' ';
            command_line += shell_quote(arg.get<std::string>());
        }

        auto it = outputs.find(command_line);
        if (it == outputs.end()) {
            it = outputs.emplace(command_line, parse_csv(run_command(command_line))).first;
        }
        const CsvTable& table = it->second;

        std::string status = "FAIL";
        std::string detail = "row not found";
        double value = std::nan("");
        const std::string metric = row.at("metric").get<std::string>();
        for (const auto& cells : table.rows) {
            bool match = true;
            for (const auto& [key, want] : row.at("select").items()) {
                bool key_ok = false;
                for (std::size_t c = 0; c < table.header.size() && c < cells.size(); ++c) {
                    if (table.header[c] == key) {
                        key_ok = cell_matches(cells[c], want);
                        break;
                    }
                }
                if (!key_ok) {
                    match = false;
                    break;
                }
            }
            if (!match) continue;
            for (std::size_t c = 0; c < table.header.size() && c < cells.size(); ++c) {
                if (table.header[c] == metric && !cells[c].empty()) {
                    value = std::stod(cells[c]);
                    const CheckOutcome outcome = evaluate(row.at("check"), value);
                    status = outcome.pass ? "PASS" : "FAIL";
                    detail = outcome.detail;
                }
            }
            break;
        }
        if (status == "FAIL") ++failures;
        std::printf("%s,%s,%.6g,%s,%s,%s\n", csv_field(id).c_str(), metric.c_str(), value,
                    csv_field(detail).c_str(), status.c_str(), source.c_str());
    }

    std::fprintf(stderr, "sampcard-repro: %zu/%zu checks passed\n", total - failures, total);
    return failures == 0 ? 0 : 1;
}
