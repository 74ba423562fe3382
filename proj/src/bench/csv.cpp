#include "bss/bench/csv.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace bss {

const char* const kCsvHeader =
    "domain,heuristic,algorithm,lambda_num,lambda_den,W_num,W_den,bound_variant,"
    "instance_id,status,cost,cstar,quality,expansions_f,expansions_b,generated,"
    "lb_terminal_num,lb_terminal_den,wall_ms";

namespace {

std::string format_quality(double q) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", q);
    return buf;
}

std::string format_wall_ms(double ms) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", ms);
    return buf;
}

} // namespace

void emit_csv(const std::vector<RunRecord>& records, std::ostream& out) {
    out << kCsvHeader << '\n';
    for (const RunRecord& r : records) {
        out << r.domain << ',' << r.heuristic << ',' << to_string(r.algorithm) << ','
            << r.lambda.num() << ',' << r.lambda.den() << ',' << r.weight.num() << ','
            << r.weight.den() << ',' << to_string(r.bound) << ',' << r.instance_id << ','
            << to_string(r.status) << ',';
        if (r.cost) out << *r.cost;
        out << ',';
        if (r.cstar) out << *r.cstar;
        out << ',';
        if (r.quality) out << format_quality(*r.quality);
        out << ',' << r.expansions_f << ',' << r.expansions_b << ',' << r.generated << ','
            << r.terminal_lb.num() << ',' << r.terminal_lb.den() << ','
            << format_wall_ms(r.wall_ms) << '\n';
    }
}

void emit_csv(const std::vector<RunRecord>& records, const std::string& path) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw std::runtime_error(path + ": cannot open for writing");
    emit_csv(records, out);
    if (!out) throw std::runtime_error(path + ": write failed");
}

std::vector<std::vector<std::string>> parse_csv(std::istream& in) {
    std::vector<std::vector<std::string>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::string field;
        std::istringstream row(line);
        while (std::getline(row, field, ',')) fields.push_back(field);
        if (!line.empty() && line.back() == ',') fields.emplace_back();
        rows.push_back(std::move(fields));
    }
    return rows;
}

std::vector<std::vector<std::string>> parse_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(path + ": cannot open");
    return parse_csv(in);
}

void emit_summary(const std::vector<RunRecord>& records, std::ostream& out) {
    if (records.empty()) throw std::invalid_argument("summary: no records");
    struct Agg {
        std::uint64_t runs = 0;
        std::uint64_t expansions = 0;
        double quality_sum = 0;
        std::uint64_t quality_count = 0;
        double wall_ms = 0;
        std::uint64_t failures = 0;
    };
    std::map<std::string, Agg> groups;
    for (const RunRecord& r : records) {
        std::string key = to_string(r.algorithm);
        if (r.algorithm == Algorithm::WBAE) key += "(" + r.lambda_choice.label() + ")";
        Agg& a = groups[key];
        ++a.runs;
        a.expansions += r.expansions();
        a.wall_ms += r.wall_ms;
        if (r.quality) {
            a.quality_sum += *r.quality;
            ++a.quality_count;
        }
        if (r.status != SearchStatus::Solved) ++a.failures;
    }
    out << "algorithm            runs    mean-exp     mean-quality   exp/sec     failures\n";
    for (const auto& [key, a] : groups) {
        double mean_exp = static_cast<double>(a.expansions) / static_cast<double>(a.runs);
        double eps = a.wall_ms > 0 ? static_cast<double>(a.expansions) / (a.wall_ms / 1000.0) : 0;
        char line[160];
        if (a.quality_count > 0)
            std::snprintf(line, sizeof line, "%-20s %-7llu %-12.1f %-14.4f %-11.0f %llu\n",
                          key.c_str(), static_cast<unsigned long long>(a.runs), mean_exp,
                          a.quality_sum / static_cast<double>(a.quality_count), eps,
                          static_cast<unsigned long long>(a.failures));
        else
            std::snprintf(line, sizeof line, "%-20s %-7llu %-12.1f %-14s %-11.0f %llu\n",
                          key.c_str(), static_cast<unsigned long long>(a.runs), mean_exp, "-",
                          eps, static_cast<unsigned long long>(a.failures));
        out << line;
    }
}

} // namespace bss
