#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "bss/bench/runner.hpp"

namespace bss {

// Fixed column set:
//   domain, heuristic, algorithm, lambda_num, lambda_den, W_num, W_den,
//   bound_variant, instance_id, status, cost, cstar, quality, expansions_f,
//   expansions_b, generated, lb_terminal_num, lb_terminal_den, wall_ms
// Identical records produce byte-identical output except for wall_ms.
extern const char* const kCsvHeader;

void emit_csv(const std::vector<RunRecord>& records, std::ostream& out);
void emit_csv(const std::vector<RunRecord>& records, const std::string& path);

// Simple reader for the same format (no quoting; fields contain no commas).
std::vector<std::vector<std::string>> parse_csv(std::istream& in);
std::vector<std::vector<std::string>> parse_csv_file(const std::string& path);

// Per-(algorithm, lambda) aggregation: mean expansions, mean quality over
// records with C*, and expansions per second of search wall time.
void emit_summary(const std::vector<RunRecord>& records, std::ostream& out);

} // namespace bss
