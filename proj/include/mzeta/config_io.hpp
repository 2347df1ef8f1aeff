#ifndef MZETA_CONFIG_IO_HPP
#define MZETA_CONFIG_IO_HPP

#include <map>
#include <string>
#include <vector>

#include "mzeta/blowup.hpp"
#include "mzeta/model.hpp"
#include "mzeta/qpoly.hpp"

namespace mzeta {

/// Everything a configuration file carries: the divisor data plus optional
/// blow-up scripts and specialization tables.
struct ConfigDocument {
    DivisorConfiguration config;
    std::vector<BlowupSpec> blowups;
    std::map<std::string, QPoly> hodge_table;
    std::map<std::string, Rat> chi_table;

    friend bool operator==(const ConfigDocument&, const ConfigDocument&) = default;
};

/// Parse the JSON document format. Unknown keys are rejected. Throws
/// ParseError for malformed JSON or expressions (with offset) and
/// SchemaError for structural violations (with JSON path).
ConfigDocument parse_config(const std::string& text);

/// Canonical rendering; parse_config(format_config(d)) == d.
std::string format_config(const ConfigDocument& doc);

/// 1-based line and column of a character offset in a text.
std::pair<int, int> line_col(const std::string& text, long offset);

} // namespace mzeta

#endif
