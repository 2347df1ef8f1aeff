#ifndef MZETA_ERRORS_HPP
#define MZETA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mzeta {

/// Textual input could not be read: expression syntax, JSON syntax.
/// `where` names the input (a file, a JSON path); `offset` is a 0-based
/// character position inside that input when known.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::string where = {}, long offset = -1)
        : std::runtime_error(msg), where_(std::move(where)), offset_(offset) {}
    const std::string& where() const { return where_; }
    long offset() const { return offset_; }

private:
    std::string where_;
    long offset_;
};

/// Input parsed but violates the document schema (wrong type, unknown key,
/// finite-type rule, ...). `path` is the JSON path of the offending value.
class SchemaError : public std::runtime_error {
public:
    SchemaError(const std::string& msg, std::string path = {})
        : std::runtime_error(path.empty() ? msg : path + ": " + msg), path_(std::move(path)) {}
    const std::string& path() const { return path_; }

private:
    std::string path_;
};

/// Well-formed input on which the requested operation is undefined:
/// invalid configuration, missing substitution entry, non-invertible
/// element, higher-order pole, invalid blow-up.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace mzeta

#endif
