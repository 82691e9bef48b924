#pragma once

#include <string>
#include <variant>

#include "qcss/core.hpp"

namespace qcss {

using AnyFamily = std::variant<SequenceFamily, QcssFamily>;

/// Canonical QSEQ1 / QMAT1 text documents. parse(serialize(x)) == x and
/// serialize(parse(doc)) is byte-identical for canonical documents.
std::string serialize(const SequenceFamily& fam);
std::string serialize(const QcssFamily& fam);
std::string serialize(const AnyFamily& fam);

/// Throws ParseError (with a 1-based line number in the message) on malformed input.
AnyFamily parse(const std::string& text);

struct ParseError : std::runtime_error {
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}
    int line;
};

AnyFamily load_family(const std::string& path);
void save_family(const AnyFamily& fam, const std::string& path);

}  // namespace qcss
