#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace symdet::csv {

using Row = std::vector<std::string>;

// RFC 4180 quoting: fields containing comma, quote, or newline are wrapped
// in double quotes with embedded quotes doubled.
std::string escape(std::string_view field);

void write(std::ostream& out, const Row& header, const std::vector<Row>& rows);

// Atomic file write: temp file in the same directory, then rename.
void write_file(const std::string& path, const Row& header,
                const std::vector<Row>& rows);

// Parses a full CSV document (quoted fields supported) into rows, header
// included.
std::vector<Row> read(std::istream& in);
std::vector<Row> read_file(const std::string& path);

}  // namespace symdet::csv
