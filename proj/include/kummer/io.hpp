#pragma once

#include <optional>
#include <string>

#include "kummer/components.hpp"
#include "kummer/lattice.hpp"

namespace kummer {

// Malformed document; the message carries the parse location or the
// offending field.
struct format_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Unreadable or unwritable file.
struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// JSON document with "n" and either a 7x7 "matrix" or a length-7 "vector".
struct LatticeQuery {
    Int n = 0;
    std::optional<Mat7> matrix;
    std::optional<Vec7> vector;
};

LatticeQuery parse_lattice_query(const std::string& text);

// JSON document with a symmetric 2x2 "gram" and a length-2 "marked" vector.
struct MarkedPairInput {
    Mat2 gram;
    Vec2 marked;
};

MarkedPairInput parse_pair_input(const std::string& text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace kummer
