#include "kummer/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace kummer {

namespace {

using nlohmann::json;

json parse_document(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw format_error(e.what());  // nlohmann reports the byte position
    }
}

Int integer_field(const json& v, const std::string& where) {
    if (!v.is_number_integer())
        throw format_error(where + " must be an integer");
    return v.get<Int>();
}

template <typename Vec>
Vec read_vector(const json& v, int size, const std::string& where) {
    if (!v.is_array() || static_cast<int>(v.size()) != size)
        throw format_error(where + " must be an array of " + std::to_string(size) +
                           " integers");
    Vec out;
    for (int i = 0; i < size; ++i)
        out(i) = integer_field(v[i], where + "[" + std::to_string(i) + "]");
    return out;
}

template <typename Mat>
Mat read_matrix(const json& v, int size, const std::string& where) {
    if (!v.is_array() || static_cast<int>(v.size()) != size)
        throw format_error(where + " must be an array of " + std::to_string(size) +
                           " rows");
    Mat out;
    for (int i = 0; i < size; ++i) {
        const std::string row_name = where + "[" + std::to_string(i) + "]";
        const json& row = v[i];
        if (!row.is_array() || static_cast<int>(row.size()) != size)
            throw format_error(row_name + " must be an array of " +
                               std::to_string(size) + " integers");
        for (int j = 0; j < size; ++j)
            out(i, j) = integer_field(row[j], row_name + "[" + std::to_string(j) + "]");
    }
    return out;
}

}  // namespace

LatticeQuery parse_lattice_query(const std::string& text) {
    const json doc = parse_document(text);
    if (!doc.is_object()) throw format_error("document must be an object");
    if (!doc.contains("n")) throw format_error("field 'n' is missing");
    LatticeQuery out;
    out.n = integer_field(doc["n"], "field 'n'");
    const bool has_matrix = doc.contains("matrix");
    const bool has_vector = doc.contains("vector");
    if (has_matrix == has_vector)
        throw format_error("exactly one of 'matrix' and 'vector' is required");
    if (has_matrix)
        out.matrix = read_matrix<Mat7>(doc["matrix"], 7, "field 'matrix'");
    else
        out.vector = read_vector<Vec7>(doc["vector"], 7, "field 'vector'");
    return out;
}

MarkedPairInput parse_pair_input(const std::string& text) {
    const json doc = parse_document(text);
    if (!doc.is_object()) throw format_error("document must be an object");
    if (!doc.contains("gram")) throw format_error("field 'gram' is missing");
    if (!doc.contains("marked")) throw format_error("field 'marked' is missing");
    MarkedPairInput out;
    out.gram = read_matrix<Mat2>(doc["gram"], 2, "field 'gram'");
    if (out.gram(0, 1) != out.gram(1, 0))
        throw format_error("field 'gram' must be symmetric");
    out.marked = read_vector<Vec2>(doc["marked"], 2, "field 'marked'");
    return out;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw io_error("read failure: " + path);
    return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("cannot write file: " + path);
    out << content;
    out.flush();
    if (!out) throw io_error("write failure: " + path);
}

}  // namespace kummer
