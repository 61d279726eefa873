#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <variant>

#include "json.hpp"

#include "capax/rational.hpp"
#include "capax/set_function.hpp"
#include "capax/subset.hpp"

namespace capax {

/// Error raised while reading a set-function document; `field()` names the
/// offending part of the input (a JSON field, a sparse key, or a file).
class document_error : public std::runtime_error {
public:
    document_error(std::string field, const std::string& message)
        : std::runtime_error(field + ": " + message), field_(std::move(field)) {}

    const std::string& field() const { return field_; }

private:
    std::string field_;
};

/// A parsed document is exactly one of the two scalar modes; the modes never
/// mix inside a document.
using any_set_function = std::variant<set_function<rational>, set_function<double>>;

inline const char* scalar_mode_name(const any_set_function& f) {
    return std::holds_alternative<set_function<rational>>(f) ? "rational" : "float";
}

inline int document_n(const any_set_function& f) {
    return std::visit([](const auto& g) { return g.n(); }, f);
}

namespace detail {

inline rational parse_rational_value(const nlohmann::json& value, const std::string& where) {
    if (value.is_string()) {
        try {
            return rational::parse(value.get<std::string>());
        } catch (const std::exception& e) {  // bad syntax, zero denominator, overflow
            throw document_error(where, e.what());
        }
    }
    if (value.is_number_integer())
        return rational(value.get<std::int64_t>());
    throw document_error(where,
                         "rational values must be \"p/q\" strings or integers; "
                         "floating-point literals would lose exactness");
}

inline double parse_float_value(const nlohmann::json& value, const std::string& where) {
    if (!value.is_number())
        throw document_error(where, "float values must be JSON numbers");
    return value.get<double>();
}

template <class T, class Parse>
set_function<T> parse_values(const nlohmann::json& doc, const ground_set& ground,
                             Parse&& parse_value) {
    const nlohmann::json& values = doc.at("values");
    set_function<T> out(ground);
    const std::size_t size = std::size_t(ground.full()) + 1;

    if (doc.at("encoding") == "dense") {
        if (!values.is_array())
            throw document_error("values", "dense encoding requires an array");
        if (values.size() != size)
            throw document_error("values",
                                 "dense array must hold exactly 2^n = " + std::to_string(size)
                                 + " entries, got " + std::to_string(values.size()));
        for (std::size_t i = 0; i < size; ++i)
            out[mask_t(i)] = parse_value(values[i], "values[" + std::to_string(i) + "]");
        return out;
    }

    // Sparse: a map from subset key to scalar; absent subsets are zero.
    if (!values.is_object())
        throw document_error("values", "sparse encoding requires an object");
    std::vector<bool> seen(size, false);
    for (const auto& [key, value] : values.items()) {
        mask_t mask = 0;
        try {
            mask = parse_subset(key, ground);
        } catch (const std::invalid_argument& e) {
            throw document_error("values[\"" + key + "\"]", e.what());
        }
        if (seen[mask])
            throw document_error("values[\"" + key + "\"]",
                                 "duplicate key for the subset {" + format_subset(mask) + "}");
        seen[mask] = true;
        out[mask] = parse_value(value, "values[\"" + key + "\"]");
    }
    return out;
}

}  // namespace detail

/// Parses a set-function document. Layout:
///   { "n": 3, "scalarMode": "rational" | "float",
///     "encoding": "dense" | "sparse", "values": ... }
/// Dense values are an array of 2^n scalars in mask order (bit i-1 set iff
/// element i is present); sparse values map subset keys like "1,3" ("" for
/// the empty set) to scalars, with absent subsets equal to zero. Rational
/// scalars are "p/q" strings (plain integers also accepted); float scalars
/// are JSON numbers. Malformed input raises document_error naming the field.
inline any_set_function parse_document(const nlohmann::json& doc) {
    if (!doc.is_object())
        throw document_error("document", "a set-function document must be a JSON object");
    for (const char* required : {"n", "encoding", "scalarMode", "values"})
        if (!doc.contains(required))
            throw document_error(required, "required field is missing");

    const nlohmann::json& n_field = doc.at("n");
    if (!n_field.is_number_integer())
        throw document_error("n", "must be an integer");
    const std::int64_t n = n_field.get<std::int64_t>();
    if (n < 1 || n > ground_set::cap())
        throw document_error("n", "must lie in 1.." + std::to_string(ground_set::cap())
                                  + " (cap set by CAPAX_MAX_N)");
    const ground_set ground(static_cast<int>(n));

    const nlohmann::json& encoding = doc.at("encoding");
    if (encoding != "dense" && encoding != "sparse")
        throw document_error("encoding", "must be \"dense\" or \"sparse\"");

    const nlohmann::json& mode = doc.at("scalarMode");
    if (mode == "rational")
        return detail::parse_values<rational>(doc, ground, detail::parse_rational_value);
    if (mode == "float")
        return detail::parse_values<double>(doc, ground, detail::parse_float_value);
    throw document_error("scalarMode", "must be \"rational\" or \"float\"");
}

/// Canonical JSON form: always dense, fields in a fixed order, rationals as
/// strings. Serializing a parsed document is byte-stable.
inline nlohmann::ordered_json to_json(const set_function<rational>& f) {
    nlohmann::ordered_json doc;
    doc["n"] = f.n();
    doc["scalarMode"] = "rational";
    doc["encoding"] = "dense";
    auto& values = doc["values"] = nlohmann::ordered_json::array();
    for (mask_t m = 0; m <= f.full(); ++m)
        values.push_back(f[m].str());
    return doc;
}

inline nlohmann::ordered_json to_json(const set_function<double>& f) {
    nlohmann::ordered_json doc;
    doc["n"] = f.n();
    doc["scalarMode"] = "float";
    doc["encoding"] = "dense";
    auto& values = doc["values"] = nlohmann::ordered_json::array();
    for (mask_t m = 0; m <= f.full(); ++m)
        values.push_back(f[m]);
    return doc;
}

inline nlohmann::ordered_json to_json(const any_set_function& f) {
    return std::visit([](const auto& g) { return to_json(g); }, f);
}

inline std::string serialize_document(const any_set_function& f) {
    return to_json(f).dump(2) + "\n";
}

inline any_set_function read_document(std::istream& in, const std::string& name = "input") {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw document_error(name, std::string("not valid JSON: ") + e.what());
    }
    return parse_document(doc);
}

inline any_set_function load_document_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw document_error(path, "cannot open file for reading");
    return read_document(in, path);
}

inline void save_document_file(const std::string& path, const any_set_function& f) {
    std::ofstream out(path);
    if (!out)
        throw document_error(path, "cannot open file for writing");
    out << serialize_document(f);
    if (!out)
        throw document_error(path, "failed while writing");
}

}  // namespace capax
