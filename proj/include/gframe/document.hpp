#pragma once

// FrameDocument: a JSON file holding one measure space and named families.
//
//   {
//     "format_version": "gframe-doc/1",
//     "seed": 7,                                  (optional)
//     "measure_space": { "weights": [1.0, 2.0] },
//     "families": {
//       "lambda": {
//         "domain_dim": 1,
//         "block_dims": [1, 1],
//         "blocks": [ [[[1, 0]]], [[[0, 0]]] ]    atom -> row -> col -> [re, im]
//       }
//     }
//   }

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "gframe/core.hpp"

namespace gframe {

inline constexpr const char* kFormatVersion = "gframe-doc/1";

class ParseError : public Error {
public:
    ParseError(std::string path, const std::string& message)
        : Error(path.empty() ? message : path + ": " + message), path_(std::move(path)) {}

    const std::string& path() const { return path_; }

private:
    std::string path_;
};

struct FrameDocument {
    std::string format_version = kFormatVersion;
    std::optional<std::uint64_t> seed;
    MeasureSpace space;
    std::map<std::string, GFrameFamily> families;

    const GFrameFamily& family(const std::string& name) const;
};

// Strict: unknown fields, non-numeric entries, shape inconsistencies and
// non-positive weights raise ParseError with the path of the offending element.
FrameDocument parse_document(const std::string& text);
std::string serialize_document(const FrameDocument& doc);

FrameDocument load_document(const std::string& path);
void save_document(const FrameDocument& doc, const std::string& path);

// Builds a document from families sharing one measure space and block layout.
FrameDocument make_document(const std::map<std::string, GFrameFamily>& families,
                            std::optional<std::uint64_t> seed = std::nullopt);

// Parses a matrix literal: nested rows whose entries are numbers or
// [re, im] pairs, e.g. "[[1, 0], [0, [0, 1]]]".
ComplexMatrix parse_matrix(const std::string& text);

} // namespace gframe
