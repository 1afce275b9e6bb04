#include "gframe/document.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace gframe {

using json = nlohmann::json;

const GFrameFamily& FrameDocument::family(const std::string& name) const {
    const auto it = families.find(name);
    if (it == families.end()) {
        throw ParseError("families", "no family named '" + name + "'");
    }
    return it->second;
}

namespace {

std::string index_path(const std::string& base, std::size_t i) {
    return base + "[" + std::to_string(i) + "]";
}

void reject_unknown_fields(const json& obj, const std::set<std::string>& allowed,
                           const std::string& path) {
    for (const auto& [key, _] : obj.items()) {
        if (!allowed.count(key)) {
            throw ParseError(path.empty() ? key : path + "." + key, "unknown field");
        }
    }
}

const json& require_field(const json& obj, const std::string& key, const std::string& path) {
    const auto it = obj.find(key);
    if (it == obj.end()) {
        throw ParseError(path, "missing field '" + key + "'");
    }
    return *it;
}

Real parse_real(const json& value, const std::string& path) {
    if (!value.is_number()) {
        throw ParseError(path, "expected a number");
    }
    return value.get<Real>();
}

int parse_positive_int(const json& value, const std::string& path) {
    if (!value.is_number_integer() || value.get<long long>() < 1) {
        throw ParseError(path, "expected a positive integer");
    }
    return static_cast<int>(value.get<long long>());
}

Complex parse_complex(const json& value, const std::string& path) {
    if (!value.is_array() || value.size() != 2) {
        throw ParseError(path, "complex entries must be two-element [re, im] arrays");
    }
    return {parse_real(value[0], path + "[0]"), parse_real(value[1], path + "[1]")};
}

MeasureSpace parse_space(const json& obj, const std::string& path) {
    if (!obj.is_object()) {
        throw ParseError(path, "expected an object");
    }
    reject_unknown_fields(obj, {"weights"}, path);
    const std::string wpath = path + ".weights";
    const json& weights = require_field(obj, "weights", path);
    if (!weights.is_array() || weights.empty()) {
        throw ParseError(wpath, "expected a non-empty array of positive numbers");
    }
    MeasureSpace space;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        const Real w = parse_real(weights[i], index_path(wpath, i));
        if (!(w > 0.0) || !std::isfinite(w)) {
            throw ParseError(index_path(wpath, i), "weight must be a finite positive number");
        }
        space.weights.push_back(w);
    }
    return space;
}

GFrameFamily parse_family(const json& obj, const MeasureSpace& space, const std::string& path) {
    if (!obj.is_object()) {
        throw ParseError(path, "expected an object");
    }
    reject_unknown_fields(obj, {"domain_dim", "block_dims", "blocks"}, path);
    GFrameFamily fam;
    fam.space = space;
    fam.domain_dim = parse_positive_int(require_field(obj, "domain_dim", path), path + ".domain_dim");

    const std::string dpath = path + ".block_dims";
    const json& dims = require_field(obj, "block_dims", path);
    if (!dims.is_array() || dims.size() != space.atom_count()) {
        throw ParseError(dpath, "expected one block dimension per atom (" +
                                    std::to_string(space.atom_count()) + ")");
    }
    for (std::size_t i = 0; i < dims.size(); ++i) {
        fam.block_dims.push_back(parse_positive_int(dims[i], index_path(dpath, i)));
    }

    const std::string bpath = path + ".blocks";
    const json& blocks = require_field(obj, "blocks", path);
    if (!blocks.is_array() || blocks.size() != space.atom_count()) {
        throw ParseError(bpath, "expected one block per atom (" +
                                    std::to_string(space.atom_count()) + ")");
    }
    for (std::size_t a = 0; a < blocks.size(); ++a) {
        const std::string apath = index_path(bpath, a);
        const json& rows = blocks[a];
        const int expected_rows = fam.block_dims[a];
        if (!rows.is_array() || static_cast<int>(rows.size()) != expected_rows) {
            throw ParseError(apath, "atom " + std::to_string(a) + " block must have " +
                                        std::to_string(expected_rows) + " rows");
        }
        ComplexMatrix block(expected_rows, fam.domain_dim);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            const std::string rpath = index_path(apath, r);
            const json& row = rows[r];
            if (!row.is_array() || static_cast<int>(row.size()) != fam.domain_dim) {
                throw ParseError(rpath, "atom " + std::to_string(a) + " block row must have " +
                                            std::to_string(fam.domain_dim) + " columns");
            }
            for (std::size_t c = 0; c < row.size(); ++c) {
                block(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
                    parse_complex(row[c], index_path(rpath, c));
            }
        }
        fam.blocks.push_back(std::move(block));
    }
    return fam;
}

json complex_to_json(const Complex& z) {
    return json::array({z.real(), z.imag()});
}

json family_to_json(const GFrameFamily& fam) {
    json blocks = json::array();
    for (const auto& b : fam.blocks) {
        json rows = json::array();
        for (Eigen::Index r = 0; r < b.rows(); ++r) {
            json row = json::array();
            for (Eigen::Index c = 0; c < b.cols(); ++c) {
                row.push_back(complex_to_json(b(r, c)));
            }
            rows.push_back(std::move(row));
        }
        blocks.push_back(std::move(rows));
    }
    return json{{"domain_dim", fam.domain_dim}, {"block_dims", fam.block_dims}, {"blocks", blocks}};
}

void check_shared_layout(const FrameDocument& doc) {
    const std::vector<int>* reference = nullptr;
    std::string reference_name;
    for (const auto& [name, fam] : doc.families) {
        if (reference == nullptr) {
            reference = &fam.block_dims;
            reference_name = name;
        } else if (fam.block_dims != *reference) {
            throw ParseError("families." + name + ".block_dims",
                             "block dimensions differ from family '" + reference_name + "'");
        }
    }
}

} // namespace

FrameDocument parse_document(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError("", std::string("malformed JSON: ") + e.what());
    }
    if (!root.is_object()) {
        throw ParseError("", "document must be a JSON object");
    }
    reject_unknown_fields(root, {"format_version", "seed", "measure_space", "families"}, "");

    FrameDocument doc;
    const json& version = require_field(root, "format_version", "");
    if (!version.is_string() || version.get<std::string>() != kFormatVersion) {
        throw ParseError("format_version",
                         std::string("unrecognized format version (expected ") + kFormatVersion + ")");
    }
    doc.format_version = version.get<std::string>();
    if (const auto it = root.find("seed"); it != root.end()) {
        if (!it->is_number_unsigned()) {
            throw ParseError("seed", "expected a non-negative integer");
        }
        doc.seed = it->get<std::uint64_t>();
    }
    doc.space = parse_space(require_field(root, "measure_space", ""), "measure_space");

    const json& families = require_field(root, "families", "");
    if (!families.is_object() || families.empty()) {
        throw ParseError("families", "expected a non-empty object of named families");
    }
    for (const auto& [name, value] : families.items()) {
        doc.families.emplace(name, parse_family(value, doc.space, "families." + name));
    }
    check_shared_layout(doc);
    return doc;
}

std::string serialize_document(const FrameDocument& doc) {
    json root;
    root["format_version"] = doc.format_version;
    if (doc.seed) {
        root["seed"] = *doc.seed;
    }
    root["measure_space"] = json{{"weights", doc.space.weights}};
    json families = json::object();
    for (const auto& [name, fam] : doc.families) {
        families[name] = family_to_json(fam);
    }
    root["families"] = std::move(families);
    return root.dump(2) + "\n";
}

FrameDocument load_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("", "cannot open '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_document(buffer.str());
}

void save_document(const FrameDocument& doc, const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw ParseError("", "cannot write '" + path + "'");
    }
    out << serialize_document(doc);
}

FrameDocument make_document(const std::map<std::string, GFrameFamily>& families,
                            std::optional<std::uint64_t> seed) {
    if (families.empty()) {
        throw ShapeError("make_document: no families given");
    }
    FrameDocument doc;
    doc.seed = seed;
    doc.space = families.begin()->second.space;
    for (const auto& [name, fam] : families) {
        require_valid(fam);
        if (fam.space != doc.space) {
            throw ShapeError("make_document: family '" + name + "' uses a different measure space");
        }
        doc.families.emplace(name, fam);
    }
    check_shared_layout(doc);
    return doc;
}

ComplexMatrix parse_matrix(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError("matrix", std::string("malformed JSON: ") + e.what());
    }
    if (!root.is_array() || root.empty()) {
        throw ParseError("matrix", "expected a non-empty array of rows");
    }
    const std::size_t cols = root[0].is_array() ? root[0].size() : 0;
    if (cols == 0) {
        throw ParseError("matrix[0]", "expected a non-empty row");
    }
    ComplexMatrix m(root.size(), cols);
    for (std::size_t r = 0; r < root.size(); ++r) {
        const std::string rpath = index_path("matrix", r);
        if (!root[r].is_array() || root[r].size() != cols) {
            throw ParseError(rpath, "rows must all have " + std::to_string(cols) + " entries");
        }
        for (std::size_t c = 0; c < cols; ++c) {
            const json& entry = root[r][c];
            const std::string epath = index_path(rpath, c);
            m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
                entry.is_array() ? parse_complex(entry, epath) : Complex(parse_real(entry, epath), 0.0);
        }
    }
    return m;
}

} // namespace gframe
