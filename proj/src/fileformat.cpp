#include "leibniz/fileformat.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace leibniz {

namespace {

using ordered_json = nlohmann::ordered_json;

/// 1-based line/column of a byte offset in text.
std::pair<int, int> line_column(const std::string& text, std::size_t offset) {
    int line = 1, col = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

ordered_json parse_json(const std::string& text) {
    try {
        return ordered_json::parse(text);
    } catch (const ordered_json::parse_error& e) {
        auto [line, col] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
        std::ostringstream msg;
        msg << "syntax error at line " << line << ", column " << col;
        throw ParseError(msg.str(), line, col);
    }
}

const ordered_json& require_field(const ordered_json& obj, const char* key,
                                  const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end())
        throw ParseError(std::string("missing field \"") + key + "\" in " + where);
    return *it;
}

std::string require_string(const ordered_json& v, const char* what) {
    if (!v.is_string()) throw ParseError(std::string(what) + " must be a string");
    return v.get<std::string>();
}

Rational require_rational(const ordered_json& v, const std::string& where) {
    if (!v.is_string())
        throw ParseError("non-rational coefficient in " + where + " (expected a string)");
    auto q = parse_rational(v.get<std::string>());
    if (!q)
        throw ParseError("non-rational coefficient \"" + v.get<std::string>() + "\" in " + where);
    return *q;
}

int label_index(const AlgebraTable& t, const std::string& label, const std::string& where) {
    const int i = t.index_of(label);
    if (i < 0) throw ParseError("unknown basis label \"" + label + "\" in " + where);
    return i;
}

Vec parse_value_map(const ordered_json& value, const AlgebraTable& target,
                    const std::string& where) {
    if (!value.is_object()) throw ParseError("\"value\" must be an object in " + where);
    Vec coeffs = zero_vec(target.dim());
    for (auto it = value.begin(); it != value.end(); ++it) {
        const int k = label_index(target, it.key(), where);
        coeffs[k] = require_rational(it.value(), where);
    }
    return coeffs;
}

ordered_json value_map_json(const Vec& coeffs, const AlgebraTable& target) {
    ordered_json value = ordered_json::object();
    for (int k = 0; k < target.dim(); ++k)
        if (coeffs[k] != 0) value[target.basis[k]] = to_string(coeffs[k]);
    return value;
}

}  // namespace

AlgebraTable parse_algebra(const std::string& text) {
    ordered_json doc = parse_json(text);
    if (!doc.is_object()) throw ParseError("top-level value must be an object");

    const std::string name = require_string(require_field(doc, "name", "algebra"), "\"name\"");
    const ordered_json& dim_v = require_field(doc, "dim", "algebra");
    if (!dim_v.is_number_integer()) throw ParseError("\"dim\" must be an integer");
    const int dim = dim_v.get<int>();

    const ordered_json& basis_v = require_field(doc, "basis", "algebra");
    if (!basis_v.is_array()) throw ParseError("\"basis\" must be an array of strings");
    std::vector<std::string> labels;
    std::set<std::string> seen;
    for (const auto& b : basis_v) {
        std::string label = require_string(b, "basis label");
        if (label.empty()) throw ParseError("empty basis label");
        if (!seen.insert(label).second) throw ParseError("duplicate basis label \"" + label + "\"");
        labels.push_back(std::move(label));
    }
    if (static_cast<int>(labels.size()) != dim)
        throw ParseError("\"dim\" is " + std::to_string(dim) + " but \"basis\" lists " +
                         std::to_string(labels.size()) + " labels");

    AlgebraTable table = make_algebra(name, labels);

    auto products_it = doc.find("products");
    if (products_it != doc.end()) {
        if (!products_it->is_array()) throw ParseError("\"products\" must be an array");
        std::set<std::pair<int, int>> pairs;
        for (const auto& entry : *products_it) {
            if (!entry.is_object()) throw ParseError("product entry must be an object");
            const std::string left =
                require_string(require_field(entry, "left", "product entry"), "\"left\"");
            const std::string right =
                require_string(require_field(entry, "right", "product entry"), "\"right\"");
            const std::string where = "product (" + left + ", " + right + ")";
            const int i = label_index(table, left, where);
            const int j = label_index(table, right, where);
            if (!pairs.insert({i, j}).second)
                throw ParseError("duplicate product entry for (" + left + ", " + right + ")");
            table.set_product(i, j, parse_value_map(require_field(entry, "value", where),
                                                    table, where));
        }
    }
    return table;
}

std::string serialize_algebra(const AlgebraTable& a) {
    ordered_json doc;
    doc["name"] = a.name;
    doc["dim"] = a.dim();
    doc["basis"] = a.basis;
    ordered_json products = ordered_json::array();
    for (int i = 0; i < a.dim(); ++i) {
        for (int j = 0; j < a.dim(); ++j) {
            if (is_zero_vec(a.product(i, j))) continue;
            ordered_json entry;
            entry["left"] = a.basis[i];
            entry["right"] = a.basis[j];
            entry["value"] = value_map_json(a.product(i, j), a);
            products.push_back(std::move(entry));
        }
    }
    doc["products"] = std::move(products);
    return doc.dump(2) + "\n";
}

BilinearMap parse_cocycle(const std::string& text, const AlgebraTable& g, const AlgebraTable& h) {
    ordered_json doc = parse_json(text);
    if (!doc.is_object()) throw ParseError("top-level value must be an object");
    const ordered_json& entries = require_field(doc, "entries", "cocycle");
    if (!entries.is_array()) throw ParseError("\"entries\" must be an array");

    BilinearMap w(g.dim(), h.dim());
    std::set<std::pair<int, int>> pairs;
    for (const auto& entry : entries) {
        if (!entry.is_object()) throw ParseError("cocycle entry must be an object");
        const std::string left =
            require_string(require_field(entry, "left", "cocycle entry"), "\"left\"");
        const std::string right =
            require_string(require_field(entry, "right", "cocycle entry"), "\"right\"");
        const std::string where = "cocycle entry (" + left + ", " + right + ")";
        const int i = label_index(g, left, where);
        const int j = label_index(g, right, where);
        if (!pairs.insert({i, j}).second)
            throw ParseError("duplicate cocycle entry for (" + left + ", " + right + ")");
        Vec value = parse_value_map(require_field(entry, "value", where), h, where);
        for (int t = 0; t < h.dim(); ++t) w.at(i, j, t) = value[t];
    }
    return w;
}

std::string serialize_cocycle(const BilinearMap& w, const AlgebraTable& g, const AlgebraTable& h) {
    ordered_json entries = ordered_json::array();
    for (int i = 0; i < g.dim(); ++i) {
        for (int j = 0; j < g.dim(); ++j) {
            Vec value = w.value(i, j);
            if (is_zero_vec(value)) continue;
            ordered_json entry;
            entry["left"] = g.basis[i];
            entry["right"] = g.basis[j];
            entry["value"] = value_map_json(value, h);
            entries.push_back(std::move(entry));
        }
    }
    ordered_json doc;
    doc["entries"] = std::move(entries);
    return doc.dump(2) + "\n";
}

AlgebraTable load_algebra_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_algebra(buf.str());
}

void save_algebra_file(const AlgebraTable& a, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write file: " + path);
    out << serialize_algebra(a);
}

}  // namespace leibniz
