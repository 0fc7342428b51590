#include "lefschetz/model_io.hpp"

#include "lefschetz/errors.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace lefschetz {

using nlohmann::json;

namespace {

json components_json(const BigradedSpace& s) {
    json arr = json::array();
    for (const auto& [key, c] : s.components())
        arr.push_back({{"n", key.n}, {"k", key.k}, {"dim", c.dim}, {"basis_labels", c.labels}});
    return arr;
}

json matrix_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json operator_json(const std::string& name, const GradedOperator& op) {
    json o;
    o["name"] = name;
    o["bidegree"] = op.bidegree() ? json::array({op.bidegree()->dn, op.bidegree()->dk}) : json(nullptr);
    json blocks = json::array();
    for (const auto& [bk, m] : op.blocks())
        blocks.push_back({{"from", {bk.first.n, bk.first.k}}, {"to", {bk.second.n, bk.second.k}}, {"matrix", matrix_json(m)}});
    o["blocks"] = std::move(blocks);
    return o;
}

[[noreturn]] void schema(const std::string& what) { throw ParseError("model file: " + what); }

const json& field(const json& obj, const char* name, const std::string& where) {
    if (!obj.is_object() || !obj.contains(name)) schema(where + " lacks field \"" + name + "\"");
    return obj.at(name);
}

int integer(const json& v, const std::string& where) {
    if (!v.is_number_integer()) schema(where + " must be an integer");
    return v.get<int>();
}

Key key_of(const json& v, const std::string& where) {
    if (!v.is_array() || v.size() != 2) schema(where + " must be a pair [n, k]");
    return {integer(v[0], where), integer(v[1], where)};
}

SpacePtr space_of(const json& arr, const std::string& where) {
    if (!arr.is_array()) schema(where + " must be an array");
    auto s = std::make_shared<BigradedSpace>();
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const std::string w = where + "[" + std::to_string(i) + "]";
        const json& c = arr[i];
        Key key{integer(field(c, "n", w), w + ".n"), integer(field(c, "k", w), w + ".k")};
        if (key.n < 0 || key.k < 0) schema(w + " has a negative index");
        const int dim = integer(field(c, "dim", w), w + ".dim");
        const json& labels = field(c, "basis_labels", w);
        if (!labels.is_array() || labels.size() != static_cast<std::size_t>(dim))
            schema(w + ".basis_labels must list exactly dim labels");
        std::vector<std::string> names;
        for (const auto& l : labels) {
            if (!l.is_string()) schema(w + ".basis_labels must be strings");
            names.push_back(l.get<std::string>());
        }
        if (s->has(key)) schema(w + " repeats component " + to_string(key));
        s->add_component(key, std::move(names));
    }
    return s;
}

Matrix matrix_of(const json& rows, const std::string& where) {
    if (!rows.is_array()) schema(where + " must be an array of rows");
    const std::size_t nr = rows.size();
    const std::size_t nc = nr ? rows[0].size() : 0;
    Matrix m(nr, nc);
    for (std::size_t r = 0; r < nr; ++r) {
        if (!rows[r].is_array()) schema(where + " row " + std::to_string(r) + " is not an array");
        if (rows[r].size() != nc) throw ShapeError(where + " is ragged at row " + std::to_string(r));
        for (std::size_t c = 0; c < nc; ++c) {
            const json& x = rows[r][c];
            if (!x.is_string()) schema(where + " entry (" + std::to_string(r) + "," + std::to_string(c) + ") must be a string");
            try {
                m(r, c) = parse_rational(x.get<std::string>());
            } catch (const ParseError& e) {
                schema(where + " entry (" + std::to_string(r) + "," + std::to_string(c) + "): " + e.what());
            }
        }
    }
    return m;
}

GradedOperator operator_of(const json& o, const std::string& name, const SpacePtr& src, const SpacePtr& dst,
                           const std::string& where) {
    const json& bd = field(o, "bidegree", where);
    std::optional<Bidegree> bidegree;
    if (!bd.is_null()) {
        if (!bd.is_array() || bd.size() != 2) schema(where + ".bidegree must be [dn, dk] or null");
        bidegree = Bidegree{integer(bd[0], where + ".bidegree"), integer(bd[1], where + ".bidegree")};
    }
    GradedOperator op(src, dst, bidegree);
    const json& blocks = field(o, "blocks", where);
    if (!blocks.is_array()) schema(where + ".blocks must be an array");
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        const std::string w = where + ".blocks[" + std::to_string(i) + "]";
        Key from = key_of(field(blocks[i], "from", w), w + ".from");
        Key to = key_of(field(blocks[i], "to", w), w + ".to");
        Matrix m = matrix_of(field(blocks[i], "matrix", w), w + ".matrix");
        if (op.block(from, to)) schema(w + " repeats block " + to_string(from) + "->" + to_string(to));
        try {
            op.set_block(from, to, std::move(m));
        } catch (const ShapeError& e) {
            throw ShapeError("operator " + name + ": " + e.what());
        }
    }
    return op;
}

}  // namespace

json model_to_json(const HeisenbergModule& m) {
    json j;
    j["format_version"] = kModelFormatVersion;
    j["genus"] = m.genus;
    j["n_max"] = m.n_max;
    j["components"] = components_json(*m.V);
    j["jacobian_components"] = m.HJ ? components_json(*m.HJ) : json::array();
    json ops = json::array();
    ops.push_back(operator_json("mu_plus_pt", m.mu_plus_pt));
    ops.push_back(operator_json("mu_minus_pt", m.mu_minus_pt));
    ops.push_back(operator_json("mu_plus_C", m.mu_plus_C));
    ops.push_back(operator_json("mu_minus_C", m.mu_minus_C));
    for (const auto& [n, op] : m.aj) {
        json o = operator_json("AJ_n", op);
        o["n"] = n;
        ops.push_back(std::move(o));
    }
    if (m.e) ops.push_back(operator_json("e", *m.e));
    if (m.fourier) ops.push_back(operator_json("fourier", *m.fourier));
    j["operators"] = std::move(ops);
    return j;
}

HeisenbergModule model_from_json(const json& j) {
    if (!j.is_object()) schema("top level must be an object");
    const json& version = field(j, "format_version", "model");
    if (!version.is_string() || version.get<std::string>() != kModelFormatVersion)
        schema("unsupported format_version (expected \"" + std::string(kModelFormatVersion) + "\")");
    HeisenbergModule m;
    m.genus = integer(field(j, "genus", "model"), "genus");
    m.n_max = integer(field(j, "n_max", "model"), "n_max");
    if (m.genus < 0 || m.n_max < 0) schema("genus and n_max must be non-negative");
    m.V = space_of(field(j, "components", "model"), "components");
    m.HJ = j.contains("jacobian_components") ? space_of(j.at("jacobian_components"), "jacobian_components")
                                             : std::make_shared<BigradedSpace>();
    for (const auto& [key, c] : m.V->components())
        if (key.n > m.n_max) schema("component " + to_string(key) + " lies beyond n_max");

    const json& ops = field(j, "operators", "model");
    if (!ops.is_array()) schema("operators must be an array");
    std::set<std::string> seen;
    const std::map<std::string, Bidegree> heisenberg = {
        {"mu_plus_pt", kMuPlusPt}, {"mu_minus_pt", kMuMinusPt}, {"mu_plus_C", kMuPlusC}, {"mu_minus_C", kMuMinusC}};
    for (std::size_t i = 0; i < ops.size(); ++i) {
        const std::string where = "operators[" + std::to_string(i) + "]";
        const json& o = ops[i];
        const json& name_j = field(o, "name", where);
        if (!name_j.is_string()) schema(where + ".name must be a string");
        const std::string name = name_j.get<std::string>();
        if (auto it = heisenberg.find(name); it != heisenberg.end()) {
            if (!seen.insert(name).second) schema("operator " + name + " given twice");
            GradedOperator op = operator_of(o, name, m.V, m.V, where + " (" + name + ")");
            if (!op.bidegree() || *op.bidegree() != it->second)
                schema("operator " + name + " must have bidegree " + to_string(it->second));
            op.apply_window(m.n_max);
            if (name == "mu_plus_pt") m.mu_plus_pt = std::move(op);
            else if (name == "mu_minus_pt") m.mu_minus_pt = std::move(op);
            else if (name == "mu_plus_C") m.mu_plus_C = std::move(op);
            else m.mu_minus_C = std::move(op);
        } else if (name == "AJ_n") {
            const int n = integer(field(o, "n", where), where + ".n");
            if (m.aj.count(n)) schema("AJ_n for n = " + std::to_string(n) + " given twice");
            GradedOperator op = operator_of(o, "AJ_" + std::to_string(n), m.V, m.HJ, where + " (AJ_n)");
            for (const auto& [bk, blk] : op.blocks())
                if (bk.first.n != n) schema("AJ_n with n = " + std::to_string(n) + " has a block out of slice " + std::to_string(bk.first.n));
            m.aj.emplace(n, std::move(op));
        } else if (name == "e" || name == "fourier") {
            if (!seen.insert(name).second) schema("operator " + name + " given twice");
            GradedOperator op = operator_of(o, name, m.HJ, m.HJ, where + " (" + name + ")");
            (name == "e" ? m.e : m.fourier) = std::move(op);
        } else {
            schema(where + " has unknown operator name \"" + name + "\"");
        }
    }
    for (const auto& [name, bd] : heisenberg)
        if (!seen.count(name)) schema("operator " + name + " is missing");
    return m;
}

HeisenbergModule parse_model(std::string_view text) {
    json j;
    try {
        j = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        int line = 1, column = 1;
        const std::size_t upto = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
        for (std::size_t i = 0; i < upto; ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw ParseError("JSON syntax error at line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                             e.what(),
                         line, column);
    }
    return model_from_json(j);
}

HeisenbergModule load_model(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open model file " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_model(ss.str());
}

std::string dump_model(const HeisenbergModule& m) { return model_to_json(m).dump(1) + "\n"; }

void save_model(const HeisenbergModule& m, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ArgumentError("cannot write model file " + path);
    out << dump_model(m);
}

}  // namespace lefschetz
