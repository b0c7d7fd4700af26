#pragma once

#include <cstddef>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "monoglue/errors.hpp"
#include "monoglue/glue.hpp"
#include "monoglue/hodge.hpp"
#include "monoglue/matrix.hpp"
#include "monoglue/rational.hpp"
#include "monoglue/sheaf.hpp"

namespace monoglue {

using json = nlohmann::ordered_json;

using Document =
    std::variant<GlueObject, GlueMorphism, LocalSystem, MixedHodgeStructure, HodgeGlueObject>;

namespace jsonio {

inline Rational parse_rational(const json& j, const std::string& where) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
    throw error(errc::malformed, where + ": rationals must be strings like \"p/q\" or integers");
}

/// Matrix with a known number of rows; column count is read off the rows.
/// [] denotes any matrix without entries.
inline Matrix parse_matrix_rows(const json& j, std::size_t rows, const std::string& where) {
    if (!j.is_array()) throw error(errc::malformed, where + ": matrix must be an array of rows");
    if (j.empty()) {
        if (rows == 0) return Matrix(0, 0);
        return Matrix(rows, 0);
    }
    if (j.size() != rows)
        throw error(errc::malformed, where + ": expected " + std::to_string(rows) +
                                         " rows, got " + std::to_string(j.size()));
    if (!j[0].is_array()) throw error(errc::malformed, where + ": rows must be arrays");
    std::size_t cols = j[0].size();
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols)
            throw error(errc::malformed, where + ": ragged matrix rows");
        for (std::size_t k = 0; k < cols; ++k)
            m(i, k) = parse_rational(j[i][k],
                                     where + "[" + std::to_string(i) + "][" + std::to_string(k) + "]");
    }
    return m;
}

/// Matrix of a fully declared shape; [] is accepted whenever the shape has
/// no entries.
inline Matrix parse_matrix(const json& j, std::size_t rows, std::size_t cols,
                           const std::string& where) {
    if (rows == 0 || cols == 0) {
        if (j.is_array() && j.empty()) return Matrix(rows, cols);
        if (j.is_array() && j.size() == rows) {
            for (const auto& row : j)
                if (!row.is_array() || !row.empty())
                    throw error(errc::malformed, where + ": expected empty rows");
            return Matrix(rows, cols);
        }
        throw error(errc::malformed, where + ": expected [] for a matrix without entries");
    }
    Matrix m = parse_matrix_rows(j, rows, where);
    if (m.cols() != cols)
        throw error(errc::malformed, where + ": expected " + std::to_string(cols) +
                                         " columns, got " + std::to_string(m.cols()));
    return m;
}

inline json matrix_to_json(const Matrix& m) {
    json j = json::array();
    if (m.rows() == 0 || m.cols() == 0) return j;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(m(i, k).str());
        j.push_back(std::move(row));
    }
    return j;
}

inline std::size_t parse_dim(const json& j, const std::string& field) {
    if (!j.contains(field) || !j[field].is_number_integer() || j[field].get<long long>() < 0)
        throw error(errc::malformed, "'" + field + "' must be a nonnegative integer");
    return static_cast<std::size_t>(j[field].get<long long>());
}

inline const json& require_field(const json& j, const std::string& field) {
    if (!j.contains(field)) throw error(errc::malformed, "missing field '" + field + "'");
    return j[field];
}

template <typename Fn>
auto wrap_validation(Fn&& fn) {
    try {
        return fn();
    } catch (const error& e) {
        if (e.code() == errc::malformed) throw;
        throw error(errc::validation_failed, e.what());
    }
}

inline GlueObject parse_glue_object(const json& j) {
    std::size_t psi = parse_dim(j, "psi_dim");
    std::size_t phi = parse_dim(j, "phi_dim");
    Matrix can = parse_matrix(require_field(j, "can"), phi, psi, "can");
    Matrix var = parse_matrix(require_field(j, "var"), psi, phi, "var");
    return wrap_validation([&] { return validate_object(psi, phi, std::move(can), std::move(var)); });
}

inline json glue_object_to_json(const GlueObject& x) {
    json j;
    j["kind"] = "glue_object";
    j["psi_dim"] = x.psi_dim;
    j["phi_dim"] = x.phi_dim;
    j["can"] = matrix_to_json(x.can);
    j["var"] = matrix_to_json(x.var);
    return j;
}

inline GlueMorphism parse_glue_morphism(const json& j) {
    GlueObject source = parse_glue_object(require_field(j, "source"));
    GlueObject target = parse_glue_object(require_field(j, "target"));
    Matrix f = parse_matrix(require_field(j, "f"), target.psi_dim, source.psi_dim, "f");
    Matrix g = parse_matrix(require_field(j, "g"), target.phi_dim, source.phi_dim, "g");
    return wrap_validation(
        [&] { return validate_morphism(std::move(f), std::move(g), source, target); });
}

inline json glue_morphism_to_json(const GlueMorphism& m) {
    json j;
    j["kind"] = "glue_morphism";
    json src = glue_object_to_json(m.source);
    json tgt = glue_object_to_json(m.target);
    src.erase("kind");
    tgt.erase("kind");
    j["source"] = std::move(src);
    j["target"] = std::move(tgt);
    j["f"] = matrix_to_json(m.f);
    j["g"] = matrix_to_json(m.g);
    return j;
}

inline LocalSystem parse_local_system(const json& j) {
    if (!j.contains("rank") || !j["rank"].is_number_integer() || j["rank"].get<long long>() < 1)
        throw error(errc::malformed, "'rank' must be a positive integer");
    std::size_t rank = static_cast<std::size_t>(j["rank"].get<long long>());
    Matrix t = parse_matrix(require_field(j, "T"), rank, rank, "T");
    return wrap_validation([&] { return validate_local_system(rank, std::move(t)); });
}

inline json local_system_to_json(const LocalSystem& l) {
    json j;
    j["kind"] = "local_system";
    j["rank"] = l.rank;
    j["T"] = matrix_to_json(l.t);
    return j;
}

/// Filtrations are arrays of {"index": k, "basis": [[...]]}. Weight indices
/// are weights; hodge indices are the decreasing Hodge degrees p.
inline std::vector<std::pair<long, Matrix>> parse_filtration_steps(const json& j, std::size_t dim,
                                                                   const std::string& where) {
    if (!j.is_array()) throw error(errc::malformed, where + ": filtration must be an array");
    std::vector<std::pair<long, Matrix>> steps;
    for (const auto& entry : j) {
        if (!entry.is_object() || !entry.contains("index") || !entry.contains("basis"))
            throw error(errc::malformed, where + ": steps must be {index, basis} objects");
        if (!entry["index"].is_number_integer())
            throw error(errc::malformed, where + ": step index must be an integer");
        steps.emplace_back(entry["index"].get<long>(),
                           parse_matrix_rows(entry["basis"], dim, where + " basis"));
    }
    return steps;
}

inline MixedHodgeStructure parse_mhs(const json& j) {
    std::size_t dim = parse_dim(j, "dim");
    auto weight_steps = parse_filtration_steps(require_field(j, "weight"), dim, "weight");
    auto hodge_steps = parse_filtration_steps(require_field(j, "hodge"), dim, "hodge");
    return wrap_validation([&] {
        Filtration w = Filtration::from_steps(dim, std::move(weight_steps));
        Filtration h = hodge_filtration_from_decreasing(dim, std::move(hodge_steps));
        return mhs_validate(dim, std::move(w), std::move(h));
    });
}

inline json mhs_body_to_json(const MixedHodgeStructure& m) {
    json j;
    j["dim"] = m.dim;
    json w = json::array();
    for (const auto& [k, basis] : m.weight.jumps())
        w.push_back(json{{"index", k}, {"basis", matrix_to_json(basis)}});
    j["weight"] = std::move(w);
    json h = json::array();
    const auto& gj = m.hodge.jumps();
    for (std::size_t i = gj.size(); i-- > 0;)
        h.push_back(json{{"index", -gj[i].first}, {"basis", matrix_to_json(gj[i].second)}});
    j["hodge"] = std::move(h);
    return j;
}

inline json mhs_to_json(const MixedHodgeStructure& m) {
    json j;
    j["kind"] = "mhs";
    json body = mhs_body_to_json(m);
    for (auto& [key, value] : body.items()) j[key] = std::move(value);
    return j;
}

inline HodgeGlueObject parse_hodge_glue_object(const json& j) {
    MixedHodgeStructure psi = parse_mhs(require_field(j, "psi"));
    MixedHodgeStructure phi = parse_mhs(require_field(j, "phi"));
    Matrix can = parse_matrix(require_field(j, "can"), phi.dim, psi.dim, "can");
    Matrix var = parse_matrix(require_field(j, "var"), psi.dim, phi.dim, "var");
    return wrap_validation([&] {
        return hodge_glue_validate(std::move(psi), std::move(phi), std::move(can), std::move(var));
    });
}

inline json hodge_glue_object_to_json(const HodgeGlueObject& x) {
    json j;
    j["kind"] = "hodge_glue_object";
    j["psi"] = mhs_body_to_json(x.psi);
    j["phi"] = mhs_body_to_json(x.phi);
    j["can"] = matrix_to_json(x.can);
    j["var"] = matrix_to_json(x.var);
    return j;
}

} // namespace jsonio

inline Document parse_document_json(const json& j) {
    if (!j.is_object()) throw error(errc::malformed, "document must be a JSON object");
    std::string kind = jsonio::require_field(j, "kind").is_string()
                           ? j["kind"].get<std::string>()
                           : throw error(errc::malformed, "'kind' must be a string");
    if (kind == "glue_object") return jsonio::parse_glue_object(j);
    if (kind == "glue_morphism") return jsonio::parse_glue_morphism(j);
    if (kind == "local_system") return jsonio::parse_local_system(j);
    if (kind == "mhs") return jsonio::parse_mhs(j);
    if (kind == "hodge_glue_object") return jsonio::parse_hodge_glue_object(j);
    throw error(errc::malformed, "unknown kind '" + kind + "'");
}

inline Document parse_document(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw error(errc::malformed, "input is not valid JSON");
    return parse_document_json(j);
}

inline json serialize_document(const Document& doc) {
    return std::visit(
        [](const auto& value) -> json {
            using T = std::decay_t<decltype(value)>;
            if constexpr (std::is_same_v<T, GlueObject>)
                return jsonio::glue_object_to_json(value);
            else if constexpr (std::is_same_v<T, GlueMorphism>)
                return jsonio::glue_morphism_to_json(value);
            else if constexpr (std::is_same_v<T, LocalSystem>)
                return jsonio::local_system_to_json(value);
            else if constexpr (std::is_same_v<T, MixedHodgeStructure>)
                return jsonio::mhs_to_json(value);
            else
                return jsonio::hodge_glue_object_to_json(value);
        },
        doc);
}

} // namespace monoglue
