#pragma once

#include <json.hpp>

#include "skewcell/shift.hpp"

namespace skewcell {

using ordered_json = nlohmann::ordered_json;

inline FieldDescriptor parse_descriptor(const std::string& s) {
    auto colon = s.find(':');
    std::string head = s.substr(0, colon);
    std::string tail = colon == std::string::npos ? "" : s.substr(colon + 1);
    if (head == "rational") return {FieldKind::rational, 0, 0};
    if (head == "cyclotomic") return {FieldKind::cyclotomic, std::stol(tail), 0};
    if (head == "fp") return {FieldKind::prime, 0, std::stol(tail)};
    if (head == "fpc") {
        auto comma = tail.find(',');
        require(comma != std::string::npos, "ParseError", "fpc needs p,c");
        return {FieldKind::cyclotomic_prime, std::stol(tail.substr(0, comma)),
                std::stol(tail.substr(comma + 1))};
    }
    fail("ParseError", "unknown field descriptor '" + s + "'");
}

// Structure-constant file, schema "skewcell/1". The loader re-verifies the
// algebra axioms and (when present) the datum axioms before handing data out.
struct AlgebraFile {
    GradedAlgebra algebra;
    std::optional<SkewCellDatum> datum;
    std::optional<ShiftAutomorphism> shift;
    std::optional<std::vector<std::vector<std::string>>> embedding;
    std::optional<std::string> comment;
};

inline ordered_json algebra_file_json(const AlgebraFile& file) {
    const GradedAlgebra& A = file.algebra;
    ordered_json j;
    j["format_version"] = "skewcell/1";
    if (file.comment) j["comment"] = *file.comment;
    j["field"] = A.field->desc.str();
    j["dim"] = A.dim;
    j["labels"] = A.labels;
    j["degrees"] = A.deg;
    j["star"] = A.star;
    {
        std::vector<std::string> unit;
        for (auto& s : A.unit) unit.push_back(s.str());
        j["unit"] = unit;
    }
    {
        ordered_json mult = ordered_json::array();
        for (size_t i = 0; i < A.dim; ++i)
            for (size_t k = 0; k < A.dim; ++k) {
                if (A.mult[i][k].empty()) continue;
                ordered_json terms = ordered_json::array();
                for (auto& [b, s] : A.mult[i][k]) terms.push_back({b, s.str()});
                mult.push_back({i, k, terms});
            }
        j["mult"] = mult;
    }
    if (file.datum) {
        const SkewCellDatum& D = *file.datum;
        ordered_json d;
        d["elements"] = D.elements;
        ordered_json rel = ordered_json::array();
        for (size_t i = 0; i < D.poset_size(); ++i)
            for (size_t k = 0; k < D.poset_size(); ++k)
                if (D.gt[i][k]) rel.push_back({i, k});
        d["relations"] = rel;
        d["iota"] = D.iota;
        ordered_json tabs = ordered_json::array();
        for (auto& degs : D.tab_deg) tabs.push_back({{"degrees", degs}});
        d["tableaux"] = tabs;
        d["iota_tab"] = D.iota_tab;
        d["basis"] = D.basis_of;
        j["datum"] = d;
    }
    if (file.shift) {
        ordered_json s;
        s["sigmaA"] = file.shift->sigmaA;
        s["sigmaP"] = file.shift->sigmaP;
        s["sigmaT"] = file.shift->sigmaT;
        j["shift"] = s;
    }
    if (file.embedding) j["embedding"] = *file.embedding;
    return j;
}

inline std::string save_algebra(const AlgebraFile& file) {
    return algebra_file_json(file).dump(1) + "\n";
}

inline AlgebraFile load_algebra(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        fail("ParseError", e.what());
    }
    require(j.value("format_version", "") == "skewcell/1", "ParseError",
            "unsupported format_version");
    AlgebraFile file;
    if (j.contains("comment")) file.comment = j["comment"].get<std::string>();
    GradedAlgebra& A = file.algebra;
    A.field = Field::make(parse_descriptor(j.at("field").get<std::string>()));
    A.dim = j.at("dim").get<size_t>();
    A.labels = j.at("labels").get<std::vector<std::string>>();
    A.deg = j.at("degrees").get<std::vector<long>>();
    A.star = j.at("star").get<std::vector<size_t>>();
    for (auto& s : j.at("unit")) A.unit.push_back(parse_scalar(s.get<std::string>(), A.field));
    A.mult.assign(A.dim, std::vector<SparseVec>(A.dim));
    for (auto& row : j.at("mult")) {
        size_t i = row.at(0).get<size_t>(), k = row.at(1).get<size_t>();
        require(i < A.dim && k < A.dim, "ParseError", "mult index out of range");
        SparseVec v;
        for (auto& term : row.at(2)) {
            size_t b = term.at(0).get<size_t>();
            Scalar s = parse_scalar(term.at(1).get<std::string>(), A.field);
            require(b < A.dim, "ParseError", "mult target out of range");
            require(!s.is_zero(), "VerifyError", "stored zero coefficient");
            v.push_back({b, s});
        }
        A.mult[i][k] = std::move(v);
    }
    A.check_structure();
    if (j.contains("datum")) {
        SkewCellDatum D;
        auto& d = j["datum"];
        D.elements = d.at("elements").get<std::vector<std::string>>();
        size_t np = D.elements.size();
        D.gt.assign(np, std::vector<bool>(np, false));
        for (auto& pr : d.at("relations")) {
            size_t a = pr.at(0).get<size_t>(), b = pr.at(1).get<size_t>();
            require(a < np && b < np, "ParseError", "relation index out of range");
            D.gt[a][b] = true;
        }
        D.iota = d.at("iota").get<std::vector<size_t>>();
        for (auto& t : d.at("tableaux"))
            D.tab_deg.push_back(t.at("degrees").get<std::vector<long>>());
        D.iota_tab = d.at("iota_tab").get<std::vector<std::vector<size_t>>>();
        D.basis_of = d.at("basis").get<std::vector<std::vector<std::vector<size_t>>>>();
        Report rep = verify_skew_datum(A, D);
        require(rep.ok(), "VerifyError", "datum fails verification:\n" + rep.summary());
        file.datum = std::move(D);
    }
    if (j.contains("shift")) {
        ShiftAutomorphism S;
        auto& s = j["shift"];
        S.sigmaA = s.at("sigmaA").get<std::vector<size_t>>();
        S.sigmaP = s.at("sigmaP").get<std::vector<size_t>>();
        S.sigmaT = s.at("sigmaT").get<std::vector<std::vector<size_t>>>();
        require(S.sigmaA.size() == A.dim, "ParseError", "sigmaA size mismatch");
        file.shift = std::move(S);
    }
    if (j.contains("embedding"))
        file.embedding = j["embedding"].get<std::vector<std::vector<std::string>>>();
    return file;
}

// Reinterpret integral structure constants over another field by exact
// re-parsing of the coefficient strings.
inline GradedAlgebra base_change(const GradedAlgebra& A, const FieldPtr& target) {
    GradedAlgebra B;
    B.field = target;
    B.dim = A.dim;
    B.labels = A.labels;
    B.deg = A.deg;
    B.star = A.star;
    for (auto& s : A.unit) B.unit.push_back(parse_scalar(s.str(), target));
    B.mult.assign(A.dim, std::vector<SparseVec>(A.dim));
    for (size_t i = 0; i < A.dim; ++i)
        for (size_t k = 0; k < A.dim; ++k)
            for (auto& [b, s] : A.mult[i][k]) {
                Scalar v = parse_scalar(s.str(), target);
                if (!v.is_zero()) B.mult[i][k].push_back({b, v});
            }
    return B;
}

} // namespace skewcell
