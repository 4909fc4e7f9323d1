#pragma once

#include <json.hpp>

#include <string>

#include "eqehr/ehrhart.hpp"
#include "eqehr/equivariant.hpp"
#include "eqehr/families.hpp"

namespace eqehr {

using Json = nlohmann::ordered_json;

// Rationals serialize as canonical strings "p/q" (or "p"), polynomials as
// coefficient arrays lowest degree first, rational functions as {num, den}.

inline Json rat_json(const Rat& x) { return rat_to_string(x); }

inline Rat rat_from_json(const Json& j) {
    if (j.is_number_integer()) return Rat(j.get<long long>());
    if (j.is_string()) return rat_from_string(j.get<std::string>());
    throw std::invalid_argument("expected a rational as string or integer");
}

inline Json int_json(const Int& x) { return x.str(); }

inline Json qvec_json(const QVec& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(rat_json(x));
    return a;
}

inline QVec qvec_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("expected an array of rationals");
    QVec v;
    for (const auto& x : j) v.push_back(rat_from_json(x));
    return v;
}

inline Json poly_json(const Poly& p) { return qvec_json(p.coeffs()); }

inline Poly poly_from_json(const Json& j) { return Poly(qvec_from_json(j)); }

inline Json ratfun_json(const RationalGenFunction& f) {
    return Json{{"num", poly_json(f.num())}, {"den", poly_json(f.den())}};
}

inline RationalGenFunction ratfun_from_json(const Json& j) {
    return rf_reduce(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
}

inline Json imat_json(const IMat& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).convert_to<long long>());
        rows.push_back(std::move(row));
    }
    return rows;
}

inline IMat imat_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw std::invalid_argument("expected a matrix");
    IMat m(j.size(), j[0].size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (j[i].size() != m.cols()) throw std::invalid_argument("ragged matrix");
        for (std::size_t c = 0; c < m.cols(); ++c) m(i, c) = Int(j[i][c].get<long long>());
    }
    return m;
}

// ---------------------------------------------------------------------------
// Polytopes
// ---------------------------------------------------------------------------

inline Json polytope_json(const RationalPolytope& p) {
    Json j;
    j["ambient_dim"] = p.ambient_dim();
    Json verts = Json::array();
    for (const auto& v : p.vertices()) verts.push_back(qvec_json(v));
    j["vertices"] = std::move(verts);
    return j;
}

inline RationalPolytope polytope_from_json(const Json& j) {
    for (auto it = j.begin(); it != j.end(); ++it)
        if (it.key() != "ambient_dim" && it.key() != "vertices" && it.key() != "halfspaces")
            throw std::invalid_argument("unknown polytope field: " + it.key());
    std::size_t n = j.at("ambient_dim").get<std::size_t>();
    std::vector<QVec> verts;
    for (const auto& v : j.at("vertices")) verts.push_back(qvec_from_json(v));
    if (j.contains("halfspaces")) {
        // trusted input: shape-check only, the engine re-derives its own
        for (const auto& h : j.at("halfspaces")) {
            if (!h.contains("normal") || !h.contains("offset"))
                throw std::invalid_argument("halfspace needs normal and offset");
        }
    }
    return RationalPolytope::from_points(n, std::move(verts));
}

inline Json halfspace_json(const Halfspace& h) {
    Json normal = Json::array();
    for (const auto& c : h.normal) normal.push_back(c.convert_to<long long>());
    Json j;
    j["normal"] = std::move(normal);
    j["offset"] = is_integer(h.offset) ? Json(numer_of(h.offset).convert_to<long long>())
                                       : Json(rat_to_string(h.offset));
    return j;
}

// ---------------------------------------------------------------------------
// Groups
// ---------------------------------------------------------------------------

inline Json cyclo_json(const CycloNum& x) {
    return Json{{"order", x.order()}, {"coeffs", poly_json(x.residue())}};
}

inline Json character_table_json(const CharacterTable& t) {
    Json j;
    j["group_order"] = int_json(t.group_order);
    j["exponent"] = t.exponent;
    Json sizes = Json::array();
    for (const auto& s : t.class_sizes) sizes.push_back(s.convert_to<long long>());
    j["class_sizes"] = std::move(sizes);
    j["class_labels"] = t.class_labels;
    Json rows = Json::array();
    for (std::size_t i = 0; i < t.row_count(); ++i) {
        Json row;
        row["label"] = t.row_labels[i];
        Json vals = Json::array();
        for (const auto& v : t.rows[i]) vals.push_back(cyclo_json(v));
        row["values"] = std::move(vals);
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    return j;
}

/// Group input: either a labeled preset ("cyclic", "dihedral", "product")
/// or "custom" with an explicit table and class representatives.
inline SymmetryGroup symmetry_from_json(const Json& j) {
    std::string preset = j.at("preset").get<std::string>();
    if (preset == "cyclic") {
        auto gens = j.at("generators");
        if (gens.size() != 1) throw std::invalid_argument("cyclic preset needs one generator");
        return cyclic_symmetry(imat_from_json(gens[0]), j.at("order").get<unsigned>());
    }
    if (preset == "dihedral") {
        auto gens = j.at("generators");
        const Json& labels = j.at("labels");
        return dihedral_symmetry(imat_from_json(gens[labels.at("r").get<std::size_t>()]),
                                 imat_from_json(gens[labels.at("s").get<std::size_t>()]),
                                 j.at("order").get<unsigned>());
    }
    if (preset == "product") {
        const Json& factors = j.at("factors");
        if (factors.empty()) throw std::invalid_argument("product preset needs factors");
        SymmetryGroup g = symmetry_from_json(factors[0]);
        for (std::size_t i = 1; i < factors.size(); ++i)
            g = product_symmetry(g, symmetry_from_json(factors[i]));
        return g;
    }
    if (preset == "custom") {
        std::vector<IMat> gens;
        for (const auto& g : j.at("generators")) gens.push_back(imat_from_json(g));
        const Json& tj = j.at("table");
        CharacterTable t;
        t.group_order = Int(tj.at("group_order").get<long long>());
        t.exponent = tj.at("exponent").get<long>();
        for (const auto& s : tj.at("class_sizes")) t.class_sizes.push_back(Int(s.get<long long>()));
        for (const auto& l : tj.at("class_labels")) t.class_labels.push_back(l.get<std::string>());
        for (const auto& row : tj.at("rows")) {
            t.row_labels.push_back(row.at("label").get<std::string>());
            std::vector<CycloNum> vals;
            for (const auto& v : row.at("values"))
                vals.push_back(CycloNum(v.at("order").get<unsigned>(),
                                        poly_from_json(v.at("coeffs"))));
            t.rows.push_back(std::move(vals));
        }
        std::vector<IMat> reps;
        for (const auto& r : j.at("class_reps")) reps.push_back(imat_from_json(r));
        return custom_symmetry(gens, std::move(t), reps);
    }
    throw std::invalid_argument("unknown group preset: " + preset);
}

// ---------------------------------------------------------------------------
// Family selectors
// ---------------------------------------------------------------------------

inline EquivariantSetup setup_from_family_json(const Json& j) {
    std::string family = j.at("family").get<std::string>();
    if (family == "sep-cycle") {
        unsigned d = j.at("d").get<unsigned>();
        std::string group = j.value("group", "dihedral");
        if (group == "dihedral") return sep_cycle_setup(d, SepGroup::dihedral);
        if (group == "s-only") return sep_cycle_setup(d, SepGroup::s_only);
        throw std::invalid_argument("unknown cycle group selector: " + group);
    }
    if (family == "cross") {
        long k = j.at("k").get<long>();
        unsigned d = j.at("d").get<unsigned>();
        const Json& group = j.at("group");
        if (group.is_object() && group.contains("axis"))
            return cross_setup_axis(k, d, group.at("axis").get<unsigned>());
        std::string name = group.get<std::string>();
        if (name == "sigma-d") return cross_setup(k, d, CrossGroup::sigma_d);
        if (name == "all-reflections") return cross_setup(k, d, CrossGroup::all_reflections);
        throw std::invalid_argument("unknown cross group selector: " + name);
    }
    throw std::invalid_argument("unknown family: " + family);
}

inline RationalPolytope polytope_from_family_json(const Json& j) {
    std::string family = j.at("family").get<std::string>();
    if (family == "sep-cycle") return sep_cycle(j.at("d").get<unsigned>());
    if (family == "cross")
        return cross_polytope_rational(j.at("k").get<long>(), j.at("d").get<unsigned>());
    throw std::invalid_argument("unknown family: " + family);
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

inline Json quasipolynomial_json(const QuasiPolynomial& q) {
    Json j;
    j["degree"] = q.degree;
    j["period"] = q.period;
    Json rows = Json::array();
    for (const auto& row : q.table) rows.push_back(qvec_json(row));
    j["table"] = std::move(rows);
    return j;
}

inline Json ehrhart_json(const EhrhartData& e) {
    Json j;
    Json counts = Json::array();
    for (const auto& c : e.counts) counts.push_back(int_json(c));
    j["counts"] = std::move(counts);
    j["dim"] = e.dim;
    j["denominator"] = int_json(e.denominator);
    j["hstar"] = poly_json(e.hstar);
    j["series"] = ratfun_json(e.series);
    j["quasipolynomial"] = quasipolynomial_json(e.quasi);
    j["period"] = e.min_period;
    j["pip"] = e.is_pip;
    return j;
}

inline Json hstar_report_json(const HStarReport& r) {
    Json j;
    j["classes"] = r.class_labels;
    j["irreducibles"] = r.row_labels;
    Json per_class = Json::array();
    for (const auto& f : r.hstar_per_class) per_class.push_back(ratfun_json(f));
    j["hstar_per_class"] = std::move(per_class);
    j["is_polynomial"] = r.is_polynomial;
    Json coeffs = Json::array();
    for (const auto& c : r.coefficients) coeffs.push_back(qvec_json(c.values));
    j["coefficients"] = std::move(coeffs);
    Json mults = Json::array();
    for (const auto& m : r.multiplicities) {
        Json row = Json::array();
        for (const auto& v : m.mult) row.push_back(v.convert_to<long long>());
        mults.push_back(std::move(row));
    }
    j["multiplicities"] = std::move(mults);
    j["is_effective"] = r.is_effective ? Json(*r.is_effective) : Json(nullptr);
    j["order_truncated"] = r.order_truncated ? Json(*r.order_truncated) : Json(nullptr);
    return j;
}

}  // namespace eqehr
