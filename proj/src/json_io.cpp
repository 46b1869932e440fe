#include "leibniz/json_io.hpp"

#include "leibniz/errors.hpp"

namespace leibniz {
namespace {

std::string at_index(const std::string& where, std::size_t i) { return where + "[" + std::to_string(i) + "]"; }

const Json& require_array(const Json& j, std::size_t len, const std::string& where) {
    if (!j.is_array()) throw InputError(where + ": expected an array");
    if (j.size() != len)
        throw InputError(where + ": expected " + std::to_string(len) + " entries, got " + std::to_string(j.size()));
    return j;
}

const Json& require_field(const Json& j, const char* name) {
    if (!j.is_object()) throw InputError("expected a JSON object at top level");
    const auto it = j.find(name);
    if (it == j.end()) throw InputError(std::string("missing field \"") + name + "\"");
    return *it;
}

std::size_t count_field(const Json& j, const char* name) {
    const Json& v = require_field(j, name);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
        throw InputError(std::string(name) + ": expected a non-negative integer");
    return v.get<std::size_t>();
}

void check_schema(const Json& j) {
    if (!j.is_object()) throw InputError("expected a JSON object at top level");
    const auto it = j.find("schema");
    if (it == j.end()) return;
    if (!it->is_string() || it->get<std::string>() != kSchema)
        throw InputError(std::string("unsupported schema ") + it->dump() + ", expected \"" + kSchema + "\"");
}

Json with_schema() {
    Json j = Json::object();
    j["schema"] = kSchema;
    return j;
}

std::vector<Matrix> matrices_from_json(const Json& j, std::size_t count, std::size_t dim, const std::string& where) {
    require_array(j, count, where);
    std::vector<Matrix> out;
    for (std::size_t i = 0; i < count; ++i) out.push_back(matrix_from_json(j[i], dim, dim, at_index(where, i)));
    return out;
}

Json matrices_to_json(const std::vector<Matrix>& ms) {
    Json out = Json::array();
    for (const auto& m : ms) out.push_back(to_json(m));
    return out;
}

void fill_multilinear(const Json& j, MultilinearMap& f, std::vector<std::size_t>& idx, std::size_t depth,
                      const std::string& where) {
    if (depth == f.arity()) {
        f.set(idx, vector_from_json(j, f.output_dim(), where));
        return;
    }
    require_array(j, f.input_dims()[depth], where);
    for (std::size_t i = 0; i < f.input_dims()[depth]; ++i) {
        idx[depth] = i;
        fill_multilinear(j[i], f, idx, depth + 1, at_index(where, i));
    }
}

Json dump_multilinear(const MultilinearMap& f, std::vector<std::size_t>& idx, std::size_t depth) {
    if (depth == f.arity()) return to_json(f.at(idx));
    Json out = Json::array();
    for (std::size_t i = 0; i < f.input_dims()[depth]; ++i) {
        idx[depth] = i;
        out.push_back(dump_multilinear(f, idx, depth + 1));
    }
    return out;
}

}  // namespace

Json parse_json_text(std::string_view text, const std::string& source) {
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw InputError(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": malformed JSON");
    }
}

Rational rational_from_json(const Json& j, const std::string& where) {
    if (j.is_string()) {
        try {
            return parse_rational(j.get<std::string>());
        } catch (const InputError& e) {
            throw InputError(where + ": " + e.what());
        }
    }
    if (j.is_number_integer()) return Rational(j.dump());
    throw InputError(where + ": expected a rational string such as \"-3/4\"");
}

Json to_json(const Rational& q) { return format_rational(q); }

Json to_json(std::span<const Rational> v) {
    Json out = Json::array();
    for (const auto& q : v) out.push_back(to_json(q));
    return out;
}

Json to_json(const Matrix& m) {
    Json out = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
    return out;
}

Vector vector_from_json(const Json& j, std::size_t len, const std::string& where) {
    require_array(j, len, where);
    Vector out;
    out.reserve(len);
    for (std::size_t i = 0; i < len; ++i) out.push_back(rational_from_json(j[i], at_index(where, i)));
    return out;
}

Matrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols, const std::string& where) {
    require_array(j, rows, where);
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        const Vector row = vector_from_json(j[r], cols, at_index(where, r));
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = row[c];
    }
    return m;
}

Json to_json(const MultilinearMap& f) {
    std::vector<std::size_t> idx(f.arity());
    return dump_multilinear(f, idx, 0);
}

MultilinearMap multilinear_from_json(const Json& j, std::vector<std::size_t> input_dims, std::size_t output_dim,
                                     const std::string& where) {
    MultilinearMap f(std::move(input_dims), output_dim);
    std::vector<std::size_t> idx(f.arity());
    fill_multilinear(j, f, idx, 0, where);
    return f;
}

Json algebra_to_json(const LeibnizAlgebra& g) {
    Json j = with_schema();
    j["dim"] = g.dim();
    Json c = Json::array();
    for (std::size_t i = 0; i < g.dim(); ++i) {
        Json row = Json::array();
        for (std::size_t b = 0; b < g.dim(); ++b) row.push_back(to_json(g.bracket_basis(i, b)));
        c.push_back(std::move(row));
    }
    j["c"] = std::move(c);
    return j;
}

LeibnizAlgebra algebra_from_json(const Json& j) {
    check_schema(j);
    const std::size_t n = count_field(j, "dim");
    const Json& c = require_field(j, "c");
    LeibnizAlgebra g(n);
    require_array(c, n, "c");
    for (std::size_t i = 0; i < n; ++i) {
        require_array(c[i], n, at_index("c", i));
        for (std::size_t b = 0; b < n; ++b) {
            const Vector v = vector_from_json(c[i][b], n, at_index(at_index("c", i), b));
            for (std::size_t w = 0; w < n; ++w) g.c(i, b, w) = v[w];
        }
    }
    return g;
}

Json representation_to_json(const Representation& rep) {
    Json j = with_schema();
    j["vdim"] = rep.vdim;
    j["l"] = matrices_to_json(rep.l);
    j["r"] = matrices_to_json(rep.r);
    return j;
}

Representation representation_from_json(const Json& j, const LeibnizAlgebra& g) {
    check_schema(j);
    const std::size_t m = count_field(j, "vdim");
    Representation rep{g, m, matrices_from_json(require_field(j, "l"), g.dim(), m, "l"),
                       matrices_from_json(require_field(j, "r"), g.dim(), m, "r")};
    return rep;
}

Json naive_to_json(const NaiveRepresentation& rho) {
    Json j = with_schema();
    j["vdim"] = rho.vdim();
    j["phi"] = matrices_to_json(rho.phi());
    Json theta = Json::array();
    for (const auto& t : rho.theta()) theta.push_back(to_json(t));
    j["theta"] = std::move(theta);
    return j;
}

NaiveRepresentation naive_from_json(const Json& j, const LeibnizAlgebra& g) {
    check_schema(j);
    const std::size_t m = count_field(j, "vdim");
    auto phi = matrices_from_json(require_field(j, "phi"), g.dim(), m, "phi");
    const Json& th = require_array(require_field(j, "theta"), g.dim(), "theta");
    std::vector<Vector> theta;
    for (std::size_t i = 0; i < g.dim(); ++i) theta.push_back(vector_from_json(th[i], m, at_index("theta", i)));
    return NaiveRepresentation(g, m, std::move(phi), std::move(theta));
}

Json graph_to_json(const GraphMap& phi) {
    Json j = with_schema();
    j["vdim"] = phi.vdim;
    j["phi"] = matrices_to_json(phi.phi);
    return j;
}

GraphMap graph_from_json(const Json& j) {
    check_schema(j);
    const std::size_t m = count_field(j, "vdim");
    return GraphMap{m, matrices_from_json(require_field(j, "phi"), m, m, "phi")};
}

Json lie2_to_json(const Lie2Algebra& L) {
    Json j = with_schema();
    j["dim1"] = L.dim1;
    j["dim0"] = L.dim0;
    j["l1"] = to_json(L.l1);
    j["l2_00"] = to_json(L.l2_00);
    j["l2_01"] = to_json(L.l2_01);
    j["l2_11"] = to_json(L.l2_11);
    j["l3"] = to_json(L.l3);
    return j;
}

Lie2Algebra lie2_from_json(const Json& j) {
    check_schema(j);
    const std::size_t d1 = count_field(j, "dim1");
    const std::size_t d0 = count_field(j, "dim0");
    Lie2Algebra L = Lie2Algebra::zero(d1, d0);
    L.l1 = matrix_from_json(require_field(j, "l1"), d0, d1, "l1");
    L.l2_00 = multilinear_from_json(require_field(j, "l2_00"), {d0, d0}, d0, "l2_00");
    L.l2_01 = multilinear_from_json(require_field(j, "l2_01"), {d0, d1}, d1, "l2_01");
    if (j.contains("l2_11")) L.l2_11 = multilinear_from_json(j["l2_11"], {d1, d1}, d1, "l2_11");
    L.l3 = multilinear_from_json(require_field(j, "l3"), {d0, d0, d0}, d1, "l3");
    return L;
}

Json to_json(const Witness& w) {
    Json j = Json::object();
    j["identity"] = w.identity;
    j["indices"] = w.indices;
    j["defect"] = to_json(w.defect);
    return j;
}

Json to_json(const IdentityReport& report, std::size_t max_witnesses) {
    Json j = Json::object();
    j["holds"] = report.holds();
    j["witness_count"] = report.witnesses().size();
    Json ws = Json::array();
    for (std::size_t i = 0; i < report.witnesses().size() && i < max_witnesses; ++i)
        ws.push_back(to_json(report.witnesses()[i]));
    j["witnesses"] = std::move(ws);
    return j;
}

Json to_json(const AxiomReport& report, std::size_t max_witnesses) {
    Json j = Json::object();
    j["passes"] = report.passes();
    Json axioms = Json::object();
    for (std::size_t i = 0; i < report.axioms.size(); ++i)
        axioms[AxiomReport::names[i]] = to_json(report.axioms[i], max_witnesses);
    j["axioms"] = std::move(axioms);
    return j;
}

Json to_json(const BettiReport& report) {
    Json j = with_schema();
    Json degrees = Json::array();
    for (const auto& d : report.degrees) {
        Json e = Json::object();
        e["k"] = d.k;
        e["dim_C"] = d.dim_cochains;
        e["rank_d"] = d.rank_d;
        e["dim_ker"] = d.dim_kernel;
        e["dim_H"] = d.dim_cohomology;
        degrees.push_back(std::move(e));
    }
    j["degrees"] = std::move(degrees);
    return j;
}

Json to_json(const ComparisonReport& report) {
    Json j = with_schema();
    j["branch"] = report.branch;
    Json degrees = Json::array();
    for (const auto& d : report.degrees) {
        Json e = Json::object();
        e["k"] = d.k;
        e["dim_naive"] = d.dim_naive;
        e["dim_classical"] = d.dim_classical;
        e["equal"] = d.equal;
        e["informational"] = d.informational;
        degrees.push_back(std::move(e));
    }
    j["degrees"] = std::move(degrees);
    j["correspondence"] = to_json(report.correspondence);
    j["all_equal"] = report.all_equal();
    return j;
}

}  // namespace leibniz
