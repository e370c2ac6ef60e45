#include "pointmod/io.hpp"

#include "pointmod/error.hpp"

namespace pointmod {

namespace {

Json integer_to_json(const mpz_class& z) {
    if (z.fits_slong_p()) return Json(z.get_si());
    return Json(z.get_str());
}

mpz_class integer_from_json(const Json& j) {
    if (j.is_number_integer()) return mpz_class(j.get<long>());
    if (j.is_string()) {
        mpz_class z;
        if (z.set_str(j.get<std::string>(), 10) != 0) throw Error(ErrorCode::ParseError, "bad integer " + j.dump());
        return z;
    }
    throw Error(ErrorCode::ParseError, "expected an integer, got " + j.dump());
}

Json poly_to_json(const IntPolynomial& p) {
    Json arr = Json::array();
    for (const auto& c : p.coefficients()) arr.push_back(integer_to_json(c));
    return arr;
}

IntPolynomial poly_from_json(const Json& j) {
    if (!j.is_array()) throw Error(ErrorCode::ParseError, "expected a coefficient array");
    std::vector<mpz_class> coeffs;
    for (const auto& c : j) coeffs.push_back(integer_from_json(c));
    return IntPolynomial(std::move(coeffs));
}

Field field_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("type") || !j["type"].is_string()) {
        throw Error(ErrorCode::ParseError, "field must be an object with a \"type\"");
    }
    const auto type = j["type"].get<std::string>();
    if (type == "rational") return Field::rational();
    if (type == "prime") {
        if (!j.contains("p") || !j["p"].is_number_integer() || j["p"].get<long long>() < 2) {
            throw Error(ErrorCode::ParseError, "prime field needs an integer \"p\" >= 2");
        }
        return Field::prime(j["p"].get<std::uint64_t>());
    }
    throw Error(ErrorCode::ParseError, "unknown field type \"" + type + "\"");
}

Matrix matrix_from_json(const Json& j, const Field& f, std::size_t n, const char* name) {
    if (!j.is_array() || j.size() != n) {
        throw Error(ErrorCode::ParseError, std::string("\"") + name + "\" must be an array of " + std::to_string(n) + " rows");
    }
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!j[i].is_array() || j[i].size() != n) {
            throw Error(ErrorCode::ParseError, std::string("row ") + std::to_string(i) + " of \"" + name + "\" must have " +
                                                   std::to_string(n) + " entries");
        }
        for (std::size_t k = 0; k < n; ++k) {
            const Json& e = j[i][k];
            if (e.is_number_integer()) {
                m(i, k) = FieldElement(f, e.get<long>());
            } else if (e.is_string()) {
                m(i, k) = FieldElement::parse(f, e.get<std::string>());
            } else {
                throw Error(ErrorCode::ParseError, "matrix entries must be integers or \"a/b\" strings");
            }
        }
    }
    return m;
}

Json matrix_to_json(const Matrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) {
            const mpq_class v = m(i, k).to_rational();
            if (v.get_den() == 1 && v.get_num().fits_slong_p()) {
                row.push_back(v.get_num().get_si());
            } else {
                row.push_back(v.get_str());
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

Json motive_to_json(const Motive& m) {
    return Json{{"text", m.to_string()},
                {"numerator", poly_to_json(m.numerator())},
                {"denominator", poly_to_json(m.denominator())}};
}

Motive motive_from_json(const Json& j) {
    if (j.is_string()) return Motive::parse(j.get<std::string>());
    if (!j.is_object() || !j.contains("numerator") || !j.contains("denominator")) {
        throw Error(ErrorCode::ParseError, "motive must be a string or {numerator, denominator}");
    }
    return Motive::normalize(poly_from_json(j["numerator"]), poly_from_json(j["denominator"]));
}

Json series_to_json(const MotiveSeries& s) {
    Json arr = Json::array();
    for (int i = 0; i <= s.order(); ++i) arr.push_back(Json{{"degree", i}, {"motive", motive_to_json(s[i])}});
    return arr;
}

ModulePresentation module_from_json(const Json& j) {
    if (!j.is_object()) throw Error(ErrorCode::ParseError, "module document must be a JSON object");
    for (const char* key : {"n", "field", "x", "y"}) {
        if (!j.contains(key)) throw Error(ErrorCode::ParseError, std::string("missing key \"") + key + "\"");
    }
    if (!j["n"].is_number_integer() || j["n"].get<long long>() < 0) {
        throw Error(ErrorCode::ParseError, "\"n\" must be a non-negative integer");
    }
    const auto n = j["n"].get<std::size_t>();
    const Field f = field_from_json(j["field"]);
    return validate(matrix_from_json(j["x"], f, n, "x"), matrix_from_json(j["y"], f, n, "y"));
}

Json module_to_json(const ModulePresentation& m) {
    Json field = m.field().is_prime() ? Json{{"type", "prime"}, {"p", m.field().p}} : Json{{"type", "rational"}};
    return Json{{"n", m.length()}, {"field", field}, {"x", matrix_to_json(m.x())}, {"y", matrix_to_json(m.y())}};
}

Json classification_report(const ModulePresentation& m) {
    const IsoClassLabel label = classify(m);
    const std::size_t end_dim = end_algebra(m).dimension;
    Json summands = Json::array();
    for (const auto& s : label.summands) summands.push_back(Json{{"label", s.name}, {"multiplicity", s.multiplicity}});
    return Json{{"schemaVersion", kSchemaVersion},
                {"label", label.name()},
                {"parameters", label.parameter_strings()},
                {"r", label.generators},
                {"powerDims", power_dims(m)},
                {"endDim", end_dim},
                {"autMotive", aut_motive(label, end_dim).to_string()},
                {"indecomposable", label.is_indecomposable()},
                {"summands", summands}};
}

}  // namespace pointmod
