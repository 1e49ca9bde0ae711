#include "qho/json_io.hpp"

#include <fstream>

#include "qho/errors.hpp"
#include "qho/symtensor.hpp"

namespace qho {

using nlohmann::json;

nlohmann::json matrix_to_json(const Morphism& m) {
    json data = json::array();
    for (const cplx& z : m.entries) data.push_back(json::array({z.real(), z.imag()}));
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

namespace {

SpaceObject raw_space(std::size_t d) {
    return d == 1 ? SpaceObject::unit() : SpaceObject::base(d);
}

}  // namespace

Morphism matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("data")) {
        throw ParseError("matrix: expected object with rows, cols, data");
    }
    if (!j["rows"].is_number_integer() || !j["cols"].is_number_integer() ||
        j["rows"].get<long long>() < 0 || j["cols"].get<long long>() < 0) {
        throw ParseError("matrix: rows/cols must be non-negative integers");
    }
    const std::size_t rows = j["rows"].get<std::size_t>();
    const std::size_t cols = j["cols"].get<std::size_t>();
    const json& data = j["data"];
    if (!data.is_array() || data.size() != rows * cols) {
        throw ParseError("matrix: data length " +
                         std::to_string(data.is_array() ? data.size() : 0) + " does not equal " +
                         std::to_string(rows * cols));
    }
    std::vector<cplx> entries;
    entries.reserve(rows * cols);
    for (const json& pair : data) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
            throw ParseError("matrix: each entry must be a [re, im] pair");
        }
        entries.emplace_back(pair[0].get<double>(), pair[1].get<double>());
    }
    return Morphism::checked(raw_space(cols), raw_space(rows), std::move(entries));
}

nlohmann::json space_to_json(const SpaceObject& s) {
    json j{{"dim", s.dim()}};
    switch (s.kind()) {
        case SpaceObject::Kind::Base:
            j["structure"] = "base";
            break;
        case SpaceObject::Kind::Unit:
            j["structure"] = "unit";
            break;
        case SpaceObject::Kind::Tensor: {
            json parts = json::array();
            for (const auto& p : s.parts()) parts.push_back(space_to_json(p));
            j["structure"] = json{{"tensor", std::move(parts)}};
            break;
        }
        case SpaceObject::Kind::Biproduct: {
            json parts = json::array();
            for (const auto& p : s.parts()) parts.push_back(space_to_json(p));
            j["structure"] = json{{"biproduct", std::move(parts)}};
            break;
        }
        case SpaceObject::Kind::Fock:
            j["structure"] =
                json{{"fock", json{{"base", space_to_json(s.parts().front())},
                                   {"cutoff", s.cutoff()}}}};
            break;
        case SpaceObject::Kind::Dual:
            j = space_to_json(s.parts().front());
            j["dual"] = true;
            break;
    }
    return j;
}

SpaceObject space_from_json(const json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("structure")) {
        throw ParseError("space: expected object with dim and structure");
    }
    if (!j["dim"].is_number_integer() || j["dim"].get<long long>() < 0) {
        throw ParseError("space: dim must be a non-negative integer");
    }
    const std::size_t dim = j["dim"].get<std::size_t>();
    const json& st = j["structure"];
    SpaceObject s;
    if (st.is_string()) {
        const std::string kind = st.get<std::string>();
        if (kind == "base") {
            s = SpaceObject::base(dim);
        } else if (kind == "unit") {
            if (dim != 1) throw ParseError("space: unit must have dim 1");
            s = SpaceObject::unit();
        } else {
            throw ParseError("space: unknown structure tag '" + kind + "'");
        }
    } else if (st.is_object() && st.contains("tensor")) {
        std::vector<SpaceObject> parts;
        for (const json& p : st["tensor"]) parts.push_back(space_from_json(p));
        s = SpaceObject::tensor_list(std::move(parts));
    } else if (st.is_object() && st.contains("biproduct")) {
        std::vector<SpaceObject> parts;
        for (const json& p : st["biproduct"]) parts.push_back(space_from_json(p));
        s = SpaceObject::biproduct(std::move(parts));
    } else if (st.is_object() && st.contains("fock")) {
        const json& f = st["fock"];
        if (!f.contains("base") || !f.contains("cutoff")) {
            throw ParseError("space: fock needs base and cutoff");
        }
        if (!f["cutoff"].is_number_integer() || f["cutoff"].get<long long>() < 0) {
            throw ParseError("space: cutoff must be a non-negative integer");
        }
        SpaceObject base = space_from_json(f["base"]);
        const std::size_t cutoff = f["cutoff"].get<std::size_t>();
        std::size_t total = 0;
        for (std::size_t n = 0; n <= cutoff; ++n) {
            total += (n == 0) ? 1 : static_cast<std::size_t>(binom(base.dim() + n - 1, n));
        }
        s = SpaceObject::fock(std::move(base), cutoff, total);
    } else {
        throw ParseError("space: unknown structure");
    }
    if (s.dim() != dim) {
        throw ParseError("space: declared dim " + std::to_string(dim) +
                         " does not match structure dim " + std::to_string(s.dim()));
    }
    if (j.contains("dual") && j["dual"].get<bool>()) s = SpaceObject::dual(std::move(s));
    return s;
}

nlohmann::json monoid_to_json(const MonoidPresentation& m) {
    return json{{"carrier", space_to_json(m.carrier)},
                {"mult", matrix_to_json(m.mult)},
                {"unit", matrix_to_json(m.unit)}};
}

MonoidPresentation monoid_from_json(const json& j, double tolerance) {
    if (!j.is_object() || !j.contains("carrier") || !j.contains("mult") || !j.contains("unit")) {
        throw ParseError("monoid: expected object with carrier, mult, unit");
    }
    const SpaceObject carrier = space_from_json(j["carrier"]);
    Morphism mult = matrix_from_json(j["mult"]);
    Morphism unit = matrix_from_json(j["unit"]);
    const std::size_t d = carrier.dim();
    if (mult.rows() != d || mult.cols() != d * d) {
        throw ParseError("monoid: mult must be " + std::to_string(d) + "x" +
                         std::to_string(d * d));
    }
    if (unit.rows() != d || unit.cols() != 1) {
        throw ParseError("monoid: unit must be " + std::to_string(d) + "x1");
    }
    mult = cast(mult, SpaceObject::tensor(carrier, carrier), carrier);
    unit = cast(unit, SpaceObject::unit(), carrier);
    MonoidPresentation mono{carrier, std::move(mult), std::move(unit), false};
    // commutativity is a property of the data, not a stored flag on the wire
    mono.commutative =
        max_abs_diff(compose(mono.mult, swap_morphism(carrier, carrier)), mono.mult) <= tolerance;
    return mono;
}

nlohmann::json comonoid_to_json(const ComonoidPresentation& c) {
    return json{{"carrier", space_to_json(c.carrier)},
                {"comult", matrix_to_json(c.comult)},
                {"counit", matrix_to_json(c.counit)}};
}

ComonoidPresentation comonoid_from_json(const json& j) {
    if (!j.is_object() || !j.contains("carrier") || !j.contains("comult") ||
        !j.contains("counit")) {
        throw ParseError("comonoid: expected object with carrier, comult, counit");
    }
    const SpaceObject carrier = space_from_json(j["carrier"]);
    Morphism comult = matrix_from_json(j["comult"]);
    Morphism counit = matrix_from_json(j["counit"]);
    const std::size_t d = carrier.dim();
    if (comult.rows() != d * d || comult.cols() != d) {
        throw ParseError("comonoid: comult must be " + std::to_string(d * d) + "x" +
                         std::to_string(d));
    }
    if (counit.rows() != 1 || counit.cols() != d) {
        throw ParseError("comonoid: counit must be 1x" + std::to_string(d));
    }
    comult = cast(comult, carrier, SpaceObject::tensor(carrier, carrier));
    counit = cast(counit, carrier, SpaceObject::unit());
    return {carrier, std::move(comult), std::move(counit)};
}

Morphism load_matrix(const std::string& path) {
    return matrix_from_json(read_json_file(path));
}

void save_matrix(const std::string& path, const Morphism& m) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open '" + path + "' for writing");
    out << matrix_to_json(m).dump(2) << "\n";
}

nlohmann::json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ParseError("invalid JSON in '" + path + "': " + e.what());
    }
    return j;
}

}  // namespace qho
