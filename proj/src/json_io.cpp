#include "cdk/json_io.hpp"

#include <sstream>

namespace cdk {

Json element_to_json(const Element& x) {
    Json coeffs = Json::array();
    for (const Rat& c : x.coeffs) coeffs.push_back(rat_to_string(c));
    return Json{{"level", x.level}, {"coeffs", coeffs}};
}

Element element_from_json(const Json& j) {
    const int level = j.at("level").get<int>();
    const Json& coeffs = j.at("coeffs");
    if (!coeffs.is_array() || coeffs.size() != (std::size_t(1) << level))
        throw std::invalid_argument("element JSON: expected 2^level coefficients");
    RatVec c;
    c.reserve(coeffs.size());
    for (const Json& v : coeffs) c.push_back(rat_from_string(v.get<std::string>()));
    return Element(level, std::move(c));
}

Json monomorphism_to_json(const Monomorphism& map) {
    Json matrix = Json::array();
    for (const RatVec& col : map.columns) {
        Json jcol = Json::array();
        for (const Rat& r : col) jcol.push_back(rat_to_string(r));
        matrix.push_back(jcol);
    }
    return Json{{"m", map.m}, {"n", map.n}, {"matrix", matrix}};
}

Monomorphism monomorphism_from_json(const Json& j) {
    Monomorphism map;
    map.m = j.at("m").get<int>();
    map.n = j.at("n").get<int>();
    for (const Json& jcol : j.at("matrix")) {
        RatVec col;
        for (const Json& v : jcol) col.push_back(rat_from_string(v.get<std::string>()));
        map.columns.push_back(std::move(col));
    }
    return map;
}

Json classification_to_json(const MonoType& t) {
    Json j;
    switch (t.tag) {
        case MonoTag::plain: j["type"] = "plain"; break;
        case MonoTag::type_I: j["type"] = "type_I"; break;
        case MonoTag::type_II: j["type"] = "type_II"; break;
    }
    auto coords = [](const RatVec& v) {
        Json a = Json::array();
        for (const Rat& r : v) a.push_back(rat_to_string(r));
        return a;
    };
    j["witness_e_tilde"] = t.witness_e_tilde ? coords(*t.witness_e_tilde) : Json();
    j["witness_epsilon"] = t.witness_epsilon ? coords(*t.witness_epsilon) : Json();
    return j;
}

Json subalgebra_to_json(const Subalgebra& sub) {
    Json basis = Json::array();
    for (const Element& b : sub.basis) basis.push_back(element_to_json(b));
    Json table = Json::array();
    for (const auto& row : sub.table) {
        Json jrow = Json::array();
        for (const auto& coords : row) {
            if (!coords) {
                jrow.push_back(Json());
                continue;
            }
            Json jc = Json::array();
            for (const Rat& r : *coords) jc.push_back(rat_to_string(r));
            jrow.push_back(jc);
        }
        table.push_back(jrow);
    }
    return Json{{"ambient_level", sub.ambient_level},
                {"basis", basis},
                {"table", table},
                {"closed", sub.closed}};
}

Json pair_to_json(const ZeroDivisorPair& p, std::size_t ann_dim) {
    return Json{{"level", p.level},
                {"x", element_to_json(p.x)},
                {"y", element_to_json(p.y)},
                {"ann_dim", ann_dim}};
}

std::string table_to_csv(const StructureTable& t) {
    std::ostringstream os;
    os << "i,j,sign,k\n";
    for (std::size_t i = 0; i < t.dim(); ++i)
        for (std::size_t j = 0; j < t.dim(); ++j)
            os << i << "," << j << "," << int(t.sign_at(i, j)) << "," << t.index_at(i, j)
               << "\n";
    return os.str();
}

std::string table_to_grid(const StructureTable& t) {
    const std::size_t dim = t.dim();
    std::vector<std::vector<std::string>> cells(dim, std::vector<std::string>(dim));
    std::size_t width = 0;
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            std::string s = (t.sign_at(i, j) < 0 ? "-e" : "e") + std::to_string(t.index_at(i, j));
            width = std::max(width, s.size());
            cells[i][j] = std::move(s);
        }
    }
    std::ostringstream os;
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            if (j) os << " ";
            os << std::string(width - cells[i][j].size(), ' ') << cells[i][j];
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace cdk
