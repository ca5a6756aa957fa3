#include "cupn/io.hpp"

#include <fstream>
#include <limits>
#include <set>
#include <sstream>

namespace cupn::io {

namespace {

const Json& require(const Json& doc, const char* key) {
    if (!doc.is_object() || !doc.contains(key)) {
        throw ParseError(std::string("missing key \"") + key + "\"");
    }
    return doc.at(key);
}

std::vector<Vertex> vertex_list(const Json& v) {
    if (!v.is_array() || v.empty()) throw ParseError("simplex must be a nonempty integer list");
    std::vector<Vertex> out;
    out.reserve(v.size());
    for (const auto& e : v) {
        if (!e.is_number_integer()) throw ParseError("simplex vertices must be integers");
        const auto value = e.get<long long>();
        if (value < std::numeric_limits<Vertex>::min() ||
            value > std::numeric_limits<Vertex>::max()) {
            throw ParseError("vertex label out of range: " + std::to_string(value));
        }
        out.push_back(static_cast<Vertex>(value));
    }
    return out;
}

Simplex strict_simplex(const Json& v) {
    auto vertices = vertex_list(v);
    for (std::size_t k = 1; k < vertices.size(); ++k) {
        if (vertices[k - 1] >= vertices[k]) {
            throw ParseError("simplex " + v.dump() + " is not strictly increasing");
        }
    }
    return Simplex(std::move(vertices));
}

Json simplex_to_json(const Simplex& s) {
    return Json(std::vector<Vertex>(s.vertices().begin(), s.vertices().end()));
}

Json terms_to_json(const std::map<Simplex, RingElement>& terms) {
    Json out = Json::array();
    for (const auto& [z, coeff] : terms) {
        out.push_back({{"simplex", simplex_to_json(z)}, {"coeff", integer_to_json(coeff.value())}});
    }
    return out;
}

}  // namespace

Json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path.string());
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

SimplicialComplex complex_from_json(const Json& doc) {
    const Json& list = require(doc, "maximal_simplices");
    if (!list.is_array()) throw ParseError("\"maximal_simplices\" must be a list");
    std::vector<Simplex> maximal;
    for (const auto& s : list) maximal.push_back(strict_simplex(s));
    return SimplicialComplex(std::move(maximal));
}

Json complex_to_json(const SimplicialComplex& K) {
    Json list = Json::array();
    for (const auto& s : K.maximal()) list.push_back(simplex_to_json(s));
    return Json{{"maximal_simplices", list}};
}

Ring ring_from_json(const Json& doc) {
    const Json& ring = require(doc, "ring");
    if (!ring.is_string()) throw ParseError("\"ring\" must be a string");
    const auto name = ring.get<std::string>();
    if (name == "Z") return Ring::integers();
    if (name == "Z2") return Ring::z2();
    if (name == "Zmod") {
        const Json& modulus = require(doc, "modulus");
        if (!modulus.is_number_integer()) throw ParseError("\"modulus\" must be an integer");
        return Ring::integers_mod(modulus.get<std::int64_t>());
    }
    throw ParseError("unknown ring \"" + name + "\"");
}

void ring_to_json(const Ring& ring, Json& doc) {
    if (ring.kind() == Ring::Kind::Integers) {
        doc["ring"] = "Z";
    } else {
        doc["ring"] = "Zmod";
        doc["modulus"] = ring.modulus();
    }
}

Json integer_to_json(const Integer& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() &&
        v <= std::numeric_limits<std::int64_t>::max()) {
        return Json(static_cast<std::int64_t>(v));
    }
    return Json(v.str());
}

Integer integer_from_json(const Json& v) {
    if (v.is_number_integer()) {
        if (v.is_number_unsigned()) return Integer(v.get<std::uint64_t>());
        return Integer(v.get<std::int64_t>());
    }
    if (v.is_string()) {
        const auto text = v.get<std::string>();
        const std::size_t digits_from = (!text.empty() && text[0] == '-') ? 1 : 0;
        if (text.size() == digits_from ||
            text.find_first_not_of("0123456789", digits_from) != std::string::npos) {
            throw ParseError("invalid integer \"" + text + "\"");
        }
        return Integer(text);
    }
    throw ParseError("coefficient must be an integer or a decimal string");
}

Cochain cochain_from_json(const Json& doc) {
    const Json& degree = require(doc, "degree");
    if (!degree.is_number_integer() || degree.get<long long>() < 0) {
        throw ParseError("\"degree\" must be a nonnegative integer");
    }
    const int p = degree.get<int>();
    const Ring ring = ring_from_json(doc);
    const Json& support = require(doc, "support");
    if (!support.is_array()) throw ParseError("\"support\" must be a list");

    Cochain c(p, ring);
    std::set<Simplex> seen;
    for (const auto& entry : support) {
        Simplex x = strict_simplex(require(entry, "simplex"));
        if (x.dim() != p) {
            throw ParseError("support simplex " + x.to_string() + " has dimension " +
                             std::to_string(x.dim()) + ", expected " + std::to_string(p));
        }
        if (!seen.insert(x).second) {
            throw ParseError("support simplex " + x.to_string() + " listed twice");
        }
        c.set(x, ring.from_integer(integer_from_json(require(entry, "coeff"))));
    }
    return c;
}

Json cochain_to_json(const Cochain& c) {
    Json doc{{"degree", c.degree()}};
    ring_to_json(c.ring(), doc);
    doc["support"] = terms_to_json(c.support());
    return doc;
}

FormalSum formal_sum_from_json(const Json& doc) {
    const Ring ring = ring_from_json(doc);
    const Json& terms = require(doc, "terms");
    if (!terms.is_array()) throw ParseError("\"terms\" must be a list");
    FormalSum s(ring);
    for (const auto& entry : terms) {
        s.add(strict_simplex(require(entry, "simplex")),
              ring.from_integer(integer_from_json(require(entry, "coeff"))));
    }
    return s;
}

Json formal_sum_to_json(const FormalSum& s) {
    Json doc = Json::object();
    ring_to_json(s.ring(), doc);
    doc["terms"] = terms_to_json(s.terms());
    return doc;
}

std::string format_terms(const FormalSum& s) {
    std::ostringstream os;
    for (const auto& [z, coeff] : s.terms()) os << coeff << "  " << z << '\n';
    return os.str();
}

}  // namespace cupn::io
