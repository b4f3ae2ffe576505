#include "polyred/encoding.hpp"

#include <regex>

namespace polyred {

Rational decode_rational(const std::string& text)
{
    static const std::regex valid("-?[0-9]+/[1-9][0-9]*");
    static const std::regex zero_den("-?[0-9]+/0+");
    if (std::regex_match(text, zero_den))
        throw ParseError("zero denominator in \"" + text + "\"");
    if (!std::regex_match(text, valid))
        throw ParseError("malformed rational \"" + text + "\", expected p/q");
    return parse_rational(text);
}

Json encode_element(const FieldElement& x)
{
    Json out = Json::array();
    for (const auto& q : x.coords())
        out.push_back(format_rational(q));
    return out;
}

FieldElement decode_element(const Json& j, const FieldRef& field)
{
    if (!j.is_array())
        throw ParseError("element must be an array of \"p/q\" strings");
    if (j.size() != field->degree())
        throw ParseError("element has " + std::to_string(j.size()) + " coordinates, expected " +
                         std::to_string(field->degree()));
    std::vector<Rational> coords;
    for (const auto& c : j) {
        if (!c.is_string())
            throw ParseError("element coordinates must be strings");
        coords.push_back(decode_rational(c.get<std::string>()));
    }
    return FieldElement(field, std::move(coords));
}

Json encode_set(const FiniteSubset& s)
{
    Json out = Json::array();
    for (const auto& x : s.elems())
        out.push_back(encode_element(x));
    return out;
}

FiniteSubset decode_set(const Json& j, const FieldRef& field)
{
    if (!j.is_array() || j.empty())
        throw ParseError("a set must be a non-empty array of elements");
    std::vector<FieldElement> elems;
    for (const auto& e : j)
        elems.push_back(decode_element(e, field));
    try {
        return FiniteSubset(std::move(elems));
    } catch (const PreconditionError& e) {
        throw ParseError(e.what());
    }
}

Json encode_polynomial(const Polynomial& p)
{
    Json out = Json::array();
    for (const auto& c : p.coeffs())
        out.push_back(encode_element(c));
    return out;
}

Json encode_linear(const LinearPoly& p)
{
    return Json{{"c", encode_element(p.c())}, {"c_prime", encode_element(p.c_prime())}};
}

Json encode_invariant(const ClassInvariant& inv)
{
    Json lambdas = Json::array();
    for (const auto& x : inv.lambdas)
        lambdas.push_back(encode_element(x));
    return Json{{"n", inv.n}, {"lambdas", std::move(lambdas)}};
}

Json encode_reduction(const Reduction& r)
{
    Json fibers = Json::array();
    for (const auto& f : r.fibers) {
        Json pre = Json::array();
        for (const auto& e : f.preimages)
            pre.push_back(Json{{"a", encode_element(e.a)}, {"multiplicity", e.multiplicity}});
        fibers.push_back(Json{{"target", encode_element(f.target)}, {"preimages", std::move(pre)}});
    }
    return Json{{"degree", r.gamma}, {"coeffs", encode_polynomial(r.poly)}, {"fibers", std::move(fibers)}};
}

Json encode_exceptional(const ExceptionalStructure& e)
{
    Json gons = Json::array();
    for (const auto& g : e.gons) {
        Json gon = Json::array();
        for (const auto& x : g)
            gon.push_back(encode_element(x));
        gons.push_back(std::move(gon));
    }
    return Json{{"r", e.r},
                {"s", e.s},
                {"barycenter", encode_element(e.barycenter)},
                {"gons", std::move(gons)},
                {"includes_barycenter", e.includes_barycenter},
                {"group_order", e.group_order}};
}

Json encode_matrix(const Matrix& m)
{
    Json out = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c)
            row.push_back(encode_element(m.at(r, c)));
        out.push_back(std::move(row));
    }
    return out;
}

}  // namespace polyred
