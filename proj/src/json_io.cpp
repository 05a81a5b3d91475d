#include "gmono/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <variant>

namespace gmono::json_io {

namespace {

[[noreturn]] void fail(const std::string& what)
{
    throw std::invalid_argument(what);
}

const json& member(const json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        fail(std::string("missing key '") + key + "'");
    return j.at(key);
}

double number(const json& j, const char* what)
{
    if (!j.is_number())
        fail(std::string(what) + " must be a number");
    return j.get<double>();
}

Side decode_side(const json& j)
{
    const auto s = j.is_string() ? j.get<std::string>() : std::string{};
    if (s == "right")
        return Side::Right;
    if (s == "left")
        return Side::Left;
    fail("side must be \"right\" or \"left\"");
}

json encode_coeffs(const std::vector<Complex>& c)
{
    json arr = json::array();
    for (const auto& x : c)
        arr.push_back(encode(x));
    return arr;
}

std::vector<Complex> decode_coeffs(const json& j)
{
    if (!j.is_array())
        fail("coefficient list must be an array");
    std::vector<Complex> out;
    for (const auto& x : j)
        out.push_back(decode_complex(x));
    return out;
}

} // namespace

json encode(Complex c)
{
    return json::array({c.real(), c.imag()});
}

json encode(const Quaternion& q)
{
    return {{"e", json::array({encode(q[1]), encode(q[2]), encode(q[3]), encode(q[4])})}};
}

json encode(const IjkQuaternion& q)
{
    return {{"ijk", json::array({encode(q.q[0]), encode(q.q[1]), encode(q.q[2]), encode(q.q[3])})}};
}

json encode(const Triple& t)
{
    return {{"a1", encode(t.a1)}, {"a2", encode(t.a2)}, {"b1", encode(t.b1)}, {"b2", encode(t.b2)}};
}

json encode(const Point3& p)
{
    return json::array({p.x, p.y, p.z});
}

json encode(const AnalyticFunction& f)
{
    struct Visitor {
        json operator()(const Polynomial& p) const { return {{"poly", encode_coeffs(p.coeffs)}}; }
        json operator()(const PowerSeries& s) const
        {
            return {{"series", {{"center", encode(s.center)}, {"coeffs", encode_coeffs(s.coeffs)}, {"radius", s.radius}}}};
        }
        json operator()(const ExpScaled& e) const
        {
            return {{"exp", {{"amp", encode(e.amplitude)}, {"rate", encode(e.rate)}}}};
        }
        json operator()(const LinearCombination& lc) const
        {
            json arr = json::array();
            for (const auto& [c, g] : lc.terms)
                arr.push_back(json::array({encode(c), encode(*g)}));
            return {{"lincomb", arr}};
        }
    };
    return std::visit(Visitor{}, f.repr());
}

json encode(const GMonogenicMap& m)
{
    return {{"side", m.side() == Side::Right ? "right" : "left"},
            {"triple", encode(m.triple())},
            {"F1", encode(m.F(1))},
            {"F2", encode(m.F(2))},
            {"F3", encode(m.F(3))},
            {"F4", encode(m.F(4))}};
}

json encode(const QuaternionSeries& s)
{
    json coeffs = json::array();
    for (const auto& c : s.coeffs)
        coeffs.push_back(encode(c));
    return {{"side", s.side == Side::Right ? "right" : "left"}, {"triple", encode(s.triple)}, {"coeffs", coeffs}};
}

json encode(const PdeOperator& op)
{
    json terms = json::array();
    for (const auto& t : op.terms())
        terms.push_back({{"a", t.alpha}, {"b", t.beta}, {"g", t.gamma}, {"c", t.c}});
    return {{"n", op.order()}, {"terms", terms}};
}

Complex decode_complex(const json& j)
{
    if (j.is_number())
        return {j.get<double>(), 0.0};
    if (!j.is_array() || j.size() != 2)
        fail("complex number must be [re, im]");
    return {number(j[0], "real part"), number(j[1], "imaginary part")};
}

Quaternion decode_quaternion(const json& j)
{
    const bool ijk = j.is_object() && j.contains("ijk");
    const json& arr = ijk ? j.at("ijk") : member(j, "e");
    if (!arr.is_array() || arr.size() != 4)
        fail("quaternion needs four complex coefficients");
    std::array<Complex, 4> c;
    for (std::size_t k = 0; k < 4; ++k)
        c[k] = decode_complex(arr[k]);
    if (ijk)
        return from_ijk(IjkQuaternion{c});
    return {c[0], c[1], c[2], c[3]};
}

Triple triple_preset(const std::string& name)
{
    if (name == "laplace-t0")
        return kTripleT0;
    fail("unknown triple preset '" + name + "'");
}

Triple decode_triple(const json& j)
{
    if (j.is_string())
        return triple_preset(j.get<std::string>());
    return {decode_complex(member(j, "a1")), decode_complex(member(j, "a2")), decode_complex(member(j, "b1")),
            decode_complex(member(j, "b2"))};
}

Point3 decode_point(const json& j)
{
    if (!j.is_array() || j.size() != 3)
        fail("point must be [x, y, z]");
    return {number(j[0], "x"), number(j[1], "y"), number(j[2], "z")};
}

AnalyticFunction function_preset(const std::string& name)
{
    if (name == "zero")
        return AnalyticFunction{};
    if (name == "one")
        return AnalyticFunction::constant(1.0);
    if (name == "w")
        return AnalyticFunction::identity();
    if (name == "w2")
        return AnalyticFunction::polynomial({0.0, 0.0, 1.0});
    if (name == "w3")
        return AnalyticFunction::polynomial({0.0, 0.0, 0.0, 1.0});
    if (name == "exp")
        return AnalyticFunction::exp_scaled(1.0, 1.0);
    if (name == "sin")
        return AnalyticFunction::sine();
    if (name == "cos")
        return AnalyticFunction::cosine();
    fail("unknown function preset '" + name + "'");
}

AnalyticFunction decode_function(const json& j)
{
    if (j.is_string())
        return function_preset(j.get<std::string>());
    if (!j.is_object() || j.size() != 1)
        fail("function must be an object with exactly one of poly/series/exp/lincomb");
    if (j.contains("poly"))
        return AnalyticFunction::polynomial(decode_coeffs(j.at("poly")));
    if (j.contains("series")) {
        const json& s = j.at("series");
        return AnalyticFunction::power_series(decode_complex(member(s, "center")), decode_coeffs(member(s, "coeffs")),
                                              number(member(s, "radius"), "radius"));
    }
    if (j.contains("exp")) {
        const json& e = j.at("exp");
        return AnalyticFunction::exp_scaled(decode_complex(member(e, "amp")), decode_complex(member(e, "rate")));
    }
    if (j.contains("lincomb")) {
        const json& arr = j.at("lincomb");
        if (!arr.is_array())
            fail("lincomb must be an array of [coefficient, function] pairs");
        std::vector<std::pair<Complex, AnalyticFunction>> terms;
        for (const auto& t : arr) {
            if (!t.is_array() || t.size() != 2)
                fail("lincomb term must be [coefficient, function]");
            terms.emplace_back(decode_complex(t[0]), decode_function(t[1]));
        }
        return AnalyticFunction::linear_combination(terms);
    }
    fail("unknown function kind");
}

QuaternionSeries decode_series(const json& j)
{
    QuaternionSeries s;
    s.side = decode_side(member(j, "side"));
    s.triple = decode_triple(member(j, "triple"));
    const json& coeffs = member(j, "coeffs");
    if (!coeffs.is_array())
        fail("coeffs must be an array of quaternions");
    for (const auto& c : coeffs)
        s.coeffs.push_back(decode_quaternion(c));
    return s;
}

GMonogenicMap decode_map(const json& j)
{
    if (j.is_object() && j.contains("coeffs"))
        return canonicalize(decode_series(j));
    return {decode_side(member(j, "side")),
            decode_triple(member(j, "triple")),
            {decode_function(member(j, "F1")), decode_function(member(j, "F2")), decode_function(member(j, "F3")),
             decode_function(member(j, "F4"))}};
}

PdeOperator decode_operator(const json& j)
{
    if (j.is_string())
        return PdeOperator::preset(j.get<std::string>());
    const json& n = member(j, "n");
    if (!n.is_number_integer())
        fail("n must be an integer");
    const json& arr = member(j, "terms");
    if (!arr.is_array())
        fail("terms must be an array");
    std::vector<PdeTerm> terms;
    for (const auto& t : arr) {
        auto idx = [&](const char* key) {
            const json& v = member(t, key);
            if (!v.is_number_integer())
                fail(std::string(key) + " must be an integer");
            return v.get<int>();
        };
        terms.push_back({idx("a"), idx("b"), idx("g"), number(member(t, "c"), "c")});
    }
    return {n.get<int>(), std::move(terms)};
}

json read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        fail("cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return json::parse(buf.str());
    } catch (const json::parse_error& e) {
        fail("'" + path + "' is not valid JSON: " + e.what());
    }
}

} // namespace gmono::json_io
