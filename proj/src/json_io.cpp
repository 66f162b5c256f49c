#include "lng/json_io.hpp"

#include <cmath>
#include <cstdio>

namespace lng {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error("BadRequest", what); }

void dump_to(const Json& j, std::string& out) {
    switch (j.type()) {
        case Json::value_t::object: {
            out += '{';
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) out += ',';
                first = false;
                out += Json(it.key()).dump();
                out += ':';
                dump_to(it.value(), out);
            }
            out += '}';
            break;
        }
        case Json::value_t::array: {
            out += '[';
            for (std::size_t i = 0; i < j.size(); ++i) {
                if (i) out += ',';
                dump_to(j[i], out);
            }
            out += ']';
            break;
        }
        case Json::value_t::number_float: {
            double v = j.get<double>();
            if (!std::isfinite(v)) {
                out += "null";
                break;
            }
            if (v == 0.0) v = 0.0;  // drop the sign of zero
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.17g", v);
            out += buf;
            break;
        }
        default: out += j.dump();
    }
}

const Json& field(const Json& j, const char* name) {
    if (!j.is_object() || !j.contains(name)) bad(std::string("missing field ") + name);
    return j.at(name);
}

}  // namespace

std::string dump(const Json& j) {
    std::string s;
    dump_to(j, s);
    return s;
}

void check_fields(const Json& j, std::initializer_list<const char*> allowed) {
    if (!j.is_object()) bad("expected an object");
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool ok = false;
        for (const char* a : allowed) ok = ok || it.key() == a;
        if (!ok) bad("unknown field " + it.key());
    }
}

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        bad(std::string("malformed JSON: ") + e.what());
    }
}

Json to_json(const Q& q) { return to_string(q); }

Json to_json(cplx z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const NumComplex& z) { return Json{{"value", to_json(z.value)}, {"err", z.err}}; }

Json to_json(const ExactScalar& e) {
    switch (e.kind()) {
        case ExactScalar::Kind::rat: return Json{{"kind", "rat"}, {"v", to_string(e.rat())}};
        case ExactScalar::Kind::quad: {
            const QuadElem& q = e.quad();
            return Json{{"kind", "quad"}, {"D", q.D}, {"x", to_string(q.x)}, {"y", to_string(q.y)}};
        }
        case ExactScalar::Kind::sym: {
            const SymbolicOmega& s = e.sym();
            return Json{{"kind", "sym"},
                        {"t", s.symbol},
                        {"M", Json::array({Json::array({to_string(s.M.a), to_string(s.M.b)}),
                                           Json::array({to_string(s.M.c), to_string(s.M.d)})})},
                        {"anchor", to_json(s.anchor)}};
        }
    }
    return nullptr;
}

Json to_json(const QVector& v) {
    Json j{{"basis", v.basis()}, {"coords", Json::array()}};
    for (const Q& c : v.coords()) j["coords"].push_back(to_string(c));
    if (v.minpoly()) j["minpoly"] = Json{{"B", to_string(v.minpoly()->B)}, {"A", to_string(v.minpoly()->A)}};
    return j;
}

Json to_json(const Witness& w) {
    return Json{{"a", w.a.get_si()}, {"b", w.b.get_si()}, {"c", w.c.get_si()}, {"d", w.d.get_si()},
                {"det", Z(w.det()).get_si()}};
}

Json to_json(const Lattice& L) { return Json{{"w1", to_json(L.w1())}, {"w2", to_json(L.w2())}}; }

Json to_json(const GroupDescriptor& g) {
    Json j{{"kind", kind_name(g.kind)}};
    if (g.omega) j["omega"] = to_json(*g.omega);
    if (g.xi) j["xi"] = to_json(*g.xi);
    if (!g.anchors.empty()) {
        j["anchors"] = Json::object();
        for (const auto& [k, v] : g.anchors) j["anchors"][k] = to_json(v);
    }
    if (!g.factors.empty()) {
        j["factors"] = Json::array();
        for (const auto& f : g.factors) j["factors"].push_back(to_json(f));
    }
    return j;
}

Json to_json(const IsoWitness& w) {
    Json j;
    if (w.dim == 1) {
        j["scale"] = to_json(w.matrix[0][0]);
    } else {
        j["matrix"] = Json::array();
        for (const auto& row : w.matrix) j["matrix"].push_back(Json::array({to_json(row[0]), to_json(row[1])}));
    }
    if (w.abcd) j["abcd"] = to_json(*w.abcd);
    j["period_multiplier"] = w.period_multiplier;
    j["trace"] = w.trace;
    return j;
}

Json to_json(const AutDescriptor& a) {
    Json j{{"case", a.case_id}, {"group", a.group}};
    if (a.one_parameter) {
        j["family"] = a.family;
        j["domain"] = a.domain;
    }
    return j;
}

Json to_json(const AlgGroupLabel& l) {
    Json j{{"base_field", l.base_field}, {"shape", l.shape}, {"label", l.text()}, {"type", l.type}};
    if (!l.factors.empty()) j["factors"] = l.factors;
    if (l.curve) j["curve"] = to_json(*l.curve);
    return j;
}

Json to_json(const ProjPoint& p) {
    Json j{{"coords", Json::array()}, {"pole_branch", p.pole_branch}};
    for (const auto& c : p.coords) j["coords"].push_back(to_json(c));
    return j;
}

Json to_json(const PeriodGroup& p) {
    Json j{{"rank", p.rank}, {"generators", Json::array()}};
    for (const auto& g : p.generators) j["generators"].push_back(Json::array({to_json(g[0]), to_json(g[1])}));
    if (p.derived) j["derived"] = true;
    return j;
}

Json to_json(const Report& r) {
    Json j{{"suite", r.suite}, {"pass", r.pass()}, {"max_residual", r.max_residual()}, {"samples", r.samples},
           {"seed", r.seed}, {"tol", r.tol}, {"checks", Json::array()}};
    for (const auto& c : r.checks) {
        Json k{{"name", c.name}, {"pass", c.pass}, {"residual", c.residual}, {"bound", c.bound}};
        if (c.above) k["must_exceed"] = true;
        j["checks"].push_back(std::move(k));
    }
    if (!r.notes.empty()) j["notes"] = r.notes;
    return j;
}

Q rational_from_json(const Json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Q(j.get<long>());
    bad("expected a rational string \"p/q\" or an integer");
}

cplx complex_from_json(const Json& j) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
        return {j[0].get<double>(), j[1].get<double>()};
    bad("expected a number or [re, im]");
}

ExactScalar scalar_from_json(const Json& j) {
    if (j.is_string() || j.is_number_integer()) return ExactScalar(rational_from_json(j));
    const std::string kind = field(j, "kind").get<std::string>();
    if (kind == "rat") {
        check_fields(j, {"kind", "v"});
        return ExactScalar(rational_from_json(field(j, "v")));
    }
    if (kind == "quad") {
        check_fields(j, {"kind", "D", "x", "y"});
        const Json& D = field(j, "D");
        if (!D.is_number_integer()) bad("D must be an integer");
        return ExactScalar(QuadElem(D.get<long>(), rational_from_json(field(j, "x")), rational_from_json(field(j, "y"))));
    }
    if (kind == "sym") {
        check_fields(j, {"kind", "t", "M", "anchor"});
        const Json& M = field(j, "M");
        if (!M.is_array() || M.size() != 2 || M[0].size() != 2 || M[1].size() != 2) bad("M must be a 2x2 array");
        Mat2Q m{rational_from_json(M[0][0]), rational_from_json(M[0][1]), rational_from_json(M[1][0]),
                rational_from_json(M[1][1])};
        return ExactScalar(SymbolicOmega(field(j, "t").get<std::string>(), m, complex_from_json(field(j, "anchor"))));
    }
    bad("unknown scalar kind " + kind);
}

QVector qvector_from_json(const Json& j) {
    if (j.is_string() && !j.get<std::string>().empty() && !std::isdigit(static_cast<unsigned char>(j.get<std::string>()[0])) &&
        j.get<std::string>()[0] != '-')
        return QVector::symbol(j.get<std::string>());
    if (j.is_string() || j.is_number_integer()) return QVector::rational(rational_from_json(j));
    check_fields(j, {"basis", "coords", "minpoly"});
    std::vector<std::string> basis = field(j, "basis").get<std::vector<std::string>>();
    std::vector<Q> coords;
    for (const auto& c : field(j, "coords")) coords.push_back(rational_from_json(c));
    std::optional<MinPoly> mp;
    if (j.contains("minpoly")) {
        check_fields(j["minpoly"], {"B", "A"});
        mp = MinPoly{rational_from_json(field(j["minpoly"], "B")), rational_from_json(field(j["minpoly"], "A"))};
    }
    return QVector(basis, coords, mp);
}

Lattice lattice_from_json(const Json& j) {
    check_fields(j, {"w1", "w2"});
    const Json& a = field(j, "w1");
    const Json& b = field(j, "w2");
    auto numeric = [](const Json& x) { return x.is_array() || x.is_number_float(); };
    if (numeric(a) || numeric(b)) {
        cplx w1 = numeric(a) ? complex_from_json(a) : scalar_from_json(a).value();
        cplx w2 = numeric(b) ? complex_from_json(b) : scalar_from_json(b).value();
        return Lattice::numeric(w1, w2);
    }
    return Lattice::from_exact(scalar_from_json(a), scalar_from_json(b));
}

GroupDescriptor descriptor_from_json(const Json& j) {
    check_fields(j, {"kind", "omega", "a", "xi", "anchors", "factors"});
    GroupDescriptor g;
    g.kind = parse_kind(field(j, "kind").get<std::string>());
    if (j.contains("omega") && j.contains("a")) bad("give omega or a, not both");
    if (j.contains("omega")) g.omega = scalar_from_json(j["omega"]);
    if (j.contains("a")) g.omega = scalar_from_json(j["a"]);
    if (j.contains("xi")) g.xi = qvector_from_json(j["xi"]);
    if (j.contains("anchors")) {
        if (!j["anchors"].is_object()) bad("anchors must be an object");
        for (auto it = j["anchors"].begin(); it != j["anchors"].end(); ++it)
            g.anchors[it.key()] = complex_from_json(it.value());
    }
    if (j.contains("factors"))
        for (const auto& f : j["factors"]) g.factors.push_back(descriptor_from_json(f));
    if (g.xi && g.omega && !is_real_kind(g.kind)) g.xi->set_minpoly(minpoly_of(*g.omega));
    validate(g);
    return g;
}

}  // namespace lng
