#include "shtukacrit/json_io.hpp"

#include <algorithm>

namespace shtk::jsonio {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw invalid_input(path + ": " + what);
}

void expect_object(const json& j, const std::string& path) {
    if (!j.is_object())
        fail(path, "expected an object");
}

void check_keys(const json& j, const std::vector<std::string>& allowed,
                const std::string& path) {
    for (const auto& [key, value] : j.items())
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
            fail(path, "unknown key \"" + key + "\"");
}

long long get_integer(const json& j, const std::string& path) {
    if (!j.is_number_integer())
        fail(path, "expected an integer");
    return j.get<long long>();
}

std::string get_string(const json& j, const std::string& path) {
    if (!j.is_string())
        fail(path, "expected a string");
    return j.get<std::string>();
}

Rational get_rational(const json& j, const std::string& path) {
    if (j.is_number_integer())
        return Rational(j.get<long long>());
    if (j.is_string()) {
        try {
            return Rational::parse(j.get<std::string>());
        } catch (const invalid_input& e) {
            fail(path, e.what());
        }
    }
    fail(path, "expected a rational as \"p/q\" or an integer");
}

std::vector<long long> get_int_array(const json& j, const std::string& path) {
    if (!j.is_array())
        fail(path, "expected an array of integers");
    std::vector<long long> out;
    for (std::size_t k = 0; k < j.size(); ++k)
        out.push_back(get_integer(j[k], path + "/" + std::to_string(k)));
    return out;
}

} // namespace

AlgebraSpec parse_algebra(const json& j, const std::string& path) {
    expect_object(j, path);
    check_keys(j, {"d", "places", "invariants"}, path);
    AlgebraSpec spec;
    if (!j.contains("d"))
        fail(path, "missing key \"d\"");
    spec.d = get_integer(j["d"], path + "/d");
    if (spec.d < 1)
        fail(path + "/d", "index must be >= 1");
    if (j.contains("places")) {
        const json& places = j["places"];
        if (!places.is_array())
            fail(path + "/places", "expected an array");
        for (std::size_t k = 0; k < places.size(); ++k) {
            const std::string p = path + "/places/" + std::to_string(k);
            expect_object(places[k], p);
            check_keys(places[k], {"id", "deg"}, p);
            if (!places[k].contains("id"))
                fail(p, "missing key \"id\"");
            Place place;
            place.id = get_string(places[k]["id"], p + "/id");
            place.degree = places[k].contains("deg") ? get_integer(places[k]["deg"], p + "/deg") : 1;
            if (place.degree < 1)
                fail(p + "/deg", "degree must be >= 1");
            if (!spec.places.emplace(place.id, place).second)
                fail(p + "/id", "duplicate place id \"" + place.id + "\"");
        }
    }
    if (j.contains("invariants")) {
        const json& invs = j["invariants"];
        expect_object(invs, path + "/invariants");
        for (const auto& [id, value] : invs.items()) {
            const std::string p = path + "/invariants/" + id;
            if (!spec.places.contains(id))
                fail(p, "invariant at undeclared place \"" + id + "\"");
            spec.invariants.emplace(id, QModZ(get_rational(value, p)));
        }
    }
    ValidationReport report = validate_algebra(spec);
    if (!report.ok)
        fail(path, report.violations.front());
    return spec;
}

namespace {

Scenario parse_scenario(const json& j, const std::string& path) {
    expect_object(j, path);
    check_keys(j, {"algebra", "legs", "idele_degree"}, path);
    if (!j.contains("algebra"))
        fail(path, "missing key \"algebra\"");
    if (!j.contains("legs"))
        fail(path, "missing key \"legs\"");
    Scenario s;
    s.algebra = parse_algebra(j["algebra"], path + "/algebra");
    const json& legs = j["legs"];
    if (!legs.is_array() || legs.empty())
        fail(path + "/legs", "expected a non-empty array");
    std::vector<Coweight> lambdas(legs.size());
    std::vector<char> seen(legs.size(), 0);
    for (std::size_t k = 0; k < legs.size(); ++k) {
        const std::string p = path + "/legs/" + std::to_string(k);
        expect_object(legs[k], p);
        check_keys(legs[k], {"i", "lambda", "place", "frob"}, p);
        if (!legs[k].contains("i") || !legs[k].contains("lambda"))
            fail(p, "each leg needs \"i\" and \"lambda\"");
        long long i = get_integer(legs[k]["i"], p + "/i"); // 1-indexed
        if (i < 1 || static_cast<std::size_t>(i) > legs.size())
            fail(p + "/i", "leg index out of range 1.." + std::to_string(legs.size()));
        std::size_t idx = static_cast<std::size_t>(i - 1);
        if (seen[idx])
            fail(p + "/i", "duplicate leg index " + std::to_string(i));
        seen[idx] = 1;
        try {
            lambdas[idx] = Coweight(get_int_array(legs[k]["lambda"], p + "/lambda"));
        } catch (const invalid_input& e) {
            fail(p + "/lambda", e.what());
        }
        if (legs[k].contains("place")) {
            LegTarget target;
            target.place_id = get_string(legs[k]["place"], p + "/place");
            target.frobenius_index =
                legs[k].contains("frob") ? get_integer(legs[k]["frob"], p + "/frob") : 0;
            s.legs.entries[idx] = target;
        } else if (legs[k].contains("frob")) {
            fail(p + "/frob", "\"frob\" requires \"place\"");
        }
    }
    s.bounds = BoundTuple(std::move(lambdas));
    if (j.contains("idele_degree"))
        s.idele_degree = get_integer(j["idele_degree"], path + "/idele_degree");
    try {
        s.validate();
    } catch (const invalid_input& e) {
        fail(path, e.what());
    }
    return s;
}

} // namespace

ScenarioFile parse_scenario_file(const std::string& bytes) {
    json j = json::parse(bytes, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded())
        throw invalid_input("/: malformed JSON");
    expect_object(j, "/");
    check_keys(j, {"schema_version", "scenario", "commands"}, "/");
    ScenarioFile file;
    if (!j.contains("schema_version"))
        fail("/", "missing key \"schema_version\"");
    file.schema_version = static_cast<int>(get_integer(j["schema_version"], "/schema_version"));
    if (file.schema_version != 1)
        fail("/schema_version", "unsupported schema version " +
                                    std::to_string(file.schema_version));
    if (!j.contains("scenario"))
        fail("/", "missing key \"scenario\"");
    file.scenario = parse_scenario(j["scenario"], "/scenario");
    if (j.contains("commands")) {
        if (!j["commands"].is_array())
            fail("/commands", "expected an array of command names");
        for (std::size_t k = 0; k < j["commands"].size(); ++k)
            file.commands.push_back(
                get_string(j["commands"][k], "/commands/" + std::to_string(k)));
    }
    return file;
}

IsoSpaceSpec parse_isospace(const std::string& bytes) {
    json j = json::parse(bytes, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded())
        throw invalid_input("/: malformed JSON");
    expect_object(j, "/");
    check_keys(j, {"algebra", "L", "pi"}, "/");
    if (!j.contains("algebra") || !j.contains("L"))
        fail("/", "missing key \"algebra\" or \"L\"");
    IsoSpaceSpec spec;
    spec.algebra = parse_algebra(j["algebra"], "/algebra");
    const json& L = j["L"];
    expect_object(L, "/L");
    check_keys(L, {"degree", "places"}, "/L");
    if (!L.contains("degree"))
        fail("/L", "missing key \"degree\"");
    spec.extension.total_degree = get_integer(L["degree"], "/L/degree");
    if (L.contains("places")) {
        const json& places = L["places"];
        if (!places.is_array())
            fail("/L/places", "expected an array");
        for (std::size_t k = 0; k < places.size(); ++k) {
            const std::string p = "/L/places/" + std::to_string(k);
            expect_object(places[k], p);
            check_keys(places[k], {"id", "over", "local_degree", "deg"}, p);
            if (!places[k].contains("id") || !places[k].contains("over"))
                fail(p, "each place needs \"id\" and \"over\"");
            PlaceAbove above;
            above.id = get_string(places[k]["id"], p + "/id");
            above.local_degree = places[k].contains("local_degree")
                                     ? get_integer(places[k]["local_degree"], p + "/local_degree")
                                     : 1;
            above.absolute_degree =
                places[k].contains("deg") ? get_integer(places[k]["deg"], p + "/deg") : 1;
            std::string base = get_string(places[k]["over"], p + "/over");
            spec.extension.places_above[base].push_back(above);
        }
    }
    if (j.contains("pi")) {
        expect_object(j["pi"], "/pi");
        for (const auto& [id, value] : j["pi"].items())
            spec.pi_degrees.emplace(id, get_rational(value, "/pi/" + id));
    }
    try {
        spec.validate();
    } catch (const invalid_input& e) {
        fail("/", e.what());
    }
    return spec;
}

AffineElement parse_affine_element(const json& j, const std::string& path) {
    expect_object(j, path);
    check_keys(j, {"v", "w"}, path);
    if (!j.contains("v") || !j.contains("w"))
        fail(path, "needs \"v\" and \"w\"");
    std::vector<long long> v = get_int_array(j["v"], path + "/v");
    std::vector<long long> w1 = get_int_array(j["w"], path + "/w");
    std::vector<int> w;
    for (long long x : w1) {
        if (x < 1 || static_cast<std::size_t>(x) > w1.size())
            fail(path + "/w", "one-line permutation entries must lie in 1.." +
                                  std::to_string(w1.size()));
        w.push_back(static_cast<int>(x - 1));
    }
    try {
        return AffineElement(std::move(v), std::move(w));
    } catch (const invalid_input& e) {
        fail(path, e.what());
    }
}

std::vector<AffineElement> parse_tuple(const std::string& bytes) {
    json j = json::parse(bytes, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded())
        throw invalid_input("/: malformed JSON");
    const json* arr = &j;
    std::string path = "/";
    if (j.is_object()) {
        check_keys(j, {"tuple"}, "/");
        if (!j.contains("tuple"))
            fail("/", "missing key \"tuple\"");
        arr = &j["tuple"];
        path = "/tuple";
    }
    if (!arr->is_array() || arr->empty())
        fail(path, "expected a non-empty array of elements");
    std::vector<AffineElement> out;
    for (std::size_t k = 0; k < arr->size(); ++k)
        out.push_back(parse_affine_element((*arr)[k], path + "/" + std::to_string(k)));
    return out;
}

json affine_element_json(const AffineElement& e) {
    json w = json::array();
    for (int x : e.permutation())
        w.push_back(x + 1);
    return json{{"v", e.translation()}, {"w", w}};
}

json newton_json(const NewtonPoint& nu) {
    json arr = json::array();
    for (const auto& s : nu.slopes())
        arr.push_back(s.str());
    return arr;
}

json verdict_json(const Verdict& v) {
    json out{{"criterion", v.criterion}, {"applicable", v.applicable}, {"holds", v.holds}};
    if (!v.note.empty())
        out["note"] = v.note;
    json witnesses = json::array();
    for (const auto& w : v.witnesses) {
        json jw{{"lhs", w.lhs.str()}, {"rhs", w.rhs.str()}};
        if (w.m > 0)
            jw["m"] = w.m;
        if (!w.subset.empty())
            jw["Y"] = w.subset;
        if (!w.note.empty())
            jw["note"] = w.note;
        witnesses.push_back(std::move(jw));
    }
    if (!witnesses.empty())
        out["witnesses"] = std::move(witnesses);
    return out;
}

json full_report_json(const FullReport& r) {
    json out;
    out["algebra_valid"] = r.algebra_validation.ok;
    if (!r.algebra_validation.ok)
        out["violations"] = r.algebra_validation.violations;
    json verdicts = json::object();
    for (const auto& v : r.verdicts)
        verdicts[v.criterion] = verdict_json(v);
    out["verdicts"] = std::move(verdicts);
    if (r.components)
        out["components"] = *r.components;
    return out;
}

json simple_space_json(const SimpleSpaceReport& r) {
    json deltas = json::object();
    for (const auto& [id, inv] : r.delta_invariants)
        deltas[id] = inv.rep().str();
    return json{{"d_pi", r.d_pi},
                {"delta_invariants", std::move(deltas)},
                {"d_delta", r.d_delta},
                {"dim_over_Fbar", r.dim_over_Fbar},
                {"m", r.m},
                {"multiplicity", r.multiplicity}};
}

json localization_json(const std::vector<LocalSlice>& slices) {
    json arr = json::array();
    for (const auto& s : slices)
        arr.push_back(json{{"place", s.l_place_id}, {"slope", s.slope.str()}, {"dim", s.dim}});
    return arr;
}

std::string dump(const json& j) {
    return j.dump(2) + "\n";
}

} // namespace shtk::jsonio
