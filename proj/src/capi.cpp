#include "shtukacrit/shtukacrit.h"

#include <cstring>
#include <string>

#include "shtukacrit/json_io.hpp"

namespace {

thread_local std::string g_last_error = "ok";

char* copy_out(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

// Runs fn, translating the exception idiom of the core into error codes.
template <typename Fn>
int guarded(Fn&& fn) {
    try {
        fn();
        g_last_error = "ok";
        return SHTK_OK;
    } catch (const shtk::invalid_input& e) {
        g_last_error = e.what();
        return SHTK_EINVAL;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return SHTK_EINTERNAL;
    } catch (...) {
        g_last_error = "unknown internal error";
        return SHTK_EINTERNAL;
    }
}

shtk::Coweight coweight_from(long long d, const long long* lambda) {
    if (d < 1 || lambda == nullptr)
        throw shtk::invalid_input("need d >= 1 and a lambda array");
    return shtk::Coweight(
        std::vector<long long>(lambda, lambda + static_cast<std::size_t>(d)));
}

} // namespace

struct shtk_scenario {
    shtk::jsonio::ScenarioFile file;
};

extern "C" {

const char* shtk_last_error(void) {
    return g_last_error.c_str();
}

void shtk_string_free(char* s) {
    delete[] s;
}

int shtk_scenario_parse(const char* bytes, shtk_scenario** out) {
    return guarded([&] {
        if (bytes == nullptr || out == nullptr)
            throw shtk::invalid_input("null argument");
        auto parsed = shtk::jsonio::parse_scenario_file(bytes);
        *out = new shtk_scenario{std::move(parsed)};
    });
}

void shtk_scenario_free(shtk_scenario* s) {
    delete s;
}

int shtk_scenario_report(const shtk_scenario* s, char** json_out) {
    return guarded([&] {
        if (s == nullptr || json_out == nullptr)
            throw shtk::invalid_input("null argument");
        auto report = shtk::full_report(s->file.scenario);
        *json_out = copy_out(shtk::jsonio::dump(shtk::jsonio::full_report_json(report)));
    });
}

int shtk_scenario_run(const shtk_scenario* s, const char* check, char** json_out) {
    return guarded([&] {
        if (s == nullptr || check == nullptr || json_out == nullptr)
            throw shtk::invalid_input("null argument");
        const shtk::Scenario& sc = s->file.scenario;
        const std::string name = check;
        shtk::jsonio::json out;
        if (name == "validate") {
            auto report = shtk::validate_algebra(sc.algebra);
            out = shtk::jsonio::json{{"ok", report.ok}, {"violations", report.violations}};
        } else if (name == "nonempty") {
            out = shtk::jsonio::verdict_json(shtk::check_nonempty(sc));
        } else if (name == "lau") {
            out = shtk::jsonio::verdict_json(shtk::check_lau(sc));
        } else if (name == "main_intro") {
            out = shtk::jsonio::verdict_json(shtk::check_main(sc, shtk::MainVariant::intro));
        } else if (name == "main_theorem") {
            out = shtk::jsonio::verdict_json(shtk::check_main(sc, shtk::MainVariant::theorem));
        } else if (name == "quasicompact") {
            out = shtk::jsonio::verdict_json(shtk::check_quasicompact(sc));
        } else if (name == "degeneration") {
            out = shtk::jsonio::verdict_json(shtk::find_blocking(sc));
        } else if (name == "degeneration_all_placements") {
            out = shtk::jsonio::verdict_json(shtk::find_blocking_all_placements(sc));
        } else {
            throw shtk::invalid_input("unknown check \"" + name + "\"");
        }
        *json_out = copy_out(shtk::jsonio::dump(out));
    });
}

int shtk_adm_set(long long d, const long long* lambda, char** json_out) {
    return guarded([&] {
        if (json_out == nullptr)
            throw shtk::invalid_input("null argument");
        shtk::AdmissibleSet adm = shtk::admissible_set(coweight_from(d, lambda));
        shtk::jsonio::json arr = shtk::jsonio::json::array();
        for (const auto& e : adm.elements) {
            auto j = shtk::jsonio::affine_element_json(e);
            j["length"] = shtk::length(e);
            j["newton"] = shtk::jsonio::newton_json(shtk::newton_point_of(e));
            arr.push_back(std::move(j));
        }
        *json_out = copy_out(shtk::jsonio::dump(arr));
    });
}

int shtk_b_set(long long d, const long long* lambda, char** json_out) {
    return guarded([&] {
        if (json_out == nullptr)
            throw shtk::invalid_input("null argument");
        shtk::Coweight cw = coweight_from(d, lambda);
        shtk::NewtonPoint basic = shtk::basic_point(cw);
        shtk::jsonio::json arr = shtk::jsonio::json::array();
        for (const auto& nu : shtk::b_set(cw))
            arr.push_back(shtk::jsonio::json{{"slopes", shtk::jsonio::newton_json(nu)},
                                             {"basic", nu == basic}});
        *json_out = copy_out(shtk::jsonio::dump(arr));
    });
}

int shtk_balance(long long d, const long long* deltas, long long n, char** json_out) {
    return guarded([&] {
        if (json_out == nullptr || (n > 0 && deltas == nullptr))
            throw shtk::invalid_input("null argument");
        if (d < 1 || n < 0)
            throw shtk::invalid_input("need d >= 1 and n >= 0");
        std::vector<shtk::Coweight> weights;
        for (long long i = 0; i < n; ++i) {
            long long e = deltas[i];
            if (e < 0 || e >= d)
                throw shtk::invalid_input("each e_i must lie in [0, d)");
            std::vector<long long> entries(static_cast<std::size_t>(d), 0);
            for (long long j = 0; j < e; ++j)
                entries[static_cast<std::size_t>(j)] = 1;
            weights.emplace_back(std::move(entries));
        }
        *json_out = copy_out(shtk::jsonio::dump(shtk::jsonio::json(shtk::balance(weights))));
    });
}

int shtk_isospace_report(const char* bytes, char** json_out) {
    return guarded([&] {
        if (bytes == nullptr || json_out == nullptr)
            throw shtk::invalid_input("null argument");
        shtk::IsoSpaceSpec spec = shtk::jsonio::parse_isospace(bytes);
        shtk::jsonio::json out;
        out["classification"] = shtk::jsonio::simple_space_json(shtk::classify_simple(spec));
        shtk::jsonio::json localizations = shtk::jsonio::json::object();
        shtk::jsonio::json degrees = shtk::jsonio::json::object();
        for (const auto& [x, place] : spec.algebra.places) {
            localizations[x] = shtk::jsonio::localization_json(shtk::localize(spec, x));
            degrees[x] = shtk::degree_at(spec, x).str();
        }
        out["localizations"] = std::move(localizations);
        out["degrees"] = std::move(degrees);
        *json_out = copy_out(shtk::jsonio::dump(out));
    });
}

int shtk_straight(const char* bytes, int* result) {
    return guarded([&] {
        if (bytes == nullptr || result == nullptr)
            throw shtk::invalid_input("null argument");
        *result = shtk::is_straight(shtk::jsonio::parse_tuple(bytes)) ? 1 : 0;
    });
}

} // extern "C"
