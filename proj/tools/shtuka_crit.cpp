// Command line front end.  Talks to the library exclusively through the C
// interface; everything below is argument plumbing and report rendering.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "shtukacrit/shtukacrit.h"

namespace {

using nlohmann::json;

struct Options {
    std::string format = "json";
    std::string scenario_path;
    std::string out_path;
};

int fail_invalid(const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    return 1;
}

int emit(const Options& opt, const std::string& text) {
    if (opt.out_path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(opt.out_path, std::ios::binary);
    if (!out)
        return fail_invalid("cannot open output file \"" + opt.out_path + "\"");
    out << text;
    return 0;
}

std::string take_string(char* s) {
    std::string out = s ? s : "";
    shtk_string_free(s);
    return out;
}

bool read_file(const std::string& path, std::string& bytes, std::string& err) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        err = "cannot read file \"" + path + "\"";
        return false;
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    bytes = ss.str();
    return true;
}

std::string render_verdict_text(const json& v) {
    std::ostringstream out;
    out << v.value("criterion", std::string("?")) << ": ";
    if (!v.value("applicable", true))
        out << "inapplicable";
    else
        out << (v.value("holds", false) ? "holds" : "fails");
    if (v.contains("note"))
        out << "  (" << v["note"].get<std::string>() << ")";
    out << "\n";
    if (v.contains("witnesses"))
        for (const auto& w : v["witnesses"]) {
            out << "  witness:";
            if (w.contains("m"))
                out << " m=" << w["m"].get<long long>();
            if (w.contains("Y")) {
                out << " Y={";
                bool first = true;
                for (const auto& y : w["Y"]) {
                    if (!first)
                        out << ",";
                    out << y.get<std::string>();
                    first = false;
                }
                out << "}";
            }
            out << " lhs=" << w["lhs"].get<std::string>()
                << " rhs=" << w["rhs"].get<std::string>();
            if (w.contains("note"))
                out << "  " << w["note"].get<std::string>();
            out << "\n";
        }
    return out.str();
}

std::string render_report_text(const json& r) {
    std::ostringstream out;
    out << "algebra: " << (r.value("algebra_valid", false) ? "valid" : "INVALID") << "\n";
    if (r.contains("violations"))
        for (const auto& v : r["violations"])
            out << "  " << v.get<std::string>() << "\n";
    if (r.contains("verdicts"))
        for (const auto& [name, v] : r["verdicts"].items())
            out << render_verdict_text(v);
    if (r.contains("components"))
        out << "components: " << r["components"].get<long long>() << "\n";
    return out.str();
}

// Maps a C-API status to the process exit code, printing the error.
int from_status(int status) {
    if (status == SHTK_OK)
        return 0;
    std::cerr << "error: " << shtk_last_error() << "\n";
    return status == SHTK_EINVAL ? 1 : 2;
}

int run_scenario_check(const Options& opt, const std::string& check) {
    if (opt.scenario_path.empty())
        return fail_invalid("--scenario FILE is required for this command");
    std::string bytes, err;
    if (!read_file(opt.scenario_path, bytes, err))
        return fail_invalid(err);
    shtk_scenario* scenario = nullptr;
    int status = shtk_scenario_parse(bytes.c_str(), &scenario);
    if (status != SHTK_OK)
        return from_status(status);
    char* out = nullptr;
    status = check == "report" ? shtk_scenario_report(scenario, &out)
                               : shtk_scenario_run(scenario, check.c_str(), &out);
    shtk_scenario_free(scenario);
    if (status != SHTK_OK)
        return from_status(status);
    std::string payload = take_string(out);
    if (opt.format == "json")
        return emit(opt, payload);
    json j = json::parse(payload);
    if (check == "report")
        return emit(opt, render_report_text(j));
    if (check == "validate") {
        std::ostringstream text;
        text << "algebra: " << (j.value("ok", false) ? "valid" : "INVALID") << "\n";
        for (const auto& v : j["violations"])
            text << "  " << v.get<std::string>() << "\n";
        return emit(opt, text.str());
    }
    return emit(opt, render_verdict_text(j));
}

bool parse_lambda(const std::string& csv, std::vector<long long>& out, std::string& err) {
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            out.push_back(std::stoll(item, &pos));
            if (pos != item.size())
                throw std::invalid_argument(item);
        } catch (const std::exception&) {
            err = "not an integer: \"" + item + "\"";
            return false;
        }
    }
    if (out.empty()) {
        err = "empty list";
        return false;
    }
    return true;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Decision criteria for moduli of division-algebra shtukas"};
    app.require_subcommand(1);
    app.fallthrough(); // global options may appear after the subcommand

    Options opt;
    app.add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    app.add_option("--scenario", opt.scenario_path, "Scenario JSON file");
    app.add_option("--out", opt.out_path, "Write output to FILE instead of stdout");

    for (const char* name : {"validate", "nonempty", "lau", "quasicompact", "report"})
        app.add_subcommand(name);

    auto* properness = app.add_subcommand("properness");
    std::string variant = "theorem";
    properness->add_option("--variant", variant, "Which subset count to use")
        ->check(CLI::IsMember({"intro", "theorem"}))
        ->capture_default_str();

    auto* degeneration = app.add_subcommand("degeneration");
    bool all_placements = false;
    degeneration->add_flag("--all-placements", all_placements,
                           "Search every assignment of legs to ramified places");

    auto* adm = app.add_subcommand("adm");
    long long adm_d = 0;
    std::string adm_lambda;
    adm->add_option("--d", adm_d)->required();
    adm->add_option("--lambda", adm_lambda, "Comma-separated coweight entries")->required();

    auto* newton = app.add_subcommand("newton");
    long long newton_d = 0;
    std::string newton_lambda;
    newton->add_option("--d", newton_d)->required();
    newton->add_option("--lambda", newton_lambda, "Comma-separated coweight entries")->required();

    auto* balance = app.add_subcommand("balance");
    long long balance_d = 0;
    std::string balance_deltas;
    balance->add_option("--d", balance_d)->required();
    balance->add_option("--deltas", balance_deltas, "Comma-separated one-counts e_i")->required();

    auto* isospace = app.add_subcommand("isospace");
    std::string isospace_file;
    isospace->add_option("--file", isospace_file, "Space presentation JSON")->required();

    auto* straight = app.add_subcommand("straight");
    std::string straight_file;
    straight->add_option("--tuple", straight_file, "Tuple JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        CLI::App* sub = app.get_subcommands().front();
        const std::string name = sub->get_name();

        if (name == "properness")
            return run_scenario_check(opt, variant == "intro" ? "main_intro" : "main_theorem");
        if (name == "degeneration")
            return run_scenario_check(
                opt, all_placements ? "degeneration_all_placements" : "degeneration");
        if (name == "validate" || name == "nonempty" || name == "lau" ||
            name == "quasicompact" || name == "report")
            return run_scenario_check(opt, name);

        if (name == "adm" || name == "newton") {
            std::vector<long long> lambda;
            std::string err;
            long long d = name == "adm" ? adm_d : newton_d;
            if (!parse_lambda(name == "adm" ? adm_lambda : newton_lambda, lambda, err))
                return fail_invalid(err);
            if (d < 1 || static_cast<long long>(lambda.size()) != d)
                return fail_invalid("--lambda must list exactly d entries");
            char* out = nullptr;
            int status = name == "adm" ? shtk_adm_set(d, lambda.data(), &out)
                                       : shtk_b_set(d, lambda.data(), &out);
            if (status != SHTK_OK)
                return from_status(status);
            std::string payload = take_string(out);
            if (opt.format == "json")
                return emit(opt, payload);
            json arr = json::parse(payload);
            std::ostringstream text;
            if (name == "adm") {
                for (const auto& e : arr) {
                    text << "v=" << e["v"].dump() << "  w=" << e["w"].dump()
                         << "  length=" << e["length"].get<long long>() << "  newton=[";
                    bool first = true;
                    for (const auto& s : e["newton"]) {
                        if (!first)
                            text << ",";
                        text << s.get<std::string>();
                        first = false;
                    }
                    text << "]\n";
                }
            } else {
                for (const auto& nu : arr) {
                    text << "(";
                    bool first = true;
                    for (const auto& s : nu["slopes"]) {
                        if (!first)
                            text << ",";
                        text << s.get<std::string>();
                        first = false;
                    }
                    text << ")" << (nu["basic"].get<bool>() ? "  [basic]" : "") << "\n";
                }
            }
            return emit(opt, text.str());
        }

        if (name == "balance") {
            std::vector<long long> deltas;
            std::string err;
            if (!parse_lambda(balance_deltas, deltas, err))
                return fail_invalid(err);
            char* out = nullptr;
            int status = shtk_balance(balance_d, deltas.data(),
                                      static_cast<long long>(deltas.size()), &out);
            if (status != SHTK_OK)
                return from_status(status);
            std::string payload = take_string(out);
            if (opt.format == "json")
                return emit(opt, payload);
            json arr = json::parse(payload);
            std::ostringstream text;
            for (const auto& row : arr)
                text << row.dump() << "\n";
            return emit(opt, text.str());
        }

        if (name == "isospace" || name == "straight") {
            std::string bytes, err;
            if (!read_file(name == "isospace" ? isospace_file : straight_file, bytes, err))
                return fail_invalid(err);
            if (name == "straight") {
                int result = 0;
                int status = shtk_straight(bytes.c_str(), &result);
                if (status != SHTK_OK)
                    return from_status(status);
                if (opt.format == "json")
                    return emit(opt, std::string("{\n  \"straight\": ") +
                                         (result ? "true" : "false") + "\n}\n");
                return emit(opt, std::string(result ? "straight" : "not straight") + "\n");
            }
            char* out = nullptr;
            int status = shtk_isospace_report(bytes.c_str(), &out);
            if (status != SHTK_OK)
                return from_status(status);
            std::string payload = take_string(out);
            if (opt.format == "json")
                return emit(opt, payload);
            json j = json::parse(payload);
            std::ostringstream text;
            const json& c = j["classification"];
            text << "d_pi=" << c["d_pi"].get<long long>()
                 << "  d_delta=" << c["d_delta"].get<long long>()
                 << "  dim=" << c["dim_over_Fbar"].get<long long>()
                 << "  m=" << c["m"].get<long long>()
                 << "  multiplicity=" << c["multiplicity"].get<long long>() << "\n";
            for (const auto& [x, slices] : j["localizations"].items()) {
                text << x << " (degree " << j["degrees"][x].get<std::string>() << "):";
                for (const auto& s : slices)
                    text << "  " << s["place"].get<std::string>() << " slope "
                         << s["slope"].get<std::string>() << " dim "
                         << s["dim"].get<long long>();
                text << "\n";
            }
            return emit(opt, text.str());
        }

        return fail_invalid("unknown subcommand");
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
