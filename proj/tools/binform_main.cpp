// binform: exact invariants, covariants, automorphism groups, and surface
// lines of binary cubic and quartic forms (quadratics through sextics for
// the basic operations).

#include "binform/errors.hpp"
#include "binform/parse.hpp"
#include "binform/report.hpp"

#include <CLI11.hpp>

#include <condition_variable>
#include <deque>
#include <iostream>
#include <map>
#include <mutex>
#include <thread>

namespace {

using binform::BinaryForm;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitDegenerate = 3;
constexpr int kExitDisagreement = 4;
constexpr int kExitPrecision = 5;

struct CommonArgs {
    std::string form_text;
    std::string coeff_text;
    bool as_json = false;
    int precision = binform::kDefaultPrecisionBits;
    unsigned long long seed = 1;
    bool verify = false;
};

void add_common(CLI::App* cmd, CommonArgs& args, bool with_verify = true) {
    cmd->add_option("--form", args.form_text, "polynomial expression, e.g. \"2x^3+3x^2y+xy^2\"");
    cmd->add_option("--coeffs", args.coeff_text, "leading-first coefficient list, e.g. 1,0,1,0,1");
    cmd->add_flag("--json", args.as_json, "machine-readable JSON output");
    cmd->add_option("--precision", args.precision, "working precision in bits (default 128)");
    cmd->add_option("--seed", args.seed, "seed for randomized property checks");
    if (with_verify) cmd->add_flag("--verify", args.verify, "force the oracle cross-check");
}

BinaryForm form_from_args(const CommonArgs& args) {
    if (!args.form_text.empty() && !args.coeff_text.empty())
        throw binform::SyntaxError("provide --form or --coeffs, not both", 0);
    if (!args.form_text.empty()) return binform::parse_form(args.form_text).form;
    if (!args.coeff_text.empty()) return binform::parse_coeff_list(args.coeff_text);
    throw binform::SyntaxError("missing --form or --coeffs", 0);
}

binform::ReportOptions options_of(const CommonArgs& args) {
    binform::ReportOptions opts;
    opts.precision_bits = args.precision;
    opts.verify = args.verify;
    opts.seed = args.seed;
    return opts;
}

void emit(const json& payload, bool as_json) {
    if (as_json)
        std::cout << payload.dump(2) << "\n";
    else
        std::cout << binform::render_text(payload);
}

int run_single(const std::string& section, const CommonArgs& args) {
    BinaryForm F = form_from_args(args);
    binform::ReportOptions opts = options_of(args);
    json payload;
    if (section == "invariants") {
        payload = {{"form", binform::json_form(F)}, {"invariants", binform::json_invariants(F)}};
    } else if (section == "covariants") {
        payload = {{"form", binform::json_form(F)}, {"covariants", binform::json_covariants(F, opts)}};
    } else if (section == "aut") {
        payload = {{"form", binform::json_form(F)}, {"aut", binform::json_aut(F, opts)}};
    } else if (section == "pgl") {
        payload = {{"form", binform::json_form(F)}, {"pgl", binform::json_pgl(F)}};
    } else if (section == "lines") {
        payload = {{"form", binform::json_form(F)}, {"lines", binform::json_lines(F, opts)}};
    } else if (section == "fields") {
        payload = {{"form", binform::json_form(F)}, {"fields", binform::json_fields(F)}};
    } else if (section == "oracle") {
        payload = {{"form", binform::json_form(F)}, {"oracle", binform::json_oracle(F, opts)}};
    } else {
        payload = binform::full_report(F, opts);
    }
    if (args.verify && section != "report" && section != "oracle")
        payload["oracle"] = binform::json_oracle(F, opts);

    emit(payload, args.as_json);

    auto oracle_ok = [&](const json& p) {
        if (!p.contains("oracle")) return true;
        return p["oracle"].value("agree", false);
    };
    if (!oracle_ok(payload)) return kExitDisagreement;
    if (payload.contains("conjugation_checks"))
        for (const auto& c : payload["conjugation_checks"])
            if (!c.value("pass", false)) return kExitDisagreement;
    return kExitOk;
}

// Batch mode: one form per input line, processed concurrently, output
// re-assembled in input order. A bad line never aborts the run.
int run_batch(const CommonArgs& args) {
    std::vector<std::string> inputs;
    std::string line;
    while (std::getline(std::cin, line)) inputs.push_back(line);

    std::vector<std::pair<int, std::string>> results(inputs.size());
    std::mutex mu;
    std::size_t next = 0;

    auto worker = [&]() {
        while (true) {
            std::size_t i;
            {
                std::lock_guard<std::mutex> lock(mu);
                if (next >= inputs.size()) return;
                i = next++;
            }
            const std::string& text = inputs[i];
            json payload;
            int status = kExitOk;
            try {
                if (text.find_first_not_of(" \t") == std::string::npos) {
                    status = kExitParse;
                    payload = {{"error", "empty line"}};
                } else {
                    BinaryForm F = binform::parse_form(text).form;
                    payload = binform::full_report(F, options_of(args));
                }
            } catch (const binform::SyntaxError& e) {
                status = kExitParse;
                payload = {{"error", e.what()}, {"offset", e.offset}};
            } catch (const binform::NotHomogeneous& e) {
                status = kExitParse;
                payload = {{"error", e.what()}};
            } catch (const binform::UnsupportedDegree& e) {
                status = kExitParse;
                payload = {{"error", e.what()}};
            } catch (const binform::DegenerateForm& e) {
                status = kExitDegenerate;
                payload = {{"error", e.what()}};
            } catch (const binform::PrecisionExhausted& e) {
                status = kExitPrecision;
                payload = {{"error", e.what()}};
            } catch (const std::exception& e) {
                status = 1;
                payload = {{"error", e.what()}};
            }
            std::lock_guard<std::mutex> lock(mu);
            json entry{{"line", i + 1}, {"input", text}, {"status", status}};
            entry["report"] = std::move(payload);
            results[i] = {status, entry.dump(args.as_json ? -1 : 2)};
        }
    };

    unsigned n = std::min(8u, std::max(1u, std::thread::hardware_concurrency()));
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    bool all_ok = true;
    for (const auto& [status, text_out] : results) {
        std::cout << text_out << "\n";
        if (status != kExitOk) all_ok = false;
    }
    return all_ok ? kExitOk : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact invariants, covariants, automorphisms and surface lines of binary forms"};
    app.require_subcommand(1);

    std::map<std::string, CommonArgs> cmd_args;
    const char* sections[] = {"invariants", "covariants", "aut", "pgl", "lines", "fields", "report",
                              "oracle"};
    const char* descriptions[] = {
        "discriminant and (for quartics) the invariants I, J",
        "hessian / julia covariants (cubics); sextic covariant, klein test, significant factors, "
        "cremona covariants (quartics)",
        "rational automorphism group with exact generators",
        "PGL2(C) automorphism class and upsilon",
        "line count and enumeration for the associated surface",
        "galois classification and the field of definition of the lines",
        "everything in one report",
        "classifier vs brute-force oracle cross-check"};
    for (std::size_t i = 0; i < 8; ++i) {
        CLI::App* c = app.add_subcommand(sections[i], descriptions[i]);
        add_common(c, cmd_args[sections[i]]);
    }
    CommonArgs batch_args;
    CLI::App* batch = app.add_subcommand("batch", "one form per stdin line; streamed reports");
    add_common(batch, batch_args);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitParse;
    }

    try {
        if (batch->parsed()) return run_batch(batch_args);
        for (const char* name : sections)
            if (app.get_subcommand(name)->parsed()) return run_single(name, cmd_args[name]);
        return kExitParse;
    } catch (const binform::SyntaxError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const binform::NotHomogeneous& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const binform::UnsupportedDegree& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitParse;
    } catch (const binform::DegenerateForm& e) {
        std::cerr << "degenerate form: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const binform::PrecisionExhausted& e) {
        std::cerr << "precision exhausted: " << e.what() << "\n";
        return kExitPrecision;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
