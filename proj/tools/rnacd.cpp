#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "rnacd/certify.hpp"
#include "rnacd/classify.hpp"
#include "rnacd/design.hpp"
#include "rnacd/errors.hpp"
#include "rnacd/fold.hpp"
#include "rnacd/report.hpp"
#include "rnacd/structure.hpp"

using namespace rnacd;

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kInputError = 2;

struct RunConfig {
    std::string model = "wc";
    std::size_t limit = 64;
    int brute_max_n = 12;
    bool json = false;
    unsigned jobs = 1;
    bool debug_condensed = false;
};

// "@file" reads the argument from a file.
std::string load(const std::string& arg) {
    if (arg.empty() || arg.front() != '@')
        return arg;
    std::ifstream in(arg.substr(1));
    if (!in)
        throw Error("cannot read " + arg.substr(1));
    std::stringstream ss;
    ss << in.rdbuf();
    std::string text = ss.str();
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.pop_back();
    return text;
}

void print(const Json& j) { std::cout << j.dump(2) << '\n'; }

void print_fold_text(const FoldReport& r) {
    std::cout << "max_pairs " << r.max_pairs << '\n' << "optimal_count " << r.optimal_count << '\n';
    if (r.structures)
        for (const ArcSet& s : *r.structures)
            std::cout << to_dotbracket(s) << '\n';
    else
        std::cout << "(enumeration truncated)\n";
}

int cmd_fold(const RunConfig& cfg, const std::string& seq_text) {
    const Sequence s(load(seq_text));
    const FoldReport r = fold(s, parse_model(cfg.model), cfg.limit);
    if (cfg.json)
        print(to_json(r));
    else
        print_fold_text(r);
    return kOk;
}

int cmd_verify(const RunConfig& cfg, const std::string& seq_text, const std::string& db_text) {
    const Sequence s(load(seq_text));
    const SecondaryStructure target = parse_dotbracket(load(db_text));
    const PairingModel model = parse_model(cfg.model);
    const bool ok = verify_design_for(s, target, model);
    const FoldReport r = fold(s, model, cfg.limit);
    if (cfg.json) {
        Json j;
        j["is_design"] = ok;
        j["fold"] = to_json(r);
        print(j);
    } else {
        std::cout << (ok ? "design" : "not a design") << '\n';
        print_fold_text(r);
    }
    return ok ? kOk : kNegative;
}

int cmd_design(const RunConfig& cfg, const std::string& tree_text) {
    const DottedTree t = parse_tree(load(tree_text));
    const FloralDesign d = design_for_floral(t);
    const PairingModel model = parse_model(cfg.model);
    const bool ok = verify_design_for(d.sequence, d.structure, model);
    if (!ok) {
        spdlog::error("constructed sequence {} failed verification", d.sequence.str());
        return kNegative;
    }
    const FoldReport r = fold(d.sequence, model, cfg.limit);
    if (cfg.json) {
        Json j;
        j["sequence"] = d.sequence.str();
        j["structure"] = to_dotbracket(d.structure);
        j["verification"] = {{"model", std::string(to_string(model))}, {"is_design", ok}, {"fold", to_json(r)}};
        print(j);
    } else {
        std::cout << d.sequence.str() << '\n' << to_dotbracket(d.structure) << '\n';
    }
    return kOk;
}

int cmd_classify(const RunConfig& cfg, const std::string& input) {
    const std::string text = load(input);
    const DottedTree t = text.find('*') != std::string::npos ? parse_tree(text)
                                                               : structure_to_tree(parse_dotbracket(text));
    spdlog::debug("classifying {}", serialize_tree(t));
    const DesignOutcome o = classify(t, {cfg.brute_max_n, cfg.jobs});
    if (o.design && !verify_design_for(*o.design, tree_to_structure(t), PairingModel::WC)) {
        spdlog::error("classifier design {} failed verification", o.design->str());
        return kNegative;
    }
    if (cfg.json) {
        print(to_json(o, t));
    } else {
        std::cout << to_string(o.verdict);
        if (o.reason)
            std::cout << " (" << to_string(*o.reason) << ")";
        std::cout << '\n';
        if (o.design)
            std::cout << o.design->str() << '\n';
        if (o.colouring) {
            const DottedTree e = exterior_tree(t);
            for (VertexId v : e.preorder())
                if (const auto c = o.colouring->at(v))
                    std::cout << e.path(v) << ' ' << to_char(*c) << '\n';
        }
    }
    return o.verdict == Verdict::NotDesignable ? kNegative : kOk;
}

int cmd_certify(const RunConfig& cfg, const std::string& tree_text, std::optional<int> stop) {
    const DottedTree t = parse_tree(load(tree_text));
    const LabelledTree tau = natural_labelling(t);
    const CertificateTrace trace = run_algorithm1(tau, stop.value_or(height(t)));
    if (cfg.debug_condensed)
        std::cerr << render_condensed(tau, trace);
    if (cfg.json) {
        Json j;
        j["sequence"] = tau.flatten().str();
        j["trace"] = to_json(trace);
        print(j);
    } else {
        std::cout << tau.flatten().str() << '\n';
        std::cout << "iterations " << trace.iterations.size() << '\n';
        for (std::size_t i = 0; i < trace.iterations.size(); ++i) {
            std::cout << "  " << i + 1 << ": " << to_string(trace.iterations[i].balanced.kind) << " set of "
                      << trace.iterations[i].balanced.positions.size() << ", coloured "
                      << trace.iterations[i].coloured.size() << '\n';
        }
        std::cout << "forced_unpaired";
        for (int p : trace.forced_unpaired)
            std::cout << ' ' << p;
        std::cout << '\n';
    }
    return kOk;
}

int cmd_brute(const RunConfig& cfg, const std::string& db_text) {
    const SecondaryStructure target = parse_dotbracket(load(db_text));
    const auto found = brute_force_designable(target, parse_model(cfg.model), cfg.brute_max_n, cfg.jobs);
    if (cfg.json) {
        Json j;
        j["design"] = found ? Json(found->str()) : Json(nullptr);
        print(j);
    } else {
        std::cout << (found ? found->str() : "none") << '\n';
    }
    return found ? kOk : kNegative;
}

void setup_logging() {
    auto logger = spdlog::stderr_color_st("rnacd");
    spdlog::set_default_logger(logger);
    spdlog::set_pattern("%l: %v");
    spdlog::set_level(spdlog::level::warn);
    if (const char* lvl = std::getenv("RNACD_LOG"))
        spdlog::set_level(spdlog::level::from_str(lvl));
}

} // namespace

int main(int argc, char** argv) {
    setup_logging();
    RunConfig cfg;
    CLI::App app{"RNA secondary structure design toolkit"};
    app.require_subcommand(1);
    app.add_option("--model", cfg.model, "pairing model")->check(CLI::IsMember({"wc", "wcgu", "WC", "WCGU"}));
    app.add_option("--limit", cfg.limit, "largest number of optimal structures to list")->check(CLI::PositiveNumber);
    app.add_option("--brute-max-n", cfg.brute_max_n, "length limit of exhaustive search")->check(CLI::NonNegativeNumber);
    app.add_flag("--json", cfg.json, "JSON output");
    app.add_option("--jobs", cfg.jobs, "worker threads for exhaustive search")->check(CLI::PositiveNumber);
    app.add_flag("--debug-condensed", cfg.debug_condensed, "print condensed trees of the certificate to stderr");
    app.fallthrough();

    std::string a, b;
    std::optional<int> stop;
    int code = kOk;

    auto* fold_cmd = app.add_subcommand("fold", "maximum pairing, optimum count and structures");
    fold_cmd->add_option("sequence", a)->required();
    fold_cmd->callback([&] { code = cmd_fold(cfg, a); });

    auto* design_cmd = app.add_subcommand("design", "design a sequence for a floral tree");
    design_cmd->add_option("tree", a)->required();
    design_cmd->callback([&] { code = cmd_design(cfg, a); });

    auto* classify_cmd = app.add_subcommand("classify", "designability verdict from tree shape");
    classify_cmd->add_option("input", a, "tree text or dot-bracket")->required();
    classify_cmd->callback([&] { code = cmd_classify(cfg, a); });

    auto* verify_cmd = app.add_subcommand("verify", "check that a sequence is a design for a structure");
    verify_cmd->add_option("sequence", a)->required();
    verify_cmd->add_option("structure", b)->required();
    verify_cmd->callback([&] { code = cmd_verify(cfg, a, b); });

    auto* certify_cmd = app.add_subcommand("certify", "run the tagging certificate on a natural labelling");
    certify_cmd->add_option("tree", a)->required();
    certify_cmd->add_option("--stop-height", stop, "height left uncoloured (default: tree height)");
    certify_cmd->callback([&] { code = cmd_certify(cfg, a, stop); });

    auto* brute_cmd = app.add_subcommand("brute", "least design by exhaustive search");
    brute_cmd->add_option("structure", a)->required();
    brute_cmd->callback([&] { code = cmd_brute(cfg, a); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kInputError;
    } catch (const PropertyViolated& e) {
        spdlog::error("{}", e.what());
        return kNegative;
    } catch (const Error& e) {
        spdlog::error("{}", e.what());
        return kInputError;
    }
    return code;
}
