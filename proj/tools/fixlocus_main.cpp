// fixlocus: analyze polynomial automorphisms and their fixed hypersurfaces.
//
// Commands: analyze, fix, jacobian, order, witness-verify, corpus list,
// corpus run-all. Targets are either `corpus:<name>` or a path to a
// map-definition file. Exit codes: 0 success, 1 counterexample-class
// theorem failure, 2 input/parse error, 3 internal integrity error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fixlocus/corpus.hpp"
#include "fixlocus/errors.hpp"
#include "fixlocus/report_io.hpp"
#include "fixlocus/theorems.hpp"

namespace {

using fixlocus::AnalysisOptions;
using fixlocus::FixedLocusKind;
using fixlocus::FixReport;
using fixlocus::LoadedEntry;
using ordered_json = nlohmann::ordered_json;

struct CommonOpts {
    std::string target;
    bool json = false;
    std::uint64_t seed = 12345;
    std::uint32_t iter_bound = 16;
    std::uint32_t degree_cap = 512;

    AnalysisOptions analysis() const {
        AnalysisOptions o;
        o.seed = seed;
        o.iter_bound = iter_bound;
        o.order_degree_cap = degree_cap;
        return o;
    }
};

LoadedEntry resolve_target(const std::string& target) {
    constexpr const char* kPrefix = "corpus:";
    if (target.rfind(kPrefix, 0) == 0) {
        const std::string name = target.substr(std::string(kPrefix).size());
        const fixlocus::CorpusEntry* e = fixlocus::find_corpus_entry(name);
        if (!e) throw fixlocus::DomainError("unknown corpus entry '" + name + "'");
        return fixlocus::load_corpus_entry(*e);
    }
    std::ifstream in(target);
    if (!in) throw fixlocus::DomainError("cannot open input file '" + target + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return fixlocus::load_document(fixlocus::parse_document(buf.str()), "");
}

int cmd_analyze(const CommonOpts& opts) {
    LoadedEntry e = resolve_target(opts.target);
    FixReport r = fixlocus::full_report(e.aut, e.name, e.var_names, e.witnesses, opts.analysis());
    std::cout << (opts.json ? fixlocus::report_to_json(r) : fixlocus::report_to_text(r));
    return r.has_counterexample() ? 1 : 0;
}

int cmd_fix(const CommonOpts& opts) {
    LoadedEntry e = resolve_target(opts.target);
    fixlocus::FixedLocus fl = fixlocus::fixed_hypersurface_part(e.aut);
    if (opts.json) {
        ordered_json j;
        j["kind"] = fl.kind == FixedLocusKind::WholeSpace  ? "whole_space"
                    : fl.kind == FixedLocusKind::Unit      ? "unit"
                                                           : "hypersurface";
        if (fl.kind == FixedLocusKind::Hypersurface)
            j["h"] = fixlocus::polynomial_text(*fl.h, e.var_names);
        std::cout << j.dump(2) << "\n";
    } else {
        switch (fl.kind) {
            case FixedLocusKind::WholeSpace:
                std::cout << "whole space (identity map)\n";
                break;
            case FixedLocusKind::Unit:
                std::cout << "no hypersurface part (fixed locus has codimension >= 2)\n";
                break;
            case FixedLocusKind::Hypersurface:
                std::cout << "h = " << fixlocus::polynomial_text(*fl.h, e.var_names) << "\n";
                break;
        }
    }
    return 0;
}

int cmd_jacobian(const CommonOpts& opts) {
    LoadedEntry e = resolve_target(opts.target);
    fixlocus::SpecialnessVerdict v = fixlocus::jacobian_and_classify(e.aut);
    if (opts.json) {
        ordered_json j;
        j["lambda"] = v.lambda.get_str();
        j["special"] = v.special;
        if (v.lambda_order)
            j["lambda_finite_order"] = *v.lambda_order;
        else
            j["lambda_finite_order"] = nullptr;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "jacobian determinant = " << v.lambda.get_str() << " ("
                  << (v.special ? "special" : "not special") << ")\n";
        if (v.lambda_order)
            std::cout << "lambda has finite multiplicative order " << *v.lambda_order << "\n";
        else
            std::cout << "lambda has no finite multiplicative order within the probe bound\n";
    }
    return 0;
}

int cmd_order(const CommonOpts& opts) {
    LoadedEntry e = resolve_target(opts.target);
    fixlocus::OrderResult r = fixlocus::detect_order(e.aut, opts.iter_bound, opts.degree_cap);
    if (opts.json) {
        ordered_json j;
        j["finite"] = r.finite;
        if (r.finite) j["m"] = r.m;
        std::cout << j.dump(2) << "\n";
    } else if (r.finite) {
        std::cout << "finite, m = " << r.m << "\n";
    } else {
        std::cout << "exceeds bound (presumed infinite)\n";
    }
    return 0;
}

int cmd_witness_verify(const CommonOpts& opts) {
    LoadedEntry e = resolve_target(opts.target);
    if (e.witnesses.empty()) {
        std::cout << "no stored witnesses for '" << e.name << "'\n";
        return 0;
    }
    bool all_ok = true;
    ordered_json arr = ordered_json::array();
    for (std::size_t i = 0; i < e.witnesses.size(); ++i) {
        fixlocus::WitnessVerification w =
            fixlocus::verify_ruled_witness(e.witnesses[i], opts.seed + i);
        all_ok = all_ok && w.ok;
        if (opts.json) {
            ordered_json jw;
            jw["ok"] = w.ok;
            jw["image_in_hypersurface"] = w.image_in_hypersurface;
            jw["nonconstant_in_t"] = w.nonconstant_in_t;
            jw["jacobian_rank_ok"] = w.jacobian_rank_ok;
            jw["rank_check_probabilistic"] = w.rank_check_probabilistic;
            jw["seed"] = w.seed;
            arr.push_back(jw);
        } else {
            std::cout << "[" << i << "] " << (w.ok ? "verified" : "FAILED")
                      << " (in-hypersurface: " << (w.image_in_hypersurface ? "yes" : "no")
                      << ", moves with t: " << (w.nonconstant_in_t ? "yes" : "no")
                      << ", rank n-1: " << (w.jacobian_rank_ok ? "yes" : "no") << ")\n";
        }
    }
    if (opts.json) std::cout << arr.dump(2) << "\n";
    return all_ok ? 0 : 1;
}

int cmd_corpus_list(bool json) {
    if (json) {
        ordered_json arr = ordered_json::array();
        for (const fixlocus::CorpusEntry& e : fixlocus::corpus()) {
            ordered_json j;
            j["name"] = e.name;
            j["note"] = e.note;
            arr.push_back(j);
        }
        std::cout << arr.dump(2) << "\n";
    } else {
        for (const fixlocus::CorpusEntry& e : fixlocus::corpus())
            std::cout << e.name << " — " << e.note << "\n";
    }
    return 0;
}

int cmd_corpus_run_all(const CommonOpts& opts) {
    const std::vector<fixlocus::CorpusEntry>& entries = fixlocus::corpus();
    const int count = static_cast<int>(entries.size());
    std::vector<FixReport> reports(entries.size());
    std::vector<std::string> errors(entries.size());

    // Entries are independent; analyze them in parallel and emit in name
    // order afterwards, so the output is schedule-independent.
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < count; ++i) {
        try {
            LoadedEntry e = load_corpus_entry(entries[static_cast<std::size_t>(i)]);
            reports[static_cast<std::size_t>(i)] =
                fixlocus::full_report(e.aut, e.name, e.var_names, e.witnesses, opts.analysis());
        } catch (const std::exception& ex) {
            errors[static_cast<std::size_t>(i)] = ex.what();
        }
    }

    for (const std::string& err : errors)
        if (!err.empty()) {
            std::cerr << "integrity error while analyzing the built-in corpus: " << err << "\n";
            return 3;
        }

    bool any_counterexample = false;
    if (opts.json) {
        ordered_json arr = ordered_json::array();
        for (const FixReport& r : reports) {
            arr.push_back(ordered_json::parse(fixlocus::report_to_json(r)));
            any_counterexample = any_counterexample || r.has_counterexample();
        }
        std::cout << arr.dump(2) << "\n";
    } else {
        for (const FixReport& r : reports) {
            std::cout << fixlocus::report_to_text(r) << "\n";
            any_counterexample = any_counterexample || r.has_counterexample();
        }
        std::cout << (any_counterexample ? "RESULT: counterexample-class failure detected"
                                         : "RESULT: all corpus verdicts hold")
                  << "\n";
    }
    return any_counterexample ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact analysis of polynomial automorphisms and their fixed hypersurfaces"};
    app.require_subcommand(1);

    CommonOpts opts;
    auto add_common = [&opts](CLI::App* cmd, bool with_target = true) {
        if (with_target)
            cmd->add_option("target", opts.target, "corpus:<name> or a map-definition file")
                ->required();
        cmd->add_flag("--json", opts.json, "emit JSON instead of text");
        cmd->add_option("--seed", opts.seed, "seed for randomized checks (default 12345)");
        cmd->add_option("--iter-bound", opts.iter_bound,
                        "order-detection iteration bound (default 16)");
        cmd->add_option("--degree-cap", opts.degree_cap,
                        "order-detection degree budget (default 512)");
    };

    CLI::App* analyze = app.add_subcommand("analyze", "full report for one map");
    add_common(analyze);
    CLI::App* fix = app.add_subcommand("fix", "fixed-locus hypersurface part");
    add_common(fix);
    CLI::App* jacobian = app.add_subcommand("jacobian", "Jacobian determinant and specialness");
    add_common(jacobian);
    CLI::App* order = app.add_subcommand("order", "finite-order detection");
    add_common(order);
    CLI::App* witness = app.add_subcommand("witness-verify", "verify stored witnesses");
    add_common(witness);
    CLI::App* corpus_cmd = app.add_subcommand("corpus", "built-in corpus");
    CLI::App* corpus_list = corpus_cmd->add_subcommand("list", "list built-in entries");
    bool list_json = false;
    corpus_list->add_flag("--json", list_json, "emit JSON instead of text");
    CLI::App* corpus_run = corpus_cmd->add_subcommand("run-all", "analyze every entry");
    add_common(corpus_run, /*with_target=*/false);
    corpus_cmd->require_subcommand(1);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*analyze) return cmd_analyze(opts);
        if (*fix) return cmd_fix(opts);
        if (*jacobian) return cmd_jacobian(opts);
        if (*order) return cmd_order(opts);
        if (*witness) return cmd_witness_verify(opts);
        if (*corpus_list) return cmd_corpus_list(list_json);
        if (*corpus_run) return cmd_corpus_run_all(opts);
    } catch (const fixlocus::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const fixlocus::CounterexampleError& e) {
        std::cerr << "counterexample-class failure: " << e.what() << "\n";
        return 1;
    } catch (const fixlocus::IntegrityError& e) {
        std::cerr << "integrity error: " << e.what() << "\n";
        return 3;
    } catch (const fixlocus::ArityError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const fixlocus::ShapeError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const fixlocus::DomainError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const fixlocus::ContractError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
