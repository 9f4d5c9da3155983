// galintel - command-line front end for intelligibility scoring.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "galintel/corpus.hpp"
#include "galintel/intelligibility.hpp"
#include "galintel/netintel.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParseError = 1;
constexpr int kExitAnnotationInvalid = 2;
constexpr int kExitUnboundSymbol = 3;
constexpr int kExitIoFailure = 4;
constexpr int kExitBadArguments = 5;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::ios_base::failure("cannot open file: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& payload, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        throw std::ios_base::failure("cannot open output file: " + out_path);
    }
    out << payload;
}

galintel::AnalysisResult score_files(const std::string& statement_file,
                                     const std::string& annotation_file) {
    const auto stmt = galintel::parse_statement(slurp(statement_file));
    const auto annotations = galintel::load_annotations(annotation_file);
    return galintel::score_statement(stmt, annotations);
}

std::string human_table(const galintel::AnalysisResult& r, const std::string& name) {
    std::ostringstream out;
    out << "statement: " << name << "\n"
        << "region:    " << galintel::to_string(r.region) << "\n"
        << "N_O:       " << r.n_o << "\n"
        << "N_E:       " << r.n_e << "\n"
        << "I:         " << r.score.numerator() << "/" << r.score.denominator() << " ("
        << galintel::to_decimal(r.score) << ")\n";
    if (!r.groups.empty()) {
        out << "groups:\n";
        for (const auto& g : r.groups) {
            out << "  {";
            bool first = true;
            for (const auto& m : g.members) {
                if (!first) out << ", ";
                out << m;
                first = false;
            }
            out << "}\n";
        }
    }
    for (const auto& w : r.warnings) {
        out << "warning:   " << w << "\n";
    }
    return out.str();
}

std::string score_csv(const galintel::AnalysisResult& r, const std::string& name) {
    std::ostringstream out;
    out << "name,N_O,N_E,I_num,I_den,I_decimal,region,warnings\n";
    std::string warnings;
    for (std::size_t i = 0; i < r.warnings.size(); ++i) {
        if (i > 0) warnings += "; ";
        warnings += r.warnings[i];
    }
    out << name << ',' << r.n_o << ',' << r.n_e << ',' << r.score.numerator() << ','
        << r.score.denominator() << ',' << galintel::to_decimal(r.score) << ','
        << galintel::to_string(r.region) << ',' << warnings << '\n';
    return out.str();
}

std::vector<long long> parse_n_o_list(const std::string& csv) {
    std::vector<long long> out;
    std::stringstream stream(csv);
    std::string item;
    while (std::getline(stream, item, ',')) {
        out.push_back(std::stoll(item));
    }
    if (out.empty()) {
        throw CLI::ValidationError("--n-o", "expected a comma-separated list of integers");
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Galilean intelligibility scoring of empirical statements and networks"};
    app.require_subcommand(1);

    // score
    std::string stmt_file, ann_file, format = "human";
    auto* score_cmd = app.add_subcommand("score", "Score one statement against its annotations");
    score_cmd->add_option("statement-file", stmt_file)->required();
    score_cmd->add_option("--annotations", ann_file)->required();
    score_cmd->add_option("--format", format)->check(CLI::IsMember({"human", "json", "csv"}));

    // classify
    std::string cls_stmt, cls_ann;
    auto* classify_cmd = app.add_subcommand("classify", "Print the statement's taxonomy region");
    classify_cmd->add_option("statement-file", cls_stmt)->required();
    classify_cmd->add_option("--annotations", cls_ann)->required();

    // nn score
    std::string nn_spec_file;
    auto* nn_cmd = app.add_subcommand("nn", "Network architecture estimator");
    auto* nn_score_cmd = nn_cmd->add_subcommand("score", "Score a network spec");
    nn_score_cmd->add_option("--spec", nn_spec_file)->required();
    nn_cmd->require_subcommand(1);

    // compare
    std::vector<std::string> compare_files;
    auto* compare_cmd =
        app.add_subcommand("compare", "Compare two statement+annotation pairs (±1 robustness)");
    compare_cmd
        ->add_option("pair-files", compare_files,
                     "a.gal a-annotations.json b.gal b-annotations.json")
        ->expected(4);

    // corpus report / corpus figure4
    std::string corpus_dir, out_path, n_o_csv = "2,10,100";
    long long n_h_max = 2500;
    auto* corpus_cmd = app.add_subcommand("corpus", "Corpus scoring and figure data");
    corpus_cmd->require_subcommand(1);
    auto* report_cmd = corpus_cmd->add_subcommand("report", "Score every corpus entry to CSV");
    report_cmd->add_option("--dir", corpus_dir)->required();
    report_cmd->add_option("--out", out_path);
    auto* figure4_cmd = corpus_cmd->add_subcommand("figure4", "Emit the intelligibility curves dataset");
    figure4_cmd->add_option("--dir", corpus_dir)->required();
    figure4_cmd->add_option("--out", out_path)->required();
    figure4_cmd->add_option("--n-o", n_o_csv);
    figure4_cmd->add_option("--n-h-max", n_h_max)->check(CLI::PositiveNumber);

    // validate
    std::string val_ann;
    auto* validate_cmd = app.add_subcommand("validate", "Validate an annotation file");
    validate_cmd->add_option("--annotations", val_ann)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitBadArguments;
    }

    try {
        if (*score_cmd) {
            const auto result = score_files(stmt_file, ann_file);
            const std::string name =
                std::filesystem::path(stmt_file).stem().string();
            if (format == "json") {
                std::cout << galintel::analysis_to_json(result, name).dump(2) << "\n";
            } else if (format == "csv") {
                std::cout << score_csv(result, name);
            } else {
                std::cout << human_table(result, name);
            }
        } else if (*classify_cmd) {
            const auto stmt = galintel::parse_statement(slurp(cls_stmt));
            const auto annotations = galintel::load_annotations(cls_ann);
            auto violations = galintel::validate(annotations);
            if (!violations.empty()) {
                throw galintel::AnnotationInvalid(std::move(violations));
            }
            const auto inlined = galintel::inline_auxiliaries(stmt, annotations.auxiliaries);
            const auto bound = galintel::bind_symbols(inlined, annotations);
            std::cout << galintel::to_string(galintel::classify_statement(bound)) << "\n";
        } else if (*nn_score_cmd) {
            const auto spec = galintel::load_network_spec(nn_spec_file);
            const auto asym = galintel::nn_asymptotic_score(spec);
            std::cout << "network:    " << spec.name << "\n"
                      << "N_h:        " << spec.hidden_layers << "\n"
                      << "N_O:        " << spec.io_variable_count << "\n"
                      << "N_E:        " << galintel::nn_empirical_constants(spec) << "\n"
                      << "I:          " << asym.exact.numerator() << "/" << asym.exact.denominator()
                      << " (" << galintel::to_decimal(asym.exact) << ")\n"
                      << "asymptotic: " << (asym.applicable ? std::to_string(asym.value)
                                                            : std::string("not applicable"))
                      << "\n";
        } else if (*compare_cmd) {
            const auto a = score_files(compare_files[0], compare_files[1]);
            const auto b = score_files(compare_files[2], compare_files[3]);
            std::cout << galintel::to_string(galintel::significantly_different(a, b)) << "\n";
        } else if (*report_cmd) {
            const auto load = galintel::load_corpus(corpus_dir);
            for (const auto& err : load.entry_errors) {
                std::cerr << "entry error: " << err << "\n";
            }
            write_output(galintel::report_csv(galintel::score_corpus(load.entries)), out_path);
        } else if (*figure4_cmd) {
            const auto load = galintel::load_corpus(corpus_dir);
            for (const auto& err : load.entry_errors) {
                std::cerr << "entry error: " << err << "\n";
            }
            const auto points =
                galintel::figure4_data(parse_n_o_list(n_o_csv), n_h_max, load.entries);
            write_output(galintel::figure4_csv(points), out_path);
        } else if (*validate_cmd) {
            const auto annotations = galintel::load_annotations(val_ann);
            const auto violations = galintel::validate(annotations);
            if (violations.empty()) {
                std::cout << "ok\n";
            } else {
                for (const auto& v : violations) {
                    std::cout << "violation: " << v.message << "\n";
                }
                return kExitAnnotationInvalid;
            }
        }
    } catch (const galintel::ParseError& e) {
        std::cerr << "parse error at position " << e.position << ": " << e.what() << "\n";
        return kExitParseError;
    } catch (const galintel::CycleError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParseError;
    } catch (const galintel::UnboundSymbol& e) {
        std::cerr << e.what() << "\n";
        return kExitUnboundSymbol;
    } catch (const galintel::AnnotationInvalid& e) {
        std::cerr << e.what() << "\n";
        return kExitAnnotationInvalid;
    } catch (const galintel::AnnotationFormatError& e) {
        std::cerr << "annotation format error: " << e.what() << "\n";
        return kExitAnnotationInvalid;
    } catch (const galintel::InvalidSpec& e) {
        std::cerr << "invalid network spec: " << e.what() << "\n";
        return kExitAnnotationInvalid;
    } catch (const galintel::ZeroVariables& e) {
        std::cerr << e.what() << "\n";
        return kExitAnnotationInvalid;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "i/o failure: " << e.what() << "\n";
        return kExitIoFailure;
    } catch (const std::filesystem::filesystem_error& e) {
        std::cerr << "i/o failure: " << e.what() << "\n";
        return kExitIoFailure;
    }
    return kExitOk;
}
