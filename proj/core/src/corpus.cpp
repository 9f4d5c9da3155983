#include "galintel/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace galintel {

namespace {

std::string slurp(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) {
        throw std::ios_base::failure("cannot open file: " + file.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Rational rational_from_json(const nlohmann::json& doc) {
    return Rational(doc.at("num").get<long long>(), doc.at("den").get<long long>());
}

CorpusEntry load_entry(const std::filesystem::path& dir) {
    CorpusEntry entry;
    entry.name = dir.filename().string();
    entry.directory = dir;

    const auto expected_path = dir / "expected.json";
    nlohmann::json expected;
    {
        std::ifstream in(expected_path);
        if (!in) {
            throw std::ios_base::failure("missing expected.json in " + dir.string());
        }
        in >> expected;
    }
    entry.expected_n_o = expected.at("N_O").get<int>();
    entry.expected_n_e = expected.at("N_E").get<int>();
    entry.expected_score = rational_from_json(expected.at("I"));
    entry.paper_row = expected.value("paper_row", "");
    if (expected.contains("discrepancy")) {
        entry.discrepancy = expected.at("discrepancy").get<std::string>();
    }

    const auto network_path = dir / "network.json";
    if (std::filesystem::exists(network_path)) {
        entry.is_network = true;
        entry.network = load_network_spec(network_path);
        return entry;
    }

    entry.statement = parse_statement(slurp(dir / "statement.gal"));
    entry.annotations = load_annotations(dir / "annotations.json");
    auto violations = validate(*entry.annotations);
    if (!violations.empty()) {
        throw AnnotationInvalid(std::move(violations));
    }
    return entry;
}

}  // namespace

CorpusLoad load_corpus(const std::filesystem::path& directory) {
    CorpusLoad out;
    if (!std::filesystem::exists(directory)) {
        out.entry_errors.push_back("corpus directory not found: " + directory.string());
        return out;
    }
    std::vector<std::filesystem::path> dirs;
    for (const auto& item : std::filesystem::directory_iterator(directory)) {
        if (item.is_directory()) dirs.push_back(item.path());
    }
    std::sort(dirs.begin(), dirs.end(),
              [](const auto& a, const auto& b) { return a.filename() < b.filename(); });
    for (const auto& dir : dirs) {
        try {
            out.entries.push_back(load_entry(dir));
        } catch (const std::exception& e) {
            out.entry_errors.push_back(dir.filename().string() + ": " + e.what());
        }
    }
    return out;
}

std::vector<ReportRow> score_corpus(const std::vector<CorpusEntry>& entries) {
    std::vector<ReportRow> rows;
    rows.reserve(entries.size());
    for (const auto& entry : entries) {
        ReportRow row;
        row.name = entry.name;
        row.expected_score = entry.expected_score;
        try {
            if (entry.is_network) {
                row.n_o = static_cast<int>(entry.network->io_variable_count);
                row.n_e = static_cast<int>(nn_empirical_constants(*entry.network));
                row.score = nn_score(*entry.network);
            } else {
                const AnalysisResult result = score_statement(*entry.statement, *entry.annotations);
                row.n_o = result.n_o;
                row.n_e = result.n_e;
                row.score = result.score;
                row.warnings = result.warnings;
            }
            const bool equal = row.score == entry.expected_score &&
                               row.n_o == entry.expected_n_o && row.n_e == entry.expected_n_e;
            if (entry.discrepancy.has_value()) {
                row.match = "paper-discrepancy";
                row.warnings.push_back(*entry.discrepancy);
            } else {
                row.match = equal ? "true" : "false";
            }
            if (!equal && entry.discrepancy.has_value()) {
                // a discrepancy note explains the paper's printed value, not a
                // mismatch against our own expectations
                row.match = "false";
            }
        } catch (const std::exception& e) {
            row.match = std::string("error: ") + e.what();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace {

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

std::string report_csv(const std::vector<ReportRow>& rows) {
    std::ostringstream out;
    out << "name,N_O,N_E,I_num,I_den,I_decimal,expected_I_num,expected_I_den,match,warnings\n";
    for (const auto& row : rows) {
        std::string warnings;
        for (std::size_t i = 0; i < row.warnings.size(); ++i) {
            if (i > 0) warnings += "; ";
            warnings += row.warnings[i];
        }
        out << csv_escape(row.name) << ',' << row.n_o << ',' << row.n_e << ','
            << row.score.numerator() << ',' << row.score.denominator() << ','
            << to_decimal(row.score) << ',' << row.expected_score.numerator() << ','
            << row.expected_score.denominator() << ',' << csv_escape(row.match) << ','
            << csv_escape(warnings) << '\n';
    }
    return out.str();
}

std::vector<Figure4Point> figure4_data(const std::vector<long long>& n_o_values,
                                       long long n_h_max,
                                       const std::vector<CorpusEntry>& entries) {
    std::vector<Figure4Point> points;
    for (long long n_o : n_o_values) {
        for (long long n_h = 1; n_h <= n_h_max; ++n_h) {
            NetworkSpec spec{"curve", n_h, n_o, ""};
            points.push_back({"curve", n_o, n_h, nn_score(spec), ""});
        }
    }
    for (const auto& entry : entries) {
        if (entry.is_network) {
            points.push_back({"star", entry.network->io_variable_count,
                              entry.network->hidden_layers, nn_score(*entry.network),
                              entry.network->name});
        } else {
            try {
                const AnalysisResult result = score_statement(*entry.statement, *entry.annotations);
                points.push_back({"corpus", result.n_o, std::nullopt, result.score, entry.name});
            } catch (const std::exception&) {
                // unscorable entries are reported by score_corpus, not plotted
            }
        }
    }
    return points;
}

std::string figure4_csv(const std::vector<Figure4Point>& points) {
    std::ostringstream out;
    out << "series,N_O,N_h,I_decimal,label\n";
    for (const auto& p : points) {
        out << p.series << ',';
        if (p.n_o) out << *p.n_o;
        out << ',';
        if (p.n_h) out << *p.n_h;
        out << ',' << to_decimal(p.score) << ',' << csv_escape(p.label) << '\n';
    }
    return out.str();
}

}  // namespace galintel
