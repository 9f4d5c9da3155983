#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "galintel/intelligibility.hpp"
#include "galintel/netintel.hpp"
#include "galintel/ontology.hpp"

namespace galintel {

/// One named fixture: statement + annotations (or a network spec) plus the
/// expected Table-1 values.
struct CorpusEntry {
    std::string name;
    std::filesystem::path directory;

    bool is_network = false;
    std::optional<Statement> statement;
    std::optional<AnnotationSet> annotations;
    std::optional<NetworkSpec> network;

    int expected_n_o = 0;
    int expected_n_e = 0;
    Rational expected_score;
    std::string paper_row;
    std::optional<std::string> discrepancy;
};

struct CorpusLoad {
    std::vector<CorpusEntry> entries;           // lexicographic by name
    std::vector<std::string> entry_errors;      // malformed entries, isolated
};

CorpusLoad load_corpus(const std::filesystem::path& directory);

struct ReportRow {
    std::string name;
    int n_o = 0;
    int n_e = 0;
    Rational score;
    Rational expected_score;
    std::string match;  // "true" | "false" | "paper-discrepancy" | "error: ..."
    std::vector<std::string> warnings;
};

std::vector<ReportRow> score_corpus(const std::vector<CorpusEntry>& entries);

/// CSV with the exact header:
/// name,N_O,N_E,I_num,I_den,I_decimal,expected_I_num,expected_I_den,match,warnings
std::string report_csv(const std::vector<ReportRow>& rows);

struct Figure4Point {
    std::string series;  // "curve" | "corpus" | "star"
    std::optional<long long> n_o;
    std::optional<long long> n_h;
    Rational score;
    std::string label;
};

std::vector<Figure4Point> figure4_data(const std::vector<long long>& n_o_values,
                                       long long n_h_max,
                                       const std::vector<CorpusEntry>& entries);

/// CSV with the exact header: series,N_O,N_h,I_decimal,label
std::string figure4_csv(const std::vector<Figure4Point>& points);

}  // namespace galintel
