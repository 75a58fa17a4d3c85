#pragma once

#include "sierp/certificates.hpp"
#include "sierp/coloring.hpp"
#include "sierp/solver.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace sierp {

enum class RowStatus { Match, Mismatch, SkippedBudget };

std::string to_string(RowStatus s);

struct ReproRow {
    std::string suite;     // "vertex" or "edge"
    std::string instance;  // e.g. "S(C5,3)"
    std::string claim;     // the statement checked, e.g. "chi_i = 3"
    int claimed = 0;
    std::optional<int> computed;
    std::string method;    // "exact", "construction+lower-bound", ...
    std::vector<std::string> certificates;
    RowStatus status = RowStatus::SkippedBudget;
    std::string note;
};

/// Where derived certificates are cached between runs.
struct GoldenStore {
    std::string dir = SIERP_GOLDEN_DIR;
    /// Write certificates that are missing from dir after computing them.
    bool write_missing = false;

    std::string path(const std::string& name) const { return dir + "/" + name; }
    bool has(const std::string& name) const;
};

struct ReproOptions {
    std::string suite = "all";  // vertex | edge | all
    SolverOptions solver;
    GoldenStore golden;
    int jobs = 1;
};

// Golden certificate names.
inline constexpr const char* kTypeAFile = "s3_typeA_n3.json";
inline constexpr const char* kTypeBFile = "s3_typeB_n3.json";
inline constexpr const char* kPEmbeddingFile = "P_into_S3_3.json";
/// Condition certificate of S_{C_k}^3 used by the cycle edge rows.
std::string cycle_certificate_file(int k);

/// The condition each cycle certificate satisfies: ii with A = even
/// indices for even k, i otherwise.
Condition cycle_condition(int k);
/// The value chi_i'(S_{C_k}^n) the cycle certificate is searched with.
int cycle_edge_value(int k);

/// Loads `name` from the store, or runs `compute` (and caches the result
/// when the store allows it). The loaded coloring is not validated.
EdgeColoring golden_edge_coloring(const GoldenStore& store, const std::string& name,
                                  const Graph& g,
                                  const std::function<EdgeColoring()>& compute);
std::vector<int> golden_embedding(const GoldenStore& store, const std::string& name,
                                  const Graph& pattern, const Graph& host,
                                  const std::function<std::vector<int>()>& compute);

/// Rows in fixed order; with jobs > 1 rows are evaluated concurrently.
std::vector<ReproRow> run_repro(const ReproOptions& opts);
std::string repro_tsv(const std::vector<ReproRow>& rows);
bool any_mismatch(const std::vector<ReproRow>& rows);

} // namespace sierp
