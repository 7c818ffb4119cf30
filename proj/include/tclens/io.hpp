#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "tclens/ensemble.hpp"

namespace tclens {

/// Malformed-input error carrying the 1-based line and column (field index
/// for CSV, 0 when not applicable) where parsing stopped.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string file, std::size_t line, std::size_t column, const std::string& message);

    const std::string& file() const noexcept { return file_; }
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::string file_;
    std::size_t line_ = 0;
    std::size_t column_ = 0;
};

enum class DrawFileFormat { auto_detect, csv, ndjson };

/// Draws file ingestion.
///
/// CSV: first row lists the unit ids, every following row is one joint
/// posterior draw (draw-major, the way samplers emit iterations). NDJSON:
/// one JSON object per line mapping unit id to value; the first line fixes
/// the unit order. auto_detect picks NDJSON for .ndjson/.jsonl extensions
/// and CSV otherwise. Non-finite values, ragged rows and empty ensembles
/// raise ParseError.
DrawMatrix read_draws(const std::filesystem::path& path,
                      DrawFileFormat format = DrawFileFormat::auto_detect);

DrawMatrix read_draws_csv(std::istream& in, const std::string& name);
DrawMatrix read_draws_ndjson(std::istream& in, const std::string& name);

void write_draws_csv(const DrawMatrix& m, std::ostream& out);
void write_draws_ndjson(const DrawMatrix& m, std::ostream& out);

/// Per-unit point estimates or bare labels, as read from a two-column CSV
/// with header "unit_id,estimate" or "unit_id,label". Labels accept
/// above/below, true/false and 1/0.
struct EstimateFile {
    std::vector<std::string> unit_ids;
    bool has_estimates = false;
    std::vector<double> estimates;  // only when has_estimates
    std::vector<bool> labels;       // only when !has_estimates
};

EstimateFile read_estimates(const std::filesystem::path& path);
EstimateFile read_estimates_csv(std::istream& in, const std::string& name);

/// Binds an estimate file to an ensemble: checks that unit ids match the
/// matrix order exactly, derives labels from estimates (or synthesises
/// threshold +/- 1 placeholder estimates from bare labels so the
/// label/estimate relation holds). Throws std::invalid_argument on id
/// mismatch.
ClassificationEstimate bind_estimates(const EstimateFile& file,
                                      const DrawMatrix& m,
                                      double threshold);

/// Shortest decimal form that parses back to the same double.
std::string format_double(double value);

/// FNV-1a 64-bit digest of a file's bytes, as a hex string.
std::string file_digest(const std::filesystem::path& path);

}  // namespace tclens
