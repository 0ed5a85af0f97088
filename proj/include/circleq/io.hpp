#ifndef CIRCLEQ_IO_HPP
#define CIRCLEQ_IO_HPP

#include "circleq/symbol_analysis.hpp"
#include "circleq/types.hpp"

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace circleq {

inline constexpr const char* tool_name = "circleq";
inline constexpr const char* tool_version = "0.1.0";

/// Fixed 17-significant-digit formatting; lossless for doubles and byte-stable
/// across runs.
std::string format_double(double x);

/// Minimal JSON document builder with insertion-ordered object keys and
/// format_double number formatting, so emitted bytes are fully pinned.
class JsonValue {
public:
    static JsonValue object();
    static JsonValue array();
    static JsonValue number(double x);
    static JsonValue integer(long long v);
    static JsonValue string(std::string s);
    static JsonValue boolean(bool b);
    static JsonValue complex(Complex z);  // {"re":..,"im":..}

    JsonValue& set(const std::string& key, JsonValue v);
    JsonValue& push_back(JsonValue v);

    /// Compact serialization (no whitespace).
    std::string dump() const;

private:
    JsonValue() = default;
    enum class Tag { object, array, number, integer, string, boolean };
    Tag tag_ = Tag::object;
    double num_ = 0.0;
    long long int_ = 0;
    bool bool_ = false;
    std::string str_;
    std::vector<std::pair<std::string, JsonValue>> members_;
    std::vector<JsonValue> elements_;

    void dump_to(std::string& out) const;
};

/// CSV with '# key=value' comment lines before a mandatory header row.
class CsvWriter {
public:
    void comment(const std::string& key, const std::string& value);
    void header(const std::vector<std::string>& names);
    void row(const std::vector<std::string>& cells);
    const std::string& str() const { return text_; }

private:
    std::string text_;
};

/// Ordered command metadata serialized under the top-level "meta" key.
struct OutputMeta {
    std::string command;
    std::vector<std::pair<std::string, std::string>> params;
};

JsonValue meta_to_json(const OutputMeta& meta);

std::string matrix_to_json(const OperatorMatrix& a, const OutputMeta& meta);
std::string matrix_to_csv(const OperatorMatrix& a, const OutputMeta& meta);
/// Inverse of matrix_to_json; bit-exact under the fixed formatting rule.
/// Throws std::runtime_error on malformed input.
OperatorMatrix matrix_from_json(const std::string& text);

std::string phase_state_to_json(const PhaseStateVector& v, const OutputMeta& meta);
std::string phase_state_to_csv(const PhaseStateVector& v, const OutputMeta& meta);

std::string spectrum_to_json(int dim, const std::vector<Complex>& eigenvalues,
                             const Vector* top_eigenvector, const OutputMeta& meta);
std::string spectrum_to_csv(int dim, const std::vector<Complex>& eigenvalues,
                            const Vector* top_eigenvector, const OutputMeta& meta);

std::string scan_to_json(const ScanReport& report, const OutputMeta& meta);
std::string scan_to_csv(const ScanReport& report, const OutputMeta& meta);

/// Standalone gnuplot script that plots the residual column of a scan CSV.
std::string scan_plot_script(const std::string& csv_filename, const ScanReport& report);

}  // namespace circleq

#endif
