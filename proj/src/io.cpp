#include "circleq/io.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace circleq {

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

// --- JsonValue -------------------------------------------------------------

JsonValue JsonValue::object() {
    JsonValue v;
    v.tag_ = Tag::object;
    return v;
}
JsonValue JsonValue::array() {
    JsonValue v;
    v.tag_ = Tag::array;
    return v;
}
JsonValue JsonValue::number(double x) {
    JsonValue v;
    v.tag_ = Tag::number;
    v.num_ = x;
    return v;
}
JsonValue JsonValue::integer(long long i) {
    JsonValue v;
    v.tag_ = Tag::integer;
    v.int_ = i;
    return v;
}
JsonValue JsonValue::string(std::string s) {
    JsonValue v;
    v.tag_ = Tag::string;
    v.str_ = std::move(s);
    return v;
}
JsonValue JsonValue::boolean(bool b) {
    JsonValue v;
    v.tag_ = Tag::boolean;
    v.bool_ = b;
    return v;
}
JsonValue JsonValue::complex(Complex z) {
    JsonValue v = object();
    v.set("re", number(z.real()));
    v.set("im", number(z.imag()));
    return v;
}

JsonValue& JsonValue::set(const std::string& key, JsonValue v) {
    members_.emplace_back(key, std::move(v));
    return *this;
}
JsonValue& JsonValue::push_back(JsonValue v) {
    elements_.push_back(std::move(v));
    return *this;
}

namespace {
void escape_into(const std::string& s, std::string& out) {
    out += '"';
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    out += '"';
}
}  // namespace

void JsonValue::dump_to(std::string& out) const {
    switch (tag_) {
        case Tag::object: {
            out += '{';
            bool first = true;
            for (const auto& [key, value] : members_) {
                if (!first) out += ',';
                first = false;
                escape_into(key, out);
                out += ':';
                value.dump_to(out);
            }
            out += '}';
            break;
        }
        case Tag::array: {
            out += '[';
            bool first = true;
            for (const auto& value : elements_) {
                if (!first) out += ',';
                first = false;
                value.dump_to(out);
            }
            out += ']';
            break;
        }
        case Tag::number:
            if (std::isfinite(num_))
                out += format_double(num_);
            else
                out += "null";
            break;
        case Tag::integer:
            out += std::to_string(int_);
            break;
        case Tag::string:
            escape_into(str_, out);
            break;
        case Tag::boolean:
            out += bool_ ? "true" : "false";
            break;
    }
}

std::string JsonValue::dump() const {
    std::string out;
    dump_to(out);
    out += '\n';
    return out;
}

// --- CsvWriter ---------------------------------------------------------------

void CsvWriter::comment(const std::string& key, const std::string& value) {
    text_ += "# " + key + "=" + value + "\n";
}

namespace {
std::string join_cells(const std::vector<std::string>& cells) {
    std::string line;
    for (size_t i = 0; i < cells.size(); ++i) {
        if (i) line += ',';
        line += cells[i];
    }
    line += '\n';
    return line;
}
}  // namespace

void CsvWriter::header(const std::vector<std::string>& names) { text_ += join_cells(names); }
void CsvWriter::row(const std::vector<std::string>& cells) { text_ += join_cells(cells); }

// --- artifact serialization ----------------------------------------------------

JsonValue meta_to_json(const OutputMeta& meta) {
    JsonValue m = JsonValue::object();
    m.set("tool", JsonValue::string(tool_name));
    m.set("version", JsonValue::string(tool_version));
    m.set("command", JsonValue::string(meta.command));
    for (const auto& [key, value] : meta.params) m.set(key, JsonValue::string(value));
    return m;
}

namespace {

CsvWriter csv_with_meta(const OutputMeta& meta) {
    CsvWriter csv;
    csv.comment("tool", std::string(tool_name) + " " + tool_version);
    csv.comment("command", meta.command);
    for (const auto& [key, value] : meta.params) csv.comment(key, value);
    return csv;
}

JsonValue matrix_entries_json(const Matrix& m) {
    JsonValue rows = JsonValue::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        JsonValue row = JsonValue::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(JsonValue::complex(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

JsonValue matrix_data_json(const OperatorMatrix& a) {
    JsonValue data = JsonValue::object();
    data.set("dim", JsonValue::integer(a.dim()));
    data.set("hermitian", JsonValue::boolean(a.hermitian));
    data.set("entries", matrix_entries_json(a.entries));
    return data;
}

std::string document(const OutputMeta& meta, JsonValue data) {
    JsonValue doc = JsonValue::object();
    doc.set("meta", meta_to_json(meta));
    doc.set("data", std::move(data));
    return doc.dump();
}

}  // namespace

std::string matrix_to_json(const OperatorMatrix& a, const OutputMeta& meta) {
    return document(meta, matrix_data_json(a));
}

std::string matrix_to_csv(const OperatorMatrix& a, const OutputMeta& meta) {
    CsvWriter csv = csv_with_meta(meta);
    csv.comment("dim", std::to_string(a.dim()));
    csv.comment("hermitian", a.hermitian ? "true" : "false");
    csv.header({"row", "col", "re", "im"});
    for (int r = 0; r < a.dim(); ++r)
        for (int c = 0; c < a.dim(); ++c)
            csv.row({std::to_string(r), std::to_string(c), format_double(a.entries(r, c).real()),
                     format_double(a.entries(r, c).imag())});
    return csv.str();
}

OperatorMatrix matrix_from_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("matrix_from_json: parse failure: ") + e.what());
    }
    if (!doc.contains("data")) throw std::runtime_error("matrix_from_json: missing data");
    const auto& data = doc["data"];
    if (!data.contains("dim") || !data.contains("entries"))
        throw std::runtime_error("matrix_from_json: missing dim/entries");
    const int n = data["dim"].get<int>();
    if (n < 1) throw std::runtime_error("matrix_from_json: dim must be >= 1");
    OperatorMatrix a;
    a.hermitian = data.value("hermitian", false);
    a.entries.resize(n, n);
    const auto& rows = data["entries"];
    if (static_cast<int>(rows.size()) != n) throw std::runtime_error("matrix_from_json: row count");
    for (int r = 0; r < n; ++r) {
        const auto& row = rows[static_cast<size_t>(r)];
        if (static_cast<int>(row.size()) != n)
            throw std::runtime_error("matrix_from_json: column count");
        for (int c = 0; c < n; ++c) {
            const auto& cell = row[static_cast<size_t>(c)];
            a.entries(r, c) = Complex(cell["re"].get<double>(), cell["im"].get<double>());
        }
    }
    return a;
}

std::string phase_state_to_json(const PhaseStateVector& v, const OutputMeta& meta) {
    JsonValue data = JsonValue::object();
    data.set("dim", JsonValue::integer(v.dim()));
    data.set("theta", JsonValue::number(v.theta));
    JsonValue amps = JsonValue::array();
    for (int j = 0; j < v.dim(); ++j) amps.push_back(JsonValue::complex(v.amplitudes[j]));
    data.set("amplitudes", std::move(amps));
    return document(meta, std::move(data));
}

std::string phase_state_to_csv(const PhaseStateVector& v, const OutputMeta& meta) {
    CsvWriter csv = csv_with_meta(meta);
    csv.comment("dim", std::to_string(v.dim()));
    csv.comment("theta", format_double(v.theta));
    csv.header({"n", "re", "im"});
    for (int j = 0; j < v.dim(); ++j)
        csv.row({std::to_string(j), format_double(v.amplitudes[j].real()),
                 format_double(v.amplitudes[j].imag())});
    return csv.str();
}

std::string spectrum_to_json(int dim, const std::vector<Complex>& eigenvalues,
                             const Vector* top_eigenvector, const OutputMeta& meta) {
    JsonValue data = JsonValue::object();
    data.set("dim", JsonValue::integer(dim));
    JsonValue evs = JsonValue::array();
    for (const Complex& z : eigenvalues) evs.push_back(JsonValue::complex(z));
    data.set("eigenvalues", std::move(evs));
    if (top_eigenvector) {
        JsonValue vec = JsonValue::array();
        for (Eigen::Index j = 0; j < top_eigenvector->size(); ++j)
            vec.push_back(JsonValue::complex((*top_eigenvector)[j]));
        data.set("top_eigenvector", std::move(vec));
    }
    return document(meta, std::move(data));
}

std::string spectrum_to_csv(int dim, const std::vector<Complex>& eigenvalues,
                            const Vector* top_eigenvector, const OutputMeta& meta) {
    CsvWriter csv = csv_with_meta(meta);
    csv.comment("dim", std::to_string(dim));
    if (top_eigenvector) {
        csv.header({"index", "eigenvalue_re", "eigenvalue_im", "top_vector_re", "top_vector_im"});
        for (size_t j = 0; j < eigenvalues.size(); ++j)
            csv.row({std::to_string(j), format_double(eigenvalues[j].real()),
                     format_double(eigenvalues[j].imag()),
                     format_double((*top_eigenvector)[static_cast<Eigen::Index>(j)].real()),
                     format_double((*top_eigenvector)[static_cast<Eigen::Index>(j)].imag())});
    } else {
        csv.header({"index", "eigenvalue_re", "eigenvalue_im"});
        for (size_t j = 0; j < eigenvalues.size(); ++j)
            csv.row({std::to_string(j), format_double(eigenvalues[j].real()),
                     format_double(eigenvalues[j].imag())});
    }
    return csv.str();
}

namespace {

void scan_meta_common(const ScanReport& report, JsonValue& data) {
    data.set("quantity", JsonValue::string(report.quantity));
    data.set("grid_rule", JsonValue::string(report.grid_rule));
    if (report.theta) data.set("theta", JsonValue::number(*report.theta));
    if (report.observable) data.set("observable", JsonValue::string(*report.observable));
    data.set("tolerance", JsonValue::number(report.tolerance));
}

}  // namespace

std::string scan_to_json(const ScanReport& report, const OutputMeta& meta) {
    JsonValue data = JsonValue::object();
    scan_meta_common(report, data);
    JsonValue axis = JsonValue::array();
    for (double x : report.axis) axis.push_back(JsonValue::number(x));
    data.set("axis", std::move(axis));
    JsonValue measured = JsonValue::array();
    for (const Complex& z : report.measured) measured.push_back(JsonValue::complex(z));
    data.set("measured", std::move(measured));
    JsonValue reference = JsonValue::array();
    for (const Complex& z : report.reference) reference.push_back(JsonValue::complex(z));
    data.set("reference", std::move(reference));
    JsonValue residuals = JsonValue::array();
    for (double r : report.residuals) residuals.push_back(JsonValue::number(r));
    data.set("residuals", std::move(residuals));
    if (!report.envelope.empty()) {
        JsonValue envelope = JsonValue::array();
        for (double e : report.envelope) envelope.push_back(JsonValue::number(e));
        data.set("envelope", std::move(envelope));
    }
    return document(meta, std::move(data));
}

std::string scan_to_csv(const ScanReport& report, const OutputMeta& meta) {
    CsvWriter csv = csv_with_meta(meta);
    csv.comment("quantity", report.quantity);
    csv.comment("grid_rule", report.grid_rule);
    if (report.theta) csv.comment("theta", format_double(*report.theta));
    if (report.observable) csv.comment("observable", *report.observable);
    csv.comment("tolerance", format_double(report.tolerance));
    const bool with_envelope = !report.envelope.empty();
    std::vector<std::string> names = {"axis",         "measured_re", "measured_im",
                                      "reference_re", "reference_im", "residual"};
    if (with_envelope) names.push_back("envelope");
    csv.header(names);
    for (size_t i = 0; i < report.axis.size(); ++i) {
        std::vector<std::string> cells = {
            format_double(report.axis[i]),         format_double(report.measured[i].real()),
            format_double(report.measured[i].imag()), format_double(report.reference[i].real()),
            format_double(report.reference[i].imag()), format_double(report.residuals[i])};
        if (with_envelope) cells.push_back(format_double(report.envelope[i]));
        csv.row(cells);
    }
    return csv.str();
}

std::string scan_plot_script(const std::string& csv_filename, const ScanReport& report) {
    std::string script;
    script += "# gnuplot script emitted by " + std::string(tool_name) + " " + tool_version + "\n";
    script += "set datafile separator \",\"\n";
    script += "set datafile commentschars \"#\"\n";
    script += "set key autotitle columnhead\n";
    script += "set xlabel \"N\"\n";
    script += "set ylabel \"residual\"\n";
    script += "set logscale y\n";
    script += "set grid\n";
    script += "set title \"" + report.quantity + " scan (" + report.grid_rule + ")\"\n";
    script += "plot \"" + csv_filename + "\" using 1:6 with linespoints";
    if (!report.envelope.empty())
        script += ", \\\n     \"" + csv_filename + "\" using 1:7 with lines";
    script += "\n";
    return script;
}

}  // namespace circleq
