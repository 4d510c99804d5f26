#include "ltistab/io.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "ltistab/format.hpp"

namespace ltistab {

void JsonWriter::newline() {
    out_ += '\n';
    out_.append(2 * first_.size(), ' ');
}

void JsonWriter::before_value() {
    if (after_key_) {
        after_key_ = false;
        return;
    }
    if (first_.empty()) return;
    if (!first_.back()) out_ += ',';
    first_.back() = false;
    newline();
}

JsonWriter& JsonWriter::begin_object() {
    before_value();
    out_ += '{';
    first_.push_back(true);
    return *this;
}

JsonWriter& JsonWriter::end_object() {
    const bool empty = first_.back();
    first_.pop_back();
    if (!empty) newline();
    out_ += '}';
    if (first_.empty()) out_ += '\n';
    return *this;
}

JsonWriter& JsonWriter::begin_array() {
    before_value();
    out_ += '[';
    first_.push_back(true);
    return *this;
}

JsonWriter& JsonWriter::end_array() {
    const bool empty = first_.back();
    first_.pop_back();
    if (!empty) newline();
    out_ += ']';
    if (first_.empty()) out_ += '\n';
    return *this;
}

JsonWriter& JsonWriter::key(std::string_view name) {
    before_value();
    append_quoted(name);
    out_ += ": ";
    after_key_ = true;
    return *this;
}

JsonWriter& JsonWriter::value(double v) {
    if (std::isinf(v) || std::isnan(v)) return value(std::string_view(format_double(v)));
    before_value();
    out_ += format_double(v);
    return *this;
}

JsonWriter& JsonWriter::value(int v) {
    before_value();
    out_ += std::to_string(v);
    return *this;
}

JsonWriter& JsonWriter::value(bool v) {
    before_value();
    out_ += v ? "true" : "false";
    return *this;
}

JsonWriter& JsonWriter::value(std::string_view v) {
    before_value();
    append_quoted(v);
    return *this;
}

void JsonWriter::append_quoted(std::string_view v) {
    out_ += '"';
    for (char c : v) {
        switch (c) {
            case '"': out_ += "\\\""; break;
            case '\\': out_ += "\\\\"; break;
            case '\n': out_ += "\\n"; break;
            case '\t': out_ += "\\t"; break;
            case '\r': out_ += "\\r"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", static_cast<unsigned>(c));
                    out_ += buf;
                } else {
                    out_ += c;
                }
        }
    }
    out_ += '"';
}

JsonWriter& JsonWriter::null() {
    before_value();
    out_ += "null";
    return *this;
}

std::string_view to_string(Verdict v) noexcept {
    switch (v) {
        case Verdict::Stable: return "stable";
        case Verdict::Marginal: return "marginal";
        case Verdict::Unstable: return "unstable";
    }
    return "unknown";
}

std::string_view to_string(Route r) noexcept {
    switch (r) {
        case Route::Poles: return "poles";
        case Route::Roc: return "roc";
        case Route::NumericL1: return "numeric_l1";
    }
    return "unknown";
}

namespace {

void write_complex(JsonWriter& w, Complex z) {
    w.begin_object().key("re").value(z.real()).key("im").value(z.imag()).end_object();
}

}  // namespace

void write_json(JsonWriter& w, const StabilityReport& report) {
    w.begin_object();
    w.key("verdict").value(to_string(report.verdict));
    w.key("spectral_abscissa").value(report.spectral_abscissa);
    w.key("dominant_pole");
    if (report.dominant_pole)
        write_complex(w, *report.dominant_pole);
    else
        w.null();
    w.key("dominant_multiplicity").value(report.dominant_multiplicity);
    w.key("decay_time_constant").value(report.decay_time_constant);
    w.key("settling_time_estimate").value(report.settling_time_estimate);
    w.key("route").value(to_string(report.route));
    w.end_object();
}

void write_json(JsonWriter& w, const GainRange& range) {
    w.begin_object();
    w.key("lower").value(range.lower);
    w.key("upper").value(range.upper);
    w.key("boundary_open").begin_object();
    w.key("lower").value(range.boundary_open.lower);
    w.key("upper").value(range.boundary_open.upper);
    w.end_object();
    w.end_object();
}

void write_json(JsonWriter& w, const RootSet& roots) {
    w.begin_array();
    for (const auto& r : roots.roots) {
        w.begin_object();
        w.key("re").value(r.location.real());
        w.key("im").value(r.location.imag());
        w.key("multiplicity").value(r.multiplicity);
        w.end_object();
    }
    w.end_array();
}

void write_json(JsonWriter& w, const Polynomial& p) {
    w.begin_array();
    for (double c : p.coeffs()) w.value(c);
    w.end_array();
}

std::string to_json(const StabilityReport& report) {
    JsonWriter w;
    write_json(w, report);
    return w.str();
}

std::string to_json(const GainRange& range) {
    JsonWriter w;
    write_json(w, range);
    return w.str();
}

void write_frequency_csv(std::ostream& os, const std::vector<FrequencyPoint>& points) {
    os << "omega,re,im,mag,phase_deg\n";
    for (const auto& p : points)
        os << format_double(p.omega) << ',' << format_double(p.value.real()) << ',' << format_double(p.value.imag())
           << ',' << format_double(p.magnitude) << ',' << format_double(p.phase_deg) << '\n';
}

}  // namespace ltistab
