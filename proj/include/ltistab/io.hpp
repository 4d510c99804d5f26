#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "ltistab/rational_tf.hpp"
#include "ltistab/stability.hpp"

namespace ltistab {

/// Streaming JSON emitter with insertion-ordered keys and the fixed float
/// format of format_double. Infinite values are written as the strings "inf"
/// and "-inf". Output is pretty-printed with two-space indentation.
class JsonWriter {
public:
    JsonWriter& begin_object();
    JsonWriter& end_object();
    JsonWriter& begin_array();
    JsonWriter& end_array();
    JsonWriter& key(std::string_view name);
    JsonWriter& value(double v);
    JsonWriter& value(int v);
    JsonWriter& value(bool v);
    JsonWriter& value(std::string_view v);
    JsonWriter& value(const char* v) { return value(std::string_view(v)); }
    JsonWriter& null();

    const std::string& str() const noexcept { return out_; }

private:
    void before_value();
    void newline();
    void append_quoted(std::string_view v);

    std::string out_;
    std::vector<bool> first_;  // one flag per open container
    bool after_key_ = false;
};

std::string_view to_string(Verdict v) noexcept;
std::string_view to_string(Route r) noexcept;

void write_json(JsonWriter& w, const StabilityReport& report);
void write_json(JsonWriter& w, const GainRange& range);
void write_json(JsonWriter& w, const RootSet& roots);
void write_json(JsonWriter& w, const Polynomial& p);  // ascending coefficient array

std::string to_json(const StabilityReport& report);
std::string to_json(const GainRange& range);

/// Header `omega,re,im,mag,phase_deg`.
void write_frequency_csv(std::ostream& os, const std::vector<FrequencyPoint>& points);

}  // namespace ltistab
