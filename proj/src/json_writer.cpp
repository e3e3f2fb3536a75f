#include "cyclarea/json_writer.hpp"

#include <cmath>
#include <cstdio>

#include "cyclarea/errors.hpp"

namespace cyclarea {

std::string json_escape(std::string_view text) {
    std::string out;
    out.reserve(text.size() + 2);
    for (char ch : text) {
        switch (ch) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\r': out += "\\r"; break;
        case '\t': out += "\\t"; break;
        default:
            if (static_cast<unsigned char>(ch) < 0x20) {
                char buf[8];
                std::snprintf(buf, sizeof buf, "\\u%04x", ch);
                out += buf;
            } else {
                out += ch;
            }
        }
    }
    return out;
}

std::string format_double(double v) {
    if (!std::isfinite(v))
        return "null"; // JSON has no infinities
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void JsonWriter::newline_indent() {
    out_ += '\n';
    out_.append(2 * stack_.size(), ' ');
}

void JsonWriter::prepare_for_value() {
    if (pending_key_) {
        pending_key_ = false;
        return;
    }
    if (stack_.empty())
        return;
    if (stack_.back() == Frame::Object)
        throw InvalidInputError("json writer: value inside an object needs a key");
    if (has_items_.back())
        out_ += ',';
    has_items_.back() = true;
    newline_indent();
}

void JsonWriter::begin_object() {
    prepare_for_value();
    out_ += '{';
    stack_.push_back(Frame::Object);
    has_items_.push_back(false);
}

void JsonWriter::end_object() {
    const bool had_items = has_items_.back();
    stack_.pop_back();
    has_items_.pop_back();
    if (had_items)
        newline_indent();
    out_ += '}';
}

void JsonWriter::begin_array() {
    prepare_for_value();
    out_ += '[';
    stack_.push_back(Frame::Array);
    has_items_.push_back(false);
}

void JsonWriter::end_array() {
    const bool had_items = has_items_.back();
    stack_.pop_back();
    has_items_.pop_back();
    if (had_items)
        newline_indent();
    out_ += ']';
}

void JsonWriter::key(std::string_view name) {
    if (has_items_.back())
        out_ += ',';
    has_items_.back() = true;
    newline_indent();
    out_ += '"';
    out_ += json_escape(name);
    out_ += "\": ";
    pending_key_ = true;
}

void JsonWriter::value(double v) {
    prepare_for_value();
    out_ += format_double(v);
}

void JsonWriter::value(std::int64_t v) {
    prepare_for_value();
    out_ += std::to_string(v);
}

void JsonWriter::value(std::uint64_t v) {
    prepare_for_value();
    out_ += std::to_string(v);
}

void JsonWriter::value(bool v) {
    prepare_for_value();
    out_ += v ? "true" : "false";
}

void JsonWriter::value(std::string_view v) {
    prepare_for_value();
    out_ += '"';
    out_ += json_escape(v);
    out_ += '"';
}

void JsonWriter::null() {
    prepare_for_value();
    out_ += "null";
}

std::string JsonWriter::str() const {
    return out_ + "\n";
}

} // namespace cyclarea
