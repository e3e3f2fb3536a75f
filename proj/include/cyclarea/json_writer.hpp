#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cyclarea {

/// Streaming JSON emitter with a fixed, deterministic layout: two-space
/// indentation, keys in insertion order, doubles printed with %.17g so every
/// value round-trips exactly and identical inputs produce identical bytes.
class JsonWriter {
public:
    void begin_object();
    void end_object();
    void begin_array();
    void end_array();
    void key(std::string_view name);
    void value(double v);
    void value(std::int64_t v);
    void value(std::uint64_t v);
    void value(int v) { value(static_cast<std::int64_t>(v)); }
    void value(bool v);
    void value(std::string_view v);
    // String literals would otherwise decay to the bool overload.
    void value(const char* v) { value(std::string_view(v)); }
    void null();

    /// Finished document, newline terminated.
    std::string str() const;

private:
    enum class Frame { Object, Array };

    void prepare_for_value();
    void newline_indent();
    void raw(std::string_view text) { out_.append(text); }

    std::string out_;
    std::vector<Frame> stack_;
    std::vector<bool> has_items_;
    bool pending_key_ = false;
};

std::string json_escape(std::string_view text);

/// %.17g rendering used for every double emitted by the tools.
std::string format_double(double v);

} // namespace cyclarea
