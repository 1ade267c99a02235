#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "strz/types.hpp"

// Minimal deterministic JSON assembly for the report documents. All floats
// are serialized with 17 significant digits so reports round-trip exactly
// and diff cleanly in golden tests.

namespace strz {

inline std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 8);
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
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

inline std::string json_number(double v) {
    if (std::isnan(v)) return "null";
    if (std::isinf(v)) return v > 0 ? "\"inf\"" : "\"-inf\"";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

/// Ordered JSON object/array builder.
class Json {
public:
    static Json object() { return Json("{", "}"); }
    static Json array() { return Json("[", "]"); }

    Json& field(const std::string& key, const std::string& value) {
        return raw_field(key, "\"" + json_escape(value) + "\"");
    }
    Json& field(const std::string& key, const char* value) {
        return field(key, std::string(value));
    }
    Json& field(const std::string& key, double value) {
        return raw_field(key, json_number(value));
    }
    Json& field(const std::string& key, int value) {
        return raw_field(key, std::to_string(value));
    }
    Json& field(const std::string& key, std::uint64_t value) {
        return raw_field(key, std::to_string(value));
    }
    Json& field(const std::string& key, bool value) {
        return raw_field(key, value ? "true" : "false");
    }
    Json& field_null(const std::string& key) { return raw_field(key, "null"); }
    Json& field(const std::string& key, const Json& value) {
        return raw_field(key, value.str());
    }

    Json& item(const Json& value) { return raw_item(value.str()); }
    Json& item(const std::string& value) {
        return raw_item("\"" + json_escape(value) + "\"");
    }
    Json& item(double value) { return raw_item(json_number(value)); }

    Json& raw_field(const std::string& key, const std::string& rendered) {
        if (!first_) body_ += ",";
        body_ += "\"" + json_escape(key) + "\":" + rendered;
        first_ = false;
        return *this;
    }
    Json& raw_item(const std::string& rendered) {
        if (!first_) body_ += ",";
        body_ += rendered;
        first_ = false;
        return *this;
    }

    std::string str() const { return open_ + body_ + close_; }

private:
    Json(std::string open, std::string close)
        : open_(std::move(open)), close_(std::move(close)) {}
    std::string open_, close_, body_;
    bool first_ = true;
};

inline Json ratio_report_json(const RatioReport& rep) {
    Json j = Json::object();
    j.field("lhs", rep.lhs)
        .field("rhs", rep.rhs)
        .field("ratio", rep.ratio)
        .field("lhs_err", rep.lhs_err)
        .field("rhs_err", rep.rhs_err)
        .field("expected", rep.expected)
        .field("tolerance", rep.tolerance)
        .field("verdict", to_string(rep.verdict));
    return j;
}

} // namespace strz
