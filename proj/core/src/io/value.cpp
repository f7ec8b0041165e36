#include "nonabcoh/io/value.hpp"

#include <cmath>
#include <cstdio>

#include "nonabcoh/error.hpp"

namespace nonabcoh::io {

Value& Value::operator[](const std::string& key) {
    if (!is_object()) raise("BadValue", "indexing a non-object JSON value");
    return std::get<Object>(v_)[key];
}

void Value::push_back(Value v) {
    if (!is_array()) raise("BadValue", "appending to a non-array JSON value");
    std::get<Array>(v_).push_back(std::move(v));
}

namespace {

void escape_string(const std::string& s, std::string& out) {
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
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    out += '"';
}

} // namespace

void Value::dump_to(std::string& out) const {
    struct Visitor {
        std::string& out;
        void operator()(std::nullptr_t) const { out += "null"; }
        void operator()(bool b) const { out += b ? "true" : "false"; }
        void operator()(std::int64_t n) const { out += std::to_string(n); }
        void operator()(double d) const {
            if (!std::isfinite(d)) {
                out += "null";
                return;
            }
            char buf[40];
            std::snprintf(buf, sizeof(buf), "%.17g", d);
            out += buf;
        }
        void operator()(const std::string& s) const { escape_string(s, out); }
        void operator()(const Array& a) const {
            out += '[';
            bool first = true;
            for (const Value& v : a) {
                if (!first) out += ',';
                first = false;
                v.dump_to(out);
            }
            out += ']';
        }
        void operator()(const Object& o) const {
            out += '{';
            bool first = true;
            for (const auto& [k, v] : o) {
                if (!first) out += ',';
                first = false;
                escape_string(k, out);
                out += ':';
                v.dump_to(out);
            }
            out += '}';
        }
    };
    std::visit(Visitor{out}, v_);
}

std::string Value::dump() const {
    std::string out;
    dump_to(out);
    out += '\n';
    return out;
}

} // namespace nonabcoh::io
