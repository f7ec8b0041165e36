#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace nonabcoh::io {

/// Minimal JSON tree for report output.  Object keys are kept in a sorted
/// map and doubles print with 17 significant digits, so identical reports
/// serialize byte-identically.
class Value {
public:
    using Array = std::vector<Value>;
    using Object = std::map<std::string, Value>;

    Value() : v_(nullptr) {}
    Value(std::nullptr_t) : v_(nullptr) {} // NOLINT(google-explicit-constructor)
    Value(bool b) : v_(b) {}               // NOLINT(google-explicit-constructor)
    Value(std::int64_t n) : v_(n) {}       // NOLINT(google-explicit-constructor)
    Value(int n) : v_(static_cast<std::int64_t>(n)) {} // NOLINT(google-explicit-constructor)
    Value(double d) : v_(d) {}             // NOLINT(google-explicit-constructor)
    Value(const char* s) : v_(std::string(s)) {} // NOLINT(google-explicit-constructor)
    Value(std::string s) : v_(std::move(s)) {}   // NOLINT(google-explicit-constructor)
    Value(Array a) : v_(std::move(a)) {}         // NOLINT(google-explicit-constructor)
    Value(Object o) : v_(std::move(o)) {}        // NOLINT(google-explicit-constructor)

    static Value object() { return Value(Object{}); }
    static Value array() { return Value(Array{}); }

    bool is_object() const { return std::holds_alternative<Object>(v_); }
    bool is_array() const { return std::holds_alternative<Array>(v_); }

    Value& operator[](const std::string& key);
    void push_back(Value v);

    /// Compact deterministic serialization.
    std::string dump() const;

private:
    std::variant<std::nullptr_t, bool, std::int64_t, double, std::string, Array, Object> v_;

    void dump_to(std::string& out) const;
};

} // namespace nonabcoh::io
