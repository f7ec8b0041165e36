#include "nonabcoh/fingerprint.hpp"

#include <cstdio>

namespace nonabcoh {

std::string fingerprint_hex(std::string_view bytes) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(fnv1a64(bytes)));
    return std::string(buf);
}

} // namespace nonabcoh
