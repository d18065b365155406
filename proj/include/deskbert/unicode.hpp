#pragma once

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "deskbert/unicode_tables.hpp"

namespace deskbert::unicode {

constexpr uint32_t kReplacementChar = 0xFFFD;

namespace detail {

inline bool in_ranges(std::span<const unicode_tables::CpRange> table, uint32_t cp) {
    auto it = std::upper_bound(table.begin(), table.end(), cp,
                               [](uint32_t v, const unicode_tables::CpRange& r) { return v < r.lo; });
    return it != table.begin() && cp <= std::prev(it)->hi;
}

}  // namespace detail

// Control (minus \t, \n), format, surrogate, private-use and unassigned code points.
inline bool is_unprintable(uint32_t cp) {
    return detail::in_ranges(unicode_tables::kUnprintable, cp);
}

inline bool is_combining_mark(uint32_t cp) {
    return detail::in_ranges(unicode_tables::kCombiningMark, cp);
}

inline bool is_punct_or_symbol(uint32_t cp) {
    return detail::in_ranges(unicode_tables::kPunctOrSymbol, cp);
}

inline bool is_whitespace(uint32_t cp) {
    if (cp == '\t' || cp == '\n' || cp == '\r' || cp == 0x0B || cp == 0x0C) return true;
    return detail::in_ranges(unicode_tables::kSpaceSeparator, cp);
}

inline bool is_uppercase(uint32_t cp) {
    return detail::in_ranges(unicode_tables::kUppercase, cp);
}

inline bool is_digit(uint32_t cp) {
    return detail::in_ranges(unicode_tables::kDecimalDigit, cp);
}

inline void append_utf8(std::string& out, uint32_t cp) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

// Lenient decoder: malformed bytes become U+FFFD, one per offending byte.
inline std::vector<uint32_t> decode_utf8(std::string_view text) {
    std::vector<uint32_t> cps;
    cps.reserve(text.size());
    size_t i = 0;
    const auto* bytes = reinterpret_cast<const unsigned char*>(text.data());
    while (i < text.size()) {
        unsigned char b = bytes[i];
        uint32_t cp = 0;
        size_t len = 0;
        if (b < 0x80) {
            cp = b;
            len = 1;
        } else if ((b & 0xE0) == 0xC0) {
            cp = b & 0x1F;
            len = 2;
        } else if ((b & 0xF0) == 0xE0) {
            cp = b & 0x0F;
            len = 3;
        } else if ((b & 0xF8) == 0xF0) {
            cp = b & 0x07;
            len = 4;
        } else {
            cps.push_back(kReplacementChar);
            ++i;
            continue;
        }
        if (i + len > text.size()) {
            cps.push_back(kReplacementChar);
            ++i;
            continue;
        }
        bool ok = true;
        for (size_t j = 1; j < len; ++j) {
            if ((bytes[i + j] & 0xC0) != 0x80) {
                ok = false;
                break;
            }
            cp = (cp << 6) | (bytes[i + j] & 0x3F);
        }
        static constexpr uint32_t kMinByLen[5] = {0, 0, 0x80, 0x800, 0x10000};
        if (!ok || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF) || cp < kMinByLen[len]) {
            cps.push_back(kReplacementChar);
            ++i;
            continue;
        }
        cps.push_back(cp);
        i += len;
    }
    return cps;
}

inline std::string encode_utf8(std::span<const uint32_t> cps) {
    std::string out;
    out.reserve(cps.size());
    for (uint32_t cp : cps) append_utf8(out, cp);
    return out;
}

// Accent fold of one code point: NFC of its NFD with combining marks removed.
// Returns false when the code point is unchanged. A standalone combining mark
// folds to the empty sequence.
inline bool fold_codepoint(uint32_t cp, std::vector<uint32_t>& out) {
    using unicode_tables::kFoldEntries;
    auto it = std::lower_bound(std::begin(kFoldEntries), std::end(kFoldEntries), cp,
                               [](const unicode_tables::FoldEntry& e, uint32_t v) { return e.cp < v; });
    if (it != std::end(kFoldEntries) && it->cp == cp) {
        std::string_view bytes(reinterpret_cast<const char*>(unicode_tables::kFoldPool) + it->offset,
                               it->length);
        for (uint32_t folded : decode_utf8(bytes)) out.push_back(folded);
        return true;
    }
    if (is_combining_mark(cp)) return true;  // dropped
    out.push_back(cp);
    return false;
}

inline std::string fold_accents(std::string_view text) {
    std::vector<uint32_t> out;
    out.reserve(text.size());
    for (uint32_t cp : decode_utf8(text)) fold_codepoint(cp, out);
    return encode_utf8(out);
}

}  // namespace deskbert::unicode
