#ifndef INK_UTF8_HPP
#define INK_UTF8_HPP

#include <string>

namespace ink::utf8 {

/// Decodes UTF-8 into a codepoint string. Throws Errc::MalformedRecord on
/// invalid byte sequences (overlong forms, surrogates, truncation).
std::u32string decode(const std::string& bytes);

std::string encode(const std::u32string& codepoints);
std::string encode(char32_t codepoint);

}  // namespace ink::utf8

#endif
