// Copyright 2026 mtmeta authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MTMETA_TEXT_HPP
#define MTMETA_TEXT_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace mtmeta {

// Decodes UTF-8 into code points. Malformed bytes are consumed one at a
// time and kept as their byte value, so decoding is total and deterministic.
std::u32string decode_utf8(std::string_view text);

std::string encode_utf8(const std::u32string& points);

bool is_unicode_space(char32_t cp);

// ASCII punctuation only; the tokenizer's separation rule is fixed to it.
bool is_ascii_punct(char32_t cp);

// ASCII A-Z plus the Latin-1 uppercase letters; other scripts unchanged.
char32_t fold_lower(char32_t cp);

std::string lowercase(std::string_view text);

// Splits on Unicode whitespace, no other processing.
std::vector<std::string> split_whitespace(std::string_view text);

}  // namespace mtmeta

#endif  // MTMETA_TEXT_HPP
