// Copyright 2026 The Propeval Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PROPEVAL_UTF8_H_
#define PROPEVAL_UTF8_H_

#include <string>
#include <string_view>
#include <vector>

namespace propeval {

// Strict UTF-8 decoding into Unicode scalar values. Overlong forms,
// surrogates and values above U+10FFFF are rejected with an EncodingError
// carrying the byte offset of the offending sequence.
std::u32string DecodeUtf8(std::string_view bytes);

std::string EncodeUtf8(std::u32string_view text);

// Unicode White_Space property.
bool IsUnicodeWhitespace(char32_t c);

// Splits on runs of Unicode whitespace; no empty tokens are produced.
std::vector<std::u32string_view> WhitespaceTokens(std::u32string_view text);

}  // namespace propeval

#endif  // PROPEVAL_UTF8_H_
