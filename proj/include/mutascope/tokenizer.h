// Copyright 2026 The Mutascope Authors
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

#ifndef MUTASCOPE_TOKENIZER_H_
#define MUTASCOPE_TOKENIZER_H_

#include <string_view>

#include "mutascope/source_token.h"

namespace mutascope {

// Lossless lexer for indentation-delimited source (the reference target
// syntax). String and comment contents are always emitted as single tokens.
//
// Throws DecodingError when `file_bytes` is not valid UTF-8.
TokenList Tokenize(std::string_view file_bytes, std::string_view path);

// Returns true when `bytes` is well-formed UTF-8 (no overlongs, no
// surrogates, nothing above U+10FFFF).
bool IsValidUtf8(std::string_view bytes);

}  // namespace mutascope

#endif  // MUTASCOPE_TOKENIZER_H_
