// Copyright 2026 The Authors.
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


#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/archive/iterators/base64_from_binary.hpp>
#include <boost/archive/iterators/binary_from_base64.hpp>
#include <boost/archive/iterators/transform_width.hpp>

namespace symtensor::detail {

inline std::string base64_encode(const std::vector<std::uint8_t>& bytes) {
  namespace bi = boost::archive::iterators;
  using It = bi::base64_from_binary<bi::transform_width<std::vector<std::uint8_t>::const_iterator, 6, 8>>;
  std::string out(It(bytes.begin()), It(bytes.end()));
  out.append((3 - bytes.size() % 3) % 3, '=');
  return out;
}

/// Decodes standard base64; whitespace is ignored.
inline std::vector<std::uint8_t> base64_decode(const std::string& text) {
  namespace bi = boost::archive::iterators;
  std::string s;
  s.reserve(text.size());
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.size() % 4 != 0) throw std::invalid_argument("base64 length is not a multiple of 4");
  std::size_t pad = 0;
  while (pad < 2 && pad < s.size() && s[s.size() - 1 - pad] == '=') ++pad;
  for (std::size_t i = 0; i + pad < s.size(); ++i) {
    const char c = s[i];
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '+' && c != '/')
      throw std::invalid_argument("invalid base64 character");
  }
  std::replace(s.end() - static_cast<std::ptrdiff_t>(pad), s.end(), '=', 'A');
  using It = bi::transform_width<bi::binary_from_base64<std::string::const_iterator>, 8, 6>;
  std::vector<std::uint8_t> out(It(s.begin()), It(s.end()));
  out.resize(out.size() - pad);
  return out;
}

}  // namespace symtensor::detail
