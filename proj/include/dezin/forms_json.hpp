// Copyright 2026 The Dezin Toolkit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DEZIN_FORMS_JSON_HPP
#define DEZIN_FORMS_JSON_HPP

#include <stdexcept>
#include <string>

#include "json.hpp"

#include "dezin/sparse_form.hpp"

namespace dezin {

// Wire format:
//   {"grade": p, "entries": [{"k": .., "s": .., "channel": 1|2, "re": .., "im": ..}]}
// "channel" is present exactly for grade 1. Entries are written in canonical
// (k, s, channel) order.

inline nlohmann::json to_json(const Cochain& f) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [cell, c] : f) {
    nlohmann::json e;
    e["k"] = cell.k;
    e["s"] = cell.s;
    if (f.grade() == 1) e["channel"] = static_cast<int>(cell.channel);
    e["re"] = c.real();
    e["im"] = c.imag();
    entries.push_back(std::move(e));
  }
  return {{"grade", f.grade()}, {"entries", std::move(entries)}};
}

inline Cochain cochain_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("grade") || !j.contains("entries")) {
    throw std::invalid_argument("cochain JSON needs 'grade' and 'entries'");
  }
  const int grade = j.at("grade").get<int>();
  Cochain f(grade);
  for (const auto& e : j.at("entries")) {
    Channel ch = Channel::none;
    if (grade == 1) {
      const int c = e.at("channel").get<int>();
      if (c != 1 && c != 2) {
        throw std::invalid_argument("1-form entry channel must be 1 or 2");
      }
      ch = static_cast<Channel>(c);
    } else if (e.contains("channel")) {
      throw std::invalid_argument("only 1-form entries carry a channel");
    }
    const double re = e.value("re", 0.0);
    const double im = e.value("im", 0.0);
    f.add({e.at("k").get<Coord>(), e.at("s").get<Coord>(), ch}, Complex(re, im));
  }
  return f;
}

}  // namespace dezin

#endif  // DEZIN_FORMS_JSON_HPP
