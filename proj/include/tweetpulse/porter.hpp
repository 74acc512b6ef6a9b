// Copyright 2026 The Tweetpulse Authors
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

#include <string>
#include <string_view>

namespace tp {

// Porter (1980) stemmer, matching the reference implementation's behavior
// including its documented departures from the original paper (step 2
// "bli" -> "ble", "logi" -> "log", and leaving 1- and 2-letter words
// untouched). Input must be a lowercase ASCII-alphabetic token; anything
// else is returned unchanged.
std::string porter_stem(std::string_view word);

}  // namespace tp
