// Copyright 2026 The mpgtf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MPGTF_ERROR_HPP_
#define MPGTF_ERROR_HPP_

#include <stdexcept>

namespace mpgtf {

// Unreadable or malformed files (WAV headers, filterbank JSON). Kept apart
// from std::invalid_argument so callers can map file problems onto their own
// exit paths.
class FileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mpgtf

#endif  // MPGTF_ERROR_HPP_
