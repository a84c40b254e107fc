// Copyright 2026 The strongeo Authors
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

#ifndef STRONGEO_ERRORS_HPP
#define STRONGEO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace strongeo {

// Invalid caller input: bad ids, self-loops, malformed files.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Solver entry points require a connected graph.
class DisconnectedError : public GraphError {
 public:
  using GraphError::GraphError;
};

// Requested structure exceeds the generation limits.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A construction that is guaranteed by theory failed its runtime check.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace strongeo

#endif  // STRONGEO_ERRORS_HPP
