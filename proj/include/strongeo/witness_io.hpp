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

// Witness JSON: {"set": [ids], "geodesics": [{"pair": [u,v], "path": [ids]}]}.

#ifndef STRONGEO_WITNESS_IO_HPP
#define STRONGEO_WITNESS_IO_HPP

#include <string>

#include "strongeo/graph_io.hpp"
#include "strongeo/solver.hpp"

namespace strongeo {

Json witness_to_json(const CoverWitness& w);

/// Structural parse only; semantic checks belong to verify_witness.
CoverWitness witness_from_json(const Json& j);

std::string dump_witness(const CoverWitness& w);

}  // namespace strongeo

#endif  // STRONGEO_WITNESS_IO_HPP
