// Copyright 2026 The weaksim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef WEAKSIM_BACKENDS_HPP
#define WEAKSIM_BACKENDS_HPP

#include <cstddef>
#include <string_view>

#include "weaksim/backend.hpp"

namespace weaksim {

/// "statevector", "stabilizer" or "mps" (chi_max 0 = unbounded). Throws
/// InvalidSpec for other names.
BackendFactory make_backend_factory(std::string_view name, std::size_t chi_max = 0);

}  // namespace weaksim

#endif
