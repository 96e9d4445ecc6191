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

#include "weaksim/backends.hpp"

#include <string>

#include "weaksim/ch_form.hpp"
#include "weaksim/errors.hpp"
#include "weaksim/mps.hpp"
#include "weaksim/statevector.hpp"

namespace weaksim {

BackendFactory make_backend_factory(std::string_view name, std::size_t chi_max) {
    if (name == "statevector") {
        return statevector_factory();
    }
    if (name == "stabilizer") {
        return stabilizer_factory();
    }
    if (name == "mps") {
        return mps_factory(chi_max);
    }
    throw InvalidSpec("unknown backend '" + std::string(name) + "'");
}

}  // namespace weaksim
