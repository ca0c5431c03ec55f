// Copyright 2026 The qgeom Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QGEOM_QGEOM_HPP_
#define QGEOM_QGEOM_HPP_

#include "qgeom/composite.hpp"
#include "qgeom/density.hpp"
#include "qgeom/density_state.hpp"
#include "qgeom/gates.hpp"
#include "qgeom/io.hpp"
#include "qgeom/observables.hpp"
#include "qgeom/projective.hpp"
#include "qgeom/random.hpp"
#include "qgeom/realified.hpp"
#include "qgeom/types.hpp"
#include "qgeom/verify.hpp"

#endif  // QGEOM_QGEOM_HPP_
