// Copyright 2026 The invforge Authors
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

#ifndef INVFORGE_INVFORGE_HPP_
#define INVFORGE_INVFORGE_HPP_

#include "invforge/alphamap.hpp"
#include "invforge/arith.hpp"
#include "invforge/closedform.hpp"
#include "invforge/covariant.hpp"
#include "invforge/enumerate.hpp"
#include "invforge/errors.hpp"
#include "invforge/plethysm.hpp"
#include "invforge/poly.hpp"
#include "invforge/transvect.hpp"

#endif  // INVFORGE_INVFORGE_HPP_
