// Copyright 2026 The lovasz-approx Authors
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

#ifndef LOVASZ_LOVASZ_HPP
#define LOVASZ_LOVASZ_HPP

#include <lovasz/approximation.hpp>
#include <lovasz/geometry.hpp>
#include <lovasz/interaction.hpp>
#include <lovasz/linear_solve.hpp>
#include <lovasz/rational.hpp>
#include <lovasz/set_function.hpp>
#include <lovasz/subset.hpp>

#endif  // LOVASZ_LOVASZ_HPP
