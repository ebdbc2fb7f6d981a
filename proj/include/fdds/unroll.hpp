// Copyright 2026 The fdds Authors.
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

#include "fdds/core.hpp"
#include "fdds/tree_arena.hpp"

namespace fdds::unroll {

// Depth-d cuts of the unroll trees, one per cycle node.
Forest unroll_cut(TreeArena& ar, const Component& c, std::uint32_t d);
Forest unroll_cut(TreeArena& ar, const Fdds& a, std::uint32_t d);

// 2 alpha^2 + h.
std::uint64_t sufficient_depth(const Fdds& b);

// Smallest period of the transient trees hanging off the spine of an
// unroll cut.  Throws std::domain_error when no spine can be read.
std::uint64_t min_period(TreeArena& ar, NodeId t);

// Component of cycle length len whose unroll cut contains t.  Throws
// std::domain_error when the period of t does not divide len.
Component reconstruct_component(TreeArena& ar, NodeId t, std::uint64_t len);

NodeId min_unroll_tree(TreeArena& ar, const Component& c, std::uint32_t d);

}  // namespace fdds::unroll
