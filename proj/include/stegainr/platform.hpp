// Copyright 2026-present the stegainr project
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

namespace stegainr {

/// Keeps large freed buffers in the heap instead of returning them to the
/// kernel. Training reallocates the same activation-sized matrices every
/// epoch; without this the page-fault cost rivals the arithmetic. No effect
/// outside glibc. Call once, early, from executables.
void tune_allocator();

}  // namespace stegainr
