// Copyright 2026 The eropc Authors
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

#ifndef EROP_EROP_HPP_
#define EROP_EROP_HPP_

#include "erop/ast.hpp"
#include "erop/codegen.hpp"
#include "erop/ir.hpp"
#include "erop/lexer.hpp"
#include "erop/lookup.hpp"
#include "erop/parser.hpp"
#include "erop/sema.hpp"
#include "erop/source.hpp"
#include "erop/symbols.hpp"
#include "erop/translate.hpp"

#endif  // EROP_EROP_HPP_
