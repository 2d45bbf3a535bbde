// Copyright 2026 The kwitness authors
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

#include <stdexcept>
#include <string>

namespace kwitness {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct ShapeMismatch : Error {
    explicit ShapeMismatch(const std::string& what) : Error(what) {}
};

struct NotHermitian : Error {
    explicit NotHermitian(const std::string& what) : Error(what) {}
};

struct BadRank : Error {
    explicit BadRank(const std::string& what) : Error(what) {}
};

struct BadDimensions : Error {
    explicit BadDimensions(const std::string& what) : Error(what) {}
};

struct BadAlpha : Error {
    explicit BadAlpha(const std::string& what) : Error(what) {}
};

struct NotNormalized : Error {
    explicit NotNormalized(const std::string& what) : Error(what) {}
};

struct BadRange : Error {
    explicit BadRange(const std::string& what) : Error(what) {}
};

struct DegenerateZ : Error {
    explicit DegenerateZ(const std::string& what) : Error(what) {}
};

struct TooLarge : Error {
    explicit TooLarge(const std::string& what) : Error(what) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

struct IoError : Error {
    explicit IoError(const std::string& what) : Error(what) {}
};

}  // namespace kwitness
