// Copyright 2026 The fixgraph Authors
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

#ifndef FIXGRAPH_RATIONAL_HPP_
#define FIXGRAPH_RATIONAL_HPP_

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace fixgraph {

using Rational = boost::rational<std::int64_t>;

// "p/q" in lowest terms, or "p" when q = 1.
std::string to_fraction_string(const Rational& r);

// Six significant digits, trailing zeros trimmed.
std::string to_decimal_string(const Rational& r);

}  // namespace fixgraph

#endif  // FIXGRAPH_RATIONAL_HPP_
