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

#include "fixgraph/rational.hpp"

#include <iomanip>
#include <sstream>

namespace fixgraph {

std::string to_fraction_string(const Rational& r) {
  std::string out = std::to_string(r.numerator());
  if (r.denominator() != 1) out += "/" + std::to_string(r.denominator());
  return out;
}

std::string to_decimal_string(const Rational& r) {
  std::ostringstream out;
  out << std::setprecision(6) << boost::rational_cast<double>(r);
  return out.str();
}

}  // namespace fixgraph
