// Copyright 2026 The quatsim Authors
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

#include "quatsim/quaternion.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

#include "quatsim/cmatrix.hpp"
#include "quatsim/error.hpp"

namespace quatsim {

double abs(const Quaternion &h) {
    // hypot-style scaling keeps tiny and huge components from under/overflowing.
    double scale = std::max({std::abs(h.h0), std::abs(h.h1), std::abs(h.h2), std::abs(h.h3)});
    if (scale == 0.0) {
        return 0.0;
    }
    return scale * std::sqrt(norm_squared(h / scale));
}

Quaternion inverse(const Quaternion &h) {
    double n2 = norm_squared(h);
    if (n2 == 0.0) {
        throw DomainError("inverse of the zero quaternion");
    }
    return conj(h) / n2;
}

double max_component_diff(const Quaternion &a, const Quaternion &b) {
    return std::max({std::abs(a.h0 - b.h0), std::abs(a.h1 - b.h1), std::abs(a.h2 - b.h2),
                     std::abs(a.h3 - b.h3)});
}

CMatrix sp1_to_su2(const Quaternion &phi, double tolerance) {
    double n = abs(phi);
    if (std::abs(n - 1.0) > tolerance) {
        std::ostringstream msg;
        msg << "sp1_to_su2 requires a unit quaternion, got |phi| = " << n;
        throw DomainError(msg.str());
    }
    auto [g1, g2] = complex_pair(phi);
    CMatrix u(2, 2);
    u(0, 0) = g1;
    u(0, 1) = g2;
    u(1, 0) = -std::conj(g2);
    u(1, 1) = std::conj(g1);
    return u;
}

std::ostream &operator<<(std::ostream &out, const Quaternion &h) {
    return out << "(" << h.h0 << " + " << h.h1 << "i + " << h.h2 << "j + " << h.h3 << "k)";
}

}  // namespace quatsim
