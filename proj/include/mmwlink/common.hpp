// SPDX-License-Identifier: Apache-2.0
//
// mmwlink - Monte-Carlo link-level simulator for multiuser mmWave MIMO downlinks
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef MMWLINK_COMMON_HPP
#define MMWLINK_COMMON_HPP

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace mmwlink {

inline constexpr const char *artifact_name = "mmwlink";
inline constexpr const char *artifact_version = "0.1.0";

inline constexpr double pi = 3.141592653589793238462643383279502884;
inline constexpr double speed_of_light = 299792458.0; // m/s

/// Invalid or inconsistent configuration (exit code 2 at the CLI).
struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// File or stream problem (exit code 3 at the CLI).
struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Iterative numerics failed to converge (exit code 4 at the CLI).
struct numerical_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Channel matrix is (numerically) rank deficient where full rank is required.
struct singular_channel_error : numerical_error {
    using numerical_error::numerical_error;
};

/// No feasible user subset exists for the selection strategy.
struct selection_infeasible_error : numerical_error {
    using numerical_error::numerical_error;
};

inline double deg2rad(double deg) { return deg * (pi / 180.0); }
inline double rad2deg(double rad) { return rad * (180.0 / pi); }

inline double db_to_linear(double db) { return std::pow(10.0, 0.1 * db); }
inline double linear_to_db(double lin) { return 10.0 * std::log10(lin); }

/// Wrap an angle to [0, 2*pi).
inline double wrap_two_pi(double a)
{
    double w = std::fmod(a, 2.0 * pi);
    if (w < 0.0)
        w += 2.0 * pi;
    return w;
}

/// Clamp an elevation angle to [-pi/2, pi/2].
inline double clamp_elevation(double e) { return std::clamp(e, -0.5 * pi, 0.5 * pi); }

} // namespace mmwlink

#endif
