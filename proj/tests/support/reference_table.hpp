#pragma once

#include <array>

namespace testsupport {

/// Published risk-weight table at stress factor 0.9: 19 NSR rows
/// (0.2..2.0 step 0.1) by 7 dispersion columns (10%..40% step 5%),
/// printed at two decimals.
inline constexpr std::array<double, 19> kTableNsrAxis = {
    0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0, 1.1, 1.2, 1.3, 1.4, 1.5, 1.6, 1.7, 1.8, 1.9, 2.0};

inline constexpr std::array<double, 7> kTableSdAxis = {0.10, 0.15, 0.20, 0.25, 0.30, 0.35, 0.40};

inline constexpr double kTableValues[19][7] = {
    {6.30, 3.96, 3.24, 2.90, 2.71, 2.58, 2.49}, // NSR 0.2
    {6.30, 3.96, 3.24, 2.90, 2.71, 2.58, 2.49}, // NSR 0.3
    {6.30, 3.96, 3.24, 2.90, 2.71, 2.58, 2.49}, // NSR 0.4
    {6.30, 3.96, 3.24, 2.90, 2.70, 2.55, 2.44}, // NSR 0.5
    {6.30, 3.96, 3.22, 2.84, 2.58, 2.38, 2.23}, // NSR 0.6
    {6.29, 3.85, 2.99, 2.53, 2.25, 2.05, 1.90}, // NSR 0.7
    {5.64, 3.16, 2.38, 2.01, 1.79, 1.65, 1.55}, // NSR 0.8
    {3.15, 1.98, 1.62, 1.45, 1.35, 1.29, 1.25}, // NSR 0.9
    {1.00, 1.00, 1.00, 1.00, 1.00, 1.00, 1.00}, // NSR 1.0
    {0.22, 0.45, 0.59, 0.68, 0.74, 0.78, 0.81}, // NSR 1.1
    {0.04, 0.19, 0.34, 0.46, 0.55, 0.61, 0.66}, // NSR 1.2
    {0.01, 0.08, 0.20, 0.32, 0.41, 0.49, 0.55}, // NSR 1.3
    {0.00, 0.03, 0.12, 0.22, 0.32, 0.40, 0.46}, // NSR 1.4
    {0.00, 0.02, 0.07, 0.16, 0.25, 0.33, 0.40}, // NSR 1.5
    {0.00, 0.01, 0.05, 0.12, 0.20, 0.27, 0.34}, // NSR 1.6
    {0.00, 0.00, 0.03, 0.09, 0.16, 0.23, 0.30}, // NSR 1.7
    {0.00, 0.00, 0.02, 0.07, 0.13, 0.20, 0.26}, // NSR 1.8
    {0.00, 0.00, 0.01, 0.05, 0.11, 0.17, 0.23}, // NSR 1.9
    {0.00, 0.00, 0.01, 0.04, 0.09, 0.15, 0.21}, // NSR 2.0
};

} // namespace testsupport
