#pragma once

#include <cmath>

#include "synthcal/geometry.hpp"

namespace synthcal {

/// High-resolution rectilinear camera: focal (3000, 3000), principal point
/// (2048, 1536), distortion [0.05, 0.02, 0.001, 0, 0, 0, 0, 0].
inline CameraModel rectilinear_preset() {
    CameraModel cam;
    cam.intrinsics = {3000.0, 3000.0, 2048.0, 1536.0, 4096, 3072};
    cam.distortion = Distortion::from_coeffs({0.05, 0.02, 0.001, 0.0, 0.0, 0.0, 0.0, 0.0});
    return cam;
}

/// Low-resolution wide-angle camera: focal (600, 450), principal point
/// (320, 240), distortion [0.5, 0.1, 0.03, 0, 0, 0, 0, 0].
inline CameraModel wide_angle_preset() {
    CameraModel cam;
    cam.intrinsics = {600.0, 450.0, 320.0, 240.0, 640, 480};
    cam.distortion = Distortion::from_coeffs({0.5, 0.1, 0.03, 0.0, 0.0, 0.0, 0.0, 0.0});
    return cam;
}

/// Proportionally rescales resolution and intrinsics (desk-scale override).
inline CameraModel scale_camera(CameraModel cam, double scale) {
    cam.intrinsics.fx *= scale;
    cam.intrinsics.fy *= scale;
    cam.intrinsics.cx *= scale;
    cam.intrinsics.cy *= scale;
    cam.intrinsics.width = static_cast<int>(std::lround(cam.intrinsics.width * scale));
    cam.intrinsics.height = static_cast<int>(std::lround(cam.intrinsics.height * scale));
    return cam;
}

}  // namespace synthcal
