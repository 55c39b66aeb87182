#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "synthcal/errors.hpp"

namespace synthcal {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Mat2 = Eigen::Matrix2d;
using Mat3 = Eigen::Matrix3d;
using MatX = Eigen::MatrixXd;
using VecX = Eigen::VectorXd;

/// Pinhole intrinsics with zero skew.
struct Intrinsics {
    double fx = 0.0;
    double fy = 0.0;
    double cx = 0.0;
    double cy = 0.0;
    int width = 0;
    int height = 0;

    Mat3 matrix() const {
        Mat3 k;
        k << fx, 0.0, cx, 0.0, fy, cy, 0.0, 0.0, 1.0;
        return k;
    }

    bool valid() const {
        return fx > 0.0 && fy > 0.0 && cx > 0.0 && cx < width && cy > 0.0 && cy < height;
    }
};

/// Brown-Conrady coefficients, rational radial part (k1..k6) plus tangential
/// (p1, p2). Serialized order is [k1, k2, p1, p2, k3, k4, k5, k6].
struct Distortion {
    double k1 = 0.0, k2 = 0.0, k3 = 0.0, k4 = 0.0, k5 = 0.0, k6 = 0.0;
    double p1 = 0.0, p2 = 0.0;

    std::array<double, 8> coeffs() const { return {k1, k2, p1, p2, k3, k4, k5, k6}; }

    static Distortion from_coeffs(const std::array<double, 8>& c) {
        Distortion d;
        d.k1 = c[0];
        d.k2 = c[1];
        d.p1 = c[2];
        d.p2 = c[3];
        d.k3 = c[4];
        d.k4 = c[5];
        d.k5 = c[6];
        d.k6 = c[7];
        return d;
    }

    bool is_zero() const {
        for (double c : coeffs())
            if (c != 0.0) return false;
        return true;
    }
};

/// Rigid transform. Context (board->camera, world->camera) is documented at
/// each use site.
struct Pose {
    Mat3 rotation = Mat3::Identity();
    Vec3 translation = Vec3::Zero();

    Vec3 apply(const Vec3& x) const { return rotation * x + translation; }

    Pose inverse() const { return {rotation.transpose(), -(rotation.transpose() * translation)}; }

    /// this ∘ other: first other, then this.
    Pose compose(const Pose& other) const {
        return {rotation * other.rotation, rotation * other.translation + translation};
    }

    bool is_rigid(double tol = 1e-9) const {
        const Mat3 gram = rotation.transpose() * rotation;
        return (gram - Mat3::Identity()).cwiseAbs().maxCoeff() <= tol &&
               std::abs(rotation.determinant() - 1.0) <= tol;
    }
};

struct CameraModel {
    Intrinsics intrinsics;
    Distortion distortion;
};

inline Mat3 skew(const Vec3& v) {
    Mat3 m;
    m << 0.0, -v.z(), v.y(), v.z(), 0.0, -v.x(), -v.y(), v.x(), 0.0;
    return m;
}

/// Axis-angle (radians) to rotation matrix. Zero vector gives identity.
inline Mat3 rodrigues_to_matrix(const Vec3& rvec) {
    const double theta = rvec.norm();
    if (theta < 1e-14) {
        // second-order expansion keeps the round trip exact near zero
        const Mat3 k = skew(rvec);
        return Mat3::Identity() + k + 0.5 * k * k;
    }
    const Vec3 axis = rvec / theta;
    const Mat3 k = skew(axis);
    return Mat3::Identity() + std::sin(theta) * k + (1.0 - std::cos(theta)) * k * k;
}

/// Rotation matrix to axis-angle with angle in [0, pi]. Rejects matrices that
/// are not orthonormal within 1e-6.
inline Vec3 matrix_to_rodrigues(const Mat3& r) {
    if ((r.transpose() * r - Mat3::Identity()).cwiseAbs().maxCoeff() > 1e-6 ||
        r.determinant() < 0.0)
        throw NonOrthonormal("matrix_to_rodrigues: input is not a rotation");

    const double cos_theta = std::clamp((r.trace() - 1.0) * 0.5, -1.0, 1.0);
    const double theta = std::acos(cos_theta);
    const Vec3 antisym(r(2, 1) - r(1, 2), r(0, 2) - r(2, 0), r(1, 0) - r(0, 1));

    if (theta < 1e-7) {
        // R ≈ I + skew(rvec); antisym/2 is exact to O(theta^3)
        return 0.5 * antisym;
    }
    if (theta > std::numbers::pi - 1e-6) {
        // near pi the antisymmetric part vanishes; use the symmetric part
        // B = (R + I)/2 = I + (1-cos) aa^T ... diagonal gives |axis| components
        const Mat3 b = 0.5 * (r + Mat3::Identity());
        Vec3 axis(std::sqrt(std::max(0.0, b(0, 0))), std::sqrt(std::max(0.0, b(1, 1))),
                  std::sqrt(std::max(0.0, b(2, 2))));
        // fix signs from the off-diagonal terms, anchored on the largest entry
        int imax = 0;
        axis.cwiseAbs().maxCoeff(&imax);
        for (int i = 0; i < 3; ++i) {
            if (i != imax && b(imax, i) < 0.0) axis(i) = -axis(i);
        }
        axis.normalize();
        // disambiguate the remaining overall sign with the antisymmetric residue
        if (antisym.dot(axis) < 0.0) axis = -axis;
        return theta * axis;
    }
    return (theta / (2.0 * std::sin(theta))) * antisym;
}

/// Right Jacobian of SO(3): exp((r + d)^) ≈ exp(r^) exp((Jr(r) d)^).
/// Used by the analytic reprojection Jacobians.
inline Mat3 so3_right_jacobian(const Vec3& rvec) {
    const double theta = rvec.norm();
    const Mat3 k = skew(rvec);
    double c1, c2;  // coefficients of k and k^2
    if (theta < 1e-5) {
        const double t2 = theta * theta;
        c1 = 0.5 - t2 / 24.0;
        c2 = 1.0 / 6.0 - t2 / 120.0;
    } else {
        const double t2 = theta * theta;
        c1 = (1.0 - std::cos(theta)) / t2;
        c2 = (theta - std::sin(theta)) / (t2 * theta);
    }
    return Mat3::Identity() - c1 * k + c2 * k * k;
}

/// d(R(rvec) x)/d(rvec), 3x3.
inline Mat3 rotated_point_jacobian(const Vec3& rvec, const Vec3& x) {
    return -rodrigues_to_matrix(rvec) * skew(x) * so3_right_jacobian(rvec);
}

/// Forward Brown-Conrady map on ideal normalized coordinates.
inline Vec2 apply_distortion(const Distortion& d, const Vec2& p) {
    const double x = p.x(), y = p.y();
    const double r2 = x * x + y * y;
    const double num = 1.0 + r2 * (d.k1 + r2 * (d.k2 + r2 * d.k3));
    const double den = 1.0 + r2 * (d.k4 + r2 * (d.k5 + r2 * d.k6));
    const double s = num / den;
    return {x * s + 2.0 * d.p1 * x * y + d.p2 * (r2 + 2.0 * x * x),
            y * s + d.p1 * (r2 + 2.0 * y * y) + 2.0 * d.p2 * x * y};
}

/// 2x2 Jacobian of apply_distortion at p.
inline Mat2 distortion_jacobian(const Distortion& d, const Vec2& p) {
    const double x = p.x(), y = p.y();
    const double r2 = x * x + y * y;
    const double num = 1.0 + r2 * (d.k1 + r2 * (d.k2 + r2 * d.k3));
    const double den = 1.0 + r2 * (d.k4 + r2 * (d.k5 + r2 * d.k6));
    const double dnum = d.k1 + r2 * (2.0 * d.k2 + 3.0 * d.k3 * r2);
    const double dden = d.k4 + r2 * (2.0 * d.k5 + 3.0 * d.k6 * r2);
    const double s = num / den;
    const double ds = (dnum * den - num * dden) / (den * den);  // ds/d(r2)
    Mat2 j;
    j(0, 0) = s + 2.0 * x * x * ds + 2.0 * d.p1 * y + 6.0 * d.p2 * x;
    j(0, 1) = 2.0 * x * y * ds + 2.0 * d.p1 * x + 2.0 * d.p2 * y;
    j(1, 0) = j(0, 1);
    j(1, 1) = s + 2.0 * y * y * ds + 6.0 * d.p1 * y + 2.0 * d.p2 * x;
    return j;
}

/// Inverts apply_distortion by damped Newton. Starts from the distorted point,
/// converges at 1e-12, and reports failure instead of clamping: divergence
/// means the point lies outside the monotone region of the profile.
inline Vec2 undistort_point(const Distortion& d, const Vec2& pd, int max_iter = 50) {
    if (d.is_zero()) return pd;
    Vec2 p = pd;
    Vec2 residual = apply_distortion(d, p) - pd;
    for (int iter = 0; iter < max_iter; ++iter) {
        if (residual.norm() < 1e-12) return p;
        const Mat2 j = distortion_jacobian(d, p);
        const double det = j.determinant();
        if (!std::isfinite(det) || std::abs(det) < 1e-15)
            throw NonConvergent("undistort_point: singular distortion Jacobian");
        Vec2 step = j.inverse() * residual;
        // damp until the residual actually decreases
        double scale = 1.0;
        for (int k = 0; k < 12; ++k) {
            const Vec2 cand = p - scale * step;
            const Vec2 r_cand = apply_distortion(d, cand) - pd;
            if (r_cand.norm() < residual.norm()) {
                p = cand;
                residual = r_cand;
                break;
            }
            scale *= 0.5;
            if (k == 11) throw NonConvergent("undistort_point: no descent step");
        }
    }
    if (residual.norm() < 1e-12) return p;
    throw NonConvergent("undistort_point: max iterations exceeded");
}

/// Full projection: board point -> pixel through pose, perspective divide,
/// distortion and intrinsic scaling. Throws BehindCamera for z <= 0.
inline Vec2 project(const CameraModel& cam, const Pose& pose, const Vec3& point) {
    const Vec3 pc = pose.apply(point);
    if (pc.z() <= 0.0) throw BehindCamera("project: point has non-positive depth");
    const Vec2 ideal(pc.x() / pc.z(), pc.y() / pc.z());
    const Vec2 dist = apply_distortion(cam.distortion, ideal);
    return {cam.intrinsics.fx * dist.x() + cam.intrinsics.cx,
            cam.intrinsics.fy * dist.y() + cam.intrinsics.cy};
}

/// Unit ray in the camera frame through a pixel. Propagates NonConvergent
/// when the pixel cannot be undistorted.
inline Vec3 pixel_ray(const CameraModel& cam, const Vec2& pixel) {
    const Vec2 pd((pixel.x() - cam.intrinsics.cx) / cam.intrinsics.fx,
                  (pixel.y() - cam.intrinsics.cy) / cam.intrinsics.fy);
    const Vec2 ideal = undistort_point(cam.distortion, pd);
    return Vec3(ideal.x(), ideal.y(), 1.0).normalized();
}

/// Intersects a camera-frame ray with the board plane (z = 0 of the board
/// frame) and returns board-plane coordinates in meters.
inline Vec2 intersect_board_plane(const Vec3& origin, const Vec3& direction, const Pose& board_to_camera) {
    const Vec3 normal = board_to_camera.rotation.col(2);  // board z axis in camera frame
    const double denom = normal.dot(direction);
    if (std::abs(denom) < 1e-12) throw ParallelPlane("intersect_board_plane: ray parallel to board");
    const double lambda = normal.dot(board_to_camera.translation - origin) / denom;
    if (lambda <= 0.0) throw BehindCamera("intersect_board_plane: intersection behind ray origin");
    const Vec3 board_point =
        board_to_camera.rotation.transpose() * (origin + lambda * direction - board_to_camera.translation);
    return {board_point.x(), board_point.y()};
}

}  // namespace synthcal
