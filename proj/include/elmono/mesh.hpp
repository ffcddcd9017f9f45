#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace elmono {

using Index = std::int64_t;
using Vec3 = Eigen::Vector3d;

/// Closed axis-aligned box [lo, hi] in meters.
struct Box {
    Vec3 lo = Vec3::Zero();
    Vec3 hi = Vec3::Zero();

    Vec3 center() const { return 0.5 * (lo + hi); }
    Vec3 extent() const { return hi - lo; }
    bool contains(const Vec3& p) const {
        return (p.array() >= lo.array()).all() && (p.array() <= hi.array()).all();
    }
    bool intersects(const Box& other) const {
        return (lo.array() <= other.hi.array()).all() && (other.lo.array() <= hi.array()).all();
    }
};

/// Cube faces in patch order.
enum class CubeFace : std::uint8_t { PosX = 0, NegX, PosY, NegY, PosZ, NegZ };

inline constexpr std::array<CubeFace, 6> kAllFaces = {CubeFace::PosX, CubeFace::NegX, CubeFace::PosY,
                                                      CubeFace::NegY, CubeFace::PosZ, CubeFace::NegZ};

const char* to_string(CubeFace face);
CubeFace cube_face_from_string(const std::string& name);

/// Axis (0..2) normal to the face.
inline int face_axis(CubeFace f) { return static_cast<int>(f) / 2; }
/// +1 for the max face of its axis, -1 for the min face.
inline int face_sign(CubeFace f) { return static_cast<int>(f) % 2 == 0 ? 1 : -1; }

/// Outward normal and in-plane tangents with t1 x t2 = normal.
struct TangentFrame {
    Vec3 normal;
    Vec3 t1;
    Vec3 t2;
};

TangentFrame tangent_frame(CubeFace face);

/// One element face lying on the cube surface. Local face ids follow
/// 0:-x 1:+x 2:-y 3:+y 4:-z 5:+z.
struct BoundaryFace {
    Index element;
    int local_face;
    CubeFace face;
    /// In-plane element indices along the two tangential axes (ascending axis order).
    int ia;
    int ib;
};

/// Uniform hexahedral voxel mesh of an axis-aligned box. Nodes and elements are
/// numbered lexicographically with x fastest, then y, then z.
class Mesh {
public:
    Mesh(const Box& bounds, int n);

    const Box& bounds() const { return bounds_; }
    int n() const { return n_; }
    Vec3 h() const { return h_; }
    double element_volume() const { return h_.prod(); }

    Index num_nodes() const { return static_cast<Index>(n_ + 1) * (n_ + 1) * (n_ + 1); }
    Index num_elements() const { return static_cast<Index>(n_) * n_ * n_; }
    Index num_dofs() const { return 3 * num_nodes(); }

    Index node_id(int i, int j, int k) const { return i + (n_ + 1) * (j + static_cast<Index>(n_ + 1) * k); }
    Index element_id(int i, int j, int k) const { return i + n_ * (j + static_cast<Index>(n_) * k); }
    std::array<int, 3> element_ijk(Index e) const;
    std::array<int, 3> node_ijk(Index v) const;

    Vec3 node_position(Index v) const;
    Vec3 element_centroid(Index e) const;

    /// Node ids of element e in the reference order
    /// (x-, y-, z-) (x+, y-, z-) (x-, y+, z-) (x+, y+, z-) then the same at z+.
    std::array<Index, 8> element_nodes(Index e) const;

    const std::vector<BoundaryFace>& boundary_faces() const { return boundary_faces_; }

    /// Node ids lying on a cube face.
    std::vector<Index> face_nodes(CubeFace face) const;

private:
    Box bounds_;
    int n_;
    Vec3 h_;
    std::vector<BoundaryFace> boundary_faces_;
};

Mesh build_cube_mesh(const Box& bounds, int n);

struct Patch {
    CubeFace face;
    /// Indices into Mesh::boundary_faces().
    std::vector<std::size_t> faces;
    double area = 0.0;
};

/// Partition of each cube face into m x m patches. Ordering: faces in
/// kAllFaces order; within a face, patch (pa, pb) has local index pa + m*pb
/// where pa runs along the lower tangential axis.
struct PatchSet {
    int patches_per_side = 0;
    std::vector<Patch> patches;

    std::size_t size() const { return patches.size(); }
};

PatchSet build_patches(const Mesh& mesh, int m);

using ElementSet = std::vector<Index>;

/// Elements whose centroid lies in the closed box, ascending.
ElementSet voxel_box_elements(const Mesh& mesh, const Box& box);

}  // namespace elmono
