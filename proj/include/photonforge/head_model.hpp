#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "photonforge/geometry.hpp"

namespace photonforge {

/// Tissue labels. Stored as one byte in voxel grids; ambient is always 0.
enum class TissueTag : uint8_t {
  ambient = 0,
  scalp = 1,
  skull = 2,
  csf = 3,
  brain = 4,
  blood = 5,
};

constexpr int kTissueTagCount = 6;

const std::string& tissue_tag_name(TissueTag tag);
TissueTag tissue_tag_from_name(const std::string& name);

/// Optical constants of one tissue at one wavelength.
/// mua, mus in mm^-1; g dimensionless in [-1, 1]; n >= 1.
struct TissueMedium {
  double mua = 0.0;
  double mus = 0.0;
  double g = 1.0;
  double n = 1.0;

  bool operator==(const TissueMedium&) const = default;
};

/// Validates the TissueMedium invariants; throws std::invalid_argument.
void validate_medium(const TissueMedium& medium);

/// One entry per tissue tag at a single wavelength.
class MediaTable {
 public:
  MediaTable(double wavelength_nm, std::array<TissueMedium, kTissueTagCount> entries);

  double wavelength() const { return wavelength_; }
  const TissueMedium& at(TissueTag tag) const { return entries_[static_cast<int>(tag)]; }
  const std::array<TissueMedium, kTissueTagCount>& entries() const { return entries_; }

  bool operator==(const MediaTable&) const = default;

 private:
  double wavelength_;
  std::array<TissueMedium, kTissueTagCount> entries_;
};

/// Published tissue constants; wavelength must be 690 or 830 nm.
MediaTable builtin_media(double wavelength_nm);

/// Sphere embedded in the brain, typically with blood optics.
struct SphereInclusion {
  Vec3 center;
  double radius = 0.0;
  TissueTag medium_tag = TissueTag::blood;
};

/// Radii of the four concentric layers, outermost first.
struct LayerRadii {
  double scalp = 0.0;
  double skull_outer = 0.0;
  double csf_outer = 0.0;
  double brain = 0.0;
};

/// Four concentric spheres (scalp, skull, CSF, brain) plus inclusion spheres.
///
/// Immutable after construction; the constructor enforces that the layer
/// thicknesses fit inside the scalp radius and that every inclusion lies
/// entirely inside the brain sphere.
class LayeredHeadModel {
 public:
  LayeredHeadModel(Vec3 center, double scalp_radius, double scalp_thickness,
                   double skull_thickness, double csf_thickness,
                   std::vector<SphereInclusion> inclusions = {});

  const Vec3& center() const { return center_; }
  double scalp_radius() const { return scalp_radius_; }
  double scalp_thickness() const { return scalp_thickness_; }
  double skull_thickness() const { return skull_thickness_; }
  double csf_thickness() const { return csf_thickness_; }
  const std::vector<SphereInclusion>& inclusions() const { return inclusions_; }

 private:
  Vec3 center_;
  double scalp_radius_;
  double scalp_thickness_;
  double skull_thickness_;
  double csf_thickness_;
  std::vector<SphereInclusion> inclusions_;
};

LayerRadii layer_radii(const LayeredHeadModel& model);

/// Tissue at a point. Innermost containing region wins; a point exactly on a
/// sphere surface belongs to the inner region. Overlapping inclusions resolve
/// to the smallest radius (later-listed wins among equals).
TissueTag medium_at(const LayeredHeadModel& model, const Vec3& p);

/// Dense voxel label grid. labels are x-fastest (x + dims[0]*(y + dims[1]*z)).
struct LabelGrid {
  std::array<int, 3> dims{0, 0, 0};
  double voxel_size = 1.0;
  Vec3 origin;
  std::vector<uint8_t> labels;

  std::size_t voxel_count() const {
    return static_cast<std::size_t>(dims[0]) * dims[1] * dims[2];
  }
  std::size_t index(int ix, int iy, int iz) const {
    return static_cast<std::size_t>(ix) +
           static_cast<std::size_t>(dims[0]) *
               (static_cast<std::size_t>(iy) + static_cast<std::size_t>(dims[1]) * iz);
  }
  Vec3 voxel_center(int ix, int iy, int iz) const {
    return origin + Vec3{(ix + 0.5) * voxel_size, (iy + 0.5) * voxel_size,
                         (iz + 0.5) * voxel_size};
  }
};

/// Default cap on voxelization size; 186^3 is ~6.4 M voxels.
constexpr std::size_t kDefaultVoxelCap = 512ull * 1024 * 1024;

/// Voxelizes the model: each voxel is labeled by medium_at(voxel center).
///
/// The grid is anchored so the model center falls on a voxel corner, with
/// ceil(R/voxel_size) voxels on each side per axis; a 92.3 mm scalp at 1 mm
/// therefore produces a 186^3 grid whose origin sits 93 mm below the center
/// on every axis. When a single voxel already covers the whole sphere the
/// grid degenerates to one voxel centered on the model.
LabelGrid voxelize(const LayeredHeadModel& model, double voxel_size,
                   std::size_t voxel_cap = kDefaultVoxelCap);

}  // namespace photonforge
