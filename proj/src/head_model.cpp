#include "photonforge/head_model.hpp"

#include <cmath>
#include <stdexcept>

namespace photonforge {

namespace {

const std::array<std::string, kTissueTagCount> kTagNames = {"ambient", "scalp", "skull",
                                                            "csf",     "brain", "blood"};

}  // namespace

const std::string& tissue_tag_name(TissueTag tag) {
  return kTagNames.at(static_cast<std::size_t>(tag));
}

TissueTag tissue_tag_from_name(const std::string& name) {
  for (std::size_t i = 0; i < kTagNames.size(); ++i) {
    if (kTagNames[i] == name) return static_cast<TissueTag>(i);
  }
  throw std::invalid_argument("unknown tissue tag: " + name);
}

void validate_medium(const TissueMedium& m) {
  if (!(m.mua >= 0.0)) throw std::invalid_argument("medium: mua must be >= 0");
  if (!(m.mus >= 0.0)) throw std::invalid_argument("medium: mus must be >= 0");
  if (!(m.g >= -1.0 && m.g <= 1.0)) throw std::invalid_argument("medium: g must be in [-1, 1]");
  if (!(m.n >= 1.0)) throw std::invalid_argument("medium: n must be >= 1");
}

MediaTable::MediaTable(double wavelength_nm, std::array<TissueMedium, kTissueTagCount> entries)
    : wavelength_(wavelength_nm), entries_(entries) {
  for (const auto& m : entries_) validate_medium(m);
  const TissueMedium& ambient = entries_[0];
  if (ambient.mua != 0.0 || ambient.mus != 0.0 || ambient.n != 1.0) {
    throw std::invalid_argument("media: ambient must have mua=0, mus=0, n=1");
  }
}

MediaTable builtin_media(double wavelength_nm) {
  // Ambient is vacuum-like: no interaction, immediate escape.
  const TissueMedium ambient{0.0, 0.0, 1.0, 1.0};
  if (wavelength_nm == 830.0) {
    return MediaTable(830.0, {ambient,
                              {0.0191, 0.66, 0.9, 1.4},     // scalp
                              {0.0136, 0.86, 0.9, 1.4},     // skull
                              {0.0260, 0.01, 0.9, 1.4},     // csf
                              {0.0186, 1.11, 0.9, 1.4},     // brain
                              {0.46, 75.06, 0.9835, 1.33}}  // blood
    );
  }
  if (wavelength_nm == 690.0) {
    return MediaTable(690.0, {ambient,
                              {0.0159, 0.80, 0.9, 1.4},     // scalp
                              {0.0101, 1.00, 0.9, 1.4},     // skull
                              {0.0004, 0.01, 0.9, 1.4},     // csf
                              {0.0178, 1.25, 0.9, 1.4},     // brain
                              {0.13, 86.35, 0.9835, 1.33}}  // blood
    );
  }
  throw std::out_of_range("builtin_media: no table for wavelength " +
                          std::to_string(wavelength_nm) + " nm (supported: 690, 830)");
}

LayeredHeadModel::LayeredHeadModel(Vec3 center, double scalp_radius, double scalp_thickness,
                                   double skull_thickness, double csf_thickness,
                                   std::vector<SphereInclusion> inclusions)
    : center_(center),
      scalp_radius_(scalp_radius),
      scalp_thickness_(scalp_thickness),
      skull_thickness_(skull_thickness),
      csf_thickness_(csf_thickness),
      inclusions_(std::move(inclusions)) {
  if (!(scalp_radius_ > 0.0)) throw std::invalid_argument("head model: scalp_radius must be > 0");
  if (scalp_thickness_ < 0.0 || skull_thickness_ < 0.0 || csf_thickness_ < 0.0) {
    throw std::invalid_argument("head model: layer thicknesses must be >= 0");
  }
  const double inner = scalp_radius_ - scalp_thickness_ - skull_thickness_ - csf_thickness_;
  if (!(inner > 0.0) && (scalp_thickness_ + skull_thickness_ + csf_thickness_) > 0.0) {
    throw std::invalid_argument("head model: layer thicknesses exceed the scalp radius");
  }
  const double brain_radius = layer_radii(*this).brain;
  for (const auto& inc : inclusions_) {
    if (!(inc.radius > 0.0)) throw std::invalid_argument("inclusion: radius must be > 0");
    const double dist = norm(inc.center - center_);
    if (dist + inc.radius > brain_radius) {
      throw std::invalid_argument("inclusion: sphere must lie entirely within the brain");
    }
  }
}

LayerRadii layer_radii(const LayeredHeadModel& model) {
  LayerRadii r;
  r.scalp = model.scalp_radius();
  r.skull_outer = r.scalp - model.scalp_thickness();
  r.csf_outer = r.skull_outer - model.skull_thickness();
  r.brain = r.csf_outer - model.csf_thickness();
  return r;
}

TissueTag medium_at(const LayeredHeadModel& model, const Vec3& p) {
  const double dist = norm(p - model.center());
  const LayerRadii radii = layer_radii(model);
  if (dist <= radii.brain) {
    // Inclusions override the brain label; smallest containing sphere wins,
    // the later-listed among equal radii.
    const SphereInclusion* hit = nullptr;
    for (const auto& inc : model.inclusions()) {
      if (norm(p - inc.center) <= inc.radius) {
        if (hit == nullptr || inc.radius <= hit->radius) hit = &inc;
      }
    }
    return hit != nullptr ? hit->medium_tag : TissueTag::brain;
  }
  if (dist <= radii.csf_outer) return TissueTag::csf;
  if (dist <= radii.skull_outer) return TissueTag::skull;
  if (dist <= radii.scalp) return TissueTag::scalp;
  return TissueTag::ambient;
}

LabelGrid voxelize(const LayeredHeadModel& model, double voxel_size, std::size_t voxel_cap) {
  if (!(voxel_size > 0.0)) throw std::invalid_argument("voxelize: voxel_size must be > 0");
  const double radius = model.scalp_radius();

  LabelGrid grid;
  grid.voxel_size = voxel_size;
  if (voxel_size >= 2.0 * radius) {
    grid.dims = {1, 1, 1};
    grid.origin = model.center() - Vec3{voxel_size / 2, voxel_size / 2, voxel_size / 2};
  } else {
    const int half = static_cast<int>(std::ceil(radius / voxel_size));
    grid.dims = {2 * half, 2 * half, 2 * half};
    const double extent = half * voxel_size;
    grid.origin = model.center() - Vec3{extent, extent, extent};
  }

  const std::size_t count = grid.voxel_count();
  if (count > voxel_cap) {
    throw std::length_error("voxelize: grid of " + std::to_string(count) +
                            " voxels exceeds the configured cap");
  }
  grid.labels.resize(count);

  for (int iz = 0; iz < grid.dims[2]; ++iz) {
    for (int iy = 0; iy < grid.dims[1]; ++iy) {
      for (int ix = 0; ix < grid.dims[0]; ++ix) {
        grid.labels[grid.index(ix, iy, iz)] =
            static_cast<uint8_t>(medium_at(model, grid.voxel_center(ix, iy, iz)));
      }
    }
  }
  return grid;
}

}  // namespace photonforge
