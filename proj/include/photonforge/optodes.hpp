#pragma once

#include <string>
#include <vector>

#include "photonforge/geometry.hpp"
#include "photonforge/head_model.hpp"

namespace photonforge {

/// Angular position on a sphere, degrees.
///
/// Canonical frame: elevation is measured from the plane z = center.z
/// (+90 maps to the point directly above the center), azimuth rotates about
/// the +z axis with azimuth 0 on the -y meridian and positive azimuth toward
/// +x. Azimuth -180 and +180 address the same meridian; both are accepted
/// because the position sweeps deliberately cover the closed range.
struct AngularPlacement {
  double elevation_deg = 0.0;
  double azimuth_deg = 0.0;
};

void validate_placement(const AngularPlacement& a);

/// Point at `radius` from `center` in the canonical angular frame.
Vec3 place_on_sphere(const Vec3& center, double radius, const AngularPlacement& a);

/// Unit launch direction for a pencil source: normalized (center - position).
Vec3 pencil_direction(const Vec3& center, const Vec3& position);

/// Cylinder lift of a 2-D strip coordinate: radius = C/(2*pi), theta = l/r,
/// depth = r*(1 - cos(theta)).
struct CylinderProjection {
  double radius = 0.0;
  double theta = 0.0;
  double depth = 0.0;
};

CylinderProjection cylinder_project(double circumference, double arc_length);

/// Pencil-beam source on (or just outside) the scalp sphere.
struct SourceDef {
  Vec3 position;
  Vec3 direction;  // unit, points inward
  std::string kind = "pencil";
};

/// Disk detector; a photon is detected when its exit point lies within
/// `radius` of `position`.
struct DetectorDef {
  Vec3 position;
  double radius = 1.5;
};

/// Ordered optode lists; indices are stable identifiers.
struct OptodeArray {
  std::vector<SourceDef> sources;
  std::vector<DetectorDef> detectors;
};

enum class OptodeClass { source, detector };

/// One fixture record: where optode `index` of `cls` sits, in the canonical
/// angular frame at `radius_mm` from the head center.
struct OptodeFixtureRecord {
  int index = 0;
  OptodeClass cls = OptodeClass::source;
  double elevation_deg = 0.0;
  double azimuth_deg = 0.0;
  double radius_mm = 0.0;
};

/// Versioned optode grid fixture.
///
/// The 2x16 grid is only partially published: six rows per optode class. The
/// published rows are stored with angles fitted to the reference coordinates;
/// the remaining rows continue the evident pattern (detector rows at +/-6 deg
/// elevation, source rows at 0 and 11 deg with a one-column stagger, azimuth
/// columns alternating 11 and 12 deg apart). Best-effort: the unpublished
/// rows are an inference, which is why the fixture is versioned.
struct OptodeFixture {
  std::string name;
  int version = 1;
  std::vector<OptodeFixtureRecord> records;

  std::vector<OptodeFixtureRecord> sources() const;
  std::vector<OptodeFixtureRecord> detectors() const;
};

/// The builtin fixture (name "optode_grid_v1"): 32 sources + 32 detectors.
const OptodeFixture& builtin_optode_fixture();

std::string write_optode_fixture(const OptodeFixture& fixture);
OptodeFixture parse_optode_fixture(const std::string& text);

/// Scalp radius of the reference head the fixture was fitted against.
constexpr double kReferenceScalpRadius = 92.3;

/// Places the fixture on a model: positions scale with the model's scalp
/// radius relative to the reference head, keeping optodes just outside the
/// scalp. Detector disk radius is a config parameter, not a constant.
OptodeArray place_fixture(const OptodeFixture& fixture, const LayeredHeadModel& model,
                          double detector_radius = 1.5);

/// The builtin 32+32 grid placed on `model`.
OptodeArray default_grid(const LayeredHeadModel& model, double detector_radius = 1.5);

}  // namespace photonforge
