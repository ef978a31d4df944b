#pragma once

#include <ostream>
#include <string>

#include "cfs/collision.hpp"
#include "cfs/sampling.hpp"
#include "cfs/validation.hpp"

namespace cfs {

// All numeric CSV fields use fixed notation with 6 decimals and '.' as separator,
// independent of the global locale.
std::string format_fixed(double value, int decimals = 6);

/// x,y,z,radius
void write_samples_csv(std::ostream& out, const SampleSet& samples);

/// index,x,y,z,radius,min_clearance,worst_i,worst_j,safe
void write_validation_csv(std::ostream& out, const ValidationReport& report);

/// Unsafe samples only, for scatter plots around the sphere:
/// index,x,y,z,radius,min_clearance,worst_i,worst_j,inside_cfs
void write_unsafe_csv(std::ostream& out, const ValidationReport& report);

/// Summary document; excludes wall-clock timing so reruns are byte-identical.
std::string validation_summary_json(const ValidationReport& report);

std::string estimate_summary_json(const CfsEstimate& est, const ArchitectureParams& arch,
                                  const Vec3& orientation, const EstimateParams& params);

std::string pose_clearance_json(const ArchitectureParams& arch, const Pose& pose, const PoseClearance& pc);

}  // namespace cfs
