#pragma once

#include <string>
#include <vector>

#include "sct/mesh.hpp"
#include "sct/volume.hpp"

namespace sct {

// Mean of |a-b| over region voxels. Grids must match; region non-empty.
double mae(const Volume3D& a, const Volume3D& b, const Mask3D& region);

// 2|a∩b| / (|a|+|b|); 1 when both masks are empty.
double dice(const Mask3D& a, const Mask3D& b);

// Signed per-voxel difference a-b on the shared grid.
Volume3D error_map(const Volume3D& a, const Volume3D& b);

struct MetricsRow {
  std::string subject;
  double mae_overall_hu = 0.0;
  double mae_bone_hu = 0.0;
  double dice_bone = 0.0;
  double msd_sct_to_ct_mm = 0.0;
  double msd_ct_to_sct_mm = 0.0;
};

struct Report {
  std::vector<MetricsRow> rows;
  MetricsRow mean;  // subject = "mean"
};

// Unweighted per-column means over the rows. Throws DataError when empty.
Report aggregate_report(const std::vector<MetricsRow>& rows);

// CSV columns: subject,mae_overall_hu,mae_bone_hu,dice_bone,
// msd_sct_to_ct_mm,msd_ct_to_sct_mm with a final `mean` row.
std::string report_to_csv(const Report& report);
std::string report_to_json(const Report& report);
std::string metrics_row_to_json(const MetricsRow& row);
MetricsRow metrics_row_from_json(const std::string& text);

struct EvaluateOptions {
  float bone_threshold_hu = 200.0f;
  float tissue_threshold_hu = -200.0f;  // real-CT tissue support for overall MAE
};

// All five per-subject metrics of a synthetic CT against the real CT on a
// shared grid. Bone MAE is taken over the real-CT bone mask; surfaces are
// 200 HU isosurfaces of each volume.
MetricsRow evaluate_synthetic_ct(const Volume3D& real_ct, const Volume3D& synth_ct,
                                 const std::string& subject,
                                 const EvaluateOptions& opts = {});

// Writes one 8-bit PGM per sagittal slice of the signed error map with a
// fixed [-500, +500] HU window mapped to [0, 255]. Returns file count.
int export_error_map_pgm(const Volume3D& error, const std::string& out_dir,
                         float window_lo = -500.0f, float window_hi = 500.0f);

}  // namespace sct
