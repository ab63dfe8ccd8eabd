#pragma once

#include <cstddef>
#include <vector>

namespace midmile {

struct Site;

struct GeoParams {
  double earth_radius_km = 6371.0;
  double road_circuity = 1.3;  // road distance over great-circle, >= 1
};

// Dense symmetric km matrix, zero diagonal, row-major.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t n) : n_(n), d_(n * n, 0.0) {}

  double operator()(std::size_t i, std::size_t j) const { return d_[i * n_ + j]; }
  double& at(std::size_t i, std::size_t j) { return d_[i * n_ + j]; }
  std::size_t size() const { return n_; }

 private:
  std::size_t n_ = 0;
  std::vector<double> d_;
};

// Great-circle distance in km. Throws InputError on out-of-range coordinates.
double haversine_km(double lat_a, double lon_a, double lat_b, double lon_b,
                    double earth_radius_km = 6371.0);

// haversine_km scaled by the road-circuity factor.
double road_km(double lat_a, double lon_a, double lat_b, double lon_b,
               const GeoParams& params);

// matrix[i][j] = road_km(site_i, site_j); coordinate errors carry the site id.
DistanceMatrix build_distance_matrix(const std::vector<Site>& sites,
                                     const GeoParams& params);

}  // namespace midmile
