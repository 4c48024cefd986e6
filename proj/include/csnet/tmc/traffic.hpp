#pragma once

#include "csnet/core/types.hpp"

#include <cstdint>

namespace csnet {

/// Flow-by-time traffic matrix with its observation mask (1 = measured) and an
/// optional link-by-flow routing matrix.
struct TrafficSeries {
    Matrix X;
    Matrix mask;
    Matrix routing;
    Index rank_input = 8;

    Index flows() const { return X.rows(); }
    Index times() const { return X.cols(); }
    /// Direct measurements D * M.
    Matrix observed() const { return X.cwiseProduct(mask); }
};

/// Planted traffic matrix X = L0 R0^T + noise, clipped at zero. The first
/// temporal factor is a diurnal sinusoid with the given period; the others mix
/// harmonics of it with smoothed random walks. `noise` is the noise standard
/// deviation relative to the mean of the noiseless matrix. The mask starts full.
TrafficSeries synth_tm(Index n_flows, Index m_times, Index rank, double diurnal_period, double noise,
                       std::uint64_t seed);

enum class MaskPattern {
    /// Independent entries.
    Random,
    /// Whole flows missing for the entire horizon.
    RowOutage,
    /// Whole time slots missing for every flow.
    ColumnOutage,
};

MaskPattern parse_mask_pattern(const std::string& name);
const char* to_string(MaskPattern pattern) noexcept;

/// 0/1 mask with round(missing_fraction * count) missing entries, rows or
/// columns, drawn uniformly.
Matrix make_mask(Index n_flows, Index m_times, MaskPattern pattern, double missing_fraction, std::uint64_t seed);

/// m x m matrix with 1 on the diagonal and -1 on the superdiagonal.
Matrix temporal_T(Index m);

/// L = U_r S_r^{1/2}, R = V_r S_r^{1/2} from the leading r singular triplets.
void svd_factors(const Matrix& x, Index r, Matrix& left, Matrix& right);

/// sum |est - truth| / sum |truth| over entries where missing_mask is 1.
double nmae(const Matrix& truth, const Matrix& estimate, const Matrix& missing_mask);

}  // namespace csnet
