#include "qbp/errors.hpp"

namespace qbp {

const char* errc_name(errc code) noexcept {
    switch (code) {
        case errc::not_hermitian: return "NotHermitian";
        case errc::not_psd: return "NotPSD";
        case errc::not_pd: return "NotPD";
        case errc::not_unitary: return "NotUnitary";
        case errc::dimension_mismatch: return "DimensionMismatch";
        case errc::non_positive_argument: return "NonPositiveArgument";
        case errc::too_large: return "TooLarge";
        case errc::invalid_box: return "InvalidBox";
        case errc::degenerate_normalization: return "DegenerateNormalization";
        case errc::support_violation: return "SupportViolation";
        case errc::singular_transform: return "SingularTransform";
        case errc::no_interior_fixed_point: return "NoInteriorFixedPoint";
        case errc::not_acyclic: return "NotAcyclic";
        case errc::zero_edge_normalizer: return "ZeroEdgeNormalizer";
        case errc::inverse_condition_violated: return "InverseConditionViolated";
        case errc::not_psd_factor: return "NotPSDFactor";
        case errc::not_psd_theta: return "NotPSDTheta";
        case errc::not_square: return "NotSquare";
        case errc::incomplete_kraus: return "IncompleteKraus";
        case errc::invalid_config: return "InvalidConfig";
        case errc::length_mismatch: return "LengthMismatch";
        case errc::zero_probability_event: return "ZeroProbabilityEvent";
        case errc::not_pd_at_t: return "NotPDAtT";
        case errc::bad_dimensions: return "BadDimensions";
        case errc::no_convergence: return "NoConvergence";
        case errc::bad_input: return "BadInput";
    }
    return "UnknownError";
}

} // namespace qbp
