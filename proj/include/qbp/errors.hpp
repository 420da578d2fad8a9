#pragma once

#include <stdexcept>
#include <string>

namespace qbp {

// Machine-parsable error codes. The CLI prints `code: message` on one line
// and exits nonzero, so the codes double as the CLI's error surface.
enum class errc {
    not_hermitian,
    not_psd,
    not_pd,
    not_unitary,
    dimension_mismatch,
    non_positive_argument,
    too_large,
    invalid_box,
    degenerate_normalization,
    support_violation,
    singular_transform,
    no_interior_fixed_point,
    not_acyclic,
    zero_edge_normalizer,
    inverse_condition_violated,
    not_psd_factor,
    not_psd_theta,
    not_square,
    incomplete_kraus,
    invalid_config,
    length_mismatch,
    zero_probability_event,
    not_pd_at_t,
    bad_dimensions,
    no_convergence,
    bad_input,
};

const char* errc_name(errc code) noexcept;

class Error : public std::runtime_error {
  public:
    Error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool ok, errc code, const std::string& what) {
    if (!ok) fail(code, what);
}

} // namespace qbp
