#pragma once

#include <map>
#include <string>
#include <vector>

#include "dtx/dataspace.hpp"
#include "dtx/errors.hpp"
#include "dtx/expansion.hpp"
#include "dtx/invert.hpp"
#include "dtx/modefield.hpp"
#include "dtx/xray.hpp"

namespace dtx {

inline constexpr const char* format_tag = "dtx-v1";

class ParseError : public Error {
public:
    using Error::Error;
};

// %.17g with "." decimal point regardless of locale.
std::string format_double(double v);

// Tensor input: explicit monomial terms per mode, optionally Zernike-hat coefficients per mode.
struct TensorInput {
    int m = 0;
    std::map<int, PolyZZbar> modes;
    std::map<int, ZernikeExpansion> zernike;

    int max_degree() const;
    bool needs_basis() const { return !zernike.empty(); }
    ModeField to_field(const Basis* basis) const;
};

TensorInput parse_tensor_json(const std::string& text);
std::string tensor_to_json(const ModeField& f);

SinoCoeffs parse_sino_coeffs_json(const std::string& text);
std::string sino_coeffs_to_json(const SinoCoeffs& c);

std::string sino_grid_to_csv(const SinoGrid& s);
// Rebuilds the grid by matching node coordinates against the supported rules.
SinoGrid parse_sino_grid_csv(const std::string& text, double gamma);

std::string range_report_to_json(const RangeReport& r);
std::string itt_to_json(const IttForm& f, const Basis& basis);
std::string kernel_modes_to_json(int m, double gamma, const std::vector<cplx>& z,
                                 const std::vector<KernelModes>& modes, double measured_scale,
                                 double applied_scale, double svd_diff);
std::string svd_table_to_json(const Basis& basis);

}  // namespace dtx
