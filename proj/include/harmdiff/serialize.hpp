#pragma once

#include <stdexcept>
#include <string>

#include "harmdiff/exhaustion.hpp"
#include "harmdiff/gridded_form.hpp"
#include "harmdiff/laurent.hpp"

namespace harmdiff {

/// Malformed or out-of-contract input documents.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Series document: {"n_min": int, "n_max": int, "coeffs": [[re, im], ...]}.
/// Round-trips are bit-exact for finite doubles.
std::string series_to_json(const LaurentSeries& series);
LaurentSeries series_from_json(const std::string& text);

/// Grid document: descriptors plus row-major component matrices.
std::string gridded_form_to_json(const GriddedForm& form);
GriddedForm gridded_form_from_json(const std::string& text);

std::string report_to_json(const InequalityReport& report);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace harmdiff
