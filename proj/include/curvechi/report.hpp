#pragma once

#include <string>
#include <vector>

#include "curvechi/bigfloat.hpp"

namespace curvechi {

/// One numeric verification: a family name, its parameters, the computed
/// value, and (optionally) the reference value with its tolerance.
struct CheckRow {
    std::string family;
    std::string params;
    std::string value;       // decimal rendering of the computed value
    std::string reference;   // empty when the check is a pure inequality
    std::string tolerance;   // textual description, e.g. "rel 1e-4" or "< 114"
    bool pass = false;
};

struct CheckList {
    std::vector<CheckRow> rows;

    bool all_pass() const;
    void add(CheckRow row) { rows.push_back(std::move(row)); }

    /// value within relative tolerance of reference
    void check_relative(const std::string& family, const std::string& params,
                        const BigFloat& value, const BigFloat& reference, double rel_tol);
    /// value within absolute tolerance of reference
    void check_absolute(const std::string& family, const std::string& params,
                        const BigFloat& value, const BigFloat& reference, double abs_tol);
    /// value strictly below bound
    void check_below(const std::string& family, const std::string& params,
                     const BigFloat& value, const BigFloat& bound);
    void check_true(const std::string& family, const std::string& params, bool ok,
                    const std::string& detail = "");

    std::string to_json() const; // array of {family, params, value, paper_value?, tolerance, pass}
    std::string to_text() const; // one line per row
};

std::string bf_to_string(const BigFloat& x, int digits = 12);

} // namespace curvechi
