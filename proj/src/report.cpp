#include "curvechi/report.hpp"

#include <json.hpp>

#include <sstream>

namespace curvechi {

std::string bf_to_string(const BigFloat& x, int digits) {
    std::ostringstream os;
    os.precision(digits);
    os << x;
    return os.str();
}

bool CheckList::all_pass() const {
    for (const auto& r : rows)
        if (!r.pass) return false;
    return true;
}

void CheckList::check_relative(const std::string& family, const std::string& params,
                               const BigFloat& value, const BigFloat& reference,
                               double rel_tol) {
    BigFloat err = abs(value - reference);
    bool ok = err <= abs(reference) * BigFloat(rel_tol);
    rows.push_back({family, params, bf_to_string(value), bf_to_string(reference),
                    "rel " + std::to_string(rel_tol), ok});
}

void CheckList::check_absolute(const std::string& family, const std::string& params,
                               const BigFloat& value, const BigFloat& reference,
                               double abs_tol) {
    bool ok = abs(value - reference) <= BigFloat(abs_tol);
    rows.push_back({family, params, bf_to_string(value), bf_to_string(reference),
                    "abs " + std::to_string(abs_tol), ok});
}

void CheckList::check_below(const std::string& family, const std::string& params,
                            const BigFloat& value, const BigFloat& bound) {
    bool ok = value < bound;
    rows.push_back({family, params, bf_to_string(value), "", "< " + bf_to_string(bound), ok});
}

void CheckList::check_true(const std::string& family, const std::string& params, bool ok,
                           const std::string& detail) {
    rows.push_back({family, params, detail, "", "", ok});
}

std::string CheckList::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows) {
        nlohmann::json o;
        o["family"] = r.family;
        o["params"] = r.params;
        o["value"] = r.value;
        if (!r.reference.empty()) o["paper_value"] = r.reference;
        o["tolerance"] = r.tolerance;
        o["pass"] = r.pass;
        arr.push_back(o);
    }
    nlohmann::json top;
    top["schema"] = 1;
    top["checks"] = arr;
    return top.dump(2);
}

std::string CheckList::to_text() const {
    std::ostringstream os;
    for (const auto& r : rows) {
        os << (r.pass ? "PASS" : "FAIL") << "  " << r.family;
        if (!r.params.empty()) os << "(" << r.params << ")";
        os << " = " << r.value;
        if (!r.reference.empty()) os << "  expected " << r.reference;
        if (!r.tolerance.empty()) os << "  [" << r.tolerance << "]";
        os << "\n";
    }
    return os.str();
}

} // namespace curvechi
