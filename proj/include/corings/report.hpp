#pragma once

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "corings/linmap.hpp"

namespace corings {

struct Check {
    std::string name;
    bool ok = false;
    std::string witness;  // empty unless the check failed
};

/// Per-law verification outcome; a failed law carries a witness basis index
/// with both evaluated sides.
struct Report {
    std::string title;
    std::vector<Check> checks;
    std::map<std::string, long> dims;
    bool not_applicable = false;
    std::string hypothesis_failed;  // set when a pipeline hypothesis is not met

    bool pass() const {
        if (not_applicable) return false;
        return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.ok; });
    }

    std::string status() const {
        if (not_applicable) return "not-applicable";
        return pass() ? "pass" : "fail";
    }

    void add(const std::string& name, bool ok, std::string witness = "") {
        checks.push_back({name, ok, ok ? "" : std::move(witness)});
    }

    void merge(const Report& o, const std::string& prefix = "") {
        for (const auto& c : o.checks) checks.push_back({prefix + c.name, c.ok, c.witness});
        for (const auto& [k, v] : o.dims) dims[prefix + k] = v;
        if (o.not_applicable) {
            not_applicable = true;
            if (hypothesis_failed.empty()) hypothesis_failed = o.hypothesis_failed;
        }
    }

    const Check* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }
};

inline std::string format_multi(const Shape& s, long idx) {
    auto m = s.multi(idx);
    std::ostringstream os;
    os << "(";
    for (size_t k = 0; k < m.size(); ++k) os << (k ? "," : "") << m[k];
    os << ")";
    return os.str();
}

/// Equality of two maps as a named check; the witness is the first basis
/// column and row where the sides differ.
inline void check_maps_equal(Report& rep, const std::string& name, const LinMap& lhs, const LinMap& rhs) {
    if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
        rep.add(name, false,
                "dimension mismatch: " + std::to_string(lhs.rows()) + "x" + std::to_string(lhs.cols()) + " vs " +
                    std::to_string(rhs.rows()) + "x" + std::to_string(rhs.cols()));
        return;
    }
    for (long j = 0; j < lhs.cols(); ++j)
        for (long i = 0; i < lhs.rows(); ++i)
            if (lhs.at(i, j) != rhs.at(i, j)) {
                std::ostringstream os;
                os << "at basis " << format_multi(lhs.domain(), j) << " output row "
                   << format_multi(lhs.codomain(), i) << ": lhs=" << lhs.at(i, j).str()
                   << " rhs=" << rhs.at(i, j).str();
                rep.add(name, false, os.str());
                return;
            }
    rep.add(name, true);
}

/// Sentinel for conclusions the underlying theory guarantees; a throw here
/// indicates a bug in the implementation, not bad input data.
class TheoremViolation : public std::logic_error {
public:
    explicit TheoremViolation(const std::string& what) : std::logic_error("theorem violation: " + what) {}
};

inline void require_pass(const Report& rep, const std::string& context) {
    for (const auto& c : rep.checks)
        if (!c.ok) throw TheoremViolation(context + ": " + c.name + " failed (" + c.witness + ")");
}

}  // namespace corings
