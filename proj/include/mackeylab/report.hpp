#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "mackeylab/numeric.hpp"

namespace mlab {

// Line-oriented structured report. Exact integers and polynomial coefficient
// lists only; parse(emit(r)) == r.
struct ReportEntry {
    std::string id;
    std::vector<std::pair<std::string, std::string>> fields;
    bool operator==(const ReportEntry&) const = default;

    void add(const std::string& key, const std::string& value) { fields.push_back({key, value}); }
    const std::string* find(const std::string& key) const;
};

struct Report {
    std::vector<ReportEntry> entries;
    bool operator==(const Report&) const = default;

    ReportEntry& entry(const std::string& id);
    void emit(std::ostream& os) const;
    std::string emit_string() const;
    static Report parse(std::istream& is);
    static Report parse_string(const std::string& text);

    // human-readable rendering (not round-trippable)
    void emit_text(std::ostream& os) const;
};

}  // namespace mlab
