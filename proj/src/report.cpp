#include "mackeylab/report.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace mlab {

const std::string* ReportEntry::find(const std::string& key) const
{
    for (const auto& [k, v] : fields)
        if (k == key) return &v;
    return nullptr;
}

ReportEntry& Report::entry(const std::string& id)
{
    entries.push_back(ReportEntry{id, {}});
    return entries.back();
}

namespace {

void check_token(const std::string& s, const std::string& what)
{
    if (s.empty()) throw Error("empty " + what + " in report");
    for (char c : s)
        if (c == '\n' || c == '\r') throw Error("newline inside report " + what);
}

}  // namespace

void Report::emit(std::ostream& os) const
{
    os << "mackeylab-report 1\n";
    for (const auto& e : entries) {
        check_token(e.id, "entry id");
        if (e.id.find(' ') != std::string::npos) throw Error("space inside report entry id");
        os << "entry " << e.id << "\n";
        for (const auto& [k, v] : e.fields) {
            check_token(k, "key");
            if (k.find(' ') != std::string::npos) throw Error("space inside report key");
            if (!v.empty()) check_token(v, "value");
            os << "f " << k << " " << v << "\n";
        }
        os << "end\n";
    }
}

std::string Report::emit_string() const
{
    std::ostringstream os;
    emit(os);
    return os.str();
}

Report Report::parse(std::istream& is)
{
    std::string line;
    if (!std::getline(is, line) || line != "mackeylab-report 1")
        throw Error("bad report header");
    Report r;
    ReportEntry* cur = nullptr;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string tok;
        ls >> tok;
        if (tok == "entry") {
            std::string id;
            ls >> id;
            if (id.empty()) throw Error("report entry without id");
            r.entries.push_back(ReportEntry{id, {}});
            cur = &r.entries.back();
        } else if (tok == "f") {
            if (!cur) throw Error("report field outside an entry");
            std::string key;
            ls >> key;
            std::string value;
            std::getline(ls, value);
            if (!value.empty() && value[0] == ' ') value.erase(0, 1);
            cur->fields.push_back({key, value});
        } else if (tok == "end") {
            cur = nullptr;
        } else {
            throw Error("unknown report line: " + line);
        }
    }
    return r;
}

Report Report::parse_string(const std::string& text)
{
    std::istringstream is(text);
    return parse(is);
}

void Report::emit_text(std::ostream& os) const
{
    for (const auto& e : entries) {
        os << e.id << "\n";
        for (const auto& [k, v] : e.fields) os << "  " << k << ": " << v << "\n";
    }
}

}  // namespace mlab
