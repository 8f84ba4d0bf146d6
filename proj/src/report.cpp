#include "redei/report.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "redei/errors.hpp"

namespace redei {

std::string render_set(const std::vector<std::uint32_t>& s) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) os << ',';
        os << s[i];
    }
    os << ']';
    return os.str();
}

void sort_records(std::vector<VerificationRecord>& records) {
    std::sort(records.begin(), records.end(),
              [](const VerificationRecord& a, const VerificationRecord& b) {
                  if (a.theorem != b.theorem) return a.theorem < b.theorem;
                  if (a.p != b.p) return a.p < b.p;
                  if (a.sort_key != b.sort_key) return a.sort_key < b.sort_key;
                  return a.params < b.params;
              });
}

std::string render_json(const std::vector<VerificationRecord>& records) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : records) {
        nlohmann::ordered_json obj;
        obj["theorem"] = r.theorem;
        obj["p"] = r.p;
        obj["params"] = r.params;
        obj["claimed"] = r.claimed;
        obj["observed"] = r.observed;
        obj["passed"] = r.passed;
        obj["witness"] = r.witness;
        obj["elapsed_ms"] = r.elapsed_ms;
        arr.push_back(std::move(obj));
    }
    return arr.dump(2) + "\n";
}

namespace {

std::string csv_quote(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char ch : field) {
        if (ch == '"') out += "\"\"";
        else out += ch;
    }
    out += '"';
    return out;
}

} // namespace

std::string render_csv(const std::vector<VerificationRecord>& records) {
    std::ostringstream os;
    os << "theorem,p,params,claimed,observed,passed,witness,elapsed_ms\n";
    for (const auto& r : records) {
        os << csv_quote(r.theorem) << ',' << r.p << ',' << csv_quote(r.params) << ','
           << csv_quote(r.claimed) << ',' << csv_quote(r.observed) << ','
           << (r.passed ? "true" : "false") << ',' << csv_quote(r.witness) << ','
           << r.elapsed_ms << '\n';
    }
    return os.str();
}

std::string render_report(const std::vector<VerificationRecord>& records,
                          const std::string& format) {
    if (format == "json") return render_json(records);
    if (format == "csv") return render_csv(records);
    throw ParamsOutOfRange("render_report: format must be json or csv");
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << content;
    out.flush();
    if (!out) throw IoError("write failed for " + path);
}

} // namespace redei
