#pragma once

#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "charlab/errors.hpp"
#include "charlab/verifiers.hpp"

namespace charlab {

enum class OutputFormat { text, structured };

inline constexpr const char* kReportSchema = "charlab-report/1";

// Per-group line of the scan summary. "status" strings are pass | FAIL |
// skip; error carries a build/processing failure when the group never got
// as far as verification.
struct GroupSummary {
    std::string name;
    long long order = 0;
    std::vector<long long> degrees;
    bool gvz = false;
    bool two_degrees = false;
    std::string t33_status;
    std::string t34_status;
    std::string error;
};

namespace rdetail {

inline std::string status_of(const VerificationReport& r) {
    if (!r.hypotheses_met) return "skip";
    return *r.conclusion_holds ? "pass" : "FAIL";
}

}  // namespace rdetail

inline nlohmann::ordered_json report_to_json(const VerificationReport& r) {
    nlohmann::ordered_json j;
    j["theorem"] = theorem_id_name(r.theorem_id);
    j["group"] = r.group_name;
    j["hypotheses_met"] = r.hypotheses_met;
    if (r.conclusion_holds.has_value())
        j["conclusion_holds"] = *r.conclusion_holds;
    else
        j["conclusion_holds"] = nullptr;
    nlohmann::ordered_json ws = nlohmann::ordered_json::array();
    for (const auto& w : r.witnesses) {
        nlohmann::ordered_json jw;
        jw["description"] = w.description;
        nlohmann::ordered_json fields;
        for (const auto& [k, v] : w.fields) fields[k] = v;
        jw["fields"] = std::move(fields);
        ws.push_back(std::move(jw));
    }
    j["witnesses"] = std::move(ws);
    j["note"] = r.note;
    return j;
}

inline VerificationReport report_from_json(const nlohmann::json& j) {
    VerificationReport r;
    auto id = theorem_id_from_name(j.at("theorem").get<std::string>());
    if (!id) throw ParseError(0, "unknown theorem id '" + j.at("theorem").get<std::string>() + "'");
    r.theorem_id = *id;
    r.group_name = j.at("group").get<std::string>();
    r.hypotheses_met = j.at("hypotheses_met").get<bool>();
    if (!j.at("conclusion_holds").is_null())
        r.conclusion_holds = j.at("conclusion_holds").get<bool>();
    for (const auto& jw : j.at("witnesses")) {
        Witness w;
        w.description = jw.at("description").get<std::string>();
        for (const auto& [k, v] : jw.at("fields").items())
            w.fields.emplace_back(k, v.get<std::string>());
        r.witnesses.push_back(std::move(w));
    }
    r.note = j.at("note").get<std::string>();
    return r;
}

// The structured document: schema header, optional scan summary, and one
// record per (group, theorem). Timings are deliberately left out so that
// identical inputs serialize byte-identically.
inline std::string write_report(const std::vector<VerificationReport>& reports,
                                OutputFormat format,
                                const std::vector<GroupSummary>* summaries = nullptr) {
    if (format == OutputFormat::structured) {
        nlohmann::ordered_json doc;
        doc["schema"] = kReportSchema;
        if (summaries) {
            nlohmann::ordered_json groups = nlohmann::ordered_json::array();
            for (const auto& s : *summaries) {
                nlohmann::ordered_json jg;
                jg["group"] = s.name;
                jg["order"] = s.order;
                jg["degrees"] = s.degrees;
                jg["gvz"] = s.gvz;
                jg["two_degrees"] = s.two_degrees;
                jg["t33"] = s.t33_status;
                jg["t34"] = s.t34_status;
                jg["error"] = s.error;
                groups.push_back(std::move(jg));
            }
            doc["groups"] = std::move(groups);
        }
        nlohmann::ordered_json rs = nlohmann::ordered_json::array();
        for (const auto& r : reports) rs.push_back(report_to_json(r));
        doc["reports"] = std::move(rs);
        return doc.dump(2) + "\n";
    }

    std::ostringstream out;
    if (summaries) {
        out << "group            order  degrees      gvz  two-deg  T33   T34\n";
        for (const auto& s : *summaries) {
            std::string deg;
            for (std::size_t i = 0; i < s.degrees.size(); ++i)
                deg += (i ? "," : "") + std::to_string(s.degrees[i]);
            out << s.name;
            for (std::size_t i = s.name.size(); i < 17; ++i) out << ' ';
            if (!s.error.empty()) {
                out << "error: " << s.error << "\n";
                continue;
            }
            std::string ord = std::to_string(s.order);
            out << ord;
            for (std::size_t i = ord.size(); i < 7; ++i) out << ' ';
            out << deg;
            for (std::size_t i = deg.size(); i < 13; ++i) out << ' ';
            out << (s.gvz ? "yes  " : "no   ") << (s.two_degrees ? "yes      " : "no       ");
            out << s.t33_status;
            for (std::size_t i = s.t33_status.size(); i < 6; ++i) out << ' ';
            out << s.t34_status << "\n";
        }
        out << "\n";
    }
    std::string current;
    for (const auto& r : reports) {
        if (r.group_name != current) {
            current = r.group_name;
            out << "== " << current << " ==\n";
        }
        std::string name = theorem_id_name(r.theorem_id);
        out << "  " << name;
        for (std::size_t i = name.size(); i < 24; ++i) out << ' ';
        out << rdetail::status_of(r);
        if (!r.note.empty()) out << "  (" << r.note << ")";
        out << "\n";
        for (const auto& w : r.witnesses) {
            out << "    witness: " << w.description << "\n";
            for (const auto& [k, v] : w.fields) out << "      " << k << " = " << v << "\n";
        }
    }
    return out.str();
}

// Reads back a structured document produced by write_report.
inline std::vector<VerificationReport> parse_report_document(const std::string& text) {
    nlohmann::json doc = nlohmann::json::parse(text);
    if (!doc.contains("schema") || doc.at("schema").get<std::string>() != kReportSchema)
        throw ParseError(0, "unsupported report schema '" +
                                (doc.contains("schema") ? doc["schema"].dump() : "missing") + "'");
    std::vector<VerificationReport> out;
    for (const auto& j : doc.at("reports")) out.push_back(report_from_json(j));
    return out;
}

}  // namespace charlab
