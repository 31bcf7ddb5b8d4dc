#include "floer/report.hpp"

#include <algorithm>
#include <sstream>

namespace floer {

std::string format_thousands(const Int& value) {
    std::string digits = value.get_str();
    std::string sign;
    if (!digits.empty() && digits[0] == '-') {
        sign = "-";
        digits.erase(digits.begin());
    }
    std::string out;
    int count = 0;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
        if (count > 0 && count % 3 == 0) out.push_back(',');
        out.push_back(*it);
        ++count;
    }
    std::reverse(out.begin(), out.end());
    return sign + out;
}

Json json_int(const Int& value) {
    if (fits_json_number(value)) return Json(value.get_si());
    return Json(value.get_str());
}

Json json_betti(const std::array<Int, 4>& b) {
    Json a = Json::array();
    for (const Int& x : b) a.push_back(json_int(x));
    return a;
}

Json make_envelope(const std::string& command, Json config) {
    Json envelope;
    envelope["version"] = kToolVersion;
    envelope["command"] = command;
    envelope["config"] = std::move(config);
    envelope["results"] = Json::array();
    envelope["summary"] = Json::object();
    return envelope;
}

Json genus_report_json(const GenusReport& r) {
    Json j;
    j["genus"] = r.genus;
    j["epsilon"] = r.eps;
    if (r.nilpotency_computed >= 0) {
        j["nilpotency"] = r.nilpotency_computed;
        j["nilpotency_closed_form"] = r.nilpotency_closed_form;
        j["nilpotency_match"] = r.nilpotency_match;
    }
    j["framed_betti"] = json_betti(r.framed);
    j["framed_betti_plus"] = json_betti(r.framed_plus);
    j["framed_betti_minus"] = json_betti(r.framed_minus);
    j["framed_total"] = json_int(r.framed_total);
    j["critical_betti"] = json_betti(r.critical);
    j["critical_total"] = json_int(r.critical_total);
    Json h = Json::array();
    for (const Int& x : r.newstead) h.push_back(json_int(x));
    j["newstead_h"] = h;
    j["invariant_total"] = json_int(r.invariant_total);
    j["provenance"] = r.framed_paths;
    j["paths_agree"] = r.paths_agree;
    // Shifted labels as displayed in the tables.
    j["shifted"] = Json::object();
    j["shifted"]["b_{0+e}"] = json_int(r.framed[static_cast<std::size_t>(r.eps % 4)]);
    j["shifted"]["b_{2+e}"] = json_int(r.framed[static_cast<std::size_t>((2 + r.eps) % 4)]);
    j["shifted"]["n_{0+e}"] = json_int(r.critical[static_cast<std::size_t>(r.eps % 4)]);
    j["shifted"]["n_{2+e}"] = json_int(r.critical[static_cast<std::size_t>((2 + r.eps) % 4)]);
    return j;
}

namespace {

struct TableRows {
    std::string caption, low_label, high_label;
    std::vector<Int> low, high, total;
};

TableRows table_rows(const std::string& which, const std::vector<GenusReport>& reports) {
    TableRows t;
    const bool framed = which == "framed";
    t.caption = framed ? "Mod 4 graded betti numbers of the framed instanton homology"
                       : "Mod 4 graded betti numbers of the critical set (two copies of N_0)";
    t.low_label = framed ? "b_{0+e} = b_{1+e}" : "n_{0+e} = n_{1+e}";
    t.high_label = framed ? "b_{2+e} = b_{3+e}" : "n_{2+e} = n_{3+e}";
    for (const GenusReport& r : reports) {
        const auto& b = framed ? r.framed : r.critical;
        t.low.push_back(b[static_cast<std::size_t>(r.eps % 4)]);
        t.high.push_back(b[static_cast<std::size_t>((2 + r.eps) % 4)]);
        t.total.push_back(framed ? r.framed_total : r.critical_total);
    }
    return t;
}

}  // namespace

std::string render_table_text(const std::string& which, const std::vector<GenusReport>& reports) {
    TableRows t = table_rows(which, reports);
    const std::size_t label_width = 18;
    std::vector<std::size_t> widths;
    for (std::size_t i = 0; i < reports.size(); ++i) {
        std::size_t w = std::to_string(reports[i].genus).size();
        w = std::max(w, format_thousands(t.low[i]).size());
        w = std::max(w, format_thousands(t.high[i]).size());
        w = std::max(w, format_thousands(t.total[i]).size());
        widths.push_back(w + 2);
    }
    std::ostringstream out;
    auto cell = [&](const std::string& s, std::size_t w) {
        out << std::string(w > s.size() ? w - s.size() : 1, ' ') << s;
    };
    auto row = [&](const std::string& label, auto value_of) {
        out << label << std::string(label_width - label.size(), ' ');
        for (std::size_t i = 0; i < reports.size(); ++i) cell(value_of(i), widths[i]);
        out << "\n";
    };
    out << t.caption << "\n\n";
    row("genus g", [&](std::size_t i) { return std::to_string(reports[i].genus); });
    row(t.low_label, [&](std::size_t i) { return format_thousands(t.low[i]); });
    row(t.high_label, [&](std::size_t i) { return format_thousands(t.high[i]); });
    row("Total rank", [&](std::size_t i) { return format_thousands(t.total[i]); });
    return out.str();
}

std::string render_table_csv(const std::string& which, const std::vector<GenusReport>& reports) {
    const bool framed = which == "framed";
    std::ostringstream out;
    out << "genus,label,grading,value\n";
    const char* base = framed ? "b" : "n";
    for (const GenusReport& r : reports) {
        const auto& b = framed ? r.framed : r.critical;
        for (int i = 0; i < 4; ++i) {
            out << r.genus << "," << base << "_{" << i << "+e}," << ((i + r.eps) % 4) << ","
                << b[static_cast<std::size_t>((i + r.eps) % 4)].get_str() << "\n";
        }
        out << r.genus << ",total,-," << (framed ? r.framed_total : r.critical_total).get_str()
            << "\n";
    }
    return out.str();
}

std::string render_nilpotency_text(const std::vector<GenusReport>& reports) {
    std::ostringstream out;
    out << "genus  computed  closed_form  match\n";
    for (const GenusReport& r : reports) {
        out << std::string(5 > std::to_string(r.genus).size() ? 5 - std::to_string(r.genus).size() : 1, ' ')
            << r.genus << "  " << r.nilpotency_computed << "         " << r.nilpotency_closed_form
            << "            " << (r.nilpotency_match ? "yes" : "NO") << "\n";
    }
    return out.str();
}

Json check_results_json(const std::vector<CheckResult>& results) {
    Json a = Json::array();
    for (const CheckResult& r : results) {
        Json j;
        j["name"] = r.name;
        j["pass"] = r.pass;
        j["detail"] = r.detail;
        a.push_back(j);
    }
    return a;
}

Json strip_timings(Json value) {
    if (value.is_object()) {
        value.erase("elapsed_ms");
        for (auto& [key, child] : value.items()) child = strip_timings(child);
    } else if (value.is_array()) {
        for (auto& child : value) child = strip_timings(child);
    }
    return value;
}

}  // namespace floer
