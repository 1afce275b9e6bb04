#include "gframe/report.hpp"

#include <iomanip>

#include <json.hpp>

namespace gframe {

void RunReport::finding(std::string name, bool value, Quantities q) {
    findings.push_back({std::move(name), value, std::move(q)});
}

bool RunReport::check(std::string name, bool passed, Quantities q, std::string note) {
    checks.push_back({std::move(name), passed, std::move(q), std::move(note)});
    return passed;
}

bool RunReport::passed() const {
    for (const auto& c : checks) {
        if (!c.passed) {
            return false;
        }
    }
    return true;
}

namespace {

void write_quantities(std::ostream& out, const Quantities& q) {
    if (q.empty()) {
        return;
    }
    out << "  (";
    for (std::size_t i = 0; i < q.size(); ++i) {
        if (i) {
            out << ", ";
        }
        out << q[i].first << "=" << std::setprecision(12) << q[i].second;
    }
    out << ")";
}

nlohmann::json quantities_json(const Quantities& q) {
    nlohmann::json obj = nlohmann::json::object();
    for (const auto& [k, v] : q) {
        obj[k] = v;
    }
    return obj;
}

} // namespace

void write_report(std::ostream& out, const RunReport& report, ReportFormat format) {
    if (format == ReportFormat::json) {
        nlohmann::json root;
        root["command"] = report.command;
        root["tolerance"] = {{"rel_eps", report.tolerance.rel_eps},
                             {"rank_eps_factor", report.tolerance.rank_eps_factor}};
        if (report.seed) {
            root["seed"] = *report.seed;
        }
        auto& findings = root["findings"] = nlohmann::json::array();
        for (const auto& f : report.findings) {
            findings.push_back(
                {{"name", f.name}, {"value", f.value}, {"quantities", quantities_json(f.quantities)}});
        }
        auto& checks = root["checks"] = nlohmann::json::array();
        for (const auto& c : report.checks) {
            nlohmann::json entry{
                {"name", c.name}, {"passed", c.passed}, {"quantities", quantities_json(c.quantities)}};
            if (!c.note.empty()) {
                entry["note"] = c.note;
            }
            checks.push_back(std::move(entry));
        }
        root["notes"] = report.notes;
        root["passed"] = report.passed();
        out << root.dump(2) << "\n";
        return;
    }

    out << "command:";
    for (const auto& a : report.command) {
        out << " " << a;
    }
    out << "\n";
    out << "tolerance: rel_eps=" << report.tolerance.rel_eps
        << " rank_eps_factor=" << report.tolerance.rank_eps_factor << "\n";
    if (report.seed) {
        out << "seed: " << *report.seed << "\n";
    }
    if (!report.findings.empty()) {
        out << "findings:\n";
        for (const auto& f : report.findings) {
            out << "  " << f.name << " = " << (f.value ? "true" : "false");
            write_quantities(out, f.quantities);
            out << "\n";
        }
    }
    if (!report.checks.empty()) {
        out << "checks:\n";
        for (const auto& c : report.checks) {
            out << "  [" << (c.passed ? "PASS" : "FAIL") << "] " << c.name;
            write_quantities(out, c.quantities);
            if (!c.note.empty()) {
                out << "  -- " << c.note;
            }
            out << "\n";
        }
    }
    for (const auto& n : report.notes) {
        out << "note: " << n << "\n";
    }
    out << "result: " << (report.passed() ? "PASS" : "FAIL") << "\n";
}

} // namespace gframe
