#include "superhom/report.hpp"

#include <sstream>

#include <json.hpp>

namespace superhom {

using nlohmann::json;

std::string report_to_json(const HomReport& rep) {
    json doc;
    doc["algebra"] = rep.algebra;
    doc["dim"] = rep.dim;
    doc["hom_space_dim"] = rep.hom_space_dim;
    doc["hom_space_scalar_only"] = rep.hom_space_scalar_only;
    json fams = json::array();
    for (const auto& fr : rep.families) {
        json f;
        f["name"] = fr.name;
        f["constraints"] = fr.constraints;
        f["solutions"] = fr.solutions;
        f["status"] = fr.status;
        json named = json::array();
        for (const auto& nt : fr.named_triples) {
            json n;
            n["label"] = nt.label;
            n["constraints"] = nt.constraints;
            named.push_back(n);
        }
        f["named_triples"] = named;
        fams.push_back(f);
    }
    doc["families"] = fams;
    doc["findings"] = rep.findings;
    doc["verdict"] = verdict_str(rep.verdict);
    doc["tool_version"] = kToolVersion;
    doc["seed"] = rep.seed;
    return doc.dump(2) + "\n";
}

std::string report_to_text(const HomReport& rep) {
    std::ostringstream os;
    os << rep.algebra << " (dim " << rep.dim << ")\n";
    os << "  hom-Jacobi space dimension: " << rep.hom_space_dim
       << (rep.hom_space_scalar_only ? " (scalar line through id)" : "") << "\n";
    for (const auto& fr : rep.families) {
        os << "  family " << fr.name << ": " << fr.status;
        if (!fr.solutions.empty()) {
            os << "; solutions:";
            for (const auto& s : fr.solutions) os << " " << s;
        }
        os << "\n";
        for (const auto& nt : fr.named_triples) {
            os << "    " << nt.label << " => {";
            for (size_t t = 0; t < nt.constraints.size(); ++t)
                os << (t ? ", " : "") << nt.constraints[t];
            os << "}\n";
        }
    }
    for (const auto& f : rep.findings) os << "  note: " << f << "\n";
    os << "  verdict: " << verdict_str(rep.verdict) << "\n";
    return os.str();
}

} // namespace superhom
