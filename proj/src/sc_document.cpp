#include "superhom/sc_document.hpp"

#include <fstream>

#include <json.hpp>

namespace superhom {

using nlohmann::json;

namespace {
constexpr int kFormatVersion = 1;
}

std::string save_sc_string(const SuperAlgebra& g) {
    const SpacePtr& sp = g.space();
    json doc;
    doc["format_version"] = kFormatVersion;
    doc["name"] = g.name();
    doc["dim"] = sp->dim;
    json parity = json::array();
    for (Parity p : sp->parity) parity.push_back(parity_bit(p));
    doc["parity"] = parity;
    if (sp->degree) {
        json deg = json::array();
        for (int d : *sp->degree) deg.push_back(d);
        doc["degree"] = deg;
        doc["z_graded"] = g.z_graded();
    }
    json labels = json::array();
    for (const auto& l : sp->labels) labels.push_back(l);
    doc["labels"] = labels;

    json brackets = json::array();
    for (const auto& [ij, val] : g.sc().table()) {
        json rec;
        rec["i"] = ij.first;
        rec["j"] = ij.second;
        json terms = json::array();
        for (const auto& [k, c] : val) {
            json t;
            t["k"] = k;
            t["coeff"] = c.str();
            terms.push_back(t);
        }
        rec["terms"] = terms;
        brackets.push_back(rec);
    }
    doc["brackets"] = brackets;
    return doc.dump(2) + "\n";
}

void save_sc(const SuperAlgebra& g, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw Error("cannot write '" + path + "'");
    out << save_sc_string(g);
}

LoadedAlgebra load_sc_string(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(std::string("structure-constant file: ") + e.what());
    }
    try {
        if (doc.at("format_version").get<int>() != kFormatVersion)
            throw ParseError("unsupported format_version");
        int dim = doc.at("dim").get<int>();
        if (dim < 0)
            throw ParseError("negative dimension");
        auto parr = doc.at("parity");
        auto larr = doc.at("labels");
        if (static_cast<int>(parr.size()) != dim || static_cast<int>(larr.size()) != dim)
            throw ParseError("parity/labels length does not match dim");
        std::vector<Parity> parity(dim);
        std::vector<std::string> labels(dim);
        for (int i = 0; i < dim; ++i) {
            int b = parr.at(i).get<int>();
            if (b != 0 && b != 1)
                throw ParseError("parity entries must be 0 or 1");
            parity[i] = b ? Parity::Odd : Parity::Even;
            labels[i] = larr.at(i).get<std::string>();
        }
        std::optional<std::vector<int>> degree;
        bool z_graded = false;
        if (doc.contains("degree")) {
            auto darr = doc.at("degree");
            if (static_cast<int>(darr.size()) != dim)
                throw ParseError("degree length does not match dim");
            degree.emplace(dim);
            for (int i = 0; i < dim; ++i) (*degree)[i] = darr.at(i).get<int>();
            z_graded = doc.value("z_graded", true);
        }
        SpacePtr space = make_space(std::move(parity), std::move(labels), std::move(degree));

        StructureConstants sc(space);
        for (const auto& rec : doc.at("brackets")) {
            int i = rec.at("i").get<int>();
            int j = rec.at("j").get<int>();
            if (i < 0 || j < 0 || i >= dim || j >= dim)
                throw ParseError("bracket record index out of range");
            if (i > j)
                throw ParseError("bracket records must have i <= j");
            SparseEntries val;
            for (const auto& t : rec.at("terms")) {
                int k = t.at("k").get<int>();
                if (k < 0 || k >= dim)
                    throw ParseError("bracket term index out of range");
                val.emplace_back(k, GaussianRational::parse(t.at("coeff").get<std::string>()));
            }
            std::sort(val.begin(), val.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            sc.set(i, j, std::move(val));
        }
        LoadedAlgebra out;
        std::string name = doc.at("name").get<std::string>();
        out.algebra = std::make_shared<const SuperAlgebra>(name, std::move(sc), z_graded);
        out.axioms = verify_axioms(*out.algebra);
        return out;
    } catch (const json::exception& e) {
        throw ParseError(std::string("structure-constant file: ") + e.what());
    }
}

LoadedAlgebra load_sc(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open '" + path + "'");
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return load_sc_string(text);
}

} // namespace superhom
