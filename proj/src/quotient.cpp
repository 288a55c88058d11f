#include "superhom/quotient.hpp"

namespace superhom {

Quotient quotient_construct(const SpacePtr& ambient, const std::vector<Vector>& ideal) {
    for (const auto& v : ideal) {
        if (v.space != ambient)
            throw SpaceMismatchError("ideal vector not in the ambient space");
        if (!v.is_zero() && !v.homogeneous_parity())
            throw GradingError("ideal vectors must be parity-homogeneous");
    }
    std::vector<Vector> basis = echelonize(ideal);

    std::vector<bool> pivotal(ambient->dim, false);
    for (const auto& v : basis) pivotal[v.entries.front().first] = true;

    std::vector<Parity> parity;
    std::vector<std::string> labels;
    std::optional<std::vector<int>> degree;
    if (ambient->degree)
        degree.emplace();
    std::vector<int> coords; // ambient coordinate backing each quotient basis index
    for (int i = 0; i < ambient->dim; ++i) {
        if (pivotal[i])
            continue;
        coords.push_back(i);
        parity.push_back(ambient->parity[i]);
        labels.push_back("[" + ambient->labels[i] + "]");
        if (degree)
            degree->push_back((*ambient->degree)[i]);
    }
    SpacePtr qspace = make_space(std::move(parity), std::move(labels), std::move(degree));

    // Section: quotient basis k -> ambient coordinate coords[k].
    MatG sec = MatG::Constant(ambient->dim, qspace->dim, GaussianRational(0));
    for (int k = 0; k < qspace->dim; ++k) sec(coords[k], k) = GaussianRational(1);

    // Projection: reduce a vector modulo the ideal, read off the complement.
    MatG proj = MatG::Constant(qspace->dim, ambient->dim, GaussianRational(0));
    RowReducer red(ambient->dim);
    for (const auto& v : basis) red.insert(v.entries);
    for (int j = 0; j < ambient->dim; ++j) {
        SparseEntries r = red.residue({{j, GaussianRational(1)}});
        for (const auto& [i, c] : r) {
            auto it = std::lower_bound(coords.begin(), coords.end(), i);
            proj(static_cast<int>(it - coords.begin()), j) = c;
        }
    }

    Quotient q;
    q.ambient = ambient;
    q.ideal_basis = std::move(basis);
    q.quotient_space = qspace;
    q.projection = LinearMap(ambient, qspace, std::move(proj));
    q.section = LinearMap(qspace, ambient, std::move(sec));
    return q;
}

} // namespace superhom
