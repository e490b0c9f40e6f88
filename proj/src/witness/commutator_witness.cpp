#include "commord/witness/commutator_witness.hpp"

#include "commord/weightset/weightset.hpp"

namespace commord::witness {

CycloMatrix build_C(std::int64_t k, std::int64_t n) {
    const auto roots = weightset::build_root_multiset(weightset::decompose(k, n));
    const CyclotomicField field(k);
    std::vector<CycloScalar> diag;
    diag.reserve(roots.exponents.size());
    for (auto e : roots.exponents) diag.push_back(field.root(e));
    return CycloMatrix::diagonal(field, diag);
}

CycloWitness build_witness(std::int64_t k, std::int64_t n) {
    return realize_commutator(build_C(k, n), k);
}

} // namespace commord::witness
