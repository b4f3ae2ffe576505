#include "polyred/exceptional.hpp"

#include <algorithm>

namespace polyred {

bool is_exceptional(const FiniteSubset& b)
{
    if (b.size() < 3)
        throw PreconditionError("exceptional sets are defined for n >= 3");
    return stabilizer(b).order > 1;
}

std::size_t root_of_unity_order(const FieldElement& x)
{
    if (x.is_zero())
        return 0;
    // Roots of unity in Q(zeta_N) have order dividing lcm(2, N).
    const std::size_t bound = 2 * x.field()->order();
    FieldElement p = x;
    for (std::size_t k = 1; k <= bound; ++k) {
        if (p.is_one())
            return k;
        p *= x;
    }
    return 0;
}

ExceptionalStructure decompose(const FiniteSubset& b)
{
    if (b.size() < 3)
        throw PreconditionError("exceptional sets are defined for n >= 3");
    const Stabilizer st = stabilizer(b);
    if (st.order <= 1)
        throw PreconditionError("set is not exceptional: its stabilizer is trivial");

    // The group is cyclic; take an element of maximal order, least c on ties.
    // maps are sorted by c, so the first hit is the least.
    const LinearPoly* gen = nullptr;
    for (const auto& p : st.maps)
        if (root_of_unity_order(p.c()) == st.order) {
            gen = &p;
            break;
        }
    if (!gen)
        throw Error("stabilizer is not cyclic");

    const FieldElement barycenter = gen->c_prime() / (FieldElement::one(b.field()) - gen->c());
    std::vector<bool> covered(b.size(), false);
    std::vector<std::vector<FieldElement>> gons;
    bool includes = false;
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (covered[i])
            continue;
        if (b[i] == barycenter) {
            covered[i] = true;
            includes = true;
            continue;
        }
        std::vector<FieldElement> cycle;
        FieldElement x = b[i];
        do {
            const std::size_t k = b.index_of(x);
            covered[k] = true;
            cycle.push_back(x);
            x = (*gen)(x);
        } while (!(x == b[i]));
        gons.push_back(std::move(cycle));
    }
    const std::size_t r = gons.front().size();
    for (const auto& g : gons)
        if (g.size() != r)
            throw Error("cycles of the generator have unequal lengths");
    return ExceptionalStructure{r, gons.size(), barycenter, std::move(gons), includes, *gen, st.order};
}

FiniteSubset generate_exceptional(std::size_t r, std::size_t s, long epsilon_exponent,
                                  std::span<const FieldElement> base_vertices, const FieldElement& second_vertex,
                                  bool include_barycenter)
{
    if (r < 2)
        throw PreconditionError("gon order must be at least 2");
    if (s < 1)
        throw PreconditionError("at least one gon is required");
    if (base_vertices.size() != s)
        throw PreconditionError("expected " + std::to_string(s) + " base vertices, got " +
                                std::to_string(base_vertices.size()));
    const FieldRef& field = second_vertex.field();
    for (const auto& v : base_vertices)
        require_same_field(v, second_vertex);

    const FieldElement eps = FieldElement::zeta_power(field, epsilon_exponent);
    if (!eps.pow(static_cast<long>(r)).is_one())
        throw PreconditionError("zeta^" + std::to_string(epsilon_exponent) + " is not an r-th root of unity");
    for (std::size_t d = 1; d < r; ++d)
        if (r % d == 0 && eps.pow(static_cast<long>(d)).is_one())
            throw PreconditionError("zeta^" + std::to_string(epsilon_exponent) +
                                    " is not a primitive root of order " + std::to_string(r));

    const FieldElement c = second_vertex - eps * base_vertices[0];
    std::vector<FieldElement> out;
    out.reserve(s * r + 1);
    for (const auto& seed : base_vertices) {
        FieldElement x = seed;
        for (std::size_t j = 0; j < r; ++j) {
            out.push_back(x);
            x = eps * x + c;
        }
    }
    if (include_barycenter)
        out.push_back(c / (FieldElement::one(field) - eps));

    std::vector<FieldElement> sorted = out;
    std::sort(sorted.begin(), sorted.end(), TotalOrderLess{});
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw PreconditionError("generated elements collide; the parameters are degenerate");
    return FiniteSubset(std::move(out));
}

bool order2_criterion(const FiniteSubset& b, std::span<const std::size_t> pairing)
{
    if (pairing.size() != b.size())
        throw PreconditionError("pairing must cover every index");
    for (std::size_t i = 0; i < pairing.size(); ++i)
        if (pairing[i] >= b.size() || pairing[pairing[i]] != i)
            throw PreconditionError("pairing is not an involution");
    const FieldElement sum = b[0] + b[pairing[0]];
    for (std::size_t i = 1; i < b.size(); ++i)
        if (!(b[i] + b[pairing[i]] == sum))
            return false;
    return true;
}

}  // namespace polyred
