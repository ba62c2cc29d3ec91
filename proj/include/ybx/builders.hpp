#pragma once

#include "ybx/rb_operator.hpp"

#include <string>
#include <utility>
#include <vector>

namespace ybx {

/// Images given as basis-label -> list of (basis-label, scalar-string);
/// omitted entries are zero.
using OpImageStrings =
    std::vector<std::pair<std::string, std::vector<std::pair<std::string, std::string>>>>;

inline LinOp<Poly> op_from_strings(const AlgebraPtr& alg, const RingPtr& ring,
                                   const OpImageStrings& images) {
    auto R = LinOp<Poly>::zero(alg);
    for (const auto& [arg, image] : images) {
        std::size_t j = alg->index_of(arg);
        for (const auto& [label, expr] : image)
            R.mat[alg->index_of(label)][j] = parse_scalar(expr, ring);
    }
    return R;
}

/// Entries given as (label, label, scalar-string); omitted entries are zero.
using TensorEntryStrings = std::vector<std::tuple<std::string, std::string, std::string>>;

inline Tensor2<Poly> tensor_from_strings(const AlgebraPtr& alg, const RingPtr& ring,
                                         const TensorEntryStrings& entries) {
    auto r = Tensor2<Poly>::zero(alg);
    for (const auto& [a, b, expr] : entries)
        r.coeff[alg->index_of(a)][alg->index_of(b)] = parse_scalar(expr, ring);
    return r;
}

}  // namespace ybx
