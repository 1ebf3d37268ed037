#pragma once

#include <complex>
#include <optional>

#include <json.hpp>

#include "asymcg/blocks.hpp"
#include "asymcg/cocycle.hpp"
#include "asymcg/error.hpp"
#include "asymcg/word.hpp"

namespace asymcg {

using Json = nlohmann::json;

/// Integer entries are decimal strings: they are exact big integers and JSON
/// numbers would not round-trip them.
Json fin_symplectic_json(const FinSymplectic& f);

Json block_pair_json(const BlockPair& b);

/// `{re_num, re_den, im_num, im_den}` as decimal strings.
Json gaussian_rational_json(const GaussianRational& v);

Json cocycle_json(const Word& g, const Word& h, const GaussianRational& c1,
                  const std::optional<BigRational>& n,
                  const std::optional<std::complex<double>>& cn);

Json error_json(const Error& e);

} // namespace asymcg
