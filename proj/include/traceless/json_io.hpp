#pragma once

#include <complex>
#include <variant>

#include <json.hpp>

#include "traceless/algebra_element.hpp"
#include "traceless/hermitian.hpp"
#include "traceless/partition.hpp"
#include "traceless/spectrum.hpp"
#include "traceless/tensor.hpp"

namespace traceless {

using json = nlohmann::json;

json partition_to_json(const Partition& p);
Partition partition_from_json(const json& j);

json spectrum_to_json(const std::set<long>& spec);
json affine_spectrum_to_json(const std::set<AffineEigenvalue>& spec);

json diagram_to_json(const WalledDiagram& d);
WalledDiagram diagram_from_json(const json& j);

/// Elements serialize as a list of {"diagram": ..., "coeff": ...} with "p/q"
/// strings in specialized mode and {"poly": ["c0", "c1", ...]} in generic mode.
json element_to_json(const RationalElement& e);
json element_to_json(const GenericElement& e);

/// Tensor files carry a scalar tag: "rational" ("p/q" strings), "float"
/// (numbers), "complex" ([re, im] numbers) or "complex-rational"
/// (["p/q", "p/q"] pairs).
using TensorVariant = std::variant<DenseTensor<Rational>, DenseTensor<double>,
                                   DenseTensor<std::complex<double>>,
                                   DenseTensor<GaussianRational>>;

json tensor_to_json(const TensorVariant& t);
TensorVariant tensor_from_json(const json& j);

json tensor_to_json(const DenseTensor<Rational>& t);
json tensor_to_json(const DenseTensor<double>& t);
json tensor_to_json(const DenseTensor<std::complex<double>>& t);
json tensor_to_json(const DenseTensor<GaussianRational>& t);

/// Metric files: {"N": ..., "scalar": "complex"|"complex-rational", "g": [[...]]}.
using MetricVariant =
    std::variant<HermitianMetric<GaussianRational>, HermitianMetric<std::complex<double>>>;
MetricVariant metric_from_json(const json& j);

DenseTensor<GaussianRational> to_gaussian(const DenseTensor<Rational>& t);
DenseTensor<std::complex<double>> to_complex(const DenseTensor<Rational>& t);
DenseTensor<std::complex<double>> to_complex(const DenseTensor<double>& t);
DenseTensor<std::complex<double>> to_complex(const DenseTensor<GaussianRational>& t);
DenseTensor<double> to_float(const DenseTensor<Rational>& t);

}  // namespace traceless
