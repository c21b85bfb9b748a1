#include "traceless/json_io.hpp"

#include <stdexcept>

namespace traceless {

namespace {

json rational_to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw std::invalid_argument("expected an integer or a \"p/q\" string");
}

json lines_to_json(const WalledDiagram::Lines& lines) {
    json obj = json::object();
    for (const auto& [u, l] : lines) obj[std::to_string(u)] = l;
    return obj;
}

WalledDiagram::Lines lines_from_json(const json& j) {
    WalledDiagram::Lines out;
    for (auto it = j.begin(); it != j.end(); ++it)
        out.push_back({std::stoi(it.key()), it.value().get<int>()});
    return out;
}

WalledDiagram::Arcs arcs_from_json(const json& j) {
    WalledDiagram::Arcs out;
    for (const auto& pair : j) {
        if (!pair.is_array() || pair.size() != 2)
            throw std::invalid_argument("arc must be a [left, right] pair");
        out.push_back({pair[0].get<int>(), pair[1].get<int>()});
    }
    return out;
}

}  // namespace

json partition_to_json(const Partition& p) { return json(p.parts()); }

Partition partition_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("partition must be a JSON array");
    return Partition(j.get<std::vector<int>>());
}

json spectrum_to_json(const std::set<long>& spec) { return json(spec); }

json affine_spectrum_to_json(const std::set<AffineEigenvalue>& spec) {
    json arr = json::array();
    for (const auto& e : spec) arr.push_back({{"r", e.r}, {"c", e.c}});
    return arr;
}

json diagram_to_json(const WalledDiagram& d) {
    json arcsUp = json::array(), arcsLo = json::array();
    for (const auto& [a, b] : d.upper_arcs()) arcsUp.push_back({a, b});
    for (const auto& [a, b] : d.lower_arcs()) arcsLo.push_back({a, b});
    return json{{"m", d.m()},
                {"n", d.n()},
                {"upperArcs", arcsUp},
                {"lowerArcs", arcsLo},
                {"leftLines", lines_to_json(d.left_lines())},
                {"rightLines", lines_to_json(d.right_lines())}};
}

WalledDiagram diagram_from_json(const json& j) {
    return WalledDiagram(j.at("m").get<int>(), j.at("n").get<int>(),
                         arcs_from_json(j.at("upperArcs")), arcs_from_json(j.at("lowerArcs")),
                         lines_from_json(j.at("leftLines")), lines_from_json(j.at("rightLines")));
}

json element_to_json(const RationalElement& e) {
    json arr = json::array();
    for (const auto& [d, c] : e.terms())
        arr.push_back({{"diagram", diagram_to_json(d)}, {"coeff", rational_to_json(c)}});
    return arr;
}

json element_to_json(const GenericElement& e) {
    json arr = json::array();
    for (const auto& [d, c] : e.terms()) {
        json poly = json::array();
        for (const Rational& q : c.coefficients()) poly.push_back(to_string(q));
        arr.push_back({{"diagram", diagram_to_json(d)}, {"coeff", {{"poly", poly}}}});
    }
    return arr;
}

namespace {

template <class S, class Writer>
json tensor_to_json_impl(const DenseTensor<S>& t, const char* tag, Writer&& write) {
    json comps = json::array();
    for (std::size_t i = 0; i < t.dim(); ++i) comps.push_back(write(t[i]));
    return json{{"m", t.m()}, {"n", t.n()}, {"N", t.N()}, {"scalar", tag}, {"components", comps}};
}

template <class S, class Reader>
DenseTensor<S> tensor_from_json_impl(const json& j, Reader&& read) {
    DenseTensor<S> t(j.at("m").get<int>(), j.at("n").get<int>(), j.at("N").get<int>());
    const json& comps = j.at("components");
    if (!comps.is_array() || comps.size() != t.dim())
        throw std::invalid_argument("tensor components: wrong count");
    for (std::size_t i = 0; i < t.dim(); ++i) t[i] = read(comps[i]);
    return t;
}

GaussianRational gaussian_from_json(const json& v) {
    if (v.is_array()) {
        if (v.size() != 2) throw std::invalid_argument("complex-rational entry must be a pair");
        return {rational_from_json(v[0]), rational_from_json(v[1])};
    }
    return {rational_from_json(v)};
}

std::complex<double> complex_from_json(const json& v) {
    if (v.is_array()) {
        if (v.size() != 2) throw std::invalid_argument("complex entry must be a pair");
        return {v[0].get<double>(), v[1].get<double>()};
    }
    return {v.get<double>(), 0.0};
}

}  // namespace

json tensor_to_json(const DenseTensor<Rational>& t) {
    return tensor_to_json_impl(t, "rational", [](const Rational& q) { return json(to_string(q)); });
}

json tensor_to_json(const DenseTensor<double>& t) {
    return tensor_to_json_impl(t, "float", [](double v) { return json(v); });
}

json tensor_to_json(const DenseTensor<std::complex<double>>& t) {
    return tensor_to_json_impl(t, "complex", [](const std::complex<double>& v) {
        return json::array({v.real(), v.imag()});
    });
}

json tensor_to_json(const DenseTensor<GaussianRational>& t) {
    return tensor_to_json_impl(t, "complex-rational", [](const GaussianRational& v) {
        return json::array({to_string(v.re), to_string(v.im)});
    });
}

json tensor_to_json(const TensorVariant& t) {
    return std::visit([](const auto& x) { return tensor_to_json(x); }, t);
}

TensorVariant tensor_from_json(const json& j) {
    std::string scalar = j.value("scalar", "rational");
    if (scalar == "rational")
        return tensor_from_json_impl<Rational>(j, rational_from_json);
    if (scalar == "float")
        return tensor_from_json_impl<double>(j, [](const json& v) { return v.get<double>(); });
    if (scalar == "complex")
        return tensor_from_json_impl<std::complex<double>>(j, complex_from_json);
    if (scalar == "complex-rational")
        return tensor_from_json_impl<GaussianRational>(j, gaussian_from_json);
    throw std::invalid_argument("unknown tensor scalar kind: '" + scalar + "'");
}

MetricVariant metric_from_json(const json& j) {
    const int N = j.at("N").get<int>();
    const json& rows = j.at("g");
    if (!rows.is_array() || static_cast<int>(rows.size()) != N)
        throw std::invalid_argument("metric: g must be an N x N array");
    std::string scalar = j.value("scalar", "complex-rational");
    if (scalar == "complex-rational" || scalar == "rational") {
        DenseMatrix<GaussianRational> g(N, N);
        for (int r = 0; r < N; ++r) {
            if (static_cast<int>(rows[r].size()) != N)
                throw std::invalid_argument("metric: g must be an N x N array");
            for (int c = 0; c < N; ++c) g(r, c) = gaussian_from_json(rows[r][c]);
        }
        return HermitianMetric<GaussianRational>(std::move(g));
    }
    if (scalar == "complex" || scalar == "float") {
        DenseMatrix<std::complex<double>> g(N, N);
        for (int r = 0; r < N; ++r) {
            if (static_cast<int>(rows[r].size()) != N)
                throw std::invalid_argument("metric: g must be an N x N array");
            for (int c = 0; c < N; ++c) g(r, c) = complex_from_json(rows[r][c]);
        }
        return HermitianMetric<std::complex<double>>(std::move(g));
    }
    throw std::invalid_argument("unknown metric scalar kind: '" + scalar + "'");
}

DenseTensor<GaussianRational> to_gaussian(const DenseTensor<Rational>& t) {
    DenseTensor<GaussianRational> out(t.m(), t.n(), t.N());
    for (std::size_t i = 0; i < t.dim(); ++i) out[i] = GaussianRational(t[i]);
    return out;
}

DenseTensor<std::complex<double>> to_complex(const DenseTensor<Rational>& t) {
    DenseTensor<std::complex<double>> out(t.m(), t.n(), t.N());
    for (std::size_t i = 0; i < t.dim(); ++i)
        out[i] = {t[i].convert_to<double>(), 0.0};
    return out;
}

DenseTensor<std::complex<double>> to_complex(const DenseTensor<double>& t) {
    DenseTensor<std::complex<double>> out(t.m(), t.n(), t.N());
    for (std::size_t i = 0; i < t.dim(); ++i) out[i] = {t[i], 0.0};
    return out;
}

DenseTensor<std::complex<double>> to_complex(const DenseTensor<GaussianRational>& t) {
    DenseTensor<std::complex<double>> out(t.m(), t.n(), t.N());
    for (std::size_t i = 0; i < t.dim(); ++i)
        out[i] = {t[i].re.convert_to<double>(), t[i].im.convert_to<double>()};
    return out;
}

DenseTensor<double> to_float(const DenseTensor<Rational>& t) {
    DenseTensor<double> out(t.m(), t.n(), t.N());
    for (std::size_t i = 0; i < t.dim(); ++i) out[i] = t[i].convert_to<double>();
    return out;
}

}  // namespace traceless
