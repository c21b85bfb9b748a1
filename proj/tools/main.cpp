#include <complex>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "traceless/algebra_element.hpp"
#include "traceless/hermitian.hpp"
#include "traceless/json_io.hpp"
#include "traceless/lr.hpp"
#include "traceless/oracle.hpp"
#include "traceless/spectrum.hpp"
#include "traceless/tensor.hpp"

namespace {

using namespace traceless;

constexpr int kExitVerifyFailure = 1;
constexpr int kExitValidation = 2;
constexpr int kExitRefusal = 3;

void emit_error(int code, const std::string& message) {
    json err{{"error", {{"code", code}, {"message", message}}}};
    std::cerr << err.dump() << "\n";
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    json j;
    in >> j;
    return j;
}

std::string formula_text(const std::set<long>& spec) {
    std::string out;
    for (const ProjectorFactor& f : projector_factors(spec, true))
        out += "(" + f.descriptor + ")";
    if (out.empty()) out = "1";
    return out;
}

struct SpectrumArgs {
    int m = 0, n = 0, N = 0;
    bool formula = false;
};

struct RestrictedArgs {
    std::string rho, sigma;
    int N = 0;
    bool formula = false;
};

struct BranchArgs {
    std::string rho, sigma, mu, nu;
    int N = 0;
    bool bound = false;
};

struct LrArgs {
    std::string gamma, alpha, beta;
};

struct WbArgs {
    int m = 0, n = 0;
    std::string delta = "1";
};

struct ApplyArgs {
    std::string in;
    std::string rho, sigma;
    bool asFloat = false;
};

struct HermitianArgs {
    std::string in;
    std::string metric;
};

struct VerifyArgs {
    int m = 0, n = 0, N = 0;
    std::size_t cap = kDefaultOracleCap;
};

std::vector<long> spec_factors_for(const DenseTensor<Rational>& t) {
    return factor_values(spec_a({t.m(), t.n(), t.N()}));
}

template <class S>
DenseTensor<S> apply_full_or_restricted(const DenseTensor<S>& t, const ApplyArgs& args) {
    SpectrumRequest req{t.m(), t.n(), t.N()};
    std::set<long> spec;
    if (!args.rho.empty() || !args.sigma.empty()) {
        if (args.rho.empty() || args.sigma.empty())
            throw std::invalid_argument("apply: --rho and --sigma must be given together");
        spec = restricted_spec(parse_partition(args.rho), parse_partition(args.sigma), req);
    } else {
        spec = spec_a(req);
    }
    return apply_projector(t, factor_values(spec));
}

int run_apply(const ApplyArgs& args) {
    TensorVariant t = tensor_from_json(load_json_file(args.in));
    TensorVariant out = std::visit(
        [&](const auto& x) -> TensorVariant { return apply_full_or_restricted(x, args); }, t);
    if (args.asFloat) {
        if (const auto* r = std::get_if<DenseTensor<Rational>>(&out))
            out = to_float(*r);
        else if (const auto* g = std::get_if<DenseTensor<GaussianRational>>(&out))
            out = to_complex(*g);
    }
    std::cout << tensor_to_json(out).dump() << "\n";
    return 0;
}

int run_apply_hermitian(const HermitianArgs& args) {
    TensorVariant tv = tensor_from_json(load_json_file(args.in));
    MetricVariant mv = metric_from_json(load_json_file(args.metric));

    // Exact path when both sides are exact, complex floats otherwise.
    bool tensorExact = std::holds_alternative<DenseTensor<Rational>>(tv) ||
                       std::holds_alternative<DenseTensor<GaussianRational>>(tv);
    bool metricExact = std::holds_alternative<HermitianMetric<GaussianRational>>(mv);

    if (tensorExact && metricExact) {
        DenseTensor<GaussianRational> t =
            std::holds_alternative<DenseTensor<Rational>>(tv)
                ? to_gaussian(std::get<DenseTensor<Rational>>(tv))
                : std::get<DenseTensor<GaussianRational>>(tv);
        const auto& gm = std::get<HermitianMetric<GaussianRational>>(mv);
        if (gm.N() != t.N()) throw std::invalid_argument("metric and tensor N differ");
        auto out = apply_projector_hermitian(t, gm, spec_a({t.m(), t.n(), t.N()}));
        std::cout << tensor_to_json(out).dump() << "\n";
        return 0;
    }

    DenseTensor<std::complex<double>> t = std::visit(
        [](const auto& x) -> DenseTensor<std::complex<double>> {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, DenseTensor<std::complex<double>>>)
                return x;
            else
                return to_complex(x);
        },
        tv);
    DenseMatrix<std::complex<double>> g(t.N(), t.N());
    if (metricExact) {
        const auto& gm = std::get<HermitianMetric<GaussianRational>>(mv);
        if (gm.N() != t.N()) throw std::invalid_argument("metric and tensor N differ");
        for (int r = 0; r < t.N(); ++r)
            for (int c = 0; c < t.N(); ++c)
                g(r, c) = {gm.g()(r, c).re.convert_to<double>(),
                           gm.g()(r, c).im.convert_to<double>()};
    } else {
        const auto& gm = std::get<HermitianMetric<std::complex<double>>>(mv);
        if (gm.N() != t.N()) throw std::invalid_argument("metric and tensor N differ");
        g = gm.g();
    }
    HermitianMetric<std::complex<double>> gm(std::move(g));
    auto out = apply_projector_hermitian(t, gm, spec_a({t.m(), t.n(), t.N()}));
    std::cout << tensor_to_json(out).dump() << "\n";
    return 0;
}

int run_verify(const VerifyArgs& args) {
    using Tensor = DenseTensor<Rational>;
    SpectrumRequest req{args.m, args.n, args.N};
    std::set<long> spec = spec_a(req);
    std::vector<long> factors = factor_values(spec);

    json checks = json::array();
    bool ok = true;
    auto record = [&](const std::string& name, bool pass) {
        checks.push_back({{"name", name}, {"pass", pass}});
        ok = ok && pass;
    };

    OperatorMatrix A = build_operator_matrix(OperatorKind::A, args.m, args.n, args.N, args.cap);
    record("spectrum annihilation", annihilation_check(A, spec));
    bool witnesses = true;
    for (long a : spec) witnesses = witnesses && kernel_witness(A, spec, a).has_value();
    record("eigenvalue witnesses", witnesses);

    std::size_t dim = A.rows();
    bool idem = true, traceless_ok = true, central = true;
    std::vector<WalledDiagram> generators;
    for (int a = 1; a <= args.m; ++a)
        for (int b = a + 1; b <= args.m; ++b)
            generators.push_back(generator_t(GeneratorKind::LeftTransposition, a, b, args.m, args.n));
    for (int a = 1; a <= args.n; ++a)
        for (int b = a + 1; b <= args.n; ++b)
            generators.push_back(generator_t(GeneratorKind::RightTransposition, a, b, args.m, args.n));
    for (int a = 1; a <= args.m; ++a)
        for (int b = 1; b <= args.n; ++b)
            generators.push_back(generator_t(GeneratorKind::Arc, a, b, args.m, args.n));

    for (std::size_t col = 0; col < dim; ++col) {
        Tensor e = Tensor::basis(args.m, args.n, args.N, col);
        Tensor pe = apply_projector(e, factors);
        if (!(apply_projector(pe, factors) == pe)) idem = false;
        for (int a = 1; a <= args.m && traceless_ok; ++a)
            for (int b = 1; b <= args.n; ++b)
                if (!trace(pe, a, b).is_zero()) {
                    traceless_ok = false;
                    break;
                }
        for (const WalledDiagram& gdiag : generators)
            if (!(apply_projector(diagram_action(gdiag, e), factors) == diagram_action(gdiag, pe)))
                central = false;
        if (!idem && !traceless_ok && !central) break;
    }
    record("projector idempotent", idem);
    record("projection traceless", traceless_ok);
    record("projector central", central);

    json report{{"m", args.m}, {"n", args.n}, {"N", args.N},
                {"spectrum", spectrum_to_json(spec)}, {"checks", checks}, {"pass", ok}};
    std::cout << report.dump() << "\n";
    return ok ? 0 : kExitVerifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"GL(N)-equivariant traceless projection of mixed tensor products"};
    app.require_subcommand(1);

    SpectrumArgs specArgs;
    auto* cmdSpectrum = app.add_subcommand("spectrum", "eigenvalues of A_{m,n} on V^{m,n}");
    cmdSpectrum->add_option("-m", specArgs.m, "contravariant slots")->required();
    cmdSpectrum->add_option("-n", specArgs.n, "covariant slots")->required();
    cmdSpectrum->add_option("-N", specArgs.N, "dimension of V")->required();
    cmdSpectrum->add_flag("--formula", specArgs.formula, "print the factorized projector instead");

    RestrictedArgs resArgs;
    auto* cmdRestricted =
        app.add_subcommand("restricted", "minimal factor set I(rho, sigma)");
    cmdRestricted->add_option("--rho", resArgs.rho, "partition of m, e.g. 2,1")->required();
    cmdRestricted->add_option("--sigma", resArgs.sigma, "partition of n")->required();
    cmdRestricted->add_option("-N", resArgs.N, "dimension of V")->required();
    cmdRestricted->add_flag("--formula", resArgs.formula, "print the factorized projector instead");

    SpectrumArgs tildeArgs;
    auto* cmdTilde = app.add_subcommand("tilde", "alternative spectrum with saturation flag");
    cmdTilde->add_option("-m", tildeArgs.m)->required();
    cmdTilde->add_option("-n", tildeArgs.n)->required();
    cmdTilde->add_option("-N", tildeArgs.N)->required();

    LrArgs lrArgs;
    auto* cmdLr = app.add_subcommand("lrcoef", "Littlewood-Richardson coefficient");
    cmdLr->add_option("--gamma", lrArgs.gamma)->required();
    cmdLr->add_option("--alpha", lrArgs.alpha)->required();
    cmdLr->add_option("--beta", lrArgs.beta)->required();

    BranchArgs brArgs;
    auto* cmdBranch = app.add_subcommand("branch", "branching coefficient c^{mu,nu}_{rho,sigma}(N)");
    cmdBranch->add_option("--rho", brArgs.rho)->required();
    cmdBranch->add_option("--sigma", brArgs.sigma)->required();
    cmdBranch->add_option("--mu", brArgs.mu)->required();
    cmdBranch->add_option("--nu", brArgs.nu)->required();
    cmdBranch->add_option("-N", brArgs.N)->required();
    cmdBranch->add_flag("--bound", brArgs.bound, "print the Littlewood-Richardson upper bound");

    WbArgs wbArgs;
    auto* cmdWb = app.add_subcommand("wb-idempotent", "splitting idempotent P_{m,n} in B_{m,n}(delta)");
    cmdWb->add_option("-m", wbArgs.m)->required();
    cmdWb->add_option("-n", wbArgs.n)->required();
    cmdWb->add_option("--delta", wbArgs.delta, "rational, e.g. 22/7")->required();

    ApplyArgs applyArgs;
    auto* cmdApply = app.add_subcommand("apply", "apply the traceless projector to a tensor file");
    cmdApply->add_option("--in", applyArgs.in, "tensor JSON file")->required();
    cmdApply->add_option("--rho", applyArgs.rho, "restrict to symmetry type rho");
    cmdApply->add_option("--sigma", applyArgs.sigma, "restrict to symmetry type sigma");
    cmdApply->add_flag("--float", applyArgs.asFloat, "emit floating-point output");

    HermitianArgs hermArgs;
    auto* cmdHerm = app.add_subcommand("apply-hermitian",
                                       "apply the projector through a hermitian metric");
    cmdHerm->add_option("--in", hermArgs.in, "tensor JSON file")->required();
    cmdHerm->add_option("--metric", hermArgs.metric, "metric JSON file")->required();

    VerifyArgs verArgs;
    auto* cmdVerify = app.add_subcommand("verify", "run the exact oracle suite for (m, n, N)");
    cmdVerify->add_option("-m", verArgs.m)->required();
    cmdVerify->add_option("-n", verArgs.n)->required();
    cmdVerify->add_option("-N", verArgs.N)->required();
    cmdVerify->add_option("--cap", verArgs.cap, "matrix dimension cap");

    SpectrumArgs bmapArgs;
    auto* cmdBmap = app.add_subcommand("bmap-rank", "rank of the diagram action span");
    cmdBmap->add_option("-m", bmapArgs.m)->required();
    cmdBmap->add_option("-n", bmapArgs.n)->required();
    cmdBmap->add_option("-N", bmapArgs.N)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);   // --help
        emit_error(kExitValidation, e.what());
        return kExitValidation;
    }

    try {
        if (cmdSpectrum->parsed()) {
            std::set<long> spec = spec_a({specArgs.m, specArgs.n, specArgs.N});
            if (specArgs.formula)
                std::cout << formula_text(spec) << "\n";
            else
                std::cout << spectrum_to_json(spec).dump() << "\n";
        } else if (cmdRestricted->parsed()) {
            Partition rho = parse_partition(resArgs.rho);
            Partition sigma = parse_partition(resArgs.sigma);
            SpectrumRequest req{rho.size(), sigma.size(), resArgs.N};
            std::set<long> spec = restricted_spec(rho, sigma, req);
            if (resArgs.formula)
                std::cout << formula_text(spec) << "\n";
            else
                std::cout << spectrum_to_json(spec).dump() << "\n";
        } else if (cmdTilde->parsed()) {
            SpectrumRequest req{tildeArgs.m, tildeArgs.n, tildeArgs.N};
            json out{{"spec_tilde", spectrum_to_json(spec_a_tilde(req))},
                     {"saturated", is_saturated(req.m, req.n, req.N)}};
            std::cout << out.dump() << "\n";
        } else if (cmdLr->parsed()) {
            std::cout << lr_coefficient(parse_partition(lrArgs.gamma), parse_partition(lrArgs.alpha),
                                        parse_partition(lrArgs.beta))
                      << "\n";
        } else if (cmdBranch->parsed()) {
            Partition rho = parse_partition(brArgs.rho), sigma = parse_partition(brArgs.sigma);
            Partition mu = parse_partition(brArgs.mu), nu = parse_partition(brArgs.nu);
            if (brArgs.bound)
                std::cout << branch_upper_bound(rho, sigma, mu, nu, brArgs.N) << "\n";
            else
                std::cout << branch_coefficient({rho, sigma, mu, nu, brArgs.N}) << "\n";
        } else if (cmdWb->parsed()) {
            RationalElement p = element_p(wbArgs.m, wbArgs.n, parse_rational(wbArgs.delta));
            std::cout << element_to_json(p).dump() << "\n";
        } else if (cmdApply->parsed()) {
            return run_apply(applyArgs);
        } else if (cmdHerm->parsed()) {
            return run_apply_hermitian(hermArgs);
        } else if (cmdVerify->parsed()) {
            return run_verify(verArgs);
        } else if (cmdBmap->parsed()) {
            std::cout << bmap_rank(bmapArgs.m, bmapArgs.n, bmapArgs.N) << "\n";
        }
    } catch (const math_error& e) {
        emit_error(kExitRefusal, e.what());
        return kExitRefusal;
    } catch (const std::exception& e) {
        emit_error(kExitValidation, e.what());
        return kExitValidation;
    }
    return 0;
}
