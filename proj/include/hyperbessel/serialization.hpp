#pragma once

/**
 * @file serialization.hpp
 * @brief JSON and CSV forms of the library types.
 *
 * Series:      {"r", "gamma": [["num","den"],...], "basis": "normalized",
 *               "coeffs": [[re,im],...]}          (floating mode)
 *               coeffs entries are ["p/q","p/q"]  (exact mode)
 * Functional:  {"r", "gamma", "moments": [[re,im],...],
 *               "certificate": {"C","a","source"} | null}
 * Operator:    {"r", "gamma", "symbol": [[re,im],...], "certificate": ...}
 * CSV columns are fixed and locale-independent; doubles print with 17
 * significant digits so outputs are byte-reproducible.
 */

#include <json.hpp>

#include <complex>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "hyperbessel/dynamics.hpp"
#include "hyperbessel/functional.hpp"
#include "hyperbessel/numerics.hpp"
#include "hyperbessel/series.hpp"
#include "hyperbessel/vector_index.hpp"

namespace hb {

using Json = nlohmann::ordered_json;

// -- vector index -----------------------------------------------------------

inline Json vi_to_json(const VectorIndex& vi) {
    Json g = Json::array();
    for (const Rational& q : vi.gamma())
        g.push_back({numerator(q).str(), denominator(q).str()});
    return Json{{"r", vi.r()}, {"gamma", g}};
}

inline VectorIndex vi_from_json(const Json& j) {
    if (!j.contains("r") || !j.contains("gamma"))
        throw ArgumentError("vi_from_json: need fields 'r' and 'gamma'");
    std::vector<Rational> gamma;
    for (const auto& e : j.at("gamma")) {
        if (e.is_array() && e.size() == 2)
            gamma.push_back(Rational(Integer(e.at(0).get<std::string>()),
                                     Integer(e.at(1).get<std::string>())));
        else
            gamma.push_back(rational_from_string(e.get<std::string>()));
    }
    return VectorIndex(j.at("r").get<int>(), std::move(gamma));
}

// -- scalars ----------------------------------------------------------------

inline Json scalar_to_json(const std::complex<double>& z) { return Json{z.real(), z.imag()}; }
inline Json scalar_to_json(const QComplex& z) { return Json{to_string(z.re), to_string(z.im)}; }

inline void scalar_from_json(const Json& j, std::complex<double>& out) {
    out = {j.at(0).get<double>(), j.at(1).get<double>()};
}
inline void scalar_from_json(const Json& j, QComplex& out) {
    out = QComplex(rational_from_string(j.at(0).get<std::string>()),
                   rational_from_string(j.at(1).get<std::string>()));
}

// -- certificates -----------------------------------------------------------

inline Json certificate_to_json(const ExpTypeCertificate& c) {
    return Json{{"C", c.C},
                {"a", c.a},
                {"source", c.source == ExpTypeCertificate::Source::declared ? "declared" : "fitted"}};
}

inline ExpTypeCertificate certificate_from_json(const Json& j) {
    auto src = j.value("source", "declared") == std::string("fitted")
                   ? ExpTypeCertificate::Source::fitted
                   : ExpTypeCertificate::Source::declared;
    return ExpTypeCertificate(j.at("C").get<double>(), j.at("a").get<double>(), src);
}

// -- series -----------------------------------------------------------------

template <class Scalar>
Json series_to_json(const REvenSeries<Scalar>& u) {
    Json j = vi_to_json(u.vi());
    j["basis"] = "normalized";
    Json coeffs = Json::array();
    for (const Scalar& c : u.coefficients()) coeffs.push_back(scalar_to_json(c));
    j["coeffs"] = coeffs;
    if (u.type_certificate()) j["certificate"] = certificate_to_json(*u.type_certificate());
    return j;
}

template <class Scalar>
REvenSeries<Scalar> series_from_json(const Json& j) {
    VectorIndex vi = vi_from_json(j);
    if (j.value("basis", "normalized") != std::string("normalized"))
        throw ArgumentError("series_from_json: unknown basis");
    std::vector<Scalar> coeffs;
    for (const auto& e : j.at("coeffs")) {
        Scalar c;
        scalar_from_json(e, c);
        coeffs.push_back(std::move(c));
    }
    REvenSeries<Scalar> out(std::move(vi), std::move(coeffs));
    if (j.contains("certificate") && !j.at("certificate").is_null())
        out = out.with_certificate(certificate_from_json(j.at("certificate")));
    return out;
}

// -- moment functionals -----------------------------------------------------

template <class Scalar>
Json functional_to_json(const MomentFunctional<Scalar>& f) {
    Json j = vi_to_json(f.vi());
    Json m = Json::array();
    for (const Scalar& t : f.moments()) m.push_back(scalar_to_json(t));
    j["moments"] = m;
    j["certificate"] = f.certificate() ? certificate_to_json(*f.certificate()) : Json(nullptr);
    return j;
}

template <class Scalar>
MomentFunctional<Scalar> functional_from_json(const Json& j) {
    VectorIndex vi = vi_from_json(j);
    std::vector<Scalar> moments;
    for (const auto& e : j.at("moments")) {
        Scalar t;
        scalar_from_json(e, t);
        moments.push_back(std::move(t));
    }
    std::optional<ExpTypeCertificate> cert;
    if (j.contains("certificate") && !j.at("certificate").is_null())
        cert = certificate_from_json(j.at("certificate"));
    return MomentFunctional<Scalar>(std::move(vi), std::move(moments), cert);
}

// -- operators ---------------------------------------------------------------

template <class Scalar>
Json operator_to_json(const ConvolutionOperator<Scalar>& op) {
    Json j = vi_to_json(op.vi());
    Json b = Json::array();
    for (const Scalar& c : op.symbol()) b.push_back(scalar_to_json(c));
    j["symbol"] = b;
    j["certificate"] = certificate_to_json(op.certificate());
    return j;
}

template <class Scalar>
ConvolutionOperator<Scalar> operator_from_json(const Json& j) {
    VectorIndex vi = vi_from_json(j);
    std::vector<Scalar> b;
    for (const auto& e : j.at("symbol")) {
        Scalar c;
        scalar_from_json(e, c);
        b.push_back(std::move(c));
    }
    std::optional<ExpTypeCertificate> cert;
    if (j.contains("certificate") && !j.at("certificate").is_null())
        cert = certificate_from_json(j.at("certificate"));
    return ConvolutionOperator<Scalar>(std::move(vi), std::move(b), cert);
}

// -- chaos certificates -------------------------------------------------------

inline Json chaos_certificate_to_json(const ChaosCertificate& c) {
    Json j;
    j["operator"] = operator_to_json(c.op);
    j["refusal"] = c.refusal;
    if (c.refusal) {
        j["refusal_reason"] = c.refusal_reason;
        return j;
    }
    auto samples = [](const std::vector<GsSample>& v) {
        Json a = Json::array();
        for (const auto& s : v)
            a.push_back({{"lambda", scalar_to_json(s.lambda)},
                         {"psi", scalar_to_json(s.psi)},
                         {"abs_psi", std::abs(s.psi)}});
        return a;
    };
    j["a_samples"] = samples(c.a_samples);
    j["b_samples"] = samples(c.b_samples);
    Json pp = Json::array();
    for (const auto& [alpha, recs] : c.periodic_points) {
        Json group;
        group["alpha"] = to_string(alpha);
        Json roots = Json::array();
        for (const auto& rec : recs)
            roots.push_back({{"lambda", scalar_to_json(rec.lambda)},
                             {"period", rec.period},
                             {"newton_residual", rec.newton_residual},
                             {"orbit_residual", rec.orbit_residual}});
        group["roots"] = roots;
        pp.push_back(group);
    }
    j["periodic_points"] = pp;
    j["newton_tol"] = c.newton_tol;
    j["orbit_tol"] = c.orbit_tol;
    if (c.transitivity) {
        const auto& t = *c.transitivity;
        j["transitivity"] = Json{{"epsilon", t.epsilon},
                                 {"radius", t.radius},
                                 {"iterates", t.iterates},
                                 {"residual_start", t.residual_start},
                                 {"residual_end", t.residual_end},
                                 {"nodes_per_set", t.nodes_per_set},
                                 {"witness", series_to_json(t.witness)}};
    }
    return j;
}

// -- CSV --------------------------------------------------------------------

inline std::string csv_eval_header() { return "z_re,z_im,val_re,val_im,bound,N_used"; }

inline std::string csv_eval_row(std::complex<double> z, const JEvalResult& r) {
    std::ostringstream os;
    os << fmt17(z.real()) << ',' << fmt17(z.imag()) << ',' << fmt17(r.value.real()) << ','
       << fmt17(r.value.imag()) << ',' << fmt17(r.bound) << ',' << r.n_used;
    return os.str();
}

inline std::string csv_density(const std::vector<std::complex<double>>& lambdas,
                               const DensityResult& d) {
    std::ostringstream os;
    os << "lambda_re,lambda_im,c_re,c_im\n";
    for (size_t i = 0; i < lambdas.size(); ++i)
        os << fmt17(lambdas[i].real()) << ',' << fmt17(lambdas[i].imag()) << ','
           << fmt17(d.coefficients[i].real()) << ',' << fmt17(d.coefficients[i].imag()) << '\n';
    os << "residual," << fmt17(d.residual) << '\n';
    return os.str();
}

/// Psi over a polar grid, for external plotting.
template <class Scalar>
std::string csv_psi_grid(const ConvolutionOperator<Scalar>& op, const GsGrid& grid) {
    std::ostringstream os;
    os << "lambda_re,lambda_im,psi_re,psi_im,abs_psi\n";
    for (const auto& lambda : detail::polar_grid(grid)) {
        std::complex<double> psi = symbol_eigenvalue(op, lambda);
        os << fmt17(lambda.real()) << ',' << fmt17(lambda.imag()) << ',' << fmt17(psi.real())
           << ',' << fmt17(psi.imag()) << ',' << fmt17(std::abs(psi)) << '\n';
    }
    return os.str();
}

inline void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw ArgumentError("cannot open output file: " + path);
    os << content;
}

} // namespace hb
