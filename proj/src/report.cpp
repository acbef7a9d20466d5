#include "wavecoh/report.hpp"

#include <json.hpp>
#include <sstream>

#include "wavecoh/errors.hpp"

namespace wavecoh {

using ordered_json = nlohmann::ordered_json;

void RunConfig::validate() const {
    if (bits < 64) throw ParseError("--bits must be at least 64");
    if (!(tol_acceptance > 0) || !(tol_symbolic > 0)) throw ParseError("tolerances must be positive");
    if (tol_symbolic > tol_acceptance)
        throw ParseError("symbolic tolerance must not exceed the acceptance tolerance");
    if (format != "json" && format != "csv" && format != "text")
        throw ParseError("--format must be json, csv or text");
    if (n < 0) throw ParseError("--n must be nonnegative");
}

SpectralSummary summarize(const SpectralDatum& sd, long eig_index) {
    SpectralSummary s;
    s.eig_index = eig_index;
    s.b_re = sd.b.re.to_string();
    s.b_im = sd.b.im.to_string();
    s.b_multiplicity = sd.b_multiplicity;
    for (long k = 0; k <= sd.chi.degree(); ++k)
        s.chi.push_back(sd.chi.coeff(static_cast<std::size_t>(k)).to_string());
    s.chi_prime_re = sd.chi_prime_at_b.re.to_string();
    s.chi_prime_im = sd.chi_prime_at_b.im.to_string();
    s.c_re = sd.c_self.re.to_string();
    s.c_im = sd.c_self.im.to_string();
    for (long k = 0; k <= sd.p.degree(); ++k) {
        const Cplx& c = sd.p.coeff(static_cast<std::size_t>(k));
        s.p_monomial.emplace_back(c.re.to_string(), c.im.to_string());
    }
    for (const Cplx& c : sd.p_ebasis) s.p_ebasis.emplace_back(c.re.to_string(), c.im.to_string());
    s.ode_residual = sd.ode_residual.to_string();
    s.warnings = sd.warnings;
    return s;
}

namespace {
// Check residuals are diagnostics; 30 digits keep them readable while the
// truncation stays deterministic. Spectral data keeps full precision.
std::string short_decimal(const std::string& full) {
    std::size_t e = full.find('e');
    if (e == std::string::npos || e <= 32) return full;
    return full.substr(0, 32) + full.substr(e);
}
} // namespace

CheckRecord make_check(const std::string& name, const std::string& identity, bool pass,
                       const BigFloat& residual, const std::string& tolerance, long eig_index) {
    CheckRecord r;
    r.name = name;
    r.identity = identity;
    r.status = pass ? "pass" : "fail";
    r.residual = short_decimal(residual.to_string());
    r.tolerance = tolerance;
    r.eig_index = eig_index;
    return r;
}

bool VerificationReport::any_fail() const {
    for (const auto& c : checks)
        if (c.status == "fail") return true;
    return false;
}

namespace {

ordered_json cplx_json(const std::string& re, const std::string& im) {
    return ordered_json{{"re", re}, {"im", im}};
}

std::string gauss_rat_str(const GaussRat& a) { return a.to_string(); }

} // namespace

std::string VerificationReport::to_json() const {
    ordered_json j;
    j["schema_version"] = "1.0";
    ordered_json cfg;
    cfg["command"] = config.command;
    cfg["n"] = config.n;
    cfg["a"] = gauss_rat_str(config.a);
    cfg["eig"] = config.eig ? ordered_json(*config.eig) : ordered_json("all");
    cfg["bits"] = static_cast<long>(config.bits);
    {
        std::ostringstream t1, t2;
        t1 << config.tol_acceptance;
        t2 << config.tol_symbolic;
        cfg["tol_acceptance"] = t1.str();
        cfg["tol_symbolic"] = t2.str();
    }
    cfg["seed"] = config.seed;
    cfg["format"] = config.format;
    if (!config.reduce_input.empty()) cfg["input"] = config.reduce_input;
    j["config"] = cfg;

    for (const auto& [key, value] : extra) j[key] = value;

    ordered_json sds = ordered_json::array();
    for (const auto& s : spectral_data) {
        ordered_json e;
        e["eig_index"] = s.eig_index;
        e["b"] = cplx_json(s.b_re, s.b_im);
        e["b_multiplicity"] = s.b_multiplicity;
        e["chi"] = s.chi;
        e["chi_prime_at_b"] = cplx_json(s.chi_prime_re, s.chi_prime_im);
        e["c"] = cplx_json(s.c_re, s.c_im);
        ordered_json pm = ordered_json::array(), pe = ordered_json::array();
        for (const auto& [re, im] : s.p_monomial) pm.push_back(cplx_json(re, im));
        for (const auto& [re, im] : s.p_ebasis) pe.push_back(cplx_json(re, im));
        e["p_monomial"] = pm;
        e["p_ebasis"] = pe;
        e["ode_residual"] = s.ode_residual;
        e["warnings"] = s.warnings;
        sds.push_back(e);
    }
    j["spectral_data"] = sds;

    ordered_json cs = ordered_json::array();
    for (const auto& c : checks) {
        ordered_json e;
        e["name"] = c.name;
        e["identity"] = c.identity;
        e["status"] = c.status;
        e["residual"] = c.residual;
        e["tolerance"] = c.tolerance;
        if (c.eig_index >= 0) e["eig_index"] = c.eig_index;
        if (config.timings) e["ms"] = c.ms;
        cs.push_back(e);
    }
    j["checks"] = cs;
    return j.dump(2) + "\n";
}

std::string VerificationReport::to_csv() const {
    std::ostringstream out;
    out << "name,identity,status,residual,tolerance,eig_index\n";
    auto quote = [](const std::string& s) {
        if (s.find_first_of(",\"") == std::string::npos) return s;
        std::string q = "\"";
        for (char c : s) {
            if (c == '"') q += "\"\"";
            else q += c;
        }
        return q + "\"";
    };
    for (const auto& c : checks)
        out << quote(c.name) << ',' << quote(c.identity) << ',' << c.status << ',' << c.residual
            << ',' << c.tolerance << ',' << c.eig_index << '\n';
    return out.str();
}

std::string VerificationReport::to_text() const {
    std::ostringstream out;
    out << config.command << " n=" << config.n << " a=" << gauss_rat_str(config.a)
        << " bits=" << config.bits << "\n";
    for (const auto& [key, value] : extra) out << key << ": " << value << "\n";
    for (const auto& s : spectral_data) {
        out << "eigenvalue " << s.eig_index << ": b = " << s.b_re;
        if (s.b_im != "0") out << " + " << s.b_im << " i";
        out << (s.b_multiplicity > 1 ? "  (multiplicity " + std::to_string(s.b_multiplicity) + ")" : "")
            << "\n    c = " << s.c_re;
        if (s.c_im != "0") out << " + " << s.c_im << " i";
        out << "\n";
        for (const auto& w : s.warnings) out << "    warning: " << w << "\n";
    }
    std::size_t passed = 0, warned = 0, failed = 0;
    for (const auto& c : checks) {
        if (c.status == "pass") ++passed;
        else if (c.status == "warn") ++warned;
        else ++failed;
    }
    for (const auto& c : checks) {
        out << "  [" << (c.status == "pass" ? " ok " : c.status) << "] " << c.name;
        if (c.eig_index >= 0) out << " (eig " << c.eig_index << ")";
        out << "  residual " << c.residual << "  tol " << c.tolerance;
        if (config.timings) out << "  " << c.ms << " ms";
        out << "\n";
    }
    out << checks.size() << " checks: " << passed << " passed, " << warned << " warned, " << failed
        << " failed\n";
    return out.str();
}

std::string VerificationReport::render() const {
    if (config.format == "csv") return to_csv();
    if (config.format == "text") return to_text();
    return to_json();
}

} // namespace wavecoh
