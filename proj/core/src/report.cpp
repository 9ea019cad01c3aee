#include "binform/report.hpp"

#include "binform/autgroup.hpp"
#include "binform/covariants.hpp"
#include "binform/cremona.hpp"
#include "binform/factor.hpp"
#include "binform/fields.hpp"
#include "binform/mobius.hpp"
#include "binform/surfaces.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace binform {

using nlohmann::json;

namespace {

json j_rat(const Rat& v) { return to_string(v); }

json j_mat(const Mat2Q& m) {
    return json::array({json::array({j_rat(m.t1), j_rat(m.t2)}),
                        json::array({j_rat(m.t3), j_rat(m.t4)})});
}

json j_quadext(const QuadExt& v) { return v.str(); }

json j_mat(const Mat2E& m) {
    return json::array({json::array({j_quadext(m.t1), j_quadext(m.t2)}),
                        json::array({j_quadext(m.t3), j_quadext(m.t4)})});
}

json j_box(const ComplexBox& b, int bits) {
    return json{{"mid", {{"re", b.re.str(40)}, {"im", b.im.str(40)}}},
                {"rad", b.rad.str(6)},
                {"bits", bits}};
}

json j_boxmat(const BoxMat2& m, int bits) {
    return json::array({json::array({j_box(m.t1, bits), j_box(m.t2, bits)}),
                        json::array({j_box(m.t3, bits), j_box(m.t4, bits)})});
}

json j_group(const AutGroupResult& g) {
    json elems = json::array();
    for (const auto& e : g.elements) elems.push_back(j_mat(e));
    json gens = json::array();
    for (const auto& e : g.generators) gens.push_back(j_mat(e));
    return json{{"group", to_string(g.tag)},
                {"order", g.elements.size()},
                {"generators", gens},
                {"elements", elems},
                {"verified", g.verified}};
}

AutGroupResult classify(const BinaryForm& F) {
    return F.degree() == 3 ? aut_cubic(F) : aut_quartic(F);
}

std::set<Mat2Q> as_set(const std::vector<Mat2Q>& v) { return {v.begin(), v.end()}; }

json oracle_section(const BinaryForm& F, const ReportOptions& opts) {
    AutGroupResult cls = classify(F);
    AutGroupResult oracle = rational_automorphisms_bruteforce(F, opts.precision_bits, opts.height_bound);
    bool retried = false;
    if (as_set(cls.elements) != as_set(oracle.elements) && oracle.height_bound_exceeded) {
        // Possible reconstruction miss: retry once at a much larger height.
        oracle = rational_automorphisms_bruteforce(F, opts.precision_bits, Int("1000000000000"));
        retried = true;
    }
    bool agree = as_set(cls.elements) == as_set(oracle.elements);
    return json{{"classifier", to_string(cls.tag)},
                {"oracle", to_string(oracle.tag)},
                {"elements_match", agree},
                {"agree", agree && cls.tag == oracle.tag},
                {"height_bound_exceeded", oracle.height_bound_exceeded},
                {"retried_height_bound", retried}};
}

// Random unimodular integer matrices as products of elementary shears.
Mat2Q random_unimodular(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> shear(-3, 3);
    Mat2Q m = Mat2Q::identity();
    for (int i = 0; i < 3; ++i) {
        m = m * Mat2Q(1, shear(rng), 0, 1);
        m = m * Mat2Q(1, 0, shear(rng), 1);
    }
    return m;
}

json conjugation_checks(const BinaryForm& F, const ReportOptions& opts) {
    std::mt19937_64 rng(opts.seed);
    AutGroupResult base = classify(F);
    json checks = json::array();
    for (int trial = 0; trial < 3; ++trial) {
        Mat2Q T = random_unimodular(rng);
        BinaryForm FT = substitute(F, T);
        AutGroupResult conj = classify(FT);
        std::set<Mat2Q> expected;
        Mat2Q Tinv = T.inverse();
        for (const auto& g : base.elements) expected.insert(Tinv * g * T);
        bool ok = expected == as_set(conj.elements);
        checks.push_back(json{{"matrix", j_mat(T)}, {"pass", ok}});
    }
    return checks;
}

}  // namespace

json json_form(const BinaryForm& F) {
    json coeffs = json::array();
    for (const Rat& c : F.coeffs()) coeffs.push_back(j_rat(c));
    return json{{"degree", F.degree()}, {"coeffs", coeffs}, {"text", F.str()}};
}

json json_invariants(const BinaryForm& F) {
    json out{{"disc", j_rat(discriminant(F))}};
    if (F.degree() == 4) {
        out["I"] = j_rat(invariant_I(F));
        out["J"] = j_rat(invariant_J(F));
    }
    return out;
}

json json_covariants(const BinaryForm& F, const ReportOptions& opts) {
    json out;
    if (F.degree() == 3) {
        BinaryForm q = hessian(F);
        out["hessian"] = json_form(q);
        json julia = json::array();
        BinaryForm prim = F.primitive().form;
        Mat2Q S = leading_shift(prim);
        BinaryForm G = substitute(prim, S);
        for (const ProjRootQ& r : rational_proj_roots(G)) {
            if (r.infinite) continue;
            julia.push_back(json{{"theta", j_rat(r.value)},
                                 {"form", json_form(julia_covariant(G, r.value))},
                                 {"shifted", S != Mat2Q::identity()}});
        }
        out["julia"] = julia;
    } else if (F.degree() == 4) {
        BinaryForm f6 = sextic_covariant(F);
        out["sextic"] = json_form(f6);
        out["klein"] = is_klein_form(f6);
        json sig = json::array();
        for (const SigFactor& s : significant_quadratic_factors(F))
            sig.push_back(json{{"form", json_form(s.form)},
                               {"disc", j_rat(s.disc)},
                               {"rationally_good", s.rationally_good}});
        out["significant_factors"] = sig;
        CremonaSet cre = cremona_covariants_numeric(F, opts.precision_bits);
        json cov = json::array();
        for (const auto& c : cre.cov)
            cov.push_back(json{{"a", j_box(c.a, cre.bits)},
                               {"b", j_box(c.b, cre.bits)},
                               {"c", j_box(c.c, cre.bits)},
                               {"disc", j_box(c.disc, cre.bits)}});
        out["cremona"] = json{{"chi", cre.chi}, {"bits", cre.bits}, {"covariants", cov}};
    }
    return out;
}

json json_aut(const BinaryForm& F, const ReportOptions& opts) {
    json out = j_group(classify(F));
    if (F.degree() == 4) {
        json real = json::array();
        for (const RealAutElement& e : aut_real_quartic(F, opts.precision_bits)) {
            json entry{{"numeric", j_boxmat(e.numeric, opts.precision_bits)},
                       {"mu4", e.mu4},
                       {"covariant_index", e.covariant_index}};
            if (e.exact) {
                entry["exact"] = j_mat(*e.exact);
                entry["exact_verified"] = e.exact_verified;
            }
            real.push_back(std::move(entry));
        }
        out["real_elements"] = real;
        out["chi"] = chi(F);
    }
    return out;
}

json json_pgl(const BinaryForm& F) {
    PGLClass cls = aut_pgl_class(F);
    return json{{"class", to_string(cls.tag)}, {"upsilon", cls.upsilon}};
}

json json_lines(const BinaryForm& F, const ReportOptions& opts) {
    std::vector<Line> lines = enumerate_lines(F, opts.precision_bits);
    json arr = json::array();
    for (const Line& l : lines) {
        json entry;
        if (l.kind == Line::RootLine) {
            entry["kind"] = "root";
            entry["j"] = l.j;
            entry["k"] = l.k;
            auto point = [&](const HomogPoint& p) {
                if (p.exact) return json{{"u", j_rat(p.u_exact)}, {"v", j_rat(p.v_exact)}};
                return json{{"u", j_box(p.u, opts.precision_bits)},
                            {"v", j_box(p.v, opts.precision_bits)}};
            };
            entry["psi_j"] = point(l.psi_j);
            entry["psi_k"] = point(l.psi_k);
        } else {
            entry["kind"] = "automorphism";
            entry["kernel_power"] = l.kernel_power;
            if (l.base_exact)
                entry["matrix"] = j_mat(*l.base_exact);
            else
                entry["matrix"] = j_boxmat(l.base_numeric, opts.precision_bits);
        }
        if (l.field_degree) {
            entry["field_degree"] = *l.field_degree;
            entry["field_degree_exact"] = l.field_degree_exact;
        }
        entry["exact"] = l.exact;
        arr.push_back(std::move(entry));
    }
    int ups = upsilon(F, F, opts.precision_bits);
    return json{{"count", lines.size()},
                {"upsilon", ups},
                {"root_lines", F.degree() * F.degree()},
                {"automorphism_lines", F.degree() * ups},
                {"lines", arr}};
}

json json_fields(const BinaryForm& F) {
    json out;
    if (F.degree() == 3) {
        GaloisClass g = cubic_galois(F);
        out["galois"] = g.str();
        out["splitting_degree"] = g.splitting_degree;
        out["line_field_degree"] = cubic_line_field_degree(F);
        out["line_field_degree_exact"] = true;
    } else {
        GaloisClass g = quartic_galois(F);
        out["galois"] = g.str();
        out["splitting_degree"] = g.splitting_degree;
        QuarticFieldDegree d = quartic_line_field_degree(F);
        out["line_field_degree"] = d.degree;
        out["line_field_degree_exact"] = d.exact;
        out["line_field_is_bound_for_all_lines"] = d.lines_bound;
        if (!d.lines_bound)
            out["note"] = "I*J = 0: no field-of-definition claim for the extra automorphism lines";
    }
    return out;
}

json json_oracle(const BinaryForm& F, const ReportOptions& opts) { return oracle_section(F, opts); }

json full_report(const BinaryForm& F, const ReportOptions& opts) {
    json out{{"schema", "binform-report/1"}, {"form", json_form(F)}};
    out["invariants"] = json_invariants(F);
    out["covariants"] = json_covariants(F, opts);
    out["aut"] = json_aut(F, opts);
    out["pgl"] = json_pgl(F);
    out["lines"] = json_lines(F, opts);
    out["fields"] = json_fields(F);
    if (opts.verify) {
        out["oracle"] = oracle_section(F, opts);
        out["conjugation_checks"] = conjugation_checks(F, opts);
    }
    return out;
}

namespace {

void render_section(std::ostringstream& os, const std::string& name, const json& j, int indent) {
    std::string pad(static_cast<std::size_t>(indent), ' ');
    if (j.is_object()) {
        os << pad << name << ":\n";
        for (auto it = j.begin(); it != j.end(); ++it) render_section(os, it.key(), it.value(), indent + 2);
    } else if (j.is_array()) {
        os << pad << name << ": [" << j.size() << " entries]\n";
        std::size_t shown = 0;
        for (const auto& item : j) {
            if (shown >= 12) {
                os << pad << "  ...\n";
                break;
            }
            render_section(os, "-", item, indent + 2);
            ++shown;
        }
    } else {
        os << pad << name << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

}  // namespace

std::string render_text(const json& report) {
    std::ostringstream os;
    for (auto it = report.begin(); it != report.end(); ++it)
        render_section(os, it.key(), it.value(), 0);
    return os.str();
}

}  // namespace binform
