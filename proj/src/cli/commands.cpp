#include <algorithm>
#include <functional>
#include <map>

#include "hodgejac/errors.hpp"
#include "hodgejac/hodge.hpp"
#include "hodgejac/ivhs.hpp"
#include "hodgejac/jet.hpp"
#include "internal.hpp"

namespace hodgejac::cli {

namespace detail {

json scalar_json(const Scalar& s) { return s.to_string(); }

json vector_json(const Vector& v) {
    json out = json::array();
    for (const auto& s : v) out.push_back(scalar_json(s));
    return out;
}

json matrix_json(const ExactMatrix& m) {
    json out = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(scalar_json(m(i, j)));
        out.push_back(std::move(row));
    }
    return out;
}

json basis_json(const std::vector<Monomial>& basis) {
    json out = json::array();
    for (const auto& m : basis) out.push_back(m.to_string());
    return out;
}

GradedPolynomial Session::parse(const std::string& text, int expected_degree) const {
    ParseOptions opts;
    opts.nvars = f.nvars();
    opts.zero_degree = expected_degree;
    return parse_polynomial(text, Field::rationals(), opts).to_field(field);
}

Session open_session(const std::string& f_text, const Field& field, std::optional<std::size_t> nvars) {
    ParseOptions opts;
    opts.nvars = nvars;
    GradedPolynomial rational = parse_polynomial(f_text, Field::rationals(), opts);
    Session s{field, rational.to_field(field), nullptr};
    std::optional<GradedPolynomial> source;
    if (field.is_prime()) source = rational;
    s.ring = std::make_unique<JacobianRing>(Hypersurface(s.f, std::move(source)));
    return s;
}

Session open_session(const JobConfig& config) {
    if (!config.f) throw InputError("--f is required for '" + config.command + "'");
    const Field field = Field::parse(config.field);
    check_prime_margin(config, field);
    return open_session(*config.f, field, config.nvars);
}

void check_prime_margin(const JobConfig& config, const Field& field) {
    if (!field.is_prime()) return;
    mpz_class largest = 1;
    for (const auto* text : {&config.f, &config.g, &config.h, &config.k, &config.P}) {
        if (!*text) continue;
        ParseOptions opts;
        opts.nvars = config.nvars;
        // variable checks happen later against f; only coefficients matter here
        opts.nvars.reset();
        const auto p = parse_polynomial(**text, Field::rationals(), opts);
        for (const auto& [m, c] : p.terms()) {
            largest = std::max(largest, mpz_class(abs(c.rational().get_num())));
            largest = std::max(largest, mpz_class(c.rational().get_den()));
        }
    }
    const mpz_class bound = largest * 2 * static_cast<unsigned long>(kPrimeSafetyFactor);
    if (mpz_class(static_cast<unsigned long>(field.modulus())) <= bound) {
        throw BadPrimeError("modulus " + std::to_string(field.modulus()) + " is too small for input coefficients up to " +
                            largest.get_str() + " (need p > 2 * " + largest.get_str() + " * " +
                            std::to_string(kPrimeSafetyFactor) + ")");
    }
}

GradedPolynomial Rng::form(std::size_t nvars, int degree, const Field& field, long bound) {
    GradedPolynomial p(nvars, degree, field);
    for (const auto& m : monomials_of_degree(nvars, degree)) p.add_term(m, Scalar(uniform(-bound, bound), field));
    return p;
}

}  // namespace detail

namespace {

using detail::json;

json header(const JobConfig& config, const detail::Session& s) {
    const auto& h = s.ring->hypersurface();
    json out;
    out["command"] = config.command;
    out["field"] = s.field.name();
    out["f"] = s.f.to_string();
    out["nvars"] = h.nvars();
    out["n"] = h.dimension();
    out["d"] = h.degree();
    out["sigma"] = s.ring->socle_degree();
    return out;
}

const std::string& require(const std::optional<std::string>& value, const char* flag) {
    if (!value) throw InputError(std::string("missing required flag ") + flag);
    return *value;
}

json cmd_hodge(const JobConfig& config) {
    const auto s = detail::open_session(config);
    const auto& ring = *s.ring;
    const auto& h = ring.hypersurface();
    const auto numbers = primitive_hodge_numbers(ring);
    json out = header(config, s);
    const auto t = hodge_piece_degrees(h.dimension(), h.degree());
    out["t"] = t;
    out["hodge_numbers"] = numbers.h;
    out["total"] = numbers.total();
    json pieces = json::array();
    for (int q = 0; q <= h.dimension(); ++q) {
        json piece;
        piece["q"] = q;
        piece["degree"] = t[q];
        piece["ambient_dim"] = ring.ambient_dim(t[q]);
        piece["ideal_rank"] = ring.ideal_rank(t[q]);
        piece["dim"] = ring.dim(t[q]);
        pieces.push_back(std::move(piece));
    }
    out["pieces"] = std::move(pieces);
    out["primitive_only"] = true;
    out["note"] = "primitive cohomology only; hyperplane classes in even dimension are not included";
    return out;
}

json cmd_smooth(const JobConfig& config, int& exit_code) {
    const auto s = detail::open_session(config);
    const auto& ring = *s.ring;
    json out = header(config, s);
    const int sigma = ring.socle_degree();
    out["dim_sigma"] = sigma >= 0 ? ring.dim(sigma) : 0;
    out["dim_sigma_plus_1"] = ring.dim(sigma + 1);
    bool smooth = true;
    try {
        ring.require_smooth();
    } catch (const NotSmoothError&) {
        smooth = false;
    }
    out["smooth"] = smooth;
    if (!smooth) exit_code = kNotSmooth;
    return out;
}

json block_json(int source_q, int target_q, int source_degree, int target_degree, long coefficient,
                const ExactMatrix& m) {
    json b;
    b["source_q"] = source_q;
    b["target_q"] = target_q;
    b["source_degree"] = source_degree;
    b["target_degree"] = target_degree;
    b["rows"] = m.rows();
    b["cols"] = m.cols();
    b["coefficient"] = coefficient;
    b["matrix"] = detail::matrix_json(m);
    return b;
}

json bases_json(const JacobianRing& ring, const std::vector<int>& degrees) {
    json out;
    for (int t : degrees) out[std::to_string(t)] = detail::basis_json(ring.quotient_basis(t));
    return out;
}

json degrees_json(const std::set<int>& degrees) { return json(std::vector<int>(degrees.begin(), degrees.end())); }

json cmd_ivhs(const JobConfig& config) {
    const auto s = detail::open_session(config);
    const auto& ring = *s.ring;
    const auto& h = ring.hypersurface();
    const auto g = make_tangent(ring, s.parse(require(config.g, "--g"), h.degree()));
    const auto norm = config.raw ? Normalization::Raw : Normalization::Normalized;
    const auto op = ivhs_operator(ring, g, norm);
    const auto t = hodge_piece_degrees(h.dimension(), h.degree());

    json out = header(config, s);
    out["raw"] = config.raw;
    out["g"] = g.g.to_string();
    out["g_class"] = detail::vector_json(g.reduced.coords);
    out["bases"] = bases_json(ring, t);
    json blocks = json::array();
    for (int q = 0; q < op.dimension(); ++q) {
        blocks.push_back(block_json(q, q + 1, t[q], t[q + 1], config.raw ? 1 : -(q + 1), op.block(q)));
    }
    out["blocks"] = std::move(blocks);
    out["block_degrees"] = degrees_json(block_degrees(op.as_endomorphism()));
    return out;
}

json cmd_sff(const JobConfig& config, int& exit_code) {
    const auto s = detail::open_session(config);
    const auto& ring = *s.ring;
    const auto& h = ring.hypersurface();
    const auto u = make_tangent(ring, s.parse(require(config.g, "--g/--u"), h.degree()));
    const auto v = make_tangent(ring, s.parse(require(config.h, "--h/--v"), h.degree()));
    const auto norm = config.raw ? Normalization::Raw : Normalization::Normalized;
    const auto sff = second_fundamental_form(ring, u, v, norm);
    const bool symmetric = sff == second_fundamental_form(ring, v, u, norm);
    const bool composes = sff == compose_ivhs(ivhs_operator(ring, v, norm), ivhs_operator(ring, u, norm));
    const auto t = hodge_piece_degrees(h.dimension(), h.degree());

    json out = header(config, s);
    out["raw"] = config.raw;
    out["u"] = u.g.to_string();
    out["v"] = v.g.to_string();
    out["bases"] = bases_json(ring, t);
    json blocks = json::array();
    for (const auto& [key, m] : sff.blocks()) {
        const int q = key.first;
        blocks.push_back(block_json(q, key.second, t[q], t[key.second], config.raw ? 1 : (q + 1) * (q + 2), m));
    }
    out["blocks"] = std::move(blocks);
    out["block_degrees"] = degrees_json(block_degrees(sff));
    out["symmetry_checked"] = symmetric;
    out["composition_checked"] = composes;
    if (!symmetric || !composes) exit_code = kInvariantViolation;
    return out;
}

json class_json(const ResidueClass& c) {
    json out;
    out["hodge_index"] = c.hodge_index;
    out["degree"] = c.element.degree;
    out["coordinates"] = detail::vector_json(c.element.coords);
    return out;
}

json cmd_jet(const JobConfig& config, int& exit_code) {
    const auto s = detail::open_session(config);
    const auto& ring = *s.ring;
    const auto& h = ring.hypersurface();
    const int d = h.degree();
    const int q = config.q.value_or(0);
    const int t = hodge_piece_degree(h.dimension(), d, q);
    const FamilyJet jet{s.parse(require(config.g, "--g"), d), s.parse(require(config.h, "--h"), d),
                        s.parse(require(config.k, "--k"), d)};
    const auto p = s.parse(require(config.P, "--P"), t);
    if (p.degree() != t) {
        throw DegreeMismatchError("--P must have degree t(q) = (q+1)d-(n+2) = " + std::to_string(t) + " for q = " +
                                      std::to_string(q),
                                  t, p.degree());
    }
    const auto dec = jet_second_derivative(ring, jet, p, q);
    const auto witness = first_term_in_tangent_image(ring, dec, p, q);

    bool matches = true;
    if (q + 2 <= h.dimension()) {
        const auto sff = second_fundamental_form(ring, make_tangent(ring, jet.g), make_tangent(ring, jet.h));
        matches = sff.apply(q, q + 2, ring.normal_form(p).coords) == dec.second_term.element.coords;
    } else {
        matches = dec.second_term.is_zero();
    }

    json out = header(config, s);
    out["q"] = q;
    out["t_q"] = t;
    out["P"] = p.to_string();
    out["P_class"] = detail::vector_json(ring.normal_form(p).coords);
    out["g"] = jet.g.to_string();
    out["h"] = jet.h.to_string();
    out["k"] = jet.k.to_string();
    out["first_term"] = class_json(dec.first_term);
    out["second_term"] = class_json(dec.second_term);
    out["first_term_in_tangent_image"] = witness.member;
    json w;
    w["coefficients"] = detail::vector_json(witness.coefficients);
    w["tangent"] = witness.tangent.to_string();
    w["tangent_basis"] = detail::basis_json(ring.quotient_basis(d));
    out["witness"] = std::move(w);
    out["second_term_matches_sff"] = matches;
    if (!witness.member || !matches) exit_code = kInvariantViolation;
    return out;
}

json cmd_duality(const JobConfig& config) {
    const auto s = detail::open_session(config);
    const auto& ring = *s.ring;
    if (!config.degree) throw InputError("missing required flag --degree");
    const int k = *config.degree;
    const auto m = duality_pairing_matrix(ring, k);
    json out = header(config, s);
    out["degree"] = k;
    out["dual_degree"] = ring.socle_degree() - k;
    out["socle_basis"] = detail::basis_json(ring.quotient_basis(ring.socle_degree()));
    out["left_basis"] = detail::basis_json(ring.quotient_basis(k));
    out["right_basis"] = detail::basis_json(ring.quotient_basis(ring.socle_degree() - k));
    out["rows"] = m.rows();
    out["cols"] = m.cols();
    out["matrix"] = detail::matrix_json(m);
    const auto r = rank(m);
    out["rank"] = r;
    out["perfect"] = r == m.rows() && r == m.cols();
    return out;
}

json error_json(const char* kind, const std::string& message) {
    json out;
    out["error"]["kind"] = kind;
    out["error"]["message"] = message;
    return out;
}

}  // namespace

CommandResult run(const JobConfig& config) {
    CommandResult result;
    try {
        const std::string& c = config.command;
        if (c == "hodge") {
            result.report = cmd_hodge(config);
        } else if (c == "smooth") {
            result.report = cmd_smooth(config, result.exit_code);
        } else if (c == "ivhs") {
            result.report = cmd_ivhs(config);
        } else if (c == "sff") {
            result.report = cmd_sff(config, result.exit_code);
        } else if (c == "jet") {
            result.report = cmd_jet(config, result.exit_code);
        } else if (c == "duality") {
            result.report = cmd_duality(config);
        } else if (c == "verify") {
            result.report = detail::verify(config, result.exit_code);
        } else {
            throw InputError("unknown command '" + c + "'");
        }
    } catch (const NotSmoothError& e) {
        result = {error_json("NotSmooth", e.what()), kNotSmooth};
    } catch (const BadPrimeError& e) {
        result = {error_json("BadPrime", e.what()), kBadPrime};
    } catch (const InvariantError& e) {
        result = {error_json("InvariantViolation", e.what()), kInvariantViolation};
    } catch (const InputError& e) {
        result = {error_json("InputError", e.what()), kInputError};
    }
    return result;
}

std::string render(const nlohmann::ordered_json& report) { return report.dump(2) + "\n"; }

}  // namespace hodgejac::cli
