#include <functional>

#include "hodgejac/errors.hpp"
#include "hodgejac/hodge.hpp"
#include "hodgejac/ivhs.hpp"
#include "hodgejac/jet.hpp"
#include "internal.hpp"

namespace hodgejac::cli::detail {

namespace {

std::string fermat(std::size_t nvars, int d) {
    std::string out;
    for (std::size_t i = 0; i < nvars; ++i) {
        if (i) out += " + ";
        out += "x" + std::to_string(i) + "^" + std::to_string(d);
    }
    return out;
}

class Recorder {
   public:
    void record(const std::string& suite, const std::string& name, bool passed, json detail = json::object()) {
        json c;
        c["suite"] = suite;
        c["name"] = name;
        c["passed"] = passed;
        if (!detail.empty()) c[passed ? "detail" : "counterexample"] = std::move(detail);
        (passed ? passed_ : failed_)++;
        checks_.push_back(std::move(c));
    }
    std::size_t passed() const { return passed_; }
    std::size_t failed() const { return failed_; }
    json take() { return std::move(checks_); }

   private:
    json checks_ = json::array();
    std::size_t passed_ = 0;
    std::size_t failed_ = 0;
};

void golden_suite(const Field& field, Recorder& rec) {
    struct Case {
        std::size_t nvars;
        int d;
        std::vector<std::size_t> h;
    };
    const std::vector<Case> cases = {
        {3, 3, {1, 1}}, {3, 4, {3, 3}}, {4, 3, {0, 6, 0}}, {4, 4, {1, 19, 1}}, {5, 3, {0, 5, 5, 0}}, {5, 5, {1, 101, 101, 1}},
    };
    for (const auto& c : cases) {
        const auto s = open_session(fermat(c.nvars, c.d), field, std::nullopt);
        const auto got = primitive_hodge_numbers(*s.ring).h;
        json detail;
        detail["f"] = s.f.to_string();
        detail["expected"] = c.h;
        detail["actual"] = got;
        rec.record("golden", "hodge_numbers/" + s.f.to_string(), got == c.h, std::move(detail));
    }

    struct SmoothCase {
        std::string f;
        std::size_t nvars;
        bool smooth;
    };
    const std::vector<SmoothCase> smooth_cases = {
        {"x0^3 + x1^3 + x2^3", 3, true},
        {"x0^3 + x1^3", 3, false},
        {"x0^2*x1 + x0*x1^2", 3, false},
        {"x0^4 + x1^4 + x2^4 + x3^4", 4, true},
    };
    for (const auto& c : smooth_cases) {
        const auto s = open_session(c.f, field, c.nvars);
        const bool got = s.ring->is_smooth();
        json detail;
        detail["f"] = c.f;
        detail["expected"] = c.smooth;
        detail["actual"] = got;
        rec.record("golden", "smoothness/" + c.f, got == c.smooth, std::move(detail));
    }

    {
        const auto s = open_session(fermat(3, 3), field, std::nullopt);
        const auto g = make_tangent(*s.ring, s.parse("x0*x1*x2", 3));
        const auto normalized = ivhs_operator(*s.ring, g).block(0);
        const auto raw = ivhs_operator(*s.ring, g, Normalization::Raw).block(0);
        const bool ok = normalized == ExactMatrix::from_ints({{-1}}, field) &&
                        raw == ExactMatrix::from_ints({{1}}, field);
        json detail;
        detail["normalized"] = matrix_json(normalized);
        detail["raw"] = matrix_json(raw);
        rec.record("golden", "ivhs/plane_cubic_x0*x1*x2", ok, std::move(detail));
    }

    {
        const auto s = open_session(fermat(4, 4), field, std::nullopt);
        const auto m = duality_pairing_matrix(*s.ring, 4);
        const auto r = rank(m);
        json detail;
        detail["rows"] = m.rows();
        detail["rank"] = r;
        rec.record("golden", "duality/quartic_k4", m.rows() == 19 && r == 19, std::move(detail));
    }
}

std::vector<int> nonnegative_pieces(const JacobianRing& ring) {
    const auto& h = ring.hypersurface();
    std::vector<int> qs;
    for (int q = 0; q <= h.dimension(); ++q) {
        if (hodge_piece_degree(h.dimension(), h.degree(), q) >= 0) qs.push_back(q);
    }
    return qs;
}

void properties_suite(const Session& s, int trials, Rng& rng, Recorder& rec) {
    const auto& ring = *s.ring;
    const auto& h = ring.hypersurface();
    const int n = h.dimension();
    const int d = h.degree();
    const int sigma = ring.socle_degree();
    const std::string tag = "/" + s.f.to_string();

    {
        bool ok = ring.dim(sigma) == 1;
        json bad = json::array();
        for (int k = 0; k <= sigma; ++k) {
            if (ring.dim(k) != ring.dim(sigma - k)) {
                ok = false;
                bad.push_back(k);
            }
        }
        json detail;
        detail["dim_socle"] = ring.dim(sigma);
        if (!ok) detail["asymmetric_degrees"] = std::move(bad);
        rec.record("properties", "gorenstein_symmetry" + tag, ok, std::move(detail));
    }
    {
        bool ok = true;
        json detail;
        for (int k = 0; k <= sigma && ok; ++k) {
            const auto m = duality_pairing_matrix(ring, k);
            if (rank(m) != m.rows() || m.rows() != m.cols()) {
                ok = false;
                detail["degree"] = k;
                detail["rows"] = m.rows();
                detail["cols"] = m.cols();
            }
        }
        rec.record("properties", "perfect_pairing" + tag, ok, std::move(detail));
    }

    const auto qs = nonnegative_pieces(ring);
    for (int trial = 0; trial < trials; ++trial) {
        const auto u = make_tangent(ring, rng.form(h.nvars(), d, s.field));
        const auto v = make_tangent(ring, rng.form(h.nvars(), d, s.field));
        const auto uv = second_fundamental_form(ring, u, v);
        const bool composes = uv == compose_ivhs(ivhs_operator(ring, v), ivhs_operator(ring, u));
        const bool symmetric = uv == second_fundamental_form(ring, v, u);
        const auto degrees = block_degrees(uv);
        const auto ivhs_degrees = block_degrees(ivhs_operator(ring, u).as_endomorphism());
        const bool graded = std::includes(std::set<int>{2}.begin(), std::set<int>{2}.end(), degrees.begin(),
                                          degrees.end()) &&
                            std::includes(std::set<int>{1}.begin(), std::set<int>{1}.end(), ivhs_degrees.begin(),
                                          ivhs_degrees.end());
        const bool ok = composes && symmetric && graded;
        json detail;
        if (!ok) {
            detail["u"] = u.g.to_string();
            detail["v"] = v.g.to_string();
            detail["composition"] = composes;
            detail["symmetry"] = symmetric;
            detail["block_degrees"] = std::vector<int>(degrees.begin(), degrees.end());
        }
        rec.record("properties", "sff_identity" + tag + "/trial" + std::to_string(trial), ok, std::move(detail));
    }

    for (int trial = 0; trial < trials && !qs.empty(); ++trial) {
        const int q = qs[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(qs.size()) - 1))];
        const int t = hodge_piece_degree(n, d, q);
        const FamilyJet jet{rng.form(h.nvars(), d, s.field), rng.form(h.nvars(), d, s.field),
                            rng.form(h.nvars(), d, s.field)};
        const auto p = rng.form(h.nvars(), t, s.field);
        const auto dec = jet_second_derivative(ring, jet, p, q);
        const auto witness = first_term_in_tangent_image(ring, dec, p, q);
        bool matches = dec.second_term.is_zero();
        if (q + 2 <= n) {
            const auto sff = second_fundamental_form(ring, make_tangent(ring, jet.g), make_tangent(ring, jet.h));
            matches = sff.apply(q, q + 2, ring.normal_form(p).coords) == dec.second_term.element.coords;
        }
        bool tangent_ok = witness.member;
        if (tangent_ok && q + 1 <= n) {
            const auto expected = ivhs_operator(ring, make_tangent(ring, witness.tangent))
                                      .block(q)
                                      .apply(ring.normal_form(p).coords);
            tangent_ok = expected == dec.first_term.element.coords;
        }
        const bool ok = tangent_ok && matches;
        json detail;
        if (!ok) {
            detail["q"] = q;
            detail["g"] = jet.g.to_string();
            detail["h"] = jet.h.to_string();
            detail["k"] = jet.k.to_string();
            detail["P"] = p.to_string();
            detail["first_term_in_tangent_image"] = tangent_ok;
            detail["second_term_matches_sff"] = matches;
        }
        rec.record("properties", "jet_decomposition" + tag + "/trial" + std::to_string(trial), ok, std::move(detail));
    }
}

}  // namespace

json verify(const JobConfig& config, int& exit_code) {
    if (config.suite != "all" && config.suite != "golden" && config.suite != "properties") {
        throw InputError("unknown suite '" + config.suite + "' (expected golden, properties or all)");
    }
    if (config.trials < 0) throw InputError("--trials must be non-negative");
    const Field field = Field::parse(config.field);
    check_prime_margin(config, field);

    std::optional<Session> user;
    if (config.f) {
        user.emplace(open_session(*config.f, field, config.nvars));
        user->ring->require_smooth();
    }

    Recorder rec;
    Rng rng(config.seed);
    if (config.suite != "properties") golden_suite(field, rec);
    if (config.suite != "golden") {
        if (user) {
            properties_suite(*user, config.trials, rng, rec);
        } else {
            properties_suite(open_session(fermat(4, 4), field, std::nullopt), config.trials, rng, rec);
            properties_suite(open_session(fermat(5, 3), field, std::nullopt), config.trials, rng, rec);
        }
    }

    json out;
    out["command"] = "verify";
    out["suite"] = config.suite;
    out["field"] = field.name();
    out["seed"] = config.seed;
    out["trials"] = config.trials;
    if (user) out["f"] = user->f.to_string();
    out["passed"] = rec.passed();
    out["failed"] = rec.failed();
    out["ok"] = rec.failed() == 0;
    out["checks"] = rec.take();
    if (rec.failed() != 0) exit_code = kInvariantViolation;
    return out;
}

}  // namespace hodgejac::cli::detail
