// Acceptance suite: one PASS/FAIL line per criterion; exit status is the
// number of failed criteria.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "hodgejac/cli.hpp"
#include "hodgejac/errors.hpp"
#include "hodgejac/hodge.hpp"
#include "hodgejac/ivhs.hpp"
#include "hodgejac/jet.hpp"
#include "support.hpp"

using namespace hodgejac;
using hodgejac::testing::brute_rank;
using hodgejac::testing::fermat;
using hodgejac::testing::fermat_jacobian_rows;
using hodgejac::testing::fermat_quotient_dim;
using hodgejac::testing::fermat_text;
using hodgejac::testing::poly;
using hodgejac::testing::random_form;

namespace {

const Field Q = Field::rationals();
const Field P31 = Field::prime(2147483647);

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// Failure messages collected during a criterion.
struct Outcome {
    std::vector<std::string> failures;
    std::vector<std::string> notes;
    void expect(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
};

std::string join(const std::vector<std::size_t>& v) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    return os.str() + "]";
}

std::string fmt(double s) {
    std::ostringstream os;
    os.precision(2);
    os << std::fixed << s << "s";
    return os.str();
}

// Oracle for the Fermat primitive Hodge numbers: count standard monomials
// and, for the smaller pieces, also run an independent dense elimination.
std::size_t oracle_dim(std::size_t nvars, int d, int k, bool dense) {
    const std::size_t counted = fermat_quotient_dim(nvars, d, k);
    if (!dense || k < 0) return counted;
    const std::size_t ambient = testing::pascal(nvars - 1 + static_cast<std::size_t>(k), nvars - 1);
    const std::size_t r = brute_rank(fermat_jacobian_rows(nvars, d, k));
    return ambient - r == counted ? counted : static_cast<std::size_t>(-1);
}

Outcome criterion1() {
    Outcome out;
    struct Case {
        std::size_t nvars;
        int d;
        std::vector<std::size_t> expected;
    };
    auto start = Clock::now();
    for (const Case& c : {Case{3, 3, {1, 1}}, Case{4, 4, {1, 19, 1}}}) {
        JacobianRing ring{Hypersurface(fermat(c.nvars, c.d))};
        const auto got = primitive_hodge_numbers(ring).h;
        std::vector<std::size_t> oracle;
        for (int t : hodge_piece_degrees(static_cast<int>(c.nvars) - 2, c.d)) {
            oracle.push_back(oracle_dim(c.nvars, c.d, t, true));
        }
        out.expect(got == c.expected, fermat_text(c.nvars, c.d) + " gave " + join(got));
        out.expect(oracle == c.expected, "oracle disagrees on " + fermat_text(c.nvars, c.d));
    }
    const double small = seconds_since(start);
    out.expect(small < 10.0, "cubic+quartic took " + fmt(small));
    out.notes.push_back("cubic+quartic " + fmt(small));

    start = Clock::now();
    {
        JacobianRing ring{Hypersurface(fermat(5, 5))};
        const auto got = primitive_hodge_numbers(ring).h;
        out.expect(got == std::vector<std::size_t>{1, 101, 101, 1}, "quintic (exact) gave " + join(got));
    }
    out.notes.push_back("quintic exact " + fmt(seconds_since(start)));

    start = Clock::now();
    {
        JacobianRing modular{Hypersurface(fermat(5, 5, P31), fermat(5, 5))};
        const auto got = primitive_hodge_numbers(modular).h;
        out.expect(got == std::vector<std::size_t>{1, 101, 101, 1}, "quintic (mod p) gave " + join(got));
        JacobianRing exact{Hypersurface(fermat(5, 5))};
        for (int k : {0, 5, 15}) {
            const std::size_t oracle = oracle_dim(5, 5, k, k <= 5);
            out.expect(exact.dim(k) == modular.dim(k) && exact.dim(k) == oracle,
                       "exact recheck of dim R^" + std::to_string(k) + " failed");
        }
    }
    const double quintic = seconds_since(start);
    out.expect(quintic < 120.0, "quintic mod-p with recheck took " + fmt(quintic));
    out.notes.push_back("quintic mod-p+recheck " + fmt(quintic));
    return out;
}

int cli_exit(const std::string& command, const std::string& f, std::optional<std::size_t> nvars) {
    cli::JobConfig c;
    c.command = command;
    c.f = f;
    c.nvars = nvars;
    return cli::run(c).exit_code;
}

Outcome criterion2() {
    Outcome out;
    const auto start = Clock::now();
    for (const auto& [n, d] : std::vector<std::pair<std::size_t, int>>{{3, 3}, {3, 4}, {4, 3}, {4, 4}, {5, 3}}) {
        JacobianRing ring{Hypersurface(fermat(n, d))};
        out.expect(ring.is_smooth(), fermat_text(n, d) + " reported singular");
        out.expect(cli_exit("smooth", fermat_text(n, d), std::nullopt) == cli::kSuccess,
                   "smooth exit code for " + fermat_text(n, d));
    }
    // x0*x1*(x0+x1)*x2 expanded
    for (const std::string& f : {std::string("x0^3 + x1^3"), std::string("x0^2*x1*x2 + x0*x1^2*x2")}) {
        JacobianRing ring{Hypersurface(poly(f, Q, 3))};
        out.expect(!ring.is_smooth(), f + " reported smooth");
        bool threw = false;
        try {
            ring.require_smooth();
        } catch (const NotSmoothError&) {
            threw = true;
        }
        out.expect(threw, f + " did not raise NotSmooth");
        out.expect(cli_exit("hodge", f, 3) == cli::kNotSmooth, f + " hodge exit code");
    }
    {
        // the same degenerate quartic in four variables
        const std::string f = "x0^2*x1*x2 + x0*x1^2*x2 + x3^4";
        out.expect(cli_exit("hodge", f, std::nullopt) == cli::kNotSmooth, f + " hodge exit code");
    }
    const double t = seconds_since(start);
    out.expect(t < 5.0, "took " + fmt(t));
    out.notes.push_back(fmt(t));
    return out;
}

Outcome criterion3() {
    Outcome out;
    cli::JobConfig c;
    c.command = "ivhs";
    c.f = fermat_text(3, 3);
    c.g = "x0*x1*x2";
    using Rows = std::vector<std::vector<std::string>>;
    const auto normalized = cli::run(c);
    out.expect(normalized.exit_code == cli::kSuccess, "ivhs exit code");
    out.expect(normalized.report["blocks"][0]["matrix"].get<Rows>() == Rows{{"-1"}}, "normalized block is not [[-1]]");
    c.raw = true;
    const auto raw = cli::run(c);
    out.expect(raw.report["blocks"][0]["matrix"].get<Rows>() == Rows{{"1"}}, "raw block is not [[1]]");

    // direct library check, with [x0 x1 x2] the socle generator
    JacobianRing ring{Hypersurface(fermat(3, 3))};
    out.expect(ring.quotient_basis(3).size() == 1 && ring.quotient_basis(3)[0].to_string() == "x0*x1*x2",
               "unexpected socle basis");
    const auto op = ivhs_operator(ring, make_tangent(ring, poly("x0*x1*x2", Q, 3)));
    out.expect(op.block(0) == ExactMatrix::from_ints({{-1}}, Q), "library block is not [[-1]]");
    return out;
}

struct SffStats {
    std::set<int> sff_degrees;
    std::set<int> ivhs_degrees;
};

void sff_trials(std::size_t nvars, int d, int trials, std::uint64_t seed, Outcome& out, SffStats& stats) {
    JacobianRing ring{Hypersurface(fermat(nvars, d))};
    std::mt19937_64 rng(seed);
    for (int i = 0; i < trials; ++i) {
        const auto u = make_tangent(ring, random_form(nvars, d, rng));
        const auto v = make_tangent(ring, random_form(nvars, d, rng));
        const auto uv = second_fundamental_form(ring, u, v);
        const auto iu = ivhs_operator(ring, u);
        const auto iv = ivhs_operator(ring, v);
        const std::string tag = fermat_text(nvars, d) + " trial " + std::to_string(i);
        out.expect(uv == compose_ivhs(iv, iu), tag + ": II != ivhs(v) o ivhs(u)");
        out.expect(uv == second_fundamental_form(ring, v, u), tag + ": II not symmetric");
        // the identity must also hold entrywise against explicit products
        for (const auto& [key, m] : uv.blocks()) {
            out.expect(m == iv.block(key.first + 1) * iu.block(key.first), tag + ": block product mismatch");
        }
        for (int deg : block_degrees(uv)) stats.sff_degrees.insert(deg);
        for (int deg : block_degrees(iu.as_endomorphism())) stats.ivhs_degrees.insert(deg);
        for (int deg : block_degrees(iv.as_endomorphism())) stats.ivhs_degrees.insert(deg);
    }
}

SffStats criterion4_stats;

Outcome criterion4() {
    Outcome out;
    auto start = Clock::now();
    sff_trials(4, 4, 25, 42, out, criterion4_stats);
    const double quartic = seconds_since(start);
    out.expect(quartic < 60.0, "quartic suite took " + fmt(quartic));
    start = Clock::now();
    sff_trials(5, 5, 5, 43, out, criterion4_stats);
    out.notes.push_back("quartic x25 " + fmt(quartic) + ", quintic x5 " + fmt(seconds_since(start)));
    return out;
}

Outcome criterion5() {
    Outcome out;
    const auto& s = criterion4_stats;
    out.expect(std::includes(std::set<int>{2}.begin(), std::set<int>{2}.end(), s.sff_degrees.begin(),
                             s.sff_degrees.end()),
               "II block degrees outside {2}");
    out.expect(std::includes(std::set<int>{1}.begin(), std::set<int>{1}.end(), s.ivhs_degrees.begin(),
                             s.ivhs_degrees.end()),
               "IVHS block degrees outside {1}");
    out.expect(s.sff_degrees == std::set<int>{2}, "no nonzero II block observed");
    return out;
}

Outcome criterion6() {
    Outcome out;
    const auto start = Clock::now();
    JacobianRing ring{Hypersurface(fermat(4, 4))};
    std::mt19937_64 rng(2024);
    int members = 0;
    for (int i = 0; i < 25; ++i) {
        const int q = static_cast<int>(testing::draw(rng, 0, 2));
        const int t = hodge_piece_degree(2, 4, q);
        const auto& basis = ring.quotient_basis(t);
        const Monomial m = basis[static_cast<std::size_t>(testing::draw(rng, 0, static_cast<long>(basis.size()) - 1))];
        const auto p = GradedPolynomial::from_monomial(m, Scalar::one(Q));
        const FamilyJet jet{random_form(4, 4, rng), random_form(4, 4, rng), random_form(4, 4, rng)};
        const auto dec = jet_second_derivative(ring, jet, p, q);
        const std::string tag = "jet " + std::to_string(i) + " (q=" + std::to_string(q) + ", P=" + m.to_string() + ")";

        // independent recomputation of both terms from polynomial products
        const Scalar c1(-(q + 1), Q);
        const Scalar c2((q + 1) * (q + 2), Q);
        if (q + 1 <= 2) {
            out.expect(dec.first_term.element == ring.normal_form(c1 * (jet.k * p)), tag + ": first term");
        }
        if (q + 2 <= 2) {
            const auto ii = second_fundamental_form(ring, make_tangent(ring, jet.g), make_tangent(ring, jet.h));
            const auto applied = ii.apply(q, q + 2, ring.normal_form(p).coords);
            out.expect(applied == dec.second_term.element.coords, tag + ": second term != II [P]");
            out.expect(dec.second_term.element == ring.normal_form(c2 * (jet.g * (jet.h * p))),
                       tag + ": second term != (q+1)(q+2)[ghP]");
        } else {
            out.expect(dec.second_term.is_zero(), tag + ": clipped second term not zero");
        }

        const auto w = first_term_in_tangent_image(ring, dec, p, q);
        out.expect(w.member, tag + ": first term not in tangent image");
        if (w.member) {
            ++members;
            if (q + 1 <= 2) {
                out.expect(ring.normal_form(c1 * (w.tangent * p)) == dec.first_term.element,
                           tag + ": witness does not reproduce the first term");
            }
        }
    }
    const double t = seconds_since(start);
    out.expect(t < 60.0, "took " + fmt(t));
    out.notes.push_back(std::to_string(members) + "/25 witnesses, " + fmt(t));
    return out;
}

Outcome criterion7() {
    Outcome out;
    const auto start = Clock::now();
    JacobianRing ring{Hypersurface(fermat(4, 4))};
    const int sigma = ring.socle_degree();
    out.expect(sigma == 8, "socle degree " + std::to_string(sigma));
    out.expect(ring.dim(sigma) == 1, "dim R^sigma = " + std::to_string(ring.dim(sigma)));
    for (int k = 0; k <= sigma; ++k) {
        out.expect(ring.dim(k) == ring.dim(sigma - k), "dim R^" + std::to_string(k) + " != dim R^" +
                                                            std::to_string(sigma - k));
        out.expect(ring.dim(k) == fermat_quotient_dim(4, 4, k), "dim R^" + std::to_string(k) + " disagrees with count");
    }
    const auto m = duality_pairing_matrix(ring, 4);
    std::vector<std::vector<mpq_class>> dense(m.rows(), std::vector<mpq_class>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) dense[i][j] = m(i, j).rational();
    }
    out.expect(rank(m) == 19, "pairing rank at k=4 is " + std::to_string(rank(m)));
    out.expect(brute_rank(dense) == 19, "oracle pairing rank at k=4 is " + std::to_string(brute_rank(dense)));
    const double t = seconds_since(start);
    out.expect(t < 30.0, "took " + fmt(t));
    out.notes.push_back(fmt(t));
    return out;
}

std::string capture(const std::string& command, int& status) {
    std::string text;
    FILE* pipe = popen(command.c_str(), "r");
    if (pipe == nullptr) {
        status = -1;
        return text;
    }
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) text.append(buf.data(), n);
    status = pclose(pipe);
    return text;
}

Outcome criterion8(const std::string& exe) {
    Outcome out;
    cli::JobConfig c;
    c.command = "verify";
    c.seed = 42;
    const auto first = cli::run(c);
    const auto second = cli::run(c);
    out.expect(first.exit_code == cli::kSuccess, "verify did not pass");
    out.expect(cli::render(first.report) == cli::render(second.report), "in-process runs differ");
    if (exe.empty()) {
        out.failures.push_back("executable path not supplied");
        return out;
    }
    int s1 = 0;
    int s2 = 0;
    const std::string a = capture("'" + exe + "' verify --seed 42", s1);
    const std::string b = capture("'" + exe + "' verify --seed 42", s2);
    out.expect(s1 == 0 && s2 == 0, "executable exit status nonzero");
    out.expect(!a.empty() && a == b, "executable runs differ");
    out.expect(a == cli::render(first.report), "executable output differs from in-process output");
    out.notes.push_back(std::to_string(a.size()) + " bytes");
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    const std::string exe = argc > 1 ? argv[1] : "";
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"golden Hodge numbers (cubic, quartic, quintic)", criterion1},
        {"smoothness detection", criterion2},
        {"IVHS coefficient on the plane cubic", criterion3},
        {"second fundamental form = composition, symmetric", criterion4},
        {"block degrees: II in {2}, IVHS in {1}", criterion5},
        {"second-derivative decomposition on random jets", criterion6},
        {"Gorenstein duality on the quartic", criterion7},
        {"verify --seed 42 is byte-identical", [&] { return criterion8(exe); }},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.failures.push_back(std::string("exception: ") + e.what());
        }
        const bool ok = o.failures.empty();
        failed += ok ? 0 : 1;
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": " << criteria[i].first;
        for (const auto& n : o.notes) std::cout << " [" << n << "]";
        std::cout << "\n";
        for (const auto& f : o.failures) std::cout << "    " << f << "\n";
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size()
              << " criteria passed\n";
    return failed;
}
