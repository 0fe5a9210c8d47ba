#pragma once

#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hodgejac/cli.hpp"
#include "hodgejac/jacobian_ring.hpp"
#include "hodgejac/linalg.hpp"

namespace hodgejac::cli::detail {

using json = nlohmann::ordered_json;

json scalar_json(const Scalar& s);
json vector_json(const Vector& v);
json matrix_json(const ExactMatrix& m);
json basis_json(const std::vector<Monomial>& basis);

// The parsed hypersurface and everything needed to parse further inputs
// against it.
struct Session {
    Field field;
    GradedPolynomial f;
    std::unique_ptr<JacobianRing> ring;

    // Parses an auxiliary polynomial in the variables of f; the zero
    // polynomial is given `expected_degree`.
    GradedPolynomial parse(const std::string& text, int expected_degree) const;
};

Session open_session(const JobConfig& config);
Session open_session(const std::string& f_text, const Field& field, std::optional<std::size_t> nvars);

// Rejects primes too small for the input coefficients (BadPrimeError).
void check_prime_margin(const JobConfig& config, const Field& field);

// Seeded generator with a platform-independent bounded draw.
class Rng {
   public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    long uniform(long lo, long hi) { return lo + static_cast<long>(engine_() % static_cast<std::uint64_t>(hi - lo + 1)); }
    GradedPolynomial form(std::size_t nvars, int degree, const Field& field, long bound = 5);

   private:
    std::mt19937_64 engine_;
};

json verify(const JobConfig& config, int& exit_code);

}  // namespace hodgejac::cli::detail
