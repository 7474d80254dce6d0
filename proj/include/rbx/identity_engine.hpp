#ifndef RBX_IDENTITY_ENGINE_HPP
#define RBX_IDENTITY_ENGINE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "rbx/set_partition.hpp"
#include "rbx/tensor_algebra.hpp"

namespace rbx
{

// Outcome of checking one identity: both sides in canonical text form.
struct IdentityReport
{
	std::string name;
	std::map<std::string, std::string> params;
	std::string lhs;
	std::string rhs;
	bool equal = false;
	std::optional<std::string> first_diff;
};

// exp(P(log(1 + a t))) against sum_i t^i P(P(...P(a) a ...) a) in Sha(Q[a]),
// weight 1, through t^order. 1 <= order <= 8.
IdentityReport spitzer_check(int order);

// exp_star(log(1 + x t)) against 1 + x t + (x t)^(x)2 + ..., with the star
// product u * v = u P(v) + P(u) v + u v. 1 <= order <= 8.
IdentityReport exp_star_log_check(int order);

// Permutation sum of nested P-words against the signed set-partition sum of
// products of P-images, over free composition letters. 2 <= n <= 5.
IdentityReport bohnenblust_spitzer_check(int n);

// Sha+ part of (1 (x) w)^p at weight 1.
LinComb freshman_power(const Word &w, int p);

// (1 (x) w)^p == 1 (x) w1^p (x) ... (x) wn^p mod p: target coefficient 1 and
// every other coefficient 0 modulo p. p in {2, 3, 5, 7}.
IdentityReport congruence_check(const Word &w, int p);

// Randomized Rota-Baxter axiom check on Sha(A) over composition letters.
IdentityReport rb_axiom_check(const Scalar &lambda, int trials, std::uint64_t seed);

// Randomized checks for the concrete operators.
IdentityReport z_rb_check(std::size_t window, int trials, std::uint64_t seed);
IdentityReport integration_check(int max_degree, int trials, std::uint64_t seed);
IdentityReport jackson_check(int max_degree, int trials, std::uint64_t seed);

} // namespace rbx

#endif
