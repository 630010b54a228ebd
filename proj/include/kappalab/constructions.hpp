#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "kappalab/arith.hpp"
#include "kappalab/int128.hpp"

namespace kappalab {

enum class Func { Phi, Sigma };

const char* func_name(Func f);

// Which construction produced a solution, with enough parameters to replay it.
struct Provenance {
    enum class Kind {
        Unclassified,
        Sierpinski,
        Schinzel,
        Ghp,
        Ps,
        Mtup,
        SigmaFriends,
        Yamada,
        Sporadic,
    };
    Kind kind = Kind::Unclassified;
    u64 j = 0;
    u64 a = 0;
    u64 b = 0;
    u64 r = 0;
    u64 ell = 0;
    u64 m = 0;
    std::vector<u64> members;  // a-lists for mtup / sigma_friends

    std::string str() const;
};

struct SolutionRecord {
    u64 n = 0;
    u64 k = 0;
    Func func = Func::Phi;
    Provenance prov;
    bool verified = false;
};

// Precondition-gate rejections; the message names the failed hypothesis.
class ConstructionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct PrimePairWitness {
    u64 a = 0;
    u64 b = 0;
    u64 r = 0;
};

// n = (p-1)k with p the least prime not dividing k; phi(n) = phi(n+k).
SolutionRecord sierpinski_solution(u64 k);

// k even, r+1 and 2r+1 prime and both larger than k:
// phi(k(2r+1)) = phi(2k(r+1)); the record is the smaller endpoint with gap k.
SolutionRecord schinzel_solution(u64 k, u64 r);

// rad(j) = rad(j+k); with g = (j, j+k), j' = j/g, J' = (j+k)/g and
// j'r+1, J'r+1 both prime and coprime to j(j+k):
// n = j(J'r+1) satisfies phi(n) = phi(n+k) and n+k = (j+k)(j'r+1).
SolutionRecord ghp_solution(u64 j, u64 k, u64 r);

struct PsResult {
    SolutionRecord record;  // n = m2, k = ell * kappa(a,b)
    u64 m1 = 0;
    u64 m2 = 0;
};

// m1 = b'*ell*s*(a'r+1), m2 = a'*ell*s*(b'r+1) with s = rad(a'b');
// phi(m1) = phi(m2) and m1 - m2 = ell * kappa(a,b).
PsResult ps_solution(u64 a, u64 b, u64 r, u64 ell);

struct MtupResult {
    std::vector<u64> offsets;  // h_j = (prod a)^2 / a_j, in a_list order
    u64 n = 0;
    u64 common_phi = 0;
    std::vector<SolutionRecord> records;  // consecutive gaps of the tuple
};

// All a_j*r+1 prime and coprime to ell*(prod a)^2; then the phi values at
// n + ell*h_j agree for every j, with n = ell*(prod a)^2*r.
MtupResult mtup_solution(const std::vector<u64>& a_list, u64 r, u64 ell);

struct SigmaFriendsResult {
    std::vector<u64> values;       // t_j = A*ell*r - ell*a_j, ascending
    u128 common_sigma = 0;
    AbundancyIndex index;          // the shared sigma(a)/a
    std::vector<SolutionRecord> records;
};

// a_list shares one abundancy index y; A = lcm(a_list), b_i = A/a_i, all
// b_i*r-1 prime, r > A, (ell, A) = 1, primes coprime to ell*a_i. Then
// sigma(t_j) = y*sigma(ell)*A*r for every j.
SigmaFriendsResult sigma_solution(const std::vector<u64>& a_list, u64 r, u64 ell);

// abundancy(m) = abundancy(m+1), r > m+1, rm-1 and r(m+1)-1 prime and
// coprime to m(m+1): sigma(m(r(m+1)-1)) = sigma((m+1)(mr-1)), a k = 1 pair.
SolutionRecord yamada_sigma_pair(u64 m, u64 r);

// All r in [r_min, r_max] with a*r+sign and b*r+sign simultaneously prime,
// ascending; sign is +1 or -1.
std::vector<PrimePairWitness> find_prime_pair(u64 a, u64 b, int sign, u64 r_min,
                                              u64 r_max);

}  // namespace kappalab
