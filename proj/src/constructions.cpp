#include "kappalab/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "kappalab/kappa.hpp"

namespace kappalab {

const char* func_name(Func f) { return f == Func::Phi ? "phi" : "sigma"; }

std::string Provenance::str() const {
    auto list = [this] {
        std::string s;
        for (std::size_t i = 0; i < members.size(); ++i) {
            if (i) s += ':';
            s += std::to_string(members[i]);
        }
        return s;
    };
    std::ostringstream os;
    switch (kind) {
        case Kind::Unclassified: return "unclassified";
        case Kind::Sporadic: return "sporadic";
        case Kind::Sierpinski: return "sierpinski";
        case Kind::Schinzel:
            os << "schinzel(r=" << r << ")";
            break;
        case Kind::Ghp:
            os << "ghp(j=" << j << ",r=" << r << ")";
            break;
        case Kind::Ps:
            os << "ps(a=" << a << ",b=" << b << ",r=" << r << ",l=" << ell << ")";
            break;
        case Kind::Mtup:
            os << "mtup(a=" << list() << ",r=" << r << ",l=" << ell << ")";
            break;
        case Kind::SigmaFriends:
            os << "sigma_friends(a=" << list() << ",r=" << r << ",l=" << ell << ")";
            break;
        case Kind::Yamada:
            os << "yamada(m=" << m << ",r=" << r << ")";
            break;
    }
    return os.str();
}

namespace {

constexpr u64 kDomainMax = (u64{1} << 63) - 1;

// Constructors assemble in 128 bits and reject anything the 64-bit verifier
// cannot factor, instead of upcasting.
u64 narrow(u128 v, const char* what) {
    if (v == 0 || v > kDomainMax) {
        throw ConstructionError(std::string(what) + " leaves the 64-bit verifier domain");
    }
    return static_cast<u64>(v);
}

void require(bool ok, const char* msg) {
    if (!ok) throw ConstructionError(msg);
}

bool coprime_to_product(u64 p, std::initializer_list<u64> parts) {
    for (u64 x : parts) {
        if (x != 0 && x % p == 0) return false;
    }
    return true;
}

void verify_equal_phi(u64 lhs, u64 rhs, SolutionRecord& rec) {
    if (phi(lhs) != phi(rhs)) {
        throw std::logic_error("construction verifier: phi mismatch");
    }
    rec.verified = true;
}

void verify_equal_sigma(u64 lhs, u64 rhs, SolutionRecord& rec) {
    if (sigma(lhs) != sigma(rhs)) {
        throw std::logic_error("construction verifier: sigma mismatch");
    }
    rec.verified = true;
}

}  // namespace

SolutionRecord sierpinski_solution(u64 k) {
    require(k >= 1, "sierpinski: k must be positive");
    u64 p = 2;
    while (k % p == 0) {
        do {
            ++p;
        } while (!is_prime(p));
    }
    u64 n = narrow(static_cast<u128>(p - 1) * k, "sierpinski: (p-1)k");
    narrow(static_cast<u128>(p) * k, "sierpinski: pk");

    SolutionRecord rec;
    rec.n = n;
    rec.k = k;
    rec.func = Func::Phi;
    rec.prov.kind = Provenance::Kind::Sierpinski;
    verify_equal_phi(n, n + k, rec);
    return rec;
}

SolutionRecord schinzel_solution(u64 k, u64 r) {
    require(k >= 2 && k % 2 == 0, "schinzel: k must be even and positive");
    require(r >= 1, "schinzel: r must be positive");
    u64 p = r + 1;
    u64 q = narrow(2 * static_cast<u128>(r) + 1, "schinzel: 2r+1");
    require(is_prime(p) && is_prime(q), "schinzel: r+1 and 2r+1 must both be prime");
    require(p > k && q > k, "schinzel: both primes must be larger than k");

    u64 n = narrow(static_cast<u128>(k) * q, "schinzel: k(2r+1)");
    narrow(2 * static_cast<u128>(k) * p, "schinzel: 2k(r+1)");

    SolutionRecord rec;
    rec.n = n;  // k(2r+1) = 2kr+k < 2k(r+1), so this is the smaller endpoint
    rec.k = k;
    rec.func = Func::Phi;
    rec.prov.kind = Provenance::Kind::Schinzel;
    rec.prov.r = r;
    verify_equal_phi(n, n + k, rec);
    return rec;
}

SolutionRecord ghp_solution(u64 j, u64 k, u64 r) {
    require(j >= 1 && k >= 1 && r >= 1, "ghp: j, k, r must be positive");
    u64 jk = narrow(static_cast<u128>(j) + k, "ghp: j+k");
    require(rad(j) == rad(jk), "ghp: j and j+k must have the same prime factors");
    u64 g = std::gcd(j, jk);
    u64 jp = j / g;
    u64 Jp = jk / g;
    u64 p1 = narrow(static_cast<u128>(jp) * r + 1, "ghp: j'r+1");
    u64 p2 = narrow(static_cast<u128>(Jp) * r + 1, "ghp: J'r+1");
    require(is_prime(p1) && is_prime(p2), "ghp: j'r+1 and J'r+1 must both be prime");
    require(coprime_to_product(p1, {j, jk}) && coprime_to_product(p2, {j, jk}),
            "ghp: constructed primes must be coprime to j(j+k)");

    u64 n = narrow(static_cast<u128>(j) * p2, "ghp: n");
    u64 complement = narrow(static_cast<u128>(jk) * p1, "ghp: n+k");
    if (static_cast<u128>(n) + k != complement) {
        throw std::logic_error("ghp: complement identity failed");
    }

    SolutionRecord rec;
    rec.n = n;
    rec.k = k;
    rec.func = Func::Phi;
    rec.prov.kind = Provenance::Kind::Ghp;
    rec.prov.j = j;
    rec.prov.r = r;
    verify_equal_phi(n, n + k, rec);
    return rec;
}

PsResult ps_solution(u64 a, u64 b, u64 r, u64 ell) {
    require(a >= 1 && a < b, "ps: need 1 <= a < b");
    require(r >= 1 && ell >= 1, "ps: r and ell must be positive");
    u64 g = std::gcd(a, b);
    u64 ap = a / g;
    u64 bp = b / g;
    require(r > std::max(ap, bp), "ps: need r > max(a', b')");
    u64 s = rad(ap) * rad(bp);  // rad(a'b'), coprime parts
    u64 p1 = narrow(static_cast<u128>(ap) * r + 1, "ps: a'r+1");
    u64 p2 = narrow(static_cast<u128>(bp) * r + 1, "ps: b'r+1");
    require(is_prime(p1) && is_prime(p2), "ps: a'r+1 and b'r+1 must both be prime");
    require(coprime_to_product(p1, {ell, s}) && coprime_to_product(p2, {ell, s}),
            "ps: constructed primes must be coprime to ell*s");

    u64 m1 = narrow(static_cast<u128>(bp) * ell * s * p1, "ps: m1");
    u64 m2 = narrow(static_cast<u128>(ap) * ell * s * p2, "ps: m2");
    u128 gap = static_cast<u128>(m1) - m2;
    if (gap != static_cast<u128>(ell) * kappa(a, b)) {
        throw std::logic_error("ps: difference identity failed");
    }

    PsResult out;
    out.m1 = m1;
    out.m2 = m2;
    out.record.n = m2;
    out.record.k = static_cast<u64>(gap);
    out.record.func = Func::Phi;
    out.record.prov.kind = Provenance::Kind::Ps;
    out.record.prov.a = a;
    out.record.prov.b = b;
    out.record.prov.r = r;
    out.record.prov.ell = ell;
    verify_equal_phi(m1, m2, out.record);
    return out;
}

MtupResult mtup_solution(const std::vector<u64>& a_list, u64 r, u64 ell) {
    require(a_list.size() >= 2, "mtup: need at least two members");
    require(r >= 1 && ell >= 1, "mtup: r and ell must be positive");
    {
        std::set<u64> uniq(a_list.begin(), a_list.end());
        require(uniq.size() == a_list.size(), "mtup: members must be distinct");
        require(*uniq.begin() >= 1, "mtup: members must be positive");
    }
    u128 prod = 1;
    for (u64 a : a_list) prod = checked_mul(prod, a);
    u128 prod2 = checked_mul(prod, prod);
    u64 square = narrow(prod2, "mtup: (prod a)^2");
    u64 n = narrow(checked_mul(checked_mul(prod2, ell), r), "mtup: n");

    MtupResult out;
    out.n = n;
    std::vector<u64> primes;
    for (u64 a : a_list) {
        u64 p = narrow(static_cast<u128>(a) * r + 1, "mtup: ar+1");
        require(is_prime(p), "mtup: every ar+1 must be prime");
        require(coprime_to_product(p, {ell, square}),
                "mtup: constructed primes must be coprime to ell*(prod a)^2");
        primes.push_back(p);
        out.offsets.push_back(square / a);
    }

    std::vector<u64> values;
    for (u64 h : out.offsets) {
        values.push_back(narrow(static_cast<u128>(n) + checked_mul(ell, h), "mtup: n + ell*h"));
    }
    u64 expected = phi(values.front());
    for (u64 v : values) {
        if (phi(v) != expected) throw std::logic_error("mtup verifier: phi mismatch");
    }
    out.common_phi = expected;

    std::vector<u64> sorted = values;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
        SolutionRecord rec;
        rec.n = sorted[i];
        rec.k = sorted[i + 1] - sorted[i];
        rec.func = Func::Phi;
        rec.prov.kind = Provenance::Kind::Mtup;
        rec.prov.members = a_list;
        rec.prov.r = r;
        rec.prov.ell = ell;
        rec.verified = true;  // covered by the common-phi check above
        out.records.push_back(std::move(rec));
    }
    return out;
}

SigmaFriendsResult sigma_solution(const std::vector<u64>& a_list, u64 r, u64 ell) {
    require(a_list.size() >= 2, "sigma: need at least two members");
    require(r >= 1 && ell >= 1, "sigma: r and ell must be positive");
    {
        std::set<u64> uniq(a_list.begin(), a_list.end());
        require(uniq.size() == a_list.size(), "sigma: members must be distinct");
        require(*uniq.begin() >= 1, "sigma: members must be positive");
    }

    SigmaFriendsResult out;
    out.index = abundancy(a_list.front());
    for (u64 a : a_list) {
        require(abundancy(a) == out.index, "sigma: members must share one abundancy index");
    }

    u128 lcm_acc = a_list.front();
    for (u64 a : a_list) lcm_acc = lcm128(lcm_acc, a);
    u64 A = narrow(lcm_acc, "sigma: lcm(a_list)");
    require(r > A, "sigma: need r > lcm(a_list)");
    require(std::gcd(ell, A) == 1, "sigma: need (ell, lcm) = 1");

    std::vector<u64> values;
    for (u64 a : a_list) {
        u64 bi = A / a;
        u128 q128 = static_cast<u128>(bi) * r - 1;
        u64 q = narrow(q128, "sigma: br-1");
        require(is_prime(q), "sigma: every br-1 must be prime");
        require(coprime_to_product(q, {ell, a}),
                "sigma: constructed primes must be coprime to ell*a");
        u64 t = narrow(checked_mul(checked_mul(static_cast<u128>(ell), a), q), "sigma: t");
        // t = A*ell*r - ell*a by construction.
        if (static_cast<u128>(t) + static_cast<u128>(ell) * a !=
            checked_mul(checked_mul(static_cast<u128>(A), ell), r)) {
            throw std::logic_error("sigma: t identity failed");
        }
        values.push_back(t);
    }

    u128 expected = sigma(values.front());
    for (u64 t : values) {
        if (sigma(t) != expected) throw std::logic_error("sigma verifier: sigma mismatch");
    }
    // Exact value identity: sigma(t) * den(y) = num(y) * sigma(ell) * A * r.
    u128 rhs = checked_mul(checked_mul(checked_mul(out.index.num, sigma(ell)), A), r);
    if (checked_mul(expected, out.index.den) != rhs) {
        throw std::logic_error("sigma verifier: value identity failed");
    }
    out.common_sigma = expected;

    std::sort(values.begin(), values.end());
    out.values = values;
    for (std::size_t i = 0; i + 1 < values.size(); ++i) {
        SolutionRecord rec;
        rec.n = values[i];
        rec.k = values[i + 1] - values[i];
        rec.func = Func::Sigma;
        rec.prov.kind = Provenance::Kind::SigmaFriends;
        rec.prov.members = a_list;
        rec.prov.r = r;
        rec.prov.ell = ell;
        rec.verified = true;
        out.records.push_back(std::move(rec));
    }
    return out;
}

SolutionRecord yamada_sigma_pair(u64 m, u64 r) {
    require(m >= 1, "yamada: m must be positive");
    u64 m1 = narrow(static_cast<u128>(m) + 1, "yamada: m+1");
    require(abundancy(m) == abundancy(m1), "yamada: need abundancy(m) = abundancy(m+1)");
    require(r > m1, "yamada: need r > m+1");
    u64 q1 = narrow(static_cast<u128>(r) * m - 1, "yamada: rm-1");
    u64 q2 = narrow(static_cast<u128>(r) * m1 - 1, "yamada: r(m+1)-1");
    require(is_prime(q1) && is_prime(q2), "yamada: rm-1 and r(m+1)-1 must both be prime");
    require(coprime_to_product(q1, {m, m1}) && coprime_to_product(q2, {m, m1}),
            "yamada: constructed primes must be coprime to m(m+1)");

    u64 upper = narrow(static_cast<u128>(m) * q2, "yamada: m(r(m+1)-1)");
    u64 lower = narrow(static_cast<u128>(m1) * q1, "yamada: (m+1)(mr-1)");
    if (lower + 1 != upper) {
        throw std::logic_error("yamada: endpoints are not consecutive");
    }

    SolutionRecord rec;
    rec.n = lower;
    rec.k = 1;
    rec.func = Func::Sigma;
    rec.prov.kind = Provenance::Kind::Yamada;
    rec.prov.m = m;
    rec.prov.r = r;
    verify_equal_sigma(lower, upper, rec);
    return rec;
}

std::vector<PrimePairWitness> find_prime_pair(u64 a, u64 b, int sign, u64 r_min,
                                              u64 r_max) {
    if (a == 0 || b == 0 || a == b) {
        throw std::invalid_argument("find_prime_pair: need distinct positive a, b");
    }
    if (sign != 1 && sign != -1) {
        throw std::invalid_argument("find_prime_pair: sign must be +1 or -1");
    }
    std::vector<PrimePairWitness> out;
    for (u64 r = std::max<u64>(r_min, 1); r <= r_max && r >= r_min; ++r) {
        u128 x = static_cast<u128>(a) * r;
        u128 y = static_cast<u128>(b) * r;
        if (sign == 1) {
            x += 1;
            y += 1;
        } else {
            x -= 1;
            y -= 1;
        }
        if (x > ~u64{0} || y > ~u64{0}) break;
        if (is_prime(static_cast<u64>(x)) && is_prime(static_cast<u64>(y))) {
            out.push_back({a, b, r});
        }
        if (r == ~u64{0}) break;
    }
    return out;
}

}  // namespace kappalab
