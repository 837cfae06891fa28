#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rimhook/involution.hpp"
#include "rimhook/partitions.hpp"
#include "rimhook/tableaux.hpp"

namespace rimhook {

using Integer = boost::multiprecision::cpp_int;

/// Square matrix indexed on both sides by the partitions of n in
/// reverse-lexicographic order.
class PartitionMatrix {
public:
    explicit PartitionMatrix(int n) : n_(n), order_(enumerate_partitions(n)) {
        entries_.assign(order_.size(), std::vector<Integer>(order_.size(), 0));
    }

    int weight() const { return n_; }
    std::size_t dimension() const { return order_.size(); }
    const std::vector<Partition>& order() const { return order_; }

    std::size_t index_of(const Partition& p) const {
        auto it = std::find(order_.begin(), order_.end(), p);
        if (it == order_.end())
            throw std::invalid_argument("partition " + to_string(p) + " has the wrong weight");
        return static_cast<std::size_t>(it - order_.begin());
    }

    Integer& operator()(std::size_t i, std::size_t j) { return entries_.at(i).at(j); }
    const Integer& operator()(std::size_t i, std::size_t j) const { return entries_.at(i).at(j); }
    const Integer& at(const Partition& row, const Partition& col) const {
        return (*this)(index_of(row), index_of(col));
    }

    static PartitionMatrix identity(int n) {
        PartitionMatrix m(n);
        for (std::size_t i = 0; i < m.dimension(); ++i) m(i, i) = 1;
        return m;
    }

    bool is_identity() const { return *this == identity(n_); }

    bool is_upper_unitriangular() const {
        for (std::size_t i = 0; i < dimension(); ++i)
            for (std::size_t j = 0; j <= i; ++j)
                if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
        return true;
    }

    friend PartitionMatrix operator*(const PartitionMatrix& a, const PartitionMatrix& b) {
        if (a.n_ != b.n_) throw std::invalid_argument("matrix weights differ");
        PartitionMatrix c(a.n_);
        const std::size_t d = a.dimension();
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t k = 0; k < d; ++k) {
                if (a(i, k) == 0) continue;
                for (std::size_t j = 0; j < d; ++j) c(i, j) += a(i, k) * b(k, j);
            }
        return c;
    }

    friend bool operator==(const PartitionMatrix& a, const PartitionMatrix& b) {
        return a.n_ == b.n_ && a.entries_ == b.entries_;
    }

private:
    int n_;
    std::vector<Partition> order_;
    std::vector<std::vector<Integer>> entries_;
};

/// K with entry (lambda, mu) the number of SSYT of shape lambda and content mu.
inline PartitionMatrix kostka_matrix(int n) {
    PartitionMatrix k(n);
    const auto& order = k.order();
    for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t j = 0; j < order.size(); ++j)
            k(i, j) = enumerate_ssyt(order[i], order[j]).size();
    return k;
}

/// Signed count of special rim-hook tableaux of shape lambda and type mu.
inline Integer signed_srht_count(const Partition& shape, const Partition& type) {
    Integer total = 0;
    for (const auto& s : enumerate_srht(shape, type)) total += s.sign();
    return total;
}

/// K^{-1} with entry (mu, lambda) the signed count of special rim-hook
/// tableaux of shape lambda and type mu.
inline PartitionMatrix inverse_kostka_matrix(int n) {
    PartitionMatrix inv(n);
    const auto& order = inv.order();
    for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t j = 0; j < order.size(); ++j)
            inv(i, j) = signed_srht_count(order[j], order[i]);
    return inv;
}

/// All pairs (S, T) with t(S) = type and T standard of shape sh(S).
inline std::vector<TableauPair> standard_pairs(const Partition& type) {
    std::vector<TableauPair> out;
    for (const auto& shape : enumerate_partitions(type.size()))
        for (const auto& s : enumerate_srht(shape, type))
            for (const auto& t : enumerate_syt(shape)) out.push_back({s, t});
    return out;
}

/// Cancellation census for one row of K^{-1} against the last column of K.
struct LastColumnRow {
    Partition type;
    Integer inner_product = 0;
    std::size_t pairs = 0;
    std::size_t two_cycles = 0;
    std::size_t fixed_points = 0;
    /// Set when every pair was matched by a sign-reversing involutive partner.
    bool involution_ok = false;
};

inline LastColumnRow last_column_row(const Partition& type) {
    LastColumnRow row{type};
    const auto pairs = standard_pairs(type);
    row.pairs = pairs.size();
    for (const auto& p : pairs) row.inner_product += p.srht.sign();
    if (type.is_single_column()) {
        row.fixed_points = pairs.size();
        row.involution_ok = pairs.size() == 1 && pairs.front().srht.sign() == 1;
        return row;
    }
    bool ok = true;
    for (const auto& p : pairs) {
        const TableauPair image = outer_involution(p.srht, p.syt);
        if (image == p) {
            ++row.fixed_points;
            ok = false;
            continue;
        }
        if (image.srht.sign() != -p.srht.sign() || image.srht.type() != type) ok = false;
        if (outer_involution(image.srht, image.syt) != p) ok = false;
        ++row.two_cycles;
    }
    row.two_cycles /= 2;
    row.involution_ok = ok && row.two_cycles * 2 == row.pairs;
    return row;
}

struct IdentityReport {
    int n = 0;
    bool k_times_inverse = false;
    bool inverse_times_k = false;
    std::vector<LastColumnRow> last_column;

    bool ok() const {
        if (!k_times_inverse || !inverse_times_k) return false;
        for (const auto& r : last_column) {
            const bool expect_one = r.type.is_single_column();
            if (r.inner_product != (expect_one ? 1 : 0) || !r.involution_ok) return false;
        }
        return true;
    }
};

/// Checks K K^{-1} = I and K^{-1} K = I exactly, and optionally replays the
/// last-column cancellation row by row through the involution.
inline IdentityReport verify_identities(int n, bool replay_last_column = true) {
    IdentityReport rep;
    rep.n = n;
    const auto k = kostka_matrix(n);
    const auto inv = inverse_kostka_matrix(n);
    rep.k_times_inverse = (k * inv).is_identity();
    rep.inverse_times_k = (inv * k).is_identity();
    if (replay_last_column && n > 0)
        for (const auto& mu : k.order()) rep.last_column.push_back(last_column_row(mu));
    return rep;
}

enum class Basis { e, s, m };

inline std::string to_string(Basis b) {
    switch (b) {
    case Basis::e: return "e";
    case Basis::s: return "s";
    case Basis::m: return "m";
    }
    return "?";
}

inline Basis parse_basis(const std::string& s) {
    if (s == "e") return Basis::e;
    if (s == "s") return Basis::s;
    if (s == "m") return Basis::m;
    throw std::invalid_argument("unknown basis: " + s);
}

/**
 * A homogeneous symmetric function of weight n written in one basis.
 * Zero coefficients are never stored.
 */
class SymFuncExpansion {
public:
    using Map = std::map<Partition, Integer, RevLexLess>;

    SymFuncExpansion(Basis basis, int weight) : basis_(basis), weight_(weight) {}

    Basis basis() const { return basis_; }
    int weight() const { return weight_; }
    const Map& coeffs() const { return coeffs_; }

    Integer coefficient(const Partition& p) const {
        auto it = coeffs_.find(p);
        return it == coeffs_.end() ? Integer(0) : it->second;
    }

    void add(const Partition& p, const Integer& c) {
        if (p.size() != weight_)
            throw std::invalid_argument("term " + to_string(p) + " has the wrong weight");
        if (c == 0) return;
        auto& slot = coeffs_[p];
        slot += c;
        if (slot == 0) coeffs_.erase(p);
    }

    bool is_positive() const {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](const auto& kv) { return kv.second > 0; });
    }

    friend bool operator==(const SymFuncExpansion& a, const SymFuncExpansion& b) {
        return a.basis_ == b.basis_ && a.weight_ == b.weight_ && a.coeffs_ == b.coeffs_;
    }

private:
    Basis basis_;
    int weight_;
    Map coeffs_;
};

/// Text form such as "4 e[4] + 2 e[3,1] + 2 e[2,2]"; unit coefficients are
/// omitted and the zero function prints as "0".
inline std::string to_string(const SymFuncExpansion& f) {
    if (f.coeffs().empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [p, c] : f.coeffs()) {
        const bool neg = c < 0;
        const Integer mag = neg ? Integer(-c) : c;
        if (first) out += neg ? "-" : "";
        else out += neg ? " - " : " + ";
        if (mag != 1) out += mag.str() + " ";
        out += to_string(f.basis()) + to_string(p);
        first = false;
    }
    return out;
}

/// e-expansion of s_{lambda'}: the coefficient of e_mu is K^{-1}_{mu,lambda}.
inline SymFuncExpansion schur_to_e(const Partition& lambda) {
    const int n = lambda.size();
    SymFuncExpansion out(Basis::e, n);
    for (const auto& mu : enumerate_partitions(n)) out.add(mu, signed_srht_count(lambda, mu));
    return out;
}

/// Rewrites an s- or e-expansion in the e basis.
inline SymFuncExpansion to_e_basis(const SymFuncExpansion& f) {
    if (f.basis() == Basis::e) return f;
    if (f.basis() != Basis::s)
        throw std::invalid_argument("only s-expansions convert to the e basis");
    SymFuncExpansion out(Basis::e, f.weight());
    for (const auto& [nu, c] : f.coeffs()) {
        const SymFuncExpansion column = schur_to_e(conjugate(nu));
        for (const auto& [mu, d] : column.coeffs()) out.add(mu, c * d);
    }
    return out;
}

inline Integer binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Integer r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

inline Integer factorial(long long n) {
    Integer r = 1;
    for (long long i = 2; i <= n; ++i) r *= i;
    return r;
}

/// e_mu(1^k) = prod_i C(k, mu_i).
inline Integer e_at_ones(const Partition& mu, int k) {
    Integer r = 1;
    for (int p : mu.parts()) r *= binomial(k, p);
    return r;
}

/// m_mu(1^k): the number of distinct placements of the parts of mu into k slots.
inline Integer m_at_ones(const Partition& mu, int k) {
    const long long len = static_cast<long long>(mu.length());
    if (len > k) return 0;
    Integer r = factorial(k) / factorial(k - len);
    const int top = mu.empty() ? 0 : mu.parts().front();
    for (int part = 1; part <= top; ++part) r /= factorial(mu.multiplicity(part));
    return r;
}

/// f(1^k): all variables x_1..x_k set to one, the rest to zero.
inline Integer evaluate_at_ones(const SymFuncExpansion& f, int k) {
    if (k < 0) throw std::invalid_argument("evaluate_at_ones: k must be nonnegative");
    if (f.basis() == Basis::s) return evaluate_at_ones(to_e_basis(f), k);
    Integer total = 0;
    for (const auto& [p, c] : f.coeffs())
        total += c * (f.basis() == Basis::e ? e_at_ones(p, k) : m_at_ones(p, k));
    return total;
}

} // namespace rimhook
