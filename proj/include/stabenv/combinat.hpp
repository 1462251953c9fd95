#ifndef STABENV_COMBINAT_HPP
#define STABENV_COMBINAT_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace stabenv {

/// A k-element subset of {1..n}, stored sorted.  All indices 1-based.
class Subset {
public:
    Subset() : n_(0) {}
    Subset(int n, std::vector<int> elements);
    static Subset empty(int n) { return Subset(n, {}); }
    static Subset full(int n);
    /// Parses "1,3" or "none".
    static Subset parse(int n, const std::string& text);

    int n() const { return n_; }
    int k() const { return static_cast<int>(elems_.size()); }
    const std::vector<int>& elements() const { return elems_; }
    int element(int pos) const { return elems_[pos]; }  // 0-based position
    bool contains(int i) const;
    Subset complement() const;
    /// Position (0-based) of i within the sorted elements; -1 if absent.
    int position_of(int i) const;

    std::string str() const;  // "{1,3}", "{}"
    std::string flag_str() const;  // "1,3", "none"

    bool operator==(const Subset&) const = default;
    /// Order by (size, lexicographic elements); this is the basis order of
    /// the 2^n-dimensional fixed-point space.
    std::strong_ordering operator<=>(const Subset& o) const;

private:
    int n_;
    std::vector<int> elems_;
};

/// A permutation of {1..n} in one-line notation.
class Permutation {
public:
    Permutation() = default;  // the empty permutation; useful as a placeholder
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int n);
    /// s_{u,v}: the transposition switching u and v.
    static Permutation transposition(int n, int u, int v);
    static Permutation adjacent(int n, int a) { return transposition(n, a, a + 1); }
    /// Parses one-line notation "2,3,1".
    static Permutation parse(const std::string& text);

    int n() const { return static_cast<int>(images_.size()); }
    int apply(int i) const;  // sigma(i)
    const std::vector<int>& images() const { return images_; }
    bool is_identity() const;

    Permutation inverse() const;
    std::string str() const;  // "2,3,1"

    bool operator==(const Permutation&) const = default;
    std::strong_ordering operator<=>(const Permutation& o) const;

private:
    std::vector<int> images_;
};

/// (sigma omega)(i) = sigma(omega(i)): first omega, then sigma.
Permutation compose(const Permutation& sigma, const Permutation& omega);

/// The image set sigma(I).
Subset apply_to_subset(const Permutation& sigma, const Subset& I);

/// s_{u,v}(I): I with u and v switched; equals I when both or neither belong.
Subset apply_transposition(const Subset& I, int u, int v);

/// All k-subsets of {1..n} in lexicographic order of the element lists.
std::vector<Subset> enumerate_subsets(int n, int k);

/// All 2^n subsets ordered by (size, lex) — the tensor-basis order.
std::vector<Subset> enumerate_all_subsets(int n);

/// All n! permutations (lexicographic one-line order).
std::vector<Permutation> enumerate_permutations(int n);

struct GKMPair {
    Subset I, J;
    int i, j;  // I \ J = {i}, J \ I = {j}
};

/// All unordered pairs I != J in I_k differing in exactly one element.
std::vector<GKMPair> gkm_pairs(int n, int k);

std::uint64_t binomial(int n, int k);

/// The tensor-basis dictionary: subset I <-> v_{j_1} x ... x v_{j_n} with
/// j_s = 2 exactly when s is in I.
struct TensorBasisIndex {
    Subset subset;
    /// j_s for 1-based slot s, in {1, 2}.
    int letter(int s) const { return subset.contains(s) ? 2 : 1; }
};

}  // namespace stabenv

#endif
