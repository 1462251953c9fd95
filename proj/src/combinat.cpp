#include "stabenv/combinat.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "stabenv/errors.hpp"

namespace stabenv {

Subset::Subset(int n, std::vector<int> elements) : n_(n), elems_(std::move(elements)) {
    if (n < 0) throw GuardViolation("subset ambient size negative");
    std::sort(elems_.begin(), elems_.end());
    for (std::size_t i = 0; i < elems_.size(); ++i) {
        if (elems_[i] < 1 || elems_[i] > n_) throw GuardViolation("subset element out of range");
        if (i > 0 && elems_[i] == elems_[i - 1]) throw GuardViolation("subset element repeated");
    }
}

Subset Subset::full(int n) {
    std::vector<int> e(n);
    std::iota(e.begin(), e.end(), 1);
    return Subset(n, std::move(e));
}

Subset Subset::parse(int n, const std::string& text) {
    if (text == "none" || text.empty()) return Subset::empty(n);
    std::vector<int> e;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw GuardViolation("bad subset syntax: '" + text + "'");
        e.push_back(std::stoi(item));
    }
    return Subset(n, std::move(e));
}

bool Subset::contains(int i) const {
    return std::binary_search(elems_.begin(), elems_.end(), i);
}

Subset Subset::complement() const {
    std::vector<int> out;
    out.reserve(n_ - k());
    for (int i = 1; i <= n_; ++i)
        if (!contains(i)) out.push_back(i);
    return Subset(n_, std::move(out));
}

int Subset::position_of(int i) const {
    auto it = std::lower_bound(elems_.begin(), elems_.end(), i);
    if (it == elems_.end() || *it != i) return -1;
    return static_cast<int>(it - elems_.begin());
}

std::string Subset::str() const {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < elems_.size(); ++i) os << (i ? "," : "") << elems_[i];
    os << "}";
    return os.str();
}

std::string Subset::flag_str() const {
    if (elems_.empty()) return "none";
    std::ostringstream os;
    for (std::size_t i = 0; i < elems_.size(); ++i) os << (i ? "," : "") << elems_[i];
    return os.str();
}

std::strong_ordering Subset::operator<=>(const Subset& o) const {
    if (k() != o.k()) return k() <=> o.k();
    return elems_ <=> o.elems_;
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
        if (v < 1 || v > static_cast<int>(images_.size()) || seen[v - 1])
            throw GuardViolation("not a permutation in one-line notation");
        seen[v - 1] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 1);
    return Permutation(std::move(im));
}

Permutation Permutation::transposition(int n, int u, int v) {
    if (u == v || u < 1 || v < 1 || u > n || v > n)
        throw GuardViolation("bad transposition indices");
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 1);
    std::swap(im[u - 1], im[v - 1]);
    return Permutation(std::move(im));
}

Permutation Permutation::parse(const std::string& text) {
    std::vector<int> im;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw GuardViolation("bad permutation syntax: '" + text + "'");
        im.push_back(std::stoi(item));
    }
    if (im.empty()) throw GuardViolation("empty permutation");
    return Permutation(std::move(im));
}

int Permutation::apply(int i) const {
    if (i < 1 || i > n()) throw GuardViolation("permutation argument out of range");
    return images_[i - 1];
}

bool Permutation::is_identity() const {
    for (int i = 1; i <= n(); ++i)
        if (apply(i) != i) return false;
    return true;
}

Permutation Permutation::inverse() const {
    std::vector<int> im(n());
    for (int i = 1; i <= n(); ++i) im[apply(i) - 1] = i;
    return Permutation(std::move(im));
}

std::string Permutation::str() const {
    std::ostringstream os;
    for (int i = 0; i < n(); ++i) os << (i ? "," : "") << images_[i];
    return os.str();
}

std::strong_ordering Permutation::operator<=>(const Permutation& o) const {
    return images_ <=> o.images_;
}

Permutation compose(const Permutation& sigma, const Permutation& omega) {
    if (sigma.n() != omega.n()) throw GuardViolation("composition size mismatch");
    std::vector<int> im(sigma.n());
    for (int i = 1; i <= sigma.n(); ++i) im[i - 1] = sigma.apply(omega.apply(i));
    return Permutation(std::move(im));
}

Subset apply_to_subset(const Permutation& sigma, const Subset& I) {
    if (sigma.n() != I.n()) throw GuardViolation("permutation/subset size mismatch");
    std::vector<int> out;
    out.reserve(I.k());
    for (int i : I.elements()) out.push_back(sigma.apply(i));
    return Subset(I.n(), std::move(out));
}

Subset apply_transposition(const Subset& I, int u, int v) {
    const bool has_u = I.contains(u);
    const bool has_v = I.contains(v);
    if (has_u == has_v) return I;
    std::vector<int> out;
    out.reserve(I.k());
    for (int i : I.elements()) {
        if (i == u)
            out.push_back(v);
        else if (i == v)
            out.push_back(u);
        else
            out.push_back(i);
    }
    return Subset(I.n(), std::move(out));
}

std::vector<Subset> enumerate_subsets(int n, int k) {
    if (k < 0 || k > n) throw GuardViolation("enumerate_subsets: k out of range");
    std::vector<Subset> out;
    std::vector<int> cur;
    cur.reserve(k);
    auto rec = [&](auto&& self, int next) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.emplace_back(n, cur);
            return;
        }
        const int need = k - static_cast<int>(cur.size());
        for (int i = next; i <= n - need + 1; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

std::vector<Subset> enumerate_all_subsets(int n) {
    std::vector<Subset> out;
    for (int k = 0; k <= n; ++k) {
        auto part = enumerate_subsets(n, k);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

std::vector<Permutation> enumerate_permutations(int n) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(im);
    } while (std::next_permutation(im.begin(), im.end()));
    return out;
}

std::vector<GKMPair> gkm_pairs(int n, int k) {
    std::vector<GKMPair> out;
    const auto subsets = enumerate_subsets(n, k);
    for (std::size_t a = 0; a < subsets.size(); ++a) {
        for (std::size_t b = a + 1; b < subsets.size(); ++b) {
            std::vector<int> only_a, only_b;
            std::set_difference(subsets[a].elements().begin(), subsets[a].elements().end(),
                                subsets[b].elements().begin(), subsets[b].elements().end(),
                                std::back_inserter(only_a));
            if (only_a.size() != 1) continue;
            std::set_difference(subsets[b].elements().begin(), subsets[b].elements().end(),
                                subsets[a].elements().begin(), subsets[a].elements().end(),
                                std::back_inserter(only_b));
            out.push_back({subsets[a], subsets[b], only_a[0], only_b[0]});
        }
    }
    return out;
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / i;
    return r;
}

}  // namespace stabenv
