#ifndef STABENV_VARIABLES_HPP
#define STABENV_VARIABLES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "stabenv/errors.hpp"

namespace stabenv {

enum class VarKind : std::uint8_t { T, Z, H };

/// One of the ambient variables t_1..t_k, z_1..z_n, h.  Indices are 1-based
/// everywhere in the public interface; h carries no index.
struct VarId {
    VarKind kind;
    int index;  // 1-based; 0 for H

    static VarId t(int a) { return {VarKind::T, a}; }
    static VarId z(int b) { return {VarKind::Z, b}; }
    static VarId h() { return {VarKind::H, 0}; }

    friend bool operator==(const VarId&, const VarId&) = default;
};

/// Monomials are exponent vectors packed into a single 64-bit word, one
/// bit-field per variable, most significant field = t_1.  Packed words
/// compare like lexicographic exponent order, and adding words multiplies
/// monomials as long as no field overflows (guarded at the polynomial level
/// through total-degree bounds).
using Mono = std::uint64_t;

/// The ambient variable set for a (k, n) computation: t_1..t_k, z_1..z_n, h.
/// Two polynomials interoperate only if their contexts are equal.
struct VarContext {
    int k = 0;
    int n = 0;

    int var_count() const { return k + n + 1; }
    int bits() const { return 64 / var_count(); }
    std::uint64_t max_exponent() const { return (std::uint64_t{1} << bits()) - 1; }

    bool valid() const { return k >= 0 && n >= 0 && var_count() <= 16; }

    int slot(VarId v) const;
    VarId var_at(int slot) const;
    bool has(VarId v) const;

    std::string name(int slot) const;            // "t1", "z3", "h"
    std::vector<std::string> names() const;

    int shift(int slot) const { return (var_count() - 1 - slot) * bits(); }

    Mono unit(int slot, std::uint64_t e = 1) const { return e << shift(slot); }
    std::uint64_t exponent(Mono m, int slot) const {
        return (m >> shift(slot)) & max_exponent();
    }
    std::uint64_t total_degree(Mono m) const;
    std::vector<std::uint64_t> exponents(Mono m) const;
    Mono pack(const std::vector<std::uint64_t>& exps) const;

    /// Remaps the variables of a monomial; several source slots may land on
    /// the same target (exponents add), which is how t = z_J substitution
    /// acts on already-expanded polynomials.
    Mono remap(Mono m, const std::vector<int>& target_slot) const;

    friend bool operator==(const VarContext&, const VarContext&) = default;
};

}  // namespace stabenv

#endif
