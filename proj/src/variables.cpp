#include "stabenv/variables.hpp"

namespace stabenv {

int VarContext::slot(VarId v) const {
    switch (v.kind) {
        case VarKind::T:
            if (v.index < 1 || v.index > k)
                throw GuardViolation("t index out of range: t" + std::to_string(v.index));
            return v.index - 1;
        case VarKind::Z:
            if (v.index < 1 || v.index > n)
                throw GuardViolation("z index out of range: z" + std::to_string(v.index));
            return k + v.index - 1;
        case VarKind::H:
            return k + n;
    }
    throw GuardViolation("bad VarId");
}

VarId VarContext::var_at(int s) const {
    if (s < 0 || s >= var_count()) throw GuardViolation("slot out of range");
    if (s < k) return VarId::t(s + 1);
    if (s < k + n) return VarId::z(s - k + 1);
    return VarId::h();
}

bool VarContext::has(VarId v) const {
    switch (v.kind) {
        case VarKind::T: return v.index >= 1 && v.index <= k;
        case VarKind::Z: return v.index >= 1 && v.index <= n;
        case VarKind::H: return true;
    }
    return false;
}

std::string VarContext::name(int s) const {
    VarId v = var_at(s);
    switch (v.kind) {
        case VarKind::T: return "t" + std::to_string(v.index);
        case VarKind::Z: return "z" + std::to_string(v.index);
        case VarKind::H: return "h";
    }
    return "?";
}

std::vector<std::string> VarContext::names() const {
    std::vector<std::string> out;
    out.reserve(var_count());
    for (int s = 0; s < var_count(); ++s) out.push_back(name(s));
    return out;
}

std::uint64_t VarContext::total_degree(Mono m) const {
    std::uint64_t d = 0;
    const int b = bits();
    const std::uint64_t mask = max_exponent();
    for (int s = 0; s < var_count(); ++s) d += (m >> (s * b)) & mask;
    return d;
}

std::vector<std::uint64_t> VarContext::exponents(Mono m) const {
    std::vector<std::uint64_t> out(var_count());
    for (int s = 0; s < var_count(); ++s) out[s] = exponent(m, s);
    return out;
}

Mono VarContext::pack(const std::vector<std::uint64_t>& exps) const {
    if (static_cast<int>(exps.size()) != var_count())
        throw GuardViolation("exponent vector has wrong length");
    Mono m = 0;
    for (int s = 0; s < var_count(); ++s) {
        if (exps[s] > max_exponent()) throw ExponentOverflow("exponent too large to pack");
        m |= exps[s] << shift(s);
    }
    return m;
}

Mono VarContext::remap(Mono m, const std::vector<int>& target_slot) const {
    std::vector<std::uint64_t> exps(var_count(), 0);
    for (int s = 0; s < var_count(); ++s) {
        const std::uint64_t e = exponent(m, s);
        if (e == 0) continue;
        const int t = target_slot[s];
        if (t < 0 || t >= var_count()) throw GuardViolation("remap target out of range");
        exps[t] += e;
    }
    return pack(exps);
}

}  // namespace stabenv
