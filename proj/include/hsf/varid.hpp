#ifndef HSF_VARID_HPP
#define HSF_VARID_HPP

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hsf {

/// Variable families of the engine. The enum order fixes the canonical
/// variable-block order used everywhere (monomial order, rendering, JSON).
enum class VarKind : std::uint8_t {
    Z,       // z_1, z_3, ..., odd index, weight -index
    Lambda,  // lambda_4, lambda_6, ..., even index >= 4, weight +index
    P,       // power sums p_1, p_2, ..., weight -index
    E,       // elementary symmetric e_1, e_2, ..., weight -index
    Tau,     // Adler-Moser parameters tau_2, tau_3, ..., weight -(2*index-1)
    X1,      // dynamical coordinates x_{1,j}, odd j, weight +(1+j)
    X2,      // x_{2,j}, weight +(2+j)
    X3,      // x_{3,j}, weight +(3+j)
};

struct VarId {
    VarKind kind;
    int index;

    friend auto operator<=>(const VarId&, const VarId&) = default;

    int weight() const {
        switch (kind) {
            case VarKind::Z: return -index;
            case VarKind::Lambda: return index;
            case VarKind::P: return -index;
            case VarKind::E: return -index;
            case VarKind::Tau: return -(2 * index - 1);
            case VarKind::X1: return 1 + index;
            case VarKind::X2: return 2 + index;
            case VarKind::X3: return 3 + index;
        }
        return 0;
    }

    std::string name() const;
};

inline VarId z_var(int i) {
    if (i < 1 || i % 2 == 0) throw std::invalid_argument("z index must be odd positive");
    return {VarKind::Z, i};
}

inline VarId lambda_var(int i) {
    if (i < 4 || i % 2 != 0) throw std::invalid_argument("lambda index must be even and >= 4");
    return {VarKind::Lambda, i};
}

inline VarId p_var(int i) {
    if (i < 1) throw std::invalid_argument("p index must be positive");
    return {VarKind::P, i};
}

inline VarId e_var(int i) {
    if (i < 1) throw std::invalid_argument("e index must be positive");
    return {VarKind::E, i};
}

inline VarId tau_var(int i) {
    if (i < 2) throw std::invalid_argument("tau index must be >= 2");
    return {VarKind::Tau, i};
}

inline VarId x_var(int i, int j) {
    if (i < 1 || i > 3 || j < 1 || j % 2 == 0) throw std::invalid_argument("x variable needs i in 1..3, odd j");
    VarKind k = i == 1 ? VarKind::X1 : (i == 2 ? VarKind::X2 : VarKind::X3);
    return {k, j};
}

/// Genus g plus the derived variable tables. Polynomials carry a genus tag;
/// genus 0 marks genus-independent data (the symmetric-function domain).
class GenusContext {
public:
    explicit GenusContext(int g) : g_(g) {
        if (g < 1) throw std::invalid_argument("genus must be >= 1");
        for (int s = 1; s <= g; ++s) z_vars_.push_back(z_var(2 * s - 1));
        for (int k = 4; k <= 4 * g + 2; k += 2) lambda_vars_.push_back(lambda_var(k));
    }

    int g() const { return g_; }
    const std::vector<VarId>& z_vars() const { return z_vars_; }
    const std::vector<VarId>& lambda_vars() const { return lambda_vars_; }

    /// Weight of the sigma normalization stratum: -g(g+1)/2.
    int sigma_weight() const { return -g_ * (g_ + 1) / 2; }

    bool valid_z_index(int i) const { return i >= 1 && i % 2 == 1 && i <= 2 * g_ - 1; }
    /// lambda_s exists only for s in {4, 6, ..., 4g+2}.
    bool valid_lambda_index(int i) const { return i >= 4 && i % 2 == 0 && i <= 4 * g_ + 2; }

    friend bool operator==(const GenusContext& a, const GenusContext& b) { return a.g_ == b.g_; }

private:
    int g_;
    std::vector<VarId> z_vars_;
    std::vector<VarId> lambda_vars_;
};

}  // namespace hsf

#endif
