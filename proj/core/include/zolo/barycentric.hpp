#ifndef ZOLO_BARYCENTRIC_HPP
#define ZOLO_BARYCENTRIC_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace zolo {

using Complex = std::complex<double>;

// r(z) = Σ αₖ/(z − tₖ) / Σ βₖ/(z − tₖ)
//
// Stored as support points tₖ, denominator weights βₖ and numerator weights αₖ = βₖ fₖ.
// Keeping α and β separately lets a node with βₖ = 0 (a pole sitting on a support point)
// round-trip without dividing by zero; values() reports fₖ = αₖ/βₖ.
class BarycentricRational {
  public:
    // Throws ValidationError on length mismatch, repeated or non-finite nodes, or all-zero weights.
    BarycentricRational(std::vector<Complex> nodes, std::vector<Complex> values, std::vector<Complex> weights);

    static BarycentricRational from_coefficients(std::vector<Complex> nodes, std::vector<Complex> numerator,
                                                 std::vector<Complex> denominator);

    // Evaluation; exact node hits return the limiting value αₖ/βₖ.
    Complex operator()(Complex z) const;

    struct Evaluation {
        Complex value;
        bool perturbed = false; // z hit a node with βₖ = 0, or both sums vanished; value taken nearby
    };
    Evaluation evaluate(Complex z) const;

    std::vector<Complex> operator()(std::span<const Complex> z) const;

    std::span<const Complex> nodes() const noexcept { return nodes_; }
    std::span<const Complex> weights() const noexcept { return beta_; }
    std::span<const Complex> numerator_weights() const noexcept { return alpha_; }
    std::vector<Complex> values() const;

    std::size_t size() const noexcept { return nodes_.size(); }
    std::size_t degree() const noexcept { return nodes_.size() - 1; }

  private:
    BarycentricRational() = default;
    void check() const;

    std::vector<Complex> nodes_;
    std::vector<Complex> alpha_;
    std::vector<Complex> beta_;
};

// Finite zeros of Σ βₖ/(z − tₖ), excluding support points where αₖ also vanishes.
std::vector<Complex> poles(const BarycentricRational &r);

// Finite zeros of Σ αₖ/(z − tₖ), excluding support points where βₖ also vanishes.
std::vector<Complex> zeros(const BarycentricRational &r);

// r + c, by αₖ ← αₖ + c βₖ.
BarycentricRational shift_values(const BarycentricRational &r, Complex c);

// Roots of Σ cₖ/(z − tₖ) from the (n+2)×(n+2) arrowhead pencil, before any filtering.
std::vector<Complex> partial_fraction_roots(std::span<const Complex> nodes, std::span<const Complex> coeffs);

} // namespace zolo

#endif // ZOLO_BARYCENTRIC_HPP
