#pragma once

// Centers, Nakayama twisted centers, and the Higman-type subspaces, together
// with the ideal-theoretic checks that tie them together.

#include <string>
#include <vector>

#include "frobcell/frobenius.hpp"

namespace frobcell {

namespace cdetail {

// Nullspace of the stacked maps x -> x*a_j - phi(a_j)*x over all basis j,
// with every returned basis vector re-verified by direct multiplication.
inline Subspace twisted_center_impl(const Algebra& a, const LinearMap& phi) {
    const std::size_t n = a.dim();
    Matrix stacked(a.field(), n * n, n);
    for (std::size_t j = 0; j < n; ++j) {
        const Matrix rj = a.right_mult(a.basis(j));
        const Matrix lj = a.left_mult(phi.apply(a.basis(j)));
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) stacked.at(j * n + r, c) = rj.at(r, c) - lj.at(r, c);
    }
    const Matrix ker = stacked.nullspace();
    const Subspace s = Subspace::row_space(ker);
    for (std::size_t i = 0; i < s.dim(); ++i) {
        const Element x = Element(s.basis_vector(i));
        for (std::size_t j = 0; j < n; ++j)
            if (a.multiply(x, a.basis(j)) != a.multiply(phi.apply(a.basis(j)), x))
                throw FrobcellError("internal: twisted-center member fails its equation");
    }
    return s;
}

}  // namespace cdetail

inline Subspace center(const Algebra& a) {
    return cdetail::twisted_center_impl(a, LinearMap::identity(a.field(), a.dim()));
}

// { x : x a = phi(a) x for all a }; phi must be a validated automorphism.
inline Subspace twisted_center(const Algebra& a, const LinearMap& phi) {
    if (!is_automorphism(a, phi))
        throw FrobcellError("twisted_center requires an algebra automorphism");
    return cdetail::twisted_center_impl(a, phi);
}

struct HigmanFamily {
    Subspace h;          // span { sum_i d_i a a_i }
    Subspace h_alpha;    // span { sum_i a_i a d_i }
    Subspace h_alpha_inv;  // span { sum_i d_i a alpha(a_i) }
    bool presentations_agree;  // the two alternative presentations of h / h_alpha
};

namespace cdetail {

inline Subspace image_span(const Algebra& a, const std::vector<Element>& images) {
    return span_elements(a, images);
}

}  // namespace cdetail

inline HigmanFamily higman_family(const Algebra& a, const DualData& dd) {
    const std::size_t n = a.dim();
    std::vector<Element> h_img, h_alt, ha_img, ha_alt, hinv_img;
    for (std::size_t j = 0; j < n; ++j) {
        const Element x = a.basis(j);
        Element s1 = a.zero(), s2 = a.zero(), s3 = a.zero(), s4 = a.zero(), s5 = a.zero();
        for (std::size_t i = 0; i < n; ++i) {
            const Element ai = a.basis(i);
            const Element di = dd.right_dual(i);
            const Element Di = dd.left_dual(i);
            s1 = s1 + a.multiply(a.multiply(di, x), ai);                    // d_i a a_i
            s2 = s2 + a.multiply(a.multiply(ai, x), Di);                    // a_i a D_i
            s3 = s3 + a.multiply(a.multiply(ai, x), di);                    // a_i a d_i
            s4 = s4 + a.multiply(a.multiply(Di, x), ai);                    // D_i a a_i
            s5 = s5 + a.multiply(a.multiply(di, x), dd.nakayama.apply(ai));  // d_i a alpha(a_i)
        }
        h_img.push_back(s1);
        h_alt.push_back(s2);
        ha_img.push_back(s3);
        ha_alt.push_back(s4);
        hinv_img.push_back(s5);
    }
    HigmanFamily f{cdetail::image_span(a, h_img), cdetail::image_span(a, ha_img),
                   cdetail::image_span(a, hinv_img), true};
    f.presentations_agree = (f.h == cdetail::image_span(a, h_alt)) &&
                            (f.h_alpha == cdetail::image_span(a, ha_alt));
    return f;
}

// span over basis a of sum_i d_i a alpha^m(a_i); also checks the displayed
// commutation identity against alpha^m(b) for every basis pair.
struct TwistedHigmanPower {
    Subspace space;
    CheckReport identity;
};

inline TwistedHigmanPower twisted_higman_power(const Algebra& a, const DualData& dd, long m) {
    if (m < 0) throw FrobcellError("twisted_higman_power needs m >= 0");
    const LinearMap am = dd.nakayama.power(m);
    const std::size_t n = a.dim();
    std::vector<Element> images;
    CheckReport rep;
    for (std::size_t j = 0; j < n; ++j) {
        Element s = a.zero();
        for (std::size_t i = 0; i < n; ++i)
            s = s + a.multiply(a.multiply(dd.right_dual(i), a.basis(j)), am.apply(a.basis(i)));
        for (std::size_t b = 0; b < n; ++b) {
            const Element lhs = a.multiply(s, am.apply(a.basis(b)));
            const Element rhs = a.multiply(a.basis(b), s);
            if (lhs != rhs)
                rep.add("remark-alpha-power",
                        "m=" + std::to_string(m) + " a=" + a.label(j) + " b=" + a.label(b));
        }
        images.push_back(s);
    }
    return {cdetail::image_span(a, images), rep};
}

struct CenterReport {
    Subspace center;
    Subspace z_alpha;
    Subspace z_alpha_inv;
    HigmanFamily higman;
};

inline CenterReport center_report(const Algebra& a, const DualData& dd) {
    return CenterReport{center(a), cdetail::twisted_center_impl(a, dd.nakayama),
                        cdetail::twisted_center_impl(a, LinearMap(dd.nakayama.inverse())),
                        higman_family(a, dd)};
}

// The twisted-center and Higman-ideal laws, checked on spanning sets:
//   lemma-2.5.1  alpha(Z_a) <= Z_a
//   lemma-2.5.2  alpha(xy) = xy for x, y in Z_a
//   lemma-2.5.3  Z_a' Z_a and Z_a Z_a' are ideals of Z(A)
//   lemma-2.6    H_a <= Z_a
//   lemma-2.7    H_a' <= Z_a'
//   lemma-2.8    the four mixed products are ideals of Z(A) inside H(A)
// plus the Higman-ideal facts for H(A) itself.
inline CheckReport verify_section2(const Algebra& a, const DualData& dd) {
    CheckReport rep;
    const CenterReport cr = center_report(a, dd);
    const Subspace& z = cr.center;
    const Subspace& za = cr.z_alpha;
    const Subspace& zai = cr.z_alpha_inv;

    for (std::size_t i = 0; i < za.dim(); ++i) {
        const Element x = Element(za.basis_vector(i));
        if (!za.contains(dd.nakayama.apply(x).coords()))
            rep.add("lemma-2.5.1", "alpha of twisted-center vector " + std::to_string(i));
        for (std::size_t j = 0; j < za.dim(); ++j) {
            const Element xy = a.multiply(x, Element(za.basis_vector(j)));
            if (dd.nakayama.apply(xy) != xy)
                rep.add("lemma-2.5.2", "pair (" + std::to_string(i) + "," + std::to_string(j) + ")");
        }
    }

    const Subspace prod_ia = product_span(a, zai, za);
    const Subspace prod_ai = product_span(a, za, zai);
    if (!is_ideal_of_center(a, z, prod_ia)) rep.add("lemma-2.5.3", "Z_a' Z_a");
    if (!is_ideal_of_center(a, z, prod_ai)) rep.add("lemma-2.5.3", "Z_a Z_a'");

    if (!za.contains(cr.higman.h_alpha)) rep.add("lemma-2.6", "H_a is not inside Z_a");
    if (!zai.contains(cr.higman.h_alpha_inv)) rep.add("lemma-2.7", "H_a' is not inside Z_a'");

    const Subspace& h = cr.higman.h;
    if (!is_ideal_of_center(a, z, h)) rep.add("higman-ideal", "H(A) is not an ideal of Z(A)");
    if (!cr.higman.presentations_agree)
        rep.add("higman-ideal", "dual-basis presentations of H / H_a disagree");

    const std::pair<const char*, Subspace> mixed[] = {
        {"H_a' Z_a", product_span(a, cr.higman.h_alpha_inv, za)},
        {"Z_a H_a'", product_span(a, za, cr.higman.h_alpha_inv)},
        {"H_a Z_a'", product_span(a, cr.higman.h_alpha, zai)},
        {"Z_a' H_a", product_span(a, zai, cr.higman.h_alpha)},
    };
    for (const auto& [name, s] : mixed) {
        if (!is_ideal_of_center(a, z, s)) rep.add("lemma-2.8", std::string(name) + " not an ideal of Z(A)");
        if (!h.contains(s)) rep.add("lemma-2.8", std::string(name) + " not inside H(A)");
    }
    return rep;
}

}  // namespace frobcell
