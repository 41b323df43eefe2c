//! The affine Hecke algebra in the T-basis: quadratic relation, products,
//! inverses, and the bar involution.
//!
//! Run with: cargo run --example hecke_algebra

use affine_hecke::affweyl::{simple_element, simple_reflections, IWElement};
use affine_hecke::hecke::{bar, inverse_t, multiply, render, HeckeElement};
use affine_hecke::laurent::LaurentPoly;
use affine_hecke::rootdata::{Coweight, RootDatum};

fn main() {
    let d = RootDatum::preset("GL2").unwrap();

    // The algebra is free over Z[v, v^-1] on T_x, with
    //   T_s T_x = T_{sx}                 if l(sx) > l(x)
    //   T_s T_x = T_{sx} + (v - v^-1)T_x if l(sx) < l(x).
    let s = simple_reflections(&d)[0];
    let ts = HeckeElement::t_basis(simple_element(&d, s));
    let square = multiply(&d, &ts, &ts);
    println!("T_s^2          = {}", render(&d, &square));
    let vmv = LaurentPoly::v() - LaurentPoly::v_pow(-1);
    assert_eq!(square, &HeckeElement::one(&d) + &ts.scaled(&vmv));

    // Translations compose up to lower-order corrections: T-basis elements
    // of dominant translations multiply without correction terms, while
    // mixed products pick them up.
    let t10 = HeckeElement::t_basis(IWElement::translation_of(Coweight(vec![1, 0])));
    let t01 = HeckeElement::t_basis(IWElement::translation_of(Coweight(vec![0, 1])));
    let prod = multiply(&d, &t10, &t01);
    println!("T_t[1,0]T_t[0,1] = {}", render(&d, &prod));

    // Basis vectors are invertible: T_s^-1 = T_s - (v - v^-1).
    let x = IWElement::translation_of(Coweight(vec![1, 0]));
    let inv = inverse_t(&d, &x);
    println!("T_t[1,0]^-1    = {}", render(&d, &inv));
    assert_eq!(
        multiply(&d, &HeckeElement::t_basis(x.clone()), &inv),
        HeckeElement::one(&d)
    );

    // The bar involution v -> v^-1, T_x -> (T_{x^-1})^-1 is the ring
    // involution whose fixed canonical basis drives Kazhdan-Lusztig theory
    // (next example). It is an involution:
    let h = &prod + &ts.scaled(&LaurentPoly::v());
    let twice = bar(&d, &bar(&d, &h));
    assert_eq!(twice, h);
    println!("bar(bar(h)) == h checked for h = {}", render(&d, &h));

    // Multiplication is associative across omega-twisted factors; the
    // length-zero element tau = t[1,0]s1 acts by permuting the T-basis.
    let tau = {
        let w = d.weyl().simple(0);
        IWElement::new(Coweight(vec![1, 0]), w)
    };
    let ttau = HeckeElement::t_basis(tau);
    let a = multiply(&d, &ttau, &multiply(&d, &ts, &ttau));
    let b = multiply(&d, &multiply(&d, &ttau, &ts), &ttau);
    assert_eq!(a, b);
    println!("T_tau T_s T_tau = {}", render(&d, &a));
}
