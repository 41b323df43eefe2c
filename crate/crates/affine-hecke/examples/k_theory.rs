//! The group-ring model of the K-group: classes of standard, simple,
//! Wakimoto and central objects, and the averaging map.
//!
//! Run with: cargo run --example k_theory

use affine_hecke::affweyl::{
    is_minimal_in_left_wfin_coset, length, render_element, simple_element, simple_reflections,
    IWElement,
};
use affine_hecke::dualrep::irreducible_character;
use affine_hecke::hecke::central_element;
use affine_hecke::kl::KLTable;
use affine_hecke::ktheory::{
    av_iw, class_central, class_ic, class_standard, class_wakimoto, multiply, render,
    render_classes, specialize_at_one, GroupRingElement, IWClassVector,
};
use affine_hecke::rootdata::{Coweight, RootDatum};

fn main() {
    let d = RootDatum::preset("GL2").unwrap();

    // At v = 1 the Hecke algebra degenerates onto Z[W]; standard and
    // costandard classes coincide with basis elements and multiply by the
    // group law.
    let t10 = IWElement::translation_of(Coweight(vec![1, 0]));
    let t01 = IWElement::translation_of(Coweight(vec![0, 1]));
    let prod = multiply(&d, &class_standard(&t10), &class_standard(&t01));
    println!("[Delta_t[1,0]] * [Delta_t[0,1]] = {}", render(&d, &prod));
    assert_eq!(prod, class_wakimoto(&Coweight(vec![1, 1])));

    // Simple classes are signed KL specializations; in rank one the class
    // of a simple reflection is the (paper-normalized) w - e.
    let table = KLTable::new(8);
    let s1 = simple_element(&d, simple_reflections(&d)[0]);
    let ic = class_ic(&d, &table, &s1).unwrap();
    println!("[IC_s1] = {}", render(&d, &ic));
    assert_eq!(ic, &class_standard(&s1) - &GroupRingElement::one(&d));

    // Central classes: weight multiplicities attached to translations.
    // They agree with the v = 1 image of the Bernstein central element —
    // two genuinely different computations.
    let mut std_char = affine_hecke::hecke::OrbitCharacter::new();
    std_char.insert(Coweight(vec![1, 0]), 1.into());
    std_char.insert(Coweight(vec![0, 1]), 1.into());
    let central = class_central(&d, &std_char).unwrap();
    println!("[Z_std] = {}", render(&d, &central));
    assert_eq!(
        central,
        specialize_at_one(&central_element(&d, &std_char).unwrap())
    );

    // The averaging map sends w to the basis vector at its coset label.
    // It reads the character back off the central class (the multiplicity
    // formula) ...
    let avg = av_iw(&d, &central);
    println!("av_iw([Z_std]) = {}", render_classes(&avg));
    assert_eq!(avg, IWClassVector::from_character(&std_char));

    // ... and it kills exactly the simple classes of non-minimal elements.
    println!("\n{:20} {:>8} {}", "w", "minimal", "av_iw([IC_w])");
    for coords in [[0, 0], [1, 0], [0, 1]] {
        for w_fin in d.weyl().elements() {
            let w = IWElement::new(Coweight(coords.to_vec()), w_fin);
            if length(&d, &w) > 3 {
                continue;
            }
            let avg = av_iw(&d, &class_ic(&d, &table, &w).unwrap());
            let minimal = is_minimal_in_left_wfin_coset(&d, &w);
            println!(
                "{:20} {:>8} {}",
                render_element(&d, &w),
                minimal,
                render_classes(&avg)
            );
            assert_eq!(avg.is_zero(), !minimal);
        }
    }

    // The same identities hold with real multiplicities: the A2 adjoint
    // character has a double zero weight, visible in the central class and
    // in its average.
    let d = RootDatum::preset("A2").unwrap();
    let adjoint = irreducible_character(&d, &Coweight(vec![1, 1])).unwrap();
    let central = class_central(&d, &adjoint).unwrap();
    let avg = av_iw(&d, &central);
    println!("\nA2 adjoint central class: {}", render(&d, &central));
    assert_eq!(avg, IWClassVector::from_character(&adjoint));
    assert_eq!(
        central.coeff(&IWElement::identity(d.lattice_rank())),
        2.into()
    );
}
