//! The antispherical module: projection, the right action, and the kernel
//! dichotomy for canonical basis elements.
//!
//! Run with: cargo run --example antispherical

use affine_hecke::affweyl::{
    is_minimal_in_left_wfin_coset, length, render_element, simple_element, simple_reflections,
    IWElement,
};
use affine_hecke::antispherical::{act, canonical_image, kernel_check, project, render, SignConvention};
use affine_hecke::hecke::HeckeElement;
use affine_hecke::kl::KLTable;
use affine_hecke::rootdata::{Coweight, RootDatum};

fn main() {
    let d = RootDatum::preset("GL2").unwrap();

    // The module is sign ⊗_{H_fin} H: basis N_nu indexed by coweights
    // (equivalently, by minimal coset representatives). Projection sends
    // T_{u w_nu} to chi(T_u) N_nu where chi is the sign character of the
    // finite Hecke algebra: T_s -> -v^-1.
    let s1 = simple_element(&d, simple_reflections(&d)[0]);
    let proj = project(&d, &HeckeElement::t_basis(s1.clone()), SignConvention::Sign);
    println!("project(T_s1)        = {}", render(&proj));

    let t10 = IWElement::translation_of(Coweight(vec![1, 0]));
    let proj = project(&d, &HeckeElement::t_basis(t10.clone()), SignConvention::Sign);
    println!("project(T_t[1,0])    = {}", render(&proj));

    // The module carries the right regular action.
    let n0 = project(&d, &HeckeElement::one(&d), SignConvention::Sign);
    let moved = act(&d, &n0, &HeckeElement::t_basis(t10), SignConvention::Sign);
    println!("N_0 * T_t[1,0]       = {}", render(&moved));

    // Kernel dichotomy: the canonical basis element C_w projects to zero
    // exactly when w is NOT the minimal element of its left W_fin-coset.
    // This is the numerical shadow of the statement that the kernel of the
    // quotient is spanned by those C_w.
    let table = KLTable::new(8);
    println!("\n{:22} {:>7} {:>8} {}", "w", "length", "minimal", "image");
    let mut shown = 0;
    for coords in [[0, 0], [1, 0], [0, 1], [1, 1], [-1, 1]] {
        for w_fin in d.weyl().elements() {
            let w = IWElement::new(Coweight(coords.to_vec()), w_fin);
            if length(&d, &w) > 4 || shown >= 10 {
                continue;
            }
            shown += 1;
            let minimal = is_minimal_in_left_wfin_coset(&d, &w);
            let img = canonical_image(&d, &table, &w, SignConvention::Sign).unwrap();
            println!(
                "{:22} {:>7} {:>8} {}",
                render_element(&d, &w),
                length(&d, &w),
                minimal,
                render(&img)
            );
            assert_eq!(img.is_zero(), !minimal);
            assert_eq!(
                kernel_check(&d, &table, &w, SignConvention::Sign).unwrap(),
                !minimal
            );
        }
    }

    // Both consistent sign normalizations are available; the dichotomy is
    // insensitive to the choice (the trivial convention pairs with the
    // minus canonical basis).
    let w = simple_element(&d, simple_reflections(&d)[1]); // affine s0
    for conv in [SignConvention::Sign, SignConvention::Trivial] {
        println!(
            "\nconvention {:?}: C_s0 image = {}",
            conv,
            render(&canonical_image(&d, &table, &w, conv).unwrap())
        );
        assert!(!kernel_check(&d, &table, &w, conv).unwrap());
    }
}
