//! Bernstein's commuting elements theta_nu and the central elements
//! attached to Weyl-invariant multiplicity functions.
//!
//! Run with: cargo run --example bernstein_center

use affine_hecke::dualrep::irreducible_character;
use affine_hecke::hecke::{
    bernstein_theta, central_element, is_central, multiply, render, OrbitCharacter,
};
use affine_hecke::rootdata::{Coweight, RootDatum};
use num_bigint::BigInt;

fn main() {
    let d = RootDatum::preset("GL2").unwrap();

    // theta_nu = T_{t_nu1} T_{t_nu2}^{-1} for any splitting nu = nu1 - nu2
    // into dominant parts; the result is independent of the splitting and
    // theta is a group homomorphism from the coweight lattice.
    for coords in [vec![1, 0], vec![0, 1], vec![-1, 1]] {
        let nu = Coweight(coords);
        let theta = bernstein_theta(&d, &nu);
        println!("theta_{} = {}", nu, render(&d, &theta));
    }
    let a = bernstein_theta(&d, &Coweight(vec![1, 0]));
    let b = bernstein_theta(&d, &Coweight(vec![-1, 1]));
    let sum = bernstein_theta(&d, &Coweight(vec![0, 1]));
    assert_eq!(multiply(&d, &a, &b), sum);
    println!("theta_(1,0) * theta_(-1,1) == theta_(0,1) checked");

    // Weyl-invariant sums of theta's are central. The standard character of
    // the dual group of GL2 has weights (1,0) and (0,1) with multiplicity 1.
    let mut std_char = OrbitCharacter::new();
    std_char.insert(Coweight(vec![1, 0]), BigInt::from(1));
    std_char.insert(Coweight(vec![0, 1]), BigInt::from(1));
    let z = central_element(&d, &std_char).unwrap();
    println!("\nz_std = {}", render(&d, &z));
    assert!(is_central(&d, &z));
    println!("z_std commutes with every T_s and T_omega");

    // A non-invariant multiplicity function is rejected.
    let mut lopsided = OrbitCharacter::new();
    lopsided.insert(Coweight(vec![1, 0]), BigInt::from(1));
    assert!(central_element(&d, &lopsided).is_err());
    println!("non-invariant multiplicity functions are rejected");

    // Characters from the dual-group side plug in directly: the adjoint
    // character of A2 gives a central element supported on 7 thetas.
    let d = RootDatum::preset("A2").unwrap();
    let adjoint = irreducible_character(&d, &Coweight(vec![1, 1])).unwrap();
    let z = central_element(&d, &adjoint).unwrap();
    assert!(is_central(&d, &z));
    println!(
        "\nA2 adjoint central element has {} T-basis terms (from {} weights)",
        z.num_terms(),
        adjoint.len()
    );
}
