//! Root data: presets, pairings, Weyl groups, orbits, and coweight classes.
//!
//! Run with: cargo run --example root_data

use affine_hecke::rootdata::{Coweight, CoweightClass, RootDatum};

fn main() {
    // Presets cover the classical test cases; "GL<n>" gives the full
    // lattice Z^n with its determinant direction, and explicit data can be
    // loaded from JSON ({"cartan": [[..]], ...}).
    for name in ["SL2", "PGL2", "GL2", "A2", "C2", "G2"] {
        let d = RootDatum::preset(name).unwrap();
        println!(
            "{:5} rank {} lattice rank {} |W| {:3} Coxeter number {}",
            d.name(),
            d.rank(),
            d.lattice_rank(),
            d.weyl().order(),
            d.coxeter_number(),
        );
    }

    // Pairings: rows of the Cartan matrix are <alpha_j^vee, alpha_i>.
    let d = RootDatum::preset("C2").unwrap();
    println!("\nC2 Cartan matrix {:?}", d.cartan());
    let omega1 = Coweight(vec![1, 1]);
    for i in 0..d.rank() {
        println!(
            "<(1,1), alpha_{}> = {}",
            i + 1,
            d.pairing(&omega1, d.simple_root(i))
        );
    }

    // Weyl orbits and dominant representatives.
    let nu = Coweight(vec![-1, 2]);
    let orbit = d.weyl_orbit(&nu);
    let (dom, w) = d.dominant_representative(&nu);
    println!(
        "\norbit of {} has size {}; dominant representative {} = w({}) with l(w) = {}",
        nu,
        orbit.len(),
        dom,
        nu,
        d.weyl().length(w)
    );
    assert!(d.is_dominant(&dom));
    assert_eq!(d.weyl().apply(w, &nu), dom);

    // The sum of positive coroots pairs to 2 with every simple root, and
    // computes translation lengths (see the affine_weyl example).
    let two_rho_check = d.two_rho_check();
    println!("sum of positive coroots: {}", two_rho_check);
    for i in 0..d.rank() {
        assert_eq!(d.pairing(&two_rho_check, d.simple_root(i)), 2);
    }

    // Minuscule and quasi-minuscule coweights drive the smallest central
    // classes; the classification is a library primitive.
    println!();
    for (name, coords) in [("GL2", vec![1, 0]), ("C2", vec![1, 1]), ("C2", vec![1, 2])] {
        let d = RootDatum::preset(name).unwrap();
        let mu = Coweight(coords);
        let class = d.classify_coweight(&mu).unwrap();
        let label = match class {
            CoweightClass::Minuscule => "minuscule",
            CoweightClass::QuasiMinuscule => "quasi-minuscule",
            CoweightClass::Neither => "neither",
        };
        println!("{:4} {} is {}", name, mu, label);
    }
}
