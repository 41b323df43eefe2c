//! Dual-group representations: weight multiplicities by Freudenthal's
//! formula, Weyl dimensions, tensor products, and minuscule decompositions.
//!
//! Run with: cargo run --example dual_characters

use affine_hecke::dualrep::{
    decompose_character, irreducible_character, minuscule_decomposition, tensor_character,
    total_dimension, weyl_dimension,
};
use affine_hecke::rootdata::{Coweight, RootDatum};
use num_bigint::BigInt;

fn main() {
    // Characters live on the coweight lattice: the representations are
    // those of the Langlands dual group, whose weights are our coweights.
    let d = RootDatum::preset("A2").unwrap();
    let adjoint = irreducible_character(&d, &Coweight(vec![1, 1])).unwrap();
    println!("A2 adjoint character (dimension {}):", total_dimension(&adjoint));
    for (nu, m) in &adjoint {
        println!("  {}: {}", nu, m);
    }
    assert_eq!(total_dimension(&adjoint), BigInt::from(8));
    assert_eq!(adjoint[&Coweight(vec![0, 0])], BigInt::from(2));

    // The Weyl product formula cross-checks the Freudenthal mass.
    for coords in [vec![1, 1], vec![2, 1], vec![2, 2]] {
        let mu = Coweight(coords);
        let dim = weyl_dimension(&d, &mu).unwrap();
        let ch = irreducible_character(&d, &mu).unwrap();
        println!("dim V_{} = {} ({} distinct weights)", mu, dim, ch.len());
        assert_eq!(total_dimension(&ch), dim);
    }

    // Tensor products multiply characters; the greedy decomposition
    // recovers the irreducible pieces with multiplicities.
    let d = RootDatum::preset("GL2").unwrap();
    let std_char = irreducible_character(&d, &Coweight(vec![1, 0])).unwrap();
    let square = tensor_character(&std_char, &std_char);
    let pieces = decompose_character(&d, &square).unwrap();
    println!("\nGL2: std ⊗ std decomposes as:");
    for (mu, m) in &pieces {
        println!("  V_{} with multiplicity {}", mu, m);
    }
    assert_eq!(pieces.len(), 2); // Sym^2 + det

    // On GL-type lattices every dominant coweight is a sum of minuscule
    // fundamental coweights (plus central corrections): the decomposition
    // that turns central classes into tensor products of minuscule ones.
    let d = RootDatum::preset("GL3").unwrap();
    for coords in [vec![3, 1, 0], vec![1, 1, 0], vec![2, -1, -1]] {
        let mu = Coweight(coords);
        let factors = minuscule_decomposition(&d, &mu).unwrap();
        let rendered: Vec<String> = factors.iter().map(|f| f.to_string()).collect();
        println!("GL3: {} = {}", mu, rendered.join(" + "));
        let mut total = Coweight::zero(3);
        for f in &factors {
            total = total.add(f);
        }
        assert_eq!(total, mu);
    }

    // Other lattices do not admit such decompositions; the library says so
    // instead of guessing.
    let d = RootDatum::preset("C2").unwrap();
    let err = minuscule_decomposition(&d, &Coweight(vec![1, 1])).unwrap_err();
    println!("\nC2 decomposition: {}", err);

    // Quasi-minuscule characters are orbit + zero: the 7-dimensional
    // fundamental representation of G2's dual.
    let d = RootDatum::preset("G2").unwrap();
    let qm = irreducible_character(&d, &Coweight(vec![1, 2])).unwrap();
    println!(
        "G2 quasi-minuscule character: dimension {}, zero-weight multiplicity {}",
        total_dimension(&qm),
        qm[&Coweight(vec![0, 0])]
    );
}
