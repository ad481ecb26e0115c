//! Veronese surfaces and their hyperplane nuclei: the dual Veronese map,
//! incidence, and the nucleus dimensions that change with the field size.
//!
//! Run with: cargo run --example veronese_nucleus

use veronucleus::gf::Field;
use veronucleus::veronese::{osculating_dim_formula, VeroneseSpec};

fn main() {
    println!("=== the quadric Veronese surface V_2^2 over GF(4) ===\n");
    let f = Field::new(2, 2).unwrap();
    let s = VeroneseSpec::new(2, 2, f.clone());
    println!("coordinates indexed by exponent tuples {:?}", s.exponents());

    let x = [f.one(), f.one(), f.generator()];
    let img = s.veronese_point(&x);
    println!(
        "image of a parameter point: {:?}",
        img.iter().map(|&c| f.coeffs(c)).collect::<Vec<_>>()
    );

    let nucleus = s.hyperplane_nucleus_bruteforce();
    println!(
        "\nintersection of all {} osculating hyperplanes: projective dim {} (a plane)",
        s.parameter_hyperplanes().len(),
        nucleus.projective_dim()
    );
    println!("formula gives {}", s.hyperplane_nucleus_dim());
    println!("spanned by the mixed-exponent base points {:?}", s.hyperplane_nucleus_basis());

    println!("\n=== the cubic surface V_2^3: field size changes the answer ===\n");
    for e in [1u32, 2] {
        let f = Field::new(2, e).unwrap();
        let s = VeroneseSpec::new(2, 3, f.clone());
        let bf = s.hyperplane_nucleus_bruteforce();
        println!(
            "over {}: {} hyperplanes cut out dim {} (formula {}, hypothesis q >= t: {})",
            f.descriptor(),
            s.parameter_hyperplanes().len(),
            bf.projective_dim(),
            s.hyperplane_nucleus_dim(),
            s.in_hypothesis()
        );
    }

    println!("\n=== incidence of the dual map over GF(3) ===\n");
    let f = Field::new(3, 1).unwrap();
    let s = VeroneseSpec::new(2, 2, f.clone());
    let a = [f.one(), f.one(), f.one()];
    let h = s.osculating_hyperplane(&a);
    let mut on = 0;
    let mut off = 0;
    for x in s.parameter_hyperplanes() {
        let mut pairing = f.zero();
        for (ai, xi) in a.iter().zip(&x) {
            pairing = f.add(pairing, f.mul(*ai, *xi));
        }
        let img = s.veronese_point(&x);
        let mut dot = f.zero();
        for (hi, yi) in h.iter().zip(&img) {
            dot = f.add(dot, f.mul(*hi, *yi));
        }
        assert_eq!(dot.is_zero(), pairing.is_zero());
        if dot.is_zero() {
            on += 1;
        } else {
            off += 1;
        }
    }
    println!("points on the parameter line x0+x1+x2 = 0 land on its osculating hyperplane: {on}");
    println!("points off it stay off: {off}");

    println!("\n=== osculating dimensions of V_3^4 (characteristic-free) ===\n");
    for r in 0..3u64 {
        let dims: Vec<i64> = (-1..4i64).map(|k| osculating_dim_formula(r, k, 3, 4)).collect();
        println!("r = {r}: dims over k = -1..=3: {dims:?}");
    }
}
