//! The classical picture in characteristic two: all tangents of a conic
//! pass through one point, the nucleus, and adding that point to the conic
//! gives a (q+2)-arc.
//!
//! Run with: cargo run --example conic_nucleus

use veronucleus::gf::Field;
use veronucleus::nrc::{all_subsets_independent, NrcSpec, Parameter};

fn main() {
    let f = Field::new(2, 2).unwrap();
    let s = NrcSpec::new(2, f.clone());
    println!("conic in PG(2, 4): the curve (1, x, x^2) plus the point at infinity\n");

    println!("=== the five points ===\n");
    for pt in s.curve_points() {
        let coords: Vec<Vec<u64>> = pt.coords.iter().map(|&c| f.coeffs(c)).collect();
        match pt.parameter {
            Parameter::Finite(x) => println!("x = {:?}: {:?}", f.coeffs(x), coords),
            Parameter::Infinity => println!("x = inf:    {coords:?}"),
        }
    }

    println!("\n=== the five tangent lines all contain (0, 1, 0) ===\n");
    let nucleus_point = vec![f.zero(), f.one(), f.zero()];
    for u in s.parameters() {
        let tangent = s.osculating_subspace(u, 1);
        assert!(tangent.contains(&f, &nucleus_point));
        println!("tangent at {u:?}: projective dim {}", tangent.projective_dim());
    }

    let nucleus = s.nucleus_bruteforce(1);
    println!("\nintersection of all tangents: projective dim {}", nucleus.projective_dim());
    println!("nucleus basis row: {:?}", nucleus.basis().row(0).iter().map(|&c| f.coeffs(c)).collect::<Vec<_>>());

    // digit route to the same point
    let basis = s.nucleus_basis_formula(1);
    println!("digit criterion gives base-point index set {:?}", basis.members());

    println!("\n=== conic + nucleus is a 6-arc in PG(2, 4) ===\n");
    let mut points: Vec<_> = s.curve_points().into_iter().map(|p| p.coords).collect();
    points.push(nucleus_point);
    let ok = all_subsets_independent(&f, &points, 3, 10_000);
    println!("every 3 of the {} points independent: {ok}", points.len());

    // the same story one field up
    let f8 = Field::new(2, 3).unwrap();
    let s8 = NrcSpec::new(2, f8.clone());
    let nucleus8 = s8.nucleus_bruteforce(1);
    let mut points8: Vec<_> = s8.curve_points().into_iter().map(|p| p.coords).collect();
    points8.push(nucleus8.basis().row(0).to_vec());
    println!(
        "over GF(8): conic + nucleus is a {}-point set, 3-wise independent: {}",
        points8.len(),
        all_subsets_independent(&f8, &points8, 3, 10_000)
    );
}
