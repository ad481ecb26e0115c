//! A tour of the finite-field arithmetic: extension construction via the
//! smallest irreducible modulus, inverses, and the Frobenius automorphism.
//!
//! Run with: cargo run --example finite_fields

use veronucleus::gf::Field;

fn poly_string(coeffs: &[u64]) -> String {
    let mut terms = Vec::new();
    for (i, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let term = match i {
            0 => format!("{c}"),
            1 if c == 1 => "x".to_string(),
            1 => format!("{c}x"),
            _ if c == 1 => format!("x^{i}"),
            _ => format!("{c}x^{i}"),
        };
        terms.push(term);
    }
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" + ")
    }
}

fn main() {
    println!("=== field construction ===\n");
    for (p, e) in [(2u64, 1u32), (2, 2), (2, 3), (3, 2), (3, 4), (5, 2)] {
        let f = Field::new(p, e).unwrap();
        match f.modulus() {
            Some(m) => println!("{}: modulus {}", f.descriptor(), poly_string(m)),
            None => println!("{}: prime field, no modulus", f.descriptor()),
        }
    }

    println!("\n=== arithmetic in GF(9) ===\n");
    let f = Field::new(3, 2).unwrap();
    let x = f.from_coeffs(&[0, 1]);
    let y = f.from_coeffs(&[2, 1]); // 2 + x
    println!("coefficients are listed constant term first");
    println!("x * (2+x)      = {:?}", f.coeffs(f.mul(x, y)));
    println!("inv(x)         = {:?}", f.coeffs(f.inv(x)));
    println!("x * inv(x)     = {:?}", f.coeffs(f.mul(x, f.inv(x))));
    println!("-(2+x)         = {:?}", f.coeffs(f.neg(y)));

    println!("\n=== Frobenius a -> a^3 on GF(9) ===\n");
    for a in f.all_elements() {
        let fr = f.frobenius(a);
        let twice = f.frobenius(fr);
        println!(
            "a = {:?}  a^3 = {:?}  a^9 = {:?}{}",
            f.coeffs(a),
            f.coeffs(fr),
            f.coeffs(twice),
            if twice == a { "  (back to a)" } else { "" }
        );
    }

    println!("\n=== the unit group of GF(8) is cyclic ===\n");
    let f = Field::new(2, 3).unwrap();
    let g = f.generator();
    let mut power = f.one();
    for k in 0..7u64 {
        println!("g^{k} = {:?}", f.coeffs(power));
        power = f.mul(power, g);
    }
    assert_eq!(power, f.one());
    println!("g^7 = 1: every non-zero element is a power of g");
}
