//! Pascal's triangle modulo a prime: the Sierpinski-style zero pattern and
//! the class partition of the vanishing entries.
//!
//! Run with: cargo run --example pascal_triangle

use veronucleus::base_p::{
    phi, render_triangle, sigma, to_digits, top_line, zero_class, Prime,
};

fn main() {
    let p2 = Prime::new(2).unwrap();
    let p3 = Prime::new(3).unwrap();

    println!("=== Pascal's triangle mod 2, 16 rows ===\n");
    println!("{}", render_triangle(16, p2));

    println!("=== Pascal's triangle mod 3, 9 rows ===\n");
    println!("{}", render_triangle(9, p3));

    // Every blank entry belongs to a maximal zero triangle; the class index
    // is the size exponent of that triangle.
    println!("=== zero classes in rows 0..8 (mod 2) ===\n");
    for n in 0..8u64 {
        let mut classes = Vec::new();
        for j in 0..=n {
            if let Some(c) = zero_class(n, j, p2) {
                classes.push(format!("({n},{j})→class {}", c.class_index));
            }
        }
        if !classes.is_empty() {
            println!("row {n}: {}", classes.join("  "));
        }
    }

    // Counting zeros of row 50 without scanning: the digit formulas.
    println!("\n=== row 50 mod 2 by formula ===\n");
    let n = 50u64;
    println!("50 = {} in base 2", to_digits(n, p2));
    println!("zeros in row 50: sigma(1,50) = {}", sigma(1, n, p2));
    for i in 1..=6u32 {
        let count = phi(i, n, p2);
        println!("  class {i}: {count} entries");
    }

    // The top-line function locates the zero triangles vertically.
    println!("\ntop lines of b = 51: T(2,51) = {}, T(5,51) = {}",
        top_line(2, 51, p2), top_line(5, 51, p2));
}
