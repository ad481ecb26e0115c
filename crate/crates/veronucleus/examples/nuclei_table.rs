//! Nucleus dimensions of normal rational curves: the digit formula next to
//! the geometric brute force, and the degree-50 table that only the formula
//! makes cheap.
//!
//! Run with: cargo run --release --example nuclei_table

use veronucleus::base_p::{to_digits, Prime};
use veronucleus::nrc::{count_nuclei, nucleus_dim_by_digits, point_nucleus_index};
use veronucleus::report::{nuclei_report, nuclei_table};

fn main() {
    let p2 = Prime::new(2).unwrap();

    // A curve small enough to intersect all osculating subspaces directly:
    // degree 10 over GF(16), brute force and formula side by side.
    println!("=== degree 10 over GF(16): formula vs brute force ===\n");
    let report = nuclei_report(10, 2, 4, 1 << 20).unwrap();
    print!("{}", nuclei_table(&report));
    println!(
        "\ndistinct nuclei: {} (non-zero digits of 11 = {} in base 2)\n",
        report.distinct_nuclei_formula,
        to_digits(11, p2)
    );

    // The degree-50 curve: 51 values of k from one digit expansion.
    println!("=== degree 50, characteristic 2, by formula ===\n");
    println!("n+1 = 51 = {} in base 2", to_digits(51, p2));
    let mut k = -1i64;
    while k < 50 {
        let dim = nucleus_dim_by_digits(50, p2, k);
        let mut hi = k;
        while hi + 1 < 50 && nucleus_dim_by_digits(50, p2, hi + 1) == dim {
            hi += 1;
        }
        println!("k = {k:>3} ..= {hi:>3}: dim {dim}");
        k = hi + 1;
    }
    println!("distinct nuclei: {}", count_nuclei(50, p2));

    // Curves whose smallest non-empty nucleus is a single point.
    println!("\n=== point nuclei: n = 2p^i - 2 ===\n");
    for n in 2..=30u64 {
        if let Some(idx) = point_nucleus_index(n, p2) {
            println!("n = {n:>2}: smallest non-empty nucleus is the base point at index {idx}");
        }
    }
}
