//! The lattice of invariant subspaces of a degree-31 curve in
//! characteristic 3: irreducible index sets from interval families of the
//! digits of 32, the Hasse diagram, and the DOT export.
//!
//! Run with: cargo run --example invariant_lattice

use veronucleus::base_p::{to_digits, Prime};
use veronucleus::lattice::{
    build_lattice, closure_bruteforce, irreducible_descriptors, is_chain_criterion,
};
use veronucleus::report::{lattice_dot, lattice_report};

fn main() {
    let p = Prime::new(3).unwrap();
    let n = 31u64;
    println!("n = 31, p = 3, b = n+1 = 32 = {} in base 3\n", to_digits(32, p));

    println!("=== irreducible invariant subspaces (as index sets) ===\n");
    for (set, descriptors) in irreducible_descriptors(n, p) {
        let descs: Vec<String> = descriptors
            .iter()
            .map(|d| {
                if d.intervals.is_empty() {
                    format!("(cut {})", d.cut)
                } else {
                    format!("(cut {}, intervals {:?})", d.cut, d.intervals)
                }
            })
            .collect();
        println!("{:?}\n    from {}", set.members(), descs.join(", "));
    }

    let lattice = build_lattice(n, p);
    println!("\n=== lattice shape ===\n");
    println!("nodes: {}", lattice.nodes.len());
    println!("irreducible: {}", lattice.nodes.iter().filter(|x| x.irreducible).count());
    println!("nuclei: {}", lattice.nodes.iter().filter(|x| x.nucleus).count());
    println!("totally ordered: {} (digit test says {})",
        lattice.is_totally_ordered(), is_chain_criterion(n, p));

    println!("\n=== DOT (pipe into `dot -Tsvg`) ===\n");
    print!("{}", lattice_dot(&lattice_report(n, p)));

    // For small degrees the whole lattice can be cross-checked against a
    // scan of all 2^(n+1) index subsets.
    println!("\n=== oracle check at n = 10, p = 2 ===\n");
    let small = build_lattice(10, Prime::new(2).unwrap());
    let scan = closure_bruteforce(10, Prime::new(2).unwrap());
    println!(
        "interval-family lattice: {} nodes; subset scan: {} closed sets; equal: {}",
        small.nodes.len(),
        scan.len(),
        small.node_sets() == scan
    );
}
