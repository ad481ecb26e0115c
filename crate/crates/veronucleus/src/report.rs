//! Serializable reports and text renderings for the CLI and examples.
//!
//! Everything here is deterministic: node lists, basis indices, and table
//! columns come out sorted, so identical inputs produce byte-identical
//! output. JSON structures carry a `schema_version` and round-trip through
//! serde, which is what the test suite validates them against.

use crate::base_p::{phi, render_triangle, sigma, to_u64, zeros_in_row, Digits, Prime};
use crate::gf::{Field, FieldElement, GfError};
use crate::lattice::{build_lattice, is_chain_criterion, FamilyDescriptor};
use crate::linalg::Subspace;
use crate::nrc::NrcSpec;
use crate::veronese::VeroneseSpec;
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

// ---------------------------------------------------------------- pascal --

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct PascalReport {
    pub schema_version: u32,
    pub p: u64,
    pub rows: u32,
    pub row_stats: Vec<RowStats>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct RowStats {
    pub n: u64,
    /// Number of vanishing entries in the row (all classes).
    pub zeros: u64,
    /// Per-class counts for each non-empty class of the row.
    pub classes: Vec<ClassStat>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct ClassStat {
    pub class: u32,
    /// Entries of exactly this class in the row: Φ(class, n).
    pub phi: u64,
    /// Entries of this class or higher: Σ(class, n).
    pub sigma: u64,
}

pub fn pascal_report(rows: u32, p: Prime) -> PascalReport {
    let row_stats = (0..rows as u64)
        .map(|n| {
            let len = Digits::new(n, p).len() as u32;
            let classes: Vec<ClassStat> = (1..=len)
                .filter_map(|i| {
                    let count = to_u64(&phi(i, n, p));
                    (count > 0).then(|| ClassStat {
                        class: i,
                        phi: count,
                        sigma: to_u64(&sigma(i, n, p)),
                    })
                })
                .collect();
            RowStats { n, zeros: to_u64(&zeros_in_row(n, p)), classes }
        })
        .collect();
    PascalReport { schema_version: SCHEMA_VERSION, p: p.get(), rows, row_stats }
}

pub fn pascal_ascii(rows: u32, p: Prime) -> String {
    render_triangle(rows, p)
}

pub fn pascal_table(report: &PascalReport) -> String {
    let mut out = String::from("row | zeros | classes (class: phi / sigma)\n");
    for rs in &report.row_stats {
        let classes = rs
            .classes
            .iter()
            .map(|c| format!("{}: {} / {}", c.class, c.phi, c.sigma))
            .collect::<Vec<_>>()
            .join(", ");
        out.push_str(&format!("{:>3} | {:>5} | {}\n", rs.n, rs.zeros, classes));
    }
    out
}

// ------------------------------------------------------------- subspaces --

/// JSON shape of a subspace: basis rows as per-entry coefficient arrays.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct SubspaceRepr {
    pub ambient_dim: usize,
    pub field: String,
    pub projective_dim: i64,
    pub basis: Vec<Vec<Vec<u64>>>,
}

pub fn subspace_repr(f: &Field, s: &Subspace) -> SubspaceRepr {
    let basis = (0..s.rank())
        .map(|r| s.basis().row(r).iter().map(|&x| f.coeffs(x)).collect())
        .collect();
    SubspaceRepr {
        ambient_dim: s.ambient_dim(),
        field: f.descriptor(),
        projective_dim: s.projective_dim(),
        basis,
    }
}

/// JSON shape of a field element.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct ElementRepr {
    pub field: String,
    pub coeffs: Vec<u64>,
}

pub fn element_repr(f: &Field, x: FieldElement) -> ElementRepr {
    ElementRepr { field: f.descriptor(), coeffs: f.coeffs(x) }
}

// --------------------------------------------------------------- nuclei --

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct NucleiReport {
    pub schema_version: u32,
    pub n: usize,
    pub p: u64,
    pub e: u32,
    pub q: u64,
    pub field: String,
    /// Non-zero digits of n+1 in base p (valid for q ≥ n).
    pub distinct_nuclei_formula: u32,
    pub count_applicable: bool,
    pub arc_regime: bool,
    pub entries: Vec<NucleusEntry>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct NucleusEntry {
    pub k: i64,
    pub dim_formula: i64,
    pub dim_bruteforce: i64,
    pub basis_indices: Vec<u64>,
    pub in_hypothesis: bool,
}

pub fn nuclei_report(n: usize, p: u64, e: u32, cap: u64) -> Result<NucleiReport, GfError> {
    let field = Field::with_cap(p, e, cap)?;
    let s = NrcSpec::new(n, field.clone());
    let entries = (-1..n as i64)
        .map(|k| {
            let formula = s.nucleus_dim_formula(k);
            NucleusEntry {
                k,
                dim_formula: formula.dim,
                dim_bruteforce: s.nucleus_bruteforce(k).projective_dim(),
                basis_indices: s.nucleus_basis_formula(k).members().to_vec(),
                in_hypothesis: formula.in_hypothesis,
            }
        })
        .collect();
    Ok(NucleiReport {
        schema_version: SCHEMA_VERSION,
        n,
        p,
        e,
        q: s.q(),
        field: field.descriptor(),
        distinct_nuclei_formula: s.count_nuclei(),
        count_applicable: s.count_applicable(),
        arc_regime: s.is_arc_regime(),
        entries,
    })
}

/// Two-row table with consecutive k of equal dimensions collapsed into one
/// column, the shape the dimension tables are usually shown in.
pub fn nuclei_table(report: &NucleiReport) -> String {
    let mut groups: Vec<(Vec<i64>, i64, i64)> = Vec::new();
    for entry in &report.entries {
        match groups.last_mut() {
            Some((ks, df, db))
                if *df == entry.dim_formula && *db == entry.dim_bruteforce =>
            {
                ks.push(entry.k);
            }
            _ => groups.push((vec![entry.k], entry.dim_formula, entry.dim_bruteforce)),
        }
    }
    let headers: Vec<String> = groups
        .iter()
        .map(|(ks, _, _)| match ks.len() {
            1 => format!("{}", ks[0]),
            2 => format!("{},{}", ks[0], ks[1]),
            _ => format!("{},...,{}", ks[0], ks.last().unwrap()),
        })
        .collect();
    let formula: Vec<String> = groups.iter().map(|(_, df, _)| df.to_string()).collect();
    let brute: Vec<String> = groups.iter().map(|(_, _, db)| db.to_string()).collect();

    let mut widths = Vec::new();
    for i in 0..groups.len() {
        widths.push(headers[i].len().max(formula[i].len()).max(brute[i].len()));
    }
    let label_width = "dim (bruteforce)".len();
    let render = |label: &str, cells: &[String]| {
        let mut line = format!("{label:<label_width$}");
        for (cell, w) in cells.iter().zip(&widths) {
            line.push_str(&format!(" | {cell:>w$}"));
        }
        line.push('\n');
        line
    };
    let mut out = String::new();
    out.push_str(&render("k", &headers));
    out.push_str(&render("dim (formula)", &formula));
    out.push_str(&render("dim (bruteforce)", &brute));
    out
}

// --------------------------------------------------------------- lattice --

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct LatticeReport {
    pub schema_version: u32,
    pub n: u64,
    pub p: u64,
    pub nodes: Vec<NodeReport>,
    /// (lower, upper) indices into `nodes` forming the Hasse covers.
    pub cover_edges: Vec<(usize, usize)>,
    pub is_chain: bool,
    /// The digit-test prediction for `is_chain`; the two always agree.
    pub chain_criterion: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct NodeReport {
    pub indices: Vec<u64>,
    pub irreducible: bool,
    pub nucleus: bool,
    pub descriptors: Vec<FamilyDescriptor>,
}

pub fn lattice_report(n: u64, p: Prime) -> LatticeReport {
    let lattice = build_lattice(n, p);
    let nodes = lattice
        .nodes
        .iter()
        .map(|node| NodeReport {
            indices: node.set.members().to_vec(),
            irreducible: node.irreducible,
            nucleus: node.nucleus,
            descriptors: node.descriptors.clone(),
        })
        .collect();
    LatticeReport {
        schema_version: SCHEMA_VERSION,
        n,
        p: p.get(),
        nodes,
        cover_edges: lattice.cover_edges.clone(),
        is_chain: lattice.is_totally_ordered(),
        chain_criterion: is_chain_criterion(n, p),
    }
}

/// Hasse diagram in DOT: filled circles are irreducible nodes, doubled
/// peripheries mark nuclei, edges point upward in the order.
pub fn lattice_dot(report: &LatticeReport) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "digraph invariant_lattice_n{}_p{} {{\n  rankdir=BT;\n  node [shape=circle];\n",
        report.n, report.p
    ));
    for (i, node) in report.nodes.iter().enumerate() {
        let label = format!(
            "{{{}}}",
            node.indices.iter().map(|j| j.to_string()).collect::<Vec<_>>().join(",")
        );
        let mut attrs = vec![format!("label=\"{label}\"")];
        if node.irreducible {
            attrs.push("style=filled".to_string());
            attrs.push("fillcolor=gray80".to_string());
        }
        if node.nucleus {
            attrs.push("peripheries=2".to_string());
        }
        out.push_str(&format!("  n{i} [{}];\n", attrs.join(", ")));
    }
    for (lo, hi) in &report.cover_edges {
        out.push_str(&format!("  n{lo} -> n{hi};\n"));
    }
    out.push_str("}\n");
    out
}

// -------------------------------------------------------------- veronese --

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct VeroneseReport {
    pub schema_version: u32,
    pub m: usize,
    pub t: u64,
    pub p: u64,
    pub e: u32,
    pub field: String,
    pub ambient_dim: usize,
    pub nucleus: VeroneseNucleus,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct VeroneseNucleus {
    pub dim_formula: i64,
    pub dim_bruteforce: i64,
    pub basis_tuples: Vec<Vec<u64>>,
    pub in_hypothesis: bool,
    pub subspace: SubspaceRepr,
}

pub fn veronese_report(m: usize, t: u64, p: u64, e: u32, cap: u64) -> Result<VeroneseReport, GfError> {
    let field = Field::with_cap(p, e, cap)?;
    let s = VeroneseSpec::new(m, t, field.clone());
    let bruteforce = s.hyperplane_nucleus_bruteforce();
    Ok(VeroneseReport {
        schema_version: SCHEMA_VERSION,
        m,
        t,
        p,
        e,
        field: field.descriptor(),
        ambient_dim: s.ambient_dim(),
        nucleus: VeroneseNucleus {
            dim_formula: s.hyperplane_nucleus_dim(),
            dim_bruteforce: bruteforce.projective_dim(),
            basis_tuples: s.hyperplane_nucleus_basis(),
            in_hypothesis: s.in_hypothesis(),
            subspace: subspace_repr(&field, &bruteforce),
        },
    })
}

pub fn veronese_table(report: &VeroneseReport) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "V_{}^{} over {} (ambient vector dimension {})\n",
        report.m, report.t, report.field, report.ambient_dim
    ));
    out.push_str(&format!(
        "nucleus dim: formula {} | bruteforce {} | in hypothesis: {}\n",
        report.nucleus.dim_formula, report.nucleus.dim_bruteforce, report.nucleus.in_hypothesis
    ));
    out.push_str("vanishing-coefficient base tuples:\n");
    for tuple in &report.nucleus.basis_tuples {
        let parts: Vec<String> = tuple.iter().map(|e| e.to_string()).collect();
        out.push_str(&format!("  ({})\n", parts.join(",")));
    }
    out
}
