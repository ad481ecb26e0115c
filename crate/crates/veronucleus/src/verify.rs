//! The formula-vs-oracle comparison suites behind `veronucleus verify`.
//!
//! Each suite pits a closed-form digit computation against an independent
//! route — the additive Pascal recurrence, exact big-integer multinomials,
//! geometric subspace intersections, the 2^(n+1) closure scan, or
//! collineation-matrix actions — and records one case per comparison with
//! the instance parameters spelled out, so a failure names the exact
//! (p, e, n, k) or (m, t, p, e) that broke.

use crate::base_p::{
    binom_mod_p, binomial, count_vanishing_multinomials, phi_tail_sum, sigma, to_digits,
    top_line, zero_class, Prime,
};
use crate::gf::{Field, DEFAULT_FIELD_CAP};
use crate::lattice::{
    build_lattice, closure_bruteforce_with_cap, invariance_oracle, is_chain_criterion, IndexSet,
};
use crate::linalg::Subspace;
use crate::nrc::{all_subsets_independent, NrcSpec};
use crate::veronese::{exponent_tuples, VeroneseSpec};
use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    BaseP,
    Nrc,
    Lattice,
    Veronese,
}

impl Suite {
    pub fn parse(s: &str) -> Option<Suite> {
        match s {
            "base_p" | "base-p" | "pascal" => Some(Suite::BaseP),
            "nrc" => Some(Suite::Nrc),
            "lattice" => Some(Suite::Lattice),
            "veronese" => Some(Suite::Veronese),
            _ => None,
        }
    }

    fn name(self) -> &'static str {
        match self {
            Suite::BaseP => "base_p",
            Suite::Nrc => "nrc",
            Suite::Lattice => "lattice",
            Suite::Veronese => "veronese",
        }
    }
}

/// Scope caps for a verification run; the defaults finish comfortably on a
/// laptop.
#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub only: Option<Suite>,
    /// Pascal-triangle checks run for rows 0..=this.
    pub pascal_n_max: u64,
    /// Curve grid runs n = 2..=this.
    pub nrc_n_max: u64,
    /// Closure-scan equivalence runs n = 2..=this (2^(n+1) subsets each).
    pub lattice_n_max: u64,
    /// Collineation-matrix invariance runs n = 2..=this.
    pub invariance_n_max: u64,
    /// Chain-criterion agreement runs n = 2..=this.
    pub chain_n_max: u64,
    /// Multinomial enumerations run t = 0..=this.
    pub multinomial_t_max: u64,
    pub field_cap: u64,
    /// Self-test hook: flips one formula value so the harness must report a
    /// mismatch and exit non-zero.
    pub inject_fault: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            only: None,
            pascal_n_max: 512,
            nrc_n_max: 10,
            lattice_n_max: 16,
            invariance_n_max: 8,
            chain_n_max: 40,
            multinomial_t_max: 30,
            field_cap: DEFAULT_FIELD_CAP,
            inject_fault: false,
        }
    }
}

impl VerifyOptions {
    /// Applies one blanket bound to every n-like cap.
    pub fn with_n_max(mut self, n_max: u64) -> Self {
        self.pascal_n_max = n_max;
        self.nrc_n_max = n_max;
        self.lattice_n_max = n_max;
        self.invariance_n_max = n_max.min(self.invariance_n_max);
        self.chain_n_max = n_max;
        self
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerifyCase {
    pub suite: String,
    pub name: String,
    pub instance: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerifyReport {
    pub schema_version: u32,
    pub passed: usize,
    pub failed: usize,
    pub cases: Vec<VerifyCase>,
}

impl VerifyReport {
    pub fn ok(&self) -> bool {
        self.failed == 0
    }

    /// Failures first, for the human-readable summary.
    pub fn summary(&self) -> String {
        let mut out = String::new();
        for case in self.cases.iter().filter(|c| !c.pass) {
            out.push_str(&format!(
                "FAIL {}::{} [{}]: expected {}, got {}\n",
                case.suite, case.name, case.instance, case.expected, case.actual
            ));
        }
        out.push_str(&format!("{} passed, {} failed\n", self.passed, self.failed));
        out
    }
}

struct Recorder {
    suite: &'static str,
    cases: Vec<VerifyCase>,
}

impl Recorder {
    fn new(suite: Suite) -> Recorder {
        Recorder { suite: suite.name(), cases: Vec::new() }
    }

    fn case<E: ToString, A: ToString>(&mut self, name: &str, instance: String, expected: E, actual: A) {
        let expected = expected.to_string();
        let actual = actual.to_string();
        self.cases.push(VerifyCase {
            suite: self.suite.to_string(),
            name: name.to_string(),
            instance,
            pass: expected == actual,
            expected,
            actual,
        });
    }
}

pub fn run(opts: &VerifyOptions) -> VerifyReport {
    let mut cases = Vec::new();
    let wants = |s: Suite| opts.only.is_none_or(|only| only == s);
    if wants(Suite::BaseP) {
        cases.extend(base_p_suite(opts));
    }
    if wants(Suite::Nrc) {
        cases.extend(nrc_suite(opts));
    }
    if wants(Suite::Lattice) {
        cases.extend(lattice_suite(opts));
    }
    if wants(Suite::Veronese) {
        cases.extend(veronese_suite(opts));
    }
    let passed = cases.iter().filter(|c| c.pass).count();
    let failed = cases.len() - passed;
    VerifyReport { schema_version: crate::report::SCHEMA_VERSION, passed, failed, cases }
}

fn prime(v: u64) -> Prime {
    Prime::new(v).unwrap()
}

fn minimal_extension(p: u64, at_least: u64) -> u32 {
    let mut e = 1u32;
    while p.pow(e) < at_least {
        e += 1;
    }
    e
}

/// Exact multinomial over the integers as a chain of binomials, reduced mod p.
fn multinom_exact_mod(parts: &[u64], p: u64) -> u64 {
    let mut acc = BigUint::one();
    let mut partial = 0u64;
    for &e in parts {
        partial += e;
        acc *= binomial(partial, e);
    }
    (acc % BigUint::from(p)).to_u64().unwrap()
}

// ---------------------------------------------------------------- base_p --

fn base_p_suite(opts: &VerifyOptions) -> Vec<VerifyCase> {
    let mut rec = Recorder::new(Suite::BaseP);
    let rows = opts.pascal_n_max.min(4096) as usize + 1;

    for pv in [2u64, 3, 5, 7] {
        let p = prime(pv);
        // additive recurrence oracle for the whole triangle
        let mut tri: Vec<Vec<u64>> = Vec::with_capacity(rows);
        for n in 0..rows {
            let mut row = vec![1u64; n + 1];
            for j in 1..n {
                row[j] = (tri[n - 1][j - 1] + tri[n - 1][j]) % pv;
            }
            tri.push(row);
        }

        let mut lucas_mismatch = 0u64;
        let mut unclassified = 0u64;
        let mut fine_mismatch = 0u64;
        let mut sigma_mismatch = 0u64;
        let mut chain_breaks = 0u64;
        for n in 0..rows {
            let mut zeros = 0u64;
            for j in 0..=n {
                let via_lucas = binom_mod_p(n as u64, j as u64, p);
                if via_lucas != tri[n][j] {
                    lucas_mismatch += 1;
                }
                let class = zero_class(n as u64, j as u64, p);
                match (tri[n][j] == 0, class) {
                    (true, Some(c)) => {
                        zeros += 1;
                        // vertical chain property of the class top line
                        let t = top_line(c.class_index, n as u64 + 1, p);
                        for r in t..=n as u64 {
                            if binom_mod_p(r, j as u64, p) != 0 {
                                chain_breaks += 1;
                            }
                        }
                        if t >= 1 && binom_mod_p(t - 1, j as u64, p) == 0 {
                            chain_breaks += 1;
                        }
                    }
                    (false, None) => {}
                    _ => unclassified += 1,
                }
            }
            if sigma(1, n as u64, p) != BigUint::from(zeros) {
                fine_mismatch += 1;
            }
            let len = to_digits(n as u64, p).len() as u32;
            for i in 1..=(len + 1) {
                if sigma(i, n as u64, p) != phi_tail_sum(i, n as u64, p) {
                    sigma_mismatch += 1;
                }
            }
        }
        let inst = format!("p={pv} n<={}", rows - 1);
        rec.case("lucas_vs_recurrence", inst.clone(), 0, lucas_mismatch);
        rec.case("zero_class_partition", inst.clone(), 0, unclassified);
        rec.case("fine_zero_count", inst.clone(), 0, fine_mismatch);
        rec.case("sigma_is_phi_tail", inst.clone(), 0, sigma_mismatch);
        rec.case("top_line_chain", inst, 0, chain_breaks);
    }

    // Pascal's simplex: closed-form vanishing count vs direct enumeration
    for pv in [2u64, 3, 5] {
        let p = prime(pv);
        for m in 1..=3u32 {
            let mut mismatches = Vec::new();
            for t in 0..=opts.multinomial_t_max {
                let mut vanishing = 0u64;
                for tuple in exponent_tuples(m as usize + 1, t) {
                    if multinom_exact_mod(&tuple, pv) == 0 {
                        vanishing += 1;
                    }
                }
                if count_vanishing_multinomials(m, t, p) != BigUint::from(vanishing) {
                    mismatches.push(t);
                }
            }
            rec.case(
                "vanishing_multinomial_count",
                format!("p={pv} m={m} t<={}", opts.multinomial_t_max),
                "[]",
                format!("{mismatches:?}"),
            );
        }
    }
    rec.cases
}

// ------------------------------------------------------------------- nrc --

fn nrc_suite(opts: &VerifyOptions) -> Vec<VerifyCase> {
    let mut rec = Recorder::new(Suite::Nrc);
    let fault = if opts.inject_fault { 1 } else { 0 };

    for pv in [2u64, 3, 5] {
        for n in 2..=opts.nrc_n_max.max(2) as usize {
            let e = minimal_extension(pv, n as u64 + 2);
            let Ok(field) = Field::with_cap(pv, e, opts.field_cap) else {
                continue;
            };
            let s = NrcSpec::new(n, field.clone());
            let inst = format!("p={pv} e={e} n={n}");

            let mut dim_bad = Vec::new();
            let mut span_bad = Vec::new();
            let mut nest_bad = Vec::new();
            let mut distinct = std::collections::BTreeSet::new();
            let mut prev: Option<Subspace> = None;
            for k in -1..n as i64 {
                let bf = s.nucleus_bruteforce(k);
                let formula = s.nucleus_dim_formula(k);
                if bf.projective_dim() != formula.dim + fault {
                    dim_bad.push(k);
                }
                if bf != s.nucleus_basis_formula(k).span(&field) {
                    span_bad.push(k);
                }
                if let Some(prev) = &prev {
                    if !prev.leq(&field, &bf) {
                        nest_bad.push(k);
                    }
                }
                distinct.insert(bf.clone());
                prev = Some(bf);
            }
            rec.case("nucleus_dim_formula_vs_bruteforce", format!("{inst} k=all"), "[]", format!("{dim_bad:?}"));
            rec.case("nucleus_basis_span_vs_bruteforce", format!("{inst} k=all"), "[]", format!("{span_bad:?}"));
            rec.case("nuclei_nested", format!("{inst} k=all"), "[]", format!("{nest_bad:?}"));
            rec.case("distinct_nuclei_count", inst, s.count_nuclei() as u64, distinct.len() as u64);
        }
    }

    // arcs in the minimal rich fields
    for n in [2usize, 3, 4] {
        for pv in [2u64, 3, 5] {
            let e = minimal_extension(pv, n as u64 + 2);
            let Ok(field) = Field::with_cap(pv, e, opts.field_cap) else {
                continue;
            };
            let s = NrcSpec::new(n, field);
            rec.case("arc_check", format!("p={pv} e={e} n={n}"), true, s.arc_check());
        }
    }

    // conic plus nucleus point extends to a (q+2)-arc in even characteristic
    for e in [2u32, 3] {
        let Ok(field) = Field::with_cap(2, e, opts.field_cap) else { continue };
        let s = NrcSpec::new(2, field.clone());
        let nucleus = s.nucleus_bruteforce(1);
        let mut points: Vec<_> = s.curve_points().into_iter().map(|p| p.coords).collect();
        let extendable = nucleus.rank() == 1;
        if extendable {
            points.push(nucleus.basis().row(0).to_vec());
        }
        let is_arc = extendable && all_subsets_independent(&field, &points, 3, 200_000);
        rec.case("conic_nucleus_q_plus_2_arc", format!("p=2 e={e} n=2"), true, is_arc);
    }
    rec.cases
}

// --------------------------------------------------------------- lattice --

fn lattice_suite(opts: &VerifyOptions) -> Vec<VerifyCase> {
    let mut rec = Recorder::new(Suite::Lattice);

    for pv in [2u64, 3] {
        let p = prime(pv);
        for n in 2..=opts.lattice_n_max {
            let lattice = build_lattice(n, p);
            let scan = closure_bruteforce_with_cap(n, p, opts.lattice_n_max);
            rec.case(
                "lambda_lattice_equals_closure_scan",
                format!("p={pv} n={n}"),
                format!("{} closed sets", scan.len()),
                if lattice.node_sets() == scan {
                    format!("{} closed sets", scan.len())
                } else {
                    format!("{} nodes (set mismatch)", lattice.nodes.len())
                },
            );
            rec.case(
                "union_closure_assertion",
                format!("p={pv} n={n}"),
                false,
                lattice.reclosure_used,
            );
        }
    }

    for pv in [2u64, 3] {
        let p = prime(pv);
        for n in 2..=opts.invariance_n_max as usize {
            let e = minimal_extension(pv, n as u64 + 2);
            let Ok(field) = Field::with_cap(pv, e, opts.field_cap) else {
                continue;
            };
            let lattice = build_lattice(n as u64, p);
            let mut failures = Vec::new();
            for node in &lattice.nodes {
                if !invariance_oracle(&field, n, &node.set) {
                    failures.push(node.set.members().to_vec());
                }
            }
            rec.case(
                "lattice_nodes_invariant",
                format!("p={pv} e={e} n={n}"),
                "[]",
                format!("{failures:?}"),
            );
            // a coordinate set outside the lattice must fail: {0} never is
            // one (its reversal partner n is missing)
            let non_node = IndexSet::new(n as u64, [0]);
            rec.case(
                "non_node_fails_invariance",
                format!("p={pv} e={e} n={n} set={{0}}"),
                false,
                invariance_oracle(&field, n, &non_node),
            );
        }
    }

    for pv in [2u64, 3, 5] {
        let p = prime(pv);
        let mut bad = Vec::new();
        for n in 2..=opts.chain_n_max {
            if is_chain_criterion(n, p) != build_lattice(n, p).is_totally_ordered() {
                bad.push(n);
            }
        }
        rec.case(
            "chain_criterion_vs_lattice",
            format!("p={pv} n<={}", opts.chain_n_max),
            "[]",
            format!("{bad:?}"),
        );
    }
    rec.cases
}

// -------------------------------------------------------------- veronese --

fn veronese_suite(opts: &VerifyOptions) -> Vec<VerifyCase> {
    let mut rec = Recorder::new(Suite::Veronese);

    // golden dimensions for the quadric and cubic Veronese surfaces
    for (m, t, pv, e, expected) in
        [(2usize, 2u64, 2u64, 2u32, 2i64), (2, 3, 2, 2, 0), (2, 3, 2, 1, 3)]
    {
        let Ok(field) = Field::with_cap(pv, e, opts.field_cap) else { continue };
        let s = VeroneseSpec::new(m, t, field);
        rec.case(
            "hyperplane_nucleus_golden_dim",
            format!("m={m} t={t} p={pv} e={e}"),
            expected,
            s.hyperplane_nucleus_bruteforce().projective_dim(),
        );
    }

    // formula vs brute force vs base-point span, minimal rich field
    for pv in [2u64, 3] {
        for t in 2..=4u64 {
            let e = minimal_extension(pv, t);
            let Ok(field) = Field::with_cap(pv, e, opts.field_cap) else { continue };
            let s = VeroneseSpec::new(2, t, field);
            let bf = s.hyperplane_nucleus_bruteforce();
            let inst = format!("m=2 t={t} p={pv} e={e}");
            rec.case(
                "veronese_dim_formula_vs_bruteforce",
                inst.clone(),
                s.hyperplane_nucleus_dim(),
                bf.projective_dim(),
            );
            rec.case(
                "veronese_basis_span_vs_bruteforce",
                inst,
                true,
                bf == s.hyperplane_nucleus_basis_span(),
            );
        }
    }

    // the containment half needs no richness: GF(2) cubic surface
    {
        let field = Field::new(2, 1).unwrap();
        let s = VeroneseSpec::new(2, 3, field.clone());
        let bf = s.hyperplane_nucleus_bruteforce();
        rec.case(
            "basis_contained_without_richness",
            "m=2 t=3 p=2 e=1".to_string(),
            true,
            s.hyperplane_nucleus_basis_span().leq(&field, &bf),
        );
    }

    // incidence identity of the dual map
    for (pv, e, m, t) in [(2u64, 2u32, 2usize, 3u64), (3, 1, 2, 2)] {
        let Ok(field) = Field::with_cap(pv, e, opts.field_cap) else { continue };
        let s = VeroneseSpec::new(m, t, field.clone());
        let mut bad = 0u64;
        let hyperplanes = s.parameter_hyperplanes();
        for a in &hyperplanes {
            let h = s.osculating_hyperplane(a);
            for x in &hyperplanes {
                let mut pairing = field.zero();
                for (ai, xi) in a.iter().zip(x) {
                    pairing = field.add(pairing, field.mul(*ai, *xi));
                }
                let img = s.veronese_point(x);
                let mut dot = field.zero();
                for (hi, yi) in h.iter().zip(&img) {
                    dot = field.add(dot, field.mul(*hi, *yi));
                }
                if dot.is_zero() != pairing.is_zero() {
                    bad += 1;
                }
            }
        }
        rec.case("dual_map_incidence", format!("m={m} t={t} p={pv} e={e}"), 0, bad);
    }

    // m = 1 coherence with the curve dimension formula, t <= 64
    for pv in [2u64, 3, 5] {
        let p = prime(pv);
        let mut bad = Vec::new();
        for t in 2..=64u64 {
            let td = to_digits(t, p);
            let prod: i64 = (0..td.len()).map(|s| td.digit(s) as i64 + 1).product();
            if crate::veronese::hyperplane_nucleus_dim_formula(1, t, p) != t as i64 - prod {
                bad.push(t);
            }
        }
        rec.case("m1_matches_curve_formula", format!("p={pv} t<=64"), "[]", format!("{bad:?}"));
    }

    // |basis| = vanishing count, so dim = |basis| − 1 under richness
    for pv in [2u64, 3] {
        let p = prime(pv);
        let mut bad = Vec::new();
        for (m, t) in [(1usize, 8u64), (2, 4), (3, 3)] {
            let field = Field::new(pv, 1).unwrap();
            let s = VeroneseSpec::new(m, t, field);
            let count = BigUint::from(s.hyperplane_nucleus_basis().len() as u64);
            if count != count_vanishing_multinomials(m as u32, t, p) {
                bad.push((m, t));
            }
            let dim = crate::veronese::hyperplane_nucleus_dim_formula(m as u64, t, p);
            if BigUint::from((dim + 1) as u64) != count {
                bad.push((m, t));
            }
        }
        rec.case("basis_count_matches_formula", format!("p={pv}"), "[]", format!("{bad:?}"));
    }
    rec.cases
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_run_is_clean_on_small_caps() {
        let opts = VerifyOptions {
            nrc_n_max: 5,
            lattice_n_max: 8,
            invariance_n_max: 4,
            chain_n_max: 10,
            pascal_n_max: 64,
            multinomial_t_max: 10,
            ..VerifyOptions::default()
        };
        let report = run(&opts);
        assert!(report.ok(), "{}", report.summary());
        assert!(report.passed > 0);
    }

    #[test]
    fn injected_fault_is_detected() {
        let opts = VerifyOptions {
            only: Some(Suite::Nrc),
            nrc_n_max: 4,
            inject_fault: true,
            ..VerifyOptions::default()
        };
        let report = run(&opts);
        assert!(!report.ok(), "a flipped formula constant must be caught");
        assert!(report.summary().contains("FAIL"));
    }

    #[test]
    fn only_scope_restricts_suites() {
        let opts = VerifyOptions {
            only: Some(Suite::BaseP),
            pascal_n_max: 32,
            multinomial_t_max: 6,
            ..VerifyOptions::default()
        };
        let report = run(&opts);
        assert!(report.ok());
        assert!(report.cases.iter().all(|c| c.suite == "base_p"));
    }

    #[test]
    fn suite_parsing() {
        assert_eq!(Suite::parse("nrc"), Some(Suite::Nrc));
        assert_eq!(Suite::parse("base-p"), Some(Suite::BaseP));
        assert_eq!(Suite::parse("unknown"), None);
    }

    #[test]
    fn report_serializes() {
        let opts = VerifyOptions {
            only: Some(Suite::Veronese),
            ..VerifyOptions::default()
        };
        let report = run(&opts);
        let json = serde_json::to_string(&report).unwrap();
        let back: VerifyReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back.passed, report.passed);
    }
}
