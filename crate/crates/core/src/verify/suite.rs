#[cfg(feature = "parallel")]
use rayon::prelude::*;

use super::checks::*;
use super::diagram::check_diagram;
use super::report::{show_pair, CheckReport, Run, Step};
use crate::basehopf::{CSym, SSym, YSym};
use crate::catalog::degree_cap;
use crate::combinat::{Atom, SimplexFace};
use crate::compose::Composed;
use crate::exactalg::{catalan, GradedAlgebra, GradedCoalgebra};
use crate::named::{
    cc_left, cc_right, cksym, deltasym, deltasym_coproduct_native, deltasym_coproduct_transported, psym,
    DeltaSymCoalgebra, DeltaVariant,
};
use crate::operadic::{Connection, HopfOperad};

type Job = Box<dyn Fn(usize) -> CheckReport + Send + Sync>;

/// One check on one algebra with its default degree and the largest degree
/// it may be run at.
pub struct SuiteEntry {
    pub check: &'static str,
    pub algebra: String,
    pub default_degree: usize,
    pub cap: usize,
    job: Job,
}

impl SuiteEntry {
    pub fn run(&self, max_degree: Option<usize>) -> CheckReport {
        let n = max_degree.unwrap_or(self.default_degree);
        if n > self.cap {
            return CheckReport::skipped(
                self.check,
                &self.algebra,
                n,
                format!("degree {n} exceeds the resource cap {}", self.cap),
            );
        }
        (self.job)(n)
    }
}

const COALGEBRA_LIMIT: usize = 20_000;
const KERNEL_LIMIT: usize = 2_000;
const ALGEBRA_LIMIT: usize = 300;

fn entry<A: GradedCoalgebra>(alg: &A, check: &'static str, default: usize, limit: usize, job: Job) -> SuiteEntry {
    SuiteEntry {
        check,
        algebra: alg.name(),
        default_degree: default,
        cap: degree_cap(|n| alg.dimension(n), limit),
        job,
    }
}

fn coalgebra_entries<A>(alg: A, default: usize, cofree_default: usize, out: &mut Vec<SuiteEntry>)
where
    A: GradedCoalgebra + Clone + 'static,
{
    let a = alg.clone();
    out.push(entry(&alg, "coalgebra", default, COALGEBRA_LIMIT, Box::new(move |n| check_coalgebra(&a, n))));
    let a = alg.clone();
    out.push(entry(&alg, "cofreeness", cofree_default, KERNEL_LIMIT, Box::new(move |n| check_cofreeness(&a, n))));
}

fn algebra_entries<A>(alg: A, default: usize, out: &mut Vec<SuiteEntry>)
where
    A: GradedAlgebra + Clone + 'static,
{
    let a = alg.clone();
    out.push(entry(&alg, "bialgebra", default, ALGEBRA_LIMIT, Box::new(move |n| check_bialgebra(&a, n))));
    let a = alg.clone();
    out.push(entry(&alg, "unit", default, ALGEBRA_LIMIT, Box::new(move |n| check_one_sided_unit(&a, n))));
    let a = alg.clone();
    out.push(entry(&alg, "antipode", default, ALGEBRA_LIMIT, Box::new(move |n| check_antipode(&a, n))));
}

fn connection_entries<K>(conn: K, default: usize, out: &mut Vec<SuiteEntry>)
where
    K: Connection + Clone + 'static,
    K::Source: Clone,
{
    let source = conn.source().clone();
    let c = conn.clone();
    let mut e = entry(&source, "connection", default, ALGEBRA_LIMIT, Box::new(move |n| check_connection(&c, n)));
    e.algebra = conn.name();
    out.push(e);
    let c = conn.clone();
    let mut e = entry(&source, "hopf-module", default, ALGEBRA_LIMIT, Box::new(move |n| check_hopf_module(&c, n)));
    e.algebra = conn.name();
    out.push(e);
}

fn operad_entries<D>(operad: D, out: &mut Vec<SuiteEntry>)
where
    D: HopfOperad + 'static,
    D::Basis: Atom,
{
    let o = operad.clone();
    out.push(entry(&operad, "operad", 4, ALGEBRA_LIMIT, Box::new(move |n| check_operad(&o, n))));
    let o = operad.clone();
    out.push(entry(&operad, "operad-product", 5, ALGEBRA_LIMIT, Box::new(move |n| check_operad_product(&o, n))));
}

fn composition_entries<D, C>(outer: D, inner: C, reference: Option<Vec<i128>>, out: &mut Vec<SuiteEntry>)
where
    D: GradedCoalgebra + Clone + 'static,
    C: GradedCoalgebra + Clone + 'static,
    D::Basis: Atom,
    C::Basis: Atom,
{
    let e = Composed::new(outer, inner);
    let has_ssym = e.name().contains("ssym");
    let (default, dims_default) = if has_ssym { (4, 5) } else { (5, 7) };
    coalgebra_entries(e.clone(), default, 5, out);
    let c = e.clone();
    out.push(entry(&e, "primitive-span", 5, KERNEL_LIMIT, Box::new(move |n| check_primitive_span(&c, n))));
    let c = e.clone();
    out.push(entry(
        &e,
        "dims",
        dims_default,
        COALGEBRA_LIMIT,
        Box::new(move |n| check_dims(&c, n, reference.as_deref())),
    ));
}

fn check_transport(n: usize) -> CheckReport {
    let mut run = Run::new("transport", "deltasym", n);
    let outcome = (|| -> Step {
        for k in 0..=n {
            for s in SimplexFace::all(k) {
                let inputs = || vec![s.to_string()];
                run.expect(
                    "native Δ = φ⁻¹Δ_ccφ",
                    inputs,
                    &deltasym_coproduct_native(&s),
                    &deltasym_coproduct_transported(&s),
                    show_pair,
                )?;
            }
        }
        Ok(())
    })();
    run.finish(outcome)
}

/// Every check the library knows about, with default degrees.
pub fn default_suite() -> Vec<SuiteEntry> {
    let mut out = Vec::new();

    coalgebra_entries(SSym, 5, 5, &mut out);
    algebra_entries(SSym, 4, &mut out);
    coalgebra_entries(YSym, 5, 5, &mut out);
    algebra_entries(YSym, 5, &mut out);
    coalgebra_entries(CSym, 6, 8, &mut out);
    algebra_entries(CSym, 6, &mut out);

    operad_entries(YSym, &mut out);
    operad_entries(CSym, &mut out);

    let powers: Vec<i128> = (0..=10).map(|k| 1 << k).collect();
    let catalan_shifted: Vec<i128> = (1..=7).map(catalan).collect();
    composition_entries(SSym, SSym, None, &mut out);
    composition_entries(SSym, YSym, None, &mut out);
    composition_entries(SSym, CSym, None, &mut out);
    composition_entries(YSym, SSym, Some(vec![1, 2, 6, 22, 92, 428]), &mut out);
    composition_entries(YSym, YSym, Some(vec![1, 2, 6, 21, 80]), &mut out);
    composition_entries(YSym, CSym, None, &mut out);
    composition_entries(CSym, SSym, Some(vec![1, 2, 5, 15, 54, 235]), &mut out);
    composition_entries(CSym, YSym, Some(catalan_shifted), &mut out);
    composition_entries(CSym, CSym, Some(powers), &mut out);
    for e in out.iter_mut().filter(|e| e.algebra == "csym.csym") {
        match e.check {
            "dims" => e.default_degree = 10,
            "cofreeness" => e.default_degree = 8,
            _ => {}
        }
    }

    algebra_entries(psym(), 4, &mut out);
    connection_entries(psym().0, 4, &mut out);
    algebra_entries(cksym(), 4, &mut out);
    connection_entries(cksym().0, 4, &mut out);
    algebra_entries(cc_right(), 5, &mut out);
    connection_entries(cc_right().0, 5, &mut out);
    algebra_entries(cc_left(), 5, &mut out);
    connection_entries(cc_left().0, 5, &mut out);
    for variant in [DeltaVariant::Swap, DeltaVariant::NoSwap] {
        algebra_entries(deltasym(variant), 5, &mut out);
        connection_entries(deltasym(variant).0, 5, &mut out);
    }
    coalgebra_entries(DeltaSymCoalgebra, 5, 8, &mut out);
    out.push(entry(&DeltaSymCoalgebra, "transport", 8, COALGEBRA_LIMIT, Box::new(check_transport)));

    let ss = Composed::new(SSym, SSym);
    let mut diagram = entry(&ss, "diagram", 4, KERNEL_LIMIT, Box::new(check_diagram));
    diagram.algebra = "diagram".into();
    out.push(diagram);
    out
}

/// Runs the entries in parallel and returns the reports sorted by algebra
/// and check name.
pub fn run_suite(entries: &[SuiteEntry], max_degree: Option<usize>) -> Vec<CheckReport> {
    #[cfg(feature = "parallel")]
    let mut reports: Vec<CheckReport> = entries.par_iter().map(|e| e.run(max_degree)).collect();
    #[cfg(not(feature = "parallel"))]
    let mut reports: Vec<CheckReport> = entries.iter().map(|e| e.run(max_degree)).collect();
    reports.sort_by(|a, b| (&a.algebra, &a.check).cmp(&(&b.algebra, &b.check)));
    reports
}
