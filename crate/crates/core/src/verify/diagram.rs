use super::checks::check_morphism;
use super::report::{show, CheckReport, Run, Step};
use crate::basehopf::{CSym, KappaHat, SSym, TauHat, YSym};
use crate::combinat::{Atom, ComposedBasis, OrderedTree};
use crate::compose::ComposedMorphism;
use crate::exactalg::{CoalgebraMap, GradedCoalgebra, Identity};

type SSymSSym = ComposedBasis<OrderedTree, OrderedTree>;
type Basis<A> = <A as GradedCoalgebra>::Basis;

/// Both routes around the square formed by an inner map `f` and an outer
/// map `g` agree.
fn square<F, G>(run: &mut Run, f: F, g: G, n: usize) -> Step
where
    F: CoalgebraMap + Clone,
    G: CoalgebraMap + Clone,
    F::Source: Clone,
    F::Target: Clone,
    G::Source: Clone,
    G::Target: Clone,
    Basis<F::Source>: Atom,
    Basis<F::Target>: Atom,
    Basis<G::Source>: Atom,
    Basis<G::Target>: Atom,
{
    let inner_first = ComposedMorphism::new(f.clone(), Identity(g.source().clone()));
    let then_outer = ComposedMorphism::new(Identity(f.target().clone()), g.clone());
    let outer_first = ComposedMorphism::new(Identity(f.source().clone()), g.clone());
    let then_inner = ComposedMorphism::new(f.clone(), Identity(g.target().clone()));
    for k in 0..=n {
        for e in inner_first.source().basis(k) {
            let one = then_outer.apply_lin(&inner_first.apply(&e));
            let two = then_inner.apply_lin(&outer_first.apply(&e));
            let label = format!("{} then {} vs {} then {}", inner_first.name(), then_outer.name(), outer_first.name(), then_inner.name());
            run.expect("square commutes", || vec![label, e.to_string()], &one, &two, show)?;
        }
    }
    Ok(())
}

/// Every edge of the 3×3 grid of compositions of SSym → YSym → CSym is a
/// coalgebra map, and every square (hence every path) commutes.
pub fn check_diagram(n: usize) -> CheckReport {
    let mut run = Run::new("diagram", "diagram", n);
    let outcome = (|| -> Step {
        // inner edges, one row per outer factor
        check_morphism(&mut run, &ComposedMorphism::new(TauHat, Identity(SSym)), n)?;
        check_morphism(&mut run, &ComposedMorphism::new(KappaHat, Identity(SSym)), n)?;
        check_morphism(&mut run, &ComposedMorphism::new(TauHat, Identity(YSym)), n)?;
        check_morphism(&mut run, &ComposedMorphism::new(KappaHat, Identity(YSym)), n)?;
        check_morphism(&mut run, &ComposedMorphism::new(TauHat, Identity(CSym)), n)?;
        check_morphism(&mut run, &ComposedMorphism::new(KappaHat, Identity(CSym)), n)?;
        // outer edges, one column per inner factor
        check_morphism(&mut run, &ComposedMorphism::new(Identity(SSym), TauHat), n)?;
        check_morphism(&mut run, &ComposedMorphism::new(Identity(SSym), KappaHat), n)?;
        check_morphism(&mut run, &ComposedMorphism::new(Identity(YSym), TauHat), n)?;
        check_morphism(&mut run, &ComposedMorphism::new(Identity(YSym), KappaHat), n)?;
        check_morphism(&mut run, &ComposedMorphism::new(Identity(CSym), TauHat), n)?;
        check_morphism(&mut run, &ComposedMorphism::new(Identity(CSym), KappaHat), n)?;
        square(&mut run, TauHat, TauHat, n)?;
        square(&mut run, KappaHat, TauHat, n)?;
        square(&mut run, TauHat, KappaHat, n)?;
        square(&mut run, KappaHat, KappaHat, n)?;
        // the two extreme paths, composed end to end
        let all_inner_first = |e: &SSymSSym| {
            let x = ComposedMorphism::new(TauHat, Identity(SSym)).apply(e);
            let x = ComposedMorphism::new(KappaHat, Identity(SSym)).apply_lin(&x);
            let x = ComposedMorphism::new(Identity(CSym), TauHat).apply_lin(&x);
            ComposedMorphism::new(Identity(CSym), KappaHat).apply_lin(&x)
        };
        let all_outer_first = |e: &SSymSSym| {
            let x = ComposedMorphism::new(Identity(SSym), TauHat).apply(e);
            let x = ComposedMorphism::new(Identity(SSym), KappaHat).apply_lin(&x);
            let x = ComposedMorphism::new(TauHat, Identity(CSym)).apply_lin(&x);
            ComposedMorphism::new(KappaHat, Identity(CSym)).apply_lin(&x)
        };
        let source = ComposedMorphism::new(Identity(SSym), Identity(SSym));
        for k in 0..=n {
            for e in source.source().basis(k) {
                run.expect(
                    "inner-first path = outer-first path",
                    || vec![e.to_string()],
                    &all_inner_first(&e),
                    &all_outer_first(&e),
                    show,
                )?;
            }
        }
        run.detail("12 edges, 4 squares");
        Ok(())
    })();
    run.finish(outcome)
}
