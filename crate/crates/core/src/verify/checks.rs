use super::report::{show, show_pair, show_triple, CheckReport, Run, Step};
use crate::combinat::{forests, Atom, Graded};
use crate::compose::{dims_for, primitive_spanning_set_from_factors, Composed};
use crate::exactalg::{
    lin_tensor, primitive_dimension, product_lin, rank, reduced_coproduct, series_inverse_one_minus, tensor_product,
    Antipode, CoalgebraMap, ConvolutionSide, GradedAlgebra, GradedCoalgebra, IntSeries, Lin, Scalar, UnitSide,
};
use crate::operadic::{coaction_rho, operad_product, Connection, Flavor, HopfOperad};

type EB<K> = <<K as Connection>::Source as GradedCoalgebra>::Basis;
type DB<K> = <<K as Connection>::Target as GradedCoalgebra>::Basis;

fn all_basis<A: GradedCoalgebra>(alg: &A, n: usize) -> Vec<A::Basis> {
    (0..=n).flat_map(|k| alg.basis(k)).collect()
}

fn scalar_lin(s: Scalar) -> Lin<()> {
    Lin::term((), s)
}

fn show_unit(_: &()) -> String {
    "1".into()
}

/// Coassociativity, counit laws and grading of the coproduct.
pub fn check_coalgebra<A: GradedCoalgebra>(alg: &A, n: usize) -> CheckReport {
    let mut run = Run::new("coalgebra", alg.name(), n);
    let outcome = (|| -> Step {
        for b in all_basis(alg, n) {
            let d = alg.coproduct(&b);
            let k = b.degree();
            if let Some(((x, y), _)) = d.iter().find(|((x, y), _)| x.degree() + y.degree() != k) {
                return run.fail("graded coproduct", vec![b.to_string()], format!("{x} ⊗ {y}"), format!("degree {k}"));
            }
            let left = d.flat_map(|(x, y)| alg.coproduct(x).map_keys(|(p, q)| (p.clone(), q.clone(), y.clone())));
            let right = d.flat_map(|(x, y)| alg.coproduct(y).map_keys(|(p, q)| (x.clone(), p.clone(), q.clone())));
            run.expect("(Δ⊗id)Δ = (id⊗Δ)Δ", || vec![b.to_string()], &left, &right, show_triple)?;
            let mut left_counit = Lin::zero();
            let mut right_counit = Lin::zero();
            for ((x, y), c) in d.iter() {
                left_counit.add_term(y.clone(), c * alg.counit(x));
                right_counit.add_term(x.clone(), c * alg.counit(y));
            }
            let id = Lin::basis(b.clone());
            run.expect("(ε⊗id)Δ = id", || vec![b.to_string()], &left_counit, &id, show)?;
            run.expect("(id⊗ε)Δ = id", || vec![b.to_string()], &right_counit, &id, show)?;
        }
        Ok(())
    })();
    run.finish(outcome)
}

/// Associativity, grading and multiplicativity of Δ and ε.
pub fn check_bialgebra<A: GradedAlgebra>(alg: &A, n: usize) -> CheckReport {
    let mut run = Run::new("bialgebra", alg.name(), n);
    let outcome = (|| -> Step {
        let basis: Vec<Vec<A::Basis>> = (0..=n).map(|k| alg.basis(k)).collect();
        for i in 0..=n {
            for j in 0..=n - i {
                for a in &basis[i] {
                    for b in &basis[j] {
                        let ab = alg.product(a, b);
                        let inputs = || vec![a.to_string(), b.to_string()];
                        if let Some((x, _)) = ab.iter().find(|(x, _)| x.degree() != i + j) {
                            return run.fail("graded product", inputs(), x.to_string(), format!("degree {}", i + j));
                        }
                        let lhs = ab.flat_map(|x| alg.coproduct(x));
                        let rhs = tensor_product(alg, &alg.coproduct(a), &alg.coproduct(b));
                        run.expect("Δ(ab) = Δ(a)Δ(b)", inputs, &lhs, &rhs, show_pair)?;
                        let eps = ab.flat_map(|x| scalar_lin(alg.counit(x)));
                        let eps2 = scalar_lin(alg.counit(a) * alg.counit(b));
                        run.expect("ε(ab) = ε(a)ε(b)", inputs, &eps, &eps2, show_unit)?;
                    }
                }
            }
        }
        for i in 0..=n {
            for j in 0..=n - i {
                for k in 0..=n - i - j {
                    for a in &basis[i] {
                        for b in &basis[j] {
                            let ab = alg.product(a, b);
                            for c in &basis[k] {
                                let left = product_lin(alg, &ab, &Lin::basis(c.clone()));
                                let right = product_lin(alg, &Lin::basis(a.clone()), &alg.product(b, c));
                                let inputs = || vec![a.to_string(), b.to_string(), c.to_string()];
                                run.expect("(ab)c = a(bc)", inputs, &left, &right, show)?;
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    })();
    run.finish(outcome)
}

/// The unit is an identity on its declared side; for one-sided units a
/// violation on the other side is recorded.
pub fn check_one_sided_unit<A: GradedAlgebra>(alg: &A, n: usize) -> CheckReport {
    let mut run = Run::new("unit", alg.name(), n);
    let side = alg.unit_side();
    run.detail(format!("unit side: {side}"));
    let outcome = (|| -> Step {
        let one = alg.one();
        let mut witness = None;
        for b in all_basis(alg, n) {
            let left = alg.product(&one, &b);
            let right = alg.product(&b, &one);
            let id = Lin::basis(b.clone());
            let inputs = || vec![b.to_string()];
            if side != UnitSide::Left {
                run.expect("e·1 = e", inputs, &right, &id, show)?;
            }
            if side != UnitSide::Right {
                run.expect("1·e = e", inputs, &left, &id, show)?;
            }
            if witness.is_none() {
                witness = match side {
                    UnitSide::Right if left != id => Some(format!("{one} · {b} = {left}")),
                    UnitSide::Left if right != id => Some(format!("{b} · {one} = {right}")),
                    _ => None,
                };
            }
        }
        match (side, witness) {
            (UnitSide::TwoSided, _) => Ok(()),
            (_, Some(w)) => {
                run.witness(w);
                Ok(())
            }
            (_, None) => run.fail(
                "one-sidedness",
                vec![one.to_string()],
                format!("unit acts as identity on both sides through degree {n}"),
                "a violation on the non-unit side".into(),
            ),
        }
    })();
    run.finish(outcome)
}

/// `m(S⊗id)Δ = ηε` (or the mirrored identity for left units).
pub fn check_antipode<A: GradedAlgebra>(alg: &A, n: usize) -> CheckReport {
    let mut run = Run::new("antipode", alg.name(), n);
    let outcome = (|| -> Step {
        let s = match Antipode::new(alg) {
            Ok(s) => s,
            Err(e) => return run.fail("antipode recursion", vec![], e.to_string(), "an antipode".into()),
        };
        run.detail(match s.side() {
            ConvolutionSide::Left => "m(S⊗id)Δ = ηε",
            ConvolutionSide::Right => "m(id⊗S)Δ = ηε",
        });
        let one = alg.one();
        for b in all_basis(alg, n) {
            let inputs = || vec![b.to_string()];
            let conv = match s.convolution(&b) {
                Ok(c) => c,
                Err(e) => return run.fail("antipode recursion", inputs(), e.to_string(), String::new()),
            };
            let expected = Lin::term(one.clone(), alg.counit(&b));
            run.expect("convolution S * id = ηε", inputs, &conv, &expected, show)?;
        }
        if alg.unit_side() != UnitSide::TwoSided {
            let other = match s.side() {
                ConvolutionSide::Left => ConvolutionSide::Right,
                ConvolutionSide::Right => ConvolutionSide::Left,
            };
            if Antipode::with_side(alg, other).is_ok() {
                return run.fail(
                    "non-isolating side rejected",
                    vec![],
                    "accepted".into(),
                    "NonIsolating error".into(),
                );
            }
        }
        Ok(())
    })();
    run.finish(outcome)
}

/// `f` is a coalgebra map, `Δ(e⋆d) = Δ(e)⋆Δ(d)`, `f` intertwines the
/// action with the product of `D`, and the action is unital and associative.
pub fn check_connection<K: Connection>(conn: &K, n: usize) -> CheckReport {
    let mut run = Run::new("connection", conn.name(), n);
    run.detail(format!("{} action", conn.flavor()));
    let outcome = (|| -> Step {
        let e_alg = conn.source();
        let d_alg = conn.target();
        let e_basis: Vec<Vec<EB<K>>> = (0..=n).map(|k| e_alg.basis(k)).collect();
        let d_basis: Vec<Vec<DB<K>>> = (0..=n).map(|k| d_alg.basis(k)).collect();
        let d_one = d_alg.one();
        run.expect("f(1) = 1", Vec::new, &conn.connect(&e_alg.one()), &Lin::basis(d_one.clone()), show)?;
        for e in e_basis.iter().flatten() {
            let inputs = || vec![e.to_string()];
            let fe = conn.connect(e);
            let lhs = e_alg
                .coproduct(e)
                .flat_map(|(x, y)| lin_tensor(&conn.connect(x), &conn.connect(y)));
            let rhs = fe.flat_map(|d| d_alg.coproduct(d));
            run.expect("(f⊗f)Δ = Δf", inputs, &lhs, &rhs, show_pair)?;
            let eps = fe.flat_map(|d| scalar_lin(d_alg.counit(d)));
            run.expect("εf = ε", inputs, &eps, &scalar_lin(e_alg.counit(e)), show_unit)?;
            run.expect("unit action", inputs, &conn.act(e, &d_one), &Lin::basis(e.clone()), show)?;
        }
        for (i, e_row) in e_basis.iter().enumerate() {
            for j in 0..=n - i {
                for e in e_row {
                    for d in &d_basis[j] {
                        let inputs = || vec![e.to_string(), d.to_string()];
                        let acted = conn.act(e, d);
                        let lhs = acted.flat_map(|x| e_alg.coproduct(x));
                        let mut rhs = Lin::zero();
                        for ((e1, e2), ce) in e_alg.coproduct(e).iter() {
                            for ((d1, d2), cd) in d_alg.coproduct(d).iter() {
                                let t = lin_tensor(&conn.act(e1, d1), &conn.act(e2, d2));
                                rhs.add_scaled(&t, &(ce * cd));
                            }
                        }
                        run.expect("Δ(e⋆d) = Δ(e)⋆Δ(d)", inputs, &lhs, &rhs, show_pair)?;
                        let f_acted = conn.connect_lin(&acted);
                        let d_lin = Lin::basis(d.clone());
                        let expected = match conn.flavor() {
                            Flavor::Right => product_lin(d_alg, &conn.connect(e), &d_lin),
                            Flavor::Left => product_lin(d_alg, &d_lin, &conn.connect(e)),
                        };
                        let law = match conn.flavor() {
                            Flavor::Right => "f(e⋆d) = f(e)·d",
                            Flavor::Left => "f(d⋆e) = d·f(e)",
                        };
                        run.expect(law, inputs, &f_acted, &expected, show)?;
                        for d2_row in &d_basis[..=n - i - j] {
                            for d2 in d2_row {
                                let inputs = || vec![e.to_string(), d.to_string(), d2.to_string()];
                                let twice = conn.act_lin(&acted, &Lin::basis(d2.clone()));
                                let (law, combined) = match conn.flavor() {
                                    Flavor::Right => ("(e⋆d)⋆d′ = e⋆(dd′)", d_alg.product(d, d2)),
                                    Flavor::Left => ("d′⋆(d⋆e) = (d′d)⋆e", d_alg.product(d2, d)),
                                };
                                let once = conn.act_lin(&Lin::basis(e.clone()), &combined);
                                run.expect(law, inputs, &twice, &once, show)?;
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    })();
    run.finish(outcome)
}

/// The coaction `ρ = (1⊗f)Δ` is coassociative and counital, compatible
/// with the action, and multiplicative for the one-sided product.
pub fn check_hopf_module<K: Connection>(conn: &K, n: usize) -> CheckReport {
    let mut run = Run::new("hopf-module", conn.name(), n);
    let outcome = (|| -> Step {
        let e_alg = conn.source();
        let d_alg = conn.target();
        let e_basis: Vec<Vec<EB<K>>> = (0..=n).map(|k| e_alg.basis(k)).collect();
        let d_basis: Vec<Vec<DB<K>>> = (0..=n).map(|k| d_alg.basis(k)).collect();
        let rho = |e: &EB<K>| coaction_rho(conn, e);
        for e in e_basis.iter().flatten() {
            let inputs = || vec![e.to_string()];
            let r = rho(e);
            let left = r.flat_map(|(x, y)| rho(x).map_keys(|(p, q)| (p.clone(), q.clone(), y.clone())));
            let right = r.flat_map(|(x, y)| d_alg.coproduct(y).map_keys(|(p, q)| (x.clone(), p.clone(), q.clone())));
            run.expect("(ρ⊗id)ρ = (id⊗Δ)ρ", inputs, &left, &right, show_triple)?;
            let mut counit = Lin::zero();
            for ((x, y), c) in r.iter() {
                counit.add_term(x.clone(), c * d_alg.counit(y));
            }
            run.expect("(id⊗ε)ρ = id", inputs, &counit, &Lin::basis(e.clone()), show)?;
        }
        for i in 0..=n {
            for j in 0..=n - i {
                for e in &e_basis[i] {
                    let r = rho(e);
                    for d in &d_basis[j] {
                        let inputs = || vec![e.to_string(), d.to_string()];
                        let lhs = conn.act(e, d).flat_map(|x| rho(x));
                        let mut rhs = Lin::zero();
                        for ((e0, e1), ce) in r.iter() {
                            for ((d1, d2), cd) in d_alg.coproduct(d).iter() {
                                let moved = conn.act(e0, d1);
                                let prod = match conn.flavor() {
                                    Flavor::Right => d_alg.product(e1, d2),
                                    Flavor::Left => d_alg.product(d2, e1),
                                };
                                rhs.add_scaled(&lin_tensor(&moved, &prod), &(ce * cd));
                            }
                        }
                        run.expect("ρ(e⋆d) = ρ(e)⋆Δ(d)", inputs, &lhs, &rhs, show_pair)?;
                    }
                    for e2 in &e_basis[j] {
                        let inputs = || vec![e.to_string(), e2.to_string()];
                        let product = crate::operadic::one_sided_product(conn, e, e2);
                        let lhs = product.flat_map(|x| rho(x));
                        let mut rhs = Lin::zero();
                        for ((x, y), c) in r.iter() {
                            for ((x2, y2), c2) in rho(e2).iter() {
                                let t = lin_tensor(&crate::operadic::one_sided_product(conn, x, x2), &d_alg.product(y, y2));
                                rhs.add_scaled(&t, &(c * c2));
                            }
                        }
                        run.expect("ρ(ee′) = ρ(e)ρ(e′)", inputs, &lhs, &rhs, show_pair)?;
                    }
                }
            }
        }
        Ok(())
    })();
    run.finish(outcome)
}

/// Associativity of `γ` and `Δγ = (γ⊗γ)Δ_{D∘D}`.
pub fn check_operad<D>(operad: &D, n: usize) -> CheckReport
where
    D: HopfOperad,
    D::Basis: Atom,
{
    let mut run = Run::new("operad", operad.name(), n);
    let outcome = (|| -> Step {
        let by_degree = |k: usize| operad.basis(k);
        let gamma = |base: &D::Basis, forest: &[D::Basis]| operad.gamma(base, forest).expect("arity");
        for m in 0..=n {
            for a in operad.basis(m) {
                for k1 in 0..=n - m {
                    for bs in forests(m + 1, k1, &by_degree) {
                        let leaves = m + k1 + 1;
                        let ab = gamma(&a, &bs);
                        for k2 in 0..=n - m - k1 {
                            for cs in forests(leaves, k2, &by_degree) {
                                let left = gamma(&ab, &cs);
                                let mut rest = cs.as_slice();
                                let grafted: Vec<D::Basis> = bs
                                    .iter()
                                    .map(|b| {
                                        let (mine, tail) = rest.split_at(b.degree() + 1);
                                        rest = tail;
                                        gamma(b, mine)
                                    })
                                    .collect();
                                let right = gamma(&a, &grafted);
                                let inputs = || {
                                    vec![
                                        a.to_string(),
                                        format!("{bs:?}"),
                                        format!("{cs:?}"),
                                    ]
                                };
                                run.expect_eq("γ(γ(a;b⃗);c⃗) = γ(a;γ(b_i;c⃗_i))", inputs, left, right)?;
                            }
                        }
                    }
                }
            }
        }
        let dd = Composed::new(operad.clone(), operad.clone());
        for k in 0..=n {
            for x in dd.basis(k) {
                let g = gamma(&x.outer, &x.inner);
                let lhs = operad.coproduct(&g);
                let rhs = dd.coproduct(&x).map_keys(|(p, q)| (gamma(&p.outer, &p.inner), gamma(&q.outer, &q.inner)));
                run.expect("Δγ = (γ⊗γ)Δ", || vec![x.to_string()], &lhs, &rhs, show_pair)?;
            }
        }
        Ok(())
    })();
    run.finish(outcome)
}

/// The operad-induced product agrees with the algebra's own product.
pub fn check_operad_product<D>(operad: &D, n: usize) -> CheckReport
where
    D: HopfOperad,
    D::Basis: Atom,
{
    let mut run = Run::new("operad-product", operad.name(), n);
    let outcome = (|| -> Step {
        for i in 0..=n {
            for j in 0..=n - i {
                for a in operad.basis(i) {
                    for b in operad.basis(j) {
                        let inputs = || vec![a.to_string(), b.to_string()];
                        run.expect("γ(b;Δ⁽ⁿ⁾a) = ab", inputs, &operad_product(operad, &a, &b, false), &operad.product(&a, &b), show)?;
                    }
                }
            }
        }
        Ok(())
    })();
    run.finish(outcome)
}

pub fn primitive_series<A: GradedCoalgebra>(alg: &A, n: usize) -> IntSeries {
    (0..=n).map(|k| primitive_dimension(alg, k) as i128).collect()
}

/// Dimension series equals `1/(1 − P(t))` for the primitive series `P`.
pub fn check_cofreeness<A: GradedCoalgebra>(alg: &A, n: usize) -> CheckReport {
    let mut run = Run::new("cofreeness", alg.name(), n);
    let p = primitive_series(alg, n);
    let dims: IntSeries = (0..=n).map(|k| alg.dimension(k) as i128).collect();
    let predicted = series_inverse_one_minus(&p, n).expect("no primitives in degree 0");
    run.detail(format!("P = {}", join(&p[1..])));
    let outcome = run.expect_eq("dim = 1/(1−P)", || vec![format!("P = {}", join(&p))], dims, predicted);
    run.finish(outcome)
}

/// The outer/inner primitive vectors lie in the kernel of the reduced
/// coproduct and span it.
pub fn check_primitive_span<D, C>(e: &Composed<D, C>, n: usize) -> CheckReport
where
    D: GradedCoalgebra,
    C: GradedCoalgebra,
    D::Basis: Atom,
    C::Basis: Atom,
{
    let mut run = Run::new("primitive-span", e.name(), n);
    let outcome = (|| -> Step {
        for k in 1..=n {
            let span = primitive_spanning_set_from_factors(e, k);
            for v in &span {
                let image = v.flat_map(|b| reduced_coproduct(e, b).expect("positive degree"));
                run.expect("spanning vector is primitive", || vec![v.to_string()], &image, &Lin::zero(), show_pair)?;
            }
            run.expect_eq("rank = dim P", || vec![format!("degree {k}")], rank(&span), primitive_dimension(e, k))?;
        }
        Ok(())
    })();
    run.finish(outcome)
}

/// Enumerated basis sizes, the applicable recursion, and an optional
/// reference sequence all agree.
pub fn check_dims<D, C>(e: &Composed<D, C>, n: usize, reference: Option<&[i128]>) -> CheckReport
where
    D: GradedCoalgebra,
    C: GradedCoalgebra,
    D::Basis: Atom,
    C::Basis: Atom,
{
    let mut run = Run::new("dims", e.name(), n);
    let outcome = (|| -> Step {
        let enumerated: IntSeries = (0..=n).map(|k| e.basis(k).len() as i128).collect();
        let outer: IntSeries = (0..=n).map(|k| e.outer.dimension(k) as i128).collect();
        let inner: IntSeries = (0..=n).map(|k| e.inner.dimension(k) as i128).collect();
        let recursion = dims_for(&outer, &inner, n);
        run.detail(join(&enumerated));
        run.expect_eq("enumeration = recursion", Vec::new, &enumerated, &recursion)?;
        if let Some(r) = reference {
            let m = r.len().min(n + 1);
            run.expect_eq("enumeration = reference", Vec::new, &enumerated[..m], &r[..m])?;
        }
        Ok(())
    })();
    run.finish(outcome)
}

/// `Δψ = (ψ⊗ψ)Δ` and `εψ = ε` on every basis element up to degree `n`.
pub fn check_morphism<M: CoalgebraMap>(run: &mut Run, map: &M, n: usize) -> Step {
    let s = map.source();
    let t = map.target();
    for b in all_basis(s, n) {
        let inputs = || vec![format!("{}: {b}", map.name())];
        let image = map.apply(&b);
        if let Some((x, _)) = image.iter().find(|(x, _)| x.degree() != b.degree()) {
            return run.fail("degree preserved", inputs(), x.to_string(), format!("degree {}", b.degree()));
        }
        let lhs = image.flat_map(|x| t.coproduct(x));
        let rhs = s.coproduct(&b).flat_map(|(x, y)| lin_tensor(&map.apply(x), &map.apply(y)));
        run.expect("Δψ = (ψ⊗ψ)Δ", inputs, &lhs, &rhs, show_pair)?;
        let eps = image.flat_map(|x| scalar_lin(t.counit(x)));
        run.expect("εψ = ε", inputs, &eps, &scalar_lin(s.counit(&b)), show_unit)?;
    }
    Ok(())
}

pub(crate) fn join(xs: &[i128]) -> String {
    xs.iter().map(i128::to_string).collect::<Vec<_>>().join(",")
}
