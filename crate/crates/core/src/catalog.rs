//! Name-based access to every algebra, for front ends that work with text.

use serde::Serialize;

use crate::basehopf::{CSym, SSym, YSym};
use crate::combinat::{parse_rational, Atom, Graded};
use crate::compose::Composed;
use crate::error::{Error, ParseError, Result};
use crate::exactalg::{
    coproduct_lin, primitive_basis, primitive_dimension, product_lin, Antipode, BasisElement, GradedAlgebra,
    GradedCoalgebra, IntSeries, Lin, Tensor,
};
use crate::named::{cc_left, cc_right, cksym, deltasym, psym, DeltaVariant};
use crate::operadic::{coaction_rho, ConnectedAlgebra, Connection, Flavor};

/// Largest basis size for which products, antipodes and coactions run.
pub const ALGEBRA_LIMIT: usize = 2_000;
/// Largest basis size for kernel computations.
pub const KERNEL_LIMIT: usize = 2_000;
/// Largest basis size that will be enumerated.
pub const ENUMERATION_LIMIT: usize = 50_000;

/// Largest degree (at most 12) whose component has at most `limit` elements.
pub fn degree_cap(dim: impl Fn(usize) -> usize, limit: usize) -> usize {
    (1..=12).take_while(|&n| dim(n) <= limit).last().unwrap_or(0)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Factor {
    pub basis: String,
    pub degree: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Term {
    pub coefficient: String,
    pub basis: String,
    pub degree: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub factors: Option<Vec<Factor>>,
}

/// A combination in canonical order, ready for text or JSON output.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Rendered {
    pub algebra: String,
    pub terms: Vec<Term>,
    #[serde(skip)]
    pub text: String,
}

impl std::fmt::Display for Rendered {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.text)
    }
}

fn render<B: BasisElement>(algebra: &str, x: &Lin<B>) -> Rendered {
    Rendered {
        algebra: algebra.into(),
        terms: x
            .iter()
            .map(|(b, c)| Term {
                coefficient: c.to_string(),
                basis: b.to_string(),
                degree: b.degree(),
                factors: None,
            })
            .collect(),
        text: x.to_string(),
    }
}

fn render_pairs<A: BasisElement, B: BasisElement>(algebra: &str, x: &Lin<(A, B)>) -> Rendered {
    let show = |(a, b): &(A, B)| format!("{a} ⊗ {b}");
    Rendered {
        algebra: algebra.into(),
        terms: x
            .iter()
            .map(|(k, c)| Term {
                coefficient: c.to_string(),
                basis: show(k),
                degree: k.0.degree() + k.1.degree(),
                factors: Some(vec![
                    Factor {
                        basis: k.0.to_string(),
                        degree: k.0.degree(),
                    },
                    Factor {
                        basis: k.1.to_string(),
                        degree: k.1.degree(),
                    },
                ]),
            })
            .collect(),
        text: x.format_with(show),
    }
}

/// Parse `2 a + b - 1/2 c`: terms separated by top-level `+`/`-`, each with
/// an optional rational coefficient token. `0` is the zero combination.
pub fn parse_combination<B: BasisElement>(text: &str) -> Result<Lin<B>, ParseError> {
    if text.trim() == "0" {
        return Ok(Lin::zero());
    }
    let mut chunks = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    let mut sign = 1;
    for (i, ch) in text.char_indices() {
        match ch {
            '(' | '[' | '{' => depth += 1,
            ')' | ']' | '}' => depth -= 1,
            '+' | '-' if depth == 0 => {
                chunks.push((start, &text[start..i], sign));
                sign = if ch == '-' { -1 } else { 1 };
                start = i + 1;
            }
            _ => {}
        }
    }
    chunks.push((start, &text[start..], sign));
    // a leading sign produces an empty first chunk
    if chunks.len() > 1 && chunks[0].1.trim().is_empty() {
        chunks.remove(0);
    }
    let mut out = Lin::zero();
    for (offset, chunk, sign) in chunks {
        let lead = chunk.len() - chunk.trim_start().len();
        let body = chunk.trim();
        if body.is_empty() {
            return Err(ParseError::new(offset + lead, "expected a term"));
        }
        let (coefficient, basis_text, basis_at) = match body.split_once(char::is_whitespace) {
            Some((token, rest)) if !rest.trim_start().starts_with('@') => match parse_rational(token) {
                Some(c) => {
                    let skip = body.len() - rest.trim_start().len();
                    (c, rest.trim(), offset + lead + skip)
                }
                None => (crate::exactalg::int(1), body, offset + lead),
            },
            _ => (crate::exactalg::int(1), body, offset + lead),
        };
        let b: B = basis_text.parse().map_err(|e: ParseError| e.shifted(basis_at))?;
        out.add_term(b, coefficient * crate::exactalg::int(sign));
    }
    Ok(out)
}

/// Text-level operations on one algebra.
pub trait AlgebraHandle: Send + Sync {
    fn name(&self) -> String;

    /// Largest degree accepted by operations whose cost grows with the
    /// size of a component.
    fn degree_cap(&self) -> usize;

    /// Parse and print back in canonical form.
    fn canonical(&self, text: &str) -> Result<Rendered>;

    fn coproduct(&self, text: &str) -> Result<Rendered>;

    fn product(&self, _left: &str, _right: &str) -> Result<Rendered> {
        Err(self.unsupported("product"))
    }

    fn antipode(&self, _text: &str) -> Result<Rendered> {
        Err(self.unsupported("antipode"))
    }

    /// `S(b)` for every basis element up to degree `n`, as (basis, image).
    fn antipode_table(&self, _n: usize) -> Result<Vec<(String, Rendered)>> {
        Err(self.unsupported("antipode"))
    }

    fn coaction(&self, _text: &str) -> Result<Rendered> {
        Err(self.unsupported("coaction"))
    }

    /// Dimensions in degrees `0..=n`.
    fn dims(&self, n: usize) -> IntSeries;

    /// Primitive dimensions in degrees `0..=n`.
    fn primitives(&self, n: usize) -> Result<Vec<usize>>;

    /// Kernel basis of the reduced coproduct in degree `n`.
    fn primitive_vectors(&self, n: usize) -> Result<Vec<Rendered>>;

    fn enumerate(&self, n: usize) -> Result<Vec<String>>;

    fn unsupported(&self, op: &'static str) -> Error {
        Error::Unsupported {
            op: op.into(),
            algebra: self.name(),
        }
    }
}

struct Coalg<A>(A);
struct Alg<A>(A);
struct Conn<K>(ConnectedAlgebra<K>);

fn cap_error(algebra: String, requested: usize, cap: usize) -> Error {
    Error::CapExceeded { algebra, requested, cap }
}

fn within<A: GradedCoalgebra>(alg: &A, x: &Lin<A::Basis>, limit: usize) -> Result<()> {
    let cap = degree_cap(|n| alg.dimension(n), limit);
    match x.keys().map(Graded::degree).max() {
        Some(d) if d > cap => Err(cap_error(alg.name(), d, cap)),
        _ => Ok(()),
    }
}

fn parse<A: GradedCoalgebra>(text: &str) -> Result<Lin<A::Basis>> {
    Ok(parse_combination::<A::Basis>(text)?)
}

fn coalgebra_canonical<A: GradedCoalgebra>(alg: &A, text: &str) -> Result<Rendered> {
    Ok(render(&alg.name(), &parse::<A>(text)?))
}

fn coalgebra_dims<A: GradedCoalgebra>(alg: &A, n: usize) -> IntSeries {
    (0..=n).map(|k| alg.dimension(k) as i128).collect()
}

fn coalgebra_primitives<A: GradedCoalgebra>(alg: &A, n: usize) -> Result<Vec<usize>> {
    let cap = degree_cap(|k| alg.dimension(k), KERNEL_LIMIT);
    if n > cap {
        return Err(cap_error(alg.name(), n, cap));
    }
    Ok((0..=n).map(|k| primitive_dimension(alg, k)).collect())
}

fn coalgebra_vectors<A: GradedCoalgebra>(alg: &A, n: usize) -> Result<Vec<Rendered>> {
    let cap = degree_cap(|k| alg.dimension(k), KERNEL_LIMIT);
    if n > cap {
        return Err(cap_error(alg.name(), n, cap));
    }
    Ok(primitive_basis(alg, n).iter().map(|v| render(&alg.name(), v)).collect())
}

fn coalgebra_enumerate<A: GradedCoalgebra>(alg: &A, n: usize) -> Result<Vec<String>> {
    let cap = degree_cap(|k| alg.dimension(k), ENUMERATION_LIMIT);
    if n > cap {
        return Err(cap_error(alg.name(), n, cap));
    }
    Ok(alg.basis(n).iter().map(ToString::to_string).collect())
}

fn coalgebra_coproduct<A: GradedCoalgebra>(alg: &A, text: &str) -> Result<Rendered> {
    let x = parse::<A>(text)?;
    within(alg, &x, ENUMERATION_LIMIT)?;
    let d: Tensor<A::Basis> = coproduct_lin(alg, &x);
    Ok(render_pairs(&alg.name(), &d))
}

fn algebra_product<A: GradedAlgebra>(alg: &A, left: &str, right: &str) -> Result<Rendered> {
    let x = parse::<A>(left)?;
    let y = parse::<A>(right)?;
    within(alg, &x, ALGEBRA_LIMIT)?;
    within(alg, &y, ALGEBRA_LIMIT)?;
    Ok(render(&alg.name(), &product_lin(alg, &x, &y)))
}

fn algebra_antipode<A: GradedAlgebra>(alg: &A, text: &str) -> Result<Rendered> {
    let x = parse::<A>(text)?;
    within(alg, &x, ALGEBRA_LIMIT)?;
    let s = Antipode::new(alg)?;
    Ok(render(&alg.name(), &s.apply_lin(&x)?))
}

fn algebra_antipode_table<A: GradedAlgebra>(alg: &A, n: usize) -> Result<Vec<(String, Rendered)>> {
    let cap = degree_cap(|k| alg.dimension(k), ALGEBRA_LIMIT);
    if n > cap {
        return Err(cap_error(alg.name(), n, cap));
    }
    let s = Antipode::new(alg)?;
    let mut out = Vec::new();
    for k in 0..=n {
        for b in alg.basis(k) {
            out.push((b.to_string(), render(&alg.name(), &s.apply(&b)?)));
        }
    }
    Ok(out)
}

macro_rules! coalgebra_methods {
    ($field:tt) => {
        fn name(&self) -> String {
            self.$field.name()
        }

        fn degree_cap(&self) -> usize {
            degree_cap(|n| self.$field.dimension(n), ALGEBRA_LIMIT)
        }

        fn canonical(&self, text: &str) -> Result<Rendered> {
            coalgebra_canonical(&self.$field, text)
        }

        fn coproduct(&self, text: &str) -> Result<Rendered> {
            coalgebra_coproduct(&self.$field, text)
        }

        fn dims(&self, n: usize) -> IntSeries {
            coalgebra_dims(&self.$field, n)
        }

        fn primitives(&self, n: usize) -> Result<Vec<usize>> {
            coalgebra_primitives(&self.$field, n)
        }

        fn primitive_vectors(&self, n: usize) -> Result<Vec<Rendered>> {
            coalgebra_vectors(&self.$field, n)
        }

        fn enumerate(&self, n: usize) -> Result<Vec<String>> {
            coalgebra_enumerate(&self.$field, n)
        }
    };
}

impl<A: GradedCoalgebra> AlgebraHandle for Coalg<A> {
    coalgebra_methods!(0);
}

impl<A: GradedAlgebra> AlgebraHandle for Alg<A> {
    coalgebra_methods!(0);

    fn product(&self, left: &str, right: &str) -> Result<Rendered> {
        algebra_product(&self.0, left, right)
    }

    fn antipode(&self, text: &str) -> Result<Rendered> {
        algebra_antipode(&self.0, text)
    }

    fn antipode_table(&self, n: usize) -> Result<Vec<(String, Rendered)>> {
        algebra_antipode_table(&self.0, n)
    }
}

impl<K: Connection> AlgebraHandle for Conn<K> {
    coalgebra_methods!(0);

    fn product(&self, left: &str, right: &str) -> Result<Rendered> {
        algebra_product(&self.0, left, right)
    }

    fn antipode(&self, text: &str) -> Result<Rendered> {
        algebra_antipode(&self.0, text)
    }

    fn antipode_table(&self, n: usize) -> Result<Vec<(String, Rendered)>> {
        algebra_antipode_table(&self.0, n)
    }

    fn coaction(&self, text: &str) -> Result<Rendered> {
        let x = parse::<ConnectedAlgebra<K>>(text)?;
        within(&self.0, &x, ALGEBRA_LIMIT)?;
        let rho = x.flat_map(|e| coaction_rho(&self.0 .0, e));
        Ok(render_pairs(&self.name(), &rho))
    }
}

fn composed<D, C>(outer: D, inner: C) -> Box<dyn AlgebraHandle>
where
    D: GradedCoalgebra + 'static,
    C: GradedCoalgebra + 'static,
    D::Basis: Atom,
    C::Basis: Atom,
{
    Box::new(Coalg(Composed::new(outer, inner)))
}

/// Every name accepted by [`lookup`].
pub const ALGEBRA_NAMES: &[&str] = &[
    "ssym",
    "ysym",
    "csym",
    "psym",
    "cksym",
    "cc",
    "deltasym",
    "ssym.ssym",
    "ssym.ysym",
    "ssym.csym",
    "ysym.ssym",
    "ysym.ysym",
    "ysym.csym",
    "csym.ssym",
    "csym.ysym",
    "csym.csym",
];

/// Resolve an algebra by name. `flavor` applies to `cc` only and `variant`
/// to `deltasym` only.
pub fn lookup(name: &str, flavor: Option<Flavor>, variant: Option<DeltaVariant>) -> Result<Box<dyn AlgebraHandle>> {
    if flavor.is_some() && name != "cc" {
        return Err(Error::Unsupported {
            op: "--flavor".into(),
            algebra: name.into(),
        });
    }
    if variant.is_some() && name != "deltasym" {
        return Err(Error::Unsupported {
            op: "--variant".into(),
            algebra: name.into(),
        });
    }
    Ok(match name {
        "ssym" => Box::new(Alg(SSym)),
        "ysym" => Box::new(Alg(YSym)),
        "csym" => Box::new(Alg(CSym)),
        "psym" => Box::new(Conn(psym())),
        "cksym" => Box::new(Conn(cksym())),
        "cc" | "cc-right" if flavor != Some(Flavor::Left) => Box::new(Conn(cc_right())),
        "cc" | "cc-left" => Box::new(Conn(cc_left())),
        "deltasym" => Box::new(Conn(deltasym(variant.unwrap_or_default()))),
        "ssym.ssym" => composed(SSym, SSym),
        "ssym.ysym" => composed(SSym, YSym),
        "ssym.csym" => composed(SSym, CSym),
        "ysym.ssym" => composed(YSym, SSym),
        "ysym.ysym" => composed(YSym, YSym),
        "ysym.csym" => composed(YSym, CSym),
        "csym.ssym" => composed(CSym, SSym),
        "csym.ysym" => composed(CSym, YSym),
        "csym.csym" => composed(CSym, CSym),
        other => return Err(Error::UnknownAlgebra(other.into())),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn combination_literals() {
        let x: Lin<crate::combinat::Comb> = parse_combination("2 c3 - 1/2 c1 + c3").unwrap();
        assert_eq!(x.to_string(), "-1/2 c1 + 3 c3");
        let y: Lin<crate::combinat::OrderedTree> = parse_combination("-2,1").unwrap();
        assert_eq!(y.to_string(), "-2,1");
        let err = parse_combination::<crate::combinat::OrderedTree>("1,2 + ").unwrap_err();
        assert_eq!(err.position, 6);
        let zero: Lin<crate::combinat::Comb> = parse_combination(" 0 ").unwrap();
        assert!(zero.is_zero());
        assert_eq!(zero.to_string(), "0");
    }

    #[test]
    fn dispatch() {
        let cc = lookup("cc", Some(Flavor::Right), None).unwrap();
        assert_eq!(cc.product("[1,3]", "[2]").unwrap().text, "2 [1,1,3] + [1,2,2] + [1,3,1]");
        assert!(matches!(lookup("nope", None, None), Err(Error::UnknownAlgebra(_))));
        assert!(matches!(lookup("psym", Some(Flavor::Left), None), Err(Error::Unsupported { .. })));
        let ss = lookup("ssym.ssym", None, None).unwrap();
        assert!(matches!(ss.product("{()}/()", "{()}/()"), Err(Error::Unsupported { .. })));
        assert_eq!(lookup("csym.ssym", None, None).unwrap().dims(5), vec![1, 2, 5, 15, 54, 235]);
    }
}
