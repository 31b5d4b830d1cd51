//! Evaluation of `--expr` in either algebra.

use std::fmt::Display;

use serde::Serialize;

use skein_core::dilog::{dilog_inverse, series_inverse, skein_dilog};
use skein_core::expr::{self, ExprValue};
use skein_core::lattice::LatticeVector;
use skein_core::{AlgebraKind, Cutoff, GradedAlgebra, QuantumTorus, Scalar, TorusSkein};

enum Value<'a, A: GradedAlgebra> {
    Scalar(Scalar),
    Elem(&'a A, A::Element),
}

fn err<E: Display>(e: E) -> String {
    e.to_string()
}

impl<'a, A: GradedAlgebra> Value<'a, A> {
    fn lift(alg: &A, c: &Scalar, cutoff: Cutoff) -> A::Element {
        alg.scale(&alg.one(cutoff), c)
    }

    fn combine(
        self,
        rhs: Self,
        on_scalars: impl FnOnce(Scalar, Scalar) -> Scalar,
        on_elems: impl FnOnce(&A, &A::Element, &A::Element) -> A::Element,
    ) -> Self {
        match (self, rhs) {
            (Value::Scalar(a), Value::Scalar(b)) => Value::Scalar(on_scalars(a, b)),
            (Value::Elem(alg, a), Value::Elem(_, b)) => Value::Elem(alg, on_elems(alg, &a, &b)),
            (Value::Elem(alg, a), Value::Scalar(c)) => {
                let b = Self::lift(alg, &c, alg.cutoff(&a));
                Value::Elem(alg, on_elems(alg, &a, &b))
            }
            (Value::Scalar(c), Value::Elem(alg, b)) => {
                let a = Self::lift(alg, &c, alg.cutoff(&b));
                Value::Elem(alg, on_elems(alg, &a, &b))
            }
        }
    }
}

impl<'a, A: GradedAlgebra> ExprValue for Value<'a, A> {
    fn from_scalar(c: Scalar) -> Self {
        Value::Scalar(c)
    }

    fn add(self, rhs: Self) -> Result<Self, String> {
        Ok(self.combine(rhs, |a, b| &a + &b, |alg, a, b| alg.add(a, b)))
    }

    fn sub(self, rhs: Self) -> Result<Self, String> {
        Ok(self.combine(rhs, |a, b| &a - &b, |alg, a, b| alg.sub(a, b)))
    }

    fn mul(self, rhs: Self) -> Result<Self, String> {
        Ok(match (self, rhs) {
            (Value::Elem(alg, a), Value::Scalar(c)) | (Value::Scalar(c), Value::Elem(alg, a)) => {
                Value::Elem(alg, alg.scale(&a, &c))
            }
            (a, b) => a.combine(b, |a, b| &a * &b, |alg, a, b| alg.mul(a, b)),
        })
    }

    fn div(self, rhs: Self) -> Result<Self, String> {
        let c = match rhs {
            Value::Scalar(c) => c,
            Value::Elem(..) => {
                return Err("division by an algebra element; use Qinv[i,j] or a negative power".to_string())
            }
        };
        let inv = c.inv().map_err(err)?;
        match self {
            Value::Scalar(a) => Ok(Value::Scalar(&a * &inv)),
            Value::Elem(alg, a) => Ok(Value::Elem(alg, alg.scale(&a, &inv))),
        }
    }

    fn pow(self, e: i64) -> Result<Self, String> {
        match self {
            Value::Scalar(a) => a.pow(e).map(Value::Scalar).map_err(err),
            Value::Elem(alg, a) => {
                let base = if e < 0 { series_inverse(alg, &a).map_err(err)? } else { a };
                let mut acc = alg.one(alg.cutoff(&base));
                for _ in 0..e.unsigned_abs() {
                    acc = alg.mul(&acc, &base);
                }
                Ok(Value::Elem(alg, acc))
            }
        }
    }

    fn neg(self) -> Self {
        match self {
            Value::Scalar(a) => Value::Scalar(-&a),
            Value::Elem(alg, a) => Value::Elem(alg, alg.scale(&a, &-&Scalar::one())),
        }
    }
}

fn evaluate<A: GradedAlgebra>(alg: &A, text: &str, n: u32, generator_names: &[&str]) -> Result<A::Element, String> {
    let cutoff = Cutoff::Finite(n);
    let mut resolve = |name: &str, v: LatticeVector, _pos: usize| -> Result<Value<'_, A>, String> {
        let e = match name {
            "Q" => skein_dilog(alg, v, n).map_err(err)?,
            "Qinv" => dilog_inverse(alg, v, n).map_err(err)?,
            g if generator_names.contains(&g) => alg.generator(v, cutoff).map_err(err)?,
            "P" | "X" => {
                return Err(format!(
                    "{}[..] is not a generator of the {} algebra",
                    name,
                    alg.kind().name()
                ))
            }
            other => return Err(format!("unknown name {:?} (expected P, X, Q or Qinv)", other)),
        };
        Ok(Value::Elem(alg, e))
    };
    let value: Value<'_, A> = expr::parse(text, &mut resolve).map_err(|e| format!("in expression {}", e))?;
    Ok(match value {
        Value::Scalar(c) => Value::lift(alg, &c, cutoff),
        Value::Elem(alg, e) => alg.truncate(&e, cutoff),
    })
}

/// One basis term of an expansion: a vector `X[i,j]` or a PBW monomial.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Term {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vector: Option<[i64; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub monomial: Option<String>,
    pub coefficient: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expansion {
    /// Canonical serialization.
    pub text: String,
    /// The same terms in serialization order.
    pub terms: Vec<Term>,
}

/// Parses and evaluates `text` in `algebra` truncated at degree `n`.
pub fn expand(text: &str, algebra: AlgebraKind, n: u32) -> Result<Expansion, String> {
    match algebra {
        AlgebraKind::TorusSkein => {
            let e = evaluate(&TorusSkein::new(), text, n, &["P"])?;
            let terms = e
                .terms()
                .map(|(m, c)| Term {
                    vector: None,
                    monomial: Some(m.to_string()),
                    coefficient: c.to_string(),
                })
                .collect();
            Ok(Expansion {
                text: e.to_string(),
                terms,
            })
        }
        AlgebraKind::QuantumTorus => {
            let e = evaluate(&QuantumTorus, text, n, &["X", "P"])?;
            let terms = e
                .terms()
                .into_iter()
                .map(|(v, c)| Term {
                    vector: Some([v.i, v.j]),
                    monomial: None,
                    coefficient: c.to_string(),
                })
                .collect();
            Ok(Expansion {
                text: e.to_string(),
                terms,
            })
        }
    }
}
