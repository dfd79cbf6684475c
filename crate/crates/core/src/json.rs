//! JSON encodings shared by the command line: rationals as `"p/q"` strings,
//! Gaussian rationals as `{"re", "im"}` objects (or a plain string when real).

use serde_json::{json, Map, Value};

use crate::arith::{GaussianRational, Rational};
use crate::elliptic::{EllPoint, EllipticConfiguration, LambdaValue};
use crate::quintuple::Quintuple;
use crate::quiver::{CyclicPotential, Quiver};
use crate::weighted::WeightedPoint;

/// A document that does not match the expected shape.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchemaError {
    pub path: String,
    pub message: String,
}

impl SchemaError {
    pub fn new(path: &str, message: impl Into<String>) -> Self {
        SchemaError {
            path: path.to_string(),
            message: message.into(),
        }
    }

    pub fn to_json(&self) -> Value {
        json!({"kind": "schema", "path": self.path, "message": self.message})
    }
}

impl std::fmt::Display for SchemaError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}: {}", self.path, self.message)
    }
}

pub type SchemaResult<T> = std::result::Result<T, SchemaError>;

pub fn rational(r: &Rational) -> Value {
    Value::String(r.to_string())
}

pub fn scalar(z: &GaussianRational) -> Value {
    if z.is_real() {
        rational(&z.re)
    } else {
        json!({"re": z.re.to_string(), "im": z.im.to_string()})
    }
}

pub fn parse_rational(v: &Value, path: &str) -> SchemaResult<Rational> {
    match v {
        Value::String(s) => s
            .parse()
            .map_err(|_| SchemaError::new(path, format!("`{s}` is not a rational"))),
        _ => Err(SchemaError::new(path, "expected a rational string \"p/q\"")),
    }
}

pub fn parse_scalar(v: &Value, path: &str) -> SchemaResult<GaussianRational> {
    match v {
        Value::Object(m) => {
            if m.keys().any(|k| k != "re" && k != "im") {
                return Err(SchemaError::new(path, "scalar objects only have `re` and `im`"));
            }
            let part = |k: &str| match m.get(k) {
                Some(x) => parse_rational(x, &format!("{path}.{k}")),
                None => Ok(Rational::zero()),
            };
            Ok(GaussianRational::new(part("re")?, part("im")?))
        }
        _ => parse_rational(v, path).map(GaussianRational::real),
    }
}

fn array<'a>(v: &'a Value, len: Option<usize>, path: &str) -> SchemaResult<&'a Vec<Value>> {
    let a = v
        .as_array()
        .ok_or_else(|| SchemaError::new(path, "expected an array"))?;
    if let Some(n) = len.filter(|&n| n != a.len()) {
        return Err(SchemaError::new(path, format!("expected {n} entries, got {}", a.len())));
    }
    Ok(a)
}

fn field<'a>(v: &'a Value, key: &str, path: &str) -> SchemaResult<&'a Value> {
    v.as_object()
        .ok_or_else(|| SchemaError::new(path, "expected an object"))?
        .get(key)
        .ok_or_else(|| SchemaError::new(path, format!("missing `{key}`")))
}

/// Nested `w[i][j][k][l]` arrays.
pub fn quintuple(w: &Quintuple) -> Value {
    let idx = [0usize, 1];
    Value::Array(
        idx.iter()
            .map(|&i| {
                json!(idx
                    .iter()
                    .map(|&j| {
                        json!(idx
                            .iter()
                            .map(|&k| json!(idx.iter().map(|&l| scalar(w.get(i, j, k, l))).collect::<Vec<_>>()))
                            .collect::<Vec<_>>())
                    })
                    .collect::<Vec<_>>())
            })
            .collect(),
    )
}

pub fn parse_quintuple(v: &Value) -> SchemaResult<Quintuple> {
    let mut w = Quintuple::zero();
    for (i, a) in array(v, Some(2), "$")?.iter().enumerate() {
        for (j, b) in array(a, Some(2), &format!("$[{i}]"))?.iter().enumerate() {
            for (k, c) in array(b, Some(2), &format!("$[{i}][{j}]"))?.iter().enumerate() {
                for (l, x) in array(c, Some(2), &format!("$[{i}][{j}][{k}]"))?.iter().enumerate() {
                    w.set(i, j, k, l, parse_scalar(x, &format!("$[{i}][{j}][{k}][{l}]"))?);
                }
            }
        }
    }
    Ok(w)
}

/// `[{"cycle": [...], "coeff": "p/q"}]`, one entry per cyclic class.
pub fn potential(phi: &CyclicPotential) -> Value {
    Value::Array(
        phi.classes()
            .iter()
            .map(|(w, c)| json!({"cycle": phi.word_names(w), "coeff": c.to_string()}))
            .collect(),
    )
}

pub fn parse_potential(v: &Value, quiver: &Quiver) -> SchemaResult<CyclicPotential> {
    let mut phi = CyclicPotential::zero(quiver.clone());
    for (n, term) in array(v, None, "$")?.iter().enumerate() {
        let path = format!("$[{n}]");
        let cycle: Vec<&str> = array(field(term, "cycle", &path)?, None, &path)?
            .iter()
            .map(|a| a.as_str().ok_or_else(|| SchemaError::new(&path, "arrow names are strings")))
            .collect::<SchemaResult<_>>()?;
        let c = parse_rational(field(term, "coeff", &path)?, &format!("{path}.coeff"))?;
        phi.add_named(&cycle, c)
            .map_err(|e| SchemaError::new(&path, e.to_string()))?;
    }
    Ok(phi)
}

pub fn weighted_point(p: &WeightedPoint) -> Value {
    json!({
        "weights": p.weights(),
        "coords": p.coords().iter().map(scalar).collect::<Vec<_>>(),
    })
}

pub fn lambda(l: &LambdaValue) -> Value {
    json!(l.pair().iter().map(scalar).collect::<Vec<_>>())
}

/// Either an affine value `λ` or a homogeneous pair `[λ₀, λ₁]`.
pub fn parse_lambda(v: &Value, path: &str) -> SchemaResult<LambdaValue> {
    let res = match v {
        Value::Array(_) => {
            let a = array(v, Some(2), path)?;
            LambdaValue::new(parse_scalar(&a[0], path)?, parse_scalar(&a[1], path)?)
        }
        _ => LambdaValue::affine(parse_scalar(v, path)?),
    };
    res.map_err(|e| SchemaError::new(path, e.to_string()))
}

pub fn point(p: &EllPoint) -> Value {
    json!(p.coords().iter().map(scalar).collect::<Vec<_>>())
}

pub fn parse_point(v: &Value, path: &str) -> SchemaResult<EllPoint> {
    let a = array(v, Some(3), path)?;
    let c: Vec<GaussianRational> = a
        .iter()
        .enumerate()
        .map(|(k, x)| parse_scalar(x, &format!("{path}[{k}]")))
        .collect::<SchemaResult<_>>()?;
    let [x, y, z]: [GaussianRational; 3] = c.try_into().unwrap();
    EllPoint::new(x, y, z).map_err(|e| SchemaError::new(path, e.to_string()))
}

pub fn configuration(c: &EllipticConfiguration) -> Value {
    json!({"lambda": lambda(&c.lambda), "p1": point(&c.p1), "p2": point(&c.p2)})
}

/// The pieces of a configuration, before checking that the points lie on the curve.
pub fn parse_configuration_parts(v: &Value, path: &str) -> SchemaResult<(LambdaValue, EllPoint, EllPoint)> {
    Ok((
        parse_lambda(field(v, "lambda", path)?, &format!("{path}.lambda"))?,
        parse_point(field(v, "p1", path)?, &format!("{path}.p1"))?,
        parse_point(field(v, "p2", path)?, &format!("{path}.p2"))?,
    ))
}

pub fn object(pairs: impl IntoIterator<Item = (&'static str, Value)>) -> Value {
    Value::Object(pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect::<Map<_, _>>())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scalars_round_trip() {
        for z in [GaussianRational::from_ints(3, -2), GaussianRational::real(Rational::new(-5, 7))] {
            assert_eq!(parse_scalar(&scalar(&z), "$").unwrap(), z);
        }
        assert!(parse_scalar(&json!(1.5), "$").is_err());
        assert!(parse_scalar(&json!({"re": "1", "x": "2"}), "$").is_err());
    }

    #[test]
    fn tensors_and_potentials_round_trip() {
        let w = Quintuple::linear_reference().scale(&GaussianRational::i());
        assert_eq!(parse_quintuple(&quintuple(&w)).unwrap(), w);
        let phi = CyclicPotential::conifold_standard();
        assert_eq!(parse_potential(&potential(&phi), &Quiver::conifold()).unwrap(), phi);
        assert!(parse_potential(&json!([{"cycle": ["a1", "a2"], "coeff": "1"}]), &Quiver::conifold()).is_err());
    }

    #[test]
    fn configuration_round_trip() {
        let l = LambdaValue::affine(GaussianRational::from_integer(-1)).unwrap();
        let p = EllPoint::from_ints(1, 1, 0);
        let c = EllipticConfiguration::new(l, EllPoint::origin(), p).unwrap();
        let (l2, a, b) = parse_configuration_parts(&configuration(&c), "$").unwrap();
        assert_eq!(EllipticConfiguration::new(l2, a, b).unwrap(), c);
    }
}
