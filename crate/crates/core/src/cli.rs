//! Job dispatch behind the command line. Every job maps a JSON document to an
//! exit status and a JSON document; numbers that must stay exact are strings.

use serde_json::{json, Value};

use crate::acceptance::{run_all, AcceptanceConfig};
use crate::arith::Rational;
use crate::dt::{counting_report, render_poly, CountReport, FitStatus, StabilityParameter};
use crate::elliptic::{curve_contains, orbit_witness, EllipticConfiguration};
use crate::error::Error;
use crate::json::{self, SchemaError};
use crate::potential_moduli::{verify_covering_identities, PotentialStability, SymPotentialMatrix};
use crate::quintuple::Stability;
use crate::quiver::{graded_dimension, Quiver};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_SCHEMA: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QuiverChoice {
    Conifold,
    DoubleCover,
    Framed,
}

impl QuiverChoice {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "conifold" => Some(QuiverChoice::Conifold),
            "double-cover" => Some(QuiverChoice::DoubleCover),
            "framed" => Some(QuiverChoice::Framed),
            _ => None,
        }
    }

    pub fn quiver(&self) -> Quiver {
        match self {
            QuiverChoice::Conifold => Quiver::conifold(),
            QuiverChoice::DoubleCover => Quiver::double_cover(),
            QuiverChoice::Framed => Quiver::framed_conifold(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    ClassifyQuintuple,
    ClassifyPotential,
    MapPotential,
    Hilbert {
        from: String,
        to: String,
        max: usize,
        quiver: QuiverChoice,
    },
    EllipticOrbitTest {
        include_involution: bool,
    },
    EllipticCheck,
    DtCount {
        primes: Vec<u64>,
        theta: [Rational; 3],
    },
    Acceptance,
}

#[derive(Clone, Debug)]
pub struct JobSpec {
    pub command: Command,
    /// Raw input document; unused by `acceptance`.
    pub input: String,
    pub seed: u64,
    pub samples: Option<usize>,
}

enum Failure {
    Schema(SchemaError),
    Domain(Error),
}

impl From<SchemaError> for Failure {
    fn from(e: SchemaError) -> Self {
        Failure::Schema(e)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

type JobResult = std::result::Result<(i32, Value), Failure>;

pub fn run(job: &JobSpec) -> (i32, Value) {
    match dispatch(job) {
        Ok(out) => out,
        Err(Failure::Schema(e)) => (EXIT_SCHEMA, json!({"error": e.to_json()})),
        Err(Failure::Domain(e)) => (
            EXIT_DOMAIN,
            json!({"error": {"kind": "domain", "variant": variant_name(&e), "message": e.to_string()}}),
        ),
    }
}

fn variant_name(e: &Error) -> String {
    let dbg = format!("{e:?}");
    dbg.split(|c: char| !c.is_alphanumeric()).next().unwrap_or("").to_string()
}

fn document(job: &JobSpec) -> std::result::Result<Value, SchemaError> {
    serde_json::from_str(&job.input).map_err(|e| SchemaError::new("$", format!("malformed JSON: {e}")))
}

fn dispatch(job: &JobSpec) -> JobResult {
    if job.command == Command::Acceptance {
        return Ok(acceptance(job));
    }
    let doc = document(job)?;
    let out = match &job.command {
        Command::ClassifyQuintuple => classify_quintuple(&doc)?,
        Command::ClassifyPotential => classify_potential(&doc)?,
        Command::MapPotential => {
            let n = sym_matrix(&doc)?;
            if n.classify_stability()? == PotentialStability::Unstable {
                return Err(Error::Unstable.into());
            }
            json::quintuple(&n.to_quintuple())
        }
        Command::Hilbert { from, to, max, quiver } => {
            let phi = json::parse_potential(&doc, &quiver.quiver())?;
            json!({"dims": graded_dimension(&phi, from, to, *max)?})
        }
        Command::EllipticOrbitTest { include_involution } => orbit_test(&doc, *include_involution)?,
        Command::EllipticCheck => {
            let (l, p1, p2) = json::parse_configuration_parts(&doc, "$")?;
            let on = [curve_contains(&l, &p1), curve_contains(&l, &p2)];
            json!({
                "on_curve": on,
                "admissible": (on[0] && on[1]).then(|| !p2.z().is_zero()),
            })
        }
        Command::DtCount { primes, theta } => {
            let phi = json::parse_potential(&doc, &Quiver::conifold())?;
            let [t0, t1, t2] = theta.clone();
            count_report_json(&counting_report(&phi, &StabilityParameter::new(t0, t1, t2), primes)?)
        }
        Command::Acceptance => unreachable!(),
    };
    Ok((EXIT_OK, out))
}

fn sym_matrix(doc: &Value) -> std::result::Result<SymPotentialMatrix, Failure> {
    let phi = json::parse_potential(doc, &Quiver::conifold())?;
    Ok(SymPotentialMatrix::from_potential(&phi)?)
}

fn classify_quintuple(doc: &Value) -> std::result::Result<Value, Failure> {
    let w = json::parse_quintuple(doc)?;
    if w.is_zero() {
        return Err(Error::ZeroTensor.into());
    }
    let inv = w.invariants();
    let stability = w.classify_stability()?;
    let geo = w.is_geometric()?;
    let mut out = json!({
        "invariants": {
            "f2": json::scalar(&inv.f2),
            "f4": json::scalar(&inv.f4),
            "g4": json::scalar(&inv.g4),
            "f6": json::scalar(&inv.f6),
        },
        "stability": stability.as_str(),
        "weighted_point": if stability == Stability::Unstable {
            Value::Null
        } else {
            json::weighted_point(&w.weighted_point()?)
        },
        "geometric": geo.geometric,
    });
    if let Some(j) = geo.failing_index {
        out["failing_index"] = json!(j);
    }
    Ok(out)
}

fn classify_potential(doc: &Value) -> std::result::Result<Value, Failure> {
    let n = sym_matrix(doc)?;
    let stability = n.classify_stability()?;
    Ok(json!({
        "f": n.invariants().to_vec().iter().map(json::rational).collect::<Vec<_>>(),
        "stability": stability.as_str(),
        "weighted_point": if stability == PotentialStability::Unstable {
            Value::Null
        } else {
            json::weighted_point(&n.weighted_point()?)
        },
        "quintuple_image": json::quintuple(&n.to_quintuple()),
        "identities_ok": verify_covering_identities(&n),
    }))
}

fn orbit_test(doc: &Value, include_involution: bool) -> std::result::Result<Value, Failure> {
    let (a, b) = match doc {
        Value::Array(v) if v.len() == 2 => (&v[0], &v[1]),
        Value::Object(m) if m.contains_key("first") && m.contains_key("second") => (&m["first"], &m["second"]),
        _ => {
            return Err(SchemaError::new("$", "expected [config, config] or {\"first\", \"second\"}").into());
        }
    };
    let config = |v: &Value, path: &str| -> std::result::Result<EllipticConfiguration, Failure> {
        let (l, p1, p2) = json::parse_configuration_parts(v, path)?;
        Ok(EllipticConfiguration::new(l, p1, p2)?)
    };
    let (c1, c2) = (config(a, "$[0]")?, config(b, "$[1]")?);
    let witness = orbit_witness(&c1, &c2, include_involution);
    let mut out = json!({"equivalent": witness.is_some(), "include_involution": include_involution});
    if let Some(g) = witness {
        out["witness"] = json!(g.to_string());
        out["image"] = json::configuration(&g.apply(&c1)?);
    }
    Ok(out)
}

pub fn count_report_json(rep: &CountReport) -> Value {
    let counts: Vec<Value> = rep
        .counts
        .iter()
        .map(|c| json!({"p": c.p, "count": c.count, "excluded": c.excluded}))
        .collect();
    let status = match &rep.status {
        FitStatus::Fitted { extra_checks } => json!({"fitted": {"extra_checks": extra_checks}}),
        FitStatus::NoPolynomialFit => json!("no-polynomial-fit"),
        FitStatus::InsufficientUsablePrimes => json!("insufficient-usable-primes"),
    };
    json!({
        "potential": rep.potential,
        "theta": rep.theta.theta.iter().map(json::rational).collect::<Vec<_>>(),
        "counts": counts,
        "polynomial": rep.polynomial.as_deref().map(render_poly),
        "coefficients": rep.polynomial.as_ref().map(|c| c.iter().map(json::rational).collect::<Vec<_>>()),
        "status": status,
        "euler_number": rep.euler_number.as_ref().map(json::rational),
        "matches_resolved_conifold": rep.matches_resolved_conifold,
    })
}

fn acceptance(job: &JobSpec) -> (i32, Value) {
    let results = run_all(&AcceptanceConfig {
        seed: job.seed,
        samples: job.samples,
    });
    let all = results.iter().all(|c| c.passed);
    let rows: Vec<Value> = results
        .iter()
        .map(|c| {
            json!({
                "id": c.id,
                "title": c.title,
                "passed": c.passed,
                "detail": c.detail,
                "seconds": (c.elapsed.as_secs_f64() * 1000.0).round() / 1000.0,
                "limit_seconds": c.limit.as_secs(),
            })
        })
        .collect();
    (
        if all { EXIT_OK } else { EXIT_FAILED },
        json!({"criteria": rows, "passed": all, "seed": job.seed}),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    const PHI0: &str = r#"[{"cycle": ["a1","b1","a2","b2"], "coeff": "1"},
                           {"cycle": ["a1","b2","a2","b1"], "coeff": "-1"}]"#;

    fn job(command: Command, input: &str) -> JobSpec {
        JobSpec {
            command,
            input: input.into(),
            seed: 1,
            samples: None,
        }
    }

    #[test]
    fn classify_conifold_potential() {
        let (code, out) = run(&job(Command::ClassifyPotential, PHI0));
        assert_eq!(code, EXIT_OK);
        assert_eq!(out["f"], json!(["2", "1", "1/2", "1/4"]));
        assert_eq!(out["stability"], "semistable");
        assert_eq!(out["identities_ok"], true);
    }

    #[test]
    fn hilbert_job() {
        let cmd = Command::Hilbert {
            from: "v0".into(),
            to: "v0".into(),
            max: 4,
            quiver: QuiverChoice::Conifold,
        };
        let (code, out) = run(&job(cmd, PHI0));
        assert_eq!(code, EXIT_OK);
        assert_eq!(out, json!({"dims": [1, 0, 4, 0, 9]}));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run(&job(Command::ClassifyPotential, "[{")).0, EXIT_SCHEMA);
        assert_eq!(run(&job(Command::ClassifyPotential, r#"[{"cycle": ["a1"], "coeff": "1"}]"#)).0, EXIT_SCHEMA);
        let degenerate = r#"[{"cycle": ["a1","b1","a1","b1"], "coeff": "1"}]"#;
        let (code, out) = run(&job(Command::MapPotential, degenerate));
        assert_eq!(code, EXIT_DOMAIN);
        assert_eq!(out["error"]["variant"], "Unstable");
    }

    #[test]
    fn map_potential_round_trips_as_a_tensor() {
        let (_, out) = run(&job(Command::MapPotential, PHI0));
        let (code, cls) = run(&job(Command::ClassifyQuintuple, &out.to_string()));
        assert_eq!(code, EXIT_OK);
        assert_eq!(cls["stability"], "stable");
        assert_eq!(cls["geometric"], true);
    }
}
