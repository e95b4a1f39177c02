//! Self-contained JSON record of a Groebner computation for a ladder, and
//! its independent re-verification.

use serde::{Deserialize, Serialize};

use super::{buchberger, codim_of_basis, dimension, generators, is_groebner_basis, GbBudget};
use crate::error::Result;
use crate::ladder::{cells, height_formula, validate, LadderSpec};
use crate::polyring::{parse_polynomial, Field, Polynomial, Ring, TermOrder};

pub const CERTIFICATE_KIND: &str = "groebner-certificate";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Certificate {
    pub kind: String,
    pub spec: LadderSpec,
    pub field: String,
    pub order: String,
    pub variables: Vec<String>,
    pub generators: Vec<String>,
    pub groebner_basis: Vec<String>,
    pub dimension: usize,
    pub codimension: usize,
    pub height_formula: usize,
}

/// Outcome of [`verify_certificate`]; empty `problems` means verified.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CertificateCheck {
    pub problems: Vec<String>,
}

impl CertificateCheck {
    pub fn passed(&self) -> bool {
        self.problems.is_empty()
    }
}

impl Certificate {
    pub fn build(spec: &LadderSpec, ring: Ring, budget: GbBudget) -> Result<Self> {
        validate(spec)?;
        let gens = generators(spec, ring)?;
        let gb = gens.groebner(budget)?;
        let vars = cells(spec).variables();
        let codimension = codim_of_basis(&gb, spec)?;
        Ok(Certificate {
            kind: CERTIFICATE_KIND.into(),
            spec: spec.clone(),
            field: ring.field.to_string(),
            order: ring.order.to_string(),
            variables: vars.iter().map(|v| v.to_string()).collect(),
            generators: gens.polys().iter().map(|p| p.to_string()).collect(),
            groebner_basis: gb.polys().iter().map(|p| p.to_string()).collect(),
            dimension: vars.len() - codimension,
            codimension,
            height_formula: height_formula(spec),
        })
    }

    pub fn ring(&self) -> Result<Ring> {
        Ok(Ring::new(
            self.field.parse::<Field>()?,
            self.order.parse::<TermOrder>()?,
        ))
    }
}

fn parse_all(list: &[String], ring: Ring) -> Result<Vec<Polynomial>> {
    list.iter().map(|s| parse_polynomial(s, ring)).collect()
}

/// Recomputes everything the certificate claims from its spec. Malformed
/// input (bad spec, unparsable polynomial) is an error; wrong claims are
/// reported as problems.
pub fn verify_certificate(cert: &Certificate, budget: GbBudget) -> Result<CertificateCheck> {
    let mut problems = Vec::new();
    if cert.kind != CERTIFICATE_KIND {
        problems.push(format!(
            "kind is {:?}, expected {CERTIFICATE_KIND:?}",
            cert.kind
        ));
    }
    validate(&cert.spec)?;
    let ring = cert.ring()?;
    let recorded_gens = parse_all(&cert.generators, ring)?;
    let recorded_gb = parse_all(&cert.groebner_basis, ring)?;

    let vars = cells(&cert.spec).variables();
    let names: Vec<String> = vars.iter().map(|v| v.to_string()).collect();
    if names != cert.variables {
        problems.push("variable list does not match the ladder".into());
    }

    let expected = buchberger(&generators(&cert.spec, ring)?.polys(), ring, budget)?;
    let from_recorded = buchberger(&recorded_gens, ring, budget)?;
    if from_recorded != expected {
        problems.push("recorded generators do not generate the ladder's ideal".into());
    }
    if recorded_gb != expected.polys() {
        problems.push("recorded Groebner basis is not the reduced basis of the ideal".into());
    }
    if !is_groebner_basis(&recorded_gb) {
        problems.push("recorded Groebner basis fails the S-polynomial criterion".into());
    }

    let dim = dimension(&expected.leading_monomials(), &vars)?;
    if cert.dimension != dim {
        problems.push(format!(
            "dimension {} recorded, {dim} computed",
            cert.dimension
        ));
    }
    if cert.codimension != vars.len() - dim {
        problems.push(format!(
            "codimension {} recorded, {} computed",
            cert.codimension,
            vars.len() - dim
        ));
    }
    let hf = height_formula(&cert.spec);
    if cert.height_formula != hf {
        problems.push(format!(
            "height formula {} recorded, {hf} computed",
            cert.height_formula
        ));
    }
    if hf != vars.len() - dim {
        problems.push(format!(
            "height formula {hf} disagrees with Groebner codimension {}",
            vars.len() - dim
        ));
    }
    Ok(CertificateCheck { problems })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_verifies() {
        let spec = LadderSpec::new(5, &[(1, 5)], &[2]);
        let cert = Certificate::build(&spec, Ring::default(), GbBudget::default()).unwrap();
        assert_eq!(cert.codimension, 3);
        let json = serde_json::to_string(&cert).unwrap();
        let back: Certificate = serde_json::from_str(&json).unwrap();
        assert!(verify_certificate(&back, GbBudget::default())
            .unwrap()
            .passed());
    }

    #[test]
    fn perturbed_generator_detected() {
        let spec = LadderSpec::new(4, &[(1, 4)], &[2]);
        let mut cert = Certificate::build(&spec, Ring::default(), GbBudget::default()).unwrap();
        cert.generators[0] = "x[1,2]*x[3,4] - x[1,3]*x[2,4] - x[1,4]*x[2,3]".into();
        let check = verify_certificate(&cert, GbBudget::default()).unwrap();
        assert!(!check.passed());
    }
}
