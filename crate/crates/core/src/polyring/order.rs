use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use super::monomial::Monomial;
use crate::error::{domain, Error, Result};

/// Monomial order. Variable precedence is the `VarId` order: `x[1,2]` is the
/// largest variable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum TermOrder {
    #[default]
    DegRevLex,
    Lex,
}

impl TermOrder {
    pub fn cmp(self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            TermOrder::Lex => lex(a, b),
            TermOrder::DegRevLex => a.degree().cmp(&b.degree()).then_with(|| revlex(a, b)),
        }
    }
}

// First variable (highest precedence) whose exponent differs decides; the
// larger exponent wins.
fn lex(a: &Monomial, b: &Monomial) -> Ordering {
    let (ea, eb) = (a.exponents(), b.exponents());
    let (mut i, mut j) = (0, 0);
    loop {
        match (ea.get(i), eb.get(j)) {
            (None, None) => return Ordering::Equal,
            (Some(_), None) => return Ordering::Greater,
            (None, Some(_)) => return Ordering::Less,
            (Some(&(va, xa)), Some(&(vb, xb))) => match va.cmp(&vb) {
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
                Ordering::Equal => {
                    if xa != xb {
                        return xa.cmp(&xb);
                    }
                    i += 1;
                    j += 1;
                }
            },
        }
    }
}

// Last variable (lowest precedence) whose exponent differs decides; the
// smaller exponent wins.
fn revlex(a: &Monomial, b: &Monomial) -> Ordering {
    let (ea, eb) = (a.exponents(), b.exponents());
    let (mut i, mut j) = (ea.len(), eb.len());
    loop {
        match (i.checked_sub(1), j.checked_sub(1)) {
            (None, None) => return Ordering::Equal,
            (Some(_), None) => return Ordering::Less,
            (None, Some(_)) => return Ordering::Greater,
            (Some(pi), Some(pj)) => {
                let (va, xa) = ea[pi];
                let (vb, xb) = eb[pj];
                match va.cmp(&vb) {
                    // a has a lower variable that b lacks
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Equal => {
                        if xa != xb {
                            return xb.cmp(&xa);
                        }
                        i = pi;
                        j = pj;
                    }
                }
            }
        }
    }
}

impl fmt::Display for TermOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TermOrder::DegRevLex => write!(f, "degrevlex"),
            TermOrder::Lex => write!(f, "lex"),
        }
    }
}

impl FromStr for TermOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "degrevlex" | "grevlex" => Ok(TermOrder::DegRevLex),
            "lex" => Ok(TermOrder::Lex),
            _ => Err(domain(format!(
                "unknown term order '{s}' (expected degrevlex or lex)"
            ))),
        }
    }
}
